"""Sparse polynomials in x_1..x_N over Q(q,t), and the elementary variable
operators (exchange, q-shift, specialization) the Hecke calculus builds on.

Exponent vectors are tuples of length nvars; no zero coefficients are stored.
Term order for printing/iteration is lexicographic on exponent vectors,
x_1-major, leading monomial first.
"""

from __future__ import annotations

import os

from .qt_field import QtRational, ZERO, ONE

# Operations that can raise the total degree enforce this guard so runaway
# computations fail fast.  MSYM_MAXDEG overrides it.
_DEGREE_GUARD = int(os.environ.get("MSYM_MAXDEG", "12"))


def set_degree_guard(n):
    global _DEGREE_GUARD
    _DEGREE_GUARD = int(n)


def degree_guard():
    return _DEGREE_GUARD


class DegreeGuardError(RuntimeError):
    pass


class MultiPoly:
    """Immutable sparse polynomial over QtRational."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        t = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError("exponent vector length != nvars")
                if c:
                    t[tuple(e)] = c
        self.terms = t

    @classmethod
    def _raw(cls, nvars, terms):
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def one(cls, nvars):
        return cls._raw(nvars, {(0,) * nvars: ONE})

    @classmethod
    def constant(cls, nvars, c):
        if not c:
            return cls.zero(nvars)
        return cls._raw(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars, i):
        """x_i, 1-based."""
        if not 1 <= i <= nvars:
            raise IndexError("variable index out of range")
        e = [0] * nvars
        e[i - 1] = 1
        return cls._raw(nvars, {tuple(e): ONE})

    @classmethod
    def from_exponents(cls, nvars, expvec, coeff=ONE):
        if len(expvec) != nvars:
            raise ValueError("exponent vector length != nvars")
        if not coeff:
            return cls.zero(nvars)
        return cls._raw(nvars, {tuple(expvec): coeff})

    # -- basic structure --------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_components(self):
        """dict degree -> MultiPoly."""
        out = {}
        for e, c in self.terms.items():
            out.setdefault(sum(e), {})[e] = c
        return {d: MultiPoly._raw(self.nvars, t) for d, t in sorted(out.items())}

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    # -- arithmetic --------------------------------------------------------

    def _require_same(self, other):
        if self.nvars != other.nvars:
            raise ValueError("nvars mismatch: %d vs %d" % (self.nvars, other.nvars))

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._require_same(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            prev = out.get(e)
            if prev is None:
                out[e] = c
            else:
                s = prev + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly._raw(self.nvars, out)

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._require_same(other)
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            prev = out.get(e)
            if prev is None:
                out[e] = -c
            else:
                s = prev - c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly._raw(self.nvars, out)

    def __mul__(self, other):
        if isinstance(other, QtRational):
            return self.scale(other)
        if isinstance(other, int):
            return self.scale(QtRational.from_int(other))
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._require_same(other)
        if not self.terms or not other.terms:
            return MultiPoly.zero(self.nvars)
        da = self.total_degree()
        db = other.total_degree()
        if da + db > _DEGREE_GUARD:
            raise DegreeGuardError(
                "product degree %d exceeds guard %d" % (da + db, _DEGREE_GUARD))
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                prev = out.get(e)
                s = ca * cb if prev is None else prev + ca * cb
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MultiPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def scale(self, c):
        if not c or not self.terms:
            return MultiPoly.zero(self.nvars)
        if c.is_one():
            return self
        return MultiPoly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = MultiPoly.one(self.nvars)
        for _ in range(k):
            out = out * self
        return out

    # -- variable operators -------------------------------------------------

    def _check_index(self, i):
        if not 1 <= i <= self.nvars:
            raise IndexError("variable index %d out of range 1..%d" % (i, self.nvars))

    def exchange(self, i, j):
        """Swap x_i and x_j."""
        self._check_index(i)
        self._check_index(j)
        if i == j:
            return self
        i -= 1
        j -= 1
        out = {}
        for e, c in self.terms.items():
            if e[i] == e[j]:
                out[e] = c
            else:
                le = list(e)
                le[i], le[j] = le[j], le[i]
                out[tuple(le)] = c
        return MultiPoly._raw(self.nvars, out)

    def qshift(self, i, power=1):
        """x_i -> q**power * x_i: each term gains q**(power * e_i)."""
        self._check_index(i)
        i -= 1
        out = {}
        for e, c in self.terms.items():
            k = e[i] * power
            out[e] = c * QtRational.monomial(1, k, 0) if k else c
        return MultiPoly._raw(self.nvars, out)

    def set_var_zero(self, i):
        """Set x_i = 0; when i == nvars the result lives in nvars-1 variables."""
        self._check_index(i)
        drop_last = (i == self.nvars)
        i -= 1
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                continue
            out[e[:-1] if drop_last else e] = c
        return MultiPoly._raw(self.nvars - 1 if drop_last else self.nvars, out)

    def drop_var(self, i):
        """Set x_i = 0 and renumber the later variables down by one."""
        self._check_index(i)
        i -= 1
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                continue
            out[e[:i] + e[i + 1:]] = c
        return MultiPoly._raw(self.nvars - 1, out)

    def extend(self, nvars):
        """View in a larger variable set (new trailing variables unused)."""
        if nvars < self.nvars:
            raise ValueError("cannot shrink; use set_var_zero")
        if nvars == self.nvars:
            return self
        pad = (0,) * (nvars - self.nvars)
        return MultiPoly._raw(nvars, {e + pad: c for e, c in self.terms.items()})

    def permute_vars(self, perm):
        """perm is a tuple with perm[k] = image of variable k+1 (1-based)."""
        if sorted(perm) != list(range(1, self.nvars + 1)):
            raise ValueError("not a permutation of 1..N")
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.nvars
            for k, ek in enumerate(e):
                ne[perm[k] - 1] = ek
            out[tuple(ne)] = c
        return MultiPoly._raw(self.nvars, out)

    def coefficient_of(self, expvec):
        if len(expvec) != self.nvars:
            raise ValueError("exponent vector length != nvars")
        return self.terms.get(tuple(expvec), ZERO)

    def map_coeff(self, fn):
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                out[e] = v
        return MultiPoly._raw(self.nvars, out)

    def invert_params(self):
        """Substitute (q,t) -> (1/q, 1/t) in every coefficient."""
        return self.map_coeff(lambda c: c.invert_params())

    def substitute(self, values):
        """Full evaluation: values[i] is a QtRational for x_{i+1}."""
        if len(values) != self.nvars:
            raise ValueError("need one value per variable")
        acc = ZERO
        powcache = [{0: ONE} for _ in range(self.nvars)]
        for e, c in self.terms.items():
            v = c
            for k, ek in enumerate(e):
                if ek:
                    pc = powcache[k]
                    if ek not in pc:
                        p = pc[max(pc)]
                        for j in range(max(pc) + 1, ek + 1):
                            p = p * values[k]
                            pc[j] = p
                    v = v * pc[ek]
            acc = acc + v
        return acc

    # -- printing -----------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        many = len(self.terms) > 1
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                ("x%d" % (k + 1)) if ek == 1 else ("x%d^%d" % (k + 1, ek))
                for k, ek in enumerate(e) if ek)
            cs = str(c)
            if not mono:
                s = "(%s)" % cs if many and (" " in cs or "/" in cs) else cs
            elif c.is_one():
                s = mono
            elif cs == "-1":
                s = "-" + mono
            else:
                if " " in cs or "/" in cs:
                    cs = "(%s)" % cs
                s = cs + "*" + mono
            if not parts:
                parts.append(s)
            elif s.startswith("-"):
                parts.append(" - " + s[1:])
            else:
                parts.append(" + " + s)
        return "".join(parts)

    def __repr__(self):
        return "MultiPoly(%d: %s)" % (self.nvars, self)

    def to_json(self):
        return [{"exponents": list(e), "coeff": str(c)}
                for e, c in self.sorted_terms()]


def poly_arith(f, g, kind):
    """Dispatcher: kind in {'add','sub','mul','scalar_mul'}."""
    if kind == "add":
        return f + g
    if kind == "sub":
        return f - g
    if kind == "mul":
        return f * g
    if kind == "scalar_mul":
        return f.scale(g) if isinstance(g, QtRational) else g.scale(f)
    raise ValueError("unknown arithmetic kind %r" % kind)


def exchange(f, i, j):
    return f.exchange(i, j)


def qshift(f, i):
    return f.qshift(i)


def set_var_zero(f, i):
    return f.set_var_zero(i)


def coefficient_of(f, expvec):
    return f.coefficient_of(expvec)
