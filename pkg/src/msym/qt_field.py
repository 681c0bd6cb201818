"""Exact arithmetic in the field Q(q,t).

Scalars are reduced fractions of bivariate integer polynomials.  A polynomial
is stored sparsely as a dict mapping (q_exponent, t_exponent) to a nonzero
arbitrary-precision integer; exponents are never negative.  Negative powers of
q or t (needed for q**-1, t**-1 substitutions) are expressed by clearing the
monomial into the denominator.

Canonical form of a fraction num/den:
  * gcd(num, den) = 1 in Z[q,t] (including integer content),
  * the coefficient of the lexicographically smallest exponent pair of den
    (q-major, then t) is positive.
Equality and hashing rely on this canonical form being unique.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

# ---------------------------------------------------------------------------
# raw polynomial dicts {(qexp, texp): int}
# ---------------------------------------------------------------------------

_PROBE_PRIME = 2147483647  # prime; used for modular gcd-degree probes
_probe_rng = random.Random(0x9d2c5680)


def _padd(a, b):
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _pneg(a):
    return {e: -c for e, c in a.items()}


def _psub(a, b):
    if not b:
        return dict(a)
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) - c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _pmul(a, b):
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    if len(a) == 1:
        ((ea, eb), c), = a.items()
        if c == 1 and ea == 0 and eb == 0:
            return dict(b)
        return {(ea + e0, eb + e1): c * d for (e0, e1), d in b.items()}
    out = {}
    for (a1, a2), c in a.items():
        for (b1, b2), d in b.items():
            e = (a1 + b1, a2 + b2)
            s = out.get(e, 0) + c * d
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def _pscale(a, c):
    if c == 0:
        return {}
    if c == 1:
        return dict(a)
    return {e: c * v for e, v in a.items()}


def _pshift(a, dq, dt):
    if dq == 0 and dt == 0:
        return dict(a)
    return {(e0 + dq, e1 + dt): c for (e0, e1), c in a.items()}


def _pcontent_int(a):
    g = 0
    for c in a.values():
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def _pdiv_int(a, n):
    if n == 1:
        return dict(a)
    return {e: c // n for e, c in a.items()}


def _pdivexact(a, b):
    """Exact division in Z[q,t]; raises ArithmeticError if not exact."""
    if not a:
        return {}
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lb = max(b)
    lcb = b[lb]
    if len(b) == 1:
        out = {}
        for (e0, e1), c in a.items():
            if e0 < lb[0] or e1 < lb[1] or c % lcb:
                raise ArithmeticError("inexact polynomial division")
            out[(e0 - lb[0], e1 - lb[1])] = c // lcb
        return out
    quot = {}
    rem = dict(a)
    while rem:
        lr = max(rem)
        de = (lr[0] - lb[0], lr[1] - lb[1])
        c, r = divmod(rem[lr], lcb)
        if de[0] < 0 or de[1] < 0 or r:
            raise ArithmeticError("inexact polynomial division")
        quot[de] = c
        for (b0, b1), d in b.items():
            e = (b0 + de[0], b1 + de[1])
            s = rem.get(e, 0) - c * d
            if s:
                rem[e] = s
            else:
                rem.pop(e, None)
    return quot


def _p_eval(a, q0, t0):
    acc = Fraction(0)
    for (e0, e1), c in a.items():
        acc += c * q0 ** e0 * t0 ** e1
    return acc


# -- univariate helpers (dicts {exp: int}) ----------------------------------

def _ucontent(u):
    g = 0
    for c in u.values():
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def _umul(u, v):
    out = {}
    for e, c in u.items():
        for f, d in v.items():
            k = e + f
            s = out.get(k, 0) + c * d
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def _uscale(u, c):
    return {e: c * v for e, v in u.items()} if c != 1 else dict(u)


def _usub(u, v):
    out = dict(u)
    for e, c in v.items():
        s = out.get(e, 0) - c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _udivexact(u, v):
    """Exact division of univariate integer polynomials."""
    if not u:
        return {}
    dv = max(v)
    lv = v[dv]
    out = {}
    rem = dict(u)
    while rem:
        dr = max(rem)
        c, r = divmod(rem[dr], lv)
        if dr < dv or r:
            raise ArithmeticError("inexact univariate division")
        out[dr - dv] = c
        for e, d in v.items():
            k = e + dr - dv
            s = rem.get(k, 0) - c * d
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return out


def _ugcd_modp_deg(u, v):
    """Degree of gcd of the images of u, v in GF(p)[x]; None if a leading
    coefficient vanishes mod p."""
    p = _PROBE_PRIME

    def tolist(w):
        d = max(w)
        if w[d] % p == 0:
            return None
        out = [0] * (d + 1)
        for e, c in w.items():
            out[e] = c % p
        return out

    a, b = tolist(u), tolist(v)
    if a is None or b is None:
        return None
    while b and any(b):
        while b and b[-1] == 0:
            b.pop()
        if not b:
            break
        if len(a) < len(b):
            a, b = b, a
            continue
        inv = pow(b[-1], p - 2, p)
        shift = len(a) - len(b)
        c = a[-1] * inv % p
        for i in range(len(b)):
            a[i + shift] = (a[i + shift] - c * b[i]) % p
        a.pop()
        while a and a[-1] == 0:
            a.pop()
        a, b = b, a
    return len(a) - 1 if a else 0


def _ugcd(u, v):
    """gcd in Z[x] with positive content, via primitive PRS."""
    if not u:
        return dict(v) if _ucontent(v) >= 0 else _uscale(v, -1)
    if not v:
        return dict(u)
    mu, mv = min(u), min(v)
    mono = min(mu, mv)
    u0 = {e - mu: c for e, c in u.items()}
    v0 = {e - mv: c for e, c in v.items()}
    cu, cv = _ucontent(u0), _ucontent(v0)
    c = math.gcd(cu, cv)
    u0 = _udivexact(u0, {0: cu})
    v0 = _udivexact(v0, {0: cv})
    if u0 == v0:
        g = u0
    elif max(u0) == 0 or max(v0) == 0:
        g = {0: 1}
    elif _ugcd_modp_deg(u0, v0) == 0:
        g = {0: 1}
    else:
        a, b = (u0, v0) if max(u0) >= max(v0) else (v0, u0)
        while b:
            # pseudo-remainder of a by b, then primitive part
            r = dict(a)
            db = max(b)
            lb = b[db]
            while r and max(r) >= db:
                dr = max(r)
                lr = r[dr]
                r = _usub(_uscale(r, lb), _umul({dr - db: lr}, b))
            if r:
                cr = _ucontent(r)
                r = _udivexact(r, {0: cr})
            a, b = b, r
        g = a
    if g[max(g)] < 0:
        g = _uscale(g, -1)
    out = {e + mono: d * c for e, d in g.items()}
    return out


# -- bivariate gcd -----------------------------------------------------------

def _to_q_list(a):
    """dict {(q,t):c} -> list over q-degree of t-dicts."""
    dq = max(e[0] for e in a)
    out = [dict() for _ in range(dq + 1)]
    for (e0, e1), c in a.items():
        out[e0][e1] = c
    return out


def _from_q_list(lst):
    out = {}
    for e0, u in enumerate(lst):
        for e1, c in u.items():
            out[(e0, e1)] = c
    return out


def _qlist_content(lst):
    """gcd over Z[t] of the q-coefficients."""
    g = {}
    for u in lst:
        if u:
            g = _ugcd(g, u)
            if g == {0: 1}:
                return g
    return g


def _qlist_divexact(lst, u):
    return [(_udivexact(w, u) if w else {}) for w in lst]


def _qlist_trim(lst):
    while lst and not lst[-1]:
        lst.pop()
    return lst


def _probe_gcd_deg_q(a, b):
    """Sound upper bound on deg_q(gcd(a,b)) via one modular evaluation of t.
    Returns None if the probe was unlucky."""
    p = _PROBE_PRIME
    la = _to_q_list(a)
    lb = _to_q_list(b)
    for _ in range(4):
        t0 = _probe_rng.randrange(2, 1 << 30)
        ua = {e: sum(c * pow(t0, e1, p) for e1, c in la[e].items()) % p
              for e in range(len(la)) if la[e]}
        ub = {e: sum(c * pow(t0, e1, p) for e1, c in lb[e].items()) % p
              for e in range(len(lb)) if lb[e]}
        if ua.get(len(la) - 1, 0) == 0 or ub.get(len(lb) - 1, 0) == 0:
            continue
        ua = {e: c for e, c in ua.items() if c}
        ub = {e: c for e, c in ub.items() if c}
        if not ua or not ub:
            continue
        d = _ugcd_modp_deg(ua, ub)
        if d is not None:
            return d
    return None


def _swap_qt(a):
    return {(e1, e0): c for (e0, e1), c in a.items()}


def _pseudo_rem_q(la, lb):
    """Pseudo-remainder of la by lb, both q-lists of Z[t] dicts, deg la >= deg lb."""
    r = [dict(u) for u in la]
    db = len(lb) - 1
    lcb = lb[db]
    _qlist_trim(r)
    while r and len(r) - 1 >= db:
        dr = len(r) - 1
        lcr = r[dr]
        shift = dr - db
        nr = [_umul(u, lcb) for u in r[:dr]]
        for i in range(db):
            nr[i + shift] = _usub(nr[i + shift], _umul(lb[i], lcr))
        r = _qlist_trim(nr)
    return r


def _prs_gcd_q(a, b):
    """Primitive PRS in q over Z[t]; inputs nonconstant in q."""
    la, lb = _to_q_list(a), _to_q_list(b)
    conta, contb = _qlist_content(la), _qlist_content(lb)
    cont = _ugcd(conta, contb)
    la = _qlist_divexact(la, conta)
    lb = _qlist_divexact(lb, contb)
    if len(la) < len(lb):
        la, lb = lb, la
    while lb:
        r = _pseudo_rem_q(la, lb)
        if r:
            cr = _qlist_content(r)
            if cr != {0: 1}:
                r = _qlist_divexact(r, cr)
        la, lb = lb, r
    g = _from_q_list(la)
    return _pmul(g, {(0, e): c for e, c in cont.items()})


def _pgcd(a, b):
    """gcd in Z[q,t], normalized so its smallest (lex, q-major) term is positive."""
    if not a:
        g = dict(b)
    elif not b:
        g = dict(a)
    else:
        amq = min(e[0] for e in a)
        amt = min(e[1] for e in a)
        bmq = min(e[0] for e in b)
        bmt = min(e[1] for e in b)
        mq, mt = min(amq, bmq), min(amt, bmt)
        a0 = _pshift(a, -amq, -amt)
        b0 = _pshift(b, -bmq, -bmt)
        ca, cb = _pcontent_int(a0), _pcontent_int(b0)
        c = math.gcd(ca, cb)
        a0 = _pdiv_int(a0, ca)
        b0 = _pdiv_int(b0, cb)
        if a0 == b0:
            g = _pscale(a0, c)
        elif len(a0) == 1 or len(b0) == 1:
            g = {(0, 0): c}
        else:
            dq = _probe_gcd_deg_q(a0, b0)
            if dq == 0:
                gq = _ugcd(_qlist_content(_to_q_list(a0)),
                           _qlist_content(_to_q_list(b0)))
                g = _pscale({(0, e): d for e, d in gq.items()}, c)
            else:
                dt = _probe_gcd_deg_q(_swap_qt(a0), _swap_qt(b0))
                if dt == 0:
                    sa, sb = _swap_qt(a0), _swap_qt(b0)
                    gt = _ugcd(_qlist_content(_to_q_list(sa)),
                               _qlist_content(_to_q_list(sb)))
                    g = _pscale({(e, 0): d for e, d in gt.items()}, c)
                else:
                    g = _pscale(_prs_gcd_q(a0, b0), c)
        if not (not a or not b):
            g = _pshift(g, mq, mt)
    if g and g[min(g)] < 0:
        g = _pneg(g)
    return g


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------

def _pterm_str(c, e0, e1):
    mono = []
    if e0 == 1:
        mono.append("q")
    elif e0 > 1:
        mono.append("q^%d" % e0)
    if e1 == 1:
        mono.append("t")
    elif e1 > 1:
        mono.append("t^%d" % e1)
    m = "*".join(mono)
    if not m:
        return str(c)
    if c == 1:
        return m
    if c == -1:
        return "-" + m
    return "%d*%s" % (c, m)


def _p_str(a):
    if not a:
        return "0"
    parts = []
    for e in sorted(a):
        s = _pterm_str(a[e], e[0], e[1])
        if not parts:
            parts.append(s)
        elif s.startswith("-"):
            parts.append(" - " + s[1:])
        else:
            parts.append(" + " + s)
    return "".join(parts)


# ---------------------------------------------------------------------------
# public types
# ---------------------------------------------------------------------------

class QtPoly:
    """Immutable polynomial in Z[q,t]."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for (e0, e1), c in terms.items():
                if c:
                    if e0 < 0 or e1 < 0:
                        raise ValueError("negative exponent in QtPoly")
                    t[(e0, e1)] = c
        self.terms = t
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        p = object.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, QtPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self):
        return _p_str(self.terms)

    def __repr__(self):
        return "QtPoly(%s)" % self

    def degree_q(self):
        return max((e[0] for e in self.terms), default=-1)

    def degree_t(self):
        return max((e[1] for e in self.terms), default=-1)


_ONE_TERMS = {(0, 0): 1}


class QtRational:
    """Canonical reduced element of Q(q,t)."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        n = num.terms if isinstance(num, QtPoly) else dict(num)
        if den is None:
            d = dict(_ONE_TERMS)
        else:
            d = den.terms if isinstance(den, QtPoly) else dict(den)
        if not d:
            raise ZeroDivisionError("zero denominator")
        if not n:
            d = dict(_ONE_TERMS)
        elif d != _ONE_TERMS:
            g = _pgcd(n, d)
            if g != _ONE_TERMS:
                n = _pdivexact(n, g)
                d = _pdivexact(d, g)
        if d[min(d)] < 0:
            n = _pneg(n)
            d = _pneg(d)
        self.num = n
        self.den = d
        self._hash = None

    # -- constructors --------------------------------------------------

    @classmethod
    def _raw(cls, num, den):
        x = object.__new__(cls)
        x.num = num
        x.den = den
        x._hash = None
        return x

    @classmethod
    def from_int(cls, n):
        if n == 0:
            return _ZERO
        return cls._raw({(0, 0): n}, dict(_ONE_TERMS))

    @classmethod
    def monomial(cls, coeff=1, qexp=0, texp=0):
        """coeff * q**qexp * t**texp; negative exponents go to the denominator."""
        if coeff == 0:
            return _ZERO
        nq, nt = max(qexp, 0), max(texp, 0)
        dq, dt = max(-qexp, 0), max(-texp, 0)
        return cls._raw({(nq, nt): coeff}, {(dq, dt): 1})

    @classmethod
    def from_fraction(cls, fr):
        fr = Fraction(fr)
        return cls({(0, 0): fr.numerator}, {(0, 0): fr.denominator})

    # -- predicates ------------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == _ONE_TERMS and self.den == _ONE_TERMS

    def __bool__(self):
        return bool(self.num)

    # -- arithmetic ------------------------------------------------------

    def _add_sub(self, other, sub):
        n1, d1 = self.num, self.den
        n2, d2 = other.num, other.den
        if sub:
            n2 = _pneg(n2)
        if not n1:
            return QtRational._raw(dict(n2), d2)
        if not n2:
            return self
        if d1 == d2:
            t = _padd(n1, n2)
            if not t:
                return _ZERO
            if d1 == _ONE_TERMS:
                return QtRational._raw(t, dict(_ONE_TERMS))
            h = _pgcd(t, d1)
            if h == _ONE_TERMS:
                return QtRational._raw(t, dict(d1))
            return QtRational._raw(_pdivexact(t, h), _pdivexact(d1, h))
        # Henrici: reduce by g = gcd(d1, d2) so growth stays linear
        g = _pgcd(d1, d2)
        if g == _ONE_TERMS:
            t = _padd(_pmul(n1, d2), _pmul(n2, d1))
            if not t:
                return _ZERO
            return QtRational._raw(t, _pmul(d1, d2))
        d1p = _pdivexact(d1, g)
        d2p = _pdivexact(d2, g)
        t = _padd(_pmul(n1, d2p), _pmul(n2, d1p))
        if not t:
            return _ZERO
        h = _pgcd(t, g)
        if h == _ONE_TERMS:
            return QtRational._raw(t, _pmul(d1, d2p))
        return QtRational._raw(_pdivexact(t, h),
                               _pmul(_pdivexact(d1, h), d2p))

    def __add__(self, other):
        if not isinstance(other, QtRational):
            return NotImplemented
        return self._add_sub(other, False)

    def __neg__(self):
        return QtRational._raw(_pneg(self.num), self.den)

    def __sub__(self, other):
        if not isinstance(other, QtRational):
            return NotImplemented
        return self._add_sub(other, True)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0 or not self.num:
                return _ZERO
            return QtRational(_pscale(self.num, other), self.den)
        if not isinstance(other, QtRational):
            return NotImplemented
        if not self.num or not other.num:
            return _ZERO
        if self.den == _ONE_TERMS and other.den == _ONE_TERMS:
            return QtRational._raw(_pmul(self.num, other.num), dict(_ONE_TERMS))
        # cross-reduce; the result is then automatically in lowest terms
        if other.den == _ONE_TERMS:
            n1, d2 = self.num, other.den
        else:
            g1 = _pgcd(self.num, other.den)
            n1 = self.num if g1 == _ONE_TERMS else _pdivexact(self.num, g1)
            d2 = other.den if g1 == _ONE_TERMS else _pdivexact(other.den, g1)
        if self.den == _ONE_TERMS:
            n2, d1 = other.num, self.den
        else:
            g2 = _pgcd(other.num, self.den)
            n2 = other.num if g2 == _ONE_TERMS else _pdivexact(other.num, g2)
            d1 = self.den if g2 == _ONE_TERMS else _pdivexact(self.den, g2)
        num = _pmul(n1, n2)
        den = _pmul(d1, d2)
        if den[min(den)] < 0:
            num, den = _pneg(num), _pneg(den)
        return QtRational._raw(num, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, QtRational):
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero in Q(q,t)")
        if not self.num:
            return _ZERO
        return self * other.inverse()

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(q,t)")
        num, den = self.den, self.num
        if den[min(den)] < 0:
            num, den = _pneg(num), _pneg(den)
        return QtRational._raw(num, den)

    def normalized(self):
        """Re-canonicalize (idempotent on canonical values)."""
        return QtRational(self.num, self.den)

    def invert_params(self):
        """Substitute q -> 1/q and t -> 1/t."""
        if not self.num:
            return _ZERO
        nq = max(e[0] for e in self.num)
        nt = max(e[1] for e in self.num)
        dq = max(e[0] for e in self.den)
        dt = max(e[1] for e in self.den)
        num = {(nq - e0, nt - e1): c for (e0, e1), c in self.num.items()}
        den = {(dq - e0, dt - e1): c for (e0, e1), c in self.den.items()}
        return QtRational(_pshift(num, dq, dt), _pshift(den, nq, nt))

    # -- comparisons, hashing, printing -----------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            if other == 0:
                return not self.num
            return self.den == _ONE_TERMS and self.num == {(0, 0): other}
        if not isinstance(other, QtRational):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.num.items()),
                               frozenset(self.den.items())))
        return self._hash

    def __str__(self):
        if self.den == _ONE_TERMS:
            return _p_str(self.num)
        return "(%s)/(%s)" % (_p_str(self.num), _p_str(self.den))

    def __repr__(self):
        return "QtRational(%s)" % self

    def eval(self, q0, t0):
        """Exact value at a rational point; raises on a pole."""
        q0, t0 = Fraction(q0), Fraction(t0)
        d = _p_eval(self.den, q0, t0)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at (%s, %s)" % (q0, t0))
        return _p_eval(self.num, q0, t0) / d


_ZERO = QtRational._raw({}, dict(_ONE_TERMS))
_ONE = QtRational._raw({(0, 0): 1}, dict(_ONE_TERMS))

ZERO = _ZERO
ONE = _ONE
Q = QtRational._raw({(1, 0): 1}, dict(_ONE_TERMS))
T = QtRational._raw({(0, 1): 1}, dict(_ONE_TERMS))


def qt_arith(lhs, rhs, kind):
    """Field operation dispatcher: kind in {'add','sub','mul','div'}."""
    if kind == "add":
        return lhs + rhs
    if kind == "sub":
        return lhs - rhs
    if kind == "mul":
        return lhs * rhs
    if kind == "div":
        return lhs / rhs
    raise ValueError("unknown arithmetic kind %r" % kind)


def qt_eval(x, q0, t0):
    """Exact rational value of x at (q0, t0)."""
    return x.eval(q0, t0)


def t_power(k):
    return QtRational.monomial(1, 0, k)


def q_power(k):
    return QtRational.monomial(1, k, 0)


def monomial(coeff=1, qexp=0, texp=0):
    return QtRational.monomial(coeff, qexp, texp)


def t_factorial(k, inverse=False):
    """[k]_t! = (1-t)(1-t^2)...(1-t^k) / (1-t)^k, or the same in t**-1."""
    v = T.inverse() if inverse else T
    one = _ONE
    num = _ONE
    den = _ONE
    vp = one
    for j in range(1, k + 1):
        vp = vp * v
        num = num * (one - vp)
        den = den * (one - v)
    return num / den if k else _ONE


def parse_qt(s):
    """Parse the canonical text form back into a QtRational (for tests/CLI)."""
    s = s.strip()
    if s.startswith("(") and ")/(" in s and s.endswith(")"):
        i = s.index(")/(")
        return QtRational(_parse_poly(s[1:i]), _parse_poly(s[i + 3:-1]))
    return QtRational(_parse_poly(s))


def _parse_poly(s):
    s = s.replace(" - ", " +-").replace("- ", "-")
    out = {}
    for chunk in s.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        sign = 1
        if chunk.startswith("-"):
            sign = -1
            chunk = chunk[1:]
        coeff = 1
        e0 = e1 = 0
        for f in chunk.split("*"):
            f = f.strip()
            if not f:
                continue
            if f[0] == "q":
                e0 = int(f[2:]) if "^" in f else 1
            elif f[0] == "t":
                e1 = int(f[2:]) if "^" in f else 1
            else:
                coeff = int(f)
        e = (e0, e1)
        out[e] = out.get(e, 0) + sign * coeff
    return {e: c for e, c in out.items() if c}
