"""The operator calculus on polynomials: Demazure-Lusztig generators T_i and
their inverses, the rotation omega, Cherednik operators Y_i, the raising
operator Phi_q, the eigenoperator D, and the t-symmetrizer.

All operators are pure maps MultiPoly -> MultiPoly.  T_i is computed per
monomial through the closed divided-difference form, so no rational function
in the x variables is ever materialized and every division is exact by
construction.  Window arguments (lo, hi) let the same operators act on a
contiguous block of variables, which the kernel module uses to act on the x
or y alphabet of a two-alphabet polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polyring import MultiPoly
from .qt_field import QtRational, ONE

_T = QtRational.monomial(1, 0, 1)


def _bump(acc, e, v):
    prev = acc.get(e)
    if prev is None:
        acc[e] = v
    else:
        s = prev + v
        if s:
            acc[e] = s
        else:
            del acc[e]


def apply_T(f, i):
    """T_i f = t f + (t x_i - x_{i+1}) (K_{i,i+1} f - f)/(x_i - x_{i+1})."""
    n = f.nvars
    if not 1 <= i <= n - 1:
        raise IndexError("T_%d undefined for %d variables" % (i, n))
    i -= 1
    out = {}
    for e, c in f.terms.items():
        a, b = e[i], e[i + 1]
        _bump(out, e, c * _T)
        if a == b:
            continue
        tc = c * _T
        le = list(e)
        if b > a:
            for k in range(b - a):
                le[i], le[i + 1] = b - k, a + k
                _bump(out, tuple(le), tc)
                le[i], le[i + 1] = b - 1 - k, a + 1 + k
                _bump(out, tuple(le), -c)
        else:
            for k in range(a - b):
                le[i], le[i + 1] = a - k, b + k
                _bump(out, tuple(le), -tc)
                le[i], le[i + 1] = a - 1 - k, b + 1 + k
                _bump(out, tuple(le), c)
    return MultiPoly._raw(n, out)


def apply_Tbar(f, i):
    """Inverse generator: T_i^{-1} = t^{-1} - 1 + t^{-1} T_i."""
    tinv = _T.inverse()
    g = apply_T(f, i).scale(tinv)
    return g + f.scale(tinv - ONE)


def apply_T_word(f, word, offset=0):
    """Apply T_{word[0]+offset} T_{word[1]+offset} ... (rightmost first)."""
    for j in reversed(word):
        f = apply_T(f, j + offset)
    return f


def apply_Tbar_word(f, word, offset=0):
    for j in reversed(word):
        f = apply_Tbar(f, j + offset)
    return f


def apply_omega(f, lo=1, hi=None):
    """omega = K_{hi-1,hi} ... K_{lo,lo+1} tau_lo on the variable window."""
    n = f.nvars
    hi = n if hi is None else hi
    out = {}
    for e, c in f.terms.items():
        k = e[lo - 1]
        ne = e[:lo - 1] + e[lo:hi] + (k,) + e[hi:]
        _bump(out, ne, c * QtRational.monomial(1, k, 0) if k else c)
    return MultiPoly._raw(n, out)


def apply_omega_inv(f, lo=1, hi=None):
    n = f.nvars
    hi = n if hi is None else hi
    out = {}
    for e, c in f.terms.items():
        k = e[hi - 1]
        ne = e[:lo - 1] + (k,) + e[lo - 1:hi - 1] + e[hi:]
        _bump(out, ne, c * QtRational.monomial(1, -k, 0) if k else c)
    return MultiPoly._raw(n, out)


def apply_Y(f, i, lo=1, hi=None):
    """Cherednik operator Y_i = t^{i-n} T_i..T_{n-1} omega Tbar_1..Tbar_{i-1}
    acting on the window (indices relative to the window)."""
    n_all = f.nvars
    hi = n_all if hi is None else hi
    n = hi - lo + 1
    if not 1 <= i <= n:
        raise IndexError("Y_%d undefined on window of size %d" % (i, n))
    off = lo - 1
    for j in range(i - 1, 0, -1):
        f = apply_Tbar(f, j + off)
    f = apply_omega(f, lo, hi)
    for j in range(n - 1, i - 1, -1):
        f = apply_T(f, j + off)
    return f.scale(QtRational.monomial(1, 0, i - n))


def apply_Y_inv(f, i, lo=1, hi=None):
    """Inverse Cherednik operator."""
    n_all = f.nvars
    hi = n_all if hi is None else hi
    n = hi - lo + 1
    if not 1 <= i <= n:
        raise IndexError("Y_%d undefined on window of size %d" % (i, n))
    off = lo - 1
    for j in range(i, n):
        f = apply_Tbar(f, j + off)
    f = apply_omega_inv(f, lo, hi)
    for j in range(1, i):
        f = apply_T(f, j + off)
    return f.scale(QtRational.monomial(1, 0, n - i))


def apply_Phi(f):
    """Raising operator Phi_q = t^{1-N} T_{N-1} ... T_1 x_1."""
    n = f.nvars
    g = f * MultiPoly.variable(n, 1)
    for j in range(1, n):
        g = apply_T(g, j)
    return g.scale(QtRational.monomial(1, 0, 1 - n))


def apply_D(f, m, lo=1, hi=None):
    """D = Y_{m+1} + ... + Y_N - sum_{i=m+1}^N t^{1-i} on the window."""
    n_all = f.nvars
    hi = n_all if hi is None else hi
    n = hi - lo + 1
    if m >= n:
        raise ValueError("D needs m < window size")
    acc = MultiPoly.zero(n_all)
    for i in range(m + 1, n + 1):
        acc = acc + apply_Y(f, i, lo, hi)
    scal = ONE - ONE  # zero
    for i in range(m + 1, n + 1):
        scal = scal + QtRational.monomial(1, 0, 1 - i)
    return acc - f.scale(scal)


def reduced_word(perm):
    """A reduced word for a permutation in one-line notation (1-based)."""
    a = list(perm)
    tail = []
    changed = True
    while changed:
        changed = False
        for i in range(len(a) - 1):
            if a[i] > a[i + 1]:
                a[i], a[i + 1] = a[i + 1], a[i]
                tail.append(i + 1)
                changed = True
                break
    tail.reverse()
    return tail


def longest_word(k):
    """Reduced word of the longest element of S_k: (1)(2 1)(3 2 1)..."""
    word = []
    for j in range(1, k):
        word.extend(range(j, 0, -1))
    return word


def symmetrize_t(f, m, naive=False):
    """S^t_{m+1,N} f = sum over S_{N-m} of T_sigma f (generator indices
    shifted by m).  Default: the recursive one-sided factorization, O((N-m)^2)
    generator applications; naive=True sums all (N-m)! terms (test oracle)."""
    n = f.nvars
    if m > n:
        raise ValueError("m exceeds number of variables")
    if n - m <= 1:
        return f
    if naive:
        import itertools
        acc = MultiPoly.zero(n)
        for sigma in itertools.permutations(range(1, n - m + 1)):
            acc = acc + apply_T_word(f, reduced_word(sigma), offset=m)
        return acc
    g = f
    for top in range(m + 2, n + 1):
        acc = g
        h = g
        for j in range(top - 1, m, -1):
            h = apply_T(h, j)
            acc = acc + h
        g = acc
    return g


def apply_R(f, m, n):
    """R_{m+1,n} = 1 + T_{m+1} + T_{m+1}T_{m+2} + ... + T_{m+1}..T_{n-1}."""
    acc = f
    for j in range(m + 1, n):
        g = f
        for k in range(j, m, -1):
            g = apply_T(g, k)
        acc = acc + g
    return acc


def apply_L(f, m, n):
    """L_{m+1,n} = 1 + T_{m+1} + T_{m+2}T_{m+1} + ... + T_{n-1}..T_{m+1}."""
    acc = f
    h = f
    for j in range(m + 1, n):
        h = apply_T(h, j)
        acc = acc + h
    return acc


def apply_Lprime(f, m, n):
    """L'_{m+1,n} = 1 + T_{n-1} + T_{n-2}T_{n-1} + ... + T_{m+1}..T_{n-1}."""
    acc = f
    h = f
    for j in range(n - 1, m, -1):
        h = apply_T(h, j)
        acc = acc + h
    return acc


@dataclass(frozen=True)
class OperatorContext:
    """Variable count and symmetrization threshold for the operator family."""
    nvars: int
    m: int = 0

    def __post_init__(self):
        if not 0 <= self.m <= self.nvars:
            raise ValueError("need 0 <= m <= nvars")

    def _check(self, f):
        if f.nvars != self.nvars:
            raise ValueError("polynomial has %d variables, context expects %d"
                             % (f.nvars, self.nvars))

    def T(self, i, f):
        self._check(f)
        return apply_T(f, i)

    def Tbar(self, i, f):
        self._check(f)
        return apply_Tbar(f, i)

    def omega(self, f):
        self._check(f)
        return apply_omega(f)

    def Y(self, i, f):
        self._check(f)
        return apply_Y(f, i)

    def Phi(self, f):
        self._check(f)
        return apply_Phi(f)

    def D(self, f):
        self._check(f)
        return apply_D(f, self.m)

    def symmetrize(self, f, naive=False):
        self._check(f)
        return symmetrize_t(f, self.m, naive=naive)
