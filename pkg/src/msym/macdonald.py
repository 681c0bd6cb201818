"""Construction of the non-symmetric Macdonald polynomials E_eta, the
non-symmetric Hall-Littlewood polynomials H_a, the m-symmetric Macdonald
polynomials P_Lambda with their integral form J_Lambda, eigenvalues, the
circle-to-square raising relation, and the q,t-inversion identity.

E_eta is built recursively: swap steps exchange adjacent entries through the
known T_i action, and a degree-raising step feeds the cyclic raising operator
Phi_q.  Every constructed polynomial is monic at x^eta; the optional check
reruns the full Cherednik eigenvalue system.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qt_field import QtRational, ONE, ZERO, t_factorial
from .polyring import MultiPoly
from .combinatorics import (MPartition, circle_rows, inversions, bruhat_less,
                            sort_desc)
from .hecke_ops import (apply_T, apply_Tbar, apply_Tbar_word, apply_Phi,
                        apply_Y, apply_Lprime, symmetrize_t, longest_word)

_T = QtRational.monomial(1, 0, 1)


@dataclass(frozen=True)
class LabeledPoly:
    """A basis element: its label, realization, and basis kind (E/H/P/J)."""
    label: object
    poly: MultiPoly
    basis_kind: str


@dataclass(frozen=True)
class EigenvalueVector:
    """Joint eigenvalues (Y_1..Y_m, D) attached to an m-partition."""
    y_eigs: tuple
    d_eig: QtRational


def eta_bar(eta, i):
    """Eigenvalue of Y_i on E_eta: q^{eta_i} t^{1-r_eta(i)}."""
    r = circle_rows(eta)
    return QtRational.monomial(1, eta[i - 1], 1 - r[i - 1])


_E_CACHE = {}


def _build_E(eta):
    cached = _E_CACHE.get(eta)
    if cached is not None:
        return cached
    n = len(eta)
    stack = [eta]
    while stack:
        cur = stack[-1]
        if cur in _E_CACHE:
            stack.pop()
            continue
        desc = next((i for i in range(n - 1) if cur[i] > cur[i + 1]), None)
        if desc is not None:
            nu = cur[:desc] + (cur[desc + 1], cur[desc]) + cur[desc + 2:]
            ev = _E_CACHE.get(nu)
            if ev is None:
                stack.append(nu)
                continue
            i = desc + 1
            delta = eta_bar(nu, i) / eta_bar(nu, i + 1)
            if delta.is_one():
                raise ArithmeticError(
                    "degenerate spectral gap at %s, i=%d" % (nu, i))
            coeff = (_T - ONE) / (ONE - delta.inverse())
            poly = (apply_T(ev, i) - ev.scale(coeff)).scale(_T.inverse())
            _E_CACHE[cur] = poly
            stack.pop()
        elif any(cur):
            theta = (cur[-1] - 1,) + cur[:-1]
            ev = _E_CACHE.get(theta)
            if ev is None:
                stack.append(theta)
                continue
            r1 = circle_rows(theta)[0]
            poly = apply_Phi(ev).scale(QtRational.monomial(1, 0, n - r1))
            _E_CACHE[cur] = poly
            stack.pop()
        else:
            _E_CACHE[cur] = MultiPoly.one(n)
            stack.pop()
    return _E_CACHE[eta]


def clear_caches():
    _E_CACHE.clear()
    _H_CACHE.clear()
    _P_CACHE.clear()


def check_E(eta, poly):
    """Full certificate: monic at x^eta, Bruhat-triangular, Cherednik
    eigenfunction for every Y_i."""
    n = len(eta)
    if not poly.coefficient_of(eta).is_one():
        raise AssertionError("E_%s is not monic at its leading monomial" % (eta,))
    for nu in poly.terms:
        if nu != eta and not bruhat_less(nu, eta):
            raise AssertionError("E_%s contains x^%s outside the Bruhat ideal"
                                 % (eta, nu))
    for i in range(1, n + 1):
        if apply_Y(poly, i) != poly.scale(eta_bar(eta, i)):
            raise AssertionError("Y_%d eigenvalue check failed for E_%s"
                                 % (i, eta))


def nonsym_E(eta, N=None, check=False):
    """The monic non-symmetric Macdonald polynomial E_eta in len(eta)
    variables."""
    eta = tuple(int(v) for v in eta)
    if any(v < 0 for v in eta):
        raise ValueError("composition entries must be nonnegative")
    if N is not None and N != len(eta):
        raise ValueError("N must equal the number of parts of eta")
    poly = _build_E(eta)
    if check:
        check_E(eta, poly)
    return LabeledPoly(eta, poly, "E")


_H_CACHE = {}


def hall_littlewood_H(a):
    """Non-symmetric Hall-Littlewood polynomial H_a(x_1..x_m; t): x^a for
    dominant a, transported by T_i across descents otherwise."""
    a = tuple(int(v) for v in a)
    if any(v < 0 for v in a):
        raise ValueError("composition entries must be nonnegative")
    cached = _H_CACHE.get(a)
    if cached is not None:
        return LabeledPoly(a, cached, "H")
    m = len(a)
    stack = [a]
    while stack:
        cur = stack[-1]
        if cur in _H_CACHE:
            stack.pop()
            continue
        asc = next((i for i in range(m - 1) if cur[i] < cur[i + 1]), None)
        if asc is None:
            _H_CACHE[cur] = MultiPoly.from_exponents(m, cur)
            stack.pop()
            continue
        b = cur[:asc] + (cur[asc + 1], cur[asc]) + cur[asc + 2:]
        hb = _H_CACHE.get(b)
        if hb is None:
            stack.append(b)
            continue
        _H_CACHE[cur] = apply_T(hb, asc + 1)
        stack.pop()
    return LabeledPoly(a, _H_CACHE[a], "H")


def eta_for(mpart, N):
    """The composition (a_1..a_m, lam_{N-m}, ..., lam_1) fed to the
    symmetrizer (weakly increasing tail, zero-padded)."""
    m = mpart.m
    tail = [0] * (N - m - len(mpart.lam)) + list(reversed(mpart.lam))
    return mpart.a + tuple(tail)


def u_normalization(mpart, N):
    """u_{Lambda,N}(t): the factor making the coefficient of m_Lambda in
    P_Lambda equal to one."""
    m = mpart.m
    k = N - m
    counts = {}
    for part in mpart.lam:
        counts[part] = counts.get(part, 0) + 1
    counts[0] = k - len(mpart.lam)
    u = QtRational.monomial(1, 0, k * (k - 1) // 2)
    for mult in counts.values():
        u = u * t_factorial(mult, inverse=True)
    return u


_P_CACHE = {}


def msym_P(mpart, N):
    """m-symmetric Macdonald polynomial P_Lambda in N variables (zero when
    N < m + length(lambda)); the coefficient of m_Lambda is checked to be 1
    on construction."""
    m = mpart.m
    if N < m:
        raise ValueError("need N >= m")
    if N < m + len(mpart.lam):
        return LabeledPoly(mpart, MultiPoly.zero(N), "P")
    key = (mpart, N)
    poly = _P_CACHE.get(key)
    if poly is None:
        eta = eta_for(mpart, N)
        sym = symmetrize_t(_build_E(eta), m)
        poly = sym.scale(u_normalization(mpart, N).inverse())
        lead = mpart.a + mpart.lam + (0,) * (N - m - len(mpart.lam))
        if not poly.coefficient_of(lead).is_one():
            raise AssertionError(
                "normalization failed: coefficient of m_%s is %s"
                % (mpart, poly.coefficient_of(lead)))
        _P_CACHE[key] = poly
    return LabeledPoly(mpart, poly, "P")


def integral_c(mpart):
    """c_Lambda(q,t) = prod over squares of (1 - q^{a(s)} t^{l(s)+1})."""
    c = ONE
    for cell in mpart.cells():
        c = c * (ONE - QtRational.monomial(1, mpart.arm(cell),
                                           mpart.leg(cell) + 1))
    return c


def integral_J(mpart, N):
    """Integral form J_Lambda = c_Lambda P_Lambda."""
    p = msym_P(mpart, N)
    return LabeledPoly(mpart, p.poly.scale(integral_c(mpart)), "J")


def eigenvalues(mpart):
    """Joint eigenvalues: Y_i for i=1..m and the operator D."""
    y = tuple(QtRational.monomial(1, mpart.a[i - 1], 1 - mpart.circle_row(i))
              for i in range(1, mpart.m + 1))
    d = ZERO
    sizes = mpart.row_sizes()
    for r in range(1, mpart.nrows() + 1):
        if mpart.row_label(r) is None:
            d = d + QtRational.monomial(1, sizes[r - 1], 1 - r)
    for i in range(mpart.m + 1, mpart.m + len(mpart.lam) + 1):
        d = d - QtRational.monomial(1, 0, 1 - i)
    return EigenvalueVector(y, d)


def apply_Psi(f, m):
    """Psi_N = (1-t)(1 + T_{N-1} + T_{N-2}T_{N-1} + ... + T_m..T_{N-1})
    Phi_q, the operator turning the 1-circle of an m-partition into a
    square."""
    if m < 1:
        raise ValueError("the raising relation needs m >= 1")
    g = apply_Lprime(apply_Phi(f), m - 1, f.nvars)
    return g.scale(ONE - _T)


def psi_box_raise(mpart, N):
    """The raised (m-1)-partition Lambda-box and the power of t with
    Psi_N J_Lambda = t^{-#(j>=2: a_j <= a_1)} J_{Lambda-box}."""
    if mpart.m < 1:
        raise ValueError("needs at least one circle")
    a = mpart.a
    boxed = MPartition(a[1:], tuple(sorted(mpart.lam + (a[0] + 1,),
                                           reverse=True)))
    count = sum(1 for j in range(1, mpart.m) if a[j] <= a[0])
    return boxed, QtRational.monomial(1, 0, -count)


def invert_qt(mpart, N, return_sides=False):
    """The q,t -> 1/q,1/t transform identity:
    q^{|a|} t^{Inv(a)} P_Lambda(x; 1/q, 1/t)
      = t^{binom(m,2)} tau_1..tau_m K_{w_m} Tbar_{w_m} P_Lambda(x; q, t).
    Returns the common value (both sides computed exactly)."""
    m = mpart.m
    p = msym_P(mpart, N).poly
    lhs = p.invert_params().scale(
        QtRational.monomial(1, sum(mpart.a), inversions(mpart.a)))
    rhs = apply_Tbar_word(p, longest_word(m))
    if m >= 2:
        perm = tuple(range(m, 0, -1)) + tuple(range(m + 1, N + 1))
        rhs = rhs.permute_vars(perm)
    for i in range(1, m + 1):
        rhs = rhs.qshift(i)
    rhs = rhs.scale(QtRational.monomial(1, 0, m * (m - 1) // 2))
    if return_sides:
        return lhs, rhs
    if lhs != rhs:
        raise AssertionError("q,t-inversion identity failed for %s at N=%d"
                             % (mpart, N))
    return lhs
