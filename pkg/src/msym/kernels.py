"""Degree-truncated reproducing kernels over two alphabets, the Cauchy-type
identities, and the Hecke/eigenoperator symmetry checks on kernels.

A BiPoly is a polynomial in x_1..x_nx, y_1..y_ny stored as one MultiPoly on
the concatenated variable list, with truncation by x-degree and y-degree
(every identity here is bihomogeneous, so truncation is sound).  Infinite
products are expanded factor by factor through truncated geometric series;
no closed (a;q)-infinity manipulation is ever needed.
"""

from __future__ import annotations

import itertools

from .qt_field import QtRational, ONE, ZERO
from .polyring import MultiPoly
from .combinatorics import (MPartition, enumerate_mpartitions, inversions,
                            partitions_of, compositions_of)
from .macdonald import msym_P, nonsym_E, hall_littlewood_H
from .structure import z_lambda_qt, norm_formula, powersum
from .hecke_ops import apply_T, apply_Tbar, apply_Y, apply_D, longest_word

_T = QtRational.monomial(1, 0, 1)
_Q = QtRational.monomial(1, 1, 0)


class BiPoly:
    """Polynomial in two alphabets, truncation-aware."""

    __slots__ = ("nx", "ny", "poly")

    def __init__(self, nx, ny, poly=None):
        self.nx = nx
        self.ny = ny
        self.poly = poly if poly is not None else MultiPoly.zero(nx + ny)
        if self.poly.nvars != nx + ny:
            raise ValueError("variable count mismatch")

    @classmethod
    def one(cls, nx, ny):
        return cls(nx, ny, MultiPoly.one(nx + ny))

    @classmethod
    def from_x(cls, f, ny):
        """Embed an nx-variable polynomial as a function of the x alphabet."""
        return cls(f.nvars, ny, f.extend(f.nvars + ny))

    @classmethod
    def from_y(cls, f, nx):
        """Embed an ny-variable polynomial as a function of the y alphabet."""
        pad = (0,) * nx
        terms = {pad + e: c for e, c in f.terms.items()}
        return cls(nx, f.nvars, MultiPoly._raw(nx + f.nvars, terms))

    def __eq__(self, other):
        return (isinstance(other, BiPoly) and self.nx == other.nx
                and self.ny == other.ny and self.poly == other.poly)

    def __add__(self, other):
        return BiPoly(self.nx, self.ny, self.poly + other.poly)

    def __sub__(self, other):
        return BiPoly(self.nx, self.ny, self.poly - other.poly)

    def scale(self, c):
        return BiPoly(self.nx, self.ny, self.poly.scale(c))

    def bidegrees(self):
        nx = self.nx
        return {(sum(e[:nx]), sum(e[nx:])) for e in self.poly.terms}

    def truncate(self, maxdeg):
        nx = self.nx
        terms = {e: c for e, c in self.poly.terms.items()
                 if sum(e[:nx]) <= maxdeg and sum(e[nx:]) <= maxdeg}
        return BiPoly(self.nx, self.ny, MultiPoly._raw(self.poly.nvars, terms))

    def mul(self, other, maxdeg):
        """Product truncated to x-degree <= maxdeg and y-degree <= maxdeg."""
        if self.nx != other.nx or self.ny != other.ny:
            raise ValueError("alphabet mismatch")
        nx = self.nx
        a = [(e, sum(e[:nx]), sum(e[nx:]), c) for e, c in self.poly.terms.items()]
        b = [(e, sum(e[:nx]), sum(e[nx:]), c) for e, c in other.poly.terms.items()]
        out = {}
        for ea, xa, ya, ca in a:
            for eb, xb, yb, cb in b:
                if xa + xb > maxdeg or ya + yb > maxdeg:
                    continue
                e = tuple(u + v for u, v in zip(ea, eb))
                prev = out.get(e)
                s = ca * cb if prev is None else prev + ca * cb
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return BiPoly(self.nx, self.ny, MultiPoly._raw(self.poly.nvars, out))

    def scale_y_block_q(self, upto=None):
        """Substitute y_i -> q y_i for i <= upto (default: all of y)."""
        upto = self.ny if upto is None else upto
        nx = self.nx
        out = {}
        for e, c in self.poly.terms.items():
            k = sum(e[nx:nx + upto])
            out[e] = c * QtRational.monomial(1, k, 0) if k else c
        return BiPoly(self.nx, self.ny, MultiPoly._raw(self.poly.nvars, out))

    def swap_xy(self):
        if self.nx != self.ny:
            raise ValueError("swap needs equal alphabets")
        nx = self.nx
        terms = {e[nx:] + e[:nx]: c for e, c in self.poly.terms.items()}
        return BiPoly(self.nx, self.ny, MultiPoly._raw(self.poly.nvars, terms))

    def map_T_x(self, i):
        return BiPoly(self.nx, self.ny, apply_T(self.poly, i))

    def map_T_y(self, i):
        return BiPoly(self.nx, self.ny, apply_T(self.poly, self.nx + i))

    def __str__(self):
        return str(self.poly)


def _xy_factor(nx, ny, i, j, coeff):
    """1 + coeff * x_i y_j as a BiPoly."""
    e = [0] * (nx + ny)
    e[i - 1] = 1
    e[nx + j - 1] = 1
    terms = {(0,) * (nx + ny): ONE, tuple(e): coeff}
    return BiPoly(nx, ny, MultiPoly(nx + ny, terms))


def _xy_geometric(nx, ny, i, j, coeff, maxdeg):
    """Truncation of 1/(1 - coeff*x_i y_j) = sum_k coeff^k (x_i y_j)^k."""
    terms = {}
    c = ONE
    for k in range(maxdeg + 1):
        e = [0] * (nx + ny)
        e[i - 1] = k
        e[nx + j - 1] = k
        terms[tuple(e)] = c
        c = c * coeff
    return BiPoly(nx, ny, MultiPoly(nx + ny, terms))


def k0_truncated(Nx, Ny, maxdeg):
    """K_0(x,y) = sum_lambda z_lambda(q,t)^{-1} p_lambda(x) p_lambda(y),
    truncated to degree maxdeg."""
    acc = BiPoly(Nx, Ny)
    for d in range(maxdeg + 1):
        for lam in partitions_of(d):
            px = MultiPoly.one(Nx) if not lam else None
            if px is None:
                px = MultiPoly.one(Nx)
                for part in lam:
                    px = px * powersum(part, Nx)
            py = MultiPoly.one(Ny)
            for part in lam:
                py = py * powersum(part, Ny)
            term = BiPoly.from_x(px, Ny).mul(BiPoly.from_y(py, Nx), maxdeg)
            acc = acc + term.scale(z_lambda_qt(lam).inverse())
    return acc


def k0_product_truncated(Nx, Ny, maxdeg):
    """Independent product form of K_0: for each pair (i,j) the factor
    prod_k (1 - t x_i y_j q^k)/(1 - x_i y_j q^k) expands by the q-binomial
    theorem as sum_n z^n prod_{l=1..n} (1 - t q^{l-1})/(1 - q^l)."""
    coeffs = [ONE]
    for n in range(1, maxdeg + 1):
        coeffs.append(coeffs[-1]
                      * (ONE - _T * QtRational.monomial(1, n - 1, 0))
                      / (ONE - QtRational.monomial(1, n, 0)))
    acc = BiPoly.one(Nx, Ny)
    for i in range(1, Nx + 1):
        for j in range(1, Ny + 1):
            terms = {}
            for n in range(maxdeg + 1):
                e = [0] * (Nx + Ny)
                e[i - 1] = n
                e[Nx + j - 1] = n
                terms[tuple(e)] = coeffs[n]
            acc = acc.mul(BiPoly(Nx, Ny, MultiPoly(Nx + Ny, terms)), maxdeg)
    return acc


def _km_bracket(m, Nx, Ny, maxdeg, qinv=True):
    """prod_{i+j<=m}(1 - t c x_i y_j) * prod_{i+j<=m+1} 1/(1 - c x_i y_j)
    with c = 1/q (qinv) or c = 1, truncated."""
    c = QtRational.monomial(1, -1, 0) if qinv else ONE
    acc = BiPoly.one(Nx, Ny)
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if i + j <= m:
                acc = acc.mul(_xy_factor(Nx, Ny, i, j, -(_T * c)), maxdeg)
            if i + j <= m + 1:
                acc = acc.mul(_xy_geometric(Nx, Ny, i, j, c, maxdeg), maxdeg)
    return acc


def _apply_Tx_word(bi, word):
    for i in reversed(word):
        bi = bi.map_T_x(i)
    return bi


def km_pre_truncated(m, Nx, Ny, maxdeg, qinv=True):
    """The un-symmetrized kernel K-bar_m = K_0 * bracket."""
    return k0_truncated(Nx, Ny, maxdeg).mul(
        _km_bracket(m, Nx, Ny, maxdeg, qinv=qinv), maxdeg)


def km_truncated(m, Nx, Ny, maxdeg):
    """K_m = t^{-binom(m,2)} K_0(x,y) T^{(x)}_{w_m}[bracket], truncated."""
    if Nx < m or Ny < m:
        raise ValueError("alphabets must have at least m letters")
    bracket = _apply_Tx_word(_km_bracket(m, Nx, Ny, maxdeg), longest_word(m))
    out = k0_truncated(Nx, Ny, maxdeg).mul(bracket, maxdeg)
    return out.scale(QtRational.monomial(1, 0, -(m * (m - 1) // 2)))


def km_sum_truncated(m, N, maxdeg):
    """sum_Lambda b_Lambda P_Lambda(x) P_Lambda(y) with
    b_Lambda = 1/<P_Lambda, P_Lambda>_m, both alphabets of size N."""
    acc = BiPoly(N, N)
    for d in range(maxdeg + 1):
        for lab in enumerate_mpartitions(m, d, max_sym_length=N - m):
            p = msym_P(lab, N).poly
            term = BiPoly.from_x(p, N).mul(BiPoly.from_y(p, N), maxdeg)
            acc = acc + term.scale(norm_formula(lab).inverse())
    return acc


def km_expansion_check(m, maxdeg, N=None):
    """K_m equals its P-basis expansion up to the truncation degree."""
    N = m + maxdeg if N is None else N
    return km_truncated(m, N, N, maxdeg) == km_sum_truncated(m, N, maxdeg)


def hl_kernel_check(m, maxdeg):
    """t-symmetrized Hall-Littlewood kernel:
    t^{-binom(m,2)} T^{(x)}_{w_m}[prod(1-t x_i y_j)/prod(1-x_i y_j)]
      = sum_a t^{-Inv(a)} H_a(x;t) H_a(y;t)."""
    lhs = _apply_Tx_word(_km_bracket(m, m, m, maxdeg, qinv=False),
                         longest_word(m))
    lhs = lhs.scale(QtRational.monomial(1, 0, -(m * (m - 1) // 2)))
    rhs = BiPoly(m, m)
    for d in range(maxdeg + 1):
        for a in compositions_of(d, m):
            h = hall_littlewood_H(a).poly
            term = BiPoly.from_x(h, m).mul(BiPoly.from_y(h, m), maxdeg)
            rhs = rhs + term.scale(QtRational.monomial(1, 0, -inversions(a)))
    return lhs == rhs


def _cauchy_lhs(m, Nx, Ny, maxdeg, y_scale_upto):
    """K_0(x, y~) prod_{i<j<=m} (1-t x_i y_j)/(1-x_i y_j)
    * prod_{i<=m} 1/(1-x_i y_i), with y_1..y_upto scaled by q."""
    acc = k0_truncated(Nx, Ny, maxdeg).scale_y_block_q(y_scale_upto)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            acc = acc.mul(_xy_factor(Nx, Ny, i, j, -_T), maxdeg)
            acc = acc.mul(_xy_geometric(Nx, Ny, i, j, ONE, maxdeg), maxdeg)
        acc = acc.mul(_xy_geometric(Nx, Ny, i, i, ONE, maxdeg), maxdeg)
    return acc


def _inv_tilde_product(diagram):
    """prod over squares of (1-q^{a~+1} t^{l~})/(1-q^{a} t^{l+1}); its
    inverse is the Cauchy expansion coefficient."""
    val = ONE
    for cell in diagram.cells():
        val = val * (ONE - QtRational.monomial(1, diagram.arm_tilde(cell) + 1,
                                               diagram.leg_tilde(cell)))
        val = val / (ONE - QtRational.monomial(1, diagram.arm(cell),
                                               diagram.leg(cell) + 1))
    return val


def cauchy_identity_check(m, maxdeg, N=None):
    """K_0(x,y~) prod_{i<j<=m}(1-tx_iy_j)/(1-x_iy_j) prod_i 1/(1-x_iy_i)
      = sum_Lambda a_Lambda P_Lambda(x;q,t) P_Lambda(y;1/q,1/t)."""
    N = m + maxdeg if N is None else N
    lhs = _cauchy_lhs(m, N, N, maxdeg, y_scale_upto=m)
    rhs = BiPoly(N, N)
    for d in range(maxdeg + 1):
        for lab in enumerate_mpartitions(m, d, max_sym_length=N - m):
            p = msym_P(lab, N).poly
            term = BiPoly.from_x(p, N).mul(
                BiPoly.from_y(p.invert_params(), N), maxdeg)
            rhs = rhs + term.scale(_inv_tilde_product(lab).inverse())
    return lhs == rhs


def nonsym_cauchy_check(m, maxdeg):
    """The same identity on alphabets of length m, expanded over the
    non-symmetric Macdonald polynomials E_eta."""
    lhs = _cauchy_lhs(m, m, m, maxdeg, y_scale_upto=m)
    rhs = BiPoly(m, m)
    for d in range(maxdeg + 1):
        for eta in compositions_of(d, m):
            diagram = MPartition(eta, ())
            e = nonsym_E(eta).poly
            term = BiPoly.from_x(e, m).mul(
                BiPoly.from_y(e.invert_params(), m), maxdeg)
            rhs = rhs + term.scale(_inv_tilde_product(diagram).inverse())
    return lhs == rhs


def nonsym_cauchy_variant_check(m, maxdeg):
    """The older two-alphabet kernel
    K_0(x,y) prod_{j<i<=m}(1-x_iy_j)/(1-t x_iy_j) prod_i 1/(1-t x_iy_i)
    expands over the same coefficients a_eta; equivalent to the q,t -> 1/q,1/t
    plus x -> tx rescaling of the primary identity."""
    lhs = k0_truncated(m, m, maxdeg)
    for i in range(1, m + 1):
        for j in range(1, i):
            lhs = lhs.mul(_xy_factor(m, m, i, j, -ONE), maxdeg)
            lhs = lhs.mul(_xy_geometric(m, m, i, j, _T, maxdeg), maxdeg)
        lhs = lhs.mul(_xy_geometric(m, m, i, i, _T, maxdeg), maxdeg)
    rhs = BiPoly(m, m)
    for d in range(maxdeg + 1):
        for eta in compositions_of(d, m):
            diagram = MPartition(eta, ())
            e = nonsym_E(eta).poly
            term = BiPoly.from_x(e, m).mul(
                BiPoly.from_y(e.invert_params(), m), maxdeg)
            rhs = rhs + term.scale(_inv_tilde_product(diagram).inverse())
    return lhs == rhs


def kernel_hecke_symmetry_check(m, maxdeg, N=None):
    """T_i^{(x)} K-bar_m = T_{m-i}^{(y)} K-bar_m for i = 1..m-1."""
    N = m if N is None else N
    kbar = km_pre_truncated(m, N, N, maxdeg)
    for i in range(1, m):
        if kbar.map_T_x(i) != kbar.map_T_y(m - i):
            return False
    return True


def kernel_xy_symmetry_check(m, maxdeg, N=None):
    """K_m(x,y) = K_m(y,x)."""
    N = m + maxdeg if N is None else N
    km = km_truncated(m, N, N, maxdeg)
    return km == km.swap_xy()


def kernel_eigen_symmetry_check(m, maxdeg, N=None):
    """Y_i^{(x)} K_m = Y_i^{(y)} K_m (i <= m) and D^{(x)} K_m = D^{(y)} K_m
    on truncations, at a fixed finite alphabet size."""
    N = m + maxdeg if N is None else N
    km = km_truncated(m, N, N, maxdeg)
    f = km.poly
    for i in range(1, m + 1):
        if apply_Y(f, i, 1, N) != apply_Y(f, i, N + 1, 2 * N):
            return False
    if apply_D(f, m, 1, N) != apply_D(f, m, N + 1, 2 * N):
        return False
    return True
