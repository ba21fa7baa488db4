"""Standard Yangian modules over gl_n in exact rational arithmetic.

A module is specified by an integer vector nu (one exterior-power degree per
tensor factor, negative degrees meaning the covector variant) and a rational
shift vector mu.  Factor a is the exterior power Lambda^{|nu_a|}(C^n) carrying
the generator matrices

    d >= 0:  T_ij(u) = delta_ij + E_ij / (u - z)
    d <  0:  T_ij(u) = delta_ij - E_ji / (u - z + 1)

with z = mu_a, and the full module multiplies these n x n operator grids
factor by factor (the coproduct sums over all intermediate indices).  All
matrices live over the field of rational functions in u; verification
routines either stay symbolic or sample on integer grids large enough that
agreement is an exact degree-bound certificate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt, lcm
from typing import Optional, Sequence

import numpy as np

from .exact import ONE, Poly, RatFun, linear, q
from .grassmann import perm_apply


class NotEigenvector(ArithmeticError):
    """The distinguished vector failed an eigen identity: implementation bug."""


class RelationViolated(ArithmeticError):
    """A defining-relation sample came out unequal."""


class SampleAtPole(ValueError):
    """A requested sample point sits on a pole of the action."""


class NoCandidateFactorization(ArithmeticError):
    """A characteristic polynomial resisted the product-form eigenvalue list."""


# ------------------------------------------------------------------ ModuleSpec

@dataclass(frozen=True)
class ModuleSpec:
    """Defining data of a standard module: degrees nu and shifts mu."""

    n: int
    m: int
    mu: tuple[Fraction, ...]
    nu: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError("n and m must be positive")
        if len(self.mu) != self.m or len(self.nu) != self.m:
            raise ValueError("mu and nu must have length m")
        object.__setattr__(self, "mu", tuple(q(z) for z in self.mu))
        object.__setattr__(self, "nu", tuple(int(d) for d in self.nu))
        for d in self.nu:
            if abs(d) > self.n:
                raise ValueError(f"|nu_a| = {abs(d)} exceeds n = {self.n}")

    @classmethod
    def make(cls, n: int, mu: Sequence, nu: Sequence[int]) -> "ModuleSpec":
        return cls(n=n, m=len(tuple(nu)), mu=tuple(q(z) for z in mu),
                   nu=tuple(nu))

    @property
    def lam(self) -> tuple[Fraction, ...]:
        return tuple(z + d for z, d in zip(self.mu, self.nu))

    @property
    def eps(self) -> tuple[int, ...]:
        return tuple(1 if d >= 0 else -1 for d in self.nu)

    @property
    def nubar(self) -> tuple[int, ...]:
        """Row degrees of the realization: nu_a, or n + nu_a when negative."""
        return tuple(d if d >= 0 else self.n + d for d in self.nu)

    @property
    def lambar(self) -> tuple[Fraction, ...]:
        return tuple(z + d for z, d in zip(self.mu, self.nubar))

    @property
    def abs_nu(self) -> tuple[int, ...]:
        return tuple(abs(d) for d in self.nu)

    @property
    def factor_dims(self) -> tuple[int, ...]:
        return tuple(comb(self.n, abs(d)) for d in self.nu)

    @property
    def dim(self) -> int:
        out = 1
        for d in self.factor_dims:
            out *= d
        return out

    def permuted(self, sigma: Sequence[int]) -> "ModuleSpec":
        """The module with factors relabeled by sigma (entry a <- sigma^-1(a))."""
        return ModuleSpec(self.n, self.m, perm_apply(sigma, self.mu),
                          perm_apply(sigma, self.nu))

    def denominator_bound(self) -> Poly:
        """Polynomial every action-matrix denominator must divide."""
        out = ONE
        for z in self.mu:
            out = out * linear(z) * linear(z - 1)
        return out


# ------------------------------------------------- one exterior-power factor

def wedge_basis(n: int, k: int) -> list[tuple[int, ...]]:
    """Strictly increasing k-tuples from 1..n in lexicographic order."""
    return list(itertools.combinations(range(1, n + 1), k))


def _wedge_unit(n: int, k: int, i: int, j: int) -> list[list[Fraction]]:
    """Matrix of the gl_n unit E_ij on the wedge basis of Lambda^k(C^n)."""
    basis = wedge_basis(n, k)
    pos = {t: r for r, t in enumerate(basis)}
    size = len(basis)
    mat = [[Fraction(0)] * size for _ in range(size)]
    for c, tup in enumerate(basis):
        if i == j:
            if i in tup:
                mat[c][c] += 1
            continue
        if j not in tup or i in tup:
            continue
        p = tup.index(j)
        rest = tup[:p] + tup[p + 1:]
        p2 = sum(1 for x in rest if x < i)
        new = tuple(sorted(rest + (i,)))
        mat[pos[new]][c] += Fraction(-1) ** (p + p2)
    return mat


@lru_cache(maxsize=None)
def _factor_table(n: int, d: int, z: Fraction
                  ) -> tuple[tuple, Poly]:
    """Numerator grid and common denominator for one factor.

    Returns (grid, den) where grid[i-1][j-1] is a matrix of Poly and the
    factor's T_ij(u) equals grid[i-1][j-1] / den entrywise.
    """
    k = abs(d)
    size = comb(n, k)
    if d == 0:
        ident = tuple(tuple(ONE if r == c else Poly.constant(0)
                            for c in range(size)) for r in range(size))
        zero = tuple(tuple(Poly.constant(0) for _ in range(size))
                     for _ in range(size))
        grid = tuple(tuple(ident if i == j else zero for j in range(n))
                     for i in range(n))
        return grid, ONE
    den = linear(z) if d > 0 else linear(z - 1)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            unit = (_wedge_unit(n, k, i, j) if d > 0
                    else _wedge_unit(n, k, j, i))
            sign = 1 if d > 0 else -1
            mat = tuple(tuple(
                Poly.constant(sign * unit[r][c]) + (den if r == c and i == j
                                                    else Poly.constant(0))
                for c in range(size)) for r in range(size))
            row.append(mat)
        rows.append(tuple(row))
    return tuple(rows), den


def factor_action(n: int, d: int, z, i: int, j: int
                  ) -> tuple[tuple[RatFun, ...], ...]:
    """T_ij(u) of a single exterior-power factor, as a RatFun matrix."""
    if abs(d) > n:
        raise ValueError(f"|d| = {abs(d)} exceeds n = {n}")
    grid, den = _factor_table(n, d, q(z))
    mat = grid[i - 1][j - 1]
    return tuple(tuple(RatFun(entry, den) for entry in row) for row in mat)


# -------------------------------------------------------- full module tables

def _kron_poly(a, b):
    """Kronecker product of two Poly matrices (nested tuples)."""
    ra, rb = len(a), len(b)
    ca, cb = len(a[0]), len(b[0])
    return tuple(tuple(a[r1][c1] * b[r2][c2]
                       for c1 in range(ca) for c2 in range(cb))
                 for r1 in range(ra) for r2 in range(rb))


def _mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(r1, r2)) for r1, r2 in zip(a, b))


@lru_cache(maxsize=32)
def action_table(spec: ModuleSpec) -> tuple[tuple, Poly]:
    """All n^2 generator matrices of the module, over a shared denominator.

    Returns (grid, den): grid[i-1][j-1] is a dim x dim matrix of Poly with
    T_ij(u) = grid[i-1][j-1] / den.  The grid is assembled by the coproduct:
    grids of consecutive factors multiply as block matrices whose entrywise
    product is the Kronecker product, leftmost factor slowest.
    """
    n = spec.n
    grid, den = _factor_table(n, spec.nu[0], spec.mu[0])
    for d, z in zip(spec.nu[1:], spec.mu[1:]):
        g2, d2 = _factor_table(n, d, z)
        new_rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = None
                for k in range(n):
                    term = _kron_poly(grid[i][k], g2[k][j])
                    acc = term if acc is None else _mat_add(acc, term)
                row.append(acc)
            new_rows.append(tuple(row))
        grid = tuple(new_rows)
        den = den * d2
    return grid, den


@dataclass(frozen=True)
class ActionMatrix:
    """One generator matrix T_ij(u) with canonical rational-function entries."""

    i: int
    j: int
    entries: tuple[tuple[RatFun, ...], ...]


def module_action(spec: ModuleSpec, i: int, j: int) -> ActionMatrix:
    """T_ij(u) on the full module; entries canonical, denominators checked."""
    if not (1 <= i <= spec.n and 1 <= j <= spec.n):
        raise ValueError(f"indices ({i}, {j}) out of range 1..{spec.n}")
    grid, den = action_table(spec)
    bound = spec.denominator_bound()
    entries = []
    for row in grid[i - 1][j - 1]:
        out_row = []
        for p in row:
            f = RatFun(p, den)
            if not (bound % f.den).is_zero():
                raise ArithmeticError(
                    f"denominator {f.den} of T_{i}{j} escapes the pole bound")
            if f.num.degree > f.den.degree:
                raise ArithmeticError(
                    f"entry of T_{i}{j} not proper: {f}")
            out_row.append(f)
        entries.append(tuple(out_row))
    return ActionMatrix(i, j, tuple(entries))


# ------------------------------------------------------------- highest vector

@dataclass(frozen=True)
class HighestVector:
    """Coordinates of the distinguished basis vector (single 1, rest 0)."""

    coords: tuple[Fraction, ...]
    index: int

    @property
    def dim(self) -> int:
        return len(self.coords)


def highest_factor_tuple(n: int, d: int) -> tuple[int, ...]:
    """Wedge indices of the distinguished vector of one factor."""
    if d >= 0:
        return tuple(range(1, d + 1))
    return tuple(range(n + d + 1, n + 1))


def highest_vector(spec: ModuleSpec) -> HighestVector:
    idx = 0
    for a in range(spec.m):
        basis = wedge_basis(spec.n, abs(spec.nu[a]))
        pos = basis.index(highest_factor_tuple(spec.n, spec.nu[a]))
        idx = idx * len(basis) + pos
    coords = tuple(Fraction(1) if r == idx else Fraction(0)
                   for r in range(spec.dim))
    return HighestVector(coords, idx)


# ---------------------------------------------------------- eigenvalue series

def eigen_closed(spec: ModuleSpec, i: int) -> RatFun:
    """Closed product form of the i-th diagonal eigenvalue on the vector."""
    num, den = ONE, ONE
    for z, d in zip(spec.mu, spec.nu):
        if d >= i:
            num, den = num * linear(z - 1), den * linear(z)
        if d < i - spec.n:
            num, den = num * linear(z), den * linear(z - 1)
    return RatFun(num, den)


def eigen_series(spec: ModuleSpec, i: int) -> RatFun:
    """Eigenvalue of T_ii(u) on the distinguished vector, fully cross-checked.

    Asserts the vector is annihilated by every strictly-upper T_ij(u), is an
    actual eigenvector of T_ii(u), and that the eigenvalue agrees with the
    closed product form; any mismatch raises NotEigenvector.
    """
    grid, den = action_table(spec)
    hv = highest_vector(spec)
    col = hv.index
    mat = grid[i - 1][i - 1]
    for r in range(spec.dim):
        if r != col and not mat[r][col].is_zero():
            raise NotEigenvector(
                f"T_{i}{i} maps the distinguished vector off itself (row {r})")
    value = RatFun(mat[col][col], den)
    for j in range(i + 1, spec.n + 1):
        upper = grid[i - 1][j - 1]
        for r in range(spec.dim):
            if not upper[r][col].is_zero():
                raise NotEigenvector(
                    f"T_{i}{j} does not annihilate the distinguished vector")
    closed = eigen_closed(spec, i)
    if value != closed:
        raise NotEigenvector(
            f"eigenvalue {value} differs from closed form {closed}")
    return value


# --------------------------------------------------- sampled relation check

def _integer_samples(count: int, forbidden: set[Fraction], start: int,
                     step: int) -> list[int]:
    out = []
    t = start
    while len(out) < count:
        if Fraction(t) not in forbidden:
            out.append(t)
        t += step
    return out


def _numeric_factor(n: int, d: int, z: Fraction, u0: int
                    ) -> tuple[list[list[list[list[int]]]], int]:
    """Integer matrices scale * den(u0) * T_ij(u0) for one factor."""
    grid, den = _factor_table(n, d, z)
    scale = z.denominator

    def as_int(fr: Fraction) -> int:
        if fr.denominator != 1:
            raise SampleAtPole(f"non-integral cleared sample value {fr}")
        return fr.numerator

    out = [[[[as_int(p(u0) * scale) for p in row] for row in grid[i][j]]
            for j in range(n)] for i in range(n)]
    return out, scale


def _numeric_action(spec: ModuleSpec, u0: int) -> tuple[np.ndarray, int]:
    """(n, n, dim, dim) integer array S = scale * den(u0) * T(u0), plus bound.

    Uses int64 when a conservative magnitude bound permits, exact Python
    integers otherwise.  Returns (array, proven entry bound).
    """
    n = spec.n
    mats, bound = None, 1
    for d, z in zip(spec.nu, spec.mu):
        fac, _ = _numeric_factor(n, d, z, u0)
        fb = max((abs(v) for blk in fac for row2 in blk for row in row2
                  for v in row), default=0)
        arr = np.array(fac, dtype=object)
        if mats is None:
            mats, bound = arr, fb
        else:
            mats = np.einsum("ikab,kjcd->ijacbd", mats, arr).reshape(
                n, n, mats.shape[2] * arr.shape[2], mats.shape[3] * arr.shape[3])
            bound = n * bound * fb
    return mats, bound


@dataclass(frozen=True)
class RttReport:
    spec: ModuleSpec
    pairs: int
    degree_bound: int
    passed: bool


def rtt_check(spec: ModuleSpec, samples: Optional[int] = None) -> RttReport:
    """Certify (u-v)[T_ij(u), T_kl(v)] = T_kj(u)T_il(v) - T_kj(v)T_il(u).

    Both sides, cleared of all denominators, are bivariate polynomials of
    degree at most 4m + 2 in each variable, so agreement on an integer grid
    with more than 4m + 2 distinct values per axis (off the poles) is an
    exact proof.  Raises RelationViolated on the first failing sample.
    """
    need = 4 * spec.m + 3
    if samples is None:
        samples = need * need
    if samples <= 2 * (4 * spec.m + 2):
        raise ValueError(f"need more than {2 * (4 * spec.m + 2)} samples")
    per_axis = max(need, isqrt(samples - 1) + 1)
    poles = {z for z in spec.mu} | {z - 1 for z in spec.mu}
    us = _integer_samples(per_axis, poles, 1, 1)
    vs = _integer_samples(per_axis, poles, -1, -1)

    n, dim = spec.n, spec.dim
    for u0 in us:
        X, bx = _numeric_action(spec, u0)
        for v0 in vs:
            Y, by = _numeric_action(spec, v0)
            worst = 2 * abs(u0 - v0) * dim * bx * by
            dtype = np.int64 if worst < 2 ** 62 else object
            Xd, Yd = X.astype(dtype), Y.astype(dtype)
            P = np.einsum("abij,cdjk->abcdik", Xd, Yd)
            Q = np.einsum("abij,cdjk->abcdik", Yd, Xd)
            lhs = (u0 - v0) * (P - Q.transpose(2, 3, 0, 1, 4, 5))
            rhs = (P.transpose(2, 1, 0, 3, 4, 5)
                   - Q.transpose(2, 1, 0, 3, 4, 5))
            if not (lhs == rhs).all():
                bad = next(zip(*np.nonzero(lhs != rhs)))
                i, j, k, l = (int(b) + 1 for b in bad[:4])
                raise RelationViolated(
                    f"defining relation fails at (i,j,k,l)=({i},{j},{k},{l}),"
                    f" u={u0}, v={v0} on {spec}")
    return RttReport(spec, len(us) * len(vs), 4 * spec.m + 2, True)


# ----------------------------------------- product-form eigenvalue spectrum

# Bivariate polynomials for the characteristic-polynomial elimination:
# u-polynomials are plain int lists (low-to-high, no trailing zeros) and
# t-polynomials are lists of those.  Everything is cleared to integers up
# front so the inner loops never touch Fraction or gcd reduction.

def _iu_trim(a: list[int]) -> list[int]:
    while a and not a[-1]:
        a.pop()
    return a


def _iu_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _iu_trim(out)


def _iu_add(a: list[int], b: list[int]) -> list[int]:
    size = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
           for i in range(size)]
    return _iu_trim(out)


def _iu_sub(a: list[int], b: list[int]) -> list[int]:
    size = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
           for i in range(size)]
    return _iu_trim(out)


def _iu_div(a: list[int], b: list[int]) -> list[int]:
    """Exact division in Z[u]; the quotient is promised to be integral."""
    if not a:
        return []
    rem = list(a)
    out = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(out) - 1, -1, -1):
        c, frac = divmod(rem[k + len(b) - 1], lead)
        if frac:
            raise ArithmeticError("inexact division in characteristic"
                                  " polynomial")
        out[k] = c
        if c:
            for i, y in enumerate(b):
                rem[k + i] -= c * y
    if any(rem[: len(b) - 1]):
        raise ArithmeticError("inexact division in characteristic polynomial")
    return _iu_trim(out)


def _it_mul(a, b):
    out = [[] for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = _iu_add(out[i + j], _iu_mul(x, y))
    return out


def _it_sub(a, b):
    size = max(len(a), len(b))
    out = [_iu_sub(a[i] if i < len(a) else [], b[i] if i < len(b) else [])
           for i in range(size)]
    while len(out) > 1 and not out[-1]:
        out.pop()
    return out


def _it_div(a, b):
    """Exact division of t-polynomials with Z[u] coefficients."""
    if not any(a):
        return [[]]
    if len(b) == 1:
        return [_iu_div(x, b[0]) if x else [] for x in a]
    a = list(a)
    out = [[] for _ in range(len(a) - len(b) + 1)]
    for k in range(len(out) - 1, -1, -1):
        c = _iu_div(a[k + len(b) - 1], b[-1])
        out[k] = c
        if c:
            for i, y in enumerate(b):
                a[k + i] = _iu_sub(a[k + i], _iu_mul(c, y))
    if any(a[i] for i in range(len(b) - 1)):
        raise ArithmeticError("inexact division in characteristic polynomial")
    return out


def _char_poly_in_t(mat, den: Poly, dim: int) -> list[RatFun]:
    """det(t - mat/den) via fraction-free elimination, cleared to Z[u][t].

    The matrix t*den - mat, scaled by the common denominator of all
    coefficients, has integer bivariate entries; the elimination divides
    exactly by the previous pivot at every step, and the final entry is
    the characteristic polynomial times (scale*den)^dim.
    """
    scale = 1
    for row in mat:
        for p in row:
            for c in p.coeffs:
                scale = lcm(scale, c.denominator)
    for c in den.coeffs:
        scale = lcm(scale, c.denominator)

    def cleared(p: Poly, s: int) -> list[int]:
        return _iu_trim([int(c * s) for c in p.coeffs])

    dpoly = cleared(den, scale)
    M = [[[cleared(mat[r][c], -scale), dpoly] if r == c
          else [cleared(mat[r][c], -scale)]
          for c in range(dim)] for r in range(dim)]
    prev = [[1]]
    sign = 1
    for k in range(dim - 1):
        if not any(M[k][k]):
            swap = next(r for r in range(k + 1, dim) if any(M[r][k]))
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for r in range(k + 1, dim):
            for c in range(k + 1, dim):
                num = _it_sub(_it_mul(M[k][k], M[r][c]),
                              _it_mul(M[r][k], M[k][c]))
                M[r][c] = _it_div(num, prev)
        prev = M[k][k]
    out = M[dim - 1][dim - 1]
    # undo the clearing: the char poly coefficient at t^k is out_k/(L*den)^dim
    back = Poly.constant(Fraction(sign, scale ** dim))
    for _ in range(dim):
        back = back * den
    return [RatFun(Poly(Fraction(x) for x in coeff), back) for coeff in out]


@dataclass(frozen=True)
class EigenReport:
    spec: ModuleSpec
    dim: int
    spectrum: tuple  # ((subset_pos, subset_neg, multiplicity), ...)
    passed: bool


def eigen_candidates(spec: ModuleSpec) -> dict[RatFun, tuple]:
    """All product-form diagonal eigenvalue candidates, keyed by value."""
    pos = [a for a in range(spec.m) if spec.nu[a] >= 0]
    neg = [a for a in range(spec.m) if spec.nu[a] < 0]
    cands: dict[RatFun, tuple] = {}
    for ksub in range(len(pos) + 1):
        for I in itertools.combinations(pos, ksub):
            gi_num, gi_den = ONE, ONE
            for a in I:
                gi_num, gi_den = gi_num * linear(spec.mu[a] - 1), gi_den * linear(spec.mu[a])
            for lsub in range(len(neg) + 1):
                for J in itertools.combinations(neg, lsub):
                    num, den = gi_num, gi_den
                    for a in J:
                        num, den = num * linear(spec.mu[a]), den * linear(spec.mu[a] - 1)
                    g = RatFun(num, den)
                    cands.setdefault(g, (I, J))
    return cands


def eigenform_check(spec: ModuleSpec) -> EigenReport:
    """Verify every T_ii(u) has spectrum drawn from the product-form list.

    Computes the characteristic polynomial of each diagonal generator matrix
    over the rational-function field and deflates it by candidate roots
    g = prod_{a in I} (u-mu_a+1)/(u-mu_a) * prod_{a in J} (u-mu_a)/(u-mu_a+1);
    raises NoCandidateFactorization if any factor refuses to split.
    """
    if spec.dim > 64:
        raise ValueError("spectrum check is limited to dimension <= 64")
    grid, den = action_table(spec)
    cands = eigen_candidates(spec)
    spectra = []
    for i in range(spec.n):
        char = _char_poly_in_t(grid[i][i], den, spec.dim)
        counts = []
        for g, label in sorted(cands.items(), key=lambda kv: str(kv[0])):
            mult = 0
            while len(char) > 1:
                val = char[-1]
                for c in reversed(char[:-1]):
                    val = val * g + c
                if not val.is_zero():
                    break
                # synthetic division by (t - g)
                out = [None] * (len(char) - 1)
                carry = char[-1]
                for k in range(len(char) - 2, -1, -1):
                    out[k] = carry
                    carry = char[k] + carry * g
                char = out
                mult += 1
            if mult:
                counts.append((label[0], label[1], mult))
        if len(char) > 1:
            raise NoCandidateFactorization(
                f"T_{i + 1}{i + 1} spectrum does not split into product forms"
                f" (degree {len(char) - 1} left) on {spec}")
        spectra.append(tuple(counts))
    if any(s != spectra[0] for s in spectra[1:]):
        raise NoCandidateFactorization(
            f"diagonal spectra differ between indices on {spec}")
    return EigenReport(spec, spec.dim, tuple(spectra), True)
