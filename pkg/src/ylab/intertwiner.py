"""Canonical intertwining operators between standard modules.

The longest symmetric-group element sigma_0 reverses the factor order of a
standard module; a reduced decomposition of sigma_0 yields a normal ordering
of the root pairs (a, b), and each pair contributes one rational series
operator (an X factor on weight lambda-bar when the realization degrees
satisfy nubar_a >= nubar_b, a Y factor on weight mu otherwise).  Conjugating
the ordered product by the Grassmann realization maps and composing with the
row relabeling by sigma_0 produces a constant rational matrix I that
normalizes the distinguished vector and commutes with every generator series.
All of that is verified exactly, never numerically.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .exact import Poly
from .glmops import LinearMap, XY_op, operator_matrix
from .grassmann import (Grassmann, perm_apply, perm_compose, perm_identity,
                        perm_inverse, perm_longest, perm_transposition)
from .yangian import ModuleSpec, action_table, highest_vector, wedge_basis


class NotReduced(ValueError):
    """The letter sequence is not a reduced decomposition of sigma_0."""


class NotDominant(ValueError):
    """An ordering precondition on the weight fails (difference in -1, -2, ...)."""


class WordDependenceViolated(ArithmeticError):
    """Two reduced words produced different operators: implementation bug."""


class IntertwiningViolated(ArithmeticError):
    """I T_ij(u) != T'_ij(u) I for some generator series."""


# -------------------------------------------------------------- reduced words

@dataclass(frozen=True)
class ReducedWord:
    """A reduced decomposition of the order-reversing permutation."""

    m: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(a) for a in self.letters))
        expect = self.m * (self.m - 1) // 2
        if len(self.letters) != expect:
            raise NotReduced(
                f"word length {len(self.letters)} != m(m-1)/2 = {expect}")
        prod = perm_identity(self.m)
        for a in self.letters:
            if not 1 <= a <= self.m - 1:
                raise NotReduced(f"letter {a} out of range 1..{self.m - 1}")
            prod = perm_compose(prod, perm_transposition(self.m, a))
        if prod != perm_longest(self.m):
            raise NotReduced("letters do not multiply to the longest element")


def default_word(m: int) -> ReducedWord:
    """The staircase word (1)(2,1)(3,2,1)...(m-1,...,1)."""
    letters = tuple(a for k in range(1, m) for a in range(k, 0, -1))
    return ReducedWord(m, letters)


@lru_cache(maxsize=None)
def _reduced_words_of(perm: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    m = len(perm)
    if perm == perm_identity(m):
        return ((),)
    out = []
    for a in range(1, m):
        if perm[a - 1] > perm[a]:  # right descent
            shorter = perm_compose(perm, perm_transposition(m, a))
            out.extend(w + (a,) for w in _reduced_words_of(shorter))
    return tuple(out)


def all_reduced_words(m: int) -> list[ReducedWord]:
    """Every reduced decomposition of the longest element (1 for m<=2)."""
    return [ReducedWord(m, w) for w in _reduced_words_of(perm_longest(m))]


# ------------------------------------------------------------- root orderings

@dataclass(frozen=True)
class RootOrdering:
    """A sequence of root pairs (a, b), a < b, each exactly once, normal."""

    m: int
    pairs: tuple[tuple[int, int], ...]


def _check_normal(m: int, pairs: Sequence[tuple[int, int]]) -> None:
    expect = {(a, b) for a in range(1, m) for b in range(a + 1, m + 1)}
    if set(pairs) != expect or len(pairs) != len(expect):
        raise NotReduced("pair list is not the full set of roots")
    where = {p: s for s, p in enumerate(pairs)}
    for p, q in itertools.combinations(pairs, 2):
        merged = None
        if p[1] == q[0]:
            merged = (p[0], q[1])
        elif q[1] == p[0]:
            merged = (q[0], p[1])
        if merged is None:
            continue
        lo, hi = sorted((where[p], where[q]))
        if not lo < where[merged] < hi:
            raise NotReduced(
                f"ordering is not normal: {merged} outside {p}..{q}")


def root_order(word: ReducedWord) -> RootOrdering:
    """Positive roots in the normal order induced by the reduced word.

    The s-th pair is (sigma^-1(a_s), sigma^-1(a_s + 1)) where sigma is the
    product of the letters strictly after position s.
    """
    m = word.m
    suffix = perm_identity(m)
    pairs: list[tuple[int, int]] = []
    for a in reversed(word.letters):
        inv = perm_inverse(suffix)
        pairs.append((inv[a - 1], inv[a]))
        suffix = perm_compose(perm_transposition(m, a), suffix)
    pairs.reverse()
    for a, b in pairs:
        if not a < b:
            raise NotReduced(f"derived pair ({a}, {b}) is not increasing")
    _check_normal(m, pairs)
    return RootOrdering(m, tuple(pairs))


# -------------------------------------------------------- basis index support

def _module_positions(G: Grassmann, spec: ModuleSpec) -> list[int]:
    """Module basis index -> position in the Grassmann weight basis."""
    bases = [wedge_basis(spec.n, k) for k in spec.abs_nu]
    order = {mask: r for r, mask in enumerate(G.basis_of_weight(spec.abs_nu))}
    out = []
    for combo in itertools.product(*bases):
        out.append(order[G.alpha_encode(combo)])
    if sorted(out) != list(range(len(out))):
        raise AssertionError("module basis does not biject with weight basis")
    return out


# ----------------------------------------------------------------- Intertwiner

@dataclass(frozen=True)
class Intertwiner:
    """A constant rational matrix intertwining source and reversed target."""

    spec: ModuleSpec
    target_spec: ModuleSpec
    matrix: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def column(self, c: int) -> tuple[Fraction, ...]:
        return tuple(row[c] for row in self.matrix)

    def compose(self, other: "Intertwiner") -> "Intertwiner":
        """self after other; specs must chain."""
        if other.target_spec != self.spec:
            raise ValueError("intertwiners do not chain")
        mat = _mat_mul(self.matrix, other.matrix)
        return Intertwiner(other.spec, self.target_spec, mat)


def _mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    return tuple(tuple(sum((a[r][k] * b[k][c] for k in range(inner)),
                           Fraction(0)) for c in range(cols))
                 for r in range(rows))


def check_dominant(spec: ModuleSpec) -> None:
    """Raise NotDominant unless lambda-bar avoids differences in -1, -2, ..."""
    lb = spec.lambar
    for a in range(spec.m):
        for b in range(a + 1, spec.m):
            d = lb[a] - lb[b]
            if d.denominator == 1 and d < 0:
                raise NotDominant(
                    f"lambda-bar difference at ({a + 1}, {b + 1}) is {d}")


def _intertwiner_from_map(spec: ModuleSpec, total: LinearMap, sign: int,
                          target: ModuleSpec) -> Intertwiner:
    G = Grassmann(spec.m, spec.n)
    src_pos = _module_positions(G, spec)
    tgt_pos = _module_positions(G, target)
    dim = spec.dim
    mat = tuple(tuple(sign * total.matrix[tgt_pos[r]][src_pos[c]]
                      for c in range(dim)) for r in range(dim))
    out = Intertwiner(spec, target, mat)
    hv_s, hv_t = highest_vector(spec), highest_vector(target)
    col = out.column(hv_s.index)
    if any(col[r] != (1 if r == hv_t.index else 0) for r in range(dim)):
        raise ArithmeticError(
            "construction failed to normalize the distinguished vector")
    return out


def build_I(spec: ModuleSpec, word: Optional[ReducedWord] = None) -> Intertwiner:
    """The canonical operator onto the factor-reversed module.

    Composes one rational series factor per root pair of the normal ordering
    (X on weight lambda-bar when nubar_a >= nubar_b, else Y on weight mu;
    both in the signed variant when any degree is negative), conjugates by
    the realization maps, relabels rows by the reversing permutation, and
    fixes the global sign so the distinguished vector maps to its partner.
    """
    if word is None:
        word = default_word(spec.m)
    if word.m != spec.m:
        raise ValueError(f"word is for m={word.m}, spec has m={spec.m}")
    check_dominant(spec)
    G = Grassmann(spec.m, spec.n)
    weight = spec.abs_nu
    rational = any(d < 0 for d in spec.nu)
    eps = spec.eps if rational else None
    nb, lb, mu = spec.nubar, spec.lambar, spec.mu

    acc = LinearMap.identity(weight, spec.dim)
    for a, b in root_order(word).pairs:
        if nb[a - 1] >= nb[b - 1]:
            factor = XY_op(G, "X", lb, a, b, weight, eps=eps)
        else:
            factor = XY_op(G, "Y", mu, a, b, weight, eps=eps)
        acc = acc.compose(factor)

    sigma0 = perm_longest(spec.m)
    swap = operator_matrix(G, lambda x: G.sym_act(sigma0, x), weight,
                           perm_apply(sigma0, weight))
    total = swap.compose(acc)
    # the sign uses the original signed degrees, not the shifted ones: that
    # is the only choice normalizing the distinguished vector for odd n
    n_exp = sum(spec.nu[a] * spec.nu[b]
                for a in range(spec.m) for b in range(a + 1, spec.m))
    sign = -1 if n_exp % 2 else 1
    return _intertwiner_from_map(spec, total, sign, spec.permuted(sigma0))


# ------------------------------------------------------- elementary operators

def elementary(kind: str, spec: ModuleSpec, a: int) -> Intertwiner:
    """One adjacent-swap operator: kind 'I_a', 'J_a', or 'J_a_prime'.

    These exist in the all-nonnegative-degree case only.  I_a conjugates the
    X series on weight lambda, J_a the Y series on weight mu; J_a_prime is
    the J operator of the swapped module, mapping it back, and inverts I_a.
    """
    if kind not in ("I_a", "J_a", "J_a_prime"):
        raise ValueError(f"unknown elementary kind {kind!r}")
    if any(d < 0 for d in spec.nu):
        raise ValueError("elementary operators require all degrees >= 0")
    if not 1 <= a <= spec.m - 1:
        raise ValueError(f"need 1 <= a <= m-1, got {a}")
    sig = perm_transposition(spec.m, a)
    if kind == "J_a_prime":
        diff = spec.mu[a - 1] - spec.mu[a]
        if diff.denominator == 1 and diff > 0:
            raise NotDominant(
                f"mu difference at ({a}, {a + 1}) is {diff}, in 1, 2, ...")
        return elementary("J_a", spec.permuted(sig), a)
    w = spec.lam if kind == "I_a" else spec.mu
    diff = w[a - 1] - w[a]
    if diff.denominator == 1 and diff < 0:
        raise NotDominant(
            f"weight difference at ({a}, {a + 1}) is {diff}, in -1, -2, ...")
    G = Grassmann(spec.m, spec.n)
    weight = spec.abs_nu
    factor = XY_op(G, "X" if kind == "I_a" else "Y", w, a, a + 1, weight)
    swap = operator_matrix(G, lambda x: G.sym_act(sig, x), weight,
                           perm_apply(sig, weight))
    total = swap.compose(factor)
    target = spec.permuted(sig)
    src_pos = _module_positions(G, spec)
    tgt_pos = _module_positions(G, target)
    dim = spec.dim
    mat = tuple(tuple(total.matrix[tgt_pos[r]][src_pos[c]]
                      for c in range(dim)) for r in range(dim))
    return Intertwiner(spec, target, mat)


def compose_elementary(spec: ModuleSpec,
                       word: Optional[ReducedWord] = None) -> Intertwiner:
    """The bare chain of elementary swaps along the word.

    At each stage the swap uses the I form when the degrees at the swapped
    positions are in weakly decreasing order and the J form otherwise,
    mirroring the branch rule of the one-shot construction.  The chain equals
    the canonical operator times (-1)^N where N is the sum of degree products
    over pairs; see elementary_composition_check.
    """
    if any(d < 0 for d in spec.nu):
        raise ValueError("elementary composition requires all degrees >= 0")
    if word is None:
        word = default_word(spec.m)
    check_dominant(spec)
    suffix = perm_identity(spec.m)
    stages = []
    for a in reversed(word.letters):
        stages.append((a, suffix))
        suffix = perm_compose(perm_transposition(spec.m, a), suffix)
    total: Optional[Intertwiner] = None
    for a, sig in stages:  # rightmost letter first
        current = spec.permuted(sig)
        kind = "I_a" if current.nu[a - 1] >= current.nu[a] else "J_a"
        step = elementary(kind, current, a)
        total = step if total is None else step.compose(total)
    if total is None:  # m == 1
        ident = tuple(tuple(Fraction(1 if r == c else 0)
                            for c in range(spec.dim)) for r in range(spec.dim))
        return Intertwiner(spec, spec, ident)
    return total


def elementary_composition_check(spec: ModuleSpec,
                                 word: Optional[ReducedWord] = None) -> bool:
    """Assert the one-shot operator is (-1)^N times the elementary chain.

    The canonical operator normalizes the distinguished vector, which costs
    the global sign relative to the unnormalized chain of swaps; everything
    else about the two constructions must agree exactly.
    """
    one_shot = build_I(spec, word)
    chain = compose_elementary(spec, word)
    n_exp = sum(spec.nu[a] * spec.nu[b]
                for a in range(spec.m) for b in range(a + 1, spec.m))
    sign = -1 if n_exp % 2 else 1
    expect = tuple(tuple(sign * v for v in row) for row in chain.matrix)
    if one_shot.matrix != expect:
        raise WordDependenceViolated(
            f"elementary chain disagrees with the one-shot operator on {spec}")
    return True


# ------------------------------------------------------------------- checking

@dataclass(frozen=True)
class WordReport:
    spec: ModuleSpec
    words: int
    passed: bool


def word_independence_check(spec: ModuleSpec) -> WordReport:
    """Build the operator from every reduced word and insist they agree."""
    if spec.m > 4:
        raise ValueError("word enumeration is limited to m <= 4")
    words = all_reduced_words(spec.m)
    built = [build_I(spec, w) for w in words]
    first = built[0]
    for w, other in zip(words[1:], built[1:]):
        if other.matrix != first.matrix:
            raise WordDependenceViolated(
                f"word {w.letters} disagrees with {words[0].letters} on {spec}")
    return WordReport(spec, len(words), True)


@dataclass(frozen=True)
class IntertwineReport:
    spec: ModuleSpec
    pairs: int
    passed: bool


def _frac_times_poly_mat(f_mat, p_mat):
    rows, inner = len(f_mat), len(p_mat)
    cols = len(p_mat[0])
    zero = Poly.constant(0)
    out = []
    for r in range(rows):
        row = []
        for c in range(cols):
            acc = zero
            for k in range(inner):
                v = f_mat[r][k]
                if v:
                    acc = acc + p_mat[k][c] * v
            row.append(acc)
        out.append(row)
    return out


def _poly_times_frac_mat(p_mat, f_mat):
    rows, inner = len(p_mat), len(f_mat)
    cols = len(f_mat[0])
    zero = Poly.constant(0)
    out = []
    for r in range(rows):
        row = []
        for c in range(cols):
            acc = zero
            for k in range(inner):
                v = f_mat[k][c]
                if v:
                    acc = acc + p_mat[r][k] * v
            row.append(acc)
        out.append(row)
    return out


def intertwine_check(spec: ModuleSpec, inter: Intertwiner) -> IntertwineReport:
    """Assert I T_ij(u) = T'_ij(u) I symbolically for all n^2 series."""
    src_grid, src_den = action_table(spec)
    tgt_grid, tgt_den = action_table(inter.target_spec)
    n = spec.n
    for i in range(n):
        for j in range(n):
            lhs = _frac_times_poly_mat(inter.matrix, src_grid[i][j])
            rhs = _poly_times_frac_mat(tgt_grid[i][j], inter.matrix)
            for r in range(len(lhs)):
                for c in range(len(lhs[0])):
                    if lhs[r][c] * tgt_den != rhs[r][c] * src_den:
                        raise IntertwiningViolated(
                            f"I does not intertwine T_{i + 1}{j + 1}"
                            f" at entry ({r}, {c}) on {spec}")
    return IntertwineReport(spec, n * n, True)


# -------------------------------------------------------------- image analysis

@dataclass(frozen=True)
class ImageReport:
    spec: ModuleSpec
    rank: int
    image_basis: tuple[tuple[Fraction, ...], ...]
    irreducible: Optional[bool]


def _column_echelon(matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Basis of the column span with pivot rows, echelonized top-down, exact."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    for c in range(cols):
        vec = [matrix[r][c] for r in range(rows)]
        for pv, b in zip(pivots, basis):
            if vec[pv]:
                f = vec[pv]
                vec = [x - f * y for x, y in zip(vec, b)]
        lead = next((r for r in range(rows) if vec[r]), None)
        if lead is None:
            continue
        f = vec[lead]
        vec = [x / f for x in vec]
        basis.append(vec)
        pivots.append(lead)
    # back-substitute so each pivot row is zero in the other basis vectors
    for k in range(len(basis)):
        for kk in range(len(basis)):
            if kk != k and basis[kk][pivots[k]]:
                f = basis[kk][pivots[k]]
                basis[kk] = [x - f * y for x, y in zip(basis[kk], basis[k])]
    return basis, pivots


def laurent_tail_matrices(spec: ModuleSpec, depth: Optional[int] = None):
    """Coefficients of u^-r, r = 1..depth, of every T_ij(u), as matrices.

    Every entry is a proper rational function, so T_ij(u) = delta_ij plus a
    power series in 1/u; the default depth 4m + 2 spans the coefficient space
    of any sequence satisfying the entries' denominator recurrences.
    """
    if depth is None:
        depth = 4 * spec.m + 2
    grid, den = action_table(spec)
    dim, n = spec.dim, spec.n
    dhat = list(reversed(den.coeffs))  # den monic => dhat[0] == 1
    k = len(dhat) - 1
    out = []
    for i in range(n):
        for j in range(n):
            coeffs = [[[Fraction(0)] * dim for _ in range(dim)]
                      for _ in range(depth)]
            nonzero = [False] * depth
            for r in range(dim):
                for c in range(dim):
                    p = grid[i][j][r][c]
                    if p.is_zero():
                        continue
                    phat = [Fraction(0)] * (k + 1)
                    for e, v in enumerate(p.coeffs):
                        phat[k - e] = v
                    series = []
                    for t in range(depth + 1):
                        v = phat[t] if t <= k else Fraction(0)
                        v -= sum(series[s] * dhat[t - s]
                                 for s in range(max(0, t - k), t))
                        series.append(v)
                    # series[0] is the u^0 term (delta_ij); tail starts at u^-1
                    for t in range(1, depth + 1):
                        if series[t]:
                            coeffs[t - 1][r][c] = series[t]
                            nonzero[t - 1] = True
            for t in range(depth):
                if nonzero[t]:
                    out.append(coeffs[t])
    return out


_CLOSURE_PRIMES = (1_000_003, 1_000_033, 1_000_037)


def _closure_dimension_mod_p(ops_int, start: int, r: int, p: int) -> int:
    """Dimension of the invariant closure of basis vector `start` mod p."""
    basis: dict[int, list[int]] = {}  # pivot -> reduced row

    def reduce_add(vec) -> bool:
        vec = [x % p for x in vec]
        for pv, row in basis.items():
            if vec[pv]:
                f = vec[pv]
                vec = [(x - f * y) % p for x, y in zip(vec, row)]
        lead = next((i for i, x in enumerate(vec) if x), None)
        if lead is None:
            return False
        inv = pow(vec[lead], p - 2, p)
        basis[lead] = [(x * inv) % p for x in vec]
        return True

    queue = [[1 if i == start else 0 for i in range(r)]]
    reduce_add(queue[0])
    while queue and len(basis) < r:
        vec = queue.pop()
        for op in ops_int:
            img = [sum(op[rr][cc] * vec[cc] for cc in range(r)) % p
                   for rr in range(r)]
            if reduce_add(img):
                queue.append(img)
    return len(basis)


def _closure_dimension_exact(ops, start: int, r: int) -> int:
    basis: dict[int, list[Fraction]] = {}

    def reduce_add(vec) -> bool:
        vec = list(vec)
        for pv, row in basis.items():
            if vec[pv]:
                f = vec[pv]
                vec = [x - f * y for x, y in zip(vec, row)]
        lead = next((i for i, x in enumerate(vec) if x), None)
        if lead is None:
            return False
        f = vec[lead]
        basis[lead] = [x / f for x in vec]
        return True

    queue = [[Fraction(1 if i == start else 0) for i in range(r)]]
    reduce_add(queue[0])
    while queue and len(basis) < r:
        vec = queue.pop()
        for op in ops:
            img = [sum((op[rr][cc] * vec[cc] for cc in range(r)), Fraction(0))
                   for rr in range(r)]
            if reduce_add(img):
                queue.append(img)
    return len(basis)


def image_analysis(spec: ModuleSpec, inter: Intertwiner) -> ImageReport:
    """Rank, image basis, and the invariant-closure irreducibility verdict.

    The image of an intertwining operator is invariant under the target
    action; invariance is certified exactly, the operators are restricted to
    image coordinates, and the closure of each image basis vector must fill
    the image.  Closures run modulo a large prime first (a full-dimensional
    closure mod p is already exact proof) with an exact rational fallback.
    Dimensions above 512 are reported as not checked (irreducible=None).
    """
    basis, pivots = _column_echelon(inter.matrix)
    r = len(basis)
    image = tuple(tuple(v) for v in basis)
    if r == 0:
        return ImageReport(spec, 0, image, False)
    if len(inter.matrix) > 512:
        return ImageReport(spec, r, image, None)

    tail = laurent_tail_matrices(inter.target_spec)
    dim_t = len(inter.matrix)

    def coords_of(vec) -> Optional[list[Fraction]]:
        co = [vec[pv] for pv in pivots]
        rebuilt = [sum((co[k] * basis[k][i] for k in range(r)), Fraction(0))
                   for i in range(dim_t)]
        return co if rebuilt == list(vec) else None

    restricted = []
    for op in tail:
        cols = []
        for b in basis:
            img = [sum((op[i][j] * b[j] for j in range(dim_t)), Fraction(0))
                   for i in range(dim_t)]
            co = coords_of(img)
            if co is None:
                raise IntertwiningViolated(
                    "image is not invariant under the target action")
            cols.append(co)
        mat = [[cols[c][rr] for c in range(r)] for rr in range(r)]
        if any(any(row) for row in mat):
            restricted.append(mat)

    # de-duplicate operators
    seen = set()
    unique_ops = []
    for mat in restricted:
        key = tuple(tuple(row) for row in mat)
        if key not in seen:
            seen.add(key)
            unique_ops.append(mat)

    int_ops = []  # (denominator lcm, integer-cleared matrix) per operator
    for mat in unique_ops:
        lcm = 1
        for row in mat:
            for x in row:
                lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        int_ops.append((lcm, [[int(x * lcm) for x in row] for row in mat]))

    irreducible = True
    for start in range(r):
        proved = False
        for p in _CLOSURE_PRIMES:
            if any(lcm % p == 0 for lcm, _ in int_ops):
                continue
            ops_p = [m for _, m in int_ops]
            # full closure mod p forces full closure over the rationals
            if _closure_dimension_mod_p(ops_p, start, r, p) == r:
                proved = True
                break
        if not proved and _closure_dimension_exact(unique_ops, start, r) != r:
            irreducible = False
            break
    return ImageReport(spec, r, image, irreducible)
