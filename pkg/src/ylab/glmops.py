"""Row operators on the Grassmann algebra and the rational operator series.

E_ab = sum_k x_{ak} d/dx_{bk} realizes gl_m on G_{mn}; the signed variant
EE_ab swaps the roles of multiplication and derivation in every row carrying
sign -1 and realizes gl_m again.  On top of these sit the rational series

    1 + sum_{r>=1} (-1)^r B^r A^r / (r! (w_a - w_b + 1)_r)

with (A, B) = (E_ab, E_ba) for kind X and (E_ba, E_ab) for kind Y; the series
truncates exactly at r = n because row degrees live in 0..n.  These maps are
materialized as dense rational matrices on fixed-weight subspaces, which is
the form the intertwiner assembly consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .exact import pochhammer
from .grassmann import Grassmann, GrassmannElt


class ForbiddenWeightDifference(ValueError):
    """w_a - w_b hit {-1, -2, ...}: a series denominator vanishes."""


def E_op(a: int, b: int, x: GrassmannElt) -> GrassmannElt:
    """Apply E_ab = sum_k x_{ak} d_{bk} to x."""
    G = x.algebra
    out = G.zero()
    for k in range(1, G.n + 1):
        out = out + G.var(a, k) * G.derive(b, k, x)
    return out


def EE_op(eps: Sequence[int], a: int, b: int, x: GrassmannElt) -> GrassmannElt:
    """Signed variant: rows with eps = -1 trade multiplication for derivation.

    The summand for column i is q_{ai} p_{bi} where q is multiplication by
    x_{ai} when eps_a = +1 and the derivation d_{ai} when eps_a = -1, while
    p is d_{bi} when eps_b = +1 and multiplication by x_{bi} when eps_b = -1.
    With all signs +1 this is exactly E_op.
    """
    G = x.algebra
    if len(eps) != G.m or any(e not in (1, -1) for e in eps):
        raise ValueError(f"sign vector {eps} is not a length-{G.m} choice of +-1")
    out = G.zero()
    for i in range(1, G.n + 1):
        y = G.derive(b, i, x) if eps[b - 1] == 1 else G.var(b, i) * x
        y = G.var(a, i) * y if eps[a - 1] == 1 else G.derive(a, i, y)
        out = out + y
    return out


@dataclass(frozen=True)
class LinearMap:
    """Dense rational matrix between two enumerated weight bases.

    matrix[r][c] is the coefficient of codomain basis vector r in the image
    of domain basis vector c, so vectors multiply on the right.
    """

    domain: tuple[int, ...]
    codomain: tuple[int, ...]
    matrix: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def identity(cls, nu: Sequence[int], size: int) -> "LinearMap":
        rows = tuple(tuple(Fraction(1) if r == c else Fraction(0)
                           for c in range(size)) for r in range(size))
        return cls(tuple(nu), tuple(nu), rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.matrix), len(self.matrix[0]) if self.matrix else 0)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other (matrix product self @ other)."""
        if other.codomain != self.domain:
            raise ValueError(
                f"cannot compose: inner weights {other.codomain} != {self.domain}")
        rows_a, cols_a = self.shape
        rows_b, cols_b = other.shape
        if cols_a != rows_b:
            raise ValueError("inner matrix dimensions disagree")
        bt = list(zip(*other.matrix)) if other.matrix else []
        prod = tuple(
            tuple(sum((ra[k] * bc[k] for k in range(cols_a)), Fraction(0))
                  for bc in bt)
            for ra in self.matrix)
        return LinearMap(other.domain, self.codomain, prod)

    def apply(self, vec: Sequence[Fraction]) -> list[Fraction]:
        rows, cols = self.shape
        if len(vec) != cols:
            raise ValueError("vector length does not match map domain")
        return [sum((row[c] * vec[c] for c in range(cols)), Fraction(0))
                for row in self.matrix]

    def scale(self, c) -> "LinearMap":
        c = Fraction(c)
        return LinearMap(self.domain, self.codomain,
                         tuple(tuple(c * v for v in row) for row in self.matrix))

    def __add__(self, other: "LinearMap") -> "LinearMap":
        if (self.domain, self.codomain) != (other.domain, other.codomain):
            raise ValueError("cannot add maps with different weight data")
        return LinearMap(self.domain, self.codomain, tuple(
            tuple(x + y for x, y in zip(r1, r2))
            for r1, r2 in zip(self.matrix, other.matrix)))

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return self + other.scale(-1)


def operator_matrix(G: Grassmann,
                    op: Callable[[GrassmannElt], GrassmannElt],
                    domain_nu: Sequence[int],
                    codomain_nu: Optional[Sequence[int]] = None) -> LinearMap:
    """Materialize an operator as a matrix between weight bases.

    The codomain weight defaults to the domain weight.  Every image term must
    land in the declared codomain weight space; anything else raises, which is
    how weight bookkeeping errors surface instead of being silently dropped.
    """
    domain_nu = tuple(domain_nu)
    codomain_nu = domain_nu if codomain_nu is None else tuple(codomain_nu)
    dom = G.basis_of_weight(domain_nu)
    cod = G.basis_of_weight(codomain_nu)
    index = {mask: r for r, mask in enumerate(cod)}
    cols = []
    for mask in dom:
        image = op(GrassmannElt(G, {mask: Fraction(1)}))
        col = [Fraction(0)] * len(cod)
        for mono, c in image.terms.items():
            if mono not in index:
                raise ValueError(
                    f"image monomial of weight {G.weight_of(mono)} escapes the "
                    f"declared codomain weight {codomain_nu}")
            col[index[mono]] = c
        cols.append(col)
    rows = tuple(tuple(cols[c][r] for c in range(len(dom)))
                 for r in range(len(cod)))
    return LinearMap(domain_nu, codomain_nu, rows)


def XY_op(G: Grassmann, kind: str, w: Sequence, a: int, b: int,
          nu: Sequence[int], eps: Optional[Sequence[int]] = None) -> LinearMap:
    """The rational series operator of kind 'X' or 'Y' on the weight-nu space.

    kind X uses (A, B) = (E_ab, E_ba): each term lowers then restores row
    degrees, so the map preserves the weight-nu subspace; kind Y swaps the
    roles.  With eps given, E is replaced by the signed EE throughout.
    Requires w_a - w_b not to be a negative integer (series denominators
    (w_a - w_b + 1)_r must not vanish).
    """
    if not (1 <= a < b <= G.m):
        raise ValueError(f"need 1 <= a < b <= m, got ({a}, {b})")
    if kind not in ("X", "Y"):
        raise ValueError(f"kind must be 'X' or 'Y', got {kind!r}")
    c = Fraction(w[a - 1]) - Fraction(w[b - 1])
    if c.denominator == 1 and c < 0:
        raise ForbiddenWeightDifference(
            f"w_{a} - w_{b} = {c} is a negative integer")

    if eps is None:
        def lower(x): return E_op(a, b, x) if kind == "X" else E_op(b, a, x)
        def raise_(x): return E_op(b, a, x) if kind == "X" else E_op(a, b, x)
    else:
        def lower(x): return EE_op(eps, a, b, x) if kind == "X" else EE_op(eps, b, a, x)
        def raise_(x): return EE_op(eps, b, a, x) if kind == "X" else EE_op(eps, a, b, x)

    def series(x: GrassmannElt) -> GrassmannElt:
        out = x
        arx = x
        for r in range(1, G.n + 1):
            arx = lower(arx)          # A^r x, built incrementally
            if arx.is_zero():
                break
            term = arx
            for _ in range(r):
                term = raise_(term)   # B^r A^r x
            if term.is_zero():
                continue
            coeff = Fraction((-1) ** r, 1) / (
                pochhammer(1, r) * pochhammer(c + 1, r))
            out = out + term.scale(coeff)
        return out

    return operator_matrix(G, series, nu)
