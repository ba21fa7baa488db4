"""Exact scalar arithmetic: rationals, univariate polynomials, rational functions.

Everything downstream (module actions, intertwiners, Drinfeld data) is built
over the field Q.  Scalars are `fractions.Fraction` (already canonical:
reduced, positive denominator, arbitrary precision).  This module adds:

  * `Poly`    -- univariate polynomials over Q in a formal variable u,
                 coefficients stored lowest degree first,
  * `RatFun`  -- reduced rational functions num/den with monic denominator,
  * `pochhammer`, `poly_shift`, `factor_linear` -- the scalar utilities the
                 representation-theoretic layers need.

No floating point is used anywhere; equality is always structural equality of
canonical forms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

#: degree of the zero polynomial (order-compatible with every int)
NEG_INF = float("-inf")


class IrrationalRoots(ArithmeticError):
    """A polynomial that was required to split over Q does not."""


class PoleEvaluation(ZeroDivisionError):
    """A rational function was evaluated at a root of its denominator."""


def q(value) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):  # bool is an int subclass; reject explicitly
        raise TypeError("boolean is not a rational scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def q_str(x: Fraction) -> str:
    """Canonical string form: 'p/q', or just 'p' when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def pochhammer(x: Scalar, r: int) -> Fraction:
    """Rising factorial x(x+1)...(x+r-1); the empty product 1 when r = 0."""
    if r < 0:
        raise ValueError("pochhammer needs a nonnegative length")
    x = Fraction(x)
    out = Fraction(1)
    for k in range(r):
        out *= x + k
    return out


class Poly:
    """Univariate polynomial over Q.

    Coefficients are stored lowest degree first with no trailing zeros, so
    two polynomials are equal iff their coefficient tuples are equal.  The
    zero polynomial has an empty tuple and degree NEG_INF.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- construction helpers ------------------------------------------------

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls((Fraction(c),))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> "Poly":
        """Monic product of (u - z) over the given multiset of roots."""
        out = ONE
        for z in roots:
            out = out * cls((-Fraction(z), Fraction(1)))
        return out

    # -- structure -----------------------------------------------------------

    @property
    def degree(self):
        """Degree as an int, or NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> "Poly":
        lead = self.leading()
        if lead == 1:
            return self
        return Poly(c / lead for c in self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly((other,))
        return NotImplemented

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                mag = q_str(abs(c))
            else:
                var = "u" if k == 1 else f"u^{k}"
                mag = var if abs(c) == 1 else f"{q_str(abs(c))}*{var}"
            if not parts:
                parts.append(("-" if c < 0 else "") + mag)
            else:
                parts.append(("- " if c < 0 else "+ ") + mag)
        return "Poly(" + " ".join(parts) + ")"

    # -- ring operations -----------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return -(self - other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "Poly"):
        """Exact euclidean division over the field Q."""
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db, lead = other.degree, other.leading()
        if self.degree < db:
            return ZERO, self
        quot = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k] / lead
            quot[k - db] = c
            if c:
                for j, cb in enumerate(other.coeffs):
                    rem[k - db + j] -= c * cb
        return Poly(quot), Poly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, _as_poly(other))[0]

    def __mod__(self, other):
        return divmod(self, _as_poly(other))[1]

    # -- analysis ------------------------------------------------------------

    def __call__(self, x: Scalar) -> Fraction:
        """Evaluate by Horner's rule."""
        x = Fraction(x)
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def shift(self, c: Scalar) -> "Poly":
        """The polynomial u |-> p(u + c), computed by synthetic Taylor shift."""
        c = Fraction(c)
        if not self.coeffs or c == 0:
            return self
        # repeated synthetic division by (u - (-c)) accumulates p(u + c)
        work = list(self.coeffs)
        n = len(work)
        for i in range(n - 1):
            for k in range(n - 2, i - 1, -1):
                work[k] += c * work[k + 1]
        return Poly(work)

    def int_cleared(self) -> tuple[list[int], int]:
        """Return (integer coefficient list, positive scale) with
        scale * p having integer coefficients.  Used by sampling kernels."""
        scale = 1
        for c in self.coeffs:
            scale = scale * c.denominator // _gcd(scale, c.denominator)
        return [int(c * scale) for c in self.coeffs], scale


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly((x,))
    return NotImplemented


ZERO = Poly()
ONE = Poly((1,))
U = Poly((0, 1))


def poly_shift(p: Poly, c: Scalar) -> Poly:
    """q(u) = p(u + c)."""
    return p.shift(c)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the euclidean algorithm (gcd(0, 0) = 0)."""
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return ZERO
    return a.monic()


# ---------------------------------------------------------------------------
# rational-root factoring
# ---------------------------------------------------------------------------

_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


def _is_probable_prime(n: int) -> bool:
    # deterministic Miller-Rabin for n < 3.3e24 with the fixed base set
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    y, c, m = 2, 1, 128
    while True:
        x = y
        g = r = ql = 1
        q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = _gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = _gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1  # rare cycle degeneracy: restart with a new constant


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent} (n must be nonzero)."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor zero")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 7
    # wheel over residues coprime to 30, bounded trial division
    steps = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while f * f <= n and f < 100_000:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += steps[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        v = stack.pop()
        if v == 1:
            continue
        if _is_probable_prime(v):
            out[v] = out.get(v, 0) + 1
            continue
        d = _brent_rho(v)
        stack.append(d)
        stack.append(v // d)
    return out


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factor_int(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return divs


def factor_linear(p: Poly) -> list[Fraction]:
    """All roots of a monic p with multiplicity, proving p = prod (u - z_s).

    Returns the sorted root multiset.  Raises IrrationalRoots if any
    irreducible factor over Q has degree > 1; raises ValueError on the zero
    polynomial or a non-monic input.
    """
    if p.is_zero():
        raise ValueError("zero polynomial cannot be factored into linears")
    if not p.is_monic():
        raise ValueError("factor_linear expects a monic polynomial")
    roots: list[Fraction] = []
    # split off roots at 0 first so the constant term is nonzero below
    cs = list(p.coeffs)
    while cs and cs[0] == 0:
        roots.append(Fraction(0))
        cs = cs[1:]
    p = Poly(cs)
    if p.degree > 0:
        ints, _ = p.int_cleared()
        lead, const = ints[-1], ints[0]
        cand: set[Fraction] = set()
        for r in _divisors(const):
            for s in _divisors(lead):
                cand.add(Fraction(r, s))
                cand.add(Fraction(-r, s))
        for z in sorted(cand):
            while p.degree > 0 and p(z) == 0:
                roots.append(z)
                p = p // Poly((-z, 1))
    if p.degree > 0:
        raise IrrationalRoots(
            f"polynomial has an irreducible factor of degree {p.degree} over Q")
    return sorted(roots)


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


class RatFun:
    """Reduced rational function num/den over Q with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = _coerce_poly(num)
        den = _coerce_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            object.__setattr__(self, "num", ZERO)
            object.__setattr__(self, "den", ONE)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
        lead = den.leading()
        if lead != 1:
            num = num * (1 / lead)
            den = den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def of(cls, value) -> "RatFun":
        if isinstance(value, RatFun):
            return value
        return cls(_coerce_poly(value))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == ONE and self.den == ONE

    def is_polynomial(self) -> bool:
        return self.den == ONE

    def __eq__(self, other) -> bool:
        if isinstance(other, (Poly, int, Fraction)):
            other = RatFun.of(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("RatFun", self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        if self.den == ONE:
            return f"RatFun({self.num!r})"
        return f"RatFun({self.num!r} / {self.den!r})"

    def __add__(self, other) -> "RatFun":
        other = RatFun.of(other)
        return RatFun(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den)

    def __sub__(self, other) -> "RatFun":
        return self + (-RatFun.of(other))

    def __rsub__(self, other) -> "RatFun":
        return RatFun.of(other) - self

    def __mul__(self, other) -> "RatFun":
        other = RatFun.of(other)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFun":
        other = RatFun.of(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFun":
        return RatFun.of(other) / self

    def __pow__(self, n: int) -> "RatFun":
        if n < 0:
            return (RF_ONE / self) ** (-n)
        return RatFun(self.num**n, self.den**n)

    def __call__(self, x: Scalar) -> Fraction:
        x = Fraction(x)
        d = self.den(x)
        if d == 0:
            raise PoleEvaluation(f"evaluation at pole u = {q_str(x)}")
        return self.num(x) / d

    def shift(self, c: Scalar) -> "RatFun":
        """u |-> value at u + c."""
        return RatFun(self.num.shift(c), self.den.shift(c))


def _coerce_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly((x,))
    if isinstance(x, (list, tuple)):
        return Poly(x)
    raise TypeError(f"cannot interpret {x!r} as a polynomial")


RF_ZERO = RatFun(ZERO)
RF_ONE = RatFun(ONE)


def linear(z: Scalar) -> Poly:
    """The monic linear polynomial u - z."""
    return Poly((-Fraction(z), 1))
