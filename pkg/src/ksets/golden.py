"""Exact arithmetic in the golden field Q(sqrt 5).

Numbers are a + b*tau with rational a, b, where tau = (sqrt5 + 1)/2, so
tau**2 = tau + 1 and kappa = 1/tau = tau - 1.  All 600-cell coordinates
live in this field, so the geometry module never touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=False)
class GoldenNumber:
    a: Fraction
    b: Fraction

    def __add__(self, other: "GoldenNumber") -> "GoldenNumber":
        return GoldenNumber(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "GoldenNumber") -> "GoldenNumber":
        return GoldenNumber(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "GoldenNumber":
        return GoldenNumber(-self.a, -self.b)

    def __mul__(self, other: "GoldenNumber") -> "GoldenNumber":
        # (a + b t)(c + d t) with t^2 = t + 1
        a, b, c, d = self.a, self.b, other.a, other.b
        return GoldenNumber(a * c + b * d, a * d + b * c + b * d)

    def scale(self, r: Fraction | int) -> "GoldenNumber":
        return GoldenNumber(self.a * r, self.b * r)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def sign(self) -> int:
        """Exact sign of a + b*(1+sqrt5)/2."""
        # a + b t = ((2a + b) + b*sqrt5) / 2
        p = 2 * self.a + self.b
        q = self.b
        if p >= 0 and q >= 0:
            return 1 if (p or q) else 0
        if p <= 0 and q <= 0:
            return -1
        if p > 0:  # q < 0: sign of p - |q|sqrt5
            return 1 if p * p > 5 * q * q else -1
        return 1 if p * p < 5 * q * q else -1

    def __lt__(self, other: "GoldenNumber") -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: "GoldenNumber") -> bool:
        return (self - other).sign() <= 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * (1 + 5**0.5) / 2

    def __str__(self) -> str:
        return f"{self.a}+{self.b}t"

    @staticmethod
    def parse(text: str) -> "GoldenNumber":
        """Inverse of str(): 'a+b t' with '+' separating the two exact
        rational parts (the rational parts carry their own signs)."""
        body = text.strip().removesuffix("t")
        # split on the '+' that separates the parts, not a leading sign
        cut = body.index("+", 1)
        return GoldenNumber(Fraction(body[:cut]), Fraction(body[cut + 1 :]))


ZERO = GoldenNumber(Fraction(0), Fraction(0))
ONE = GoldenNumber(Fraction(1), Fraction(0))
TAU = GoldenNumber(Fraction(0), Fraction(1))
KAPPA = TAU - ONE  # 1/tau


def golden(a: int | Fraction, b: int | Fraction = 0) -> GoldenNumber:
    return GoldenNumber(Fraction(a), Fraction(b))


@dataclass(frozen=True)
class Ray:
    """A 1-dim subspace of R^4 over the golden field.

    Stored canonically: the first nonzero component is positive, so
    antipodal vectors collapse to one ray and rays compare by component
    tuple.
    """

    components: tuple[GoldenNumber, GoldenNumber, GoldenNumber, GoldenNumber]

    @staticmethod
    def of(*components: GoldenNumber) -> "Ray":
        if len(components) != 4:
            raise ValueError("rays are 4-dimensional")
        sign = 0
        for c in components:
            sign = c.sign()
            if sign:
                break
        if sign == 0:
            raise ValueError("zero vector is not a ray")
        if sign < 0:
            components = tuple(-c for c in components)
        return Ray(tuple(components))

    def sort_key(self):
        return tuple((c.a, c.b) for c in self.components)


def inner_product(u: Ray, v: Ray) -> GoldenNumber:
    """Exact real inner product; zero iff the rays are orthogonal."""
    total = ZERO
    for x, y in zip(u.components, v.components):
        total = total + x * y
    return total
