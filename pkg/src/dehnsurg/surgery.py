"""Casson-Walker and total Casson-Gordon invariants of surgered manifolds.

Everything here is a thin layer of exact rational arithmetic over the
Dedekind-sum module: the null-homologous surgery formulas, and Walker's
general framed formula with its Dedekind-sum correction term.  Sign
conventions for the peripheral basis are fixed by the calibration
requirement that p/q surgery on the unknot in S^3 reproduces the
lens-space value s(q,p); the test suite executes that calibration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .dedekind import dedekind_sum

__all__ = [
    "Slope",
    "PeripheralClass",
    "LongitudeData",
    "AmbientData",
    "walker_correction",
    "casson_walker_surgered",
    "casson_gordon_surgered",
    "walker_general",
]


@dataclass(frozen=True)
class Slope:
    """Reduced surgery slope p/q with q >= 0; (1, 0) encodes infinity."""

    p: int
    q: int

    def __post_init__(self):
        if self.q < 0:
            raise ValueError("slope must be stored with q >= 0 (negate p instead)")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"slope {self.p}/{self.q} is not reduced")
        if self.q == 0 and self.p != 1:
            raise ValueError("the infinite slope is encoded as 1/0")

    @classmethod
    def of(cls, p: int, q: int) -> "Slope":
        """Build a slope from any integer pair with q possibly negative."""
        if q == 0:
            if p == 0:
                raise ValueError("0/0 is not a slope")
            return cls(1, 0)
        if q < 0:
            p, q = -p, -q
        g = math.gcd(p, q)
        return cls(p // g, q // g)

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """Parse 'p/q', a bare integer, or 'inf'."""
        text = text.strip()
        if text.lower() in ("inf", "infinity", "1/0"):
            return cls(1, 0)
        if "/" in text:
            num, _, den = text.partition("/")
            return cls.of(int(num), int(den))
        return cls.of(int(text), 1)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    def negated(self) -> "Slope":
        return Slope(1, 0) if self.is_infinite else Slope(-self.p, self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class PeripheralClass:
    """Class a = mu_coeff * x + lambda_coeff * y on the peripheral torus,
    in a fixed basis x, y with <x, y> = 1."""

    mu_coeff: int
    lambda_coeff: int

    def is_primitive(self) -> bool:
        return math.gcd(self.mu_coeff, self.lambda_coeff) == 1


def pairing(a: PeripheralClass, b: PeripheralClass) -> int:
    """Intersection pairing <a, b> = a1*b2 - a2*b1."""
    return a.mu_coeff * b.lambda_coeff - a.lambda_coeff * b.mu_coeff


@dataclass(frozen=True)
class LongitudeData:
    """Longitude l = d * y; d = 1 for null-homologous knots."""

    d: int = 1

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("longitude multiple d must be >= 1")

    def as_class(self) -> PeripheralClass:
        return PeripheralClass(0, self.d)


@dataclass(frozen=True)
class AmbientData:
    """Casson-Walker invariant of the ambient manifold, supplied as data."""

    lambda_value: Fraction = field(default_factory=lambda: Fraction(0))
    name: str = "S3"

    def negated(self) -> "AmbientData":
        return AmbientData(-self.lambda_value, f"-{self.name}")


def walker_correction(a: PeripheralClass, b: PeripheralClass, l: LongitudeData) -> Fraction:
    """Dedekind-sum correction term of Walker's surgery formula.

    Equals -s(<x,a>, <y,a>) + s(<x,b>, <y,b>) + ((d^2-1)/12) <a,b> / (<a,l><b,l>).
    Requires <a,l> != 0 and <b,l> != 0.
    """
    if not (a.is_primitive() and b.is_primitive()):
        raise ValueError("surgery classes must be primitive")
    lc = l.as_class()
    al = pairing(a, lc)
    bl = pairing(b, lc)
    if al == 0 or bl == 0:
        raise ValueError("classes pairing to zero with the longitude are not allowed")
    x = PeripheralClass(1, 0)
    y = PeripheralClass(0, 1)
    term = -dedekind_sum(pairing(x, a), pairing(y, a)) + dedekind_sum(pairing(x, b), pairing(y, b))
    d = l.d
    term += Fraction(d * d - 1, 12) * Fraction(pairing(a, b), al * bl)
    return term


def casson_walker_surgered(ambient: AmbientData, delta2: int, slope: Slope) -> Fraction:
    """lambda(Y_{p/q}(K)) = lambda(Y) + s(q,p) - (q/p) * delta2.

    Requires p != 0 (the result must be a rational homology sphere).
    """
    if slope.p == 0:
        raise ValueError("0-surgery does not yield a rational homology sphere")
    return ambient.lambda_value + dedekind_sum(slope.q, slope.p) - Fraction(slope.q, slope.p) * delta2


def casson_gordon_surgered(sigma_p: int, slope: Slope) -> Fraction:
    """tau(Y_{p/q}(K)) = tau(L(p,q)) - sigma(K,p) = -4p*s(q,p) - sigma_p."""
    if slope.p == 0:
        raise ValueError("0-surgery does not yield a rational homology sphere")
    return -4 * slope.p * dedekind_sum(slope.q, slope.p) - sigma_p


def walker_general(
    lambda_at_b: Fraction,
    delta2: int,
    a: PeripheralClass,
    b: PeripheralClass,
    l: LongitudeData,
) -> Fraction:
    """Walker's framed surgery formula:
    lambda(K_a) = lambda(K_b) + tau(a,b;l) + (<a,b>/(<a,l><b,l>)) * delta2."""
    corr = walker_correction(a, b, l)
    lc = l.as_class()
    al = pairing(a, lc)
    bl = pairing(b, lc)
    return Fraction(lambda_at_b) + corr + Fraction(pairing(a, b), al * bl) * delta2
