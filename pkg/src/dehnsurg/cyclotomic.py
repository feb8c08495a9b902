"""Exact arithmetic in real cyclotomic fields Q(2cos(2pi/N)).

Field elements are polynomials in u = 2cos(2pi/N) reduced modulo the
minimal polynomial of u, with Fraction coefficients, so comparison with
zero is decided exactly.  Signs of nonzero elements are certified by
evaluating the polynomial on a shrinking rational interval enclosure of u;
the enclosure comes from mpmath's validated interval cosine and every
subsequent interval operation is exact over Fractions, so a verdict is
never the product of rounding.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import mpmath

__all__ = [
    "RealCyclotomicField",
    "FieldElement",
    "cyclotomic_polynomial",
    "cos_minimal_polynomial",
]


# ---------------------------------------------------------------------------
# Dense polynomial helpers; coefficient lists run low degree to high.


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _trim(out)


def _poly_add(a: list, b: list) -> list:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for j, y in enumerate(b):
        out[j] += y
    return _trim(out)


def _poly_sub(a: list, b: list) -> list:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for j, y in enumerate(b):
        out[j] -= y
    return _trim(out)


def _poly_divexact(a: list, b: list) -> list:
    """Integer polynomial division known in advance to be exact."""
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(out) - 1, -1, -1):
        coef = a[i + len(b) - 1]
        if coef % lead != 0:
            raise ArithmeticError("inexact polynomial division")
        coef //= lead
        out[i] = coef
        if coef:
            for j, y in enumerate(b):
                a[i + j] -= coef * y
    if _trim(a):
        raise ArithmeticError("nonzero remainder in exact polynomial division")
    return _trim(out)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return (-1, 1)
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divexact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def cos_minimal_polynomial(n: int) -> tuple[int, ...]:
    """Minimal polynomial of u = 2cos(2pi/n) over Q, monic, for n >= 3.

    Phi_n(z) is palindromic of even degree phi(n), so it can be written as
    z^{phi(n)/2} * psi(z + 1/z); psi is the minimal polynomial of u.  The
    peeling loop below strips one y-power at a time, and the factorization
    is re-verified symbolically before returning.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    phi = list(cyclotomic_polynomial(n))
    deg = len(phi) - 1
    if deg % 2 != 0 or phi != phi[::-1]:
        raise ArithmeticError(f"Phi_{n} is not palindromic of even degree")
    half = deg // 2
    psi = [0] * (half + 1)
    f = list(phi)
    while f:
        d = len(f) - 1
        if d % 2 != 0:
            raise ArithmeticError("odd degree while peeling palindrome")
        k = d // 2
        c = f[-1]
        psi[k] = c
        sq = [1]
        for _ in range(k):
            sq = _poly_mul(sq, [1, 0, 1])  # (x^2 + 1)^k
        f = _poly_sub(f, [c * t for t in sq])
        if f:
            low = next(i for i, t in enumerate(f) if t)
            if low == 0:
                raise ArithmeticError("palindrome peeling stalled")
            f = f[low:]
    # Verify Phi_n(x) = sum_k psi_k x^(half-k) (x^2+1)^k exactly.
    check: list = []
    for k, c in enumerate(psi):
        if not c:
            continue
        term = [1]
        for _ in range(k):
            term = _poly_mul(term, [1, 0, 1])
        term = _poly_mul(term, [0] * (half - k) + [c])
        check = _poly_add(check, term)
    if check != phi:
        raise ArithmeticError(f"compact form of Phi_{n} failed verification")
    if psi[-1] != 1:
        raise ArithmeticError("minimal polynomial is not monic")
    return tuple(psi)


def _mpf_tuple_to_fraction(t) -> Fraction:
    sign, man, exp, _bc = t
    man = int(man)
    if sign:
        man = -man
    if exp >= 0:
        return Fraction(man * (1 << exp))
    return Fraction(man, 1 << (-exp))


@lru_cache(maxsize=None)
def _generator_enclosure(n: int, prec: int) -> tuple[Fraction, Fraction]:
    """Rational interval [lo, hi] containing 2cos(2pi/n), width ~ 2^-prec.

    A fresh interval context keeps the working precision local, so
    concurrent callers never observe each other's settings.
    """
    ctx = mpmath.ctx_iv.MPIntervalContext()
    ctx.prec = prec
    x = 2 * ctx.cos(2 * ctx.pi / n)
    a, b = x._mpi_
    lo, hi = _mpf_tuple_to_fraction(a), _mpf_tuple_to_fraction(b)
    if lo > hi:
        raise ArithmeticError("inverted enclosure from mpmath")
    return lo, hi


_MAX_SIGN_PREC = 1 << 15


class FieldElement:
    """An element of Q(2cos(2pi/n)), reduced modulo the minimal polynomial."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "RealCyclotomicField", coeffs):
        self.field = field
        self.coeffs = field._reduce(coeffs)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        a = a + (Fraction(0),) * (n - len(a))
        b = b + (Fraction(0),) * (n - len(b))
        return FieldElement(self.field, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, [-x for x in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self.field.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return FieldElement(self.field, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.field.order, self.coeffs))

    def __repr__(self):
        return f"FieldElement(order={self.field.order}, coeffs={self.coeffs})"

    def is_zero(self) -> bool:
        return not self.coeffs

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse via extended Euclid modulo the minimal poly."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        r0 = [Fraction(c) for c in self.field.modulus]
        r1 = list(self.coeffs)
        s0: list = []
        s1: list = [Fraction(1)]
        while r1:
            q, r = _frac_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # gcd(modulus, self) = r0; the modulus is irreducible so r0 is a
        # nonzero constant and s0 * self = r0 (mod modulus).
        if len(r0) != 1:
            raise ArithmeticError("element not invertible: shares a factor with modulus")
        c = r0[0]
        return FieldElement(self.field, [x / c for x in s0])

    def sign(self) -> int:
        """Certified sign: -1, 0, or +1.  Zero is decided exactly."""
        if self.is_zero():
            return 0
        prec = 64
        coeffs = self.coeffs
        while prec <= _MAX_SIGN_PREC:
            lo, hi = _generator_enclosure(self.field.order, prec)
            rlo = rhi = Fraction(coeffs[-1])
            for c in reversed(coeffs[:-1]):
                p1, p2, p3, p4 = rlo * lo, rlo * hi, rhi * lo, rhi * hi
                rlo = min(p1, p2, p3, p4) + c
                rhi = max(p1, p2, p3, p4) + c
            if rlo > 0:
                return 1
            if rhi < 0:
                return -1
            prec *= 2
        raise RuntimeError("sign certification failed to converge on a nonzero element")


def _frac_divmod(a: list, b: list) -> tuple[list, list]:
    """Division with remainder over Q[x]."""
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(_trim(a)) >= len(b):
        a = _trim(a)
        d = len(a) - len(b)
        c = a[-1] / b[-1]
        q[d] = c
        for j, y in enumerate(b):
            a[d + j] -= c * y
        a.pop()
    return _trim(q), _trim(a)


class RealCyclotomicField:
    """The field Q(u), u = 2cos(2pi/n), with exact arithmetic and signs."""

    _instances: dict = {}

    def __new__(cls, n: int):
        if n not in cls._instances:
            inst = super().__new__(cls)
            inst.order = n
            inst.modulus = cos_minimal_polynomial(n)
            inst.degree = len(inst.modulus) - 1
            cls._instances[n] = inst
        return cls._instances[n]

    def _reduce(self, coeffs) -> tuple:
        work = [Fraction(c) for c in coeffs]
        deg = self.degree
        for i in range(len(work) - 1, deg - 1, -1):
            c = work[i]
            if c:
                for j, m in enumerate(self.modulus[:-1]):
                    if m:
                        work[i - deg + j] -= c * m
            work.pop()
        while work and work[-1] == 0:
            work.pop()
        return tuple(work)

    def zero(self) -> FieldElement:
        return FieldElement(self, [])

    def one(self) -> FieldElement:
        return FieldElement(self, [1])

    def scalar(self, c) -> FieldElement:
        return FieldElement(self, [Fraction(c)])

    def generator(self) -> FieldElement:
        return FieldElement(self, [0, 1])

    def two_cos_multiple(self, k: int) -> FieldElement:
        """The element 2cos(2pi*k/n), via the recurrence for 2cos(k*theta)."""
        k = abs(k) % self.order
        prev, cur = self.scalar(2), self.generator()
        if k == 0:
            return prev
        u = self.generator()
        for _ in range(k - 1):
            prev, cur = cur, u * cur - prev
        return cur
