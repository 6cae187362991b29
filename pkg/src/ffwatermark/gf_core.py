"""Arithmetic in GF(p) and in the Gaussian integers GI(p) = {a + jb}.

For p = 3 (mod 4) the polynomial x^2 + 1 has no root in GF(p), so GI(p) is a
field isomorphic to GF(p^2).  Elements are immutable and always stored with
canonical components in ``[0, p)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import (
    FieldMismatch,
    NotPrime,
    UnsupportedModulus,
    ZeroElement,
    ZeroInverse,
)

# Keeps every product of two residues, summed over a 128-point kernel, well
# inside int64.
MAX_MODULUS = 1 << 15


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (fine for n <= 2**15)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation of a positive integer by trial division."""
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


@dataclass(frozen=True)
class PrimeField:
    """The prime field GF(p).

    By default the modulus must satisfy p = 3 (mod 4) so that GI(p) is a
    field.  Pass ``gaussian=False`` to accept any odd prime; that is enough
    for transforms whose kernel stays inside GF(p) (the FFFT with a real
    zeta), and Gaussian arithmetic then degrades to the ring GF(p)[j].
    """

    p: int
    gaussian: bool = True

    def __post_init__(self) -> None:
        p = self.p
        if not isinstance(p, int) or isinstance(p, bool):
            raise TypeError(f"modulus must be an int, got {type(p).__name__}")
        if p > MAX_MODULUS:
            raise UnsupportedModulus(f"p={p} exceeds the supported bound {MAX_MODULUS}")
        if not is_prime(p):
            raise NotPrime(f"p={p} is not prime")
        if p == 2:
            raise UnsupportedModulus("p=2 has no odd characteristic")
        if self.gaussian and p % 4 != 3:
            raise UnsupportedModulus(
                f"p={p} is 1 mod 4: x^2+1 is reducible, GI(p) is not a field"
            )

    def __str__(self) -> str:
        return f"GF({self.p})"

    @cached_property
    def group_order(self) -> int:
        """Order p^2 - 1 of the multiplicative group of GI(p)."""
        return self.p * self.p - 1

    @cached_property
    def group_order_factors(self) -> dict[int, int]:
        return factorize(self.group_order)

    def element(self, re_: int, im: int = 0) -> GaussianInt:
        return GaussianInt(re_ % self.p, im % self.p, self)

    def one(self) -> GaussianInt:
        return GaussianInt(1, 0, self)

    def zero(self) -> GaussianInt:
        return GaussianInt(0, 0, self)

    def j(self) -> GaussianInt:
        return GaussianInt(0, 1, self)

    def inv(self, a: int) -> int:
        return mod_inverse(a, self)

    def elements(self):
        """Every element of GI(p) in lexicographic (re, im) order."""
        for a in range(self.p):
            for b in range(self.p):
                yield GaussianInt(a, b, self)


def mod_inverse(a: int, f: PrimeField) -> int:
    """Multiplicative inverse of ``a`` modulo ``f.p``, in ``(0, p)``."""
    a %= f.p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse in {f}")
    # extended Euclid
    old_r, r = a, f.p
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    return old_s % f.p


@dataclass(frozen=True)
class GaussianInt:
    """An element ``re + j*im`` of GI(p) with ``j**2 = -1``."""

    re: int
    im: int
    field: PrimeField

    def __post_init__(self) -> None:
        p = self.field.p
        if not (0 <= self.re < p and 0 <= self.im < p):
            raise ValueError(
                f"components ({self.re}, {self.im}) are not canonical residues mod {p}"
            )

    def _check(self, other: GaussianInt) -> None:
        if other.field.p != self.field.p:
            raise FieldMismatch(f"cannot combine elements of {self.field} and {other.field}")

    def _coerce(self, other) -> GaussianInt:
        if isinstance(other, GaussianInt):
            self._check(other)
            return other
        if isinstance(other, int):
            return self.field.element(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return GaussianInt((self.re + other.re) % p, (self.im + other.im) % p, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return GaussianInt((self.re - other.re) % p, (self.im - other.im) % p, self.field)

    def __neg__(self) -> GaussianInt:
        p = self.field.p
        return GaussianInt(-self.re % p, -self.im % p, self.field)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return gi_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> GaussianInt:
        if k < 0:
            return gi_inverse(self) ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = gi_mul(result, base)
            base = gi_mul(base, base)
            k >>= 1
        return result

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return gi_mul(self, gi_inverse(other))

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def conj(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im % self.field.p, self.field)

    def norm(self) -> int:
        return gi_norm(self)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        return format_gaussian(self)


def gi_mul(x: GaussianInt, y: GaussianInt) -> GaussianInt:
    """(a+jb)(c+jd) = (ac - bd) + j(ad + bc), reduced mod p."""
    if x.field.p != y.field.p:
        raise FieldMismatch(f"cannot multiply elements of {x.field} and {y.field}")
    p = x.field.p
    return GaussianInt(
        (x.re * y.re - x.im * y.im) % p,
        (x.re * y.im + x.im * y.re) % p,
        x.field,
    )


def gi_norm(x: GaussianInt) -> int:
    return (x.re * x.re + x.im * x.im) % x.field.p


def is_unimodular(x: GaussianInt) -> bool:
    return gi_norm(x) == 1


def gi_inverse(x: GaussianInt) -> GaussianInt:
    """General inverse (a - jb) / (a^2 + b^2); does not assume unit norm."""
    n = gi_norm(x)
    if n == 0:
        raise ZeroInverse(f"{x} is not invertible in GI({x.field.p})")
    n_inv = mod_inverse(n, x.field)
    p = x.field.p
    return GaussianInt(x.re * n_inv % p, -x.im * n_inv % p, x.field)


def multiplicative_order(x: GaussianInt) -> int:
    """Smallest k >= 1 with x**k == 1.

    Strips prime factors from the group order p^2 - 1 while the power stays
    at one.  For very small fields a direct scan is used instead.
    """
    if not x:
        raise ZeroElement("the zero element has no multiplicative order")
    f = x.field
    if f.group_order <= 48:
        return _order_by_scan(x)
    order = f.group_order
    one = f.one()
    for q in f.group_order_factors:
        while order % q == 0 and x ** (order // q) == one:
            order //= q
    if x ** order != one:
        # only reachable for zero divisors when gaussian=False
        return _order_by_scan(x)
    return order


def _order_by_scan(x: GaussianInt) -> int:
    one = x.field.one()
    acc = x
    k = 1
    while acc != one:
        acc = gi_mul(acc, x)
        k += 1
        if k > x.field.group_order + 1:
            raise ZeroElement(f"{x} has no multiplicative order (zero divisor)")
    return k


def find_unimodular_zeta(f: PrimeField, order: int) -> list[GaussianInt]:
    """All unimodular elements of GI(p) with the given multiplicative order.

    Returned in lexicographic (re, im) order; an empty list is a valid answer.
    """
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    # unimodular elements form a group of order p + 1
    if (f.p + 1) % order:
        return []
    return [
        x for x in f.elements()
        if is_unimodular(x) and multiplicative_order(x) == order
    ]


def find_zeta(f: PrimeField, order: int) -> list[GaussianInt]:
    """All nonzero elements of GI(p) of the given order, norm unrestricted."""
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    if f.group_order % order:
        return []
    return [x for x in f.elements() if x and multiplicative_order(x) == order]


def sign_orbit(x: GaussianInt) -> frozenset[GaussianInt]:
    """The set {+-a +- bj} a table entry abbreviates, canonicalised."""
    f = x.field
    return frozenset(
        f.element(sa * x.re, sb * x.im) for sa in (1, -1) for sb in (1, -1)
    )


def format_gaussian(x: GaussianInt) -> str:
    """Render as ``a+bj``; drops zero parts and a unit imaginary coefficient."""
    if x.im == 0:
        return str(x.re)
    imag = "j" if x.im == 1 else f"{x.im}j"
    if x.re == 0:
        return imag
    return f"{x.re}+{imag}"


def parse_gaussian(text: str, f: PrimeField) -> GaussianInt:
    """Parse ``"a+bj"``, ``"a-bj"``, ``"bj"``, ``"j"`` or ``"a"`` into GI(p)."""
    s = text.replace(" ", "").lower().replace("i", "j")
    try:
        if not s.endswith("j"):
            return f.element(int(s), 0)
        body = s[:-1]
        # split before the sign that starts the imaginary coefficient
        cut = max(body.rfind("+"), body.rfind("-"))
        real_txt, imag_txt = (body[:cut], body[cut:]) if cut > 0 else ("0", body)
        if imag_txt in ("", "+", "-"):
            imag_txt += "1"
        return f.element(int(real_txt), int(imag_txt))
    except ValueError:
        raise ValueError(f"cannot parse Gaussian integer {text!r}") from None
