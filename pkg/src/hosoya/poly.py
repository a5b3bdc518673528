"""Exact univariate polynomials over Python integers.

Hosoya polynomials are dense (no internal gaps up to the diameter), so a
polynomial is stored as a tuple of coefficients in ascending powers of ``t``
with trailing zeros stripped. The zero polynomial is the empty tuple, which
makes structural equality the same as mathematical equality.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import NonzeroRemainder

__all__ = [
    "Polynomial",
    "Method",
    "IndexReport",
    "T",
    "ZERO",
    "ONE",
    "geometric_sum",
    "div_exact",
    "indices_from_hosoya",
]


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True, slots=True)
class Polynomial:
    """Polynomial in ``t`` with exact integer coefficients.

    ``coeffs[k]`` is the coefficient of ``t**k``. Any iterable of ints is
    accepted and brought into canonical form.

    >>> Polynomial([0, 6, 6, 3])
    Polynomial(6t + 6t^2 + 3t^3)
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = _strip(int(x) for x in self.coeffs)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> Polynomial:
        if power < 0:
            raise ValueError(f"negative power {power}")
        return cls((0,) * power + (coeff,))

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> Polynomial:
        if not terms:
            return cls()
        out = [0] * (max(terms) + 1)
        for k, c in terms.items():
            if k < 0:
                raise ValueError(f"negative power {k}")
            out[k] += c
        return cls(out)

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: Polynomial | int) -> Polynomial:
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: Polynomial | int) -> Polynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> Polynomial:
        return _coerce(other) - self

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return Polynomial(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, d: int) -> Polynomial:
        """Multiply by ``t**d``."""
        if d < 0:
            raise ValueError(f"shift must be nonnegative, got {d}")
        if not self.coeffs or d == 0:
            return self
        return Polynomial((0,) * d + self.coeffs)

    def compose_power(self, d: int) -> Polynomial:
        """Substitute ``t -> t**d``."""
        if d < 1:
            raise ValueError("d must be positive")
        out = [0] * (d * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * d] = c
        return Polynomial(out)

    def coefficient_sum(self) -> int:
        return sum(self.coeffs)

    def to_json(self) -> list[str]:
        """Decimal strings, index = power (strings keep big integers exact)."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> Polynomial:
        return cls(int(x) for x in data)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def _coerce(x: Polynomial | int) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, int):
        return Polynomial((x,))
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


ZERO = Polynomial()
ONE = Polynomial((1,))
T = Polynomial((0, 1))


def geometric_sum(d: int, k: int) -> Polynomial:
    """Return ``1 + t**d + t**(2d) + ... + t**((k-1)d)``."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k == 0:
        return ZERO
    out = [0] * ((k - 1) * d + 1)
    for j in range(k):
        out[j * d] = 1
    return Polynomial(out)


def div_exact(num: Polynomial, den: Polynomial) -> Polynomial:
    """Divide ``num`` by ``den``, insisting on an integer quotient and no remainder.

    Long division from the top. When an exact integer quotient exists every
    step divides evenly, so any uneven step or leftover remainder means the
    claimed identity is false.

    Raises:
        ZeroDivisionError: ``den`` is the zero polynomial.
        NonzeroRemainder: the division is not exact over the integers.
    """
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(num.coeffs)
    dc = den.coeffs
    dl = len(dc)
    lead = dc[-1]
    if len(rem) < dl:
        if rem:
            raise NonzeroRemainder(f"({num}) / ({den}) leaves remainder {num}")
        return ZERO
    quot = [0] * (len(rem) - dl + 1)
    for i in range(len(quot) - 1, -1, -1):
        top = rem[i + dl - 1]
        if top == 0:
            continue
        q, r = divmod(top, lead)
        if r:
            raise NonzeroRemainder(
                f"({num}) / ({den}): coefficient {top} of t^{i + dl - 1} "
                f"not divisible by leading coefficient {lead}"
            )
        quot[i] = q
        for j, c in enumerate(dc):
            rem[i + j] -= q * c
    leftover = Polynomial(rem)
    if leftover:
        raise NonzeroRemainder(f"({num}) / ({den}) leaves remainder {leftover}")
    return Polynomial(quot)


class Method(str, enum.Enum):
    BRUTE = "brute"
    DECOMPOSITION = "decomposition"
    CONSTRUCTION = "construction-formula"
    FAMILY = "family-closed-form"


@dataclass(frozen=True)
class IndexReport:
    """A Hosoya polynomial together with the indices read off it."""

    hosoya: Polynomial
    wiener: int
    hyper_wiener: int
    method: Method

    def to_json(self) -> dict:
        return {
            "hosoya": self.hosoya.to_json(),
            "wiener": str(self.wiener),
            "hyper_wiener": str(self.hyper_wiener),
            "method": self.method.value,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> IndexReport:
        return cls(
            hosoya=Polynomial.from_json(data["hosoya"]),
            wiener=int(data["wiener"]),
            hyper_wiener=int(data["hyper_wiener"]),
            method=Method(data["method"]),
        )

    def render(self) -> str:
        return f"H = {self.hosoya}; W = {self.wiener}; WW = {self.hyper_wiener}"


def indices_from_hosoya(h: Polynomial, method: Method = Method.BRUTE) -> IndexReport:
    """Wiener and hyper-Wiener indices of the graph whose Hosoya polynomial is ``h``.

    W is the first derivative at 1, and WW adds half the second derivative
    at 1, i.e. ``sum(k * c_k)`` and ``sum(k * (k + 1) / 2 * c_k)``.
    """
    if h[0] != 0:
        raise ValueError(f"Hosoya polynomial must have zero constant term, got {h[0]}")
    wiener = 0
    hyper = 0
    for k, c in enumerate(h.coeffs):
        wiener += k * c
        hyper += (k * (k + 1) // 2) * c
    return IndexReport(h, wiener, hyper, method)
