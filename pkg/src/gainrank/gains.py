"""Unit complex gains.

Two representations share one small protocol:

* :class:`RationalAngle` -- ``exp(2*pi*i*p/q)`` stored as a reduced angle in
  ``[0, 1)``; products, inverses and conjugates stay exact.
* :class:`Numeric` -- a floating point unit complex number, used only for
  gains that are not roots of unity.

Mixing the two yields a :class:`Numeric`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

UNIT_TOLERANCE = 1e-12


class GainError(ValueError):
    """Raised for malformed gains (zero denominator, non-unit modulus)."""


@dataclass(frozen=True)
class RationalAngle:
    """The root of unity ``exp(2*pi*i*angle)`` with ``0 <= angle < 1``."""

    angle: Fraction

    def __init__(self, p: int | Fraction = 0, q: int = 1):
        if q == 0:
            raise GainError("gain denominator q must be non-zero")
        object.__setattr__(self, "angle", (Fraction(p) / q) % 1)

    @property
    def p(self) -> int:
        return self.angle.numerator

    @property
    def q(self) -> int:
        return self.angle.denominator

    is_exact = True

    def __mul__(self, other: Gain) -> Gain:
        if isinstance(other, RationalAngle):
            return RationalAngle(self.angle + other.angle)
        if isinstance(other, Numeric):
            return Numeric.from_complex(self.to_complex() * other.to_complex())
        return NotImplemented

    def conjugate(self) -> RationalAngle:
        return RationalAngle(-self.angle)

    inverse = conjugate

    def to_complex(self) -> complex:
        # exact values at the quarter turns keep the numeric path clean
        quarter = {Fraction(0): 1 + 0j, Fraction(1, 4): 1j,
                   Fraction(1, 2): -1 + 0j, Fraction(3, 4): -1j}
        if self.angle in quarter:
            return quarter[self.angle]
        return cmath.exp(2j * math.pi * float(self.angle))

    def gaussian(self) -> tuple[int, int] | None:
        """``(re, im)`` as integers when the gain is in ``{1, i, -1, -i}``."""
        return _GAUSSIAN.get(self.angle)

    def __str__(self) -> str:
        return "1" if self.angle == 0 else f"{self.p}/{self.q}"

    def __repr__(self) -> str:
        return f"RationalAngle({self.p}, {self.q})"


_GAUSSIAN = {Fraction(0): (1, 0), Fraction(1, 4): (0, 1),
             Fraction(1, 2): (-1, 0), Fraction(3, 4): (0, -1)}


@dataclass(frozen=True)
class Numeric:
    """A unit complex number held in floating point."""

    re: float
    im: float

    def __post_init__(self):
        modulus = self.re * self.re + self.im * self.im
        if not math.isfinite(modulus) or abs(modulus - 1.0) > UNIT_TOLERANCE:
            raise GainError(f"|gain|^2 = {modulus!r} is not 1 within {UNIT_TOLERANCE}")

    @classmethod
    def from_complex(cls, z: complex) -> Numeric:
        # products of unit numbers drift; renormalise so the invariant survives
        r = abs(z)
        if r == 0 or abs(r * r - 1.0) > 1e-9:
            raise GainError(f"{z!r} is not a unit complex number")
        z = z / r
        return cls(z.real, z.imag)

    is_exact = False

    def __mul__(self, other: Gain) -> Numeric:
        if isinstance(other, (RationalAngle, Numeric)):
            return Numeric.from_complex(self.to_complex() * other.to_complex())
        return NotImplemented

    def conjugate(self) -> Numeric:
        return Numeric(self.re, -self.im)

    inverse = conjugate

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    def gaussian(self) -> None:
        return None

    def __str__(self) -> str:
        return f"c {self.re!r} {self.im!r}"


Gain = Union[RationalAngle, Numeric]

ONE = RationalAngle(0)


def gain_product(gains) -> Gain:
    result: Gain = ONE
    for g in gains:
        result = result * g
    return result
