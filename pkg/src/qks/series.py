"""Truncated Laurent series with exact coefficients and explicit windows.

A series knows a hard bottom degree (coefficients below it are exactly zero)
and a top degree above which coefficients are unknown because of truncation;
top None means the series is entire (a Laurent polynomial).  Operations
propagate the window so equality assertions can demand a minimum overlap.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable


def _min_top(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class LaurentSeries:
    __slots__ = ("coeffs", "bottom", "top")

    def __init__(self, coeffs: dict[int, Fraction], bottom: int, top: int | None):
        if top is not None and bottom > top:
            raise ValueError(f"empty window [{bottom}, {top}]")
        self.coeffs = {d: Fraction(c) for d, c in coeffs.items() if c != 0}
        for d in self.coeffs:
            if d < bottom or (top is not None and d > top):
                raise ValueError(f"coefficient at degree {d} outside window")
        self.bottom = bottom
        self.top = top

    # -- constructors -------------------------------------------------------
    @staticmethod
    def zero(bottom: int = 0, top: int | None = None) -> "LaurentSeries":
        return LaurentSeries({}, bottom, top)

    @staticmethod
    def monomial(degree: int, coeff=Fraction(1), top: int | None = None) -> "LaurentSeries":
        return LaurentSeries({degree: Fraction(coeff)}, degree, top)

    @staticmethod
    def one(top: int | None = None) -> "LaurentSeries":
        return LaurentSeries.monomial(0, Fraction(1), top)

    # -- access --------------------------------------------------------------
    def coeff(self, d: int) -> Fraction:
        if self.top is not None and d > self.top:
            raise ValueError(f"degree {d} above the valid window (top {self.top})")
        return self.coeffs.get(d, Fraction(0))

    def window(self) -> tuple[int, int | None]:
        return (self.bottom, self.top)

    def is_zero_on_window(self) -> bool:
        return not self.coeffs

    def __repr__(self) -> str:
        terms = ", ".join(f"{d}: {c}" for d, c in sorted(self.coeffs.items()))
        return f"LaurentSeries([{self.bottom}, {self.top}], {{{terms}}})"

    # -- arithmetic ----------------------------------------------------------
    def scale(self, c) -> "LaurentSeries":
        c = Fraction(c)
        return LaurentSeries({d: c * v for d, v in self.coeffs.items()}, self.bottom, self.top)

    def add(self, other: "LaurentSeries") -> "LaurentSeries":
        top = _min_top(self.top, other.top)
        bottom = min(self.bottom, other.bottom)
        out = dict(self.coeffs)
        for d, v in other.coeffs.items():
            out[d] = out.get(d, Fraction(0)) + v
        out = {d: v for d, v in out.items() if top is None or d <= top}
        return LaurentSeries(out, bottom, top)

    def sub(self, other: "LaurentSeries") -> "LaurentSeries":
        return self.add(other.scale(-1))

    def shift(self, a: int) -> "LaurentSeries":
        top = None if self.top is None else self.top + a
        return LaurentSeries({d + a: v for d, v in self.coeffs.items()}, self.bottom + a, top)

    def hadamard(self, fn: Callable[[int], Fraction]) -> "LaurentSeries":
        """Degree-wise multiplier: coeff(d) *= fn(d)."""
        return LaurentSeries({d: fn(d) * v for d, v in self.coeffs.items()},
                             self.bottom, self.top)

    def mul(self, other: "LaurentSeries") -> "LaurentSeries":
        if self.top is None and other.top is None:
            top = None
        else:
            cands = []
            if self.top is not None:
                cands.append(self.top + other.bottom)
            if other.top is not None:
                cands.append(other.top + self.bottom)
            top = min(cands)
        bottom = self.bottom + other.bottom
        out: dict[int, Fraction] = {}
        for d1, v1 in self.coeffs.items():
            for d2, v2 in other.coeffs.items():
                d = d1 + d2
                if top is None or d <= top:
                    out[d] = out.get(d, Fraction(0)) + v1 * v2
        return LaurentSeries(out, bottom, top)

    def truncate(self, top: int) -> "LaurentSeries":
        new_top = top if self.top is None else min(self.top, top)
        return LaurentSeries({d: v for d, v in self.coeffs.items() if d <= new_top},
                             self.bottom, new_top)

    # -- comparison ----------------------------------------------------------
    def first_mismatch(self, other: "LaurentSeries") -> int | None:
        """Lowest degree where the two series differ on the common window."""
        top = _min_top(self.top, other.top)
        degrees = set(self.coeffs) | set(other.coeffs)
        for d in sorted(degrees):
            if top is not None and d > top:
                break
            if self.coeffs.get(d, Fraction(0)) != other.coeffs.get(d, Fraction(0)):
                return d
        return None

    def equals(self, other: "LaurentSeries", min_overlap: int = 10) -> bool:
        top = _min_top(self.top, other.top)
        if top is not None:
            overlap = top - max(self.bottom, other.bottom) + 1
            if overlap < min_overlap:
                raise ValueError(
                    f"window overlap {overlap} below required {min_overlap}")
        return self.first_mismatch(other) is None
