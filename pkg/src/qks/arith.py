"""Exact scalar arithmetic with fractional q-powers and q-Pochhammer products.

Everything downstream works over plain rationals.  The deformation parameter
q is realized as the eighth power of a rational unit u, so that half, quarter
and eighth powers of q (which occur in vertex weights, framing factors and
Gaussian exponents) stay exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class QksError(Exception):
    """Base class for all package errors."""


class DegenerateParameterError(QksError):
    """A required factor 1 - c*q^n vanished (or an equivalent division failed)."""


class CutoffInstabilityError(QksError):
    """A truncated Fock computation changed when the weight cutoff was raised."""


class PoleAtLatticePointError(QksError):
    """A diagonal coefficient function has a pole at some q^n inside the window."""


class OperatorStructureError(QksError):
    """An operator does not have the shape required by the requested inversion."""


def rat(x) -> Fraction:
    return Fraction(x)


def rat_str(x: Fraction) -> str:
    """Serialize a rational in lowest terms, omitting the unit denominator."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(s: str) -> Fraction:
    return Fraction(s)


@dataclass(frozen=True)
class QContext:
    """Arithmetic context: q = u**8 plus an optional pool of Kahler parameters."""

    u: Fraction
    kahler: tuple[Fraction, ...] = ()

    def __post_init__(self):
        u = Fraction(self.u)
        if u == 0 or u == 1 or u == -1:
            raise DegenerateParameterError(f"unit u={u} must avoid 0 and roots of unity")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "kahler", tuple(Fraction(x) for x in self.kahler))

    @property
    def q(self) -> Fraction:
        return self.u ** 8


def qpow(ctx: QContext, k: int) -> Fraction:
    """q**(k/8), i.e. u**k.  qpow(ctx, 8) == q."""
    return ctx.u ** k


def q_int(ctx: QContext, n: int) -> Fraction:
    """q**n for integer n."""
    return ctx.u ** (8 * n)


def q_half(ctx: QContext, n: int) -> Fraction:
    """q**(n/2) for integer n."""
    return ctx.u ** (4 * n)


def qpochhammer(ctx: QContext, a: Fraction, k: int, direction: int = 1) -> Fraction:
    """(a; q^direction)_k = prod_{m<k} (1 - a*q^(direction*m)); empty product is 1."""
    if k < 0:
        raise ValueError("qpochhammer needs k >= 0")
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    out = Fraction(1)
    step = q_int(ctx, direction)
    factor = Fraction(a)
    for _ in range(k):
        out *= 1 - factor
        factor *= step
    return out


def q_factorial_pochhammer(ctx: QContext, k: int) -> Fraction:
    """(q; q)_k, the standard q-factorial product."""
    return qpochhammer(ctx, ctx.q, k)


def one_minus(ctx: QContext, c: Fraction, n: int) -> Fraction:
    """1 - c*q^n, raising if the result vanishes (degenerate parameter)."""
    v = 1 - c * q_int(ctx, n)
    if v == 0:
        raise DegenerateParameterError(f"1 - ({c})*q^{n} = 0 at u={ctx.u}")
    return v


class RationalStream:
    """Reproducible rational generator backed by the minstd LCG.

    state' = 48271 * state mod (2**31 - 1).  Trials fed from a seed are thus
    identical across platforms, which keeps Schwartz-Zippel style identity
    checks replayable.
    """

    MODULUS = 2**31 - 1
    MULTIPLIER = 48271

    def __init__(self, seed: int = 0):
        self.state = (seed % (self.MODULUS - 1)) + 1

    def next_int(self) -> int:
        self.state = (self.MULTIPLIER * self.state) % self.MODULUS
        return self.state

    def rational(self, bound: int = 10**4) -> Fraction:
        n = self.next_int() % bound + 1
        d = self.next_int() % bound + 1
        return Fraction(n, d)

    def unit_rational(self, bound: int = 10**4) -> Fraction:
        """A rational strictly between 0 and 1 with numerator/denominator <= bound."""
        while True:
            n = self.next_int() % bound + 1
            d = self.next_int() % bound + 1
            if n != d:
                return Fraction(min(n, d), max(n, d))

    def unit(self, bound: int = 10**4) -> Fraction:
        """A valid base unit u in (0, 1)."""
        return self.unit_rational(bound)

    def kahler(self, ctx: QContext, bound: int = 10**4, max_power: int = 80) -> Fraction:
        """A generic Kahler parameter in (0, 1): not an integer power of q."""
        q = ctx.q
        while True:
            cand = self.unit_rational(bound)
            p = Fraction(1)
            hit = False
            for _ in range(max_power):
                p *= q
                if p == cand or (p != 0 and cand * p == 1):
                    hit = True
                    break
            if not hit:
                return cand

    def distinct_rationals(self, count: int, bound: int = 10**4) -> list[Fraction]:
        out: list[Fraction] = []
        while len(out) < count:
            cand = self.rational(bound)
            if cand not in out:
                out.append(cand)
        return out
