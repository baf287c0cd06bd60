"""Noncommutative q-difference operator algebra in normal form.

Operators are finite sums  sum_a x^a * f_a(y)  with y standing for q^D and
each f_a a reduced rational function with exact coefficients.  Multiplication
rests on the exchange rule f(y) * x^b = x^b * f(q^b y).  Gaussian weights
q^{c (D - 1/2)^2} fall outside this rational normal form and are provided as
a separate diagonal action on series only.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import (
    DegenerateParameterError,
    OperatorStructureError,
    PoleAtLatticePointError,
    QContext,
    q_int,
    rat_str,
)
from .series import LaurentSeries

Poly = tuple[Fraction, ...]  # dense, low degree first, no trailing zeros

P_ZERO: Poly = ()
P_ONE: Poly = (Fraction(1),)


def p_make(coeffs) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def p_add(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return p_make([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                   for i in range(n)])


def p_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return P_ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return p_make(out)


def p_scale(a: Poly, c: Fraction) -> Poly:
    return p_make([c * x for x in a])


def p_eval(a: Poly, v: Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(a):
        out = out * v + c
    return out


def p_arg_scale(a: Poly, c: Fraction) -> Poly:
    """f(y) -> f(c*y)."""
    out = []
    p = Fraction(1)
    for coeff in a:
        out.append(coeff * p)
        p *= c
    return p_make(out)


def p_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = list(a)
    while len(r) >= len(b) and any(c != 0 for c in r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(b):
            break
        factor = r[-1] / b[-1]
        shift = len(r) - len(b)
        q[shift] = factor
        for i, bc in enumerate(b):
            r[shift + i] -= factor * bc
        r.pop()
    return p_make(q), p_make(r)


def p_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        _, a2 = p_divmod(a, b)
        a, b = b, a2
    if not a:
        return P_ZERO
    return p_scale(a, 1 / a[-1])  # monic


class RationalFunc:
    """Reduced rational function in y with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=P_ONE):
        num = p_make(num if isinstance(num, (tuple, list)) else (num,))
        den = p_make(den if isinstance(den, (tuple, list)) else (den,))
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num, self.den = P_ZERO, P_ONE
            return
        g = p_gcd(num, den)
        if len(g) > 1:
            num, _ = p_divmod(num, g)
            den, _ = p_divmod(den, g)
        lead = den[-1]
        self.num = p_scale(num, 1 / lead)
        self.den = p_scale(den, 1 / lead)

    # -- constructors ---------------------------------------------------------
    @staticmethod
    def const(c) -> "RationalFunc":
        return RationalFunc((Fraction(c),))

    @staticmethod
    def y_power(k: int) -> "RationalFunc":
        """y^k, negative k allowed."""
        if k >= 0:
            return RationalFunc((Fraction(0),) * k + (Fraction(1),))
        return RationalFunc(P_ONE, (Fraction(0),) * (-k) + (Fraction(1),))

    @staticmethod
    def one_minus_cy(c, power_of_y: int = 1) -> "RationalFunc":
        """1 - c*y^k."""
        return RationalFunc(p_add(P_ONE, (Fraction(0),) * power_of_y + (-Fraction(c),)))

    # -- algebra ---------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return not self.num

    def add(self, other: "RationalFunc") -> "RationalFunc":
        return RationalFunc(p_add(p_mul(self.num, other.den), p_mul(other.num, self.den)),
                            p_mul(self.den, other.den))

    def mul(self, other: "RationalFunc") -> "RationalFunc":
        return RationalFunc(p_mul(self.num, other.num), p_mul(self.den, other.den))

    def scale(self, c) -> "RationalFunc":
        return RationalFunc(p_scale(self.num, Fraction(c)), self.den)

    def inverse(self) -> "RationalFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverting the zero rational function")
        return RationalFunc(self.den, self.num)

    def divide(self, other: "RationalFunc") -> "RationalFunc":
        return self.mul(other.inverse())

    def arg_scale(self, c: Fraction) -> "RationalFunc":
        """f(y) -> f(c*y)."""
        return RationalFunc(p_arg_scale(self.num, c), p_arg_scale(self.den, c))

    def eval(self, v: Fraction) -> Fraction:
        d = p_eval(self.den, v)
        if d == 0:
            raise PoleAtLatticePointError(f"denominator vanishes at y = {v}")
        return p_eval(self.num, v) / d

    def is_polynomial(self) -> bool:
        return self.den == P_ONE

    def pretty(self) -> str:
        def poly_str(p: Poly) -> str:
            if not p:
                return "0"
            terms = []
            for k, c in enumerate(p):
                if c == 0:
                    continue
                if k == 0:
                    terms.append(rat_str(c))
                elif k == 1:
                    terms.append(f"{rat_str(c)}*y")
                else:
                    terms.append(f"{rat_str(c)}*y^{k}")
            return " + ".join(terms).replace("+ -", "- ")
        if self.den == P_ONE:
            return poly_str(self.num)
        return f"({poly_str(self.num)})/({poly_str(self.den)})"


RF_ONE = RationalFunc(P_ONE)
RF_ZERO = RationalFunc(P_ZERO)


class QDiffOperator:
    """Normal form sum_a x^a * f_a(y) with finitely many terms."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, RationalFunc]):
        self.terms = {a: f for a, f in terms.items() if not f.is_zero()}

    # -- constructors ---------------------------------------------------------
    @staticmethod
    def zero() -> "QDiffOperator":
        return QDiffOperator({})

    @staticmethod
    def identity() -> "QDiffOperator":
        return QDiffOperator({0: RF_ONE})

    @staticmethod
    def scalar(c) -> "QDiffOperator":
        return QDiffOperator({0: RationalFunc.const(c)})

    @staticmethod
    def x_power(a: int, coeff=Fraction(1)) -> "QDiffOperator":
        return QDiffOperator({a: RationalFunc.const(coeff)})

    @staticmethod
    def from_y(f: RationalFunc) -> "QDiffOperator":
        return QDiffOperator({0: f})

    @staticmethod
    def q_d(k: int) -> "QDiffOperator":
        """q^{kD} as an operator, i.e. y^k."""
        return QDiffOperator({0: RationalFunc.y_power(k)})

    # -- algebra ----------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, QDiffOperator):
            return NotImplemented
        return self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def add(self, other: "QDiffOperator") -> "QDiffOperator":
        out = dict(self.terms)
        for a, f in other.terms.items():
            out[a] = out[a].add(f) if a in out else f
        return QDiffOperator(out)

    def sub(self, other: "QDiffOperator") -> "QDiffOperator":
        return self.add(other.scale(-1))

    def scale(self, c) -> "QDiffOperator":
        return QDiffOperator({a: f.scale(c) for a, f in self.terms.items()})

    def mul(self, other: "QDiffOperator", ctx: QContext) -> "QDiffOperator":
        """Normal-form product via f(y) x^b = x^b f(q^b y)."""
        out: dict[int, RationalFunc] = {}
        for a, f in self.terms.items():
            for b, g in other.terms.items():
                h = f.arg_scale(q_int(ctx, b)).mul(g)
                c = a + b
                out[c] = out[c].add(h) if c in out else h
        return QDiffOperator(out)

    def min_shift(self) -> int | None:
        return min(self.terms) if self.terms else None

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"x^{a}*({self.terms[a].pretty()})" for a in sorted(self.terms))


def op_product(ctx: QContext, *ops: QDiffOperator) -> QDiffOperator:
    out = QDiffOperator.identity()
    for op in ops:
        out = out.mul(op, ctx)
    return out


def apply_op(ctx: QContext, op: QDiffOperator, s: LaurentSeries) -> LaurentSeries:
    """Act on a series: out_d = sum_a f_a(q^{d-a}) s_{d-a}, window-aware."""
    if not op.terms:
        return LaurentSeries.zero(s.bottom, s.top)
    shifts = sorted(op.terms)
    lo, hi = shifts[0], shifts[-1]
    bottom = s.bottom + lo
    top = None if s.top is None else s.top + lo
    out: dict[int, Fraction] = {}
    for a, f in op.terms.items():
        for d0, c in s.coeffs.items():
            d = d0 + a
            if top is not None and d > top:
                continue
            v = f.eval(q_int(ctx, d0)) * c
            if v != 0:
                out[d] = out.get(d, Fraction(0)) + v
    out = {d: v for d, v in out.items() if v != 0}
    return LaurentSeries(out, bottom, top)


def apply_exotic(ctx: QContext, c: Fraction, s: LaurentSeries) -> LaurentSeries:
    """Gaussian diagonal x^n -> q^{c (n - 1/2)^2} x^n; needs 2c integral."""
    c = Fraction(c)
    if (2 * c).denominator != 1:
        raise DegenerateParameterError(
            f"Gaussian exponent scale {c} is not an exact u-power (need 2c integral)")
    two_c = (2 * c).numerator

    def fn(n: int) -> Fraction:
        return ctx.u ** (two_c * (2 * n - 1) ** 2)

    return s.hadamard(fn)


def diag_inverse(f: RationalFunc) -> RationalFunc:
    return f.inverse()


def neumann_apply_inverse(ctx: QContext, op: QDiffOperator,
                          s: LaurentSeries) -> LaurentSeries:
    """(I + M)^{-1} s = sum_k (-M)^k s, where M = op - I strictly raises degree.

    The sum is finite on the window: every application of M raises the bottom
    by at least one, so terms stop contributing below the top.
    """
    m = op.sub(QDiffOperator.identity())
    if any(a < 1 for a in m.terms):
        raise OperatorStructureError(
            "Neumann inversion needs identity plus strictly raising terms")
    if s.top is None:
        raise OperatorStructureError("Neumann inversion needs a truncated series")
    m_neg = m.scale(-1)
    acc = s
    term = s
    while True:
        term = apply_op(ctx, m_neg, term)
        if not term.coeffs or min(term.coeffs) > s.top:
            break
        acc = acc.add(term.truncate(s.top))
    return LaurentSeries({d: v for d, v in acc.coeffs.items() if d <= s.top},
                         s.bottom, s.top)


def left_divide(op: QDiffOperator, d: RationalFunc, ctx: QContext
                ) -> tuple[QDiffOperator, bool]:
    """Solve d(y) * K = op for K; returns (K, clean).

    Term-wise, x^a f_a(y) = d(y) x^a k_a(y) forces k_a(y) = f_a(y) / d(q^a y).
    The clean flag reports whether every quotient reduced to a polynomial.
    """
    if d.is_zero():
        raise ZeroDivisionError("left division by the zero function")
    out: dict[int, RationalFunc] = {}
    clean = True
    for a, f in op.terms.items():
        k = f.divide(d.arg_scale(q_int(ctx, a)))
        out[a] = k
        if not k.is_polynomial():
            clean = False
    return QDiffOperator(out), clean


class SeriesOp:
    """Composite operator acting on series: rational steps, Neumann-inverted
    steps and Gaussian diagonals, written left to right in operator order."""

    __slots__ = ("steps",)

    def __init__(self, steps):
        self.steps = tuple(steps)

    def apply(self, ctx: QContext, s: LaurentSeries) -> LaurentSeries:
        for kind, payload in reversed(self.steps):
            if kind == "mul":
                s = apply_op(ctx, payload, s)
            elif kind == "inv":
                s = neumann_apply_inverse(ctx, payload, s)
            elif kind == "exotic":
                s = apply_exotic(ctx, payload, s)
            else:
                raise ValueError(f"unknown step kind {kind!r}")
        return s

    def pretty(self) -> str:
        parts = []
        for kind, payload in self.steps:
            if kind == "mul":
                parts.append(payload.pretty())
            elif kind == "inv":
                parts.append(f"[{payload.pretty()}]^-1")
            else:
                parts.append(f"gauss(q^({rat_str(payload)}*(D-1/2)^2))")
        return " . ".join(parts)


OperatorLike = QDiffOperator | SeriesOp


def op_apply(ctx: QContext, op: OperatorLike, s: LaurentSeries) -> LaurentSeries:
    if isinstance(op, SeriesOp):
        return op.apply(ctx, s)
    return apply_op(ctx, op, s)
