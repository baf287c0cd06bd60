"""Exact skew Schur evaluation on specialized alphabets.

Alphabets describe variable multisets symbolically (a principal geometric
family q^{1/2}, q^{3/2}, ..., a partition-shifted variant, or an explicit
finite list), optionally rescaled by a common factor and optionally dualized.
A dual alphabet reports elementary instead of complete homogeneous symmetric
functions, which is exactly what primed vertex operators consume.

The single evaluation path is the Jacobi-Trudi determinant over the h (or e)
coefficients; those coefficients come from closed-form generating series, so
every value is an exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import DegenerateParameterError, QContext, q_half
from .partitions import Partition, as_partition, conjugate, contains, length, part


@dataclass(frozen=True)
class Alphabet:
    kind: str  # 'principal' | 'shifted' | 'finite'
    shift: Partition = ()
    letters: tuple[Fraction, ...] = ()
    scale: Fraction = Fraction(1)
    dual: bool = False

    def __post_init__(self):
        if self.kind not in ("principal", "shifted", "finite"):
            raise ValueError(f"unknown alphabet kind {self.kind!r}")
        object.__setattr__(self, "shift", as_partition(self.shift))
        object.__setattr__(self, "letters", tuple(Fraction(x) for x in self.letters))
        object.__setattr__(self, "scale", Fraction(self.scale))

    def scaled(self, c) -> "Alphabet":
        return Alphabet(self.kind, self.shift, self.letters, self.scale * Fraction(c), self.dual)

    def dualized(self) -> "Alphabet":
        return Alphabet(self.kind, self.shift, self.letters, self.scale, not self.dual)


def principal(scale=Fraction(1), dual: bool = False) -> Alphabet:
    """The alphabet q^{1/2}, q^{3/2}, q^{5/2}, ... times scale."""
    return Alphabet("principal", scale=Fraction(scale), dual=dual)


def shifted(nu: Partition, scale=Fraction(1), dual: bool = False) -> Alphabet:
    """Letters q^{-nu_i + i - 1/2} (nu padded with zeros) times scale."""
    return Alphabet("shifted", shift=as_partition(nu), scale=Fraction(scale), dual=dual)


def finite(letters, scale=Fraction(1), dual: bool = False) -> Alphabet:
    return Alphabet("finite", letters=tuple(Fraction(x) for x in letters),
                    scale=Fraction(scale), dual=dual)


# ---------------------------------------------------------------------------
# h-series (coefficients of the generating function sum_k h_k z^k)

_h_cache: dict[tuple[Fraction, Alphabet], list[Fraction]] = {}


def _poly_mul(a: list[Fraction], b: list[Fraction], n: int) -> list[Fraction]:
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > n:
            continue
        for j, bj in enumerate(b):
            if i + j > n:
                break
            out[i + j] += ai * bj
    return out


def _series_div(num: list[Fraction], den: list[Fraction], n: int) -> list[Fraction]:
    # den[0] must be 1 for these alphabets
    assert den and den[0] == 1
    out = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        acc = num[k] if k < len(num) else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out[k] = acc
    return out


def _principal_h(ctx: QContext, scale: Fraction, dual: bool, n: int) -> list[Fraction]:
    qq = Fraction(1)
    out = [Fraction(1)]
    for k in range(1, n + 1):
        qq *= 1 - q_half(ctx, 2 * k)  # (q;q)_k built incrementally
        if dual:
            out.append(scale**k * q_half(ctx, k * k) / qq)
        else:
            out.append(scale**k * q_half(ctx, k) / qq)
    return out


def _letter_value(ctx: QContext, A: Alphabet, i: int) -> Fraction:
    # i-th letter (1-based) before the common scale
    if A.kind == "shifted":
        return ctx.u ** (8 * (i - part(A.shift, i)) - 4)
    raise ValueError("letter access is only defined for shifted alphabets")


def _h_list(ctx: QContext, A: Alphabet, n: int) -> list[Fraction]:
    key = (ctx.u, A)
    cached = _h_cache.get(key)
    if cached is not None and len(cached) > n:
        return cached
    s = A.scale
    if A.kind == "principal":
        out = _principal_h(ctx, s, A.dual, n)
    elif A.kind == "shifted":
        base = _principal_h(ctx, s, A.dual, n)
        sign = Fraction(-1) if not A.dual else Fraction(1)
        # finite correction: shifted letters replace the first len(shift) principal ones
        plain = [Fraction(1)]
        moved = [Fraction(1)]
        for i in range(1, length(A.shift) + 1):
            orig = s * ctx.u ** (8 * i - 4)
            new = s * _letter_value(ctx, A, i)
            plain = _poly_mul(plain, [Fraction(1), sign * orig], n)
            moved = _poly_mul(moved, [Fraction(1), sign * new], n)
        if A.dual:
            num, den = moved, plain
        else:
            num, den = plain, moved
        out = _series_div(_poly_mul(base, num, n), den, n)
    else:
        if A.dual:
            poly = [Fraction(1)]
            for a in A.letters:
                poly = _poly_mul(poly, [Fraction(1), s * a], n)
            out = poly + [Fraction(0)] * (n + 1 - len(poly))
        else:
            den = [Fraction(1)]
            for a in A.letters:
                den = _poly_mul(den, [Fraction(1), -s * a], n)
            out = _series_div([Fraction(1)], den, n)
    _h_cache[key] = out
    return out


def complete_h(ctx: QContext, A: Alphabet, k: int) -> Fraction:
    """h_k of the alphabet (e_k of its letters when the alphabet is dual)."""
    if k < 0:
        return Fraction(0)
    return _h_list(ctx, A, k)[k]


def power_sum(ctx: QContext, A: Alphabet, k: int) -> Fraction:
    """p_k = sum of k-th powers of the letters (dual flag is irrelevant here)."""
    if k < 1:
        raise ValueError("power sums need k >= 1")
    s = A.scale ** k
    if A.kind == "finite":
        return s * sum((a**k for a in A.letters), Fraction(0))
    qk = q_half(ctx, 2 * k)
    if qk == 1:
        raise DegenerateParameterError(f"q^{k} = 1 at u={ctx.u}")
    principal_part = q_half(ctx, k) / (1 - qk)
    if A.kind == "principal":
        return s * principal_part
    corr = Fraction(0)
    for i in range(1, length(A.shift) + 1):
        corr += _letter_value(ctx, A, i) ** k - ctx.u ** ((8 * i - 4) * k)
    return s * (principal_part + corr)


# ---------------------------------------------------------------------------
# Jacobi-Trudi

def det(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    m = [row[:] for row in rows]
    sign = 1
    out = Fraction(1)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        p = m[col][col]
        out *= p
        for r in range(col + 1, n):
            if m[r][col] != 0:
                factor = m[r][col] / p
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return out * sign


_skew_cache: dict[tuple[Fraction, Partition, Partition, Alphabet], Fraction] = {}


def skew_schur(ctx: QContext, lam: Partition, eta: Partition, A: Alphabet) -> Fraction:
    """Jacobi-Trudi evaluation of the skew Schur function.

    For a dual alphabet the same determinant over e-coefficients yields the
    conjugate-shape skew Schur of the underlying letters, which is the matrix
    element primed vertex operators need.
    """
    lam = as_partition(lam)
    eta = as_partition(eta)
    if not contains(lam, eta):
        return Fraction(0)
    if lam == eta:
        return Fraction(1)
    key = (ctx.u, lam, eta, A)
    hit = _skew_cache.get(key)
    if hit is not None:
        return hit
    r = length(lam)
    hs = _h_list(ctx, A, lam[0] + r)
    rows = []
    for i in range(1, r + 1):
        row = []
        for j in range(1, r + 1):
            k = part(lam, i) - part(eta, j) - i + j
            row.append(hs[k] if 0 <= k < len(hs) else Fraction(0))
        rows.append(row)
    val = det(rows)
    _skew_cache[key] = val
    return val


def schur(ctx: QContext, lam: Partition, A: Alphabet) -> Fraction:
    return skew_schur(ctx, lam, (), A)


def cauchy_check(ctx: QContext, finite_letters, max_weight: int) -> bool:
    """Truncated two-sided Cauchy sum against the product side.

    Left side sums s_{conj(beta)}(letters) * s_{conj(beta)}(principal) over
    |beta| <= max_weight; right side expands the product of per-letter
    h-series to the same total degree in the letters.
    """
    from .partitions import enumerate_partitions

    letters = [Fraction(x) for x in finite_letters]
    X = finite(letters)
    P = principal()
    lhs = Fraction(0)
    for beta in enumerate_partitions(max_weight):
        tb = conjugate(beta)
        lhs += schur(ctx, tb, X) * schur(ctx, tb, P)
    hs = _h_list(ctx, P, max_weight)

    def rhs(i: int, budget: int) -> Fraction:
        if i == len(letters):
            return Fraction(1)
        acc = Fraction(0)
        xpow = Fraction(1)
        for k in range(budget + 1):
            acc += hs[k] * xpow * rhs(i + 1, budget - k)
            xpow *= letters[i]
        return acc

    return lhs == rhs(0, max_weight)
