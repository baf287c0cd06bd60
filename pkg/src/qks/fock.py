"""Truncated charge-zero fermionic Fock space over partition basis states.

States are exact linear combinations of partition vectors below a weight
cutoff.  Vertex operators act through skew Schur coefficients, diagonal
operators through explicit eigenvalue functions; every bracket expression in
scope reduces to pipelines of these two kinds of steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .arith import (
    CutoffInstabilityError,
    DegenerateParameterError,
    QContext,
    q_int,
)
from .partitions import (
    Partition,
    as_partition,
    contains,
    contents,
    enumerate_partitions,
    kappa,
    weight,
)
from .schur import Alphabet, skew_schur


class FockState:
    """Exact linear combination of partition vectors of weight <= cutoff."""

    __slots__ = ("amplitudes", "cutoff", "truncated")

    def __init__(self, amplitudes: dict[Partition, Fraction], cutoff: int,
                 truncated: bool = False):
        self.amplitudes = {lam: c for lam, c in amplitudes.items() if c != 0}
        self.cutoff = cutoff
        self.truncated = truncated

    @staticmethod
    def vacuum(cutoff: int) -> "FockState":
        return FockState({(): Fraction(1)}, cutoff)

    @staticmethod
    def basis(lam: Partition, cutoff: int) -> "FockState":
        lam = as_partition(lam)
        if weight(lam) > cutoff:
            raise ValueError(f"basis state {lam} exceeds cutoff {cutoff}")
        return FockState({lam: Fraction(1)}, cutoff)

    def coefficient(self, lam: Partition) -> Fraction:
        return self.amplitudes.get(as_partition(lam), Fraction(0))


@dataclass(frozen=True)
class GammaStep:
    """A vertex-operator step: creation adds strips, annihilation removes them;
    primed steps act through conjugate shapes."""
    creation: bool
    primed: bool
    alphabet: Alphabet


@dataclass(frozen=True)
class DiagStep:
    """A diagonal step |lam> -> eigenvalue(lam) |lam>."""
    eigenvalue: Callable[[Partition], Fraction]
    label: str = ""


PipelineStep = GammaStep | DiagStep


def apply_gamma(ctx: QContext, state: FockState, creation: bool, primed: bool,
                alphabet: Alphabet) -> FockState:
    """Apply a vertex operator to a state.

    Creation sends |mu> to sum over lam containing mu weighted by the skew
    Schur value of lam/mu (conjugated shapes when primed); annihilation is the
    transpose and lowers weight.
    """
    A = alphabet.dualized() if primed else alphabet
    out: dict[Partition, Fraction] = {}
    if creation:
        for lam in enumerate_partitions(state.cutoff):
            acc = Fraction(0)
            for mu, c in state.amplitudes.items():
                if contains(lam, mu):
                    acc += skew_schur(ctx, lam, mu, A) * c
            if acc != 0:
                out[lam] = acc
        return FockState(out, state.cutoff, truncated=True)
    for lam, c in state.amplitudes.items():
        for mu in enumerate_partitions(weight(lam)):
            if contains(lam, mu):
                s = skew_schur(ctx, lam, mu, A)
                if s != 0:
                    out[mu] = out.get(mu, Fraction(0)) + s * c
    return FockState(out, state.cutoff, truncated=state.truncated)


def apply_diag(state: FockState, op: DiagStep) -> FockState:
    out = {lam: op.eigenvalue(lam) * c for lam, c in state.amplitudes.items()}
    return FockState(out, state.cutoff, state.truncated)


def diag_L0(Q: Fraction) -> DiagStep:
    """Weight operator: eigenvalue Q^{|lam|}."""
    Q = Fraction(Q)
    return DiagStep(lambda lam: Q ** weight(lam), label=f"L0({Q})")


def diag_K(ctx: QContext, c: Fraction) -> DiagStep:
    """Eigenvalue q^{c*kappa(lam)}; c must keep the exponent an exact u-power."""
    c = Fraction(c)
    def eig(lam: Partition) -> Fraction:
        e = 8 * c * kappa(lam)
        if e.denominator != 1:
            raise DegenerateParameterError(
                f"q^({c}*kappa) is not an exact u-power for kappa={kappa(lam)}")
        return ctx.u ** e.numerator
    return DiagStep(eig, label=f"K({c})")


def diag_contents(rfunc: Callable[[int], Fraction]) -> DiagStep:
    """Contents-product diagonal: eigenvalue prod over cells of r(content + 1)."""
    def eig(lam: Partition) -> Fraction:
        out = Fraction(1)
        for c in contents(lam):
            out *= rfunc(c + 1)
        return out
    return DiagStep(eig, label="contents")


def contents_plus(ctx: QContext, mu: Partition, Q: Fraction) -> Fraction:
    """prod over cells of mu of (1 - Q q^{content})."""
    out = Fraction(1)
    for c in contents(mu):
        out *= 1 - Q * q_int(ctx, c)
    return out


def contents_minus(ctx: QContext, mu: Partition, Q: Fraction) -> Fraction:
    """prod over cells of mu of (1 - Q q^{-content})."""
    out = Fraction(1)
    for c in contents(mu):
        out *= 1 - Q * q_int(ctx, -c)
    return out


def quotient_product(ctx: QContext, lam: Partition, Q: Fraction) -> Fraction:
    """Telescoped value of prod_{i,j>=1} (1 - Q q^{-lam_i+i+j-1}) / (1 - Q q^{i+j-1}).

    Per row i the semi-infinite j-product collapses to the finite window
    m = i - lam_i .. i - 1.
    """
    out = Fraction(1)
    for i, p in enumerate(lam, start=1):
        for m in range(i - p, i):
            out *= 1 - Q * q_int(ctx, m)
    return out


def pair_quotient_product(ctx: QContext, lam: Partition, mu: Partition,
                          Q: Fraction) -> Fraction:
    """Normalized two-partition double product.

    Value of prod_{i,j>=1} (1 - Q q^{-lam_i-mu_j+i+j-1}) divided by its value
    at lam = mu = empty.  The double product splits at i <= len(lam),
    j <= len(mu); both semi-infinite tails telescope row-wise as in
    quotient_product, the head block is finite.
    """
    a, b = len(lam), len(mu)
    out = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            out *= (1 - Q * q_int(ctx, -lam[i - 1] - mu[j - 1] + i + j - 1))
            denom = 1 - Q * q_int(ctx, i + j - 1)
            if denom == 0:
                raise DegenerateParameterError(f"1 - Q q^{i+j-1} = 0 in pair product")
            out /= denom
    for i in range(1, a + 1):
        for m in range(i + b - lam[i - 1], i + b):
            out *= 1 - Q * q_int(ctx, m)
    for j in range(1, b + 1):
        for m in range(j + a - mu[j - 1], j + a):
            out *= 1 - Q * q_int(ctx, m)
    return out


def run_pipeline(ctx: QContext, pipeline: list[PipelineStep], ket: Partition,
                 cutoff: int) -> FockState:
    """Apply pipeline steps (written bra-to-ket order) to |ket>."""
    state = FockState.basis(ket, cutoff)
    for step in reversed(pipeline):
        if isinstance(step, DiagStep):
            state = apply_diag(state, step)
        else:
            state = apply_gamma(ctx, state, step.creation, step.primed, step.alphabet)
    return state


def matrix_element(ctx: QContext, bra: Partition, pipeline: list[PipelineStep],
                   ket: Partition, cutoff: int, check_stability: bool = True) -> Fraction:
    """Exact <bra| steps |ket> within the weight cutoff.

    With check_stability the bracket is recomputed at cutoff + 2 and the two
    values must agree, catching cutoffs too small for the requested
    coefficient.  Disable it only for brackets that are intentionally
    truncated (e.g. geometric series from annihilation/creation pairs).
    """
    bra = as_partition(bra)
    ket = as_partition(ket)
    if cutoff < max(weight(bra), weight(ket)):
        raise ValueError("cutoff must cover both boundary partitions")
    value = run_pipeline(ctx, pipeline, ket, cutoff).coefficient(bra)
    if check_stability:
        again = run_pipeline(ctx, pipeline, ket, cutoff + 2).coefficient(bra)
        if again != value:
            raise CutoffInstabilityError(
                f"bracket changed from {value} to {again} when cutoff {cutoff} -> {cutoff + 2}")
    return value
