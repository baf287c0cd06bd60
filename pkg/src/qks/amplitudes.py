"""Normalized open-string amplitudes in closed form and through Fock pipelines.

Covered geometries: the single vertex, the resolved conifold (as a calibrated
two-vertex strip), general strip chains with vertical and end legs, and the
closed topological vertex with two brane legs.  Everything is normalized by
the empty-partition amplitude, so all values are exact rationals.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import DegenerateParameterError, QContext, q_half
from .fock import (
    DiagStep,
    GammaStep,
    contents_minus,
    contents_plus,
    matrix_element,
    quotient_product,
)
from .geom import (
    C3Geometry,
    ConifoldGeometry,
    CtvGeometry,
    CtvSpec,
    Geometry,
    StripEndGeometry,
    StripSpec,
    StripVerticalGeometry,
)
from .partitions import (
    Partition,
    as_partition,
    conjugate,
    contains,
    enumerate_partitions,
    kappa,
    weight,
)
from .schur import principal, schur, shifted, skew_schur


def vertex_C(ctx: QContext, lam: Partition, mu: Partition, nu: Partition) -> Fraction:
    """Single topological vertex C_{lam,mu,nu}.

    q^{kappa(mu)/2} * s_{conj(nu)}(principal) * sum over eta of skew Schur
    values on the nu-shifted alphabets; eta runs over partitions inside both
    conj(lam) and mu.
    """
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    tl = conjugate(lam)
    tn = conjugate(nu)
    a_nu = shifted(nu)
    a_tnu = shifted(tn)
    acc = Fraction(0)
    for eta in enumerate_partitions(min(weight(tl), weight(mu))):
        if contains(tl, eta) and contains(mu, eta):
            acc += skew_schur(ctx, tl, eta, a_nu) * skew_schur(ctx, mu, eta, a_tnu)
    return q_half(ctx, kappa(mu)) * schur(ctx, tn, principal()) * acc


def _power_factor(value: Fraction, exponent: int) -> Fraction:
    if exponent == 1:
        return value
    if value == 0:
        raise DegenerateParameterError("vanishing factor raised to a negative power")
    return 1 / value


def strip_vertical_normalized(ctx: QContext, spec: StripSpec, n: int,
                              beta: Partition) -> Fraction:
    """Closed-form normalized amplitude for the n-th vertical leg.

    s_{conj(beta)}(principal) times one telescoped quotient product per other
    vertex; which conjugate enters depends on the sign pattern.
    """
    beta = as_partition(beta)
    if not 1 <= n <= spec.n_vertices:
        raise ValueError(f"leg {n} outside 1..{spec.n_vertices}")
    sig_n = spec.sigma[n - 1]
    beta_n = beta if sig_n == 1 else conjugate(beta)
    out = schur(ctx, conjugate(beta), principal())
    for m in range(1, spec.n_vertices + 1):
        if m == n:
            continue
        sig_m = spec.sigma[m - 1]
        base = beta_n if m < n else conjugate(beta_n)
        out *= _power_factor(quotient_product(ctx, base, spec.Q(m, n)),
                             -sig_m * sig_n)
    return out


def strip_h_diag(ctx: QContext, spec: StripSpec, n: int) -> DiagStep:
    """Diagonal operator whose bracket against a principal creation step
    reproduces the vertical-leg amplitudes (the Fock oracle route)."""
    sig_n = spec.sigma[n - 1]

    def eig(mu: Partition) -> Fraction:
        out = Fraction(1)
        for m in range(1, spec.n_vertices + 1):
            if m == n:
                continue
            sig_m = spec.sigma[m - 1]
            Q = spec.Q(m, n)
            if sig_n == 1:
                v = contents_plus(ctx, mu, Q) if m < n else contents_minus(ctx, mu, Q)
                out *= _power_factor(v, -sig_m)
            else:
                v = contents_minus(ctx, mu, Q) if m < n else contents_plus(ctx, mu, Q)
                out *= _power_factor(v, sig_m)
        return out

    return DiagStep(eig, label=f"strip-h(n={n})")


def strip_vertical_oracle(ctx: QContext, spec: StripSpec, n: int, beta: Partition,
                          cutoff: int | None = None) -> Fraction:
    """Fock-pipeline evaluation <conj(beta)| h Gamma_-(principal) |0>."""
    beta = as_partition(beta)
    if cutoff is None:
        cutoff = weight(beta)
    pipeline = [strip_h_diag(ctx, spec, n),
                GammaStep(creation=True, primed=False, alphabet=principal())]
    return matrix_element(ctx, conjugate(beta), pipeline, (), cutoff)


def _k_diag(ctx: QContext, c: Fraction) -> DiagStep:
    from .fock import diag_K
    return diag_K(ctx, c)


def strip_end_left_pipeline(ctx: QContext, spec: StripSpec) -> list:
    """Reduced left-end pipeline: framing diagonal, then one creation step per
    vertex with edge-scaled principal alphabets."""
    s1 = spec.sigma[0]
    steps = [_k_diag(ctx, Fraction(-(1 - s1), 4)),
             GammaStep(creation=True, primed=(s1 < 0), alphabet=principal())]
    for n in range(2, spec.n_vertices + 1):
        sn = spec.sigma[n - 1]
        scale = s1 * sn * spec.Q(1, n)
        steps.append(GammaStep(creation=True, primed=(sn < 0),
                               alphabet=principal(scale=scale)))
    return steps


def strip_end_right_pipeline(ctx: QContext, spec: StripSpec) -> list:
    """Direct right-end pipeline built from annihilation steps."""
    N = spec.n_vertices
    sN = spec.sigma[N - 1]
    steps = []
    for n in range(1, N):
        sn = spec.sigma[n - 1]
        scale = sn * sN * spec.Q(n, N)
        steps.append(GammaStep(creation=False, primed=(sn < 0),
                               alphabet=principal(scale=scale)))
    steps.append(GammaStep(creation=False, primed=(sN < 0), alphabet=principal()))
    steps.append(_k_diag(ctx, Fraction(1 + sN, 4)))
    return steps


def strip_end_normalized(ctx: QContext, spec: StripSpec, end: str, alpha: Partition,
                         cutoff: int | None = None) -> Fraction:
    """Normalized amplitude on the leftmost or rightmost leg.

    The right end is evaluated through the 180-degree rotation of the strip
    and cross-checked against the direct annihilation pipeline; a mismatch
    raises, since the two must agree identically.
    """
    alpha = as_partition(alpha)
    if cutoff is None:
        cutoff = weight(alpha)
    if end == "left":
        return matrix_element(ctx, conjugate(alpha),
                              strip_end_left_pipeline(ctx, spec), (), cutoff)
    if end != "right":
        raise ValueError("end must be 'left' or 'right'")
    rotated = matrix_element(ctx, conjugate(alpha),
                             strip_end_left_pipeline(ctx, spec.rotated()), (), cutoff)
    direct = matrix_element(ctx, (), strip_end_right_pipeline(ctx, spec),
                            alpha, cutoff)
    if rotated != direct:
        raise AssertionError(
            f"rotated and direct right-end amplitudes disagree: {rotated} vs {direct}")
    return rotated


def _inv_contents_plus(ctx: QContext, Q: Fraction) -> DiagStep:
    def eig(mu: Partition) -> Fraction:
        v = contents_plus(ctx, mu, Q)
        if v == 0:
            raise DegenerateParameterError("contents product vanished under inversion")
        return 1 / v
    return DiagStep(eig, label="inv-contents-plus")


def _inv_contents_minus(ctx: QContext, Q: Fraction) -> DiagStep:
    def eig(mu: Partition) -> Fraction:
        v = contents_minus(ctx, mu, Q)
        if v == 0:
            raise DegenerateParameterError("contents product vanished under inversion")
        return 1 / v
    return DiagStep(eig, label="inv-contents-minus")


def ctv_leg1_pipeline(ctx: QContext, spec: CtvSpec) -> list:
    q1, q2, q3 = spec.q1, spec.q2, spec.q3
    return [
        _inv_contents_plus(ctx, q1 * q2),
        GammaStep(creation=True, primed=False, alphabet=principal()),
        GammaStep(creation=True, primed=True, alphabet=principal(scale=-q1)),
        GammaStep(creation=True, primed=False, alphabet=principal(scale=q1 * q3)),
        GammaStep(creation=True, primed=True, alphabet=principal(scale=-q1 * q2 * q3)),
    ]


def ctv_leg2_pipeline(ctx: QContext, spec: CtvSpec) -> list:
    q1, q2, q3 = spec.q1, spec.q2, spec.q3
    return [
        GammaStep(creation=False, primed=False, alphabet=principal(scale=-q1 * q2 * q3)),
        GammaStep(creation=False, primed=True, alphabet=principal(scale=q2 * q3)),
        GammaStep(creation=False, primed=False, alphabet=principal(scale=-q2)),
        GammaStep(creation=False, primed=True, alphabet=principal()),
        _inv_contents_minus(ctx, q1 * q2),
        _k_diag(ctx, Fraction(-1, 2)),
    ]


def ctv_leg2_transposed_pipeline(ctx: QContext, spec: CtvSpec) -> list:
    """Transpose of the leg-2 pipeline, acting from the vacuum side."""
    q1, q2, q3 = spec.q1, spec.q2, spec.q3
    return [
        _k_diag(ctx, Fraction(-1, 2)),
        _inv_contents_minus(ctx, q1 * q2),
        GammaStep(creation=True, primed=True, alphabet=principal()),
        GammaStep(creation=True, primed=False, alphabet=principal(scale=-q2)),
        GammaStep(creation=True, primed=True, alphabet=principal(scale=q2 * q3)),
        GammaStep(creation=True, primed=False, alphabet=principal(scale=-q1 * q2 * q3)),
    ]


def ctv_normalized(ctx: QContext, spec: CtvSpec, leg: int, beta: Partition,
                   cutoff: int | None = None) -> Fraction:
    """Normalized closed-topological-vertex amplitude on leg 1 or 2."""
    beta = as_partition(beta)
    if cutoff is None:
        cutoff = weight(beta)
    tb = conjugate(beta)
    if leg == 1:
        return matrix_element(ctx, tb, ctv_leg1_pipeline(ctx, spec), (), cutoff)
    if leg == 2:
        return matrix_element(ctx, (), ctv_leg2_pipeline(ctx, spec), tb, cutoff)
    raise ValueError("leg must be 1 or 2")


def tau_schur_coefficients(ctx: QContext, geometry: Geometry, max_weight: int,
                           cutoff: int | None = None) -> dict[Partition, Fraction]:
    """Schur coefficients beta -> Z_beta/Z of the generating function."""
    if max_weight < 0:
        raise ValueError("max_weight must be >= 0")
    out: dict[Partition, Fraction] = {}
    for beta in enumerate_partitions(max_weight):
        if isinstance(geometry, C3Geometry):
            val = schur(ctx, conjugate(beta), principal())
        elif isinstance(geometry, ConifoldGeometry):
            val = schur(ctx, conjugate(beta), principal()) * \
                quotient_product(ctx, beta, geometry.Q)
        elif isinstance(geometry, StripVerticalGeometry):
            val = strip_vertical_normalized(ctx, geometry.spec, geometry.leg, beta)
        elif isinstance(geometry, StripEndGeometry):
            val = strip_end_normalized(ctx, geometry.spec, geometry.end, beta, cutoff)
        elif isinstance(geometry, CtvGeometry):
            val = ctv_normalized(ctx, geometry.spec, geometry.leg, beta, cutoff)
        else:
            raise ValueError(f"unknown geometry {geometry!r}")
        out[beta] = val
    return out
