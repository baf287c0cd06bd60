"""Geometry descriptors shared by the amplitude, basis and Grassmannian layers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partitions import Partition


@dataclass(frozen=True)
class StripSpec:
    """A chain of N vertices with signs sigma_n = +-1 and N-1 edge parameters.

    The edge product Q(m, n) multiplies the parameters strictly between
    vertices m and n; it is derived on demand, never stored.
    """

    sigma: tuple[int, ...]
    kahler: tuple[Fraction, ...] = ()

    def __post_init__(self):
        sigma = tuple(int(s) for s in self.sigma)
        if not sigma or any(s not in (1, -1) for s in sigma):
            raise ValueError(f"sigma must be a nonempty tuple of +-1: {sigma}")
        kahler = tuple(Fraction(x) for x in self.kahler)
        if len(kahler) != len(sigma) - 1:
            raise ValueError("need exactly N-1 Kahler parameters")
        if any(x == 0 for x in kahler):
            raise ValueError("Kahler parameters must be nonzero")
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "kahler", kahler)

    @property
    def n_vertices(self) -> int:
        return len(self.sigma)

    def Q(self, m: int, n: int) -> Fraction:
        """Product of edge parameters between vertices m and n (1-based)."""
        lo, hi = min(m, n), max(m, n)
        if not (1 <= lo and hi <= self.n_vertices and lo != hi):
            raise ValueError(f"invalid vertex pair ({m}, {n})")
        out = Fraction(1)
        for k in range(lo, hi):
            out *= self.kahler[k - 1]
        return out

    def rotated(self) -> "StripSpec":
        """The strip read from the other end: signs flip, edges reverse."""
        return StripSpec(tuple(-s for s in reversed(self.sigma)),
                         tuple(reversed(self.kahler)))


@dataclass(frozen=True)
class CtvSpec:
    """Closed topological vertex: three internal lines."""

    q1: Fraction
    q2: Fraction
    q3: Fraction

    def __post_init__(self):
        for name in ("q1", "q2", "q3"):
            v = Fraction(getattr(self, name))
            if v == 0:
                raise ValueError("Kahler parameters must be nonzero")
            object.__setattr__(self, name, v)


@dataclass(frozen=True)
class C3Geometry:
    pass


@dataclass(frozen=True)
class ConifoldGeometry:
    Q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "Q", Fraction(self.Q))


@dataclass(frozen=True)
class StripVerticalGeometry:
    spec: StripSpec
    leg: int  # 1..N

    def __post_init__(self):
        if not 1 <= self.leg <= self.spec.n_vertices:
            raise ValueError(f"leg {self.leg} outside 1..{self.spec.n_vertices}")


@dataclass(frozen=True)
class StripEndGeometry:
    spec: StripSpec
    end: str  # 'left' | 'right'

    def __post_init__(self):
        if self.end not in ("left", "right"):
            raise ValueError("end must be 'left' or 'right'")


@dataclass(frozen=True)
class CtvGeometry:
    spec: CtvSpec
    leg: int  # 1 | 2

    def __post_init__(self):
        if self.leg not in (1, 2):
            raise ValueError("leg must be 1 or 2")


Geometry = C3Geometry | ConifoldGeometry | StripVerticalGeometry | StripEndGeometry | CtvGeometry


def conifold_strip(Q: Fraction) -> StripVerticalGeometry:
    """The two-vertex strip and leg that reproduce the resolved-conifold
    amplitudes; the sign pattern is pinned by the amplitude tests."""
    return StripVerticalGeometry(StripSpec((-1, 1), (Fraction(Q),)), 1)
