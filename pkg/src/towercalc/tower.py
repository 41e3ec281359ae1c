"""Connectivity, convergence, degree and rank formulas for the embedding tower.

All functions take the ambient dimension n, the CW/handle dimension bound k
and the stage j, subject to the standing hypothesis n - k >= 3, and return
plain integers or booleans. Connectivities are reported verbatim even when
they drop to -2 or below (the empty-space convention); use
:func:`connectivity_note` to flag such values instead of clamping them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from .errors import NotApplicableError
from .hilton import GradedRankTable


@dataclass(frozen=True)
class TowerParams:
    """Validated (n, k, j) with optional finite-set size t."""

    n: int
    k: int
    j: int = 1
    t: int | None = None

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError("ambient dimension n must be >= 3")
        if self.k < 0:
            raise ValueError("dimension bound k must be >= 0")
        if self.n - self.k < 3:
            raise ValueError("standing hypothesis n - k >= 3 violated")
        if self.j < 1:
            raise ValueError("tower stage j must be >= 1")
        if self.t is not None and self.t < 1:
            raise ValueError("finite-set size t must be >= 1")


@dataclass(frozen=True)
class BettiVector:
    """Finitely supported rational Betti numbers with a dimension bound.

    ``entries[0] >= 1`` (nonempty space) and entries vanish above the bound.
    """

    entries: dict[int, int] = field(default_factory=dict)
    dimension_bound: int | None = None

    def __post_init__(self) -> None:
        cleaned = {}
        for d, b in self.entries.items():
            if d < 0:
                raise ValueError("negative degree in Betti vector")
            if b < 0:
                raise ValueError("negative Betti number")
            if b:
                cleaned[int(d)] = int(b)
        if cleaned.get(0, 0) < 1:
            raise ValueError("b[0] >= 1 is required (the space is nonempty)")
        bound = self.dimension_bound
        top = max(cleaned)
        if bound is None:
            bound = top
        elif top > bound:
            raise ValueError(f"entry in degree {top} exceeds the dimension bound {bound}")
        object.__setattr__(self, "entries", dict(sorted(cleaned.items())))
        object.__setattr__(self, "dimension_bound", int(bound))

    @classmethod
    def from_points(cls, t: int) -> "BettiVector":
        if t < 1:
            raise ValueError("need at least one point")
        return cls({0: t}, 0)

    def coefficients(self) -> list[int]:
        """Poincare polynomial coefficients [b_0, ..., b_bound]."""
        return [self.entries.get(d, 0) for d in range(self.dimension_bound + 1)]


def connectivity_note(value: int) -> str | None:
    """NOTE text for connectivities at or below the empty-space value -2."""
    if value <= -2:
        return "at or below -2 (empty-space connectivity); reported verbatim"
    return None


def phi_connectivity(n: int, k: int, j: int) -> int:
    """Connectivity of the comparison map into stage j:  2 - n + (j+1)(n-k-2).

    >>> phi_connectivity(9, 4, 2)
    2
    """
    TowerParams(n, k, j)
    return 2 - n + (j + 1) * (n - k - 2)


def stage_map_connectivity(n: int, k: int, j: int) -> int:
    """Connectivity of the stage map from level j to level j-1 (j >= 2):
    2 - n + j(n-k-2); equal to phi_connectivity at stage j-1."""
    TowerParams(n, k, j)
    if j < 2:
        raise ValueError("stage maps need j >= 2")
    return 2 - n + j * (n - k - 2)


def convergence_check(n: int, k: int, j: int) -> bool:
    """Whether (j+1)k + 2j <= jn, the range where stage-j nonemptiness
    propagates to the full tower."""
    TowerParams(n, k, j)
    return (j + 1) * k + 2 * j <= j * n


def codim_check(boundary_map_connectivity: int, cw_dim: int, n: int) -> bool:
    """Certify homotopy codimension >= n - cw_dim.

    Applicable only when n - cw_dim >= 3 (otherwise NotApplicableError,
    deliberately distinct from False); then the certificate is that the
    boundary inclusion is at least 2-connected while the space has CW
    dimension <= cw_dim.
    """
    if n - cw_dim < 3:
        raise NotApplicableError(
            f"codimension certificate needs n - k >= 3, got {n - cw_dim}"
        )
    return boundary_map_connectivity >= 2


def obstruction_degree(n: int, j: int) -> int:
    """Cohomological degree housing the stage-j extension obstruction:
    (n-2)(j-1) + 1, for j >= 2.

    >>> obstruction_degree(9, 3)
    15
    """
    if j < 2:
        raise ValueError("obstructions live at stages j >= 2")
    TowerParams(n, 0, j)
    return (n - 2) * (j - 1) + 1


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_power(coeffs: list[int], j: int) -> list[int]:
    out = [1]
    for _ in range(j):
        out = _poly_mul(out, coeffs)
    return out


def kunneth_power(b: BettiVector, j: int) -> list[int]:
    """Betti numbers of the j-fold product: the j-th power of the Poincare
    polynomial, coefficient list indexed by degree."""
    if j < 1:
        raise ValueError("need j >= 1")
    return _poly_power(b.coefficients(), j)


def obstruction_group_rank(b: BettiVector, n: int, j: int) -> int:
    """Rank of the group detecting the stage-j obstruction:
    (j-1)! times the rank of the product space's rational cohomology in the
    obstruction degree."""
    s = obstruction_degree(n, j)
    power = kunneth_power(b, j)
    coeff = power[s] if s < len(power) else 0
    return factorial(j - 1) * coeff


def _as_betti(b) -> BettiVector:
    if isinstance(b, BettiVector):
        return b
    if isinstance(b, int):
        return BettiVector.from_points(b)
    raise TypeError("expected a BettiVector or a point count")


@dataclass(frozen=True)
class LayerProfile:
    """Unequivariant rational rank table of a tower layer's mapping spectrum.

    Computed before homotopy orbits, so every entry is an upper bound for
    the rank of the actual layer (coinvariants cannot exceed the ambient
    rank); ``bound_kind`` records that.
    """

    table: GradedRankTable
    top_degree: int
    copies: int
    bound_kind: str = "UPPER_BOUND"


def layer_profile(b, n: int, j: int, q_range: tuple[int, int] | None = None) -> LayerProfile:
    """Rank profile of the stage-j layer before homotopy orbits.

    The target spectrum is, unequivariantly, a wedge of (j-1)! spheres of
    dimension (n-1)(j-1) + (1-j) = (j-1)(n-2), so the rank in degree q is
    (j-1)! times the degree-((j-1)(n-2) - q) cohomology rank of the j-fold
    product. ``b`` is a BettiVector, or an integer meaning that many points.

    >>> layer_profile(2, 4, 2).table.entries
    {2: 4}
    """
    if j < 2:
        raise ValueError("layers exist for stages j >= 2")
    TowerParams(n, 0, j)
    betti = _as_betti(b)
    top = (j - 1) * (n - 2)
    power = kunneth_power(betti, j)
    if q_range is None:
        q_range = (top - (len(power) - 1), top)
    lo, hi = q_range
    copies = factorial(j - 1)
    entries = {}
    for q in range(lo, hi + 1):
        s = top - q
        coeff = power[s] if 0 <= s < len(power) else 0
        if coeff:
            entries[q] = copies * coeff
    return LayerProfile(GradedRankTable(entries, lo, hi), top, copies)


@dataclass(frozen=True)
class ComparisonConnectivities:
    """Connectivities of the maps comparing the tower with the smooth one.

    ``pt``            compression of embeddings into normal invariants,
    ``decompression`` embeddings into unlinked embeddings one dimension up,
    ``a``             the layerwise scanning comparison,
    ``b_raw``         the stabilization map before the handle-dimension
                      correction, with ``b = b_raw - j*k``,
    ``e``             the diagonal-constraint relaxation.
    """

    pt: int
    decompression: int
    a: int
    b_raw: int
    b: int
    e: int

    def as_dict(self) -> dict[str, int]:
        return {
            "pt": self.pt,
            "decompression": self.decompression,
            "a": self.a,
            "b_raw": self.b_raw,
            "b": self.b,
            "e": self.e,
        }


def comparison_connectivities(n: int, k: int, j: int) -> ComparisonConnectivities:
    """All comparison-map connectivities at stage j >= 2.

    >>> comparison_connectivities(9, 4, 3).as_dict()
    {'pt': 0, 'decompression': 2, 'a': 1, 'b_raw': 21, 'b': 9, 'e': 9}
    """
    TowerParams(n, k, j)
    if j < 2:
        raise ValueError("comparison record needs j >= 2")
    return ComparisonConnectivities(
        pt=2 * n - 3 * k - 6,
        decompression=2 * n - 3 * k - 4,
        a=2 * n - 3 * k - 5,
        b_raw=(j + 1) * (n - 2) + 2 - n,
        b=j * (n - k - 2),
        e=(j - 1) * (n - 2) - k - 1,
    )
