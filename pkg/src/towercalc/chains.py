"""Exact integer chain-complex algebra.

Bounded complexes of finitely generated free abelian groups, given by their
boundary matrices. Everything is computed by Smith normal form, so Betti
numbers and torsion invariant factors are exact. Values are immutable and
safe to share across threads.

The two headline checks:

* :func:`verify_desuspension` compares the reduced homology of the mapping
  cone of a sectioning map with the homology of the pair, shifted by one,
  degree by degree.
* :func:`check_normal_invariant` decides whether a map from a sphere model
  hits a generator of the infinite cyclic top homology, i.e. a fundamental
  class.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping

from .errors import (
    InvalidChainMapError,
    InvalidComplexError,
    NonInjectiveSubcomplexError,
    NotOrientableError,
)
from .matrix import Matrix, as_matrix
from .snf import SNFResult, invariant_diagonal, smith_normal_form


# ---- domain types --------------------------------------------------------


@dataclass(frozen=True)
class ChainComplex:
    """Bounded free chain complex over the integers.

    ``ranks`` maps degree d to the number of free generators; ``boundaries``
    maps degree d to the matrix of the boundary ``d -> d-1``, with shape
    ``ranks[d-1] x ranks[d]`` (row-major). Degrees with zero rank and zero
    boundary matrices are normalized away, so equality is structural.
    """

    ranks: dict[int, int] = field(default_factory=dict)
    boundaries: dict[int, Matrix] = field(default_factory=dict)

    def __post_init__(self) -> None:
        ranks: dict[int, int] = {}
        for d, r in self.ranks.items():
            if r < 0:
                raise InvalidComplexError(f"rank in degree {d} is negative")
            if r > 0:
                ranks[int(d)] = int(r)
        bnds: dict[int, Matrix] = {}
        for d, mat in self.boundaries.items():
            d = int(d)
            mat = as_matrix(mat)
            want = (ranks.get(d - 1, 0), ranks.get(d, 0))
            if mat.shape != want:
                raise InvalidComplexError(
                    f"boundary in degree {d} has shape {mat.shape}, expected {want}"
                )
            if not mat.is_zero():
                bnds[d] = mat
        object.__setattr__(self, "ranks", dict(sorted(ranks.items())))
        object.__setattr__(self, "boundaries", dict(sorted(bnds.items())))
        for d, mat in self.boundaries.items():
            prev = self.boundaries.get(d - 1)
            if prev is not None and not (prev @ mat).is_zero():
                raise InvalidComplexError(
                    f"boundary squared is nonzero from degree {d}"
                )

    @classmethod
    def build(cls, ranks: Mapping[int, int], boundaries: Mapping[int, object]) -> "ChainComplex":
        return cls(dict(ranks), {d: as_matrix(m) for d, m in boundaries.items()})

    @property
    def min_degree(self) -> int:
        return min(self.ranks) if self.ranks else 0

    @property
    def max_degree(self) -> int:
        return max(self.ranks) if self.ranks else 0

    def rank(self, d: int) -> int:
        return self.ranks.get(d, 0)

    def boundary(self, d: int) -> Matrix:
        mat = self.boundaries.get(d)
        if mat is None:
            return Matrix.zero(self.rank(d - 1), self.rank(d))
        return mat

    def is_zero(self) -> bool:
        return not self.ranks


@dataclass(frozen=True)
class ChainMap:
    """Degreewise map of chain complexes commuting with the boundaries."""

    source: ChainComplex
    target: ChainComplex
    components: dict[int, Matrix] = field(default_factory=dict)

    def __post_init__(self) -> None:
        comps: dict[int, Matrix] = {}
        for d, mat in self.components.items():
            d = int(d)
            mat = as_matrix(mat)
            want = (self.target.rank(d), self.source.rank(d))
            if mat.shape != want:
                raise InvalidChainMapError(
                    f"component in degree {d} has shape {mat.shape}, expected {want}"
                )
            if not mat.is_zero():
                comps[d] = mat
        object.__setattr__(self, "components", dict(sorted(comps.items())))
        degrees = set(self.source.ranks) | set(self.target.ranks)
        for d in degrees:
            lhs = self.target.boundary(d) @ self.component(d)
            rhs = self.component(d - 1) @ self.source.boundary(d)
            if lhs != rhs:
                raise InvalidChainMapError(
                    f"component in degree {d} does not commute with the boundary"
                )

    @classmethod
    def build(cls, source: ChainComplex, target: ChainComplex,
              components: Mapping[int, object]) -> "ChainMap":
        return cls(source, target, {d: as_matrix(m) for d, m in components.items()})

    def component(self, d: int) -> Matrix:
        mat = self.components.get(d)
        if mat is None:
            return Matrix.zero(self.target.rank(d), self.source.rank(d))
        return mat


def identity_map(c: ChainComplex) -> ChainMap:
    return ChainMap(c, c, {d: Matrix.identity(r) for d, r in c.ranks.items()})


def zero_map(source: ChainComplex, target: ChainComplex) -> ChainMap:
    return ChainMap(source, target, {})


def compose(g: ChainMap, f: ChainMap) -> ChainMap:
    """The composite ``g . f``; sources and targets must match."""
    if f.target != g.source:
        raise InvalidChainMapError("cannot compose: target of f differs from source of g")
    degrees = set(f.components) | set(g.components)
    comps = {d: g.component(d) @ f.component(d) for d in degrees}
    return ChainMap(f.source, g.target, comps)


@dataclass(frozen=True)
class GroupSummary:
    """One finitely generated abelian group: free rank plus invariant factors."""

    betti: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.betti < 0:
            raise ValueError("negative betti number")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError("torsion coefficients must form a divisibility chain")
        if any(f <= 1 for f in self.torsion):
            raise ValueError("torsion coefficients must exceed 1")

    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.torsion

    def __str__(self) -> str:
        parts = ["Z"] * self.betti + [f"Z/{f}" for f in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class HomologySummary:
    """Per-degree homology groups; degrees with trivial homology are omitted."""

    groups: dict[int, GroupSummary] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {
            int(d): g for d, g in self.groups.items() if not g.is_trivial()
        }
        object.__setattr__(self, "groups", dict(sorted(cleaned.items())))

    def group(self, d: int) -> GroupSummary:
        return self.groups.get(d, GroupSummary(0))

    def betti(self, d: int) -> int:
        return self.group(d).betti

    def torsion(self, d: int) -> tuple[int, ...]:
        return self.group(d).torsion

    def is_trivial(self) -> bool:
        return not self.groups

    def degrees(self) -> tuple[int, ...]:
        return tuple(self.groups)

    def __str__(self) -> str:
        if not self.groups:
            return "all trivial"
        return "; ".join(f"H_{d} = {g}" for d, g in self.groups.items())


# ---- homology ------------------------------------------------------------


def homology(c: ChainComplex) -> HomologySummary:
    """Integer homology of a complex, via Smith normal form.

    In each degree, the free rank is rank(d) minus the ranks of the two
    adjacent boundary maps, and the torsion coefficients are the invariant
    factors (> 1) of the incoming boundary.
    """
    if c.is_zero():
        return HomologySummary({})
    diagonals = {
        d: invariant_diagonal(c.boundary(d))
        for d in range(c.min_degree, c.max_degree + 2)
    }
    ranks = {d: sum(1 for x in diag if x) for d, diag in diagonals.items()}
    groups = {}
    for d in range(c.min_degree, c.max_degree + 1):
        betti = c.rank(d) - ranks[d] - ranks[d + 1]
        torsion = tuple(f for f in diagonals[d + 1] if f not in (0, 1))
        groups[d] = GroupSummary(betti, torsion)
    return HomologySummary(groups)


def mapping_cone(f: ChainMap) -> ChainComplex:
    """Algebraic mapping cone of a chain map.

    Degree d is ``target_d (+) source_{d-1}``; the boundary is the block
    matrix ``[[d_target, f], [0, -d_source]]``. With this sign convention the
    cone of an identity map is acyclic, and the cone of a cofibration
    computes the reduced homology of the topological cone.
    """
    src, tgt = f.source, f.target
    lo = min(tgt.min_degree, src.min_degree + 1)
    hi = max(tgt.max_degree, src.max_degree + 1)
    ranks = {d: tgt.rank(d) + src.rank(d - 1) for d in range(lo, hi + 1)}
    boundaries = {}
    for d in range(lo, hi + 1):
        blocks = Matrix.block(
            [
                [tgt.boundary(d), f.component(d - 1)],
                [Matrix.zero(src.rank(d - 2), tgt.rank(d)), -src.boundary(d - 1)],
            ]
        )
        boundaries[d] = blocks
    return ChainComplex(ranks, boundaries)


def _split_injection_data(sub: ChainMap) -> dict[int, tuple[int, SNFResult]]:
    """Per-degree (image rank, SNF) of a degreewise split injection.

    Raises NonInjectiveSubcomplexError if any component fails to be a split
    injection (full column rank with all invariant factors 1).
    """
    data = {}
    degrees = set(sub.source.ranks) | set(sub.target.ranks)
    for d in degrees:
        comp = sub.component(d)
        res = smith_normal_form(comp)
        s = sub.source.rank(d)
        if res.rank != s or any(x != 1 for x in res.invariant_factors):
            raise NonInjectiveSubcomplexError(
                f"subcomplex inclusion is not a split injection in degree {d}"
            )
        data[d] = (s, res)
    return data


def quotient_complex(c: ChainComplex, sub: ChainMap) -> ChainComplex:
    """The quotient of ``c`` by the image of a degreewise split injection."""
    if sub.target != c:
        raise InvalidChainMapError("subcomplex map must land in the given complex")
    data = _split_injection_data(sub)
    # With u M v = diag(1..1), the image of M is carried to the span of the
    # first s coordinates by u, so the last r-s rows of u project onto the
    # quotient and the matching columns of u^{-1} split the projection.
    proj: dict[int, Matrix] = {}
    sect: dict[int, Matrix] = {}
    qranks: dict[int, int] = {}
    for d in range(c.min_degree, c.max_degree + 1):
        r = c.rank(d)
        s, res = data.get(d, (0, None))
        if res is None:
            proj[d] = Matrix.identity(r)
            sect[d] = Matrix.identity(r)
        else:
            u = res.u
            proj[d] = u.take_rows(range(s, r))
            sect[d] = u.unimodular_inverse().take_columns(range(s, r))
        qranks[d] = r - s
    boundaries = {}
    for d in range(c.min_degree + 1, c.max_degree + 1):
        if d - 1 in proj and d in sect:
            boundaries[d] = proj[d - 1] @ c.boundary(d) @ sect[d]
    return ChainComplex(qranks, boundaries)


def relative_homology(c: ChainComplex, sub: ChainMap) -> HomologySummary:
    """Homology of the quotient complex of a pair.

    ``sub`` must be a degreewise split injection into ``c`` (the chain-level
    stand-in for a cofibration). With the zero subcomplex this is just the
    homology of ``c``.
    """
    return homology(quotient_complex(c, sub))


def is_quasi_isomorphism(f: ChainMap) -> bool:
    """True when f induces isomorphisms on all homology groups.

    A chain map is a quasi-isomorphism exactly when its mapping cone is
    acyclic, which is one Smith-normal-form pass.
    """
    return homology(mapping_cone(f)).is_trivial()


# ---- suspension ----------------------------------------------------------


def suspension(c: ChainComplex) -> ChainComplex:
    """Reduced suspension of a based chain model.

    Degrees shift up by one; a fresh basepoint generator sits in degree 0 and
    the old basepoint (the first degree-0 generator) is not suspended. The
    construction requires an augmentable model: every column of the degree-1
    boundary must sum to zero, which holds for every cellular chain complex.
    Reduced homology shifts by exactly one degree.
    """
    if c.is_zero():
        return ChainComplex({0: 1}, {})
    if c.min_degree < 0:
        raise InvalidComplexError("suspension needs a complex supported in degrees >= 0")
    d1 = c.boundary(1)
    for j in range(d1.cols):
        if sum(d1.column(j)) != 0:
            raise InvalidComplexError(
                "suspension needs an augmented degree-1 boundary (column sums zero)"
            )
    r0 = c.rank(0)
    ranks = {0: 1}
    if r0 > 1:
        ranks[1] = r0 - 1
    for d in range(1, c.max_degree + 1):
        if c.rank(d):
            ranks[d + 1] = c.rank(d)
    boundaries = {}
    if r0 > 0 and c.rank(1) > 0:
        # drop the basepoint row; no cycle is lost because the column sums vanish
        boundaries[2] = d1.take_rows(range(1, r0))
    for d in range(2, c.max_degree + 1):
        boundaries[d + 1] = c.boundary(d)
    return ChainComplex(ranks, boundaries)


# ---- desuspension verification -------------------------------------------


class Verdict(enum.Enum):
    PASS = "PASS"
    MISMATCH = "MISMATCH"
    INVALID_SECTIONING = "INVALID_SECTIONING"


@dataclass(frozen=True)
class DegreeComparison:
    degree: int               # degree in H_*(P, dP)
    relative: GroupSummary    # H_d(P, dP)
    cone: GroupSummary        # reduced H_{d-1} of the cone of the section
    match: bool


@dataclass(frozen=True)
class DesuspensionReport:
    verdict: Verdict
    sectioning_ok: bool
    comparisons: tuple[DegreeComparison, ...]
    reason: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS


def verify_desuspension(p: ChainComplex, boundary_incl: ChainMap,
                        section: ChainMap) -> DesuspensionReport:
    """Check that the cone of the section desuspends the pair.

    Compares reduced H_{d-1} of the mapping cone of ``section`` (the Thom
    model) against H_d(p, boundary) for every degree. The sectioning
    hypotheses (composite a quasi-isomorphism, boundary inclusion a split
    injection) are validated; a failure there yields INVALID_SECTIONING
    unless the comparison itself already exhibits a MISMATCH, which is the
    more informative verdict.
    """
    if boundary_incl.target != p:
        return DesuspensionReport(
            Verdict.INVALID_SECTIONING, False, (),
            reason="boundary inclusion does not land in P",
        )
    if section.target != boundary_incl.source:
        return DesuspensionReport(
            Verdict.INVALID_SECTIONING, False, (),
            reason="section does not land in the boundary",
        )
    try:
        composite = compose(boundary_incl, section)
    except InvalidChainMapError as exc:
        return DesuspensionReport(Verdict.INVALID_SECTIONING, False, (), reason=str(exc))
    sectioning_ok = is_quasi_isomorphism(composite)

    try:
        rel = relative_homology(p, boundary_incl)
    except NonInjectiveSubcomplexError as exc:
        return DesuspensionReport(Verdict.INVALID_SECTIONING, False, (), reason=str(exc))
    cone_h = homology(mapping_cone(section))

    degrees = sorted(set(rel.degrees()) | {d + 1 for d in cone_h.degrees()}
                     | set(range(p.min_degree, p.max_degree + 2)))
    comparisons = tuple(
        DegreeComparison(
            degree=d,
            relative=rel.group(d),
            cone=cone_h.group(d - 1),
            match=rel.group(d) == cone_h.group(d - 1),
        )
        for d in degrees
    )
    if any(not comp.match for comp in comparisons):
        verdict = Verdict.MISMATCH
    elif not sectioning_ok:
        verdict = Verdict.INVALID_SECTIONING
    else:
        verdict = Verdict.PASS
    reason = "" if sectioning_ok else "composite K -> P is not a homology isomorphism"
    return DesuspensionReport(verdict, sectioning_ok, comparisons, reason=reason)


# ---- normal invariants -----------------------------------------------------


class NormalInvariantVerdict(enum.Enum):
    IS_NORMAL_INVARIANT = "IS_NORMAL_INVARIANT"
    NOT_NORMAL_INVARIANT = "NOT_NORMAL_INVARIANT"


def _cycle_in_kernel_coordinates(res: SNFResult, vec: tuple[int, ...]) -> tuple[int, ...]:
    """Coordinates of a cycle with respect to the kernel basis from an SNF.

    The kernel of the map is spanned by the last cols-rank columns of v, so
    coordinates are the tail of v^{-1} vec; the head must vanish.
    """
    vinv = res.v.unimodular_inverse()
    coords = vinv.apply(vec)
    r = res.rank
    if any(x != 0 for x in coords[:r]):
        raise ValueError("vector is not a cycle")
    return coords[r:]


def _image_in_kernel_coordinates(res: SNFResult, image: Matrix) -> Matrix:
    vinv = res.v.unimodular_inverse()
    full = vinv @ image
    r = res.rank
    if not full.take_rows(range(r)).is_zero():
        raise ValueError("image columns are not cycles")
    return full.take_rows(range(r, full.rows))


def _infinite_cyclic_data(c: ChainComplex, d: int):
    """(SNF of boundary(d), presentation of H_d) when H_d is infinite cyclic.

    Returns None if H_d is not isomorphic to Z.
    """
    res = smith_normal_form(c.boundary(d))
    kernel_dim = c.rank(d) - res.rank
    pres = _image_in_kernel_coordinates(res, c.boundary(d + 1))
    pres_snf = smith_normal_form(pres)
    free_rank = kernel_dim - pres_snf.rank
    torsion = [f for f in pres_snf.invariant_factors if f != 1]
    if free_rank != 1 or torsion:
        return None
    return res, pres


def _generates(pres: Matrix, coords: tuple[int, ...]) -> bool:
    """True when the class of ``coords`` generates coker(pres) (== Z here)."""
    extended = Matrix.block([[pres, Matrix(len(coords), 1, tuple((x,) for x in coords))]])
    res = smith_normal_form(extended)
    return res.rank == extended.rows and all(f == 1 for f in res.invariant_factors)


def check_normal_invariant(alpha: ChainMap, p: ChainComplex,
                           boundary_incl: ChainMap, n: int) -> NormalInvariantVerdict:
    """Decide whether ``alpha`` hits a fundamental class.

    ``alpha`` maps an (n-1)-sphere model to a Thom-space model; ``p`` with
    ``boundary_incl`` provides the pair whose degree-n homology must be
    infinite cyclic (connected and orientable at chain level; otherwise
    NotOrientableError). The verdict is positive exactly when the image of
    the sphere's fundamental cycle generates the infinite cyclic reduced
    H_{n-1} of the target, so precisely the two classes of either sign pass.
    """
    rel = relative_homology(p, boundary_incl)
    if rel.group(n) != GroupSummary(1):
        raise NotOrientableError(
            f"H_{n}(P, dP) = {rel.group(n)} is not infinite cyclic"
        )
    sphere = alpha.source
    sphere_data = _infinite_cyclic_data(sphere, n - 1)
    if sphere_data is None:
        raise InvalidChainMapError(
            f"source of alpha has H_{n-1} not infinite cyclic; not a sphere model"
        )
    sphere_res, sphere_pres = sphere_data
    kernel_dim = sphere.rank(n - 1) - sphere_res.rank
    # fundamental cycle: pull the free generator of H_{n-1} back to a cycle
    pres_snf = smith_normal_form(sphere_pres)
    free_index = next(
        i for i in range(kernel_dim)
        if i >= pres_snf.rank or pres_snf.diagonal[i] == 0
    )
    uinv = pres_snf.u.unimodular_inverse()
    gen_coords = uinv.column(free_index)
    kernel_basis = sphere_res.v.take_columns(
        range(sphere_res.rank, sphere.rank(n - 1))
    )
    fundamental = kernel_basis.apply(gen_coords)

    target = alpha.target
    target_data = _infinite_cyclic_data(target, n - 1)
    if target_data is None:
        raise InvalidChainMapError(
            f"target of alpha has H_{n-1} not infinite cyclic"
        )
    target_res, target_pres = target_data
    image_cycle = alpha.component(n - 1).apply(fundamental)
    coords = _cycle_in_kernel_coordinates(target_res, image_cycle)
    if _generates(target_pres, coords):
        return NormalInvariantVerdict.IS_NORMAL_INVARIANT
    return NormalInvariantVerdict.NOT_NORMAL_INVARIANT
