"""Rational homotopy ranks of wedges of simply connected spheres.

The homotopy of a finite wedge of spheres splits as a weak product over
basic products, one for each Lyndon word in the wedge summands; a basic
product with letter multiplicities (m_1, ..., m_g) against summand
dimensions (d_1, ..., d_g) is a sphere of dimension 1 + sum m_i (d_i - 1).
Rationally each sphere contributes ranks by the classical pattern: rank one
in its own dimension, plus rank one in degree 2m-1 when the dimension m is
even. Everything here is therefore exact integer bookkeeping over grouped
Lyndon counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .lie import grouped_witt_rank


@dataclass(frozen=True)
class SphereWedge:
    """Finite wedge of spheres, each of dimension >= 2."""

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        dims = tuple(sorted(int(d) for d in self.dims))
        if not dims:
            raise ValueError("a wedge needs at least one sphere")
        if any(d < 2 for d in dims):
            raise ValueError("all sphere dimensions must be >= 2 (simply connected)")
        object.__setattr__(self, "dims", dims)

    @classmethod
    def of_copies(cls, dim: int, copies: int) -> "SphereWedge":
        return cls((dim,) * copies)

    def grouped(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(distinct dimensions, multiplicities)."""
        values: list[int] = []
        sizes: list[int] = []
        for d in self.dims:
            if values and values[-1] == d:
                sizes[-1] += 1
            else:
                values.append(d)
                sizes.append(1)
        return tuple(values), tuple(sizes)


@dataclass(frozen=True)
class GradedRankTable:
    """Map degree -> rank, valid on the closed range [q_min, q_max]."""

    entries: dict[int, int] = field(default_factory=dict)
    q_min: int = 0
    q_max: int = 0

    def __post_init__(self) -> None:
        if self.q_min > self.q_max:
            raise ValueError("empty validity range")
        cleaned = {}
        for q, r in self.entries.items():
            if r < 0:
                raise ValueError(f"negative rank in degree {q}")
            if not self.q_min <= q <= self.q_max:
                raise ValueError(f"entry in degree {q} outside [{self.q_min}, {self.q_max}]")
            if r:
                cleaned[int(q)] = int(r)
        object.__setattr__(self, "entries", dict(sorted(cleaned.items())))

    def rank(self, q: int) -> int:
        if not self.q_min <= q <= self.q_max:
            raise ValueError(f"degree {q} outside the table range [{self.q_min}, {self.q_max}]")
        return self.entries.get(q, 0)

    def support(self) -> tuple[int, ...]:
        return tuple(self.entries)

    def __str__(self) -> str:
        if not self.entries:
            return f"all zero on [{self.q_min}, {self.q_max}]"
        body = ", ".join(f"{q}: {r}" for q, r in self.entries.items())
        return f"{{{body}}} on [{self.q_min}, {self.q_max}]"


def serre_rank(q: int, m: int) -> int:
    """Rank of the degree-q rational homotopy of an m-sphere (m >= 2)."""
    if m < 2:
        raise ValueError("sphere dimension must be >= 2")
    if q < 1:
        raise ValueError("degree must be >= 1")
    if q == m:
        return 1
    if m % 2 == 0 and q == 2 * m - 1:
        return 1
    return 0


def _iter_group_multidegrees(steps: tuple[int, ...], budget: int) -> Iterator[tuple[int, ...]]:
    """Nonzero tuples M with sum M_r * steps_r <= budget."""
    def rec(idx: int, remaining: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if idx == len(steps):
            if any(prefix):
                yield prefix
            return
        step = steps[idx]
        for m in range(remaining // step + 1):
            yield from rec(idx + 1, remaining - m * step, prefix + (m,))
    yield from rec(0, budget, ())


def basic_product_dimensions(w: SphereWedge, max_dim: int) -> dict[int, int]:
    """Count the basic-product spheres of each dimension up to max_dim.

    Grouping equal wedge summands keeps the enumeration over multidegrees of
    distinct dimensions only; the Lyndon words of a given multidegree are
    counted by Mobius inversion rather than generated.
    """
    values, sizes = w.grouped()
    steps = tuple(v - 1 for v in values)
    out: dict[int, int] = {}
    if max_dim < 2:
        return out
    for multi in _iter_group_multidegrees(steps, max_dim - 1):
        count = grouped_witt_rank(sizes, multi)
        if count:
            dim = 1 + sum(m * s for m, s in zip(multi, steps))
            out[dim] = out.get(dim, 0) + count
    return dict(sorted(out.items()))


def wedge_pi_ranks(w: SphereWedge, q_max: int, _max_dim: int | None = None) -> GradedRankTable:
    """Rational homotopy ranks of a wedge of spheres through degree q_max.

    A basic product of dimension m only contributes in degrees m and (for m
    even) 2m-1, both >= m, so products of dimension above q_max cannot reach
    the table and the enumeration cutoff at q_max is sound. ``_max_dim``
    widens the internal cutoff; it exists so tests can confirm that a larger
    cutoff never changes the answer.

    >>> wedge_pi_ranks(SphereWedge((3, 3)), 9).entries
    {3: 2, 5: 1, 7: 2, 9: 3}
    """
    if q_max < 0:
        raise ValueError("q_max must be >= 0")
    cutoff = q_max if _max_dim is None else max(q_max, _max_dim)
    entries: dict[int, int] = {}
    for dim, count in basic_product_dimensions(w, cutoff).items():
        if dim <= q_max:
            entries[dim] = entries.get(dim, 0) + count
        if dim % 2 == 0 and 2 * dim - 1 <= q_max:
            entries[2 * dim - 1] = entries.get(2 * dim - 1, 0) + count
    return GradedRankTable(entries, 0, q_max)


def looped_product_ranks(w: SphereWedge, t: int, q_max: int) -> GradedRankTable:
    """Rational homotopy ranks of the loops on a t-fold product of the wedge.

    Looping shifts degrees down by one and the product multiplies ranks by t.
    """
    if t < 1:
        raise ValueError("need at least one product factor")
    upstairs = wedge_pi_ranks(w, q_max + 1)
    entries = {}
    for q, r in upstairs.entries.items():
        if q - 1 >= 0:
            entries[q - 1] = t * r
    return GradedRankTable(entries, 0, q_max)


def rank_dict(table: GradedRankTable | Mapping[int, int]) -> dict[int, int]:
    if isinstance(table, GradedRankTable):
        return dict(table.entries)
    return dict(table)
