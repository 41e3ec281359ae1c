"""Embeddings of a disjoint union of disks in a disk: exact low-degree data
and rational rank bounds.

For t disjoint n-disks, the embedding space has 2^t path components and
elementary abelian 2-group fundamental group (Z/2)^t. In even ambient
dimension the rational homotopy long exact sequence splits into four-term
short exact sequences

    0 -> pi_{2m+1}(E) -> (+)_t pi_{2m+1}(W) -> pi_{2m+n-1}(W) -> pi_{2m}(E) -> 0

with W the wedge of t spheres of dimension n-1, so the middle ranks bound
the outer ones and their difference is forced by exactness. The connecting
map is not computed, so individual ranks are emitted as bounds except in
the degenerate cases where exactness pins them down.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OutOfRangeError, ParityUnsupportedError
from .hilton import SphereWedge, wedge_pi_ranks


def pi0_cardinality(t: int) -> int:
    """Number of path components of the embedding space: 2^t."""
    if t < 0:
        raise OutOfRangeError("t must be >= 0")
    return 2 ** t


@dataclass(frozen=True)
class GroupDescriptor:
    """(Z/2)^copies, the fundamental group of the embedding space."""

    copies: int

    def __post_init__(self) -> None:
        if self.copies < 0:
            raise OutOfRangeError("t must be >= 0")

    @property
    def order(self) -> int:
        return 2 ** self.copies

    @property
    def exponent(self) -> int:
        return 1 if self.copies == 0 else 2

    def __str__(self) -> str:
        return "trivial" if self.copies == 0 else f"(Z/2)^{self.copies}"


def pi1_description(t: int) -> GroupDescriptor:
    """Fundamental group descriptor: the direct sum of t copies of Z/2."""
    if t < 0:
        raise OutOfRangeError("t must be >= 0")
    return GroupDescriptor(t)


@dataclass(frozen=True)
class SESRankReport:
    """Rank data of one four-term short exact sequence (degree pair 2m, 2m+1).

    ``rank_B`` and ``rank_C`` are the two known middle terms; the outer
    homotopy ranks of the embedding space satisfy

        rank pi_{2m+1} <= rank_B,  rank pi_{2m} <= rank_C,
        rank pi_{2m}  -  rank pi_{2m+1}  =  rank_C - rank_B.

    When either middle term vanishes, exactness determines both outer ranks;
    ``exact`` flags that and the exact values are then rank_B and rank_C
    themselves.
    """

    n: int
    t: int
    m: int
    rank_B: int
    rank_C: int
    upper_odd: int
    upper_even: int
    euler_relation: int
    exact: bool

    def __post_init__(self) -> None:
        if self.upper_odd != self.rank_B or self.upper_even != self.rank_C:
            raise ValueError("bounds must equal the middle ranks")
        if self.euler_relation != self.rank_C - self.rank_B:
            raise ValueError("euler relation must equal rank_C - rank_B")
        if self.exact != (self.rank_B == 0 or self.rank_C == 0):
            raise ValueError("exactness flag is forced by vanishing middle terms")

    @property
    def exact_odd(self) -> int | None:
        return self.rank_B if self.exact else None

    @property
    def exact_even(self) -> int | None:
        return self.rank_C if self.exact else None


def ses_rank_report(n: int, t: int, m: int) -> SESRankReport:
    """Rank report for the degree pair (2m, 2m+1), n even >= 4, t >= 1, m >= 1.

    Odd n is rejected (PARITY_UNSUPPORTED): the splitting is a parity
    phenomenon. The wedge ranks come from the Hilton-Milnor table of t
    copies of the (n-1)-sphere.

    >>> r = ses_rank_report(4, 2, 1)
    >>> (r.rank_B, r.rank_C, r.euler_relation)
    (4, 1, -3)
    """
    if n < 4:
        raise OutOfRangeError("ambient dimension must be >= 4 for the rank sequence")
    if n % 2 != 0:
        raise ParityUnsupportedError(f"n = {n} is odd; the sequence splits only for even n")
    if t < 1:
        raise OutOfRangeError("t must be >= 1")
    if m < 1:
        raise OutOfRangeError("m must be >= 1 (degrees 0 and 1 are handled exactly)")
    wedge = SphereWedge.of_copies(n - 1, t)
    table = wedge_pi_ranks(wedge, 2 * m + n - 1)
    r_odd = table.rank(2 * m + 1)
    r_top = table.rank(2 * m + n - 1)
    rank_b = t * r_odd
    rank_c = r_top
    return SESRankReport(
        n=n,
        t=t,
        m=m,
        rank_B=rank_b,
        rank_C=rank_c,
        upper_odd=rank_b,
        upper_even=rank_c,
        euler_relation=rank_c - rank_b,
        exact=(rank_b == 0 or rank_c == 0),
    )
