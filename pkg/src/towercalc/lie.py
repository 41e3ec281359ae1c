"""Free Lie algebra word combinatorics.

Lyndon words are the aperiodic words that are strictly smaller than all of
their proper rotations; the Lyndon words of length L over g letters index a
basis of the degree-L part of the free Lie algebra on g generators, and the
Witt formula counts them:

>>> witt_rank(2, 6)
9
>>> [w.letters for w in lyndon_words(2, 3)[3]]
[(0, 0, 1), (0, 1, 1)]
"""

from __future__ import annotations

from math import factorial, gcd, isqrt, prod


class LyndonWord:
    """An aperiodic, rotation-minimal word over the alphabet 0..g-1."""

    __slots__ = ("letters", "alphabet_size")

    def __init__(self, letters, alphabet_size: int):
        letters = tuple(int(x) for x in letters)
        if not letters:
            raise ValueError("Lyndon words are nonempty")
        if alphabet_size < 1:
            raise ValueError("alphabet size must be >= 1")
        if any(x < 0 or x >= alphabet_size for x in letters):
            raise ValueError("letter out of alphabet range")
        if not is_lyndon(letters):
            raise ValueError(f"{letters} is not aperiodic rotation-minimal")
        self.letters = letters
        self.alphabet_size = alphabet_size

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LyndonWord)
            and self.letters == other.letters
            and self.alphabet_size == other.alphabet_size
        )

    def __hash__(self) -> int:
        return hash((self.letters, self.alphabet_size))

    def __repr__(self) -> str:
        return f"LyndonWord({self.letters}, g={self.alphabet_size})"

    def multidegree(self) -> tuple[int, ...]:
        """Letter multiplicities, one count per alphabet symbol."""
        counts = [0] * self.alphabet_size
        for x in self.letters:
            counts[x] += 1
        return tuple(counts)

    def standard_factorization(self) -> tuple["LyndonWord", "LyndonWord"] | None:
        """Split w = uv with v the longest proper Lyndon suffix.

        Returns None for single letters. Both halves are again Lyndon, which
        is what makes the bracketing [u, v] a Hall-style basis element.
        """
        if len(self.letters) == 1:
            return None
        for i in range(1, len(self.letters)):
            if is_lyndon(self.letters[i:]):
                return (
                    LyndonWord(self.letters[:i], self.alphabet_size),
                    LyndonWord(self.letters[i:], self.alphabet_size),
                )
        raise AssertionError("every Lyndon word of length >= 2 factors")


def is_lyndon(letters) -> bool:
    """Aperiodic and strictly smaller than every proper rotation."""
    w = tuple(letters)
    n = len(w)
    if n == 0:
        return False
    return all(w < w[i:] + w[:i] for i in range(1, n))


def lyndon_words(g: int, max_len: int) -> dict[int, list[LyndonWord]]:
    """All Lyndon words of length <= max_len over g letters, grouped by length.

    Duval's generation visits the words in lexicographic order, so each group
    comes out sorted. An empty alphabet yields no words at all.
    """
    if g < 0:
        raise ValueError("alphabet size must be >= 0")
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    out: dict[int, list[LyndonWord]] = {length: [] for length in range(1, max_len + 1)}
    if g == 0 or max_len == 0:
        return out
    # hot loop: millions of words for g=4, max_len=12, so objects are filled
    # in place instead of going through the validating constructor
    new = object.__new__
    top = g - 1
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        word = new(LyndonWord)
        word.letters = tuple(w)
        word.alphabet_size = g
        out[m].append(word)
        while len(w) < max_len:
            w.append(w[len(w) - m])
        while w and w[-1] == top:
            w.pop()
    return out


def mobius(n: int) -> int:
    """The number-theoretic Mobius function."""
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    if n == 1:
        return 1
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def _divisors(n: int) -> list[int]:
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def witt_rank(g: int, length: int) -> int:
    """Dimension of the degree-``length`` part of the free Lie algebra on g
    generators: (1/L) * sum over d | L of mu(d) g^(L/d).

    >>> [witt_rank(2, k) for k in range(1, 7)]
    [2, 1, 2, 3, 6, 9]
    """
    if g < 0:
        raise ValueError("alphabet size must be >= 0")
    if length < 1:
        raise ValueError("length must be >= 1")
    total = sum(mobius(d) * g ** (length // d) for d in _divisors(length))
    assert total % length == 0
    return total // length


def grouped_witt_rank(group_sizes, group_counts) -> int:
    """Lyndon words with prescribed letter counts per alphabet group.

    The alphabet is partitioned into groups of sizes ``group_sizes``; the
    result counts the Lyndon words using exactly ``group_counts[r]`` letters
    from group r. Mobius inversion over common divisors of the counts:

        (1/L) * sum_{d | gcd(counts)} mu(d) * multinomial(L/d; counts/d)
                                            * prod_r size_r^(counts_r/d)

    With a single group this collapses to :func:`witt_rank`.
    """
    sizes = tuple(int(x) for x in group_sizes)
    counts = tuple(int(x) for x in group_counts)
    if len(sizes) != len(counts):
        raise ValueError("one count per group is required")
    if any(s < 0 for s in sizes) or any(c < 0 for c in counts):
        raise ValueError("sizes and counts must be nonnegative")
    length = sum(counts)
    if length == 0:
        return 0
    if any(c > 0 and s == 0 for s, c in zip(sizes, counts)):
        return 0
    common = 0
    for c in counts:
        common = gcd(common, c)
    total = 0
    for d in _divisors(common):
        mu = mobius(d)
        if mu == 0:
            continue
        sub = length // d
        term = factorial(sub)
        for c in counts:
            term //= factorial(c // d)
        term *= prod(s ** (c // d) for s, c in zip(sizes, counts))
        total += mu * term
    assert total % length == 0
    return total // length
