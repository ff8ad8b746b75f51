"""Bit-packed tournaments on the vertex set {1, ..., n}.

Every unordered pair {i, j} with i < j gets one bit: bit value 1 means the
edge is directed i -> j, 0 means j -> i.  Pair bits are laid out in
lexicographic pair order (1,2), (1,3), ..., (1,n), (2,3), ..., so a
tournament is just n plus an integer code in [0, 2**(n(n-1)/2)).  The code
doubles as the enumeration counter, which makes exhaustive-search sharding a
plain range split.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .fields import NotPrimeError, is_prime
from .rng import ByteStream

MAX_N = 4096
MAX_ENUM_BITS = 63


class InvalidPermutationError(ValueError):
    """Order argument is not a permutation of 1..n."""


class SelfLoopError(ValueError):
    """Edge endpoints coincide."""


class VertexRangeError(ValueError):
    """Vertex label outside 1..n."""


class TooLargeError(ValueError):
    """Exhaustive enumeration requested beyond the 63-bit code space."""


class TournamentParseError(ValueError):
    """Tournament text does not match "n=<n>:<bits>"."""


class BadCongruenceError(ValueError):
    """Quadratic-residue construction needs q = 3 (mod 4)."""


def n_pairs(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(n: int, i: int, j: int) -> int:
    """Bit position of the pair {i, j}, 1 <= i < j <= n, lexicographic order."""
    return (i - 1) * n - i * (i + 1) // 2 + j - 1


@dataclass(frozen=True, slots=True)
class Tournament:
    """An orientation of all pairs on {1, ..., n}, packed into one integer."""

    n: int
    code: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"n must be in 1..{MAX_N}, got {self.n}")
        if not 0 <= self.code < (1 << n_pairs(self.n)):
            raise ValueError(f"code {self.code} out of range for n={self.n}")

    def _check_vertex(self, v: int):
        if not 1 <= v <= self.n:
            raise VertexRangeError(f"vertex {v} outside 1..{self.n}")

    def has_edge(self, i: int, j: int) -> bool:
        """True iff the edge between i and j is directed i -> j."""
        if i == j:
            raise SelfLoopError(f"no edge from {i} to itself")
        self._check_vertex(i)
        self._check_vertex(j)
        if i < j:
            return (self.code >> pair_index(self.n, i, j)) & 1 == 1
        return (self.code >> pair_index(self.n, j, i)) & 1 == 0

    def reverse(self) -> "Tournament":
        """Flip every edge; an involution."""
        mask = (1 << n_pairs(self.n)) - 1
        return Tournament(self.n, self.code ^ mask)

    def flip_edge(self, i: int, j: int) -> "Tournament":
        """Flip the single edge between i and j; an involution."""
        if i == j:
            raise SelfLoopError(f"cannot flip edge ({i}, {i})")
        self._check_vertex(i)
        self._check_vertex(j)
        k = pair_index(self.n, min(i, j), max(i, j))
        return Tournament(self.n, self.code ^ (1 << k))

    def out_degree(self, v: int) -> int:
        self._check_vertex(v)
        return sum(1 for u in range(1, self.n + 1) if u != v and self.has_edge(v, u))

    def edges(self):
        """Yield every directed edge as (winner, loser) in pair order."""
        k = 0
        for i in range(1, self.n):
            for j in range(i + 1, self.n + 1):
                yield (i, j) if (self.code >> k) & 1 else (j, i)
                k += 1


def transitive(n: int, order=None) -> Tournament:
    """The transitive tournament where earlier entries of `order` beat later ones.

    `order` is a permutation of 1..n (default natural order).  i -> j iff i
    appears before j in `order`.
    """
    if order is None:
        order = range(1, n + 1)
    order = tuple(order)
    if sorted(order) != list(range(1, n + 1)):
        raise InvalidPermutationError(f"{order!r} is not a permutation of 1..{n}")
    pos = {v: r for r, v in enumerate(order)}
    code = 0
    k = 0
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            if pos[i] < pos[j]:
                code |= 1 << k
            k += 1
    return Tournament(n, code)


def random_tournament(n: int, seed: int, index: int) -> Tournament:
    """A uniform tournament, fully determined by (seed, index, n).

    Each orientation bit is an independent fair coin from the SHA-256
    counter stream keyed by (seed, "tournament", index); repeat calls with
    the same triple are bit-identical regardless of worker scheduling.
    """
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}, got {n}")
    stream = ByteStream(seed, "tournament", index)
    return Tournament(n, stream.bits(n_pairs(n)))


def paley(q: int) -> Tournament:
    """Quadratic-residue tournament on q vertices, q prime, q = 3 (mod 4).

    Vertex v is identified with the residue v - 1; i -> j iff (j - i) mod q
    is a nonzero square.  q = 3 (mod 4) makes -1 a non-square, so exactly
    one direction wins each pair.
    """
    if not is_prime(q):
        raise NotPrimeError(f"{q} is not prime")
    if q % 4 != 3:
        raise BadCongruenceError(f"need q = 3 (mod 4), got q = {q}")
    squares = {pow(x, 2, q) for x in range(1, q)}
    code = 0
    k = 0
    for i in range(1, q):
        for j in range(i + 1, q + 1):
            if (j - i) % q in squares:
                code |= 1 << k
            k += 1
    return Tournament(q, code)


def enumerate_all(n: int, start: int | None = None, end: int | None = None):
    """Yield all tournaments with code in [start, end), in increasing code order.

    The full range covers every tournament on n vertices exactly once.
    Requires n(n-1)/2 <= 63 so codes fit one machine word.
    """
    m = n_pairs(n)
    if m > MAX_ENUM_BITS:
        raise TooLargeError(f"n={n} has {m} pair bits; enumeration capped at {MAX_ENUM_BITS}")
    total = 1 << m
    if start is None:
        start = 0
    if end is None:
        end = total
    if not 0 <= start <= end <= total:
        raise ValueError(f"bad shard [{start}, {end}) for {total} codes")
    for code in range(start, end):
        yield Tournament(n, code)


_TOUR_RE = re.compile(r"n=(\d+):([01]*)")


def parse_tournament(text: str) -> Tournament:
    """Parse "n=<n>:<bitstring>"; bit k of the string is pair k's orientation."""
    m = _TOUR_RE.fullmatch(text.strip())
    if m is None:
        raise TournamentParseError(f"bad tournament text {text!r}")
    n, bits = int(m.group(1)), m.group(2)
    if len(bits) != n_pairs(n):
        raise TournamentParseError(
            f"need {n_pairs(n)} bits for n={n}, got {len(bits)}"
        )
    code = 0
    for k, ch in enumerate(bits):
        if ch == "1":
            code |= 1 << k
    return Tournament(n, code)


def format_tournament(t: Tournament) -> str:
    bits = "".join("1" if (t.code >> k) & 1 else "0" for k in range(n_pairs(t.n)))
    return f"n={t.n}:{bits}"
