"""Order-two permutations (involutions) on {1, ..., m}.

Involutions parameterize both the graph-cover gluings and the surface
cut-and-paste gluings, so the enumeration lives in its own small module.
Fixed points are allowed; the identity is an involution.
"""

from __future__ import annotations

from typing import Dict, Iterator, List, Tuple


class Involution:
    """A permutation sigma of {1..m} with sigma * sigma = identity.

    Stored as a full mapping; equality and hashing use the canonical
    tuple (sigma(1), ..., sigma(m)).
    """

    def __init__(self, mapping: Dict[int, int], m: int):
        self.m = m
        table = []
        for i in range(1, m + 1):
            table.append(mapping.get(i, i))
        self.table = tuple(table)
        for i in range(1, m + 1):
            j = self(i)
            if not (1 <= j <= m) or self(j) != i:
                raise ValueError("not an involution: sigma(%d)=%d" % (i, j))

    @classmethod
    def identity(cls, m: int) -> "Involution":
        return cls({}, m)

    @classmethod
    def from_pairs(cls, pairs, m: int) -> "Involution":
        mapping: Dict[int, int] = {}
        for i, j in pairs:
            if i == j or i in mapping or j in mapping:
                raise ValueError("pairs must be disjoint transpositions")
            mapping[i] = j
            mapping[j] = i
        return cls(mapping, m)

    def __call__(self, i: int) -> int:
        return self.table[i - 1]

    def pairs(self) -> List[Tuple[int, int]]:
        """The 2-cycles (i, j) with i < j, sorted."""
        return [(i, self(i)) for i in range(1, self.m + 1) if i < self(i)]

    def fixed_points(self) -> List[int]:
        return [i for i in range(1, self.m + 1) if self(i) == i]

    def is_identity(self) -> bool:
        return all(self(i) == i for i in range(1, self.m + 1))

    def is_single_transposition(self) -> bool:
        return len(self.pairs()) == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Involution) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        if self.is_identity():
            return "Involution(id, m=%d)" % self.m
        cyc = "".join("(%d %d)" % p for p in self.pairs())
        return "Involution(%s, m=%d)" % (cyc, self.m)

    def cycle_string(self) -> str:
        """Compact text form, e.g. "id" or "1-2,3-4"."""
        if self.is_identity():
            return "id"
        return ",".join("%d-%d" % p for p in self.pairs())


def parse_cycle_string(text: str, m: int) -> Involution:
    """Inverse of Involution.cycle_string."""
    text = text.strip()
    if text in ("", "id"):
        return Involution.identity(m)
    pairs = []
    for chunk in text.split(","):
        a, b = chunk.split("-")
        pairs.append((int(a), int(b)))
    return Involution.from_pairs(pairs, m)


def involutions(m: int) -> Iterator[Involution]:
    """All involutions of {1..m}, in a deterministic order.

    The smallest unpaired element is either fixed or paired with each
    larger unpaired element in turn; fixing comes first.
    """

    def rec(remaining: Tuple[int, ...], acc: List[Tuple[int, int]]):
        if not remaining:
            yield Involution.from_pairs(acc, m)
            return
        i, rest = remaining[0], remaining[1:]
        yield from rec(rest, acc)
        for pos, j in enumerate(rest):
            acc.append((i, j))
            yield from rec(rest[:pos] + rest[pos + 1:], acc)
            acc.pop()

    yield from rec(tuple(range(1, m + 1)), [])


def involution_count(m: int) -> int:
    """I(m) = I(m-1) + (m-1) I(m-2); the telephone numbers 1,1,2,4,10,26,76,..."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    a, b = 1, 1  # I(0), I(1)
    if m == 0:
        return a
    for k in range(2, m + 1):
        a, b = b, b + (k - 1) * a
    return b
