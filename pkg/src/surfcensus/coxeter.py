"""The reflection group of a right-angled polyhedron.

Generators are the face reflections; two generators commute exactly
when the faces are adjacent (the walls meet at right angles), and all
other products have infinite order.  Group elements are words in face
ids; the canonical representative is the shortlex normal form (least
length, then lexicographically least among the commutation class).

Chambers of the developed tessellation are group elements: the chamber
g is the copy g * P of the base polyhedron, and crossing the wall with
local label s moves from g to g*s.  A wall is a reflection conjugate
w s w^-1 together with the side function it induces on chambers.

Everything is a pure function of immutable tuples; the per-system
Cayley-ball cache is idempotent, so concurrent readers are safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .polyhedra import InvalidInputError, Polyhedron

Word = Tuple[int, ...]

BALL_RADIUS_GUARD = 5


class ResourceGuardError(RuntimeError):
    """A bounded-enumeration guard was exceeded."""


class CoxeterSystem:
    """The right-angled reflection group attached to a polyhedron."""

    def __init__(self, polyhedron: Polyhedron):
        self.polyhedron = polyhedron
        self.rank = polyhedron.num_faces
        self._commutes = [
            [f == g or polyhedron.faces_adjacent(f, g) for g in range(self.rank)]
            for f in range(self.rank)
        ]
        self._ball_cache: Dict[int, Tuple[Word, ...]] = {}

    def commutes(self, s: int, t: int) -> bool:
        return self._commutes[s][t]

    def _check_letters(self, word: Iterable[int]) -> None:
        for s in word:
            if not (0 <= s < self.rank):
                raise InvalidInputError("unknown generator %d" % s)

    # -- normal forms ----------------------------------------------------------

    def normal_form(self, word: Iterable[int]) -> Word:
        """Shortlex normal form; two words map to the same output iff
        they represent the same group element.

        Letters are inserted one at a time into an already-normal
        prefix: an inserted letter cancels against an equal letter it
        can commute back to, and otherwise settles at the leftmost
        position reachable past greater commuting letters.
        """
        self._check_letters(word)
        out: List[int] = []
        for s in word:
            self._insert(out, s)
        return tuple(out)

    def _insert(self, nf: List[int], s: int) -> None:
        pos = len(nf)
        k = len(nf) - 1
        while k >= 0:
            t = nf[k]
            if t == s:
                del nf[k]
                return
            if not self.commutes(t, s):
                break
            if t > s:
                pos = k
            k -= 1
        nf.insert(pos, s)

    def word_length(self, word: Iterable[int]) -> int:
        return len(self.normal_form(word))

    def mult(self, *words: Iterable[int]) -> Word:
        out: List[int] = []
        for w in words:
            for s in w:
                self._insert(out, s)
        return tuple(out)

    @staticmethod
    def inverse(word: Sequence[int]) -> Word:
        # generators are involutions, so inversion is reversal
        return tuple(reversed(tuple(word)))

    # -- Cayley balls ----------------------------------------------------------

    def cayley_ball(self, radius: int) -> Tuple[Word, ...]:
        """All chambers of word length <= radius, as normal forms in
        breadth-first order.  Memoized per radius; the group is
        infinite, so the radius guard is enforced."""
        if radius < 0:
            raise InvalidInputError("radius must be nonnegative")
        if radius > BALL_RADIUS_GUARD:
            raise ResourceGuardError(
                "radius %d exceeds the guard %d" % (radius, BALL_RADIUS_GUARD)
            )
        if radius not in self._ball_cache:
            ball: List[Word] = [()]
            seen: Set[Word] = {()}
            frontier: List[Word] = [()]
            for _ in range(radius):
                nxt: List[Word] = []
                for w in frontier:
                    for s in range(self.rank):
                        u = self.mult(w, (s,))
                        if len(u) > len(w) and u not in seen:
                            seen.add(u)
                            nxt.append(u)
                nxt.sort()
                ball.extend(nxt)
                frontier = nxt
            self._ball_cache[radius] = tuple(ball)
        return self._ball_cache[radius]

    # -- walls -----------------------------------------------------------------

    def wall(self, chamber: Sequence[int], generator: int) -> "Wall":
        """The wall crossed when moving from `chamber` to
        `chamber * generator`."""
        self._check_letters(chamber)
        if not (0 <= generator < self.rank):
            raise InvalidInputError("unknown generator %d" % generator)
        c = self.normal_form(chamber)
        reflection = self.mult(c, (generator,), self.inverse(c))
        return Wall(self, reflection)

    def crossing_walls(self, start: Sequence[int], end: Sequence[int]) -> List["Wall"]:
        """The walls crossed by a geodesic gallery from chamber `start`
        to chamber `end`; these are exactly the walls separating the two
        chambers, each crossed once."""
        a = self.normal_form(start)
        rel = self.mult(self.inverse(a), end)
        walls = []
        for k in range(len(rel)):
            prefix = rel[:k]
            r = self.mult(a, prefix, (rel[k],), self.inverse(prefix), self.inverse(a))
            walls.append(Wall(self, r))
        assert len({w.reflection for w in walls}) == len(walls), \
            "a geodesic gallery crosses distinct walls"
        return walls

    def d_p(self, chambers_a: Iterable[Sequence[int]],
            chambers_b: Iterable[Sequence[int]]) -> int:
        """Combinatorial distance between chamber sets: the number of
        walls with all of A strictly on one side and all of B strictly
        on the other.

        Any separating wall separates each pair (a, b), hence lies among
        the walls crossed by one fixed gallery, which keeps the
        candidate set finite.
        """
        aset = [self.normal_form(a) for a in chambers_a]
        bset = [self.normal_form(b) for b in chambers_b]
        if not aset or not bset:
            raise InvalidInputError("chamber sets must be nonempty")
        count = 0
        for wall in self.crossing_walls(aset[0], bset[0]):
            sa = {wall.side(a) for a in aset}
            sb = {wall.side(b) for b in bset}
            if len(sa) == 1 and len(sb) == 1 and sa != sb:
                count += 1
        return count


@dataclass(frozen=True)
class Wall(object):
    """A reflection wall of the developed tessellation.

    Two walls are equal iff they name the same reflection conjugate.
    The side function splits chambers into the identity chamber's side
    (+1) and the far side (-1): multiplying by the reflection shortens
    a chamber's word exactly when the chamber lies beyond the wall.
    """
    system: CoxeterSystem
    reflection: Word

    def __post_init__(self):
        if len(self.reflection) % 2 != 1:
            raise InvalidInputError("a reflection word must have odd length")

    def side(self, chamber: Sequence[int]) -> int:
        c = self.system.normal_form(chamber)
        moved = self.system.mult(self.reflection, c)
        return 1 if len(moved) > len(c) else -1

    def canonical_chamber(self) -> Tuple[Word, int]:
        """The minimal-length chamber adjacent to the wall on the
        identity side, with the generator crossed; reflection equals
        c * s * c^-1."""
        nf = self.reflection
        half = (len(nf) - 1) // 2
        c, s = nf[:half], nf[half]
        if self.system.mult(c, (s,), self.system.inverse(c)) == nf:
            return c, s
        # fall back to a breadth-first search of the half-length ball
        for cand in self.system.cayley_ball(min(half, BALL_RADIUS_GUARD)):
            rel = self.system.mult(self.system.inverse(cand), nf, cand)
            if len(rel) == 1:
                return cand, rel[0]
        raise InvalidInputError("no adjacent chamber found within the guard")

    def crosses_or_equals(self, other: "Wall") -> str:
        """Relation between two walls: "equal", "crossing" (the walls
        intersect at right angles) or "disjoint".

        In a right-angled system the product of two distinct reflections
        has order 2 or infinity, so a single commutator test decides.
        """
        if self.reflection == other.reflection:
            return "equal"
        prod = self.system.mult(self.reflection, other.reflection)
        if self.system.mult(prod, prod) == ():
            return "crossing"
        return "disjoint"

    def __eq__(self, other) -> bool:
        return isinstance(other, Wall) and self.reflection == other.reflection

    def __hash__(self) -> int:
        return hash(self.reflection)


def wall_side(wall: Wall, chamber: Sequence[int]) -> int:
    return wall.side(chamber)


def halfspace_contains(outer: Wall, inner: Wall) -> bool:
    """Whether the far half-space of `inner` is contained in the far
    half-space of `outer`.

    Valid to ask only for non-crossing walls: then the far side of
    `inner` lies entirely on one side of `outer`, and it suffices to
    test one chamber just beyond `inner`.
    """
    rel = outer.crosses_or_equals(inner)
    if rel == "equal":
        return True
    if rel == "crossing":
        return False
    c, s = inner.canonical_chamber()
    beyond = inner.system.mult(c, (s,))
    return outer.side(beyond) == -1
