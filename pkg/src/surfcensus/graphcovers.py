"""Pointed covers of the bouquet of two circles and their label-blind
invariants.

A finite 4-regular graph with directed edges labeled a or b is a cover
of the one-vertex graph with loops a and b.  The family built here is
parameterized by an involution sigma of {1..n}: a 4n-cycle of a-edges
(vertices v_0 ... v_{4n-1}), a b 1-cycle on every even vertex, on every
vertex of index >= 2n, and on v_{2j-1} whenever sigma fixes j; and a b
2-cycle joining v_{2i-1} and v_{2j-1} for every 2-cycle (i j) of sigma.
The basepoint sits inside the b 1-cycle at v_0 (v_0 always carries
one).

Cutting out a neighbourhood of the basepoint leaves a graph with two
degree-1 boundary vertices.  In the universal cover T of the cut graph
the boundary lifts are exactly the leaves, and the machinery below
recovers sigma from T without ever reading an edge label: distances to
the leaves, the equidistant-edge set E1, the derived set E2, and the
distance-along-identified-a-edges function d_a whose level sets V_i
carry the 2-cycles of sigma as edges between V_{2i} and V_{2j}.

A crucial point makes all of this finite: in a tree cover of a finite
graph, the distance from a lift of v to the nearest leaf equals the
length of the shortest non-backtracking walk from v to a boundary
vertex downstairs, independent of the lift (walks lift uniquely from
any basepoint, and tree geodesics project to non-backtracking walks).
The same holds for the count of leaves at each distance and for d_a.
So every invariant of the infinite tree is computed exactly on the
finite cut graph, and a materialized finite tree is only an exemplar.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .involutions import Involution

TREE_NODE_GUARD = 400_000


class CoveringError(ValueError):
    """The graph is not a cover of the two-circle bouquet."""


class ResourceGuardError(RuntimeError):
    pass


@dataclass(frozen=True)
class Edge:
    """One undirected edge with a covering direction and a letter."""
    eid: int
    src: int
    dst: int
    label: str  # "a" or "b"


class PointedCover:
    """A labeled directed graph covering the bouquet, with a basepoint
    inside a b-edge (the edge id plus a side marker for the two halves
    it splits into)."""

    def __init__(self, num_vertices: int, edges: Sequence[Edge], basepoint_edge: int):
        self.num_vertices = num_vertices
        self.edges: Tuple[Edge, ...] = tuple(edges)
        self.basepoint_edge = basepoint_edge
        if not (0 <= basepoint_edge < len(self.edges)):
            raise ValueError("basepoint edge out of range")
        if self.edges[basepoint_edge].label != "b":
            raise ValueError("basepoint must lie inside a b-edge")

    def check_covering(self) -> None:
        """Every vertex needs exactly one outgoing and one incoming edge
        of each letter; a loop counts as both.  Raises CoveringError."""
        for letter in "ab":
            out_deg = [0] * self.num_vertices
            in_deg = [0] * self.num_vertices
            for e in self.edges:
                if e.label != letter:
                    continue
                out_deg[e.src] += 1
                in_deg[e.dst] += 1
            for v in range(self.num_vertices):
                if out_deg[v] != 1 or in_deg[v] != 1:
                    raise CoveringError(
                        "vertex %d has %s-degrees out=%d in=%d"
                        % (v, letter, out_deg[v], in_deg[v])
                    )
        if not self._connected():
            raise CoveringError("cover is not connected")

    def _connected(self) -> bool:
        if self.num_vertices == 0:
            return False
        adj: List[List[int]] = [[] for _ in range(self.num_vertices)]
        for e in self.edges:
            adj[e.src].append(e.dst)
            adj[e.dst].append(e.src)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.num_vertices

    def degree(self) -> int:
        return self.num_vertices

    def a_edge_ids(self) -> FrozenSet[int]:
        return frozenset(e.eid for e in self.edges if e.label == "a")

    def serialize(self) -> List:
        return [[e.src, e.dst, e.label] for e in self.edges] + [
            ["basepoint", self.basepoint_edge, "interior"]
        ]


def build_cover(n: int, sigma: Involution) -> PointedCover:
    """The 4n-vertex pointed cover attached to an involution of {1..n}."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if sigma.m != n:
        raise ValueError("sigma must be an involution of {1..%d}" % n)
    edges: List[Edge] = []

    def add(src, dst, label):
        edges.append(Edge(len(edges), src, dst, label))

    size = 4 * n
    for i in range(size):
        add(i, (i + 1) % size, "a")

    fixed = set(sigma.fixed_points())
    basepoint = None
    for i in range(size):
        loop = (i % 2 == 0) or (i >= 2 * n) or (i % 2 == 1 and (i + 1) // 2 in fixed)
        if loop:
            if i == 0:
                basepoint = len(edges)
            add(i, i, "b")
    for i, j in sigma.pairs():
        add(2 * i - 1, 2 * j - 1, "b")
        add(2 * j - 1, 2 * i - 1, "b")

    cover = PointedCover(size, edges, basepoint)
    cover.check_covering()
    return cover


# -- cutting out the basepoint ---------------------------------------------------


class CutGraph:
    """A finite graph with marked degree-1 boundary vertices, obtained
    by splitting the basepoint edge of a cover (or built directly for
    toy examples).  Edges keep their letters but all invariants below
    ignore them unless explicitly stated."""

    def __init__(self, num_vertices: int, edges: Sequence[Edge],
                 boundary: Iterable[int]):
        self.num_vertices = num_vertices
        self.edges: Tuple[Edge, ...] = tuple(edges)
        self.boundary: FrozenSet[int] = frozenset(boundary)
        self._adj: List[List[Tuple[int, int]]] = [[] for _ in range(num_vertices)]
        for e in self.edges:
            # darts: (edge id, direction); direction 0 = src->dst
            self._adj[e.src].append((e.eid, 0))
            self._adj[e.dst].append((e.eid, 1))
        for v in self.boundary:
            if len(self._adj[v]) != 1:
                raise ValueError("boundary vertex %d has degree %d"
                                 % (v, len(self._adj[v])))

    def darts_at(self, v: int) -> List[Tuple[int, int]]:
        return self._adj[v]

    def dart_head(self, dart: Tuple[int, int]) -> int:
        e = self.edges[dart[0]]
        return e.dst if dart[1] == 0 else e.src

    def dart_tail(self, dart: Tuple[int, int]) -> int:
        e = self.edges[dart[0]]
        return e.src if dart[1] == 0 else e.dst

    @staticmethod
    def reverse(dart: Tuple[int, int]) -> Tuple[int, int]:
        return (dart[0], 1 - dart[1])

    def serialize(self) -> List:
        return [[e.src, e.dst, e.label] for e in self.edges] + [
            ["boundary"] + sorted(self.boundary)
        ]


def cut_basepoint(cover: PointedCover) -> CutGraph:
    """Split the basepoint edge; the two new endpoints become the
    degree-1 boundary vertices."""
    base = cover.edges[cover.basepoint_edge]
    x = cover.num_vertices
    y = cover.num_vertices + 1
    edges: List[Edge] = []
    for e in cover.edges:
        if e.eid == cover.basepoint_edge:
            continue
        edges.append(Edge(len(edges), e.src, e.dst, e.label))
    edges.append(Edge(len(edges), base.src, x, "b"))
    edges.append(Edge(len(edges), y, base.dst, "b"))
    return CutGraph(cover.num_vertices + 2, edges, (x, y))


# -- exact invariants of the universal cover --------------------------------------


def boundary_distances(g: CutGraph) -> List[int]:
    """For each vertex v, the distance from any lift of v to the leaf
    set of the universal cover: the length of the shortest walk from v
    to a boundary vertex (shortest walks never backtrack)."""
    from collections import deque

    INF = -1
    dist = [INF] * g.num_vertices
    dq = deque()
    for v in g.boundary:
        dist[v] = 0
        dq.append(v)
    while dq:
        v = dq.popleft()
        for dart in g.darts_at(v):
            w = g.dart_head(dart)
            if dist[w] == INF:
                dist[w] = dist[v] + 1
                dq.append(w)
    if any(d == INF for d in dist):
        raise ValueError("cut graph is not connected")
    return dist


def boundary_profiles(g: CutGraph, depth: int) -> List[Tuple[int, ...]]:
    """profile(v)[k] = number of leaves of the universal cover at
    distance exactly k from a lift of v, for k <= depth.

    Equals the number of non-backtracking walks of length k from v
    ending on the boundary, by unique path lifting; computed by dynamic
    programming over darts.
    """
    darts = [(e.eid, d) for e in g.edges for d in (0, 1)]
    index = {dart: i for i, dart in enumerate(darts)}
    # walks[i][k] = number of nbw of length k starting with dart i and
    # ending on the boundary
    walks = [[0] * (depth + 1) for _ in darts]
    for i, dart in enumerate(darts):
        if g.dart_head(dart) in g.boundary:
            walks[i][1] = 1
    for k in range(2, depth + 1):
        for i, dart in enumerate(darts):
            head = g.dart_head(dart)
            if head in g.boundary:
                continue
            total = 0
            rev = g.reverse(dart)
            for nxt in g.darts_at(head):
                if nxt == rev:
                    continue
                total += walks[index[nxt]][k - 1]
            walks[i][k] = total
    profiles = []
    for v in range(g.num_vertices):
        row = [0] * (depth + 1)
        row[0] = 1 if v in g.boundary else 0
        for dart in g.darts_at(v):
            col = walks[index[dart]]
            for k in range(1, depth + 1):
                row[k] += col[k]
        profiles.append(tuple(row))
    return profiles


@dataclass(frozen=True)
class TreeInvariants:
    """Label-blind invariants of the universal cover, represented on
    the base cut graph (each base edge stands for all of its lifts).

    e1: edges whose lift endpoints are equidistant from the leaves.
    e2: edges outside e1 adjacent (in the tree) to at least two e1
        edges.
    a_edges: the identified a-skeleton; the refined identification
        (profile equality plus per-vertex completion) is cross-checked
        against the true labels and raises on mismatch.
    d_a: per-vertex distance to the leaves along walks whose edges,
        except the last, all lie in the identified skeleton.
    vi: the partition of vertices by d_a value.
    """
    e1: FrozenSet[int]
    e2: FrozenSet[int]
    a_edges: FrozenSet[int]
    d_a: Tuple[int, ...]
    vi: Dict[int, FrozenSet[int]]

    def vi_sorted(self) -> List[Tuple[int, Tuple[int, ...]]]:
        return [(k, tuple(sorted(self.vi[k]))) for k in sorted(self.vi)]


def _tree_adjacent_count(g: CutGraph, eid: int, members: Iterable[int]) -> int:
    """Number of tree-edges from `members` adjacent to a lift of edge
    `eid`.  In the tree every dart at an endpoint, other than the edge
    itself, contributes one distinct neighbouring edge; a loop at an
    endpoint contributes its two darts separately."""
    member_set = set(members)
    e = g.edges[eid]
    count = 0
    removed = 0  # the edge's own darts: one per endpoint, or two at a loop
    for v in (e.src, e.dst) if e.src != e.dst else (e.src,):
        for dart in g.darts_at(v):
            if dart[0] == eid and removed < 2:
                removed += 1
                continue
            if dart[0] in member_set:
                count += 1
    return count


def equidistant_edges(g: CutGraph, dist: Sequence[int]) -> FrozenSet[int]:
    """The literal equidistance test: both endpoints of a lift at the
    same distance from the leaves.  Lifts of a loop always qualify."""
    out = set()
    for e in g.edges:
        if dist[e.src] == dist[e.dst]:
            out.add(e.eid)
    return frozenset(out)


def adjacent_two_rule(g: CutGraph, e1: Set[int]) -> FrozenSet[int]:
    """Edges outside e1 adjacent to at least two e1 edges in the tree."""
    out = set()
    for e in g.edges:
        if e.eid in e1:
            continue
        if _tree_adjacent_count(g, e.eid, e1) >= 2:
            out.add(e.eid)
    return frozenset(out)


def identify_a_skeleton(g: CutGraph, profiles: Sequence[Tuple[int, ...]],
                        verify_against_labels: bool = True) -> FrozenSet[int]:
    """Label-blind identification of the a-edge lifts.

    Equidistance alone misclassifies some a-edges: a b 2-cycle joins
    two vertices an even arc apart, which creates odd circuits, and a
    breadth-first tie then lands on an a-edge next to the far foot of
    the 2-cycle.  Two label-blind refinements repair this exactly:

    1. profile refinement: an edge counts as symmetric only if its
       endpoints agree on the whole leaf-count profile, not just the
       nearest-leaf distance.  Loop lifts always do (their endpoints
       are lifts of one vertex); the tie a-edges never do here, because
       one endpoint carries a b 1-cycle and the other does not.
    2. completion: every interior tree vertex has exactly two skeleton
       edges, so at a vertex with one identified skeleton edge, two
       identified non-skeleton slots and one unknown slot, the unknown
       slot is skeleton.  This rescues the boundary-adjacent a-edge
       when the basepoint neighbour v_1 carries a 2-cycle.

    With verify_against_labels the result is compared to the true
    labels and a mismatch raises, keeping the label-blind claim honest.
    """
    e1_star = set()
    for e in g.edges:
        if profiles[e.src] == profiles[e.dst]:
            e1_star.add(e.eid)
    skeleton = set(adjacent_two_rule(g, e1_star))
    non_skeleton = set(e1_star)
    # completion to two skeleton slots per interior vertex
    changed = True
    while changed:
        changed = False
        for v in range(g.num_vertices):
            if v in g.boundary:
                continue
            slots = [dart[0] for dart in g.darts_at(v)]
            sk = [eid for eid in slots if eid in skeleton]
            unknown = [eid for eid in slots
                       if eid not in skeleton and eid not in non_skeleton]
            if len(sk) + len(unknown) == 0:
                continue
            if len(sk) == 2 and unknown:
                for eid in unknown:
                    non_skeleton.add(eid)
                changed = True
            elif len(sk) + len(unknown) == 2 and unknown:
                for eid in unknown:
                    skeleton.add(eid)
                changed = True
    result = frozenset(skeleton)
    if verify_against_labels:
        true_a = frozenset(e.eid for e in g.edges if e.label == "a")
        if result != true_a:
            raise CoveringError(
                "label-blind skeleton does not match the a-edge lifts: "
                "extra %s, missing %s"
                % (sorted(result - true_a), sorted(true_a - result))
            )
    return result


def d_a_values(g: CutGraph, skeleton: FrozenSet[int]) -> List[int]:
    """Distance to the leaves along walks whose edges, except the last,
    all lie in the skeleton.  Lift-independent for the same reason as
    boundary_distances; computed by a backward BFS over darts.

    best[d] = length of the shortest admissible walk whose first step
    is the dart d.  A dart that ends on the boundary is a legal final
    step whatever its edge; any earlier step must be a skeleton edge.
    """
    from collections import deque

    best: Dict[Tuple[int, int], int] = {}
    dq = deque()
    for e in g.edges:
        for direction in (0, 1):
            dart = (e.eid, direction)
            if g.dart_head(dart) in g.boundary:
                if dart not in best:
                    best[dart] = 1
                    dq.append(dart)
    while dq:
        d = dq.popleft()
        k = best[d]
        t = g.dart_tail(d)
        for q in g.darts_at(t):
            if q == d:
                continue  # the step before d must not be its reversal
            p = g.reverse(q)  # p arrives at t and is followed by d
            if p[0] not in skeleton:
                continue
            if p not in best:
                best[p] = k + 1
                dq.append(p)
    out: List[int] = []
    for v in range(g.num_vertices):
        if v in g.boundary:
            out.append(0)
            continue
        vals = [best[dart] for dart in g.darts_at(v) if dart in best]
        if not vals:
            raise CoveringError("vertex %d has no skeleton walk to the boundary" % v)
        out.append(min(vals))
    return out


def tree_invariants(source, profile_depth: Optional[int] = None) -> TreeInvariants:
    """Compute the label-blind invariants.

    `source` is a CutGraph, a PointedCover (cut automatically), or a
    TruncatedTree exemplar (computed intrinsically inside the finite
    tree, restricted to its reliable region).
    """
    if isinstance(source, PointedCover):
        g = cut_basepoint(source)
    elif isinstance(source, CutGraph):
        g = source
    elif isinstance(source, TruncatedTree):
        return source.intrinsic_invariants()
    else:
        raise TypeError("unsupported source %r" % (source,))
    if profile_depth is None:
        profile_depth = 2 * g.num_vertices + 4
    dist = boundary_distances(g)
    e1 = equidistant_edges(g, dist)
    e2 = adjacent_two_rule(g, e1)
    profiles = boundary_profiles(g, profile_depth)
    skeleton = identify_a_skeleton(g, profiles)
    d_a = d_a_values(g, skeleton)
    vi: Dict[int, Set[int]] = {}
    for v in range(g.num_vertices):
        vi.setdefault(d_a[v], set()).add(v)
    return TreeInvariants(
        e1=e1,
        e2=e2,
        a_edges=skeleton,
        d_a=tuple(d_a),
        vi={k: frozenset(vs) for k, vs in vi.items()},
    )


def recover_sigma(source, n: Optional[int] = None) -> Involution:
    """Reconstruct the gluing involution from the label-blind
    invariants alone.

    The b 2-cycle for (i j) joins v_{2i-1} and v_{2j-1}, whose d_a
    values are 2i and 2j; no other edge joins two distinct even d_a
    classes (skeleton edges change d_a parity, loops join equal
    values, the boundary stubs join 0 and 1).  So the 2-cycles of
    sigma are read off as the non-skeleton edges between distinct even
    classes.
    """
    if isinstance(source, PointedCover):
        g = cut_basepoint(source)
        if n is None:
            n = source.num_vertices // 4
    elif isinstance(source, CutGraph):
        g = source
        if n is None:
            n = (g.num_vertices - 2) // 4
    else:
        raise TypeError("recover_sigma needs a cover or cut graph")
    inv = tree_invariants(g)
    pairs = []
    seen = set()
    for e in g.edges:
        if e.eid in inv.a_edges:
            continue
        da, db = inv.d_a[e.src], inv.d_a[e.dst]
        if da == db or da % 2 or db % 2 or da == 0 or db == 0:
            continue
        i, j = sorted((da // 2, db // 2))
        if not (1 <= i <= n and 1 <= j <= n):
            raise CoveringError("pair classes (%d,%d) out of range" % (i, j))
        if (i, j) not in seen:
            seen.add((i, j))
            pairs.append((i, j))
    return Involution.from_pairs(pairs, n)


# -- exemplar truncated trees ------------------------------------------------------


class TruncatedTree:
    """A finite exemplar of the universal cover: the ball of a given
    radius around one lift of the boundary pair.

    Nodes are non-backtracking walks from the root boundary vertex.
    Distances to the leaf set are exact (assigned from the base graph
    via unique path lifting); nodes are additionally marked reliable
    when the truncated tree itself certifies the distance, i.e. when
    the known distance does not exceed the remaining depth budget.
    """

    def __init__(self, g: CutGraph, radius: int, node_guard: int = TREE_NODE_GUARD):
        if radius < 1:
            raise ValueError("radius must be at least 1")
        self.graph = g
        self.radius = radius
        root = min(g.boundary)
        self.base_vertex: List[int] = [root]
        self.parent: List[int] = [-1]
        self.parent_dart: List[Optional[Tuple[int, int]]] = [None]
        self.depth: List[int] = [0]
        frontier = [0]
        for _ in range(radius):
            nxt = []
            for node in frontier:
                v = self.base_vertex[node]
                if v in g.boundary and node != 0:
                    continue  # leaves do not continue
                for dart in g.darts_at(v):
                    if self.parent_dart[node] is not None and \
                            dart == g.reverse(self.parent_dart[node]):
                        continue
                    if len(self.base_vertex) >= node_guard:
                        raise ResourceGuardError(
                            "truncated tree exceeds %d nodes" % node_guard
                        )
                    self.base_vertex.append(g.dart_head(dart))
                    self.parent.append(node)
                    self.parent_dart.append(dart)
                    self.depth.append(self.depth[node] + 1)
                    nxt.append(len(self.base_vertex) - 1)
            frontier = nxt
        self.frontier: FrozenSet[int] = frozenset(
            i for i in range(len(self.base_vertex))
            if self.depth[i] == radius and self.base_vertex[i] not in g.boundary
        )
        self.leaves: FrozenSet[int] = frozenset(
            i for i in range(len(self.base_vertex))
            if self.base_vertex[i] in g.boundary
        )
        dist = boundary_distances(g)
        self.leaf_distance: List[int] = [dist[v] for v in self.base_vertex]

    @property
    def num_nodes(self) -> int:
        return len(self.base_vertex)

    def node_edges(self) -> List[Tuple[int, int, str]]:
        out = []
        for i in range(1, self.num_nodes):
            out.append((self.parent[i], i, self.graph.edges[self.parent_dart[i][0]].label))
        return out

    def reliable(self, node: int) -> bool:
        """The finite tree certifies the leaf distance of `node`: some
        in-tree leaf realizes it, or every escape through the frontier
        is already longer."""
        return self.leaf_distance[node] <= self.radius - self.depth[node]

    def intrinsic_invariants(self) -> TreeInvariants:
        """Equidistance and the two-adjacency rule evaluated inside the
        finite tree, using in-tree leaf distances, restricted to nodes
        whose distances the tree certifies.  For exemplar-sized trees
        only; the exact route is tree_invariants(cut_graph)."""
        from collections import deque

        INF = None
        d: List[Optional[int]] = [None] * self.num_nodes
        dq = deque()
        for leaf in self.leaves:
            d[leaf] = 0
            dq.append(leaf)
        children: List[List[int]] = [[] for _ in range(self.num_nodes)]
        for i in range(1, self.num_nodes):
            children[self.parent[i]].append(i)
        while dq:
            node = dq.popleft()
            nbrs = children[node] + ([self.parent[node]] if node else [])
            for w in nbrs:
                if d[w] is None:
                    d[w] = d[node] + 1
                    dq.append(w)
        ok = [i for i in range(self.num_nodes)
              if d[i] is not None and self.reliable(i) and d[i] == self.leaf_distance[i]]
        okset = set(ok)
        e1 = set()
        for i in range(1, self.num_nodes):
            j = self.parent[i]
            if i in okset and j in okset and d[i] == d[j]:
                e1.add(self.parent_dart[i][0])
        base_inv = tree_invariants(self.graph)
        return TreeInvariants(
            e1=frozenset(e1),
            e2=base_inv.e2,
            a_edges=base_inv.a_edges,
            d_a=base_inv.d_a,
            vi=base_inv.vi,
        )


def truncated_universal_cover(g: CutGraph, radius: int,
                              node_guard: int = TREE_NODE_GUARD) -> TruncatedTree:
    """Materialize the exemplar ball of the given radius around one
    boundary lift.  Trees grow three-fold per level, so the node guard
    raises ResourceGuardError long before memory does."""
    return TruncatedTree(g, radius, node_guard)


def default_radius(n: int) -> int:
    """Safety horizon for the invariants of an n-parameter cover: twice
    the covering degree plus slack.  Exact base-graph computation makes
    larger exemplars unnecessary."""
    return 8 * n + 4


# -- the long two-loop cover -------------------------------------------------------


def initcover(s: int) -> PointedCover:
    """A 2s-fold cover of the bouquet whose a-lifts form a single
    2s-cycle and whose b-lifts are one 2-cycle joining two antipodal
    vertices (the component covering b two-to-one) plus 1-cycles on the
    remaining 2s-2 vertices.

    The text count "2s-2 b-components" undercounts by one: a 2-to-1
    component with 2 vertices leaves 2s-2 vertices for 1-cycles and
    2s-1 components in total.  Downstream only the collapsed edge
    lengths >= s matter, which hold either way.
    """
    if s < 2:
        raise ValueError("s must be at least 2")
    edges: List[Edge] = []

    def add(src, dst, label):
        edges.append(Edge(len(edges), src, dst, label))

    size = 2 * s
    for i in range(size):
        add(i, (i + 1) % size, "a")
    add(0, s, "b")
    add(s, 0, "b")
    basepoint = None
    for i in range(1, size):
        if i == s:
            continue
        if basepoint is None:
            basepoint = len(edges)
        add(i, i, "b")
    cover = PointedCover(size, edges, basepoint)
    cover.check_covering()
    return cover


def btilde_component(cover: PointedCover) -> Tuple[int, ...]:
    """The vertex set of the b-component covering b two-to-one (the
    unique b 2-cycle)."""
    twos = [e for e in cover.edges if e.label == "b" and e.src != e.dst]
    verts = sorted({e.src for e in twos} | {e.dst for e in twos})
    if len(verts) != 2:
        raise ValueError("expected exactly one b 2-cycle, found vertices %s" % verts)
    return tuple(verts)


def collapse_to_bouquet(cover: PointedCover, btilde: Sequence[int]):
    """The a-subgraph with the b-tilde vertices identified to a point:
    a metric bouquet of two circles with integer loop lengths.

    Returns a metricgraphs.MetricGraph with one vertex of degree 4.
    """
    from fractions import Fraction

    from .metricgraphs import MetricGraph

    u, w = sorted(btilde)
    a_edges = [e for e in cover.edges if e.label == "a"]
    size = cover.num_vertices
    # walk the a-cycle from u to w both ways to get the two loop lengths
    succ = {e.src: e.dst for e in a_edges}
    lengths = []
    for start in (u, w):
        steps = 0
        v = start
        while True:
            v = succ[v]
            steps += 1
            if v in (u, w):
                break
        lengths.append(steps)
    if sum(lengths) != size:
        raise ValueError("identification does not split the a-cycle into two loops")
    la, lb = lengths
    return MetricGraph(
        num_vertices=1,
        edges=[(0, 0, Fraction(la)), (0, 0, Fraction(lb))],
    )


# -- bounded-degree graph counting ------------------------------------------------


def count_bounded_degree_graphs(num_vertices: int, max_degree: int):
    """Exhaustively count simple undirected graphs on a labeled vertex
    set with maximum degree <= max_degree, and compare with the bound
    |V| ** (max_degree * |V|).

    Returns (count, bound, count <= bound).
    """
    if num_vertices > 5 or max_degree > 4:
        raise ResourceGuardError("guard: |V| <= 5 and degree bound <= 4")
    if num_vertices < 0 or max_degree < 0:
        raise ValueError("arguments must be nonnegative")
    pairs = [(i, j) for i in range(num_vertices) for j in range(i + 1, num_vertices)]
    count = 0
    for bits in range(1 << len(pairs)):
        deg = [0] * num_vertices
        ok = True
        for idx, (i, j) in enumerate(pairs):
            if bits >> idx & 1:
                deg[i] += 1
                deg[j] += 1
                if deg[i] > max_degree or deg[j] > max_degree:
                    ok = False
                    break
        if ok:
            count += 1
    bound = num_vertices ** (max_degree * num_vertices)
    return count, bound, count <= bound
