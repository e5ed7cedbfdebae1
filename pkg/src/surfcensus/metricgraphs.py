"""Metric graphs, rigidity thresholds, and a desk-scale quasi-isometry
search.

A metric graph is a finite multigraph (loops allowed) with a positive
rational length on each edge and the induced path metric.  A map
f: X -> Y is a (k,c)-quasi-isometry when

    d(fx1, fx2)/k - c < d(x1, x2) < k d(fx1, fx2) + c

for all x1, x2 and every point of Y lies within c of the image.  For
graphs without degree-2 vertices whose edges are all longer than
u = 6 k^3 (k^2 + 3) c, quasi-isometric implies isomorphic; the search
below probes that rigidity empirically on sample nets.  Finding a
witness certifies the sampled conditions; finding none is evidence, not
proof, at the chosen density.

All lengths and thresholds are exact rationals, so every comparison in
the suite is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

ISO_SIZE_GUARD = 12


class ResourceGuardError(RuntimeError):
    pass


Num = Fraction


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class MetricGraph:
    """Finite connected multigraph with positive rational edge lengths."""

    def __init__(self, num_vertices: int, edges: Sequence[Tuple[int, int, Fraction]]):
        self.num_vertices = num_vertices
        self.edges: List[Tuple[int, int, Fraction]] = []
        for u, v, length in edges:
            length = _frac(length)
            if length <= 0:
                raise ValueError("edge lengths must be positive")
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise ValueError("edge endpoint out of range")
            self.edges.append((u, v, length))
        self._dist: Optional[List[List[Fraction]]] = None
        if not self._connected():
            raise ValueError("metric graph must be connected")

    def _connected(self) -> bool:
        if self.num_vertices == 0:
            return False
        adj = [[] for _ in range(self.num_vertices)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.num_vertices

    def degree(self, v: int) -> int:
        d = 0
        for u, w, _ in self.edges:
            if u == v:
                d += 1
            if w == v:
                d += 1
        return d

    def degrees(self) -> List[int]:
        return [self.degree(v) for v in range(self.num_vertices)]

    def min_edge_length(self) -> Fraction:
        return min(length for _, _, length in self.edges)

    def scaled(self, factor) -> "MetricGraph":
        factor = _frac(factor)
        return MetricGraph(
            self.num_vertices,
            [(u, v, length * factor) for u, v, length in self.edges],
        )

    # -- distances -------------------------------------------------------------

    def vertex_distances(self) -> List[List[Fraction]]:
        """All-pairs shortest path lengths between vertices (Dijkstra
        from every vertex, exact arithmetic).  Cached."""
        if self._dist is None:
            import heapq

            n = self.num_vertices
            adj: List[List[Tuple[int, Fraction]]] = [[] for _ in range(n)]
            for u, v, length in self.edges:
                adj[u].append((v, length))
                adj[v].append((u, length))
            table = []
            for s in range(n):
                dist: List[Optional[Fraction]] = [None] * n
                heap = [(Fraction(0), s)]
                while heap:
                    d, x = heapq.heappop(heap)
                    if dist[x] is not None:
                        continue
                    dist[x] = d
                    for y, length in adj[x]:
                        if dist[y] is None:
                            heapq.heappush(heap, (d + length, y))
                table.append(dist)
            self._dist = table
        return self._dist

    def serialize(self) -> List:
        return [[u, v, length.numerator, length.denominator]
                for u, v, length in self.edges]

    @classmethod
    def deserialize(cls, rows: Iterable[Sequence[int]]) -> "MetricGraph":
        edges = [(u, v, Fraction(num, den)) for u, v, num, den in rows]
        n = 1 + max(max(u, v) for u, v, _ in edges) if edges else 0
        return cls(n, edges)


@dataclass(frozen=True)
class Point:
    """A point of a metric graph: on edge `edge` at arc length `t` from
    the edge's first endpoint; vertices are offset 0 or the full
    length."""
    edge: int
    t: Fraction

    def __repr__(self):
        return "Point(e%d@%s)" % (self.edge, self.t)


def vertex_point(g: MetricGraph, v: int) -> Point:
    for eid, (u, w, length) in enumerate(g.edges):
        if u == v:
            return Point(eid, Fraction(0))
        if w == v:
            return Point(eid, length)
    raise ValueError("vertex %d is isolated" % v)


def distance(g: MetricGraph, p: Point, q: Point) -> Fraction:
    """Exact shortest-path length between two points (vertices or edge
    interiors)."""
    table = g.vertex_distances()
    pu, pv, plen = g.edges[p.edge]
    qu, qv, qlen = g.edges[q.edge]
    if not (0 <= p.t <= plen and 0 <= q.t <= qlen):
        raise ValueError("point offset outside its edge")
    best: Optional[Fraction] = None
    if p.edge == q.edge:
        best = abs(p.t - q.t)
    # through endpoints
    for (pend, poff) in ((pu, p.t), (pv, plen - p.t)):
        for (qend, qoff) in ((qu, q.t), (qv, qlen - q.t)):
            d = poff + table[pend][qend] + qoff
            if best is None or d < best:
                best = d
    return best


def sample_net(g: MetricGraph, density: int = 2) -> List[Point]:
    """Evenly spaced sample points, `density` per unit length along
    every edge, endpoints included; the net is 1/(2 density)-dense."""
    if density < 1:
        raise ValueError("density must be at least 1")
    pts: List[Point] = []
    seen_vertices: Set[int] = set()
    for eid, (u, v, length) in enumerate(g.edges):
        steps = int(length * density)
        offsets = [Fraction(i, density) for i in range(steps + 1)]
        if offsets[-1] != length:
            offsets.append(length)
        for t in offsets:
            if t == 0:
                if u in seen_vertices:
                    continue
                seen_vertices.add(u)
            elif t == length:
                if v in seen_vertices:
                    continue
                seen_vertices.add(v)
            pts.append(Point(eid, t))
    return pts


# -- thresholds -----------------------------------------------------------------


@dataclass(frozen=True)
class QIParams:
    """The rigidity threshold u = 6 k^3 (k^2+3) c with its satellite
    constants: a (k,c)-quasi-isometry admits a quasi-inverse with
    k' = k, c' = 3kc and displacement s = kc, and vertex images land
    within t = 3 k^2 (k^2+2) c < u/2 of vertices.

    boundary_regime flags parameters outside the open regime k, c > 1.
    """
    k: Fraction
    c: Fraction
    k_prime: Fraction
    c_prime: Fraction
    s: Fraction
    u: Fraction
    t: Fraction
    t_prime: Fraction
    boundary_regime: bool

    def as_dict(self) -> Dict[str, Fraction]:
        return {
            "k": self.k, "c": self.c, "k_prime": self.k_prime,
            "c_prime": self.c_prime, "s": self.s, "u": self.u,
            "t": self.t, "t_prime": self.t_prime,
        }


def thresholds(k, c) -> QIParams:
    """Derived constants, recomputed from (k, c) on every call."""
    k, c = _frac(k), _frac(c)
    if k <= 0 or c <= 0:
        raise ValueError("k and c must be positive")
    k_prime = k
    c_prime = 3 * k * c
    s = k * c
    u = 6 * k ** 3 * (k ** 2 + 3) * c
    t = 3 * k ** 2 * (k ** 2 + 2) * c
    t_prime = max((k_prime ** 2 + 2) * c, k * (k ** 2 + 2) * c)
    return QIParams(
        k=k, c=c, k_prime=k_prime, c_prime=c_prime, s=s, u=u, t=t,
        t_prime=t_prime, boundary_regime=not (k > 1 and c > 1),
    )


# -- quasi-isometry checking and search -------------------------------------------


def check_quasi_isometry(g1: MetricGraph, g2: MetricGraph,
                         mapping: Dict[Point, Point], k, c,
                         net2: Optional[List[Point]] = None,
                         strict: bool = True) -> bool:
    """Verify the two-sided inequalities on all pairs of mapped sample
    points and c-coarse surjectivity onto a net of the target.

    strict=False admits equality, the sensible reading at the boundary
    k = 1 where collapse maps attain the bound exactly.
    """
    k, c = _frac(k), _frac(c)
    items = sorted(mapping.items(), key=lambda kv: (kv[0].edge, kv[0].t))

    def lt(a, b):
        return a < b if strict else a <= b

    for (p1, q1), (p2, q2) in itertools.combinations(items, 2):
        dx = distance(g1, p1, p2)
        dy = distance(g2, q1, q2)
        if not (lt(dy / k - c, dx) and lt(dx, k * dy + c)):
            return False
    if net2 is None:
        net2 = sample_net(g2)
    image = [q for _, q in items]
    for y in net2:
        if not any(lt(distance(g2, y, q), c) for q in image):
            return False
    return True


def _annulus_candidates(g2: MetricGraph, net2: List[Point],
                        anchors: List[Tuple[Point, Fraction]], k, c) -> List[Point]:
    """Net points whose distance to every anchored image stays within
    the two-sided band for the anchored source distance."""
    out = []
    for q in net2:
        ok = True
        for q0, dx in anchors:
            dy = distance(g2, q, q0)
            if not (dy / k - c < dx and dx < k * dy + c):
                ok = False
                break
        if ok:
            out.append(q)
    return out


def anchor_points(g: MetricGraph) -> List[Point]:
    """The anchor family for the search: every vertex and every edge
    midpoint.  Midpoint anchors keep long parallel edges from being
    squeezed onto one shortest path during interpolation."""
    pts = [vertex_point(g, v) for v in range(g.num_vertices)]
    for eid, (u, v, length) in enumerate(g.edges):
        pts.append(Point(eid, length / 2))
    return pts


class _Grid:
    """Integer-grid view of a metric graph for the search engine.

    All lengths are scaled to integer units (scale = density times the
    lcm of the length denominators), the sample net becomes a list of
    integer offsets, and the net-to-net distance matrix is a numpy
    int64 array, so every comparison below is exact."""

    def __init__(self, g: MetricGraph, density: int):
        import numpy as np

        self.graph = g
        lcm = 1
        for _, _, length in g.edges:
            d = length.denominator
            lcm = lcm * d // _gcd(lcm, d)
        half = 1 if all((length * lcm * density) % 2 == 0 for _, _, length in g.edges) else 2
        self.scale = density * lcm * half  # units per length 1; midpoints on-grid
        self.spacing = self.scale // density  # net spacing in units
        self.lengths = [int(length * self.scale) for _, _, length in g.edges]
        # vertex distance table in units
        vd = g.vertex_distances()
        n = g.num_vertices
        self.vd = np.array(
            [[int(vd[i][j] * self.scale) for j in range(n)] for i in range(n)],
            dtype=np.int64,
        )
        # net points: (edge, offset units), offsets at spacing steps;
        # each vertex appears once, at its first incidence
        pts: List[Tuple[int, int]] = []
        self._vertex_net_index: Dict[int, int] = {}
        for eid, (u, v, _) in enumerate(g.edges):
            L = self.lengths[eid]
            offs = list(range(0, L + 1, self.spacing))
            if offs[-1] != L:
                offs.append(L)
            for off in offs:
                if off == 0:
                    if u in self._vertex_net_index:
                        continue
                    self._vertex_net_index[u] = len(pts)
                elif off == L:
                    if v in self._vertex_net_index:
                        continue
                    self._vertex_net_index[v] = len(pts)
                pts.append((eid, off))
        self.points = pts
        self.index: Dict[Tuple[int, int], int] = {pt: i for i, pt in enumerate(pts)}
        m = len(pts)
        eu = np.array([g.edges[e][0] for e, _ in pts], dtype=np.int64)
        ev = np.array([g.edges[e][1] for e, _ in pts], dtype=np.int64)
        off = np.array([o for _, o in pts], dtype=np.int64)
        rem = np.array([self.lengths[e] - o for e, o in pts], dtype=np.int64)
        d = np.minimum.reduce([
            off[:, None] + self.vd[eu][:, eu] + off[None, :],
            off[:, None] + self.vd[eu][:, ev] + rem[None, :],
            rem[:, None] + self.vd[ev][:, eu] + off[None, :],
            rem[:, None] + self.vd[ev][:, ev] + rem[None, :],
        ])
        edges_arr = np.array([e for e, _ in pts], dtype=np.int64)
        same = edges_arr[:, None] == edges_arr[None, :]
        direct = np.abs(off[:, None] - off[None, :])
        self.dist = np.where(same, np.minimum(d, direct), d)

    def locate(self, p: Point) -> int:
        off = p.t * self.scale
        if off != int(off):
            raise ValueError("point %r is not on the sample grid" % (p,))
        off = int(off)
        u, v, _ = self.graph.edges[p.edge]
        if off == 0:
            return self._vertex_net_index[u]
        if off == self.lengths[p.edge]:
            return self._vertex_net_index[v]
        key = (p.edge, off)
        if key not in self.index:
            raise ValueError("point %r is not on the sample grid" % (p,))
        return self.index[key]

    def point(self, i: int) -> Point:
        eid, off = self.points[i]
        return Point(eid, Fraction(off, self.scale))

    def vertex_index(self, v: int) -> int:
        return self._vertex_net_index[v]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def search_quasi_isometry(g1: MetricGraph, g2: MetricGraph, k, c,
                          density: int = 2,
                          node_budget: int = 200_000) -> Optional[Dict[Point, Point]]:
    """Search for a sampled (k,c)-quasi-isometry witness g1 -> g2.

    Anchor images (vertices and edge midpoints) are searched by
    lexicographic backtracking over the target net with two-sided
    distance pruning; the remaining samples follow by constant-speed
    travel along shortest paths between consecutive anchor images,
    snapped to the target net.  Complete assignments pass tiered checks
    (anchor pairs are implied by the pruning; then full pairs, then
    coarse density), all in exact integer arithmetic.

    The first witness in lexicographic order is returned, so the
    result is deterministic.  None means no witness in the searched
    anchor family at this density: evidence against a quasi-isometry,
    not a proof.
    """
    import numpy as np

    k, c = _frac(k), _frac(c)
    grid1 = _Grid(g1, density)
    grid2 = _Grid(g2, density)
    s1, s2 = grid1.scale, grid2.scale
    kn, kd = k.numerator, k.denominator
    cn, cd = c.numerator, c.denominator

    # dy/k - c < dx  <=>  D2*kd*cd*s1 - cn*kn*s1*s2 < D1*kn*cd*s2
    # dx < k*dy + c  <=>  D1*kd*cd*s2 < D2*kn*cd*s1 + cn*kd*s1*s2
    D1, D2 = grid1.dist, grid2.dist

    def band_mask(dx_units: int, row: "np.ndarray") -> "np.ndarray":
        lo = row * (kd * cd * s1) - cn * kn * s1 * s2 < dx_units * (kn * cd * s2)
        hi = dx_units * (kd * cd * s2) < row * (kn * cd * s1) + cn * kd * s1 * s2
        return lo & hi

    anchors1 = anchor_points(g1)
    aidx1 = [grid1.locate(p) for p in anchors1]
    m2 = len(grid2.points)
    nodes = 0

    def leaf_check(images: List[int]) -> Optional[Dict[Point, Point]]:
        im = _interpolate_grid(grid1, grid2, anchors1, images)
        D2im = D2[np.ix_(im, im)]
        lo = D2im * (kd * cd * s1) - cn * kn * s1 * s2 < D1 * (kn * cd * s2)
        hi = D1 * (kd * cd * s2) < D2im * (kn * cd * s1) + cn * kd * s1 * s2
        iu = np.triu_indices(len(im), 1)
        if not (lo[iu].all() and hi[iu].all()):
            return None
        # c-density of the image on the target net: D2/s2 < c
        cover = D2[:, sorted(set(im))].min(axis=1) * cd < cn * s2
        if not cover.all():
            return None
        return {grid1.point(i): grid2.point(im[i]) for i in range(len(im))}

    def assign(i: int, images: List[int]) -> Optional[Dict[Point, Point]]:
        nonlocal nodes
        if i == len(aidx1):
            return leaf_check(images)
        mask = np.ones(m2, dtype=bool)
        for j, qj in enumerate(images):
            dxj = int(D1[aidx1[j], aidx1[i]])
            mask &= band_mask(dxj, D2[qj])
        for q in np.flatnonzero(mask):
            nodes += 1
            if nodes > node_budget:
                raise ResourceGuardError("search budget exceeded")
            result = assign(i + 1, images + [int(q)])
            if result is not None:
                return result
        return None

    return assign(0, [])


def _interpolate_grid(grid1: "_Grid", grid2: "_Grid", anchors1: List[Point],
                      images: List[int]) -> List[int]:
    """Image index for every net point of the source: anchors map to
    their assigned images, everything else travels at constant speed
    along a shortest path between its half-edge's anchor images and is
    snapped to the target grid."""
    g1, g2 = grid1.graph, grid2.graph
    img_of_anchor = {(p.edge, int(p.t * grid1.scale)): q
                     for p, q in zip(anchors1, images)}
    vert_img: Dict[int, int] = {}
    for v in range(g1.num_vertices):
        p = vertex_point(g1, v)
        vert_img[v] = img_of_anchor[(p.edge, int(p.t * grid1.scale))]
    path_cache: Dict[Tuple[int, int], Tuple[List, Fraction]] = {}

    def path(qa: int, qb: int):
        if (qa, qb) not in path_cache:
            path_cache[(qa, qb)] = _shortest_path_segments(
                g2, grid2.point(qa), grid2.point(qb))
        return path_cache[(qa, qb)]

    out: List[int] = []
    for eid, off in grid1.points:
        L = grid1.lengths[eid]
        u, v, _ = g1.edges[eid]
        half = L // 2
        qmid = img_of_anchor[(eid, half)]
        if off <= half:
            qa, qb = vert_img[u], qmid
            t0, span1 = off, half
        else:
            qa, qb = qmid, vert_img[v]
            t0, span1 = off - half, L - half
        if t0 == 0:
            out.append(qa)
            continue
        if t0 == span1:
            out.append(qb)
            continue
        segs, span2 = path(qa, qb)
        arc = span2 * t0 / span1
        q = _point_on_segments(g2, segs, span2, grid2.point(qa), grid2.point(qb), arc)
        out.append(grid2.locate(_snap(grid2, q)))
    return out


def _snap(grid2: "_Grid", q: Point) -> Point:
    """Snap a point to the nearest on-grid sample of its edge (ties
    round down), clamped to the edge."""
    L = grid2.lengths[q.edge]
    units = q.t * grid2.scale
    step = grid2.spacing
    lo = (int(units) // step) * step
    hi = min(lo + step, ((L // step) * step))
    cand = [lo, hi, L] if hi < L else [lo, L]
    best = min(cand, key=lambda o: (abs(units - o), o))
    return Point(q.edge, Fraction(best, grid2.scale))


def _shortest_path_segments(g: MetricGraph, a: Point, b: Point):
    """One shortest path from a to b as (edge, t_from, t_to) segments;
    continuation ties break by offset then edge id, deterministically."""
    total = distance(g, a, b)
    if a.edge == b.edge and abs(b.t - a.t) == total:
        return [(a.edge, a.t, b.t)], total

    def vdist_to_b(v: int) -> Fraction:
        return distance(g, vertex_point(g, v), b)

    segs = []
    au, av, alen = g.edges[a.edge]
    exits = []
    for end, t_end in ((au, Fraction(0)), (av, alen)):
        off = abs(a.t - t_end)
        if off + vdist_to_b(end) == total:
            exits.append((off, end, t_end))
    off, v, t_end = min(exits)
    if off > 0:
        segs.append((a.edge, a.t, t_end))
    remaining = total - off
    while remaining > 0:
        bu, bv, blen = g.edges[b.edge]
        if v == bu and b.t == remaining:
            segs.append((b.edge, Fraction(0), b.t))
            break
        if v == bv and blen - b.t == remaining:
            segs.append((b.edge, blen, b.t))
            break
        stepped = False
        for eid, (x, y, ln) in enumerate(g.edges):
            hops = []
            if x == v:
                hops.append((y, Fraction(0), ln))
            if y == v:
                hops.append((x, ln, Fraction(0)))
            for other, t0, t1 in hops:
                if ln <= remaining and ln + vdist_to_b(other) == remaining:
                    segs.append((eid, t0, t1))
                    v = other
                    remaining -= ln
                    stepped = True
                    break
            if stepped:
                break
        if not stepped:
            raise RuntimeError("shortest-path walk lost its way")
    return segs, total


def _point_on_segments(g: MetricGraph, segs, total, a: Point, b: Point,
                       arc: Fraction) -> Point:
    if arc <= 0:
        return a
    if arc >= total:
        return b
    acc = Fraction(0)
    for eid, t0, t1 in segs:
        ln = abs(t1 - t0)
        if acc + ln >= arc:
            step = arc - acc
            t = t0 + step if t1 > t0 else t0 - step
            return Point(eid, t)
        acc += ln
    return b


# -- combinatorial isomorphism -----------------------------------------------------


def canonical_multigraph_form(g: MetricGraph) -> Tuple:
    """Canonical form of the underlying multigraph: lengths ignored,
    loops and multiplicities kept.  Color refinement narrows the
    permutation search; sizes are guarded."""
    n = g.num_vertices
    if n > ISO_SIZE_GUARD:
        raise ResourceGuardError("isomorphism guard: at most %d vertices" % ISO_SIZE_GUARD)
    mult: Dict[Tuple[int, int], int] = {}
    loops = [0] * n
    for u, v, _ in g.edges:
        if u == v:
            loops[u] += 1
        else:
            key = (min(u, v), max(u, v))
            mult[key] = mult.get(key, 0) + 1

    raw = [(g.degree(v), loops[v]) for v in range(n)]
    ranks = {c: i for i, c in enumerate(sorted(set(raw)))}
    colors = [ranks[c] for c in raw]
    while True:
        new = []
        for v in range(n):
            row = sorted(
                (colors[w], m) for (a, b), m in mult.items()
                for w in ((b,) if a == v else ()) + ((a,) if b == v else ())
            )
            new.append((colors[v], tuple(row)))
        ranks = {c: i for i, c in enumerate(sorted(set(new)))}
        refreshed = [ranks[c] for c in new]
        if refreshed == colors:
            break
        colors = refreshed

    best: Optional[Tuple] = None
    cells: Dict[int, List[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    orderings = [sorted(cells[c]) for c in sorted(cells)]

    def encode(perm: Sequence[int]) -> Tuple:
        pos = {v: i for i, v in enumerate(perm)}
        rows = []
        for v in perm:
            rows.append((loops[v], tuple(sorted(
                (pos[w], m) for (a, b), m in mult.items()
                for w in ((b,) if a == v else ()) + ((a,) if b == v else ())
            ))))
        return tuple(rows)

    for perm_parts in itertools.product(*(itertools.permutations(cell) for cell in orderings)):
        perm = [v for part in perm_parts for v in part]
        code = encode(perm)
        if best is None or code < best:
            best = code
    return best


def is_isomorphic(g1: MetricGraph, g2: MetricGraph) -> bool:
    """Combinatorial isomorphism of the underlying multigraphs; edge
    lengths are not compared."""
    if g1.num_vertices != g2.num_vertices or len(g1.edges) != len(g2.edges):
        return False
    return canonical_multigraph_form(g1) == canonical_multigraph_form(g2)


# -- suite graph generators ---------------------------------------------------------


def _theta_graph(lengths) -> MetricGraph:
    return MetricGraph(2, [(0, 1, _frac(x)) for x in lengths])


def suite_pairs(rng, count: int, min_length: Fraction,
                isomorphic: bool) -> List[Tuple[MetricGraph, MetricGraph]]:
    """Deterministic pairs of degree->=3 metric graphs with all edges
    longer than min_length, either isomorphic (relabeled copies) or
    structurally different.

    The generator is seeded by the caller; no ambient randomness.
    """
    min_length = _frac(min_length)
    base = int(min_length) + 1

    def bump():
        return base + rng.randrange(0, 4)

    shapes = []
    # multi-edge "theta"-style graphs and small cubic graphs
    shapes.append(lambda: _theta_graph([bump(), bump(), bump()]))
    shapes.append(lambda: _theta_graph([bump(), bump(), bump(), bump()]))
    shapes.append(lambda: MetricGraph(1, [(0, 0, _frac(bump())), (0, 0, _frac(bump()))]))
    shapes.append(lambda: MetricGraph(4, [
        (0, 1, _frac(bump())), (0, 2, _frac(bump())), (0, 3, _frac(bump())),
        (1, 2, _frac(bump())), (1, 3, _frac(bump())), (2, 3, _frac(bump())),
    ]))  # K4
    shapes.append(lambda: MetricGraph(2, [
        (0, 0, _frac(bump())), (0, 1, _frac(bump())), (1, 1, _frac(bump())),
    ]))  # dumbbell
    shapes.append(lambda: MetricGraph(3, [
        (0, 1, _frac(bump())), (1, 2, _frac(bump())), (2, 0, _frac(bump())),
        (0, 1, _frac(bump())),
    ]))  # triangle with a doubled side: degrees 3,3,2 -- reject below

    def degree_ok(g):
        return all(d >= 3 for d in g.degrees())

    pool = []
    while len(pool) < 6:
        for make in shapes:
            g = make()
            if degree_ok(g) and g.min_edge_length() > min_length:
                pool.append(g)

    pairs = []
    while len(pairs) < count:
        g = pool[rng.randrange(len(pool))]
        if isomorphic:
            perm = list(range(g.num_vertices))
            rng.shuffle(perm)
            h = MetricGraph(g.num_vertices,
                            [(perm[u], perm[v], length) for u, v, length in g.edges])
            pairs.append((g, h))
        else:
            h = pool[rng.randrange(len(pool))]
            if not is_isomorphic(g, h):
                pairs.append((g, h))
    return pairs
