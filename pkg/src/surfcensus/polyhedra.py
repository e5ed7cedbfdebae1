"""Combinatorial compact right-angled polyhedra.

A polyhedron here is the combinatorial boundary 2-sphere of a compact
hyperbolic polyhedron all of whose dihedral angles are pi/2: faces are
cyclic sequences of edges, every edge borders exactly two faces, every
vertex has degree three.  Compactness with right angles forces every
face to have at least five edges, forbids rings of three or four faces,
and forces at least twelve faces; the validator checks exactly these
combinatorial conditions and nothing metric.

The module also implements the pieces of face combinatorics the surface
construction needs: face rings ("face loops"), face disks, the convexity
condition (the faces crossed by the boundary of a disk form a ring),
mirror doubling across a face, and amalgamation of disks across a glued
face.

All objects are immutable after construction and every function is
pure, so concurrent readers are safe.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple


class StructuralError(ValueError):
    """The face/edge incidence data does not describe a closed 2-sphere
    complex with degree-3 vertices."""


class InvalidInputError(ValueError):
    """A well-formed request that violates an operation's preconditions."""


Corner = FrozenSet[int]  # unordered pair of consecutive edges in some face


@dataclass(frozen=True)
class ValidationIssue:
    code: str        # "structural" or "coxeter"
    message: str


@dataclass(frozen=True)
class ValidationReport:
    issues: Tuple[ValidationIssue, ...]

    @property
    def ok(self) -> bool:
        return not self.issues

    def messages(self) -> List[str]:
        return [i.message for i in self.issues]

    def __bool__(self) -> bool:  # truthy iff valid
        return self.ok


class Polyhedron:
    """Immutable face/edge incidence structure of a polyhedral 2-sphere.

    faces[f] is the cyclic sequence of edge ids around face f; edges[e]
    is the unordered pair of faces bordering edge e.  Vertices are not
    stored: they are re-derived as triples of mutually consecutive edges
    (one triple per degree-3 vertex), which doubles as a structural
    check.
    """

    def __init__(self, faces: Sequence[Sequence[int]], edges: Sequence[Sequence[int]]):
        self.faces: Tuple[Tuple[int, ...], ...] = tuple(tuple(c) for c in faces)
        self.edges: Tuple[Tuple[int, int], ...] = tuple(
            (min(p), max(p)) for p in (tuple(e) for e in edges)
        )
        self._check_indices()
        self.adjacency: Tuple[FrozenSet[int], ...] = self._face_adjacency()
        self.vertices: Tuple[Corner, ...] = self._derive_vertices()
        self._edge_vertices: Dict[int, Tuple[Corner, ...]] = self._edge_vertex_map()
        self._canonical: Optional[Tuple] = None

    # -- construction checks -------------------------------------------------

    def _check_indices(self):
        ne, nf = len(self.edges), len(self.faces)
        seen: Dict[int, List[int]] = {}
        for f, cycle in enumerate(self.faces):
            if len(cycle) < 3:
                raise StructuralError("face %d has fewer than 3 edges" % f)
            if len(set(cycle)) != len(cycle):
                raise StructuralError("face %d repeats an edge" % f)
            for e in cycle:
                if not (0 <= e < ne):
                    raise StructuralError("face %d uses unknown edge %d" % (f, e))
                seen.setdefault(e, []).append(f)
        for e, (f, g) in enumerate(self.edges):
            if not (0 <= f < nf and 0 <= g < nf):
                raise StructuralError("edge %d names unknown face" % e)
            if f == g:
                raise StructuralError("edge %d borders face %d on both sides" % (e, f))
            if sorted(seen.get(e, [])) != sorted((f, g)):
                raise StructuralError(
                    "edge %d incidence mismatch: faces list %s, cycles list %s"
                    % (e, sorted((f, g)), sorted(seen.get(e, [])))
                )

    def _face_adjacency(self) -> Tuple[FrozenSet[int], ...]:
        adj: List[set] = [set() for _ in self.faces]
        for f, g in self.edges:
            adj[f].add(g)
            adj[g].add(f)
        return tuple(frozenset(s) for s in adj)

    def corners(self) -> Iterator[Tuple[int, int, int]]:
        """(face, edge, next_edge) for every corner of every face."""
        for f, cycle in enumerate(self.faces):
            k = len(cycle)
            for i in range(k):
                yield f, cycle[i], cycle[(i + 1) % k]

    def _derive_vertices(self) -> Tuple[Corner, ...]:
        """Recover degree-3 vertices by stitching corners.

        At a degree-3 vertex with edges {a,b,c} the three surrounding
        faces contribute exactly the corners {a,b}, {b,c}, {a,c}.  Each
        unordered pair of edges may occur as a corner only once.
        """
        corner_set = set()
        for _, a, b in self.corners():
            pair = frozenset((a, b))
            if pair in corner_set:
                raise StructuralError("corner %s occurs in two faces" % sorted(pair))
            corner_set.add(pair)
        # neighbours of e via corners
        nbrs: Dict[int, set] = {e: set() for e in range(len(self.edges))}
        for pair in corner_set:
            a, b = tuple(pair)
            nbrs[a].add(b)
            nbrs[b].add(a)
        triples = set()
        for pair in corner_set:
            a, b = tuple(pair)
            third = nbrs[a] & nbrs[b]
            if len(third) != 1:
                raise StructuralError(
                    "corner %s does not close into a degree-3 vertex" % sorted(pair)
                )
            triples.add(pair | third)
        for t in triples:
            if len(t) != 3:
                raise StructuralError("vertex %s is not an edge triple" % sorted(t))
            # all three corner pairs must be present
            a, b, c = sorted(t)
            for pair in (frozenset((a, b)), frozenset((b, c)), frozenset((a, c))):
                if pair not in corner_set:
                    raise StructuralError("vertex %s misses corner %s" % (sorted(t), sorted(pair)))
        # every edge has exactly 4 corners and 2 endpoints
        for e in range(len(self.edges)):
            count = sum(1 for t in triples if e in t)
            if count != 2:
                raise StructuralError("edge %d has %d endpoints, expected 2" % (e, count))
        return tuple(sorted(triples, key=sorted))

    def _edge_vertex_map(self) -> Dict[int, Tuple[Corner, ...]]:
        m: Dict[int, List[Corner]] = {e: [] for e in range(len(self.edges))}
        for v in self.vertices:
            for e in v:
                m[e].append(v)
        return {e: tuple(vs) for e, vs in m.items()}

    # -- basic queries --------------------------------------------------------

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + self.num_faces

    def faces_adjacent(self, f: int, g: int) -> bool:
        return g in self.adjacency[f]

    def edge_between(self, f: int, g: int) -> List[int]:
        """All edges shared by faces f and g."""
        return [e for e, pair in enumerate(self.edges) if set(pair) == {f, g}]

    def other_face(self, e: int, f: int) -> int:
        a, b = self.edges[e]
        if f == a:
            return b
        if f == b:
            return a
        raise InvalidInputError("edge %d does not border face %d" % (e, f))

    def edge_endpoints(self, e: int) -> Tuple[Corner, ...]:
        return self._edge_vertices[e]

    def face_vertices(self, f: int) -> List[Corner]:
        cycle = self.faces[f]
        k = len(cycle)
        out = []
        for i in range(k):
            pair = frozenset((cycle[i], cycle[(i + 1) % k]))
            vs = [v for v in self.edge_endpoints(cycle[i]) if pair <= v]
            out.append(vs[0])
        return out

    def is_connected(self) -> bool:
        if not self.faces:
            return False
        seen = {0}
        stack = [0]
        while stack:
            f = stack.pop()
            for g in self.adjacency[f]:
                if g not in seen:
                    seen.add(g)
                    stack.append(g)
        return len(seen) == self.num_faces

    # -- canonical form -------------------------------------------------------

    def canonical_form(self) -> Tuple:
        """Minimal incidence encoding over all starting flags and both
        traversal orientations; two polyhedra are isomorphic iff their
        canonical forms are equal."""
        if self._canonical is None:
            self._canonical = min(self._encodings())
        return self._canonical

    def _encodings(self) -> Iterator[Tuple]:
        for f0 in range(self.num_faces):
            cycle = self.faces[f0]
            for i0 in range(len(cycle)):
                for flip in (False, True):
                    yield self._encode_from(f0, i0, flip)

    def _oriented_cycle(self, f: int, start_edge: int, flip: bool) -> List[int]:
        cycle = list(self.faces[f])
        if flip:
            cycle = cycle[::-1]
        i = cycle.index(start_edge)
        return cycle[i:] + cycle[:i]

    def _encode_from(self, f0: int, i0: int, flip: bool) -> Tuple:
        """Breadth-first relabeling starting from the flag (f0, edge i0).

        Face labels are assigned in discovery order; each face's cycle
        starts at the edge through which the face was discovered and is
        oriented so that the shared edge is traversed oppositely by the
        two faces (stored cycle orientations are arbitrary, so the
        direction is matched through the edge's endpoints).
        """
        start_edge = self.faces[f0][i0]
        cyc0 = self._oriented_cycle(f0, start_edge, flip)
        face_label = {f0: 0}
        order = [(f0, cyc0)]
        queue = [(f0, cyc0)]
        while queue:
            f, cyc = queue.pop(0)
            k = len(cyc)
            for i, e in enumerate(cyc):
                g = self.other_face(e, f)
                if g not in face_label:
                    face_label[g] = len(face_label)
                    u = _corner_vertex(self, cyc[i - 1], e)
                    v = _corner_vertex(self, e, cyc[(i + 1) % k])
                    gcyc = self._oriented_cycle_matching(g, e, v, u)
                    order.append((g, gcyc))
                    queue.append((g, gcyc))
        rows = []
        for f, cyc in order:
            rows.append(tuple(face_label[self.other_face(e, f)] for e in cyc))
        return tuple(rows)

    def _oriented_cycle_matching(self, g: int, e: int, u: Corner, v: Corner) -> List[int]:
        """The cycle of g starting at e, oriented so e runs from u to v."""
        for fl in (False, True):
            cyc = self._oriented_cycle(g, e, fl)
            su = _corner_vertex(self, cyc[-1], e)
            sv = _corner_vertex(self, e, cyc[1])
            if su == u and sv == v:
                return cyc
        raise StructuralError("could not orient face %d across edge %d" % (g, e))

    def __eq__(self, other) -> bool:
        return isinstance(other, Polyhedron) and (
            self.faces == other.faces and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.faces, self.edges))

    def __repr__(self) -> str:
        return "Polyhedron(F=%d, E=%d, V=%d)" % (
            self.num_faces, self.num_edges, self.num_vertices,
        )

    # -- serialization --------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps(
            {"faces": [list(c) for c in self.faces],
             "edges": [list(p) for p in self.edges]},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "Polyhedron":
        data = json.loads(text)
        return cls(data["faces"], data["edges"])


# -- builtin complexes ---------------------------------------------------------


def _polyhedron_from_adjacency(neighbor_rings: Sequence[Sequence[int]]) -> Polyhedron:
    """Build faces-as-edge-cycles from each face's cyclically ordered
    neighbor list."""
    edge_id: Dict[Tuple[int, int], int] = {}
    edges: List[Tuple[int, int]] = []
    for f, ring in enumerate(neighbor_rings):
        for g in ring:
            key = (min(f, g), max(f, g))
            if key not in edge_id:
                edge_id[key] = len(edges)
                edges.append(key)
    faces = []
    for f, ring in enumerate(neighbor_rings):
        faces.append([edge_id[(min(f, g), max(f, g))] for g in ring])
    return Polyhedron(faces, edges)


def dodecahedron() -> Polyhedron:
    """The combinatorial regular dodecahedron: 12 pentagons, 30 edges,
    20 degree-3 vertices.  Face 0 is a cap, faces 1-5 and 6-10 are the
    two rings, face 11 is the opposite cap."""
    rings = [
        [1, 2, 3, 4, 5],
        [0, 2, 7, 6, 5],
        [0, 3, 8, 7, 1],
        [0, 4, 9, 8, 2],
        [0, 5, 10, 9, 3],
        [0, 1, 6, 10, 4],
        [1, 7, 11, 10, 5],
        [2, 8, 11, 6, 1],
        [3, 9, 11, 7, 2],
        [4, 10, 11, 8, 3],
        [5, 6, 11, 9, 4],
        [6, 7, 8, 9, 10],
    ]
    return _polyhedron_from_adjacency(rings)


def cube() -> Polyhedron:
    """The combinatorial cube.  Square faces make it fail the
    right-angled-compact validator; it exists as a negative example."""
    rings = [
        [1, 2, 3, 4],
        [0, 2, 5, 4],
        [0, 3, 5, 1],
        [0, 4, 5, 2],
        [0, 1, 5, 3],
        [1, 2, 3, 4],
    ]
    return _polyhedron_from_adjacency(rings)


# -- face loops ----------------------------------------------------------------


def is_face_loop(p: Polyhedron, faces: Sequence[int]) -> bool:
    """True iff the ordered faces form a ring: cyclically consecutive
    faces are adjacent and all other pairs are disjoint.

    Rings of length < 3 are rejected.  A triple of faces around a
    common vertex is also rejected: its three walls meet at a corner
    instead of encircling anything, so it is a corner, not a ring.
    """
    n = len(faces)
    if n < 3:
        return False
    if len(set(faces)) != n:
        raise InvalidInputError("face loop candidates must be distinct")
    for f in faces:
        if not (0 <= f < p.num_faces):
            raise InvalidInputError("unknown face %d" % f)
    for i in range(n):
        for j in range(i + 1, n):
            gap = min((j - i) % n, (i - j) % n)
            adjacent = p.faces_adjacent(faces[i], faces[j])
            if gap == 1 and not adjacent:
                return False
            if gap >= 2 and adjacent:
                return False
    if n == 3:
        common = _common_vertex(p, faces)
        if common is not None:
            return False
    return True


def _common_vertex(p: Polyhedron, faces: Sequence[int]) -> Optional[Corner]:
    sets = []
    for f in faces:
        sets.append(set(p.face_vertices(f)))
    common = set.intersection(*sets)
    return next(iter(common)) if common else None


# -- face disks ----------------------------------------------------------------


def _subcomplex_cells(p: Polyhedron, face_set: FrozenSet[int]):
    edges = set()
    for f in face_set:
        edges.update(p.faces[f])
    verts = set()
    for f in face_set:
        verts.update(p.face_vertices(f))
    return verts, edges


def _is_connected_faceset(p: Polyhedron, face_set: FrozenSet[int]) -> bool:
    if not face_set:
        return False
    start = next(iter(face_set))
    seen = {start}
    stack = [start]
    while stack:
        f = stack.pop()
        for g in p.adjacency[f]:
            if g in face_set and g not in seen:
                seen.add(g)
                stack.append(g)
    return len(seen) == len(face_set)


def is_face_disk(p: Polyhedron, face_set: Iterable[int]) -> bool:
    """True iff the faces span a disk: nonempty, connected under
    adjacency, and the closed subcomplex has Euler characteristic 1."""
    fs = frozenset(face_set)
    if not fs:
        return False
    for f in fs:
        if not (0 <= f < p.num_faces):
            raise InvalidInputError("unknown face %d" % f)
    if not _is_connected_faceset(p, fs):
        return False
    verts, edges = _subcomplex_cells(p, fs)
    return len(verts) - len(edges) + len(fs) == 1


@dataclass(frozen=True)
class FaceDisk:
    """A validated face disk with its boundary walk.

    boundary_edges is the cyclic walk of edges where the disk meets its
    complement; transverse_faces lists the complement face seen across
    each boundary edge, deduplicated along runs, in the induced cyclic
    order.
    """
    host: Polyhedron
    face_set: FrozenSet[int]
    boundary_edges: Tuple[int, ...]
    transverse_faces: Tuple[int, ...]

    def corner_vertices(self) -> List[Corner]:
        """Boundary vertices incident to exactly one disk face (the
        disk-degree-2 vertices: two subcomplex edges meet there)."""
        count: Dict[Corner, int] = {}
        for f in self.face_set:
            for v in set(self.host.face_vertices(f)):
                count[v] = count.get(v, 0) + 1
        return [v for v, c in count.items() if c == 1]

    def subcomplex_edge_count(self) -> int:
        _, edges = _subcomplex_cells(self.host, self.face_set)
        return len(edges)


def face_disk(p: Polyhedron, face_set: Iterable[int]) -> FaceDisk:
    """Validate a face set as a disk and compute its boundary data."""
    fs = frozenset(face_set)
    if not is_face_disk(p, fs):
        raise InvalidInputError("face set %s is not a face disk" % sorted(fs))
    boundary = [e for e, (f, g) in enumerate(p.edges)
                if (f in fs) != (g in fs)]
    if not boundary:
        raise InvalidInputError("face disk equals the whole sphere")
    walk = _boundary_walk(p, fs, boundary)
    transverse = []
    for e in walk:
        f, g = p.edges[e]
        outside = g if f in fs else f
        if not transverse or transverse[-1] != outside:
            transverse.append(outside)
    # the walk is cyclic: a run split across the wrap-around is one run
    while len(transverse) > 1 and transverse[0] == transverse[-1]:
        transverse.pop()
    return FaceDisk(p, fs, tuple(walk), tuple(transverse))


def _boundary_walk(p: Polyhedron, fs: FrozenSet[int], boundary: List[int]) -> List[int]:
    """Order the boundary edges into their single cycle.

    At every boundary vertex exactly two boundary edges meet, so the
    boundary is a disjoint union of cycles; a disk has exactly one.
    """
    bset = set(boundary)
    link: Dict[Corner, List[int]] = {}
    for e in boundary:
        for v in p.edge_endpoints(e):
            link.setdefault(v, []).append(e)
    for v, es in link.items():
        if len(es) != 2:
            raise StructuralError("boundary is not a 1-manifold at %s" % sorted(v))
    start = min(boundary)
    walk = [start]
    prev_v = min(p.edge_endpoints(start), key=sorted)
    cur_v = [v for v in p.edge_endpoints(start) if v != prev_v][0]
    while True:
        nxt = [e for e in link[cur_v] if e != walk[-1]]
        e = nxt[0]
        if e == start:
            break
        walk.append(e)
        cur_v = [v for v in p.edge_endpoints(e) if v != cur_v][0]
    if len(walk) != len(bset):
        raise StructuralError("boundary of a disk must be a single cycle")
    return walk


def satisfies_convexity(p: Polyhedron, disk: FaceDisk) -> bool:
    """The convexity condition: the complement faces crossed by the
    disk's boundary form a face ring."""
    if disk.face_set == frozenset(range(p.num_faces)):
        raise InvalidInputError("disk equal to the whole sphere has no transverse faces")
    faces = list(disk.transverse_faces)
    if len(set(faces)) != len(faces):
        return False
    return is_face_loop(p, faces)


# -- exhaustive disk enumeration ------------------------------------------------


def iter_face_disks(p: Polyhedron) -> Iterator[FrozenSet[int]]:
    """All face subsets that span a disk, via bitmask incidence counts.

    chi = V - E + F of the closed subcomplex is computed from popcounts
    of OR-ed masks; connectivity is tested only on subsets passing the
    chi filter.
    """
    nf = p.num_faces
    edge_masks = []
    vert_index = {v: i for i, v in enumerate(p.vertices)}
    vert_masks = []
    for f in range(nf):
        em = 0
        for e in p.faces[f]:
            em |= 1 << e
        vm = 0
        for v in set(p.face_vertices(f)):
            vm |= 1 << vert_index[v]
        edge_masks.append(em)
        vert_masks.append(vm)
    for bits in range(1, 1 << nf):
        em = 0
        vm = 0
        b = bits
        while b:
            low = b & -b
            f = low.bit_length() - 1
            em |= edge_masks[f]
            vm |= vert_masks[f]
            b ^= low
        nfaces = bin(bits).count("1")
        chi = bin(vm).count("1") - bin(em).count("1") + nfaces
        if chi != 1:
            continue
        fs = frozenset(i for i in range(nf) if bits >> i & 1)
        if _is_connected_faceset(p, fs):
            yield fs


def c_of_p(p: Polyhedron) -> int:
    """Maximum number of edges in the closed subcomplex spanned by a
    face disk, over all face disks.  Counts interior and boundary edges
    alike."""
    best = 0
    for fs in iter_face_disks(p):
        _, edges = _subcomplex_cells(p, fs)
        best = max(best, len(edges))
    return best


def check_degree_lemma(p: Polyhedron) -> bool:
    """Every face disk whose boundary has at most 4 disk-corner
    vertices must contain more than half of all faces."""
    half = p.num_faces / 2
    for fs in iter_face_disks(p):
        disk = face_disk(p, fs) if len(fs) < p.num_faces else None
        if disk is None:
            continue
        if len(disk.corner_vertices()) <= 4 and len(fs) <= half:
            return False
    return True


# -- validation ----------------------------------------------------------------


def validate_right_angled(p: Polyhedron) -> ValidationReport:
    """Check every invariant of a compact right-angled polyhedron.

    Structural failures (incidence not a closed degree-3 sphere) are
    reported with code "structural"; violations of the right-angled
    compactness conditions with code "coxeter".
    """
    issues: List[ValidationIssue] = []

    def structural(msg):
        issues.append(ValidationIssue("structural", msg))

    def coxeter(msg):
        issues.append(ValidationIssue("coxeter", msg))

    if not p.is_connected():
        structural("face adjacency graph is disconnected")
    if p.euler_characteristic() != 2:
        structural("Euler characteristic V-E+F = %d, expected 2" % p.euler_characteristic())
    # vertex degree 3 is enforced by construction (vertex derivation);
    # re-assert here so a report, not an exception, carries the news.
    for v in p.vertices:
        if len(v) != 3:
            structural("vertex %s has degree %d" % (sorted(v), len(v)))
    for f, cycle in enumerate(p.faces):
        if len(cycle) == 4:
            coxeter("face with 4 edges: face %d" % f)
        elif len(cycle) < 5:
            coxeter("face with %d edges: face %d" % (len(cycle), f))
    if p.num_faces < 12:
        coxeter("only %d faces, compactness requires at least 12" % p.num_faces)
    for ring in _short_face_loops(p):
        coxeter("face loop of length %d: %s" % (len(ring), list(ring)))
    return ValidationReport(tuple(issues))


def _short_face_loops(p: Polyhedron) -> List[Tuple[int, ...]]:
    """All face rings of length 3 or 4, up to rotation/reflection."""
    found = []
    nf = p.num_faces
    for a in range(nf):
        for b in sorted(p.adjacency[a]):
            if b <= a:
                continue
            for c in sorted(p.adjacency[b]):
                if c <= a or c == b:
                    continue
                if p.faces_adjacent(a, c) and is_face_loop(p, (a, b, c)):
                    found.append((a, b, c))
                # length 4: a-b-c-d-a with d adjacent to c and a
                for d in sorted(p.adjacency[c] & p.adjacency[a]):
                    if d <= a or d in (b, c):
                        continue
                    if is_face_loop(p, (a, b, c, d)):
                        found.append((a, b, c, d))
    return found


def validate_structure_from_parts(faces, edges) -> Optional[str]:
    """Build-and-validate helper: returns an error message instead of
    raising, for loaders that must distinguish structural failure."""
    try:
        Polyhedron(faces, edges)
    except StructuralError as exc:
        return str(exc)
    return None


# -- gluing and doubling ---------------------------------------------------------


@dataclass
class GlueResult:
    polyhedron: Polyhedron
    # maps (side, old id) -> new id; deleted edges map to None
    face_map: Dict[Tuple[int, int], int]
    edge_map: Dict[Tuple[int, int], Optional[int]]


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _validate_cyclic_map(cycle1: Sequence[int], cycle2: Sequence[int],
                         mapping: Dict[int, int]) -> None:
    k = len(cycle1)
    if len(cycle2) != k or len(mapping) != k:
        raise InvalidInputError("glued faces must have the same number of edges")
    if set(mapping.keys()) != set(cycle1) or set(mapping.values()) != set(cycle2):
        raise InvalidInputError("edge correspondence must biject the two boundaries")
    pos2 = {e: i for i, e in enumerate(cycle2)}
    images = [pos2[mapping[e]] for e in cycle1]
    forward = all((images[(i + 1) % k] - images[i]) % k == 1 for i in range(k))
    backward = all((images[i] - images[(i + 1) % k]) % k == 1 for i in range(k))
    if not (forward or backward):
        raise InvalidInputError("edge correspondence is not a cyclic map")


def glue_along_face(p1: Polyhedron, f1: int, p2: Polyhedron, f2: int,
                    edge_map: Dict[int, int]) -> GlueResult:
    """Glue two polyhedra along a face via a boundary correspondence.

    The glued face pair disappears; for every identified boundary edge
    the two faces across it become coplanar and fuse into one, and the
    side edges at corresponding corners fuse likewise, so the result is
    again a polyhedron with degree-3 vertices.
    """
    _validate_cyclic_map(p1.faces[f1], p2.faces[f2], edge_map)

    A, B = 0, 1
    uf_face = _UnionFind()
    uf_edge = _UnionFind()
    deleted_edges = set()

    for side, p in ((A, p1), (B, p2)):
        for f in range(p.num_faces):
            uf_face.find((side, f))
        for e in range(p.num_edges):
            uf_edge.find((side, e))

    # identify boundary edges, delete them, fuse the faces across them
    for a, b in edge_map.items():
        deleted_edges.add((A, a))
        deleted_edges.add((B, b))
        uf_edge.union((A, a), (B, b))
        uf_face.union((A, p1.other_face(a, f1)), (B, p2.other_face(b, f2)))

    # fuse side edges at corresponding corners
    cycle1 = p1.faces[f1]
    k = len(cycle1)
    for i in range(k):
        a1, a2 = cycle1[i], cycle1[(i + 1) % k]
        v1 = _corner_vertex(p1, a1, a2)
        t1 = next(iter(v1 - {a1, a2}))
        b1, b2 = edge_map[a1], edge_map[a2]
        v2 = _corner_vertex(p2, b1, b2)
        t2 = next(iter(v2 - {b1, b2}))
        uf_edge.union((A, t1), (B, t2))

    # assemble corner sets per fused face, skipping corners that touch a
    # deleted edge or live on the glued faces themselves
    corners_by_face: Dict[Tuple[int, int], List[Tuple]] = {}
    for side, p, fglued in ((A, p1, f1), (B, p2, f2)):
        for f, e, enext in p.corners():
            if f == fglued:
                continue
            if (side, e) in deleted_edges or (side, enext) in deleted_edges:
                continue
            key = uf_face.find((side, f))
            corners_by_face.setdefault(key, []).append(
                (uf_edge.find((side, e)), uf_edge.find((side, enext)))
            )
    # faces that never got a corner entry (possible only if everything
    # they had was deleted) are invalid
    face_keys = sorted(
        {uf_face.find((side, f))
         for side, p, fg in ((A, p1, f1), (B, p2, f2))
         for f in range(p.num_faces) if f != fg}
    )

    # stitch each face's corners into a single edge cycle
    new_cycles: Dict[Tuple[int, int], List] = {}
    for key in face_keys:
        corner_list = corners_by_face.get(key, [])
        if not corner_list:
            raise StructuralError("glued face lost all of its corners")
        new_cycles[key] = _cycle_from_corners(corner_list)

    # dense relabeling, deterministic by sorted class keys
    face_ids = {key: i for i, key in enumerate(face_keys)}
    deleted_roots = {uf_edge.find(d) for d in deleted_edges}
    edge_keys = sorted(
        {uf_edge.find((side, e))
         for side, p in ((A, p1), (B, p2))
         for e in range(p.num_edges)} - deleted_roots
    )
    edge_ids = {key: i for i, key in enumerate(edge_keys)}

    faces_out: List[List[int]] = [
        [edge_ids[e] for e in new_cycles[key]] for key in face_keys
    ]
    # recompute edge incidences from the rebuilt cycles
    incid: Dict[int, List[int]] = {}
    for fi, cyc in enumerate(faces_out):
        for e in cyc:
            incid.setdefault(e, []).append(fi)
    edges_out: List[Tuple[int, int]] = []
    for e in range(len(edge_keys)):
        fs = incid.get(e, [])
        if len(fs) != 2:
            raise StructuralError("edge class borders %d faces after gluing" % len(fs))
        edges_out.append((fs[0], fs[1]))

    result = Polyhedron(faces_out, edges_out)

    face_map = {}
    for side, p, fg in ((A, p1, f1), (B, p2, f2)):
        for f in range(p.num_faces):
            if f == fg:
                continue
            face_map[(side, f)] = face_ids[uf_face.find((side, f))]
    emap: Dict[Tuple[int, int], Optional[int]] = {}
    for side, p in ((A, p1), (B, p2)):
        for e in range(p.num_edges):
            root = uf_edge.find((side, e))
            emap[(side, e)] = None if root in deleted_roots else edge_ids[root]
    return GlueResult(result, face_map, emap)


def _corner_vertex(p: Polyhedron, e1: int, e2: int) -> Corner:
    pair = frozenset((e1, e2))
    for v in p.edge_endpoints(e1):
        if pair <= v:
            return v
    raise InvalidInputError("edges %d, %d are not consecutive in a face" % (e1, e2))


def _cycle_from_corners(corner_list: List[Tuple]) -> List:
    """Rebuild a face cycle from its unordered corner pairs."""
    nbr: Dict[object, List[object]] = {}
    for a, b in corner_list:
        nbr.setdefault(a, []).append(b)
        nbr.setdefault(b, []).append(a)
    for e, ns in nbr.items():
        if len(ns) != 2:
            raise StructuralError("face stitching is not a cycle at %s" % (e,))
    start = min(nbr.keys())
    cycle = [start]
    prev = None
    while True:
        ns = nbr[cycle[-1]]
        nxt = ns[0] if ns[0] != prev else ns[1]
        if nxt == start:
            break
        prev = cycle[-1]
        cycle.append(nxt)
    if len(cycle) != len(nbr):
        raise StructuralError("face stitching produced several cycles")
    return cycle


def identity_edge_map(p: Polyhedron, f: int) -> Dict[int, int]:
    return {e: e for e in p.faces[f]}


def double(p: Polyhedron, f: int) -> Polyhedron:
    """The mirror double across face f: two copies of p with f removed
    and the boundaries identified pointwise.  Faces and side edges
    adjacent to f continue straight across the mirror and fuse."""
    return double_with_maps(p, f).polyhedron


def double_with_maps(p: Polyhedron, f: int) -> GlueResult:
    if not (0 <= f < p.num_faces):
        raise InvalidInputError("unknown face %d" % f)
    return glue_along_face(p, f, p, f, identity_edge_map(p, f))


# -- amalgamation of disks --------------------------------------------------------


@dataclass
class DiskMatching:
    """A gluing instruction for amalgamating two disks: which transverse
    faces to identify and the boundary edge correspondence."""
    f1: int
    f2: int
    edge_map: Dict[int, int]


def amalgamate_disks(p1: Polyhedron, d1: FaceDisk, p2: Polyhedron, d2: FaceDisk,
                     matching: DiskMatching) -> Tuple[Polyhedron, FaceDisk]:
    """Glue p1 to p2 across a transverse face of each disk and return
    the union disk in the glued polyhedron.

    The correspondence must carry the edges where d1 meets the glued
    face onto the edges where d2 does, so disk faces fuse with disk
    faces and the union is again a disk.
    """
    f1, f2 = matching.f1, matching.f2
    if f1 not in d1.transverse_faces:
        raise InvalidInputError("face %d is not transverse to the first disk" % f1)
    if f2 not in d2.transverse_faces:
        raise InvalidInputError("face %d is not transverse to the second disk" % f2)
    d1_edges = [e for e in p1.faces[f1] if p1.other_face(e, f1) in d1.face_set]
    d2_edges = [e for e in p2.faces[f2] if p2.other_face(e, f2) in d2.face_set]
    if len(d1_edges) != len(d2_edges):
        raise InvalidInputError(
            "disk meets the glued faces in %d vs %d edges" % (len(d1_edges), len(d2_edges))
        )
    image = [matching.edge_map[e] for e in d1_edges]
    if sorted(image) != sorted(d2_edges):
        raise InvalidInputError("correspondence does not align the disk boundaries")
    glued = glue_along_face(p1, f1, p2, f2, matching.edge_map)
    union = {glued.face_map[(0, f)] for f in d1.face_set}
    union |= {glued.face_map[(1, f)] for f in d2.face_set}
    return glued.polyhedron, face_disk(glued.polyhedron, union)


def iter_disk_matchings(p1: Polyhedron, d1: FaceDisk,
                        p2: Polyhedron, d2: FaceDisk) -> Iterator[DiskMatching]:
    """All valid amalgamation instructions between two disks."""
    for f1 in d1.transverse_faces:
        c1 = p1.faces[f1]
        d1_edges = {e for e in c1 if p1.other_face(e, f1) in d1.face_set}
        for f2 in d2.transverse_faces:
            c2 = p2.faces[f2]
            if len(c1) != len(c2):
                continue
            d2_edges = {e for e in c2 if p2.other_face(e, f2) in d2.face_set}
            if len(d1_edges) != len(d2_edges):
                continue
            k = len(c1)
            for offset in range(k):
                for flip in (False, True):
                    seq = c2[::-1] if flip else c2
                    mapping = {c1[i]: seq[(i + offset) % k] for i in range(k)}
                    if {mapping[e] for e in d1_edges} == d2_edges:
                        yield DiskMatching(f1, f2, mapping)
