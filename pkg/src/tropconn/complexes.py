"""Polyhedral complexes: validation, refinement, unions with repair,
products, facet graphs, and both connectivity notions.

A complex stores only its inclusion-maximal cells; faces are computed
on demand.  Validation checks the common-face axiom on all cell pairs.
Two facets are adjacent when they share a face of codimension 1, and a
pure complex is connected through codimension 1 when the resulting
facet graph is connected.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import InputError, InternalError, PurityError, RepairFailedError, ValidationRequiredError
from .polyhedra import AffineFunctional, Generators, Polyhedron, intersect, is_face
from .rational import ZERO, as_rat


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple = ()  # pairs of cell indices


@dataclass
class FacetGraph:
    """Facets as nodes; an edge records the shared codimension-1 face."""

    node_count: int
    edges: list = field(default_factory=list)  # (i, j) with i < j
    witnesses: dict = field(default_factory=dict)

    def __post_init__(self):
        self._adj = {i: set() for i in range(self.node_count)}
        for i, j in self.edges:
            self._adj[i].add(j)
            self._adj[j].add(i)

    def neighbors(self, i):
        return sorted(self._adj[i])

    def adjacent(self, i, j) -> bool:
        return j in self._adj[i]

    def components(self):
        seen = set()
        comps = []
        for start in range(self.node_count):
            if start in seen:
                continue
            comp = []
            queue = deque([start])
            seen.add(start)
            while queue:
                u = queue.popleft()
                comp.append(u)
                for v in self._adj[u]:
                    if v not in seen:
                        seen.add(v)
                        queue.append(v)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.node_count <= 1 or len(self.components()) == 1

    def shortest_path(self, start, goal):
        """BFS path as a list of node indices, or None."""
        if start == goal:
            return [start]
        prev = {start: None}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in sorted(self._adj[u]):
                if v not in prev:
                    prev[v] = u
                    if v == goal:
                        path = [v]
                        while prev[path[-1]] is not None:
                            path.append(prev[path[-1]])
                        return path[::-1]
                    queue.append(v)
        return None


class PolyhedralComplex:
    """Ambient dimension plus inclusion-maximal cells.

    The constructor drops empty cells, removes cells contained in
    another, deduplicates by support, and sorts cells canonically so
    equal complexes have equal cell orderings.
    """

    def __init__(self, ambient_dim, cells=(), validated=False):
        self.ambient_dim = ambient_dim
        kept = []
        seen = set()
        for cell in cells:
            if cell.ambient_dim != ambient_dim:
                raise InputError("cell ambient dimension mismatch")
            if cell.is_empty():
                continue
            key = cell.canonical_key()
            if key not in seen:
                seen.add(key)
                kept.append(cell)
        kept.sort(key=lambda c: -c.dimension())
        maximal = []
        for cell in kept:
            if not any(cell.is_subset(other) for other in maximal):
                maximal.append(cell)
        maximal.sort(key=lambda c: c.canonical_key())
        self.cells = tuple(maximal)
        self.validated = validated
        self._pure = None
        self._dim = None
        self._pairwise = {}
        self._graph = None

    # -- basic structure -------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not self.cells

    def dimension(self) -> int:
        if self._dim is None:
            self._dim = max((c.dimension() for c in self.cells), default=-1)
        return self._dim

    @property
    def pure(self) -> bool:
        if self._pure is None:
            dims = {c.dimension() for c in self.cells}
            self._pure = len(dims) <= 1
        return self._pure

    def contains_point(self, point) -> bool:
        point = tuple(as_rat(x) for x in point)
        return any(c.contains_point(point) for c in self.cells)

    def pairwise_intersection(self, i, j) -> Polyhedron:
        key = (i, j) if i < j else (j, i)
        cached = self._pairwise.get(key)
        if cached is None:
            cached = intersect(self.cells[key[0]], self.cells[key[1]])
            self._pairwise[key] = cached
        return cached

    def require_validated(self, op):
        if not self.validated:
            raise ValidationRequiredError(
                f"{op} needs a validated complex; run validate() first"
            )

    def require_pure(self, op):
        if not self.pure:
            raise PurityError(
                f"{op} is only defined for pure-dimensional complexes "
                "(all maximal cells of one dimension)"
            )

    # -- operations ------------------------------------------------------

    def validate(self) -> ValidationReport:
        """Check the common-face axiom on every pair of maximal cells."""
        violations = []
        m = len(self.cells)
        for i in range(m):
            for j in range(i + 1, m):
                meet = self.pairwise_intersection(i, j)
                if meet.is_empty():
                    continue
                if not (is_face(meet, self.cells[i]) and is_face(meet, self.cells[j])):
                    violations.append((i, j))
        if not violations:
            self.validated = True
        return ValidationReport(not violations, tuple(violations))

    def facet_graph(self) -> FacetGraph:
        self.require_validated("facet_graph")
        self.require_pure("facet_graph")
        if self._graph is None:
            d = self.dimension()
            m = len(self.cells)
            edges = []
            witnesses = {}
            for i in range(m):
                for j in range(i + 1, m):
                    meet = self.pairwise_intersection(i, j)
                    if not meet.is_empty() and meet.dimension() == d - 1:
                        edges.append((i, j))
                        witnesses[(i, j)] = meet
            self._graph = FacetGraph(m, edges, witnesses)
        return self._graph

    def translate(self, v):
        v = tuple(as_rat(x) for x in v)
        if len(v) != self.ambient_dim:
            raise InputError("translation vector arity mismatch")
        out = PolyhedralComplex(
            self.ambient_dim,
            [c.translate(v) for c in self.cells],
            validated=self.validated,
        )
        out._pure = self._pure
        return out

    def __repr__(self):
        return (
            f"PolyhedralComplex(ambient={self.ambient_dim}, cells={len(self.cells)}, "
            f"validated={self.validated})"
        )


# ---------------------------------------------------------------------------
# Module-level operations mirroring the complex API.


def validate(complex_: PolyhedralComplex) -> ValidationReport:
    return complex_.validate()


def facet_graph(complex_: PolyhedralComplex) -> FacetGraph:
    return complex_.facet_graph()


def is_connected(complex_: PolyhedralComplex) -> bool:
    """Connectivity of the support: cells are convex, so the graph with
    edges 'nonempty intersection' captures topological connectedness."""
    complex_.require_validated("is_connected")
    m = len(complex_.cells)
    if m <= 1:
        return True
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(m):
        for j in range(i + 1, m):
            if not complex_.pairwise_intersection(i, j).is_empty():
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    return len({find(i) for i in range(m)}) == 1


def is_connected_through_codim1(complex_: PolyhedralComplex) -> bool:
    complex_.require_validated("is_connected_through_codim1")
    complex_.require_pure("is_connected_through_codim1")
    if complex_.is_empty:
        return True
    return complex_.facet_graph().is_connected()


def common_refinement(c1: PolyhedralComplex, c2: PolyhedralComplex) -> PolyhedralComplex:
    """Maximal cells among pairwise intersections.

    Valid by construction: intersections of common faces are common
    faces of the intersections.
    """
    if c1.ambient_dim != c2.ambient_dim:
        raise InputError("ambient dimension mismatch")
    c1.require_validated("common_refinement")
    c2.require_validated("common_refinement")
    cells = []
    for p in c1.cells:
        for q in c2.cells:
            meet = intersect(p, q)
            if not meet.is_empty():
                cells.append(meet)
    return PolyhedralComplex(c1.ambient_dim, cells, validated=True)


def _cut_hyperplanes(cell: Polyhedron):
    """Supporting hyperplanes of a cell: affine hull pieces plus facet
    hyperplanes, deduplicated up to sign."""
    cuts = {}
    for f in cell.equalities + cell.inequalities:
        c = f.canonical(allow_flip=True)
        if not c.is_constant():
            cuts[c.key()] = c
    return list(cuts.values())


def _split_cell(cell: Polyhedron, cuts):
    """Subdivide a cell by hyperplanes, keeping only full-dimensional
    pieces (they cover the cell)."""
    pieces = [cell]
    for g in cuts:
        nxt = []
        for p in pieces:
            d = p.dimension()
            lo = Polyhedron(p.ambient_dim, p.equalities, p.inequalities + (g,))
            hi = Polyhedron(p.ambient_dim, p.equalities, p.inequalities + (g.negated(),))
            if lo.dimension() == d and hi.dimension() == d:
                nxt.append(lo)
                nxt.append(hi)
            else:
                nxt.append(p)
        pieces = nxt
    return pieces


def _repair(ambient_dim, cells) -> PolyhedralComplex:
    """Turn a collection of possibly incompatible cells into a valid
    complex with the same support.

    Violating cell pairs are repaired by slicing every cell with the
    supporting hyperplanes of both members of each violating pair; at
    most two repair rounds are attempted before failing loudly.
    """
    merged = PolyhedralComplex(ambient_dim, cells)
    for round_ in range(3):
        report = merged.validate()
        if report.ok:
            return merged
        if round_ == 2:
            raise RepairFailedError(
                f"union repair did not converge; {len(report.violations)} "
                "violating pairs remain after two subdivision rounds"
            )
        cuts = {}
        for i, j in report.violations:
            for cell in (merged.cells[i], merged.cells[j]):
                for g in _cut_hyperplanes(cell):
                    cuts[g.key()] = g
        cut_list = list(cuts.values())
        pieces = []
        for cell in merged.cells:
            pieces.extend(_split_cell(cell, cut_list))
        merged = PolyhedralComplex(ambient_dim, pieces)
    raise AssertionError("unreachable")


def union_with_repair(c1: PolyhedralComplex, c2: PolyhedralComplex) -> PolyhedralComplex:
    """Complex whose support is the union of the two supports."""
    if c1.ambient_dim != c2.ambient_dim:
        raise InputError("ambient dimension mismatch")
    c1.require_validated("union_with_repair")
    c2.require_validated("union_with_repair")
    return _repair(c1.ambient_dim, c1.cells + c2.cells)


def _product_cell(p: Polyhedron, q: Polyhedron) -> Polyhedron:
    n1, n2 = p.ambient_dim, q.ambient_dim

    def left(f):
        return AffineFunctional(f.normal + (ZERO,) * n2, f.offset)

    def right(f):
        return AffineFunctional((ZERO,) * n1 + f.normal, f.offset)

    eqs = [left(f) for f in p.equalities] + [right(f) for f in q.equalities]
    ins = [left(f) for f in p.inequalities] + [right(f) for f in q.inequalities]

    gp, gq = p.generators(), q.generators()
    zeros1, zeros2 = (ZERO,) * n1, (ZERO,) * n2
    vertices = tuple(
        sorted(v1 + v2 for v1 in gp.vertices for v2 in gq.vertices)
    )
    rays = tuple(
        sorted([r + zeros2 for r in gp.rays] + [zeros1 + r for r in gq.rays])
    )
    lineality = tuple(
        [l + zeros2 for l in gp.lineality] + [zeros1 + l for l in gq.lineality]
    )
    pivots = tuple(list(gp.lineality_pivots) + [n1 + c for c in gq.lineality_pivots])
    gens = Generators(vertices, rays, lineality, pivots)
    return Polyhedron(n1 + n2, eqs, ins, _gens=gens)


def cartesian_product(c1: PolyhedralComplex, c2: PolyhedralComplex) -> PolyhedralComplex:
    """Product complex in the concatenated ambient space."""
    c1.require_validated("cartesian_product")
    c2.require_validated("cartesian_product")
    cells = [_product_cell(p, q) for p in c1.cells for q in c2.cells]
    return PolyhedralComplex(c1.ambient_dim + c2.ambient_dim, cells, validated=True)


def translate(complex_: PolyhedralComplex, v) -> PolyhedralComplex:
    return complex_.translate(v)


def _halfspace_list(cell: Polyhedron):
    out = list(cell.inequalities)
    for f in cell.equalities:
        out.append(f)
        out.append(f.negated())
    return out


def _support_covers(cells, target: Polyhedron) -> bool:
    """Whether the union of cells covers the target polyhedron.

    Splits the target along the constraints of a cell that overlaps it
    full-dimensionally and recurses on the parts outside that cell.
    """
    work = [target]
    budget = 20000
    while work:
        cur = work.pop()
        budget -= 1
        if budget < 0:
            raise InternalError("support covering exceeded its work budget")
        if cur.is_empty():
            continue
        if any(cur.is_subset(q) for q in cells):
            continue
        d = cur.dimension()
        chosen = None
        for q in cells:
            if intersect(cur, q).dimension() == d:
                chosen = q
                break
        if chosen is None:
            return False
        piece = cur
        for g in _halfspace_list(chosen):
            if not piece.functional_valid_on(g):
                work.append(
                    Polyhedron(piece.ambient_dim, piece.equalities,
                               piece.inequalities + (g.negated(),))
                )
                piece = Polyhedron(
                    piece.ambient_dim, piece.equalities, piece.inequalities + (g,)
                )
        # piece now lies inside chosen: covered.
    return True


def supports_equal(c1: PolyhedralComplex, c2: PolyhedralComplex) -> bool:
    """Exact point-set equality of the two supports."""
    if c1.ambient_dim != c2.ambient_dim:
        raise InputError("ambient dimension mismatch")
    keys1 = sorted(c.canonical_key() for c in c1.cells)
    keys2 = sorted(c.canonical_key() for c in c2.cells)
    if keys1 == keys2:
        return True
    return all(_support_covers(c2.cells, p) for p in c1.cells) and all(
        _support_covers(c1.cells, q) for q in c2.cells
    )
