"""Walks between facets via hyperplane slicing.

This mechanizes the inductive connectivity argument at the polyhedral
level: pick a translate of the standard tropical hyperplane fan that
cuts two chosen facets through their relative interiors while avoiding
all vertices and meeting every facet properly; intersect; assign each
intersection facet to the unique ambient facet containing it; walk in
the intersection complex (recursing until dimension 1, where graph
search takes over); and lift the walk through the assignment.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .complexes import (
    PolyhedralComplex,
    common_refinement,
    is_connected_through_codim1,
)
from .errors import (
    CertificateError,
    DisconnectedSliceError,
    ImproperIntersectionError,
    InputError,
    TranslateSearchError,
)
from .polyhedra import intersect
from .rational import Rat, as_rat
from .tropical import linear_polynomial, tropical_hypersurface, uniform_bergman_fan


@dataclass(frozen=True)
class FacetWalk:
    """Facet indices with consecutive entries equal or adjacent."""

    steps: tuple

    @property
    def length(self) -> int:
        return len(self.steps) - 1

    def __iter__(self):
        return iter(self.steps)


def is_valid_walk(complex_: PolyhedralComplex, steps) -> bool:
    steps = list(steps)
    if not steps:
        return False
    if any(i < 0 or i >= len(complex_.cells) for i in steps):
        return False
    graph = complex_.facet_graph()
    return all(
        a == b or graph.adjacent(a, b) for a, b in zip(steps, steps[1:])
    )


@dataclass
class SliceCertificate:
    """Result of slicing a complex with a tropical hyperplane translate."""

    v: tuple
    ambient: PolyhedralComplex
    intersection: PolyhedralComplex
    assignment: dict = field(default_factory=dict)
    properness: bool = False


def hyperplane_complex(v) -> PolyhedralComplex:
    """The tropical hyperplane fan translated by -v (apex at -v)."""
    v = tuple(as_rat(x) for x in v)
    n = len(v)
    if n >= 2:
        return uniform_bergman_fan(n, n - 1).translate(tuple(-x for x in v))
    return tropical_hypersurface(linear_polynomial(v))


def properness_check(c: PolyhedralComplex, d: PolyhedralComplex):
    """Every nonempty pairwise intersection has the transverse
    dimension dim C + dim D - n.  Returns (ok, violating pairs)."""
    if c.ambient_dim != d.ambient_dim:
        raise InputError("ambient dimension mismatch")
    for cx, name in ((c, "first"), (d, "second")):
        cx.require_validated(f"properness_check ({name} argument)")
        cx.require_pure(f"properness_check ({name} argument)")
    n = c.ambient_dim
    expected = c.dimension() + d.dimension() - n
    violations = []
    for i, p in enumerate(c.cells):
        for j, q in enumerate(d.cells):
            meet = intersect(p, q)
            if meet.is_empty():
                continue
            got = meet.dimension()
            if got != expected:
                violations.append((i, j, got))
    return (not violations, violations)


def _meets_relative_interior(d: PolyhedralComplex, facet) -> bool:
    """Whether the support of d meets the relative interior of facet."""
    implicit = facet.implicit_equality_indices()
    boundary = [
        f for k, f in enumerate(facet.inequalities) if k not in implicit
    ]
    for q in d.cells:
        meet = intersect(q, facet)
        if meet.is_empty():
            continue
        if not any(meet.functional_tight_on(g) for g in boundary):
            return True
    return False


def _complex_vertices(c: PolyhedralComplex):
    out = set()
    for cell in c.cells:
        out.update(cell.vertex_points())
    return out


def choose_slicing_translate(
    complex_: PolyhedralComplex,
    facet: int,
    facet2: int,
    max_denominator: int = 16,
    seed: int = 0,
    rng: random.Random = None,
    max_retries: int = 200,
):
    """Random rational translate v such that the hyperplane fan with
    apex -v meets the two facets in their relative interiors, contains
    no vertex of the complex, and meets it properly."""
    complex_.require_validated("choose_slicing_translate")
    complex_.require_pure("choose_slicing_translate")
    n = complex_.ambient_dim
    m = len(complex_.cells)
    if not (0 <= facet < m and 0 <= facet2 < m):
        raise InputError(f"facet indices out of range (complex has {m} facets)")
    if max_denominator < 1:
        raise InputError("max_denominator must be at least 1")
    if rng is None:
        rng = random.Random(seed)
    f_cell = complex_.cells[facet]
    f2_cell = complex_.cells[facet2]
    vertices = _complex_vertices(complex_)

    for _ in range(max_retries):
        v = tuple(
            Rat(rng.randint(-4 * den, 4 * den), den)
            for den in (rng.randint(1, max_denominator) for _ in range(n))
        )
        poly = linear_polynomial(v)
        if any(poly.min_attained_twice(w) for w in vertices):
            continue
        fan = hyperplane_complex(v)
        if not _meets_relative_interior(fan, f_cell):
            continue
        if facet2 != facet and not _meets_relative_interior(fan, f2_cell):
            continue
        ok, _ = properness_check(complex_, fan)
        if not ok:
            continue
        return v
    raise TranslateSearchError(
        f"no admissible translate in {max_retries} draws; the coordinates "
        "are likely non-generic - apply change_coordinates(generic_basis(C)) "
        "first, or raise max_denominator"
    )


def slice_complex(complex_: PolyhedralComplex, v) -> SliceCertificate:
    """Intersect with the hyperplane fan at apex -v and assign each
    intersection facet to the unique ambient facet containing it.

    Properness against the translated fan is checked, not assumed.
    """
    v = tuple(as_rat(x) for x in v)
    if len(v) != complex_.ambient_dim:
        raise InputError("translate arity does not match ambient dimension")
    fan = hyperplane_complex(v)
    ok, violations = properness_check(complex_, fan)
    if not ok:
        raise ImproperIntersectionError(
            f"translate {tuple(str(x) for x in v)} meets the complex "
            f"improperly in {len(violations)} cell pairs",
            violations,
        )
    meet = common_refinement(complex_, fan)
    assignment = {}
    for gi, g in enumerate(meet.cells):
        containing = [
            fi for fi, f in enumerate(complex_.cells) if g.is_subset(f)
        ]
        if len(containing) != 1:
            raise CertificateError(
                f"intersection facet {gi} lies in {len(containing)} ambient "
                "facets; the slice is not generic enough"
            )
        assignment[gi] = containing[0]
    return SliceCertificate(
        v=v,
        ambient=complex_,
        intersection=meet,
        assignment=assignment,
        properness=True,
    )


def lift_walk(certificate: SliceCertificate, walk: FacetWalk) -> FacetWalk:
    """Map a walk in the intersection complex to the ambient complex.

    Consecutive images must be equal or adjacent (this is the key lemma
    the certificate guarantees); duplicates are then collapsed.
    """
    mapped = []
    for step in walk.steps:
        if step not in certificate.assignment:
            raise CertificateError(f"assignment is missing intersection facet {step}")
        mapped.append(certificate.assignment[step])
    graph = certificate.ambient.facet_graph()
    for a, b in zip(mapped, mapped[1:]):
        if a != b and not graph.adjacent(a, b):
            raise CertificateError(
                f"lifted steps {a} -> {b} are neither equal nor adjacent; "
                "certificate corrupt"
            )
    collapsed = [mapped[0]]
    for x in mapped[1:]:
        if x != collapsed[-1]:
            collapsed.append(x)
    return FacetWalk(tuple(collapsed))


def walk_bfs(complex_: PolyhedralComplex, facet: int, facet2: int):
    """Shortest facet-graph walk, or None when unreachable."""
    complex_.require_validated("walk_bfs")
    complex_.require_pure("walk_bfs")
    m = len(complex_.cells)
    if not (0 <= facet < m and 0 <= facet2 < m):
        raise InputError(f"facet indices out of range (complex has {m} facets)")
    path = complex_.facet_graph().shortest_path(facet, facet2)
    if path is None:
        return None
    return FacetWalk(tuple(path))


def theorem_walk(
    complex_: PolyhedralComplex,
    facet: int,
    facet2: int,
    depth_budget: int = None,
    seed: int = 0,
    max_denominator: int = 16,
) -> FacetWalk:
    """Walk between two facets built the way the connectivity proof
    does: graph search in dimension 1, otherwise slice with a generic
    hyperplane translate, walk in the intersection, and lift."""
    complex_.require_validated("theorem_walk")
    complex_.require_pure("theorem_walk")
    d = complex_.dimension()
    if d < 1:
        raise InputError("theorem_walk needs a complex of dimension at least 1")
    if not is_connected_through_codim1(complex_):
        raise InputError(
            "theorem_walk requires a complex connected through codimension 1"
        )
    m = len(complex_.cells)
    if not (0 <= facet < m and 0 <= facet2 < m):
        raise InputError(f"facet indices out of range (complex has {m} facets)")
    if depth_budget is None:
        depth_budget = d
    rng = random.Random(seed)
    walk = _theorem_walk(complex_, facet, facet2, depth_budget, rng, max_denominator)
    if walk.steps[0] != facet or walk.steps[-1] != facet2 or not is_valid_walk(
        complex_, walk.steps
    ):
        raise CertificateError("constructed walk failed verification")
    return walk


def _theorem_walk(complex_, facet, facet2, budget, rng, max_denominator):
    if facet == facet2:
        return FacetWalk((facet,))
    if complex_.dimension() == 1:
        walk = walk_bfs(complex_, facet, facet2)
        if walk is None:
            raise DisconnectedSliceError(
                "intersection complex is disconnected through codimension 1"
            )
        return walk
    if budget <= 0:
        raise InputError("theorem_walk depth budget exhausted")
    saw_disconnected = False
    for _ in range(8):
        v = choose_slicing_translate(
            complex_, facet, facet2, max_denominator, rng=rng
        )
        try:
            cert = slice_complex(complex_, v)
        except CertificateError:
            continue  # non-generic slice; redraw
        meet = cert.intersection
        if meet.is_empty or not meet.pure or meet.dimension() != complex_.dimension() - 1:
            continue
        if not is_connected_through_codim1(meet):
            saw_disconnected = True
            continue
        inner = [g for g, f in cert.assignment.items() if f == facet]
        inner2 = [g for g, f in cert.assignment.items() if f == facet2]
        if not inner or not inner2:
            continue
        try:
            sub = _theorem_walk(
                meet, inner[0], inner2[0], budget - 1, rng, max_denominator
            )
        except DisconnectedSliceError:
            saw_disconnected = True
            continue
        return lift_walk(cert, sub)
    if saw_disconnected:
        raise DisconnectedSliceError(
            "every admissible slice came out disconnected through "
            "codimension 1; no polyhedral walk was constructed"
        )
    raise TranslateSearchError("slice attempts exhausted without a usable draw")
