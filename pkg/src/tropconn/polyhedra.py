"""Exact rational polyhedra in H-representation.

An AffineFunctional (a, b) stands for x -> a.x + b; a Polyhedron is a
conjunction of functionals pinned to = 0 (equalities) and >= 0
(inequalities).  Each polyhedron lazily computes its generator form
(vertices / rays / lineality) by a double-description pass over the
homogenization; the generator form backs the predicate layer
(emptiness, dimension, implicit equalities, face tests, canonical
support keys) so those are exact evaluations rather than LP calls.

The LP entry point itself is the exact simplex of tropconn.lp, kept as
an independent route for cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import lp
from .errors import EmptyPolyhedronError, InputError
from .linalg import (
    dot,
    kernel_basis,
    primitive_vector,
    rank,
    reduce_mod_rows,
    rref,
    vadd,
    vsub,
)
from .rational import ONE, ZERO, Rat


@dataclass(frozen=True)
class AffineFunctional:
    """x -> normal . x + offset."""

    normal: tuple
    offset: object  # Rat

    def value(self, point):
        return dot(self.normal, point) + self.offset

    def linear_value(self, direction):
        return dot(self.normal, direction)

    def negated(self):
        return AffineFunctional(tuple(-a for a in self.normal), -self.offset)

    def is_constant(self) -> bool:
        return all(a == 0 for a in self.normal)

    def canonical(self, allow_flip=False):
        """Primitive-integer-normal form, scaled by a positive rational.

        With allow_flip (legal for equalities and hyperplanes) the sign
        is normalized so the leading nonzero normal entry is positive.
        Idempotent.
        """
        prim = primitive_vector(self.normal)
        if prim is None:
            if self.offset == 0:
                return AffineFunctional(tuple(ZERO for _ in self.normal), ZERO)
            off = Rat(1) if self.offset > 0 else Rat(-1)
            if allow_flip:
                off = Rat(1)
            return AffineFunctional(tuple(ZERO for _ in self.normal), off)
        i = next(k for k, a in enumerate(self.normal) if a != 0)
        scale = Rat(prim[i]) / self.normal[i]
        normal = tuple(Rat(p) for p in prim)
        offset = self.offset * scale
        if allow_flip:
            lead = next(a for a in normal if a != 0)
            if lead < 0:
                normal = tuple(-a for a in normal)
                offset = -offset
        return AffineFunctional(normal, offset)

    def key(self):
        return (self.normal, self.offset)

    def __str__(self):
        terms = []
        for j, a in enumerate(self.normal):
            if a != 0:
                terms.append(f"{a}*x{j}")
        if self.offset != 0 or not terms:
            terms.append(str(self.offset))
        return " + ".join(terms)


def functional(coeffs, offset=0):
    """Convenience constructor accepting ints / strings / rationals."""
    from .rational import as_rat

    return AffineFunctional(tuple(as_rat(c) for c in coeffs), as_rat(offset))


@dataclass(frozen=True)
class Generators:
    """Canonical generator form: minimal-face representatives
    ("vertices"), extreme rays modulo lineality, and an RREF lineality
    basis.  Vertices and rays are reduced modulo the lineality pivots,
    which makes the triple a canonical encoding of the point set."""

    vertices: tuple
    rays: tuple
    lineality: tuple
    lineality_pivots: tuple

    @property
    def is_empty(self) -> bool:
        return not self.vertices


# ---------------------------------------------------------------------------
# Double description over the homogenization.


def _dd_cone(n, eq_rows, ineq_rows):
    """Generators (lineality basis, extreme rays with tight sets) of
    {y in R^n : eq_rows . y = 0, ineq_rows . y >= 0}.

    Incremental double description: start from the kernel of the
    equality system as pure lineality, then add one halfspace at a
    time.  Rays carry the set of processed inequality indices they are
    tight on; the combinatorial adjacency test keeps only extreme rays.
    """
    lineality = [list(v) for v in kernel_basis(eq_rows, n)]
    rays = []  # (vector, tight frozenset)
    processed = []

    def prim(vec):
        p = primitive_vector(vec)
        return [Rat(x) for x in p]

    for beta in ineq_rows:
        idx = len(processed)
        processed.append(beta)
        lvals = [dot(beta, l) for l in lineality]
        j = next((k for k, v in enumerate(lvals) if v != 0), None)
        if j is not None:
            l0 = lineality.pop(j)
            d0 = lvals.pop(j)
            if d0 < 0:
                l0 = [-x for x in l0]
                d0 = -d0
            lineality = [
                [x - (v / d0) * y for x, y in zip(l, l0)] if v != 0 else l
                for l, v in zip(lineality, lvals)
            ]
            new_rays = []
            for r, tight in rays:
                v = dot(beta, r)
                if v != 0:
                    r = prim([x - (v / d0) * y for x, y in zip(r, l0)])
                new_rays.append((r, tight | {idx}))
            new_rays.append((prim(l0), frozenset(range(idx))))
            rays = new_rays
            continue
        vals = [dot(beta, r) for r, _ in rays]
        if all(v >= 0 for v in vals):
            rays = [
                (r, tight | {idx} if v == 0 else tight)
                for (r, tight), v in zip(rays, vals)
            ]
            continue
        kept = []
        for (r, tight), v in zip(rays, vals):
            if v > 0:
                kept.append((r, tight))
            elif v == 0:
                kept.append((r, tight | {idx}))
        tights = [t for _, t in rays]
        for p in range(len(rays)):
            vp = vals[p]
            if vp <= 0:
                continue
            for q in range(len(rays)):
                vq = vals[q]
                if vq >= 0:
                    continue
                common = tights[p] & tights[q]
                adjacent = True
                for o in range(len(rays)):
                    if o != p and o != q and common <= tights[o]:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                rp, rq = rays[p][0], rays[q][0]
                combo = prim([vp * b - vq * a for a, b in zip(rp, rq)])
                tight = frozenset(
                    i for i, pb in enumerate(processed) if dot(pb, combo) == 0
                )
                kept.append((combo, tight))
        seen = {}
        for r, tight in kept:
            seen.setdefault(tuple(r), (r, tight))
        rays = list(seen.values())
    return lineality, rays


def _double_description(ambient_dim, equalities, inequalities):
    """Canonical generator form of an H-representation."""
    n = ambient_dim
    eq_rows = [list(f.normal) + [f.offset] for f in equalities]
    ineq_rows = []
    seen = set()
    for f in inequalities:
        row = tuple(f.normal) + (f.offset,)
        if row not in seen:
            seen.add(row)
            ineq_rows.append(list(row))
    ineq_rows.append([ZERO] * n + [ONE])  # homogenization: t >= 0

    lineality, rays = _dd_cone(n + 1, eq_rows, ineq_rows)

    lin_vectors = [l[:n] for l in lineality]  # t-component is always 0
    lin_rows, lin_pivots = rref(lin_vectors) if lin_vectors else ((), [])
    lin_rows = tuple(tuple(r) for r in lin_rows)
    lin_pivots = tuple(lin_pivots)

    vertices = []
    proj_rays = []
    for r, _tight in rays:
        t = r[-1]
        if t > 0:
            point = tuple(x / t for x in r[:-1])
            vertices.append(reduce_mod_rows(point, lin_rows, lin_pivots))
        else:
            direction = reduce_mod_rows(r[:-1], lin_rows, lin_pivots)
            p = primitive_vector(direction)
            if p is not None:
                proj_rays.append(tuple(Rat(x) for x in p))
    vertices = tuple(sorted(set(vertices)))
    proj_rays = tuple(sorted(set(proj_rays)))
    return Generators(vertices, proj_rays, lin_rows, lin_pivots)


# ---------------------------------------------------------------------------


class Polyhedron:
    """Immutable H-representation with lazily cached derived data."""

    __slots__ = (
        "ambient_dim",
        "equalities",
        "inequalities",
        "_gens",
        "_dim",
        "_implicit",
        "_relint",
        "_key",
    )

    def __init__(self, ambient_dim, equalities=(), inequalities=(), _gens=None):
        self.ambient_dim = ambient_dim
        eqs = {}
        for f in equalities:
            c = f.canonical(allow_flip=True)
            if c.is_constant() and c.offset == 0:
                continue
            eqs[c.key()] = c
        ins = {}
        for f in inequalities:
            c = f.canonical(allow_flip=False)
            if c.is_constant() and c.offset >= 0:
                continue
            ins[c.key()] = c
        self.equalities = tuple(sorted(eqs.values(), key=AffineFunctional.key))
        self.inequalities = tuple(sorted(ins.values(), key=AffineFunctional.key))
        for f in self.equalities + self.inequalities:
            if len(f.normal) != ambient_dim:
                raise InputError(
                    f"functional arity {len(f.normal)} != ambient dimension {ambient_dim}"
                )
        self._gens = _gens
        self._dim = None
        self._implicit = None
        self._relint = None
        self._key = None

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def full_space(n):
        return Polyhedron(n)

    @staticmethod
    def empty(n):
        contradiction = AffineFunctional(tuple(ZERO for _ in range(n)), Rat(-1))
        return Polyhedron(n, (), (contradiction,))

    @staticmethod
    def from_point(point):
        from .rational import as_rat

        point = tuple(as_rat(x) for x in point)
        n = len(point)
        eqs = []
        for i, c in enumerate(point):
            normal = tuple(ONE if j == i else ZERO for j in range(n))
            eqs.append(AffineFunctional(normal, -c))
        return Polyhedron(n, eqs, ())

    # -- generator-backed predicates ------------------------------------------

    def generators(self) -> Generators:
        if self._gens is None:
            self._gens = _double_description(
                self.ambient_dim, self.equalities, self.inequalities
            )
        return self._gens

    def is_empty(self) -> bool:
        return self.generators().is_empty

    def dimension(self) -> int:
        """-1 for the empty set, else ambient minus the rank of the
        explicit plus implicit equality normals."""
        if self._dim is None:
            if self.is_empty():
                self._dim = -1
            else:
                normals = [f.normal for f in self.equalities]
                normals += [
                    self.inequalities[i].normal for i in self.implicit_equality_indices()
                ]
                self._dim = self.ambient_dim - rank(normals)
        return self._dim

    def implicit_equality_indices(self) -> frozenset:
        """Indices (into self.inequalities) holding with equality on all
        of the polyhedron; all indices when empty."""
        if self._implicit is None:
            if self.is_empty():
                self._implicit = frozenset(range(len(self.inequalities)))
            else:
                self._implicit = frozenset(
                    i
                    for i, f in enumerate(self.inequalities)
                    if self.functional_tight_on(f)
                )
        return self._implicit

    def functional_valid_on(self, f: AffineFunctional) -> bool:
        """f >= 0 everywhere on the polyhedron (vacuous when empty)."""
        g = self.generators()
        return (
            all(f.value(v) >= 0 for v in g.vertices)
            and all(f.linear_value(r) >= 0 for r in g.rays)
            and all(f.linear_value(l) == 0 for l in g.lineality)
        )

    def functional_tight_on(self, f: AffineFunctional) -> bool:
        """f == 0 identically on the polyhedron (vacuous when empty)."""
        g = self.generators()
        return (
            all(f.value(v) == 0 for v in g.vertices)
            and all(f.linear_value(r) == 0 for r in g.rays)
            and all(f.linear_value(l) == 0 for l in g.lineality)
        )

    def contains_point(self, point) -> bool:
        if len(point) != self.ambient_dim:
            raise InputError("point arity mismatch")
        return all(f.value(point) == 0 for f in self.equalities) and all(
            f.value(point) >= 0 for f in self.inequalities
        )

    def is_subset(self, other: "Polyhedron") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise InputError("ambient dimension mismatch")
        if self.is_empty():
            return True
        return all(self.functional_tight_on(f) for f in other.equalities) and all(
            self.functional_valid_on(f) for f in other.inequalities
        )

    def same_support(self, other: "Polyhedron") -> bool:
        return self.canonical_key() == other.canonical_key()

    def canonical_key(self):
        """Hashable encoding of the point set (not of the H-rep)."""
        if self._key is None:
            if self.is_empty():
                self._key = (self.ambient_dim, "empty")
            else:
                g = self.generators()
                self._key = (self.ambient_dim, g.lineality, g.rays, g.vertices)
        return self._key

    def relative_interior_point(self):
        """A rational point strictly inside every non-implicit
        inequality: centroid of the vertex representatives plus the sum
        of the extreme rays."""
        if self._relint is None:
            if self.is_empty():
                raise EmptyPolyhedronError("empty polyhedron has no relative interior")
            g = self.generators()
            acc = [ZERO] * self.ambient_dim
            for v in g.vertices:
                acc = [a + x for a, x in zip(acc, v)]
            k = Rat(len(g.vertices))
            acc = [a / k for a in acc]
            for r in g.rays:
                acc = [a + x for a, x in zip(acc, r)]
            self._relint = tuple(acc)
        return self._relint

    def vertex_points(self):
        """0-dimensional faces; empty unless the polyhedron is pointed."""
        g = self.generators()
        if g.lineality:
            return ()
        return g.vertices

    def direction_basis(self):
        """RREF basis of the direction space {x - y : x, y in P}."""
        if self.is_empty():
            return ()
        g = self.generators()
        vecs = [list(r) for r in g.rays] + [list(l) for l in g.lineality]
        if g.vertices:
            v0 = g.vertices[0]
            vecs += [list(vsub(v, v0)) for v in g.vertices[1:]]
        if not vecs:
            return ()
        rows, _ = rref(vecs)
        return tuple(rows)

    def with_equalities(self, extra):
        return Polyhedron(
            self.ambient_dim, self.equalities + tuple(extra), self.inequalities
        )

    def translate(self, v):
        """Shift by v; cached generators translate along."""
        if len(v) != self.ambient_dim:
            raise InputError("translation vector arity mismatch")
        eqs = [
            AffineFunctional(f.normal, f.offset - f.linear_value(v))
            for f in self.equalities
        ]
        ins = [
            AffineFunctional(f.normal, f.offset - f.linear_value(v))
            for f in self.inequalities
        ]
        gens = None
        if self._gens is not None:
            g = self._gens
            verts = tuple(
                sorted(
                    reduce_mod_rows(vadd(p, tuple(v)), g.lineality, g.lineality_pivots)
                    for p in g.vertices
                )
            )
            gens = Generators(verts, g.rays, g.lineality, g.lineality_pivots)
        return Polyhedron(self.ambient_dim, eqs, ins, _gens=gens)

    def faces(self, min_dim=0):
        """All nonempty faces of dimension >= min_dim, self included."""
        out = {}
        frontier = [self]
        while frontier:
            nxt = []
            for face in frontier:
                if face.is_empty() or face.dimension() < min_dim:
                    continue
                key = face.canonical_key()
                if key in out:
                    continue
                out[key] = face
                implicit = face.implicit_equality_indices()
                for i, f in enumerate(face.inequalities):
                    if i in implicit:
                        continue
                    nxt.append(face.with_equalities((f,)))
            frontier = nxt
        return list(out.values())

    def __repr__(self):
        return (
            f"Polyhedron(dim={self.ambient_dim}, eq={len(self.equalities)}, "
            f"ineq={len(self.inequalities)})"
        )


# ---------------------------------------------------------------------------
# Module-level operations.


def lp_optimize(objective, polyhedron: Polyhedron, sense="max") -> lp.LpResult:
    """Exact simplex optimization of objective . x over the polyhedron."""
    if len(objective) != polyhedron.ambient_dim:
        raise InputError(
            f"objective arity {len(objective)} != ambient {polyhedron.ambient_dim}"
        )
    return lp.solve(
        list(objective),
        polyhedron.ambient_dim,
        [(f.normal, f.offset) for f in polyhedron.equalities],
        [(f.normal, f.offset) for f in polyhedron.inequalities],
        sense,
    )


def implicit_equalities(polyhedron: Polyhedron) -> frozenset:
    return polyhedron.implicit_equality_indices()


def dimension(polyhedron: Polyhedron) -> int:
    return polyhedron.dimension()


def relative_interior_point(polyhedron: Polyhedron):
    return polyhedron.relative_interior_point()


def intersect(p: Polyhedron, q: Polyhedron) -> Polyhedron:
    if p.ambient_dim != q.ambient_dim:
        raise InputError(
            f"ambient dimensions differ: {p.ambient_dim} vs {q.ambient_dim}"
        )
    return Polyhedron(
        p.ambient_dim,
        p.equalities + q.equalities,
        p.inequalities + q.inequalities,
    )


def is_face(face: Polyhedron, polyhedron: Polyhedron) -> bool:
    """Whether face = polyhedron cut by the constraints tight on it.

    The empty set counts as a face.
    """
    if face.ambient_dim != polyhedron.ambient_dim:
        raise InputError("ambient dimension mismatch")
    if face.is_empty():
        return True
    if not face.is_subset(polyhedron):
        return False
    tight = tuple(
        f for f in polyhedron.inequalities if face.functional_tight_on(f)
    )
    restricted = polyhedron.with_equalities(tight)
    return restricted.same_support(face)


def fm_project(polyhedron: Polyhedron, keep) -> Polyhedron:
    """Exact coordinate projection by Fourier-Motzkin elimination.

    Dropped coordinates are eliminated one at a time (preferring an
    equality pivot), with syntactic cleanup and an LP-based redundancy
    prune after each elimination to keep the blowup in check.
    """
    n = polyhedron.ambient_dim
    keep = sorted(set(keep))
    if any(k < 0 or k >= n for k in keep):
        raise InputError(f"keep indices out of range for ambient {n}")

    # rows: coefficient list of length n plus trailing offset
    eq_rows = [list(f.normal) + [f.offset] for f in polyhedron.equalities]
    in_rows = [list(f.normal) + [f.offset] for f in polyhedron.inequalities]
    drop = [i for i in range(n) if i not in set(keep)]

    def cleanup(rows, is_eq):
        seen = set()
        out = []
        for row in rows:
            f = AffineFunctional(tuple(row[:-1]), row[-1]).canonical(allow_flip=is_eq)
            if f.is_constant():
                if f.offset == 0 or (not is_eq and f.offset > 0):
                    continue
            k = f.key()
            if k not in seen:
                seen.add(k)
                out.append(list(f.normal) + [f.offset])
        return out

    for var in drop:
        pivot = next((r for r in eq_rows if r[var] != 0), None)
        if pivot is not None:
            eq_rows.remove(pivot)

            def subst(row):
                c = row[var]
                if c == 0:
                    return row
                f = c / pivot[var]
                return [x - f * y for x, y in zip(row, pivot)]

            eq_rows = [subst(r) for r in eq_rows]
            in_rows = [subst(r) for r in in_rows]
        else:
            pos = [r for r in in_rows if r[var] > 0]
            neg = [r for r in in_rows if r[var] < 0]
            zero = [r for r in in_rows if r[var] == 0]
            combos = []
            for p in pos:
                for m in neg:
                    combos.append(
                        [-m[var] * a + p[var] * b for a, b in zip(p, m)]
                    )
            in_rows = zero + combos
        eq_rows = cleanup(eq_rows, True)
        in_rows = cleanup(in_rows, False)
        in_rows = _prune_redundant(n, eq_rows, in_rows)

    def restrict(rows):
        out = []
        for row in rows:
            assert all(row[i] == 0 for i in drop)
            out.append(
                AffineFunctional(tuple(row[i] for i in keep), row[-1])
            )
        return out

    return Polyhedron(len(keep), restrict(eq_rows), restrict(in_rows))


def _prune_redundant(n, eq_rows, in_rows):
    """Drop inequalities implied by the rest (LP test)."""
    current = list(in_rows)
    i = 0
    while i < len(current):
        g = current[i]
        others = current[:i] + current[i + 1 :]
        res = lp.solve(
            g[:-1],
            n,
            [(r[:-1], r[-1]) for r in eq_rows],
            [(r[:-1], r[-1]) for r in others],
            "min",
        )
        if res.status == lp.INFEASIBLE or (
            res.status == lp.OPTIMAL and res.value + g[-1] >= 0
        ):
            current.pop(i)
        else:
            i += 1
    return current


def hull_from_generators(vertices, rays, lineality, ambient_dim=None) -> Polyhedron:
    """H-representation of conv(vertices) + cone(rays) + span(lineality).

    With no vertices but some rays/lineality the result is the cone
    with implied apex at the origin; with no generator data at all the
    result is the empty polyhedron (ambient_dim then required).
    """
    from .rational import as_rat

    vertices = [tuple(as_rat(x) for x in v) for v in vertices]
    rays = [tuple(as_rat(x) for x in r) for r in rays]
    lineality = [tuple(as_rat(x) for x in l) for l in lineality]
    dims = {len(v) for v in vertices + rays + lineality}
    if len(dims) > 1:
        raise InputError("generators have mixed ambient dimensions")
    if not dims:
        if ambient_dim is None:
            raise InputError("empty generator data needs an explicit ambient_dim")
        return Polyhedron.empty(ambient_dim)
    n = dims.pop()
    if ambient_dim is not None and ambient_dim != n:
        raise InputError("ambient_dim does not match generator arity")

    gens = vertices + rays + lineality
    total = n + len(gens)

    def wide(coeffs, offset):
        return AffineFunctional(tuple(coeffs), offset)

    eqs = []
    for i in range(n):
        row = [ZERO] * total
        row[i] = ONE
        for j, g in enumerate(gens):
            row[n + j] = -g[i]
        eqs.append(wide(row, ZERO))
    if vertices:
        row = [ZERO] * total
        for j in range(len(vertices)):
            row[n + j] = ONE
        eqs.append(wide(row, -ONE))
    ineqs = []
    for j in range(len(vertices) + len(rays)):
        row = [ZERO] * total
        row[n + j] = ONE
        ineqs.append(wide(row, ZERO))

    lifted = Polyhedron(total, eqs, ineqs)
    return fm_project(lifted, range(n))
