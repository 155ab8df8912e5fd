"""Tropical objects: Newton-polygon root valuations, tropical
hypersurfaces of valued polynomials (min convention), and the uniform
fans spanned by subsets of e_1, ..., e_n, -(e_1 + ... + e_n).

Conventions, pinned by the worked examples: a tropical polynomial
evaluates min over terms of (valuation + exponent . w); the Newton
polygon plots (exponent, valuation) and each lower-hull edge of slope s
and horizontal length L contributes the root valuation -s with
multiplicity L.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import PolyhedralComplex
from .errors import InputError
from .polyhedra import AffineFunctional, Generators, Polyhedron, hull_from_generators
from .rational import ONE, ZERO, as_rat


@dataclass(frozen=True)
class ValuedUnivariate:
    """Univariate polynomial known only through coefficient valuations:
    (exponent, valuation) terms with strictly increasing exponents."""

    terms: tuple

    @staticmethod
    def from_pairs(pairs):
        cleaned = []
        seen = set()
        for e, v in pairs:
            e = int(e)
            if e < 0:
                raise InputError(f"negative exponent {e}")
            if e in seen:
                raise InputError(f"duplicate exponent {e}")
            seen.add(e)
            cleaned.append((e, as_rat(v)))
        if not cleaned:
            raise InputError("a valued polynomial needs at least one term")
        cleaned.sort()
        return ValuedUnivariate(tuple(cleaned))


@dataclass(frozen=True)
class TropicalPolynomial:
    """Min-plus polynomial: terms (exponent vector, valuation)."""

    ambient_dim: int
    terms: tuple

    @staticmethod
    def from_terms(ambient_dim, terms):
        cleaned = []
        seen = set()
        for exponent, valuation in terms:
            exponent = tuple(int(e) for e in exponent)
            if len(exponent) != ambient_dim:
                raise InputError(
                    f"exponent arity {len(exponent)} != ambient {ambient_dim}"
                )
            if exponent in seen:
                raise InputError(f"duplicate exponent {exponent}")
            seen.add(exponent)
            cleaned.append((exponent, as_rat(valuation)))
        if not cleaned:
            raise InputError("a tropical polynomial needs at least one term")
        cleaned.sort()
        return TropicalPolynomial(ambient_dim, tuple(cleaned))

    def evaluate(self, point):
        """Min over terms of valuation + exponent . point."""
        point = tuple(as_rat(x) for x in point)
        best = None
        for exponent, valuation in self.terms:
            val = valuation
            for e, w in zip(exponent, point):
                if e:
                    val = val + e * w
            if best is None or val < best:
                best = val
        return best

    def min_attained_twice(self, point) -> bool:
        point = tuple(as_rat(x) for x in point)
        values = []
        for exponent, valuation in self.terms:
            val = valuation
            for e, w in zip(exponent, point):
                if e:
                    val = val + e * w
            values.append(val)
        m = min(values)
        return sum(1 for v in values if v == m) >= 2


@dataclass(frozen=True)
class RootValuationMultiset:
    """Valuations with multiplicities, strictly increasing."""

    pairs: tuple  # ((valuation, multiplicity), ...)

    def as_dict(self):
        return {v: m for v, m in self.pairs}

    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.pairs)

    def __str__(self):
        return "{" + ", ".join(f"{v}: {m}" for v, m in self.pairs) + "}"


def root_valuations(f: ValuedUnivariate) -> RootValuationMultiset:
    """Valuations of the torus roots, from the Newton polygon.

    Lower convex hull of the points (exponent, valuation); an edge of
    slope s spanning horizontal length L yields valuation -s with
    multiplicity L.
    """
    points = list(f.terms)
    max_exp = points[-1][0]
    if max_exp == 0:
        raise InputError("constant polynomial has no roots in the torus")
    hull = []
    for e, v in points:
        p = (as_rat(e), v)
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            cross = (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1)
            if cross <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    pairs = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slope = (y2 - y1) / (x2 - x1)
        pairs.append((-slope, int(x2 - x1)))
    pairs.sort()
    return RootValuationMultiset(tuple(pairs))


def tropical_hypersurface(poly: TropicalPolynomial) -> PolyhedralComplex:
    """Locus where the minimum over terms is attained at least twice.

    Candidate cells are enumerated from pairs of terms (equality locus
    cut by minimality); the full tight-term set of each cell is
    recovered from its generators and used to deduplicate, and the
    complex constructor keeps the inclusion-maximal cells.  The result
    is a polyhedral complex by construction.
    """
    n = poly.ambient_dim
    terms = poly.terms
    if len(terms) < 2:
        raise InputError("a tropical hypersurface needs at least two terms")

    def diff_functional(k, i):
        (ek, vk), (ei, vi) = terms[k], terms[i]
        normal = tuple(as_rat(a - b) for a, b in zip(ek, ei))
        return AffineFunctional(normal, vk - vi)

    cells = {}
    for i, j in combinations(range(len(terms)), 2):
        eq = diff_functional(j, i)
        ineqs = [diff_functional(k, i) for k in range(len(terms)) if k != i]
        cell = Polyhedron(n, (eq,), tuple(ineqs))
        if cell.is_empty():
            continue
        tight = frozenset(
            [i]
            + [
                k
                for k in range(len(terms))
                if k != i and cell.functional_tight_on(diff_functional(k, i))
            ]
        )
        cells.setdefault(tight, cell)
    return PolyhedralComplex(n, list(cells.values()), validated=True)


def uniform_bergman_fan(n: int, d: int) -> PolyhedralComplex:
    """Pure d-dimensional fan in R^n whose maximal cones are spanned by
    any d of e_1, ..., e_n, -(e_1 + ... + e_n)."""
    if not 1 <= d <= n:
        raise InputError(f"fan dimension {d} out of range for ambient {n}")
    vectors = [tuple(ONE if j == i else ZERO for j in range(n)) for i in range(n)]
    vectors.append(tuple(-ONE for _ in range(n)))
    origin = tuple(ZERO for _ in range(n))
    cones = []
    for subset in combinations(range(n + 1), d):
        rays = [vectors[i] for i in subset]
        hull = hull_from_generators([], rays, [])
        gens = Generators((origin,), tuple(sorted(rays)), (), ())
        cones.append(Polyhedron(n, hull.equalities, hull.inequalities, _gens=gens))
    return PolyhedralComplex(n, cones, validated=True)


def linear_polynomial(valuations) -> TropicalPolynomial:
    """1 + a_1 x_1 + ... + a_n x_n with val(a_i) given: the tropical
    polynomial whose hypersurface is the translated fan Delta - v."""
    vals = [as_rat(v) for v in valuations]
    n = len(vals)
    terms = [(tuple(0 for _ in range(n)), ZERO)]
    for i, v in enumerate(vals):
        terms.append((tuple(1 if j == i else 0 for j in range(n)), v))
    return TropicalPolynomial.from_terms(n, terms)
