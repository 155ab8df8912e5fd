"""Integer-linear images of complexes and generic lattice bases.

linear_image pushes a complex through an integer matrix (cell by cell,
via generator mapping) and repairs the resulting arrangement into a
complex.  generic_basis constructs a unimodular basis none of whose
vectors or pairwise differences is perpendicular to any positive
dimensional face of a given complex, by the finite avoidance search:
pick a primitive first vector avoiding all the face-orthogonal
subspaces, extend it to a lattice basis, then shear each remaining
basis vector by integer multiples of the first until all conditions
hold.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count, product

from .complexes import PolyhedralComplex, _repair
from .errors import BasisSearchError, InputError, InternalError
from .linalg import complete_primitive_to_unimodular, det, dot, gcd_vector, invert, matmul
from .polyhedra import Polyhedron, hull_from_generators
from .rational import Rat, as_rat


@dataclass(frozen=True)
class IntegerMatrix:
    entries: tuple  # tuple of row tuples, ints

    @staticmethod
    def from_rows(rows):
        cleaned = []
        width = None
        for row in rows:
            row = tuple(int(x) for x in row)
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise InputError("ragged matrix rows")
            cleaned.append(row)
        if not cleaned or width == 0:
            raise InputError("matrix must have at least one row and column")
        return IntegerMatrix(tuple(cleaned))

    @staticmethod
    def identity(n):
        return IntegerMatrix(
            tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        )

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def determinant(self) -> int:
        if self.rows != self.cols:
            raise InputError("determinant of a non-square matrix")
        d = det([[Rat(x) for x in row] for row in self.entries])
        return int(d)

    def is_unimodular(self) -> bool:
        return self.rows == self.cols and abs(self.determinant()) == 1

    def apply(self, vector):
        vector = tuple(as_rat(x) for x in vector)
        if len(vector) != self.cols:
            raise InputError("vector arity does not match matrix columns")
        return tuple(dot([Rat(a) for a in row], vector) for row in self.entries)

    def multiply(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise InputError("matrix shape mismatch")
        prod = matmul(
            [[Rat(x) for x in r] for r in self.entries],
            [[Rat(x) for x in r] for r in other.entries],
        )
        return IntegerMatrix(tuple(tuple(int(x) for x in row) for row in prod))

    def inverse(self) -> "IntegerMatrix":
        if not self.is_unimodular():
            raise InputError("only unimodular matrices invert over the integers")
        inv = invert([[Rat(x) for x in row] for row in self.entries])
        return IntegerMatrix(tuple(tuple(int(x) for x in row) for row in inv))


def _image_cell(cell: Polyhedron, matrix: IntegerMatrix) -> Polyhedron:
    gens = cell.generators()
    vertices = [matrix.apply(v) for v in gens.vertices]
    rays = [r for r in (matrix.apply(r) for r in gens.rays) if any(x != 0 for x in r)]
    lineality = [
        l for l in (matrix.apply(l) for l in gens.lineality) if any(x != 0 for x in l)
    ]
    return hull_from_generators(vertices, rays, lineality, ambient_dim=matrix.rows)


def linear_image(complex_: PolyhedralComplex, matrix: IntegerMatrix) -> PolyhedralComplex:
    """Image complex under the linear map given by the matrix.

    Cell images may overlap non-facially (distinct sheets can meet off
    their faces), so the images are always run through union repair.
    """
    if matrix.cols != complex_.ambient_dim:
        raise InputError(
            f"matrix has {matrix.cols} columns but complex lives in "
            f"R^{complex_.ambient_dim}"
        )
    images = [_image_cell(cell, matrix) for cell in complex_.cells]
    return _repair(matrix.rows, images)


def change_coordinates(complex_: PolyhedralComplex, matrix: IntegerMatrix) -> PolyhedralComplex:
    """Unimodular coordinate change y = U x, applied exactly.

    Constraints transform through the inverse, faces map to faces, and
    the facet graph is untouched; the result is re-validated anyway.
    """
    n = complex_.ambient_dim
    if matrix.rows != matrix.cols or matrix.rows != n:
        raise InputError("coordinate change must be square of the ambient size")
    if not matrix.is_unimodular():
        raise InputError("coordinate change must be unimodular")
    inv = matrix.inverse()
    inv_rows = [[Rat(x) for x in row] for row in inv.entries]

    def push(f):
        from .polyhedra import AffineFunctional

        normal = tuple(
            dot([row[k] for row in inv_rows], f.normal) for k in range(n)
        )
        return AffineFunctional(normal, f.offset)

    cells = [
        Polyhedron(n, tuple(push(f) for f in c.equalities), tuple(push(f) for f in c.inequalities))
        for c in complex_.cells
    ]
    out = PolyhedralComplex(n, cells, validated=False)
    if complex_.validated:
        report = out.validate()
        if not report.ok:
            raise InternalError(
                "coordinate change of a validated complex failed validation"
            )
    return out


# ---------------------------------------------------------------------------
# Generic basis construction.


def _face_direction_spaces(complex_: PolyhedralComplex):
    """Distinct direction-space bases of all positive-dimensional faces."""
    spaces = {}
    for cell in complex_.cells:
        for face in cell.faces(min_dim=1):
            basis = face.direction_basis()
            spaces[basis] = basis
    return list(spaces.values())


def _avoids_all(vector, spaces) -> bool:
    """vector is non-perpendicular to each direction space."""
    vec = [Rat(x) for x in vector]
    for basis in spaces:
        if all(dot(vec, d) == 0 for d in basis):
            return False
    return True


def _primitive_candidates(n):
    """Primitive integer vectors by increasing max-norm, lexicographic
    within each shell, one per +- pair (leading entry positive)."""
    for shell in count(1):
        for cand in product(range(-shell, shell + 1), repeat=n):
            if max(abs(c) for c in cand) != shell:
                continue
            lead = next((c for c in cand if c != 0), 0)
            if lead <= 0:
                continue
            if gcd_vector(cand) != 1:
                continue
            yield cand


def generic_basis(complex_: PolyhedralComplex) -> IntegerMatrix:
    """Unimodular matrix whose rows f_i and differences f_j - f_i are
    all non-perpendicular to every positive-dimensional face."""
    complex_.require_validated("generic_basis")
    n = complex_.ambient_dim
    if n == 0:
        raise InputError("no basis in ambient dimension 0")
    spaces = _face_direction_spaces(complex_)
    if not spaces:
        return IntegerMatrix.identity(n)
    bound = 1000 * max(1, len(spaces))

    f1 = None
    for tried, cand in enumerate(_primitive_candidates(n)):
        if tried > 1000 * bound:
            raise BasisSearchError("first-vector search bound exhausted")
        if _avoids_all(cand, spaces):
            f1 = cand
            break

    rows = complete_primitive_to_unimodular(list(f1))
    chosen = [tuple(f1)]
    for j in range(1, n):
        g = rows[j]
        found = None
        for a in _alternating_integers():
            if abs(a) > bound:
                raise BasisSearchError(
                    f"shear search bound {bound} exhausted at row {j}"
                )
            f = tuple(x + a * y for x, y in zip(g, f1))
            if not _avoids_all(f, spaces):
                continue
            if all(
                _avoids_all(tuple(x - y for x, y in zip(f, prev)), spaces)
                for prev in chosen
            ):
                found = f
                break
        chosen.append(found)
    matrix = IntegerMatrix(tuple(chosen))
    if not matrix.is_unimodular():
        raise InternalError("generic basis construction lost unimodularity")
    return matrix


def _alternating_integers():
    yield 0
    for k in count(1):
        yield k
        yield -k


def verify_generic_basis(complex_: PolyhedralComplex, matrix: IntegerMatrix) -> bool:
    """Recheck the non-perpendicularity conditions from scratch."""
    spaces = _face_direction_spaces(complex_)
    vectors = [tuple(r) for r in matrix.entries]
    tests = list(vectors)
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            tests.append(tuple(b - a for a, b in zip(vectors[i], vectors[j])))
    return all(_avoids_all(t, spaces) for t in tests)
