"""Command line interface.

Every subcommand reads JSON documents (complexes, tropical polynomials,
matrices) from files or standard input ("-") and writes results to
standard output.  Exit codes: 0 success / true verdict, 1 false verdict
for boolean queries, 2 input error, 3 internal contract violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import docio
from .complexes import (
    PolyhedralComplex,
    cartesian_product,
    common_refinement,
    is_connected,
    is_connected_through_codim1,
    supports_equal,
    union_with_repair,
)
from .errors import InputError, InternalError, PurityError, TropconnError
from .maps import IntegerMatrix, generic_basis, linear_image
from .pipeline import properness_check, slice_complex, theorem_walk, walk_bfs
from .polyhedra import Polyhedron
from .rational import rat_to_json
from .tropical import (
    ValuedUnivariate,
    root_valuations,
    tropical_hypersurface,
    uniform_bergman_fan,
)


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_complex(path, validate=True) -> PolyhedralComplex:
    complex_ = docio.parse_complex(_read_text(path))
    if validate:
        report = complex_.validate()
        if not report.ok:
            pairs = " ".join(f"({i},{j})" for i, j in report.violations)
            raise InputError(
                f"complex in {path} violates the common-face axiom at cell "
                f"pairs {pairs}"
            )
    return complex_


def _emit_complex(complex_):
    sys.stdout.write(docio.serialize_complex(complex_))


# -- subcommand handlers -----------------------------------------------------


def _cmd_validate(args):
    complex_ = docio.parse_complex(_read_text(args.input))
    report = complex_.validate()
    if report.ok:
        print("ok")
        return 0
    for i, j in report.violations:
        print(f"violation: cells {i} and {j} do not meet in a common face")
    return 1


def _cmd_connectivity(args):
    complex_ = _load_complex(args.input)
    connected = is_connected(complex_)
    print(f"connected: {'true' if connected else 'false'}")
    if not complex_.pure:
        print("connected-through-codim-1: undefined (complex is not pure)")
        raise PurityError("codimension-1 connectivity needs a pure complex")
    codim1 = is_connected_through_codim1(complex_)
    print(f"connected-through-codim-1: {'true' if codim1 else 'false'}")
    if args.graph:
        graph = complex_.facet_graph()
        for i, j in graph.edges:
            print(f"facet-graph: {i} -- {j}")
    return 0 if connected and codim1 else 1


def _cmd_walk(args):
    complex_ = _load_complex(args.input)
    walk = walk_bfs(complex_, args.facet, args.facet2)
    if walk is None:
        print("unreachable")
        return 1
    print(" ".join(str(i) for i in walk.steps))
    return 0


def _cmd_hypersurface(args):
    poly = docio.parse_tropical_polynomial(_read_text(args.input))
    _emit_complex(tropical_hypersurface(poly))
    return 0


def _cmd_newton(args):
    univariate = docio.parse_univariate(_read_text(args.input))
    multiset = root_valuations(univariate)
    for valuation, multiplicity in multiset.pairs:
        print(f"{valuation}\t{multiplicity}")
    return 0


def _cmd_bergman(args):
    _emit_complex(uniform_bergman_fan(args.n, args.d))
    return 0


def _cmd_translate(args):
    complex_ = _load_complex(args.input)
    vector = docio.parse_vector(args.vector, complex_.ambient_dim)
    _emit_complex(complex_.translate(vector))
    return 0


def _cmd_product(args):
    first = _load_complex(args.first)
    second = _load_complex(args.second)
    _emit_complex(cartesian_product(first, second))
    return 0


def _cmd_image(args):
    complex_ = _load_complex(args.input)
    matrix = docio.parse_matrix(_read_text(args.matrix))
    _emit_complex(linear_image(complex_, matrix))
    return 0


def _cmd_basis(args):
    complex_ = _load_complex(args.input)
    sys.stdout.write(docio.serialize_matrix(generic_basis(complex_)))
    return 0


def _cmd_intersect(args):
    first = _load_complex(args.first)
    second = _load_complex(args.second)
    _emit_complex(common_refinement(first, second))
    return 0


def _cmd_properness(args):
    first = _load_complex(args.first)
    second = _load_complex(args.second)
    ok, violations = properness_check(first, second)
    print(f"proper: {'true' if ok else 'false'}")
    for i, j, got in violations:
        print(f"improper: cells {i} and {j} meet in dimension {got}")
    return 0 if ok else 1


def _cmd_slice(args):
    complex_ = _load_complex(args.input)
    vector = docio.parse_vector(args.vector, complex_.ambient_dim)
    certificate = slice_complex(complex_, vector)
    payload = {
        "v": [rat_to_json(x) for x in certificate.v],
        "properness": certificate.properness,
        "assignment": {str(g): f for g, f in sorted(certificate.assignment.items())},
        "intersection": docio.complex_to_dict(certificate.intersection),
    }
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_theorem_walk(args):
    complex_ = _load_complex(args.input)
    walk = theorem_walk(
        complex_,
        args.facet,
        args.facet2,
        depth_budget=args.depth_budget,
        seed=args.seed,
        max_denominator=args.max_denominator,
    )
    print(" ".join(str(i) for i in walk.steps))
    return 0


def _cmd_example(args):
    if args.name == "ex13":
        return _example_disconnected()
    return _example_codim2()


def _example_disconnected():
    """Quadratic x^2 + x + p with val(p) = 1: two root valuations, and a
    tropicalization that is a disconnected pair of points."""
    f = ValuedUnivariate.from_pairs([(2, 0), (1, 0), (0, 1)])
    multiset = root_valuations(f)
    print(f"root valuations: {multiset}")
    if multiset.as_dict() != {0: 1, 1: 1}:
        raise InternalError("root valuations do not match the worked example")
    points = PolyhedralComplex(
        1,
        [Polyhedron.from_point([v]) for v, _ in multiset.pairs],
        validated=True,
    )
    connected = is_connected(points)
    print(f"connected: {'true' if connected else 'false'}")
    if connected:
        raise InternalError("two-point tropicalization came out connected")
    print("disconnected")
    return 0


def _example_codim2():
    """Plane fan times quadratic roots, pushed through the monomial map:
    connected but not through codimension 1, sheets meeting in one point."""
    delta = uniform_bergman_fan(4, 2)
    roots = root_valuations(ValuedUnivariate.from_pairs([(2, 0), (1, 0), (0, 1)]))
    print(f"root valuations: {roots}")
    factor = PolyhedralComplex(
        1,
        [Polyhedron.from_point([v]) for v, _ in roots.pairs],
        validated=True,
    )
    doubled = cartesian_product(delta, factor)
    matrix = IntegerMatrix.from_rows(
        [[1, 0, 0, 0, 1], [0, 1, 0, 0, 2], [0, 0, 1, 0, 3], [0, 0, 0, 1, 4]]
    )
    image = linear_image(doubled, matrix)
    shifted = delta.translate((1, 2, 3, 4))
    union = union_with_repair(delta, shifted)
    if not supports_equal(image, union):
        raise InternalError("image support differs from the two-sheet union")
    print("support equal (image vs union): true")
    connected = is_connected(image)
    codim1 = is_connected_through_codim1(image)
    print(f"connected: {'true' if connected else 'false'}")
    print(f"connected-through-codim-1: {'true' if codim1 else 'false'}")
    if not connected or codim1:
        raise InternalError("connectivity verdicts do not match the worked example")
    meet = common_refinement(delta, shifted)
    if len(meet.cells) != 1 or meet.dimension() != 0:
        raise InternalError("sheet intersection is not a single point")
    point = meet.cells[0].generators().vertices[0]
    print("intersection point: (" + ", ".join(str(x) for x in point) + ")")
    if tuple(int(x) for x in point) != (0, 0, 1, 2):
        raise InternalError("sheet intersection point is wrong")
    return 0


# -- parser ------------------------------------------------------------------


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="tropconn",
        description=(
            "Exact polyhedral complexes, tropical hypersurfaces, and "
            "codimension-1 connectivity."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument(
            "-i",
            "--input",
            default="-",
            help="input document path, or - for stdin (default)",
        )
        return p

    with_input(sub.add_parser("validate", help="check the common-face axiom")).set_defaults(
        func=_cmd_validate
    )
    p = with_input(sub.add_parser("connectivity", help="connectivity verdicts"))
    p.add_argument("--graph", action="store_true", help="also dump facet-graph edges")
    p.set_defaults(func=_cmd_connectivity)

    p = with_input(sub.add_parser("walk", help="shortest facet walk"))
    p.add_argument("facet", type=int)
    p.add_argument("facet2", type=int)
    p.set_defaults(func=_cmd_walk)

    with_input(
        sub.add_parser("hypersurface", help="tropical hypersurface of a polynomial")
    ).set_defaults(func=_cmd_hypersurface)

    with_input(
        sub.add_parser("newton", help="root valuations of a valued univariate")
    ).set_defaults(func=_cmd_newton)

    p = sub.add_parser("bergman", help="uniform fan on e_1..e_n, -(e_1+...+e_n)")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.set_defaults(func=_cmd_bergman)

    p = with_input(sub.add_parser("translate", help="translate a complex"))
    p.add_argument("--vector", required=True, help="comma-separated rationals")
    p.set_defaults(func=_cmd_translate)

    p = sub.add_parser("product", help="cartesian product of two complexes")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_product)

    p = with_input(sub.add_parser("image", help="integer-linear image of a complex"))
    p.add_argument("--matrix", required=True, help="matrix document path")
    p.set_defaults(func=_cmd_image)

    with_input(
        sub.add_parser("basis", help="generic unimodular basis for a complex")
    ).set_defaults(func=_cmd_basis)

    p = sub.add_parser("intersect", help="common refinement of two complexes")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_intersect)

    p = sub.add_parser("properness", help="transversality of two complexes")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_properness)

    p = with_input(sub.add_parser("slice", help="slice by a hyperplane translate"))
    p.add_argument("--vector", required=True, help="comma-separated rationals")
    p.set_defaults(func=_cmd_slice)

    p = with_input(
        sub.add_parser("theorem-walk", help="facet walk via recursive slicing")
    )
    p.add_argument("facet", type=int)
    p.add_argument("facet2", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--depth-budget", type=int, default=None)
    p.add_argument("--max-denominator", type=int, default=16)
    p.set_defaults(func=_cmd_theorem_walk)

    p = sub.add_parser("example", help="reproduce a worked example")
    p.add_argument("name", choices=("ex13", "ex14"))
    p.set_defaults(func=_cmd_example)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except TropconnError as exc:  # pragma: no cover - safety net
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
