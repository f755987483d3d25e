"""Command-line front end and JSON wire formats.

Three subcommands: ``solve`` (exact Cramer solution of A·x = b, optionally
cross-checked against Gaussian elimination), ``lgv`` (verify the
vertex-disjoint path-system identity on a graph instance), and ``certify``
(emit the paired-system certificate for one solution component).

All numeric output is exact fraction strings; JSON key order and value
formatting are fixed, so identical inputs produce byte-identical output.

Exit codes: 0 success, 2 malformed input, 3 singular matrix, 4 internal
disagreement (a bug), 5 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path as FsPath
from typing import Sequence

from .cramer import (
    Certificate,
    build_gadget,
    certify,
    gadget_without_sink,
    solve_cramer,
    validate_certificate,
)
from .errors import (
    CapExceeded,
    CertificateInvalid,
    InputError,
    SingularMatrix,
    ValidationError,
)
from .graph import DEFAULT_CAP, WeightedDigraph
from .lgv import LgvReport, PathSystem, Permutation, verify_lgv
from .linalg import LinearSystem, det_bareiss, solve_gauss
from .rational import format_scalar, parse_scalar

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_SINGULAR = 3
EXIT_INTERNAL = 4
EXIT_CAP = 5


# -- wire formats -------------------------------------------------------------


def system_from_json_dict(obj: object) -> LinearSystem:
    """Parse ``{"A": [[...]], "b": [...]}`` with int or "p/q" entries."""
    if not isinstance(obj, dict) or "A" not in obj or "b" not in obj:
        raise InputError('system JSON must be an object with "A" and "b"')
    a, b = obj["A"], obj["b"]
    if not isinstance(a, list) or not all(isinstance(row, list) for row in a):
        raise InputError('"A" must be an array of arrays')
    if not isinstance(b, list):
        raise InputError('"b" must be an array')
    rows = [[parse_scalar(x) for x in row] for row in a]
    rhs = [parse_scalar(x) for x in b]
    return LinearSystem.of(rows, rhs)


def lgv_input_from_json_dict(
    obj: object,
) -> tuple[WeightedDigraph, list[str], list[str]]:
    """Parse a graph JSON object carrying "sources" and "sinks" arrays."""
    graph = WeightedDigraph.from_json_dict(obj)
    assert isinstance(obj, dict)
    sources, sinks = obj.get("sources"), obj.get("sinks")
    for name, value in (("sources", sources), ("sinks", sinks)):
        if not isinstance(value, list) or not all(
            isinstance(v, str) for v in value
        ):
            raise InputError(f'"{name}" must be an array of vertex labels')
    return graph, list(sources), list(sinks)


def report_to_json_dict(report: LgvReport) -> dict:
    return {
        "n": report.n,
        "det_path_matrix": format_scalar(report.det_path_matrix),
        "all_systems_signed_sum": format_scalar(report.all_systems_sum),
        "vd_systems_signed_sum": format_scalar(report.vd_systems_sum),
        "counts": {
            "total": report.total_count,
            "vertex_disjoint": report.vd_count,
        },
        "verdict": report.verdict,
    }


def _system_to_json_dict(ps: PathSystem) -> dict:
    return {
        "sigma": [k + 1 for k in ps.sigma.images],  # 1-based on the wire
        "sign": ps.sign,
        "paths": [list(p.vertices) for p in ps.paths],
        "weight": format_scalar(ps.weight),
    }


def certificate_to_json_dict(cert: Certificate) -> dict:
    return {
        "index": cert.index,
        "solution": [format_scalar(x) for x in cert.solution],
        "det_A": format_scalar(cert.det_a),
        "det_Ai": format_scalar(cert.det_ai),
        "base_systems": [_system_to_json_dict(ps) for ps in cert.base_systems],
        "extended_systems": [
            _system_to_json_dict(ps) for ps in cert.extended_systems
        ],
        "pairing": [list(pair) for pair in cert.pairing],
    }


def certificate_from_json_dict(obj: object, sys_: LinearSystem) -> Certificate:
    """Rebuild a Certificate from its JSON form, for independent re-checking.

    Member path weights are recomputed from the gadget graph; every other
    stored quantity is taken from the JSON and must survive
    :func:`validate_certificate`.
    """
    if not isinstance(obj, dict):
        raise InputError("certificate JSON must be an object")
    try:
        index = int(obj["index"])
        solution = tuple(parse_scalar(x) for x in obj["solution"])
        det_a = parse_scalar(obj["det_A"])
        det_ai = parse_scalar(obj["det_Ai"])
        raw_base = obj["base_systems"]
        raw_ext = obj["extended_systems"]
        pairing = tuple((int(b), int(e)) for b, e in obj["pairing"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed certificate JSON: {exc}") from exc
    gad = build_gadget(sys_.matrix, solution)

    def rebuild(raw: object, graph: WeightedDigraph) -> tuple[PathSystem, ...]:
        if not isinstance(raw, list):
            raise InputError("system lists must be arrays")
        out = []
        for entry in raw:
            try:
                images = tuple(int(v) - 1 for v in entry["sigma"])
                sign = int(entry["sign"])
                vertex_lists = entry["paths"]
                weight = parse_scalar(entry["weight"])
            except (KeyError, TypeError, ValueError) as exc:
                raise InputError(f"malformed path system: {exc}") from exc
            paths = tuple(graph.path(tuple(vs)) for vs in vertex_lists)
            out.append(
                PathSystem(
                    sigma=Permutation.from_images(images),
                    paths=paths,
                    weight=weight,
                    sign=sign,
                    vertex_disjoint=True,
                )
            )
        return tuple(out)

    return Certificate(
        index=index,
        solution=solution,
        det_a=det_a,
        det_ai=det_ai,
        base_systems=rebuild(raw_base, gadget_without_sink(gad)),
        extended_systems=rebuild(raw_ext, gad.graph),
        pairing=pairing,
    )


def _dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _load_json_file(path: str) -> object:
    try:
        text = FsPath(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from exc


# -- subcommands ---------------------------------------------------------------


def _cmd_solve(args: argparse.Namespace) -> int:
    system = system_from_json_dict(_load_json_file(args.file))
    det_a = det_bareiss(system.matrix)
    if det_a == 0:
        raise SingularMatrix()
    x = solve_cramer(system)
    report: dict = {
        "x": [format_scalar(v) for v in x],
        "det_A": format_scalar(det_a),
    }
    if args.oracle_check:
        if solve_gauss(system) != x:
            raise CertificateInvalid(
                "internal disagreement: Cramer and Gaussian solutions differ"
            )
        report["oracle_agree"] = True
    if args.output == "json":
        sys.stdout.write(_dumps(report))
    else:
        for k, v in enumerate(report["x"], start=1):
            sys.stdout.write(f"x_{k} = {v}\n")
        sys.stdout.write(f"det_A = {report['det_A']}\n")
        if args.oracle_check:
            sys.stdout.write("oracle_agree = true\n")
    return EXIT_OK


def _cmd_lgv(args: argparse.Namespace) -> int:
    graph, sources, sinks = lgv_input_from_json_dict(_load_json_file(args.file))
    report = verify_lgv(graph, sources, sinks, cap=args.cap)
    sys.stdout.write(_dumps(report_to_json_dict(report)))
    return EXIT_OK if report.verdict == "pass" else EXIT_INTERNAL


def _cmd_certify(args: argparse.Namespace) -> int:
    system = system_from_json_dict(_load_json_file(args.file))
    cert = certify(system, args.index, cap=args.cap)
    payload = _dumps(certificate_to_json_dict(cert))
    i = cert.index
    summary = (
        f"x_{i} = det(A_{i})/det(A) = {format_scalar(cert.det_ai)} / "
        f"{format_scalar(cert.det_a)} = {format_scalar(cert.solution[i - 1])}\n"
    )
    if args.out is not None:
        FsPath(args.out).write_text(payload, encoding="utf-8")
        sys.stdout.write(summary)
    else:
        # keep stdout pure JSON; the human-readable line goes to stderr
        sys.stdout.write(payload)
        sys.stderr.write(summary)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lgvcramer",
        description=(
            "Exact Cramer solving and path-system (LGV) verification over "
            "weighted acyclic digraphs."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve A*x = b exactly by Cramer's rule")
    p_solve.add_argument("file", help='JSON file with "A" and "b"')
    p_solve.add_argument(
        "--no-oracle-check",
        dest="oracle_check",
        action="store_false",
        help="skip the independent Gaussian-elimination cross-check",
    )
    p_solve.add_argument(
        "--output", choices=("json", "text"), default="json", help="report format"
    )

    p_lgv = sub.add_parser(
        "lgv", help="verify the vertex-disjoint path-system identity on a graph"
    )
    p_lgv.add_argument("file", help='graph JSON file with "sources" and "sinks"')
    p_lgv.add_argument(
        "--cap", type=int, default=DEFAULT_CAP, help="path-system enumeration cap"
    )

    p_cert = sub.add_parser(
        "certify", help="emit a paired-system certificate for one component x_i"
    )
    p_cert.add_argument("file", help='JSON file with "A" and "b"')
    p_cert.add_argument(
        "--index", type=int, required=True, help="1-based component index i"
    )
    p_cert.add_argument(
        "--cap", type=int, default=DEFAULT_CAP, help="path-system enumeration cap"
    )
    p_cert.add_argument(
        "--out", default=None, help="write the certificate JSON to this file"
    )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {"solve": _cmd_solve, "lgv": _cmd_lgv, "certify": _cmd_certify}
    try:
        return handlers[args.command](args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SingularMatrix as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except CertificateInvalid as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


def entrypoint() -> None:
    sys.exit(main())
