"""Batch command-line front end.

Modes: analyze, classify, distance, union, theorem-check.  Reports are
emitted as stable JSON or as aligned text tables; output for identical inputs
is byte-identical across runs.  Exit status is 0 on success, 1 on any
validation problem, and 2 when an internal cross-check (the intersection
formulas against direct computation) fails beyond tolerance.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .codes import CodeValidationError, QuantumCode, ingest_code, transform_code
from .erasure import (
    classify_paulis,
    erasure_space,
    is_degenerate_distance,
    minimum_distance,
    pure_distance,
    pure_erasure_space,
)
from .fixtures import FIXTURE_NAMES, fixture_union_components, get_fixture
from .states import CodeTransform
from .unions import (
    OrthogonalityError,
    cross_check_intersection_formulas,
    union_code,
)


class CliError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        raise CliError("bad-arguments", message)


def _load_json_file(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError("unreadable-file", f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError("bad-json", f"{path}: {exc}") from exc


def _resolve_code(args) -> QuantumCode:
    if (args.fixture is None) == (args.code is None):
        raise CliError("bad-arguments", "provide exactly one of --fixture or --code")
    if args.fixture is not None:
        try:
            return get_fixture(args.fixture)
        except KeyError:
            raise CliError(
                "unknown-fixture",
                f"no fixture named {args.fixture!r}; known: {', '.join(FIXTURE_NAMES)}",
            ) from None
    spec = _load_json_file(args.code)
    try:
        return ingest_code(spec)
    except CodeValidationError as exc:
        raise CliError("invalid-code", f"{args.code}: {exc}") from exc


def _resolve_transform(args, n: int) -> CodeTransform:
    raw = args.transform
    if raw is None:
        raise CliError("bad-arguments", "this mode requires --transform")
    if raw.lstrip().startswith("{"):
        try:
            spec = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise CliError("bad-json", f"--transform: {exc}") from exc
    else:
        spec = _load_json_file(raw)
    try:
        return CodeTransform.from_json(spec, n)
    except ValueError as exc:
        raise CliError("invalid-transform", str(exc)) from exc


def _classification_rows(code: QuantumCode, max_weight: int, pure: bool) -> list[dict]:
    rows = []
    for entry in classify_paulis(code, max_weight, pure=pure):
        rows.append({
            "w": entry.weight,
            "members": entry.members,
            "non_members": entry.non_members,
            "violators": list(entry.violators),
        })
    return rows


def _space_section(code: QuantumCode, max_weight: int, pure: bool) -> dict:
    space = pure_erasure_space(code) if pure else erasure_space(code)
    dist = pure_distance(code) if pure else minimum_distance(code)
    return {
        "dim": space.dim,
        "distance": dist,
        "degenerate": is_degenerate_distance(code, dist),
        "per_weight": _classification_rows(code, max_weight, pure),
    }


def _mode_analyze(args) -> dict:
    code = _resolve_code(args)
    max_weight = code.n if args.max_weight is None else args.max_weight
    return {
        "code": code.label,
        "n": code.n,
        "K": code.k,
        "erasure": _space_section(code, max_weight, pure=False),
        "pure": _space_section(code, max_weight, pure=True),
    }


def _mode_classify(args) -> dict:
    code = _resolve_code(args)
    max_weight = code.n if args.max_weight is None else args.max_weight
    space = pure_erasure_space(code) if args.pure else erasure_space(code)
    dist = pure_distance(code) if args.pure else minimum_distance(code)
    return {
        "code": code.label,
        "pure": bool(args.pure),
        "per_weight": _classification_rows(code, max_weight, args.pure),
        "dim": space.dim,
        "distance": dist,
    }


def _mode_distance(args) -> dict:
    code = _resolve_code(args)
    dist = minimum_distance(code)
    pdist = pure_distance(code)
    return {
        "code": code.label,
        "n": code.n,
        "K": code.k,
        "distance": dist,
        "degenerate": is_degenerate_distance(code, dist),
        "pure_distance": pdist,
        "pure_degenerate": is_degenerate_distance(code, pdist),
    }


def _union_inputs(args) -> tuple[list[QuantumCode], QuantumCode | None, CodeTransform | None]:
    """Components plus, when built from a transform, the base code and transform."""
    if args.fixture is not None and args.fixture in ("rains-union", "gbp-union"):
        if args.transform is not None or args.code2 is not None:
            raise CliError("bad-arguments",
                           "union fixtures already define their components")
        return list(fixture_union_components(args.fixture)), None, None
    base = _resolve_code(args)
    if (args.code2 is None) == (args.transform is None):
        raise CliError("bad-arguments",
                       "union mode needs exactly one of --code2 or --transform")
    if args.code2 is not None:
        spec = _load_json_file(args.code2)
        try:
            second = ingest_code(spec)
        except CodeValidationError as exc:
            raise CliError("invalid-code", f"{args.code2}: {exc}") from exc
        return [base, second], None, None
    t = _resolve_transform(args, base.n)
    image = transform_code(base, t, label=f"U({base.label})")
    return [base, image], base, t


def _mode_union(args) -> dict:
    components, base, t = _union_inputs(args)
    union, report = union_code(components)
    result = {
        "components": list(report.component_labels),
        "n": report.n,
        "K": report.k,
        "max_cross_inner": report.max_cross_inner,
        "distance": minimum_distance(union),
        "theorem4": None,
        "theorem5": None,
    }
    if base is not None and t is not None:
        checks = cross_check_intersection_formulas(base, t)
        result["theorem4"] = checks["theorem4"]
        result["theorem5"] = checks["theorem5"]
    return result


def _mode_theorem_check(args) -> dict:
    code = _resolve_code(args)
    t = _resolve_transform(args, code.n)
    checks = cross_check_intersection_formulas(code, t)
    return {
        "code": code.label,
        "n": code.n,
        "K": code.k,
        "theorem4": checks["theorem4"],
        "theorem5": checks["theorem5"],
    }


_MODES = {
    "analyze": _mode_analyze,
    "classify": _mode_classify,
    "distance": _mode_distance,
    "union": _mode_union,
    "theorem-check": _mode_theorem_check,
}


def _cyclic_groups(labels: list[str]) -> list[list[str]]:
    """Group operator labels into cyclic-rotation orbits, deterministically."""
    def rotations(s: str) -> list[str]:
        return [s[-k:] + s[:-k] if k else s for k in range(len(s))]

    groups: dict[str, list[str]] = {}
    for label in labels:
        groups.setdefault(min(rotations(label)), []).append(label)
    return [groups[key] for key in sorted(groups)]


def _render_table(report: dict) -> str:
    lines: list[str] = []

    def emit_per_weight(rows: list[dict], indent: str = "  "):
        lines.append(f"{indent}{'w':>2}  {'members':>8}  {'non-members':>11}")
        for row in rows:
            lines.append(f"{indent}{row['w']:>2}  {row['members']:>8}  {row['non_members']:>11}")
            for group in _cyclic_groups(row["violators"]):
                lines.append(f"{indent}      {' '.join(group)}")

    def emit_section(name: str, section: dict):
        flag = " (degenerate)" if section.get("degenerate") else ""
        lines.append(f"{name}: dim {section['dim']}, distance {section['distance']}{flag}")
        emit_per_weight(section["per_weight"])

    if "erasure" in report:  # analyze
        lines.append(f"code: {report['code']} (n={report['n']}, K={report['K']})")
        emit_section("erasure space", report["erasure"])
        emit_section("pure erasure space", report["pure"])
    elif "per_weight" in report:  # classify
        kind = "pure erasure" if report["pure"] else "erasure"
        lines.append(f"code: {report['code']}")
        lines.append(f"{kind} space: dim {report['dim']}, distance {report['distance']}")
        emit_per_weight(report["per_weight"])
    elif "components" in report:  # union
        lines.append("union of: " + ", ".join(report["components"]))
        lines.append(f"n={report['n']}, K={report['K']}, distance {report['distance']}")
        lines.append(f"max cross inner product: {report['max_cross_inner']:.3e}")
        for key in ("theorem4", "theorem5"):
            section = report[key]
            if section is None:
                lines.append(f"{key}: not applicable")
            else:
                lines.append(
                    f"{key}: dim {section['dim']} vs direct {section['direct_dim']}, "
                    f"residual {section['residual']:.3e}, "
                    f"matches={section['matches_direct']}"
                )
    elif "theorem4" in report:  # theorem-check
        lines.append(f"code: {report['code']} (n={report['n']}, K={report['K']})")
        for key in ("theorem4", "theorem5"):
            section = report[key]
            lines.append(
                f"{key}: dim {section['dim']} vs direct {section['direct_dim']}, "
                f"residual {section['residual']:.3e}, matches={section['matches_direct']}"
            )
    else:  # distance
        lines.append(f"code: {report['code']} (n={report['n']}, K={report['K']})")
        flag = " (degenerate)" if report["degenerate"] else ""
        pflag = " (degenerate)" if report["pure_degenerate"] else ""
        lines.append(f"distance: {report['distance']}{flag}")
        lines.append(f"pure distance: {report['pure_distance']}{pflag}")
    return "\n".join(lines) + "\n"


def emit_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    return _render_table(report)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qerasure",
                     description="Erasure-space analysis of small quantum codes")
    sub = parser.add_subparsers(dest="mode", required=True)
    for mode in _MODES:
        p = sub.add_parser(mode, help=f"{mode} report")
        p.add_argument("--fixture", metavar="NAME",
                       help=f"bundled code name ({', '.join(FIXTURE_NAMES)})")
        p.add_argument("--code", help="JSON code description file")
        p.add_argument("--code2", help="second JSON code file (union mode)")
        p.add_argument("--transform", help="transform as JSON literal or file")
        p.add_argument("--max-weight", type=int, dest="max_weight",
                       help="largest Pauli weight to classify (default n)")
        p.add_argument("--pure", action="store_true",
                       help="classify against the pure erasure space")
        p.add_argument("--format", choices=("json", "table"), default="json")
        p.add_argument("--out", help="write the report to a file instead of stdout")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        report = _MODES[args.mode](args)
    except CliError as exc:
        print(f"qerasure: error[{exc.code}] {exc}", file=sys.stderr)
        return 1
    except OrthogonalityError as exc:
        print(f"qerasure: error[orthogonality] {exc}", file=sys.stderr)
        return 1
    except (CodeValidationError, ValueError) as exc:
        print(f"qerasure: error[invalid-input] {exc}", file=sys.stderr)
        return 1
    text = emit_report(report, args.format)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    for key in ("theorem4", "theorem5"):
        section = report.get(key)
        if section is not None and not section["matches_direct"]:
            print(f"qerasure: error[formula-mismatch] {key} disagrees with the "
                  f"direct computation (residual {section['residual']:.3e})",
                  file=sys.stderr)
            return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
