"""Command line interface.

Subcommands:

    invariant   xi and F of a single germ
    graph       section dual graph of a germ
    classify    catalog rows, symbolic or at concrete parameters
    enumerate   admissible target configurations of one neighborhood
    verify      exhaustive monotonicity sweeps (exit code 1 on violation)
    oracle      closed forms vs basket route vs graph table

Output formats: text (default), json (sorted keys, 2-space indent), csv.
Exit codes: 0 all checks passed, 1 a sweep reported violations, 2 usage
error.  Sweep bounds default to max_index=12, max_aw=12 so that every
default sweep finishes quickly; raise them explicitly for deeper runs.
An optional key=value config file supplies defaults for max_index,
max_aw, jobs, format, out and kind; explicit flags win.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .dualgraph import GraphSum, elephant_components
from .invariants import (
    SingType,
    config_to_obj,
    f_invariant,
    fraction_str,
    make_point,
    xi,
)
from .neighborhoods import (
    ALL_CASES,
    CATALOG,
    Case,
    ISOLATED_CASES,
    Kind,
    PARAM_NAMES,
    graph_ex,
    graph_ey,
    make_neighborhood,
    mu,
    parse_case_label,
    source_config,
)
from .transitions import Bounds, enumerate_targets
from .verifier import (
    CSV_HEADER,
    VerifyReport,
    oracle_check,
    report_csv_rows,
    verify_all,
    verify_divisorial_case,
    verify_flip_case,
)

DEFAULT_MAX_INDEX = 12
DEFAULT_MAX_AW = 12

_PARAM_FLAGS = ("m", "k", "r1", "k1", "r2", "k2")
_CONFIG_KEYS = {"max_index", "max_aw", "jobs", "format", "out", "kind"}


@dataclass(frozen=True)
class CliConfig:
    bounds: Bounds
    format: str
    out: str | None
    jobs: int
    kind: str


def _add_output_opts(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--format", choices=["text", "json", "csv"], default=None,
                    help="output format (default text)")
    sp.add_argument("--out", default=None, help="write output to a file instead of stdout")
    sp.add_argument("--config", default=None, help="key=value file with option defaults")


def _add_bounds_opts(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--max-index", dest="max_index", type=int, default=None,
                    help=f"cap on germ indices (default {DEFAULT_MAX_INDEX})")
    sp.add_argument("--max-aw", dest="max_aw", type=int, default=None,
                    help=f"cap on axial weights (default {DEFAULT_MAX_AW})")


def _add_case_opts(sp: argparse.ArgumentParser, with_all: bool) -> None:
    sp.add_argument("--case", default=None, help="catalog case label, e.g. 2.2.1.1 or 2.2.1p.2")
    sp.add_argument("--kind", choices=["auto", "isolated", "divisorial", "both"], default=None,
                    help="contraction kind (auto: isolated when the case flips, else divisorial)")
    if with_all:
        sp.add_argument("--all", action="store_true", help="run over every catalog case")


def _add_param_opts(sp: argparse.ArgumentParser) -> None:
    for name in _PARAM_FLAGS:
        sp.add_argument(f"--{name}", type=int, default=None)


def _add_point_opts(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--type", required=True, choices=[t.value for t in SingType])
    sp.add_argument("--r", type=int, default=None, help="index (where not fixed by the type)")
    sp.add_argument("--k", type=int, default=None, help="axial weight (where not fixed)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flipcheck",
        description="exact invariants of terminal germs and exhaustive transition checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("invariant", help="xi and F of a single germ")
    _add_point_opts(sp)
    _add_output_opts(sp)

    sp = sub.add_parser("graph", help="section dual graph of a germ")
    _add_point_opts(sp)
    _add_output_opts(sp)

    sp = sub.add_parser("classify", help="catalog rows")
    _add_case_opts(sp, with_all=True)
    _add_param_opts(sp)
    _add_output_opts(sp)

    sp = sub.add_parser("enumerate", help="admissible target configurations")
    _add_case_opts(sp, with_all=False)
    _add_param_opts(sp)
    _add_bounds_opts(sp)
    _add_output_opts(sp)

    sp = sub.add_parser("verify", help="exhaustive monotonicity sweeps")
    _add_case_opts(sp, with_all=True)
    _add_bounds_opts(sp)
    sp.add_argument("--jobs", type=int, default=None, help="worker processes (default 1)")
    _add_output_opts(sp)

    sp = sub.add_parser("oracle", help="invariant table consistency sweep")
    _add_bounds_opts(sp)
    _add_output_opts(sp)

    return parser


def _read_config_file(path: str) -> dict[str, str]:
    data: dict[str, str] = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"{path}:{lineno}: expected key=value")
        data[key.strip()] = value.strip()
    return data


def _resolve(args: argparse.Namespace, parser: argparse.ArgumentParser) -> CliConfig:
    filecfg: dict[str, str] = {}
    if getattr(args, "config", None):
        try:
            filecfg = _read_config_file(args.config)
        except (OSError, ValueError) as exc:
            parser.error(str(exc))
        unknown = set(filecfg) - _CONFIG_KEYS
        if unknown:
            parser.error(f"unknown config keys: {', '.join(sorted(unknown))}")

    def pick(name: str, default, cast=str):
        val = getattr(args, name, None)
        if val is not None:
            return val
        if name in filecfg:
            try:
                return cast(filecfg[name])
            except ValueError:
                parser.error(f"config value for {name} is not valid: {filecfg[name]!r}")
        return default

    fmt = pick("format", "text")
    if fmt not in ("text", "json", "csv"):
        parser.error(f"unknown format {fmt!r}")
    kind = pick("kind", "auto")
    if kind not in ("auto", "isolated", "divisorial", "both"):
        parser.error(f"unknown kind {kind!r}")
    jobs = pick("jobs", 1, int)
    if jobs < 1:
        parser.error("jobs must be >= 1")
    try:
        bounds = Bounds(pick("max_index", DEFAULT_MAX_INDEX, int),
                        pick("max_aw", DEFAULT_MAX_AW, int))
    except ValueError as exc:
        parser.error(str(exc))
    return CliConfig(bounds=bounds, format=fmt, out=pick("out", None), jobs=jobs, kind=kind)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _point_from_args(args, parser):
    try:
        return make_point(args.type, args.r, args.k)
    except ValueError as exc:
        parser.error(str(exc))


def _cmd_invariant(args, parser, cfg: CliConfig) -> tuple[int, str]:
    p = _point_from_args(args, parser)
    xv, fv = xi(p), fraction_str(f_invariant(p))
    if cfg.format == "json":
        return 0, _json_text({"type": p.type.value, "r": p.r, "k": p.k, "xi": xv, "f": fv})
    if cfg.format == "csv":
        return 0, _csv_text(("type", "r", "k", "xi", "f"),
                            [(p.type.value, p.r, p.k, xv, fv)])
    return 0, f"Xi={xv} F={fv}\n"


def _cmd_graph(args, parser, cfg: CliConfig) -> tuple[int, str]:
    p = _point_from_args(args, parser)
    label = GraphSum(elephant_components(p)).label
    if cfg.format == "json":
        return 0, _json_text({"type": p.type.value, "r": p.r, "k": p.k, "graph": label})
    if cfg.format == "csv":
        return 0, _csv_text(("type", "r", "k", "graph"),
                            [(p.type.value, p.r, p.k, label)])
    return 0, label + "\n"


def _case_kinds(case: Case) -> list[str]:
    kinds = [Kind.ISOLATED.value] if case in ISOLATED_CASES else []
    kinds.append(Kind.DIVISORIAL.value)
    return kinds


def _gather_params(args, parser, case: Case) -> dict[str, int]:
    given = {name: getattr(args, name) for name in _PARAM_FLAGS if getattr(args, name) is not None}
    required = PARAM_NAMES[case]
    missing = [name for name in required if name not in given]
    extra = [name for name in given if name not in required]
    if missing:
        parser.error(f"case {case.value} requires --{' --'.join(missing)}")
    if extra:
        parser.error(f"case {case.value} takes no --{' --'.join(extra)}")
    return {name: given[name] for name in required}


def _parse_case(args, parser) -> Case:
    try:
        return parse_case_label(args.case)
    except ValueError as exc:
        parser.error(str(exc))


def _cmd_classify(args, parser, cfg: CliConfig) -> tuple[int, str]:
    if args.all and args.case:
        parser.error("--all and --case are mutually exclusive")
    if not args.all and not args.case:
        parser.error("classify needs --case or --all")
    params_given = any(getattr(args, name) is not None for name in _PARAM_FLAGS)
    if args.all and params_given:
        parser.error("--all takes no case parameters")

    if args.all or not params_given:
        cases = list(ALL_CASES) if args.all else [_parse_case(args, parser)]
        objs = []
        for case in cases:
            d = CATALOG[case]
            objs.append({"case": case.value, "kinds": _case_kinds(case),
                         "params": d["params"], "mu": d["mu"], "source": d["source"],
                         "ex": d["ex"], "ey": d["ey"]})
        if cfg.format == "json":
            return 0, _json_text(objs if args.all else objs[0])
        if cfg.format == "csv":
            rows = [(o["case"], ",".join(o["kinds"]), o["params"], o["mu"],
                     o["source"], o["ex"], o["ey"]) for o in objs]
            return 0, _csv_text(("case", "kinds", "params", "mu", "source", "ex", "ey"), rows)
        lines = [
            f"{o['case']}  kinds={','.join(o['kinds'])}  params={o['params'] or '-'}  "
            f"mu={o['mu']}  source={o['source']}  ex={o['ex']}  ey={o['ey']}"
            for o in objs
        ]
        return 0, "\n".join(lines) + "\n"

    case = _parse_case(args, parser)
    params = _gather_params(args, parser, case)
    try:
        n = make_neighborhood(case, Kind.DIVISORIAL, **params)
    except ValueError as exc:
        parser.error(str(exc))
    src = source_config(n)
    xv, fv = xi(src), fraction_str(f_invariant(src))
    obj = {"case": case.value, "kinds": _case_kinds(case), "params": n.params,
           "mu": mu(n), "source": config_to_obj(src), "ex": graph_ex(n).label,
           "ey": graph_ey(n).label, "xi": xv, "f": fv}
    if cfg.format == "json":
        return 0, _json_text(obj)
    if cfg.format == "csv":
        pstr = ";".join(f"{k}={v}" for k, v in n.params.items())
        return 0, _csv_text(("case", "kinds", "params", "mu", "source", "ex", "ey", "xi", "f"),
                            [(case.value, ",".join(obj["kinds"]), pstr, mu(n), str(src),
                              obj["ex"], obj["ey"], xv, fv)])
    pstr = " ".join(f"{k}={v}" for k, v in n.params.items())
    return 0, (f"{case.value} {pstr}: kinds={','.join(obj['kinds'])} mu={mu(n)} "
               f"source={src} ex={obj['ex']} ey={obj['ey']} Xi={xv} F={fv}\n")


def _single_kind(case: Case, kind_name: str, parser) -> Kind:
    if kind_name == "both":
        parser.error("this command needs a single kind, not both")
    if kind_name == "auto":
        return Kind.ISOLATED if case in ISOLATED_CASES else Kind.DIVISORIAL
    kind = Kind(kind_name)
    if kind is Kind.ISOLATED and case not in ISOLATED_CASES:
        parser.error(f"case {case.value} has no isolated form")
    return kind


def _cmd_enumerate(args, parser, cfg: CliConfig) -> tuple[int, str]:
    if not args.case:
        parser.error("enumerate needs --case")
    case = _parse_case(args, parser)
    kind = _single_kind(case, cfg.kind, parser)
    params = _gather_params(args, parser, case)
    try:
        n = make_neighborhood(case, kind, **params)
    except ValueError as exc:
        parser.error(str(exc))
    targets = enumerate_targets(n, cfg.bounds)
    if cfg.format == "json":
        obj = {"case": case.value, "kind": kind.value, "params": n.params,
               "bounds": {"max_index": cfg.bounds.max_index, "max_aw": cfg.bounds.max_aw},
               "targets": [config_to_obj(c) for c in targets]}
        return 0, _json_text(obj)
    pstr = ";".join(f"{k}={v}" for k, v in n.params.items())
    if cfg.format == "csv":
        rows = [(case.value, kind.value, pstr, str(c)) for c in targets]
        return 0, _csv_text(("case", "kind", "params", "target"), rows)
    head = f"case={case.value} kind={kind.value}"
    if pstr:
        head += f" params={pstr}"
    lines = [f"{head} targets={len(targets)}"]
    lines.extend(str(c) for c in targets)
    return 0, "\n".join(lines) + "\n"


def _report_lines(reports: list[VerifyReport]) -> str:
    lines = [
        f"{'PASS' if r.ok else 'FAIL'} case={r.case} kind={r.kind} "
        f"pairs_checked={r.pairs_checked} violations={len(r.violations)} "
        f"equality_cases={len(r.equality_cases)}"
        for r in reports
    ]
    if len(reports) > 1:
        total = sum(r.pairs_checked for r in reports)
        bad = sum(len(r.violations) for r in reports)
        status = "PASS" if bad == 0 else "FAIL"
        lines.append(f"OVERALL {status} reports={len(reports)} pairs_checked={total} violations={bad}")
    return "\n".join(lines) + "\n"


def _render_reports(reports: list[VerifyReport], cfg: CliConfig) -> tuple[int, str]:
    code = 0 if all(r.ok for r in reports) else 1
    if cfg.format == "json":
        objs = [r.to_obj() for r in reports]
        return code, _json_text(objs[0] if len(objs) == 1 else objs)
    if cfg.format == "csv":
        rows = [row for r in reports for row in report_csv_rows(r)]
        return code, _csv_text(CSV_HEADER, rows)
    return code, _report_lines(reports)


def _cmd_verify(args, parser, cfg: CliConfig) -> tuple[int, str]:
    if args.all and args.case:
        parser.error("--all and --case are mutually exclusive")
    if not args.all and not args.case:
        parser.error("verify needs --case or --all")
    if args.all:
        kind_name = "both" if cfg.kind == "auto" else cfg.kind
        kinds = {"isolated": (Kind.ISOLATED,), "divisorial": (Kind.DIVISORIAL,),
                 "both": (Kind.ISOLATED, Kind.DIVISORIAL)}[kind_name]
        reports = verify_all(cfg.bounds, cfg.jobs, kinds=kinds)
    else:
        case = _parse_case(args, parser)
        if cfg.kind == "both":
            names = ["isolated", "divisorial"] if case in ISOLATED_CASES else ["divisorial"]
        else:
            names = [_single_kind(case, cfg.kind, parser).value]
        reports = []
        for name in names:
            if name == "isolated":
                reports.append(verify_flip_case(case, cfg.bounds, cfg.jobs))
            else:
                reports.append(verify_divisorial_case(case, cfg.bounds, cfg.jobs))
    return _render_reports(reports, cfg)


def _cmd_oracle(args, parser, cfg: CliConfig) -> tuple[int, str]:
    return _render_reports([oracle_check(cfg.bounds)], cfg)


_COMMANDS = {
    "invariant": _cmd_invariant,
    "graph": _cmd_graph,
    "classify": _cmd_classify,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _resolve(args, parser)
    code, text = _COMMANDS[args.command](args, parser, cfg)
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


def entry() -> None:  # console script hook
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
