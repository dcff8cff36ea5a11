"""Command-line front end.

Subcommands: alexander, casson, tuples, diagram-std, diagram-validate,
twobridge, report.  Every subcommand accepts --json for machine-readable
output.  Exit codes: 0 success, 2 parse or usage errors, 3 domain
invariant violations (including failed diagram validation), 4 internal
consistency failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .casson import SurgeryDatum, casson_surgery
from .diagram import RelTrisectionDiagram, std_diagram
from .errors import ConsistencyError, ParseError
from .laurent import LaurentPoly
from .ribbon import BandPresentation, alexander_from_bands, fox_milnor_factor, kn_presentation
from .tripar import BoundaryClass, TrisectionType, admissible_tuples, genus_lower_bound
from .twobridge import cf_to_type, is_torus_type, isotopic

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_INTERNAL = 4


@dataclass
class RunConfig:
    subcommand: str
    json_output: bool = False
    input_path: str | None = None
    params: dict = field(default_factory=dict)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reltris",
        description="Trisection parameters, ribbon-knot Alexander polynomials, "
        "Casson surgery values, and 2-bridge link types.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    alex = sub.add_parser("alexander", help="Fox-Milnor factor and Alexander polynomial from bands")
    src = alex.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", choices=["kn"], help="preset band family")
    src.add_argument("--input", help="band presentation JSON file")
    alex.add_argument("--n", type=int, help="family parameter (with --family kn)")
    alex.add_argument("--json", action="store_true")

    cas = sub.add_parser("casson", help="Casson invariant of 1/m surgery")
    src = cas.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", choices=["kn"], help="preset band family")
    src.add_argument("--input", help="band presentation JSON file")
    src.add_argument("--delta", help="inline Alexander polynomial as a JSON map")
    cas.add_argument("--n", type=int, help="family parameter (with --family kn)")
    cas.add_argument("--m", type=int, default=1, help="surgery coefficient 1/m (default 1)")
    cas.add_argument("--json", action="store_true")

    tup = sub.add_parser("tuples", help="admissible (g,k;p,b) for a given Euler characteristic")
    tup.add_argument("--chi", type=int, required=True)
    tup.add_argument("--genus", type=int, required=True)
    tup.add_argument("--exclude-seifert", action="store_true",
                     help="drop tuples whose boundary is forced Seifert (p=0, b<=3)")
    tup.add_argument("--json", action="store_true")

    dstd = sub.add_parser("diagram-std", help="emit the standard diagram of a type as JSON")
    dstd.add_argument("--type", required=True, metavar="G,K,P,B", dest="type_spec")
    dstd.add_argument("--json", action="store_true")

    dval = sub.add_parser("diagram-validate", help="homology-level standardness check")
    dval.add_argument("--input", required=True, help="diagram JSON file")
    dval.add_argument("--json", action="store_true")

    two = sub.add_parser("twobridge", help="2-bridge type from a continued fraction word")
    src = two.add_mutually_exclusive_group(required=True)
    src.add_argument("--cf", help="comma-separated word, e.g. 2,-2,2")
    src.add_argument("--compare", nargs=2, metavar=("WORD1", "WORD2"),
                     help="two words; print the isotopy verdict")
    two.add_argument("--json", action="store_true")

    rep = sub.add_parser("report", help="per-n summary of the preset chain family")
    rep.add_argument("--n-max", type=int, required=True, dest="n_max")
    rep.add_argument("--json", action="store_true")

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    params = {
        k: v
        for k, v in vars(args).items()
        if k not in ("subcommand", "json", "input") and v is not None
    }
    return RunConfig(
        subcommand=args.subcommand,
        json_output=bool(getattr(args, "json", False)),
        input_path=getattr(args, "input", None),
        params=params,
    )


# -- shared helpers ---------------------------------------------------------


def _load_json_file(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc


def _parse_int_csv(text, what):
    try:
        return [int(part) for part in str(text).split(",")]
    except ValueError:
        raise ParseError(f"{what} must be comma-separated integers, got {text!r}") from None


def _bands_from_config(cfg: RunConfig) -> BandPresentation:
    if cfg.params.get("family") == "kn":
        if "n" not in cfg.params:
            raise ParseError("--family kn requires --n")
        return kn_presentation(cfg.params["n"])
    if cfg.input_path:
        return BandPresentation.from_json_dict(_load_json_file(cfg.input_path))
    raise ParseError("no band presentation given")


def _emit_json(payload, out):
    out.write(json.dumps(payload, indent=2) + "\n")


def _render_table(headers, rows, out):
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    out.write("\n".join(lines) + "\n")


# -- subcommands ------------------------------------------------------------


def _cmd_alexander(cfg, out):
    bands = _bands_from_config(cfg)
    f = fox_milnor_factor(bands)
    delta = alexander_from_bands(bands)
    if cfg.json_output:
        _emit_json(
            {
                "f": f.to_json_dict(),
                "f_str": str(f),
                "delta": delta.to_json_dict(),
                "delta_str": str(delta),
            },
            out,
        )
    else:
        out.write(f"f(t) = {f}\n")
        out.write(f"delta(t) = {delta}\n")
    return EXIT_OK


def _cmd_casson(cfg, out):
    if "delta" in cfg.params:
        try:
            raw = json.loads(cfg.params["delta"])
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON for --delta: {exc}") from exc
        delta = LaurentPoly.from_json_dict(raw)
    else:
        delta = alexander_from_bands(_bands_from_config(cfg))
    m = cfg.params.get("m", 1)
    value = casson_surgery(SurgeryDatum(delta, m))
    if cfg.json_output:
        _emit_json(
            {
                "delta": delta.to_json_dict(),
                "delta_str": str(delta),
                "m": m,
                "casson": value,
            },
            out,
        )
    else:
        out.write(f"lambda = {value}\n")
    return EXIT_OK


_TUPLE_COLUMNS = ("g", "k", "p", "b", "A", "chi", "page", "bindings", "heegaard")


def _tuple_row(t: TrisectionType) -> dict:
    page, bindings = t.open_book()
    return {
        "g": t.g,
        "k": t.k,
        "p": t.p,
        "b": t.b,
        "A": t.intersection_pairs(),
        "chi": t.euler_char(),
        "page": page,
        "bindings": bindings,
        "heegaard": t.heegaard_genus(),
    }


def _cmd_tuples(cfg, out):
    rows = [
        _tuple_row(t)
        for t in admissible_tuples(
            cfg.params["chi"], cfg.params["genus"], cfg.params.get("exclude_seifert", False)
        )
    ]
    if cfg.json_output:
        _emit_json(rows, out)
    else:
        _render_table(_TUPLE_COLUMNS, [[r[c] for c in _TUPLE_COLUMNS] for r in rows], out)
    return EXIT_OK


def _parse_type_spec(text) -> TrisectionType:
    parts = _parse_int_csv(text, "--type")
    if len(parts) != 4:
        raise ParseError(f"--type needs four integers g,k,p,b, got {text!r}")
    return TrisectionType(*parts)


def _cmd_diagram_std(cfg, out):
    t = _parse_type_spec(cfg.params["type_spec"])
    _emit_json(std_diagram(t).to_json_dict(), out)
    return EXIT_OK


def _cmd_diagram_validate(cfg, out):
    diagram = RelTrisectionDiagram.from_json_dict(_load_json_file(cfg.input_path))
    report = diagram.validate()
    if cfg.json_output:
        payload = report.to_json_dict()
        payload["type"] = str(diagram.declared)
        _emit_json(payload, out)
    else:
        out.write(f"type: {diagram.declared}\n")
        for name, ok in report.counts_ok.items():
            out.write(f"count {name}: {'ok' if ok else 'FAIL'}\n")
        for name, ok in report.disjoint_ok.items():
            out.write(f"disjoint {name}: {'ok' if ok else 'FAIL'}\n")
        for name, snf in report.cross_snf.items():
            ok = report.snf_ok[name]
            out.write(f"snf {name}: {snf} expected {report.expected_snf} {'ok' if ok else 'FAIL'}\n")
        out.write(f"passed: {report.passed}\n")
        out.write(f"note: {report.note}\n")
    return EXIT_OK if report.passed else EXIT_DOMAIN


def _twobridge_summary(word):
    t = cf_to_type(word)
    return t, {"word": word, "p": t.p, "q": t.q, "torus": is_torus_type(t)}


def _cmd_twobridge(cfg, out):
    if "cf" in cfg.params:
        t, info = _twobridge_summary(_parse_int_csv(cfg.params["cf"], "--cf"))
        if cfg.json_output:
            _emit_json(info, out)
        else:
            out.write(f"type = {t}\n")
            out.write(f"torus: {info['torus']}\n")
    else:
        word1, word2 = cfg.params["compare"]
        t1, info1 = _twobridge_summary(_parse_int_csv(word1, "--compare"))
        t2, info2 = _twobridge_summary(_parse_int_csv(word2, "--compare"))
        verdict = isotopic(t1, t2)
        if cfg.json_output:
            _emit_json({"first": info1, "second": info2, "isotopic": verdict}, out)
        else:
            out.write(f"first = {t1}\n")
            out.write(f"second = {t2}\n")
            out.write(f"isotopic: {verdict}\n")
    return EXIT_OK


_FAMILY_CHI = 1
_FAMILY_DIAGRAM_TYPE = TrisectionType(3, 3, 0, 4)


def report_rows(n_max: int) -> list[dict]:
    """Rows of the family report: invariants and the genus verdict per n."""
    if not isinstance(n_max, int) or isinstance(n_max, bool) or n_max < 1:
        raise ValueError(f"n_max must be a positive integer, got {n_max!r}")
    bound = genus_lower_bound(_FAMILY_CHI, BoundaryClass.KNOWN_NON_SEIFERT)
    survivors = []
    for g in range(0, _FAMILY_DIAGRAM_TYPE.g + 1):
        survivors.extend(admissible_tuples(_FAMILY_CHI, g, exclude_seifert_forced=True))
    verdict = (
        f"= {bound} (given the {_FAMILY_DIAGRAM_TYPE} diagram and "
        "known_non_seifert boundary)"
    )
    rows = []
    for n in range(1, n_max + 1):
        bands = kn_presentation(n)
        f = fox_milnor_factor(bands)
        delta = alexander_from_bands(bands)
        rows.append(
            {
                "n": n,
                "f": str(f),
                "delta": str(delta),
                "f_coeffs": f.to_json_dict(),
                "delta_coeffs": delta.to_json_dict(),
                "delta_second_derivative": delta.second_derivative_at_one(),
                "casson": casson_surgery(SurgeryDatum(delta, 1)),
                "admissible_chi1": [str(t) for t in survivors],
                "heegaard_genus": _FAMILY_DIAGRAM_TYPE.heegaard_genus(),
                "verdict": verdict,
            }
        )
    return rows


_REPORT_COLUMNS = (
    ("n", "n"),
    ("f(t)", "f"),
    ("delta(t)", "delta"),
    ("delta''(1)", "delta_second_derivative"),
    ("lambda", "casson"),
    ("tuples chi=1 g<=3", "admissible_chi1"),
    ("heegaard", "heegaard_genus"),
    ("verdict", "verdict"),
)


def _cmd_report(cfg, out):
    rows = report_rows(cfg.params["n_max"])
    if cfg.json_output:
        _emit_json(rows, out)
    else:
        table = []
        for r in rows:
            cells = []
            for _, key in _REPORT_COLUMNS:
                v = r[key]
                cells.append(" ".join(v) if isinstance(v, list) else v)
            table.append(cells)
        _render_table([h for h, _ in _REPORT_COLUMNS], table, out)
    return EXIT_OK


_HANDLERS = {
    "alexander": _cmd_alexander,
    "casson": _cmd_casson,
    "tuples": _cmd_tuples,
    "diagram-std": _cmd_diagram_std,
    "diagram-validate": _cmd_diagram_validate,
    "twobridge": _cmd_twobridge,
    "report": _cmd_report,
}


def run(cfg: RunConfig, out=None) -> int:
    """Execute one configured invocation; returns the exit status."""
    handler = _HANDLERS.get(cfg.subcommand)
    if handler is None:
        raise ParseError(f"unknown subcommand {cfg.subcommand!r}")
    return handler(cfg, out if out is not None else sys.stdout)


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, ParseError):
        return EXIT_PARSE
    if isinstance(exc, ConsistencyError):
        return EXIT_INTERNAL
    if isinstance(exc, ValueError):
        return EXIT_DOMAIN
    raise exc


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = config_from_args(args)
    try:
        return run(cfg)
    except (ParseError, ConsistencyError, ValueError) as exc:
        code = exit_code_for(exc)
        kind = {EXIT_PARSE: "parse", EXIT_DOMAIN: "domain", EXIT_INTERNAL: "internal"}[code]
        print(f"error[{kind}]: {exc}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
