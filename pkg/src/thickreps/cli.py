"""Command line interface: ``thickreps <command> ...``.

Exit codes: 0 ok/confirmed, 2 usage, 3 golden or witness/evidence mismatch,
4 intractable density bound.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from . import golden
from .character import Character, IrrepLabel, weight_system
from .classify import (
    DEFAULT_DENSITY_BOUND,
    Intractable,
    Mode,
    ProductLabel,
    classify,
    dual_highest_weight,
    enumerate_classification,
    product_thickness,
    verdict_labels,
)
from .oracle import (
    REP_NAMES,
    ConstructionError,
    build_matrix_rep,
    sample_thickness_evidence,
    so_even_witness,
    verify_nonthick_witness,
)
from .poset import build_poset, is_chain
from .rootsystem import CartanType, RootSystemError, build_root_system

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_INTRACTABLE = 0, 2, 3, 4
CACHE_ENV = "THICKREPS_CACHE_DIR"
COLUMNS = ["family", "rank", "lambda", "dim", "wmf", "chain", "thick", "dense", "failing_m", "reason"]


class UsageError(Exception):
    pass


def _coords(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError as exc:
        raise UsageError(f"bad weight coordinates {text!r}") from exc


def _label(family: str, rank: int, lam: str) -> IrrepLabel:
    try:
        rs = build_root_system(CartanType(family.upper(), rank))
        return IrrepLabel(rs, _coords(lam))
    except RootSystemError as exc:
        raise UsageError(str(exc)) from exc


def _cache_dir(args) -> Path | None:
    d = getattr(args, "cache_dir", None) or os.environ.get(CACHE_ENV)
    return Path(d) if d else None


def cached_weight_system(label: IrrepLabel, cache_dir: Path | None) -> Character:
    """Weight system, read from or written to a content-addressed JSON cache."""
    if cache_dir is None:
        return weight_system(label)
    t = label.root_system.cartan_type
    key = json.dumps([t.family, t.rank, list(label.highest_weight)])
    path = cache_dir / (hashlib.sha256(key.encode()).hexdigest() + ".json")
    if path.is_file():
        try:
            return Character.from_json(path.read_text())
        except (ValueError, KeyError):
            pass
    ch = weight_system(label)
    cache_dir.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(f".{os.getpid()}.tmp")
    tmp.write_text(json.dumps(ch.to_json(), sort_keys=True))
    tmp.replace(path)
    return ch


def _fmt_cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, (list, tuple)):
        return ",".join(str(x) for x in v)
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _emit_rows(rows: list[dict], fmt: str, out, extra: dict | None = None):
    if fmt == "json":
        payload = {"rows": rows}
        if extra:
            payload.update(extra)
        out.write(json.dumps(payload, sort_keys=True, indent=1) + "\n")
        return
    if fmt == "tsv":
        out.write("\t".join(COLUMNS) + "\n")
        for r in rows:
            out.write("\t".join(_fmt_cell(r[c]) for c in COLUMNS) + "\n")
    else:
        table = [COLUMNS] + [[_fmt_cell(r[c]) for c in COLUMNS] for r in rows]
        widths = [max(len(row[i]) for row in table) for i in range(len(COLUMNS))]
        for row in table:
            out.write("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() + "\n")
    if extra:
        for k in sorted(extra):
            out.write(f"# {k}: {json.dumps(extra[k], sort_keys=True)}\n")


def cmd_classify(args, out) -> int:
    label = _label(args.type, args.rank, args.coords)
    v = classify(label, dense=args.dense, density_bound=args.density_bound)
    _emit_rows([v.row()], args.format, out)
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    mode = Mode(args.mode)
    families = args.families.replace(",", "").upper()
    res = enumerate_classification(args.max_dim, families, args.max_rank, mode,
                                   density_bound=args.density_bound, threads=args.threads)
    extra = {"summary": res.summary}
    code = EXIT_OK
    if args.golden:
        expected = None
        if set(families) == set("ABCDEFG"):
            expected = golden.load_golden(mode.value, args.max_dim, args.max_rank)
        if expected is None:
            rule = golden.thick_list if mode is Mode.THICK else golden.dense_list
            expected = rule(args.max_dim, args.max_rank, families)
        got = verdict_labels(res.verdicts)
        missing = sorted(set(expected) - set(got))
        unexpected = sorted(set(got) - set(expected))
        extra["golden"] = {
            "match": not missing and not unexpected,
            "missing": [list(k[:2]) + [list(k[2])] for k in missing],
            "unexpected": [list(k[:2]) + [list(k[2])] for k in unexpected],
        }
        if missing or unexpected:
            code = EXIT_MISMATCH
    if mode is Mode.DENSE and res.not_evaluated:
        extra["not_evaluated"] = [list(k[:2]) + [list(k[2])] for k in (v.key() for v in res.not_evaluated)]
    _emit_rows([v.row() for v in res.verdicts], args.format, out, extra)
    return code


def cmd_character(args, out) -> int:
    label = _label(args.type, args.rank, args.coords)
    ch = cached_weight_system(label, _cache_dir(args))
    items = ch.sorted_items()
    if args.format == "json":
        out.write(json.dumps({"label": str(label), "dim": ch.dim,
                              "weights": [[list(w), m] for w, m in items]}, sort_keys=True, indent=1) + "\n")
    else:
        sep = "\t" if args.format == "tsv" else "  "
        out.write(f"weight{sep}mult\n")
        for w, m in items:
            out.write(f"{','.join(map(str, w))}{sep}{m}\n")
        if args.format == "pretty":
            out.write(f"# dim {ch.dim}, {len(items)} distinct weights\n")
    return EXIT_OK


def cmd_poset(args, out) -> int:
    label = _label(args.type, args.rank, args.coords)
    p = build_poset(cached_weight_system(label, _cache_dir(args)))
    chain = is_chain(p, check=True)
    if args.format == "json":
        d = p.to_json()
        d["chain"] = chain
        out.write(json.dumps(d, sort_keys=True, indent=1) + "\n")
    elif args.format == "tsv":
        out.write("upper\tlower\tsimple_root\n")
        for (a, b), i in zip(p.covers, p.cover_labels()):
            out.write(f"{','.join(map(str, a))}\t{','.join(map(str, b))}\t{i + 1}\n")
    else:
        out.write(p.render() + "\n")
        out.write(f"# chain: {'yes' if chain else 'no'}\n")
    return EXIT_OK


def cmd_dual(args, out) -> int:
    label = _label(args.type, args.rank, args.coords)
    d = dual_highest_weight(label)
    if args.format == "json":
        out.write(json.dumps({"label": str(label), "dual": list(d)}) + "\n")
    else:
        out.write(",".join(map(str, d)) + "\n")
    return EXIT_OK


def cmd_product(args, out) -> int:
    factors = []
    for text in args.factors:
        try:
            t, lam = text.split(":")
            ct = CartanType.parse(t)
        except (ValueError, RootSystemError) as exc:
            raise UsageError(f"bad factor {text!r}; expected e.g. G2:1,0") from exc
        factors.append(_label(ct.family, ct.rank, lam))
    v = product_thickness(ProductLabel(factors))
    _emit_rows([v.row()], args.format, out)
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    if args.seed is None:
        raise UsageError("oracle commands require --seed")
    try:
        if args.rep == "g2":
            rep = build_matrix_rep("g2")
        else:
            if args.n is None:
                raise UsageError(f"--n is required for {args.rep}")
            rep = build_matrix_rep(args.rep, args.n)
    except ConstructionError as exc:
        raise UsageError(str(exc)) from exc

    if args.action == "witness":
        if args.rep != "so-even":
            raise UsageError("built-in witnesses exist only for --rep so-even")
        report = verify_nonthick_witness(rep, so_even_witness(args.n), args.trials, args.seed,
                                         witness_kind="so-even-isotropic")
        ok = report.verdict
    else:
        if args.m is None or not 0 < args.m < rep.dim:
            raise UsageError(f"--m must satisfy 0 < m < {rep.dim}")
        report = sample_thickness_evidence(rep, args.m, args.pairs, args.retries, args.seed)
        ok = report.success_fraction == 1.0
    out.write(json.dumps(report.to_json(), sort_keys=True, indent=1) + "\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thickreps", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "tsv", "pretty"], default="pretty")
    common.add_argument("--cache-dir", default=None, help=f"weight-system cache (default ${CACHE_ENV})")
    sub = parser.add_subparsers(dest="command", required=True)

    def label_args(p):
        p.add_argument("type", help="Cartan family letter A-G")
        p.add_argument("rank", type=int)
        p.add_argument("coords", help="highest weight, comma-separated fundamental coordinates")

    p = sub.add_parser("classify", parents=[common], help="thickness (and density) of one irreducible")
    label_args(p)
    p.add_argument("--dense", action="store_true")
    p.add_argument("--density-bound", type=int, default=DEFAULT_DENSITY_BOUND)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", parents=[common], help="bounded classification table")
    p.add_argument("--mode", choices=["thick", "dense"], default="thick")
    p.add_argument("--max-dim", type=int, required=True)
    p.add_argument("--max-rank", type=int, default=7)
    p.add_argument("--families", default="ABCDEFG")
    p.add_argument("--density-bound", type=int, default=DEFAULT_DENSITY_BOUND)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--golden", action="store_true", help="diff against the reference lists")
    p.set_defaults(func=cmd_enumerate)

    for name, func, hlp in [("character", cmd_character, "weights with multiplicities"),
                            ("poset", cmd_poset, "weight poset covers"),
                            ("dual", cmd_dual, "highest weight of the dual module")]:
        p = sub.add_parser(name, parents=[common], help=hlp)
        label_args(p)
        p.set_defaults(func=func)

    p = sub.add_parser("product", parents=[common], help="thickness of an outer tensor product")
    p.add_argument("factors", nargs="+", help="factors like A1:1 G2:1,0")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("oracle", parents=[common], help="numerical transversality experiments")
    p.add_argument("action", choices=["evidence", "witness"])
    p.add_argument("--rep", choices=REP_NAMES, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--pairs", type=int, default=200)
    p.add_argument("--retries", type=int, default=5)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "enumerate" and args.max_dim < 1:
        print("error: --max-dim must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Intractable as exc:
        print(f"not evaluated: {exc}", file=sys.stderr)
        return EXIT_INTRACTABLE


if __name__ == "__main__":
    sys.exit(main())
