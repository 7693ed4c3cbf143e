"""Command-line front end.

    paleydesigns graph     --p 13 --verify
    paleydesigns census    --p 29 --format csv
    paleydesigns k4-table  --kind peisert --qmax 6241
    paleydesigns designs   --p 29 --family K4,D
    paleydesigns analysis  --p 281

Exit status is 0 iff every requested verification passed, 1 on a structural
failure and 2 on invalid parameters.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, replace
from fractions import Fraction

from . import analysis, census, designs, export, reference
from .errors import (FamilyValidationError, InvalidArgumentError, InvalidSpecError,
                     PaleyDesignError, ResourceLimitError, StructuralFailure,
                     UnsupportedParametersError)
from .field import GF, is_prime, prime_power
from .graphs import (GraphKind, build_paley, build_peisert, check_paley_parameters,
                     check_peisert_parameters, verify_srg)


@dataclass
class RunConfig:
    command: str
    p: int | None = None
    r: int = 1
    kind: GraphKind = GraphKind.PALEY
    fmt: str = "text"
    output: str | None = None
    threads: int = 1
    brute_cap: int | None = None
    k_cap: int | None = None
    options: dict | None = None

    def check(self) -> None:
        if self.p is None:
            return
        if not is_prime(self.p):
            raise InvalidSpecError(f"p = {self.p} is not prime")
        if self.kind is GraphKind.PALEY:
            check_paley_parameters(self.p, self.r)
        else:
            check_peisert_parameters(self.p, self.r)

    def graph(self):
        self.check()
        f = GF(self.p, self.r)
        return build_paley(f) if self.kind is GraphKind.PALEY else build_peisert(f)


def _env_int(name, default):
    value = os.environ.get(name)
    return int(value) if value else default


def _emit(cfg: RunConfig, text: str, path: str | None = None) -> None:
    path = path or cfg.output
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _render(cfg: RunConfig, records: list[dict], fieldnames=None) -> str:
    if cfg.fmt == "json":
        return json.dumps(records, indent=1) + "\n"
    if cfg.fmt == "csv":
        return export.to_csv(records, fieldnames)
    fieldnames = fieldnames or (list(records[0]) if records else [])
    widths = {f: max(len(f), *(len(str(r[f])) for r in records)) for f in fieldnames}
    lines = ["  ".join(f.ljust(widths[f]) for f in fieldnames)]
    lines += ["  ".join(str(r[f]).ljust(widths[f]) for f in fieldnames) for r in records]
    return "\n".join(lines) + "\n"


# -- commands -------------------------------------------------------------------

def cmd_graph(cfg: RunConfig) -> int:
    g = cfg.graph()
    if cfg.fmt == "dimacs":
        _emit(cfg, export.graph_to_dimacs(g))
    else:
        _emit(cfg, export.graph_to_json(g) + "\n")
    print(f"{g.kind.value} graph: q={g.q} edges={g.n_edges}", file=sys.stderr)
    if cfg.options.get("verify"):
        srg = verify_srg(g)
        print(f"strongly regular {srg.as_tuple()} verified", file=sys.stderr)
    return 0


def cmd_census(cfg: RunConfig) -> int:
    g = cfg.graph()
    k4 = census.k4_fast(g)
    if cfg.options.get("method") == "brute":
        c = census.brute_census(g, cap=cfg.brute_cap, workers=cfg.threads)
        closed = census.census_from_k4(g.q, k4)
        if c != closed:
            raise StructuralFailure("brute-force census differs from the closed forms")
    else:
        c = census.census_from_k4(g.q, k4)
    if cfg.fmt == "json":
        _emit(cfg, export.census_to_json(c, g.kind.value) + "\n")
    else:
        _emit(cfg, _render(cfg, export.census_records(c, g.kind.value)))
    return 0


def admissible_orders(kind: GraphKind, qmin: int, qmax: int) -> list[int]:
    out = []
    for q in range(max(qmin, 2), qmax + 1):
        pr = prime_power(q)
        if pr is None:
            continue
        p, r = pr
        try:
            (check_paley_parameters if kind is GraphKind.PALEY else check_peisert_parameters)(p, r)
        except UnsupportedParametersError:
            continue
        out.append(q)
    return out


def _k4(kind: GraphKind, q: int, method: str, cfg: RunConfig) -> int:
    p, r = prime_power(q)
    f = GF(p, r)
    if method == "charsum":
        return analysis.k4_char_sum(f).k4_value
    g = build_paley(f) if kind is GraphKind.PALEY else build_peisert(f)
    if method == "brute":
        return census.brute_census(g, cap=cfg.brute_cap, workers=cfg.threads)[census.IsoClass4.K4]
    return census.k4_fast(g)


def cmd_k4_table(cfg: RunConfig) -> int:
    opts = cfg.options
    method = opts.get("method", "fast")
    if method == "charsum" and cfg.kind is not GraphKind.PALEY:
        raise UnsupportedParametersError("the character-sum method applies to Paley graphs only")
    records = []
    ok = True
    if opts.get("reference"):
        table = (reference.paley_k4_table() if cfg.kind is GraphKind.PALEY
                 else reference.peisert_k4_table())
        for row in table:
            if not opts["qmin"] <= row.q <= opts["qmax"]:
                continue
            k4 = _k4(cfg.kind, row.q, method, cfg)
            match = k4 == row.k4
            ok &= match
            records.append({"q": row.q, "k4": k4, "q_printed": row.q_printed,
                            "k4_reference": row.k4, "match": match})
    else:
        for q in admissible_orders(cfg.kind, opts["qmin"], opts["qmax"]):
            records.append({"q": q, "k4": _k4(cfg.kind, q, method, cfg)})
    _emit(cfg, _render(cfg, records))
    return 0 if ok else 1


def _design_record(d) -> dict:
    return {"name": d.name, "q": d.q, "k": d.k, "b": d.b, "lambda": d.lam}


def cmd_designs(cfg: RunConfig) -> int:
    g = cfg.graph()
    opts = cfg.options
    blocks_out = opts.get("blocks_out")
    block_fmt = "json" if cfg.fmt == "json" else "text"

    def write_blocks(d, tag):
        if blocks_out:
            os.makedirs(blocks_out, exist_ok=True)
            ext = "json" if block_fmt == "json" else "txt"
            body = export.design_to_json(d) if block_fmt == "json" else export.design_to_text(d)
            with open(os.path.join(blocks_out, f"{tag}.{ext}"), "w") as fh:
                fh.write(body)

    records = []
    if opts.get("appendix"):
        ref = reference.design_lambda_q29() if g.q == 29 else None
        rows = designs.appendix_table(g, reference=ref)
        for row in rows:
            records.append({
                "family": row.label, "b": row.b, "lambda_predicted": row.lambda_predicted,
                "lambda_verified": row.lambda_verified,
                "lambda_reference": "" if row.lambda_reference is None else row.lambda_reference,
                "reference_match": "" if row.matches_reference is None else row.matches_reference,
            })
    elif opts.get("corollary2") or opts.get("complements"):
        ds = designs.corollary2_designs(g)
        for name, d in ds.items():
            if opts.get("complements"):
                d = designs.complement_design(d)
                d = replace(d, name="complement " + name)
            records.append(_design_record(d))
            write_blocks(d, d.name.replace(" ", "_"))
    else:
        family = opts.get("family")
        if not family:
            raise InvalidArgumentError("give --family, --appendix, --corollary2 or --complements")
        fam = designs.BlockFamily.from_names(family)
        d = designs.build_design(g, fam, k_cap=cfg.k_cap)
        rec = _design_record(d)
        if fam.k == 4:
            rec["lambda_predicted"] = designs.predicted_lambda(
                g.q, census.k4_fast(g), [census.IsoClass4.parse(n) for n in fam.names])
        records.append(rec)
        write_blocks(d, "_".join(fam.names))
    _emit(cfg, _render(cfg, records))
    return 0


def cmd_analysis(cfg: RunConfig) -> int:
    g = cfg.graph()
    q = g.q
    k4 = census.k4_fast(g)
    rec = {"q": q, "kind": g.kind.value, "k4_census": k4}
    ok = True
    if g.kind is GraphKind.PALEY:
        cs = analysis.k4_char_sum(g.field)
        iv = analysis.k4_interval(q)
        ok = cs.k4_value == k4 and iv.contains(k4)
        rec.update({
            "k4_charsum": cs.k4_value,
            "normalization": _frac(cs.normalization),
            "normalization_is_1/512": cs.matches_stated_constant,
            "interval_lo": f"{float(iv.lower):.6f}",
            "interval_hi": f"{float(iv.upper):.6f}",
            "interval_contains": iv.contains(k4),
        })
    ratio = analysis.asymptotic_ratio(q, k4)
    rec["ratio"] = f"{float(ratio):.6f}"
    _emit(cfg, _render(cfg, [rec]))
    return 0 if ok else 1


COMMANDS = {
    "graph": cmd_graph,
    "census": cmd_census,
    "k4-table": cmd_k4_table,
    "designs": cmd_designs,
    "analysis": cmd_analysis,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="paleydesigns", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, needs_field=True, formats=("text", "json", "csv")):
        if needs_field:
            sp.add_argument("--p", type=int, required=True, help="field characteristic")
            sp.add_argument("--r", type=int, default=1, help="extension degree")
        sp.add_argument("--kind", choices=[k.value for k in GraphKind], default="paley")
        sp.add_argument("--format", dest="fmt", choices=formats, default=formats[0])
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")
        sp.add_argument("--threads", type=int, default=os.cpu_count() or 1)
        sp.add_argument("--brute-cap", type=int,
                        default=_env_int("PALEYDESIGNS_BRUTE_CAP", None))
        sp.add_argument("--k-cap", type=int, default=_env_int("PALEYDESIGNS_K_CAP", None))

    sp = sub.add_parser("graph", help="build a graph, export it, optionally verify SRG")
    common(sp, formats=("json", "dimacs"))
    sp.add_argument("--verify", action="store_true")

    sp = sub.add_parser("census", help="4-vertex induced subgraph census")
    common(sp)
    sp.add_argument("--method", choices=("closed", "brute"), default="closed")

    sp = sub.add_parser("k4-table", help="k4 for every admissible order in a range")
    common(sp, needs_field=False, formats=("csv", "json", "text"))
    sp.add_argument("--qmin", type=int, default=5)
    sp.add_argument("--qmax", type=int, required=True)
    sp.add_argument("--method", choices=("fast", "brute", "charsum"), default="fast")
    sp.add_argument("--reference", action="store_true",
                    help="tabulate the bundled published orders and compare values")

    sp = sub.add_parser("designs", help="build and exhaustively verify 2-designs")
    common(sp)
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--family", help="comma-separated graph names, e.g. K4,D or K3")
    mode.add_argument("--appendix", action="store_true", help="all 62 four-vertex families")
    mode.add_argument("--corollary2", action="store_true")
    mode.add_argument("--complements", action="store_true")
    sp.add_argument("--blocks-out", help="directory for block files")

    sp = sub.add_parser("analysis", help="character sum, bound interval and ratio")
    common(sp)
    return parser


def parse_config(argv=None) -> RunConfig:
    ns = vars(build_parser().parse_args(argv))
    base = {k: ns.pop(k) for k in ("command", "fmt", "output", "threads", "brute_cap", "k_cap")}
    cfg = RunConfig(p=ns.pop("p", None), r=ns.pop("r", 1), kind=GraphKind(ns.pop("kind")),
                    options=ns, **base)
    return cfg


def main(argv=None) -> int:
    try:
        cfg = parse_config(argv)
        return COMMANDS[cfg.command](cfg)
    except (StructuralFailure, FamilyValidationError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        if getattr(exc, "witness", None) is not None:
            print(f"witness: {exc.witness}", file=sys.stderr)
        return 1
    except (InvalidSpecError, UnsupportedParametersError, InvalidArgumentError,
            ResourceLimitError, PaleyDesignError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
