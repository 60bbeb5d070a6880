"""Command line entry point: ``grassmann {qk,verify,family} ...``.

Exit codes: 0 all assertions pass, 1 usage or input error, 2 a mathematical
assertion failed. Results go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from dataclasses import dataclass

from . import counting, families, polyring
from .centralizer import DimensionGuardError
from .counting import CertificateError, CountReport
from .exterior import GF3, QQ

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2

CSV_FIELDS = ["k", "c1", "c2", "c3", "d", "e", "qk_num", "qk_den", "qk_lt_1"]
JSON_EXTRA = ["c3_closed_form_ok", "routes_agree", "d_is_c1_plus_c2", "dimension_below_bound", "zero_terms"]
FIELDS = {"rationals": QQ, "gf3": GF3}
VERIFY_CHOICES = ("c3-closed-form", "gamma", "factorization", "scaling-chain", "all")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    subcommand: str
    k_from: int = 2
    k_to: int = 2
    kmax: int = 200
    which: str = "all"
    action: str | None = None
    n: int | None = None
    input_path: str | None = None
    output_path: str | None = None
    format: str = "text"
    field: str = "rationals"
    fast: bool = True
    workers: int | None = None

    def validate(self):
        if self.format not in ("csv", "json", "text"):
            raise UsageError(f"unknown format {self.format!r}")
        if self.field not in FIELDS:
            raise UsageError(f"unknown field {self.field!r}")
        if self.subcommand == "qk":
            if self.k_from < 1 or self.k_to < 1:
                raise UsageError("k range must be positive")
            if self.k_from > self.k_to:
                raise UsageError(f"empty range --from {self.k_from} --to {self.k_to}")
        if self.subcommand == "verify":
            if self.which not in VERIFY_CHOICES:
                raise UsageError(f"unknown certificate {self.which!r}")
            if self.kmax < 0 or (self.kmax < 1 and self.which != "gamma"):
                raise UsageError(f"--kmax {self.kmax} too small for {self.which}")
        if self.subcommand == "family":
            if self.action == "enumerate":
                if self.n is None:
                    raise UsageError("family enumerate needs --n")
            elif self.input_path is None:
                raise UsageError(f"family {self.action} needs --file")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="grassmann", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    q = sub.add_parser("qk", help="sweep Q_k over a range of k")
    q.add_argument("--from", dest="k_from", type=int, default=2)
    q.add_argument("--to", dest="k_to", type=int, default=2)
    q.add_argument("--format", choices=["csv", "json", "text"], default="text")
    q.add_argument("--output", dest="output_path")
    q.add_argument("--workers", type=int, default=None)

    v = sub.add_parser("verify", help="run identity certificates")
    v.add_argument("--which", choices=VERIFY_CHOICES, default="all")
    v.add_argument("--kmax", type=int, default=200)
    v.add_argument("--format", choices=["json", "text"], default="text")
    v.add_argument("--output", dest="output_path")

    f = sub.add_parser("family", help="intersecting odd families")
    f.add_argument("action", choices=["check", "complete", "enumerate", "certify"])
    f.add_argument("--file", dest="input_path")
    f.add_argument("--n", type=int)
    f.add_argument("--output", dest="output_path")
    f.add_argument("--format", choices=["json", "text"], default="text")
    f.add_argument("--field", choices=sorted(FIELDS), default="rationals")
    g = f.add_mutually_exclusive_group()
    g.add_argument("--fast", dest="fast", action="store_true", default=True)
    g.add_argument("--naive", dest="fast", action="store_false")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    keys = RunConfig.__dataclass_fields__
    return RunConfig(**{k: v for k, v in vars(ns).items() if k in keys and v is not None})


# --- report serialisation ---------------------------------------------------


def reports_to_csv(reports: list[CountReport]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    for r in reports:
        w.writerow(r.to_record())
    return buf.getvalue()


def reports_from_csv(text: str) -> list[CountReport]:
    return [CountReport.from_record(row) for row in csv.DictReader(io.StringIO(text))]


def reports_to_json(reports: list[CountReport]) -> str:
    out = []
    for r in reports:
        rec = r.to_record()
        out.append({key: rec[key] for key in ["k", "c1", "c2", "c3", "d", "e", "qk"] + CSV_FIELDS[6:] + JSON_EXTRA})
    return json.dumps(out, indent=1)


def reports_from_json(text: str) -> list[CountReport]:
    return [CountReport.from_record(rec) for rec in json.loads(text)]


def reports_to_text(reports: list[CountReport]) -> str:
    lines = [f"{'k':>5} {'n':>6}  {'Q_k':<24} {'Q_k<1':<6} E-D"]
    for r in reports:
        q = f"{r.qk.numerator}/{r.qk.denominator}"
        if len(q) > 24:
            q = f"<{r.qk.numerator.bit_length()}-bit>/2^{r.qk.denominator.bit_length() - 1}"
        lines.append(f"{r.k:>5} {r.n:>6}  {q:<24} {str(r.qk_lt_1):<6} {r.e - r.d}")
    return "\n".join(lines) + "\n"


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- subcommands ----------------------------------------------------------


def cmd_qk(cfg: RunConfig) -> int:
    reports = counting.sweep(cfg.k_from, cfg.k_to, workers=cfg.workers)
    render = {"csv": reports_to_csv, "json": reports_to_json, "text": reports_to_text}[cfg.format]
    _emit(render(reports), cfg.output_path)
    bad = [r.k for r in reports if r.k >= 2 and not r.qk_lt_1]
    if bad:
        print(f"Q_k >= 1 at k = {bad[:10]}", file=sys.stderr)
        return EXIT_FAIL
    print(f"Q_k < 1 for every k >= 2 in [{cfg.k_from}, {cfg.k_to}] ({len(reports)} values)", file=sys.stderr)
    return EXIT_OK


def run_certificates(which: str, kmax: int) -> list:
    names = VERIFY_CHOICES[:-1] if which == "all" else (which,)
    out = []
    for name in names:
        if name == "c3-closed-form":
            out.append((name, counting.verify_c3_identity(kmax)))
        elif name == "gamma":
            out.append((name, counting.verify_gamma_identity(kmax)))
        elif name == "factorization":
            out.append((name, polyring.verify_factorization()))
        elif name == "scaling-chain":
            out.append((name, polyring.verify_scaling_chain(range(1, kmax + 1))))
    return out


def cmd_verify(cfg: RunConfig) -> int:
    results = run_certificates(cfg.which, cfg.kmax)
    if cfg.format == "json":
        text = json.dumps({name: rep.passed for name, rep in results}, indent=1) + "\n"
    else:
        text = "\n".join(str(rep) for _, rep in results) + "\n"
    _emit(text, cfg.output_path)
    return EXIT_OK if all(rep.passed for _, rep in results) else EXIT_FAIL


def _verdict_text(v, fmt=str):
    return "yes" if v else f"no (witness {fmt(v.witness)})"


def _family_sets(F):
    from .exterior import indices_of

    return [indices_of(m) for m in F.sorted_members()]


def family_check(F, fast=True) -> dict:
    inter = families.is_intersecting(F)
    out = {"n": F.n, "size": len(F), "intersecting": bool(inter), "maximal": None, "witness": None}
    if not inter:
        out["witness"] = list(inter.witness)
        return out
    check = families.is_maximal_family_fast if fast else families.is_maximal_family_naive
    mx = check(F)
    out["maximal"] = bool(mx)
    out["witness"] = mx.witness
    out["dim"] = 2 ** (F.n - 1) + len(F)
    return out


def family_enumerate(n: int) -> list[dict]:
    rows = []
    bound = 3 * 2 ** (n - 2) if n >= 2 else None
    for i, F in enumerate(families.enumerate_maximal_families(n)):
        dim = 2 ** (n - 1) + len(F)
        rows.append({
            "index": i, "size": len(F), "dim": dim,
            "below_bound": bound is not None and dim < bound,
            "members": F.sorted_members(), "sets": _family_sets(F),
        })
    return rows


def cmd_family(cfg: RunConfig) -> int:
    if cfg.action == "enumerate":
        rows = family_enumerate(cfg.n)
        hist = dict(sorted(Counter(r["size"] for r in rows).items()))
        if cfg.format == "json":
            text = json.dumps({"n": cfg.n, "families": rows, "size_histogram": hist}, indent=1) + "\n"
        else:
            bound = 3 * 2 ** (cfg.n - 2) if cfg.n >= 2 else "-"
            lines = [f"n={cfg.n}: {len(rows)} maximal families, bound 3*2^(n-2) = {bound}"]
            for r in rows:
                flag = "  BELOW BOUND" if r["below_bound"] else ""
                lines.append(f"{r['index']:>4}  |F|={r['size']:<3} dim={r['dim']:<4} {r['sets']}{flag}")
            lines.append(f"size histogram: {hist}")
            text = "\n".join(lines) + "\n"
        _emit(text, cfg.output_path)
        return EXIT_OK

    F = families.read_family(cfg.input_path)
    if cfg.n is not None and cfg.n != F.n:
        raise UsageError(f"--n {cfg.n} does not match the family file (n={F.n})")

    if cfg.action == "check":
        res = family_check(F, cfg.fast)
        if cfg.format == "json":
            text = json.dumps(res, indent=1) + "\n"
        else:
            lines = [f"n={F.n} |F|={len(F)}", f"intersecting: {'yes' if res['intersecting'] else 'no'}"]
            if not res["intersecting"]:
                lines[-1] += f" (disjoint pair {res['witness']})"
            else:
                how = "zeta transform" if cfg.fast else "naive scan"
                lines.append(f"maximal ({how}): " + ("yes" if res["maximal"] else f"no (addable {res['witness']})"))
                lines.append(f"subalgebra dim: {res['dim']}")
            text = "\n".join(lines) + "\n"
        _emit(text, cfg.output_path)
        return EXIT_OK

    if cfg.action == "complete":
        G = families.complete_family(F)
        _emit(families.format_family(G, f"completed from {len(F)} members"), cfg.output_path)
        print(f"completed |F| {len(F)} -> {len(G)}", file=sys.stderr)
        return EXIT_OK

    # certify
    if F.n > 10:
        raise UsageError(f"certify needs n <= 10, got {F.n}")
    field = FIELDS[cfg.field]
    alg = families.certify_family(F, field)
    inter = families.is_intersecting(F)
    comb = bool(inter) and bool(families.is_maximal_family_fast(F))
    dim = 2 ** (F.n - 1) + len(F)
    agree = bool(alg) == comb
    if cfg.format == "json":
        text = json.dumps({
            "n": F.n, "size": len(F), "dim": dim, "field": field.name,
            "maximal_commutative": bool(alg), "maximal_family": comb, "agree": agree,
            "witness": None if alg else str(alg.witness),
        }, indent=1) + "\n"
    else:
        text = (
            f"n={F.n} |F|={len(F)} dim={dim} field={field.name}\n"
            f"maximal commutative subalgebra: {_verdict_text(alg)}\n"
            f"maximal intersecting family: {'yes' if comb else 'no'}\n"
            f"verdicts agree: {'yes' if agree else 'NO'}\n"
        )
    _emit(text, cfg.output_path)
    return EXIT_OK if agree else EXIT_FAIL


COMMANDS = {"qk": cmd_qk, "verify": cmd_verify, "family": cmd_family}


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = config_from_args(ns)
    try:
        cfg.validate()
        return COMMANDS[cfg.subcommand](cfg)
    except UsageError as exc:
        print(f"grassmann: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (families.FamilyError, DimensionGuardError, OSError) as exc:
        print(f"grassmann: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CertificateError as exc:
        print(f"grassmann: assertion failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
