"""Batch command-line surface.

``kothe <command> --config <path> [--out <dir>] [--seed <u64>]
[--format table|csv]``

Commands: norm, dual, mult-space, mult-norm, ess-norm, compact-check,
conjugate, factorize-check, lemma-r, verify-paper.  Exit codes: 0 success,
2 config/validation error, 3 computational error (the failing rule goes to
stderr).  CSV output: fixed header, 12 significant digits, UTF-8, LF.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .errors import DescriptorError, KotheError
from . import serialize as ser
from .bracket import Bracket


class Report:
    def __init__(self, title: str, columns=(), rows=(), scalars=None):
        self.title = title
        self.columns = tuple(columns)
        self.rows = [tuple(r) for r in rows]
        self.scalars = dict(scalars or {})

    def table(self) -> str:
        out = [self.title]
        for k, v in self.scalars.items():
            out.append(f"  {k}: {_fmt(v)}")
        if self.rows:
            out.append("  " + "  ".join(f"{c:>16}" for c in self.columns))
            for row in self.rows:
                out.append("  " + "  ".join(f"{_fmt(v):>16}" for v in row))
        return "\n".join(out)

    def csv(self) -> str:
        lines = [",".join(self.columns)]
        for row in self.rows:
            lines.append(",".join(_fmt(v) for v in row))
        return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _bracket_scalars(b: Bracket) -> dict:
    return {"lower": b.lower, "upper": b.upper,
            "certified": "yes" if b.certified else "no"}


# -- command handlers ---------------------------------------------------------

def _cmd_norm(cfg, seed):
    space = ser.space_from_json(cfg["space"])
    x = ser.sequence_from_json(cfg["sequence"])
    trunc = ser.truncation_from_json(cfg.get("truncation"))
    from .spaces import norm
    b = norm(space, x, trunc)
    return Report(f"norm in {space.short()}", ("quantity", "value"),
                  [("lower", b.lower), ("upper", b.upper)],
                  _bracket_scalars(b)), True


def _cmd_dual(cfg, seed):
    from .spaces import kothe_dual
    space = ser.space_from_json(cfg["space"])
    d = kothe_dual(space)
    return Report("Köthe dual", ("quantity", "value"),
                  [("dual", d.short())],
                  {"dual": d.short(), "json": json.dumps(ser.space_to_json(d))}
                  ), True


def _cmd_mult_space(cfg, seed):
    from .multipliers import multiplier_space
    x = ser.space_from_json(cfg["source"])
    y = ser.space_from_json(cfg["target"])
    res = multiplier_space(x, y)
    scalars = {"rule": res.rule, "kind": res.kind}
    if res.known:
        scalars["descriptor"] = res.descriptor.short()
        scalars["json"] = json.dumps(ser.space_to_json(res.descriptor))
    if res.constants:
        scalars["constants"] = f"{res.constants[0]:g}..{res.constants[1]:g}"
    return Report("multiplier space", (), (), scalars), res.known


def _cmd_mult_norm(cfg, seed):
    from .multipliers import multiplier_norm_oracle
    x = ser.space_from_json(cfg["source"])
    y = ser.space_from_json(cfg["target"])
    lam = ser.sequence_from_json(cfg["sequence"])
    trunc = ser.truncation_from_json(cfg.get("truncation"))
    res = multiplier_norm_oracle(x, y, lam, trunc, seed=seed)
    sc = _bracket_scalars(res.bracket)
    sc["upper rule"] = res.upper_rule
    return Report("multiplier norm", ("quantity", "value"),
                  [("lower", res.bracket.lower), ("upper", res.bracket.upper)],
                  sc), True


def _cmd_ess_norm(cfg, seed):
    from .essnorm import essential_norm, essential_norm_self
    x = ser.space_from_json(cfg["source"])
    lam = ser.sequence_from_json(cfg["sequence"])
    n_grid = cfg.get("n_grid")
    if "target" in cfg:
        y = ser.space_from_json(cfg["target"])
        trunc = ser.truncation_from_json(cfg.get("truncation"))
        rep = essential_norm(x, y, lam, n_grid, trunc)
    else:
        rep = essential_norm_self(x, lam, n_grid)
    rows = [(n, b.lower, b.upper) for n, b in rep.tail_norms]
    sc = {"limit lower": rep.limit.lower, "limit upper": rep.limit.upper,
          "verdict": rep.verdict, "certificate": rep.certificate}
    if rep.warnings:
        sc["warnings"] = " | ".join(rep.warnings)
    return Report("essential norm tails", ("n", "lower", "upper"), rows,
                  sc), True


def _cmd_compact_check(cfg, seed):
    kind = cfg.get("kind", "nakano")
    lam = ser.sequence_from_json(cfg["sequence"])
    if kind == "nakano":
        from .orlicz import nakano_compactness
        ps = ser.exponents_from_json(cfg["ps"])
        qs = ser.exponents_from_json(cfg["qs"])
        rep = nakano_compactness(lam, ps, qs)
        return Report("Nakano compactness", ("ell", "k", "sum_upper"),
                      [s for s in rep.sums if s],
                      {"verdict": rep.verdict, "reason": rep.reason}), True
    if kind == "lorentz-marcinkiewicz":
        from .lorentz import prop42_check
        params = {}
        for key in ("x", "y", "z"):
            if key in cfg:
                params[key] = ser.space_from_json(cfg[key])
        for key in ("phi", "psi"):
            if key in cfg:
                params[key] = ser.phi_from_json(cfg[key])
        rep = prop42_check(cfg["case"], params, lam)
        return Report("Lorentz/Marcinkiewicz compactness", (), (),
                      {"case": rep.case, "verdict": rep.verdict,
                       "branch": rep.branch, "reason": rep.reason}), True
    if kind == "cesaro":
        from .essnorm import cesaro_compactness
        x = ser.space_from_json(cfg["source"])
        y = ser.space_from_json(cfg["target"])
        rep = cesaro_compactness(x, y, lam)
        rows = [(n, b.lower, b.upper) for n, b in rep.tail_norms]
        return Report("Cesaro-pair compactness", ("n", "lower", "upper"),
                      rows, {"verdict": rep.verdict, "rule": rep.rule}), True
    raise DescriptorError(f"unknown compact-check kind {kind!r}")


def _cmd_conjugate(cfg, seed):
    from .orlicz import young_conjugate_generalized, appendix_conjugate
    n_fn = ser.orlicz_from_json(cfg["n"])
    m_fn = ser.orlicz_from_json(cfg["m"])
    grid = cfg.get("t_grid") or {}
    if isinstance(grid, dict):
        ts = np.geomspace(grid.get("lo", 0.05), grid.get("hi", 1.0),
                          int(grid.get("count", 64)))
    else:
        ts = np.asarray(grid, dtype=float)
    closed = (m_fn.kind == "mtilde" and n_fn.kind == "power"
              and n_fn.param == 2.0)
    rows = []
    for t in ts:
        bf = young_conjugate_generalized(n_fn, m_fn, float(t)).lower
        if closed:
            cf = appendix_conjugate(float(t))
            denom = max(cf, bf)
            rel = 0.0 if denom == 0 else abs(cf - bf) / denom
            rows.append((float(t), cf, bf, rel))
        else:
            rows.append((float(t), "", bf, ""))
    return Report("generalized Young conjugate sweep",
                  ("t", "closed_form", "brute_force", "rel_err"), rows), True


def _cmd_factorize_check(cfg, seed):
    from .multipliers import factorization_check
    x = ser.space_from_json(cfg["source"])
    y = ser.space_from_json(cfg["target"])
    rep = factorization_check(x, y)
    rows = [(t, v * (1 - 1e-9), v * (1 + 1e-9)) for t, v in rep.samples]
    sc = {"verdict": rep.verdict, "rule": rep.rule}
    if rep.spread is not None:
        sc["spread"] = rep.spread
    if rep.inf_decay is not None:
        sc["inf_decay"] = rep.inf_decay
    return Report("factorization check", ("t", "ratio_lower", "ratio_upper"),
                  rows, sc), True


def _cmd_lemma_r(cfg, seed):
    from .rademacher import Integrand, MeasurePartition, lemma_r_demo
    spec = cfg.get("integrand", {"kind": "poly", "coeffs": [0.0, 1.0]})
    if spec["kind"] == "poly":
        f = Integrand("poly", tuple(float(c) for c in spec["coeffs"]))
    else:
        f = Integrand("indicator", window=tuple(spec["window"]))
    pieces = tuple(tuple(float(v) for v in p)
                   for p in cfg.get("pieces", [[0.0, 1.0]]))
    part = MeasurePartition(pieces)
    values, tail = lemma_r_demo(f, part, int(cfg.get("n_max", 12)))
    return Report("Rademacher cancellation", ("n", "integral"), values,
                  {"trailing max |integral|": tail}), True


def _cmd_verify_paper(cfg, seed):
    from .verification import run_all
    names = cfg.get("criteria")
    results = run_all(seed, names)
    rows = [(r.name, "PASS" if r.passed else "FAIL", f"{r.elapsed:.2f}",
             r.detail) for r in results]
    ok = all(r.passed for r in results)
    return Report("verification suite", ("criterion", "status", "seconds",
                                         "detail"), rows,
                  {"all passed": "yes" if ok else "no"}), ok


_COMMANDS = {
    "norm": _cmd_norm,
    "dual": _cmd_dual,
    "mult-space": _cmd_mult_space,
    "mult-norm": _cmd_mult_norm,
    "ess-norm": _cmd_ess_norm,
    "compact-check": _cmd_compact_check,
    "conjugate": _cmd_conjugate,
    "factorize-check": _cmd_factorize_check,
    "lemma-r": _cmd_lemma_r,
    "verify-paper": _cmd_verify_paper,
}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="kothe",
        description="Norms, multipliers and essential norms for Köthe "
                    "sequence spaces.")
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("--config", required=True, help="JSON job config")
    parser.add_argument("--out", default=None, help="output directory")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--format", choices=("table", "csv"), default="table")
    args = parser.parse_args(argv)

    try:
        cfg = json.loads(Path(args.config).read_text(encoding="utf-8"))
        if cfg.get("command", args.command) != args.command:
            raise DescriptorError("config command does not match the "
                                  "command-line command")
        seed = args.seed if args.seed is not None else int(cfg.get("seed", 0))
        handler = _COMMANDS[args.command]
    except (OSError, json.JSONDecodeError, DescriptorError, KeyError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2

    try:
        report, ok = handler(cfg, seed)
    except DescriptorError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 2
    except KotheError as exc:
        print(f"computational error [{type(exc).__name__}]: {exc}",
              file=sys.stderr)
        return 3

    if args.format == "csv" or cfg.get("output", {}).get("format") == "csv":
        outdir = Path(args.out or cfg.get("output", {}).get("path") or ".")
        outdir.mkdir(parents=True, exist_ok=True)
        target = outdir / f"{args.command}.csv"
        target.write_text(report.csv(), encoding="utf-8", newline="\n")
        print(f"wrote {target}")
    else:
        print(report.table())
        if args.out:
            outdir = Path(args.out)
            outdir.mkdir(parents=True, exist_ok=True)
            (outdir / f"{args.command}.txt").write_text(
                report.table() + "\n", encoding="utf-8", newline="\n")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
