"""Command-line front end: ``qcurv verify | series | multiplicities | qtable``."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import checks
from .compositions import enumerate_compositions, multiplicity, multiplicity_sum
from .errors import QCurvError
from .exact_arith import fmt_rational, parse_rational
from .model import make_model
from .qres import critical_q, holographic
from .families import q_curvature

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    ns: list = field(default_factory=list)
    Js: list = field(default_factory=list)
    mus: list = field(default_factory=list)
    max_order: int = 4
    checks: Optional[list] = None
    format: str = "text"
    parallel: bool = False
    order: int = 4
    N: Optional[int] = None

    @property
    def models(self):
        return list(zip(self.ns, self.Js))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qcurv", description="Exact Q-curvature and GJMS identities on Einstein models.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run the identity checks on a parameter grid")
    v.add_argument("--n", type=int, action="append", default=[])
    v.add_argument("--J", type=_rational, action="append", default=[])
    v.add_argument("--mu", type=_rational, action="append", default=[])
    v.add_argument("--checks", default=None, help="comma separated ids, e.g. C01,C19")
    v.add_argument("--max-order", type=int, default=4, dest="max_order")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--parallel", action="store_true")

    s = sub.add_parser("series", help="holographic coefficients v_2j and w_2j")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--J", type=_rational, required=True)
    s.add_argument("--order", type=int, default=4)

    m = sub.add_parser("multiplicities", help="multiplicities m_I for |I| = N")
    m.add_argument("--N", type=int, required=True)
    m.add_argument("--format", choices=("text", "json"), default="text")

    q = sub.add_parser("qtable", help="Q-curvatures and w_8 of a model")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--J", type=_rational, required=True)
    return p


def _check_n(n: int):
    if n < 6 or n % 2:
        raise UsageError(f"--n: need an even dimension >= 6, got {n}")


def parse_args(argv) -> CliConfig:
    ns = _parser().parse_args(argv)
    cfg = CliConfig(command=ns.command)
    if ns.command == "verify":
        if len(ns.n) != len(ns.J):
            raise UsageError(f"--n/--J: got {len(ns.n)} dimensions and {len(ns.J)} J values")
        for n in ns.n:
            _check_n(n)
        for mu in ns.mu:
            if mu < 0:
                raise UsageError(f"--mu: eigen parameter must be >= 0, got {mu}")
        if ns.max_order < 1:
            raise UsageError("--max-order: must be >= 1")
        cfg.ns, cfg.Js, cfg.mus = list(ns.n), list(ns.J), list(ns.mu)
        cfg.max_order, cfg.format, cfg.parallel = ns.max_order, ns.format, ns.parallel
        if ns.checks is not None:
            ids = [c.strip().upper() for c in ns.checks.split(",") if c.strip()]
            unknown = [c for c in ids if c not in checks.REGISTRY]
            if not ids or unknown:
                raise UsageError(f"--checks: unknown id(s) {', '.join(unknown) or '(empty)'}")
            cfg.checks = ids
    elif ns.command in ("series", "qtable"):
        _check_n(ns.n)
        cfg.ns, cfg.Js = [ns.n], [ns.J]
        if ns.command == "series":
            if not 1 <= ns.order <= 8:
                raise UsageError("--order: must be between 1 and 8")
            cfg.order = ns.order
    else:
        if ns.N < 1:
            raise UsageError("--N: must be >= 1")
        cfg.N, cfg.format = ns.N, ns.format
    return cfg


# -- reports ---------------------------------------------------------------------

TEXT_COLUMNS = ("id", "n", "J", "mu", "status", "residual")


def render_text(report: checks.VerificationReport) -> str:
    lines = ["\t".join(TEXT_COLUMNS)]
    for r in report.results:
        d = r.to_json()
        p = d["params"]
        lines.append("\t".join([d["id"], str(p["n"]), p["J"], p["mu"], d["status"], d["residual"]]))
    s = report.summary
    lines.append("")
    lines.append("refs:")
    for cid in report.config["checks"]:
        lines.append(f"  {cid}: {checks.REGISTRY[cid].ref}")
    counts = ", ".join(f"{k}={v}" for k, v in s["counts"].items())
    lines.append(f"summary: total={s['total']} {counts} ok={s['ok']}")
    lines.append(
        f"mu sampling: {s['distinct_mu']} distinct values, degree bound {s['mu_degree_bound']}, "
        f"certified={s['mu_identities_certified']}"
    )
    return "\n".join(lines) + "\n"


def parse_text(text: str) -> list[dict]:
    """Rows of a text report as dicts shaped like the JSON check entries."""
    rows = []
    lines = text.splitlines()
    refs = {}
    for line in lines:
        if line.startswith("  C") and ": " in line:
            cid, ref = line.strip().split(": ", 1)
            refs[cid] = ref
    for line in lines[1:]:
        if not line:
            break
        cid, n, J, mu, status, residual = line.split("\t", 5)
        rows.append({
            "id": cid,
            "paper_ref": refs.get(cid),
            "params": {"n": int(n), "J": J, "mu": mu},
            "status": status,
            "residual": residual,
        })
    return rows


def _verify(cfg: CliConfig) -> int:
    models = cfg.models or list(checks.DEFAULT_MODELS)
    mus = cfg.mus or list(checks.DEFAULT_MUS)
    grid = [(n, Fraction(J), Fraction(mu)) for n, J in models for mu in mus]
    report = checks.run_suite(grid, cfg.checks, cfg.max_order, cfg.parallel)
    if cfg.format == "json":
        sys.stdout.write(json.dumps(report.to_json(), indent=2) + "\n")
    else:
        sys.stdout.write(render_text(report))
    return EXIT_OK if report.summary["ok"] else EXIT_FAIL


def _series(cfg: CliConfig) -> int:
    m = make_model(cfg.ns[0], cfg.Js[0])
    v, w = holographic(m, cfg.order)
    print(f"n = {m.n}, J = {fmt_rational(m.J)}")
    for j in range(cfg.order + 1):
        print(f"v{2 * j} = {fmt_rational(v[j])}\tw{2 * j} = {fmt_rational(w[j])}")
    return EXIT_OK


def multiplicity_rows(N: int) -> list[tuple[str, str]]:
    return [
        ("(" + ",".join(map(str, I)) + ")", fmt_rational(multiplicity(I)))
        for I in enumerate_compositions(N)
    ]


def _multiplicities(cfg: CliConfig) -> int:
    rows = multiplicity_rows(cfg.N)
    total = fmt_rational(multiplicity_sum(cfg.N))
    if cfg.format == "json":
        payload = {"N": cfg.N, "multiplicities": dict(rows), "sum": total}
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        for comp, value in rows:
            print(f"{comp} → {value}")
        print(f"sum = {total}")
    return EXIT_OK


def qtable_rows(n: int, J) -> list[tuple[str, str]]:
    m = make_model(n, J)
    rows = []
    for N in range(1, min(4, m.half) + 1):
        q = critical_q(m) if 2 * N == m.n else q_curvature(m, N)
        rows.append((f"Q{2 * N}", fmt_rational(q)))
    v, w = holographic(m, 4)
    rows += [("v8", fmt_rational(v[4])), ("w8", fmt_rational(w[4]))]
    return rows


def _qtable(cfg: CliConfig) -> int:
    for name, value in qtable_rows(cfg.ns[0], cfg.Js[0]):
        print(f"{name} = {value}")
    return EXIT_OK


_COMMANDS = {"verify": _verify, "series": _series, "multiplicities": _multiplicities, "qtable": _qtable}


def execute(cfg: CliConfig) -> int:
    return _COMMANDS[cfg.command](cfg)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_args(argv)
    except UsageError as exc:
        print(f"qcurv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return execute(cfg)
    except QCurvError as exc:
        print(f"qcurv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
