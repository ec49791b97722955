"""Command-line front end: ``udlax {classify,spectrum,undress,verify,simulate} FILE``.

Exit codes: 0 success, 1 verification failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .bbs import evolve, render_timeline
from .constraints import compute_mu, full_system_check
from .lax import (
    Potential,
    build_matrix,
    classify_case,
    compute_k,
    detect_solitons,
    fundamental_column,
    fundamental_pair,
)
from .maxplus import critical_graph, format_scalar, scalar
from .undress import undress, undress_closed_form


class InputError(Exception):
    """Bad input file or option; maps to exit code 2."""


@dataclass
class RunConfig:
    subcommand: str
    input_path: str
    matrix: str = "gamma"
    soliton: Optional[int] = None
    mu: Optional[Fraction] = None
    steps: int = 0
    fmt: str = "json"
    report: bool = False


def load_potential(path: str) -> Potential:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        return Potential.from_json(json.loads(text))
    except (OSError, ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"cannot read potential from {path}: {exc}") from exc


def _pick(U: Potential, idx: Optional[int]):
    sols = detect_solitons(U)
    if idx is None or not 0 <= idx < len(sols):
        raise InputError(f"soliton index {idx} out of range; {len(sols)} soliton(s) detected")
    return sols[idx]


def cmd_classify(cfg: RunConfig, U: Potential) -> tuple:
    tag = classify_case(U)
    return 0, {
        "case": tag.case.value,
        "v_sup": str(tag.v_sup),
        "k": str(compute_k(U)),
        "solitons": [s.to_json() for s in detect_solitons(U)],
    }


def cmd_spectrum(cfg: RunConfig, U: Potential) -> tuple:
    k = compute_k(U)
    lo, hi = U.window
    crit = critical_graph(build_matrix(U, cfg.matrix, k, lo, hi))
    comps = [sorted(c) for c in crit.components]
    vecs = []
    if crit.lam == 0:
        for c in comps:
            vecs.append({"column": c[0], **fundamental_column(U, cfg.matrix, c[0], k).to_json()})
    return 0, {
        "matrix": cfg.matrix,
        "k": str(k),
        "lambda": format_scalar(crit.lam),
        "window": [lo, hi],
        "components": comps,
        "eigenvectors": vecs,
    }


def cmd_undress(cfg: RunConfig, U: Potential) -> tuple:
    sol = _pick(U, cfg.soliton)
    out = undress(U, sol)
    if not cfg.report:
        return 0, out.to_json()
    return 0, {
        "soliton": sol.to_json(),
        "potential": out.to_json(),
        "crosscheck": out == undress_closed_form(U, sol),
        "solitons_after": [s.to_json() for s in detect_solitons(out)],
    }


def cmd_verify(cfg: RunConfig, U: Potential) -> tuple:
    sol = _pick(U, cfg.soliton)
    k = compute_k(U)
    mu = compute_mu(U, sol) if cfg.mu is None else cfg.mu
    if mu < 0:
        raise InputError("mu must be nonnegative")
    phi1, phi2 = fundamental_pair(U, sol, k)
    rep = full_system_check(U, phi1, phi2, k, mu)
    return (0 if rep.ok else 1), {"soliton": sol.to_json(), **rep.to_json()}


def cmd_simulate(cfg: RunConfig, U: Potential) -> tuple:
    if cfg.steps < 0:
        raise InputError("--steps must be nonnegative")
    states = evolve(U, cfg.steps)
    if cfg.fmt == "ascii":
        return 0, render_timeline(states)
    return 0, {"steps": cfg.steps, "states": [s.to_json() for s in states]}


COMMANDS = {
    "classify": cmd_classify,
    "spectrum": cmd_spectrum,
    "undress": cmd_undress,
    "verify": cmd_verify,
    "simulate": cmd_simulate,
}


def _mu_arg(text: str) -> Fraction:
    try:
        v = scalar(text)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    if not isinstance(v, Fraction):
        raise argparse.ArgumentTypeError("mu must be finite")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="udlax", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="subcommand", required=True)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("input_path", metavar="FILE", help="potential JSON ('-' for stdin)")
        return sp

    add("classify", "case, v_sup, k and solitons")
    sp = add("spectrum", "cycle mean, critical components and fundamental eigenvectors")
    sp.add_argument("--matrix", choices=("gamma", "delta"), default="gamma")
    sp = add("undress", "remove one soliton with its fundamental pair")
    sp.add_argument("--soliton", type=int, required=True, help="index into the detected soliton list")
    sp.add_argument("--report", action="store_true", help="wrap output with cross-check and new solitons")
    sp = add("verify", "check the full four-equation system for one soliton's pair")
    sp.add_argument("--soliton", type=int, required=True)
    sp.add_argument("--mu", type=_mu_arg, default=None, help="override mu (default: computed)")
    sp = add("simulate", "box-ball time evolution")
    sp.add_argument("--steps", type=int, required=True)
    sp.add_argument("--format", dest="fmt", choices=("ascii", "json"), default="json")
    return p


def parse_config(argv=None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(**vars(ns))


def main(argv=None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            U = load_potential(cfg.input_path)
            code, payload = COMMANDS[cfg.subcommand](cfg, U)
        for msg in dict.fromkeys(str(w.message) for w in caught):
            print(f"warning: {msg}", file=sys.stderr)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if isinstance(payload, str):
        sys.stdout.write(payload)
    else:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
