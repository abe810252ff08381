"""Command-line entry point.

Every subcommand prints one JSON object on stdout. Ideal files are JSON
objects ``{"vars": [...], "gens": [...], "order": "grevlex"}`` with
generators written in the polynomial grammar.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .core import core_of_maximal_ideal
from .graded import hilbert, length_artinian, multiplicity, socle
from .ideal import Ideal
from .polynomial import (
    MonomialOrder,
    PolynomialSyntaxError,
    RingContext,
    UnknownVariableError,
    format_polynomial,
)
from .verify import CampaignParams, instance_from_ideal, run_campaign, verify_instance


def load_ideal_file(path: str | Path) -> tuple[RingContext, list, MonomialOrder | None]:
    """Read an ideal file; generators keep their order and are not deduplicated."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, dict) or "vars" not in data or "gens" not in data:
        raise ValueError(f"{path}: expected an object with 'vars' and 'gens'")
    ctx = RingContext.of(data["vars"])
    gens = [ctx.parse(g) for g in data["gens"]]
    order = MonomialOrder.parse(data["order"]) if data.get("order") else None
    return ctx, gens, order


def _ideal(args) -> tuple[Ideal, MonomialOrder | None]:
    ctx, gens, order = load_ideal_file(args.file)
    return Ideal(ctx, gens), order


def cmd_gb(args) -> int:
    ideal, order = _ideal(args)
    if args.order:
        order = MonomialOrder.parse(args.order)
    gb = ideal.groebner_basis(order or MonomialOrder("grevlex"))
    basis = [format_polynomial(p, gb.order) for p in gb.elements]
    print(json.dumps({"order": str(gb.order), "basis": basis}))
    return 0


def cmd_hilbert(args) -> int:
    ideal, _ = _ideal(args)
    h = hilbert(ideal)
    print(json.dumps({"numerator": list(h.numerator), "dim": h.dim,
                      "multiplicity": h.multiplicity}))
    return 0


def cmd_mult(args) -> int:
    ideal, _ = _ideal(args)
    print(json.dumps({"multiplicity": multiplicity(ideal)}))
    return 0


def cmd_length(args) -> int:
    ideal, _ = _ideal(args)
    print(json.dumps({"length": length_artinian(ideal)}))
    return 0


def cmd_socle(args) -> int:
    ideal, _ = _ideal(args)
    s = socle(ideal)
    print(json.dumps({"dimension": s.dimension,
                      "by_degree": {str(d): k for d, k in sorted(s.by_degree.items())},
                      "generators": [str(p) for p in s.generators]}))
    return 0


def cmd_core(args) -> int:
    ctx, gens, _ = load_ideal_file(args.file)
    res = core_of_maximal_ideal(gens, seed=args.seed)
    print(json.dumps({"r": res.r, "ell": [str(p) for p in res.ell],
                      "core": [str(p) for p in res.core.groebner_basis().elements],
                      "matches_lemma": res.matches_lemma}))
    return 0 if res.matches_lemma else 1


def cmd_verify(args) -> int:
    ctx, gens, _ = load_ideal_file(args.file)
    k = args.dlast_index
    if not 1 <= k <= len(gens):
        raise ValueError(f"--dlast-index must be between 1 and {len(gens)}")
    inst = instance_from_ideal(Ideal(ctx, gens), last_index=k - 1, seed=args.seed)
    rep = verify_instance(inst, with_koszul=args.koszul)
    out = {key: getattr(rep, key) for key in (
        "n", "N", "d_last", "r", "e_RI", "e_Rf", "lambda_Il", "lambda_fl", "bound",
        "bound_gap", "core_lemma_ok", "red_num_ok", "chain_ok", "chain_strict", "hf_drop_ok", "serre_ok",
        "bound_ok", "core_gate_ok", "socle_ok", "chi", "chi1")}
    out["degrees"] = list(rep.degrees)
    out["instance"] = rep.instance
    print(json.dumps(out))
    return 0 if rep.all_ok else 1


def _degrees(text: str) -> tuple[int, ...]:
    try:
        degrees = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad degree list {text!r}") from None
    if not degrees or any(d < 1 for d in degrees):
        raise argparse.ArgumentTypeError("degrees must be positive integers")
    return degrees


def cmd_campaign(args) -> int:
    seed = args.seed if args.seed is not None else int(os.environ.get("ACI_SEED", "0"))
    params = CampaignParams(n=args.n, degrees=args.degrees, d_last=args.dlast,
                            trials=args.trials, base_seed=seed, koszul_first=args.koszul_first)
    summary = run_campaign(params, args.out, workers=args.workers, stream=sys.stdout)
    return 0 if summary.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aciverify",
        description="Exact verification of multiplicity bounds for almost complete intersections.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", help="reduced Groebner basis")
    p.add_argument("file")
    p.add_argument("--order", choices=["grevlex", "lex"])
    p.set_defaults(func=cmd_gb)

    for name, func, text in (("hilbert", cmd_hilbert, "Hilbert series numerator and dimension"),
                             ("mult", cmd_mult, "multiplicity of R/I"),
                             ("length", cmd_length, "length of an Artinian R/I"),
                             ("socle", cmd_socle, "socle of an Artinian R/I")):
        p = sub.add_parser(name, help=text)
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("core", help="core of m modulo a regular sequence")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("verify", help="verify one almost complete intersection")
    p.add_argument("file")
    p.add_argument("--dlast-index", type=int, required=True,
                   help="1-based position of the extra generator in the file")
    p.add_argument("--seed", type=int, default=0, help="seed for the linear forms")
    p.add_argument("--koszul", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("campaign", help="seeded verification campaign")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degrees", type=_degrees, required=True)
    p.add_argument("--dlast", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=None, help="base seed (default $ACI_SEED or 0)")
    p.add_argument("--koszul-first", type=int, default=5)
    p.add_argument("--workers", type=int, default=None, help="default $ACI_WORKERS or CPU count")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_campaign)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, PolynomialSyntaxError, UnknownVariableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
