"""Command-line front end: point evaluation, sweeps, transitions, rings, bounds.

Exit codes: 0 success, 2 invalid input, 3 numerical failure, 4 no root.
All floats are emitted with 12 significant digits for byte-stable output.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .errors import InvalidInput, NoRoot, NumericalFailure
from .charge import Ket, OrthogonalPureEnsemble, charge_bounds, classify
from .ring import RingModel, ring_pair_charge, ring_sweep
from .thermal import (
    ModelKind,
    ThermalPoint,
    XYZCouplings,
    find_transition,
    sweep,
    thermal_point,
    thermal_point_general,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NUMERICAL = 3
EXIT_NO_ROOT = 4

SWEEP_HEADER = "ratio,p1,p2,p3,p4,entropy_bits,charge,concurrence"
RING_HEADER = ("beta_j,p_triplet,p_singlet,entropy_bits,charge,concurrence,"
               "bell_offdiag_residual,triplet_spread,translation_residual")


def _fmt(x: float) -> str:
    return f"{float(x):.12g}"


def _jnum(x: float) -> float:
    return float(_fmt(x))


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _sweep_row(pt: ThermalPoint) -> str:
    cols = [pt.ratio, *pt.probs, pt.entropy, pt.charge, pt.concurrence]
    return ",".join(_fmt(c) for c in cols)


def _point_payload(pt: ThermalPoint) -> dict:
    return {
        "ratio": _jnum(pt.ratio),
        "p1": _jnum(pt.probs[0]),
        "p2": _jnum(pt.probs[1]),
        "p3": _jnum(pt.probs[2]),
        "p4": _jnum(pt.probs[3]),
        "entropy_bits": _jnum(pt.entropy),
        "charge": _jnum(pt.charge),
        "concurrence": _jnum(pt.concurrence),
        "class": classify(pt.charge).value,
    }


def _resolve_point(args) -> ThermalPoint:
    kind = ModelKind(args.model)
    if kind is ModelKind.XYZ:
        for flag in ("j1", "j2", "j3", "beta"):
            if getattr(args, flag, None) is None:
                raise InvalidInput(f"--{flag} is required for model xyz")
        return thermal_point_general(XYZCouplings(args.j1, args.j2, args.j3), args.beta)
    if args.ratio is None:
        raise InvalidInput("--ratio is required")
    return thermal_point(kind, args.ratio)


def cmd_point(args) -> int:
    print(json.dumps(_point_payload(_resolve_point(args))))
    return EXIT_OK


def cmd_sweep(args) -> int:
    kind = ModelKind(args.model)
    if kind is ModelKind.XYZ:
        raise InvalidInput("sweep supports the single-ratio models ising|xx|heisenberg")
    rows = sweep(kind, args.ratio_from, args.ratio_to, args.steps)
    text = SWEEP_HEADER + "\n" + "".join(_sweep_row(r) + "\n" for r in rows)
    _write_text(args.out, text)
    return EXIT_OK


def cmd_transition(args) -> int:
    kind = ModelKind(args.model)
    if kind is ModelKind.XYZ:
        raise InvalidInput("transition supports the single-ratio models ising|xx|heisenberg")
    root, iterations = find_transition(kind, args.quantity, args.bracket)
    print(json.dumps({"quantity": args.quantity, "root": _jnum(root),
                      "iterations": iterations}))
    return EXIT_OK


def _ring_row(r) -> str:
    cols = [r.beta_j, r.p_triplet, r.p_singlet, r.entropy, r.charge,
            r.concurrence, r.bell_offdiag_residual, r.triplet_spread,
            r.translation_residual]
    return ",".join(_fmt(c) for c in cols)


def cmd_ring(args) -> int:
    if args.beta_j is not None:
        rows = [ring_pair_charge(RingModel(args.sites, args.beta_j))]
    else:
        if args.beta_from is None or args.beta_to is None:
            raise InvalidInput("ring needs either --beta-j or --from/--to/--steps")
        RingModel(args.sites, args.beta_from)  # validate sites before sweeping
        rows = ring_sweep(args.sites, args.beta_from, args.beta_to, args.steps)
    text = RING_HEADER + "\n" + "".join(_ring_row(r) + "\n" for r in rows)
    _write_text(args.out, text)
    return EXIT_OK


def load_ensemble(path: str) -> OrthogonalPureEnsemble:
    """Parse the ensemble JSON schema: dims [dA, dB], members with [re, im] pairs."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise InvalidInput(f"cannot read ensemble JSON: {e}") from e
    try:
        d_a, d_b = (int(d) for d in data["dims"])
        members = []
        for m in data["members"]:
            amps = np.array([complex(re, im) for re, im in m["amplitudes"]])
            members.append((float(m["prob"]), Ket(amps, (d_a, d_b))))
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidInput(f"malformed ensemble JSON: {e}") from e
    return OrthogonalPureEnsemble(tuple(members), (d_a, d_b))


def cmd_bounds(args) -> int:
    ens = load_ensemble(args.input)
    b = charge_bounds(ens)
    value = b.exact if b.exact is not None else b.interval
    print(json.dumps({
        "upper_ab": _jnum(b.upper_ab),
        "upper_ba": _jnum(b.upper_ba),
        "lower": _jnum(b.lower),
        "exact": None if b.exact is None else _jnum(b.exact),
        "class": classify(value).value,
    }))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entcharge",
        description="Entanglement charge of thermal states and ensembles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_model(p):
        p.add_argument("--model", required=True,
                       choices=[k.value for k in ModelKind])

    p = sub.add_parser("point", help="evaluate one thermal point as JSON")
    add_model(p)
    p.add_argument("--ratio", type=float)
    p.add_argument("--j1", type=float)
    p.add_argument("--j2", type=float)
    p.add_argument("--j3", type=float)
    p.add_argument("--beta", type=float)
    p.set_defaults(func=cmd_point)

    p = sub.add_parser("sweep", help="write a CSV grid of thermal points")
    add_model(p)
    p.add_argument("--from", dest="ratio_from", type=float, required=True)
    p.add_argument("--to", dest="ratio_to", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out", default="-", help="output path, or - for stdout")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("transition", help="bisect a charge or concurrence zero")
    add_model(p)
    p.add_argument("--quantity", required=True,
                   choices=["charge-zero", "concurrence-zero"])
    p.add_argument("--bracket", type=float, nargs=2, required=True)
    p.set_defaults(func=cmd_transition)

    p = sub.add_parser("ring", help="adjacent-pair analysis of a Heisenberg ring")
    p.add_argument("--sites", type=int, required=True)
    p.add_argument("--beta-j", dest="beta_j", type=float)
    p.add_argument("--from", dest="beta_from", type=float)
    p.add_argument("--to", dest="beta_to", type=float)
    p.add_argument("--steps", type=int, default=51)
    p.add_argument("--out", default="-", help="output path, or - for stdout")
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("bounds", help="charge bounds of an ensemble JSON file")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_bounds)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID if e.code else EXIT_OK
    try:
        return args.func(args)
    except InvalidInput as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except NumericalFailure as e:
        print(f"numerical failure: {e}", file=sys.stderr)
        return EXIT_NUMERICAL
    except NoRoot as e:
        print(f"no root: {e}", file=sys.stderr)
        return EXIT_NO_ROOT


if __name__ == "__main__":
    sys.exit(main())
