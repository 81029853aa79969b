"""Command-line surface: pair, unpair, encode, permute, curve, selftest.

Exit codes: 0 on success, 1 when selftest finds an invariant violation,
2 on usage, input, or fuel errors.
"""

import argparse
import os
import sys
from pathlib import Path

from . import charpair, encoders, nadic, streams
from .errors import FuelExhausted, PairbijError, UnknownPreset

FUEL_ENV = "PAIRBIJ_FUEL"

_PLAIN_PRESETS = ("morton", "squares", "powers2", "syracuse", "bits-of-naturals")


def _parse_nat(text: str, what: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise PairbijError(f"{what} must be a natural number, got {text!r}") from None
    if n < 0:
        raise PairbijError(f"{what} must be non-negative, got {n}")
    return n


def _base_family(spec: str, fuel_budget: int) -> charpair.PairingFamily:
    if spec.startswith("nadic:"):
        b = _parse_nat(spec.split(":", 1)[1], "valuation base")
        nadic.decons(b, 1)  # fail early on b < 2
        return charpair.PairingFamily(
            spec, lambda x, y: nadic.pair(b, x, y), lambda n: nadic.unpair(b, n)
        )
    if spec == "cantor":
        return charpair.cantor_family()
    if spec.startswith("arith-set:"):
        k = _parse_nat(spec.split(":", 1)[1], "arith-set step")
        return charpair.preset_family("arith-set", k, fuel_budget)
    if spec.startswith("seed-file:"):
        rest = spec[len("seed-file:"):]
        if ":" in rest:
            path, enc = rest.rsplit(":", 1)
        else:
            path, enc = rest, "bins"
        return charpair.family_from_seed(charpair.seed_from_file(path, enc), fuel_budget)
    if spec in _PLAIN_PRESETS:
        return charpair.preset_family(spec, fuel_budget=fuel_budget)
    raise UnknownPreset(f"unknown family spec {spec!r}")


def parse_family(spec: str, fuel_budget: int) -> charpair.PairingFamily:
    """Parse a family spec, e.g. 'morton', 'nadic:3', 'arith-set:2,xor:7'."""
    head, *mods = spec.split(",")
    fam = _base_family(head, fuel_budget)
    for mod in mods:
        if mod.startswith("xor:"):
            fam = charpair.twist_family(fam, _parse_nat(mod[4:], "xor mask"))
        else:
            raise PairbijError(f"unknown family modifier {mod!r}")
    return fam


def _parse_literal(text: str):
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise PairbijError(f"unterminated list literal: {text!r}")
        inner = text[1:-1].strip()
        if not inner:
            return []
        return [_parse_nat(tok.strip(), "list element") for tok in inner.split(",")]
    return _parse_nat(text, "value")


def _takes_int(encoder_name: str) -> bool:
    return encoder_name in ("nat", "nat-prime") or encoder_name.startswith("nadic:")


def _format_value(v) -> str:
    if isinstance(v, int):
        return str(v)
    return "[" + ",".join(str(x) for x in v) + "]"


def _cmd_pair(args) -> int:
    fam = parse_family(args.family, args.fuel_budget)
    x = _parse_nat(args.x, "x")
    y = _parse_nat(args.y, "y")
    print(fam.pair(x, y))
    return 0


def _cmd_unpair(args) -> int:
    fam = parse_family(args.family, args.fuel_budget)
    n = _parse_nat(args.n, "n")
    x, y = fam.unpair(n)
    print(f"{x} {y}")
    return 0


def _cmd_encode(args) -> int:
    source = encoders.by_name(args.source)
    target = encoders.by_name(args.target)
    value = _parse_literal(args.value)
    if _takes_int(source.name) != isinstance(value, int):
        kind = "a natural number" if _takes_int(source.name) else "a [..] list literal"
        raise PairbijError(f"encoder {source.name!r} expects {kind}")
    result = encoders.as_(target, source, value)
    if not isinstance(result, int):
        result = list(result)
    print(_format_value(result))
    return 0


def _cmd_permute(args) -> int:
    nadic.decons(args.k, 1)
    nadic.decons(args.l, 1)
    for n in range(args.upto + 1):
        print(f"{n} {nadic.bij(args.k, args.l, n)}")
    return 0


def _curve_points(fam: charpair.PairingFamily, count: int) -> list[tuple[int, int, int]]:
    points = []
    for n in range(count + 1):
        try:
            x, y = fam.unpair(n)
        except FuelExhausted as e:
            raise PairbijError(f"unpair diverged at n={n}: {e}") from None
        points.append((n, x, y))
    return points


def _render_csv(points) -> str:
    lines = ["n,x,y"]
    lines.extend(f"{n},{x},{y}" for n, x, y in points)
    return "\n".join(lines) + "\n"


def _render_svg(points) -> str:
    span = max(max(x for _, x, _ in points), max(y for _, _, y in points), 1)
    scale = 980 / span
    coords = " ".join(f"{10 + x * scale:.2f},{10 + y * scale:.2f}" for _, x, y in points)
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1000 1000">\n'
        f'  <polyline fill="none" stroke="black" stroke-width="1" points="{coords}"/>\n'
        "</svg>\n"
    )


def _cmd_curve(args) -> int:
    fam = parse_family(args.family, args.fuel_budget)
    points = _curve_points(fam, args.count)
    text = _render_csv(points) if args.format == "csv" else _render_svg(points)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


# -- selftest -----------------------------------------------------------------------

def _interleave_bits(x: int, y: int) -> int:
    out = 0
    shift = 0
    while x or y:
        out |= (x & 1) << shift
        x >>= 1
        out |= (y & 1) << (shift + 1)
        y >>= 1
        shift += 2
    return out


def _check_nadic_golden(rng: int):
    if nadic.cons(3, 10, 20) != 1830519:
        return f"cons(3,10,20) = {nadic.cons(3, 10, 20)}"
    if nadic.decons(3, 1830519) != (10, 20):
        return f"decons(3,1830519) = {nadic.decons(3, 1830519)}"
    got = [nadic.unpair(3, n) for n in range(8)]
    want = [(0, 0), (0, 1), (1, 0), (0, 2), (0, 3), (1, 1), (0, 4), (0, 5)]
    if got != want:
        return f"unpair(3,.) over [0..7] = {got}"
    if nadic.nat_to_nats(3, 2012) != [0, 2, 2, 0, 0, 0, 0]:
        return f"nat_to_nats(3,2012) = {nadic.nat_to_nats(3, 2012)}"
    return None


def _check_nadic_roundtrips(rng: int):
    for b in (2, 3, 7, 16):
        for n in range(rng + 1):
            if nadic.pair(b, *nadic.unpair(b, n)) != n:
                return f"pair/unpair broke at b={b}, n={n}"
            if nadic.nats_to_nat(b, nadic.nat_to_nats(b, n)) != n:
                return f"nats roundtrip broke at b={b}, n={n}"
    return None


def _check_bij_law(rng: int):
    upto = min(rng, 200)
    for k in range(2, 6):
        for l in range(2, 6):
            for n in range(upto + 1):
                if nadic.bij(l, k, nadic.bij(k, l, n)) != n:
                    return f"bij law broke at k={k}, l={l}, n={n}"
    return None


def _check_encoder_laws(rng: int):
    upto = min(rng, 300)
    for n in range(upto + 1):
        xs = nadic.nat_to_nats(2, n)
        if list(encoders.as_(encoders.LIST, encoders.LIST, xs)) != xs:
            return f"list self-routing broke at {xs}"
        ms = list(encoders.list_to_mset(xs))
        if list(encoders.mset_to_list(ms)) != xs:
            return f"mset roundtrip broke at {xs}"
        st = list(encoders.list_to_set(xs))
        if list(encoders.set_to_list(st)) != xs:
            return f"set roundtrip broke at {xs}"
        bs = list(encoders.list_to_bins(xs))
        if list(encoders.bins_to_list(bs)) != xs:
            return f"bins roundtrip broke at {xs}"
    if list(encoders.list_to_bins([])) != [0]:
        return "list_to_bins([]) is not [0]"
    return None


def _check_morton_table(rng: int):
    fam = charpair.preset_family("morton")
    want = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (3, 0), (2, 1), (3, 1), (0, 2), (1, 2), (0, 3)]
    got = [fam.unpair(n) for n in range(11)]
    if got != want:
        return f"morton unpair over [0..10] = {got}"
    if [fam.pair(x, y) for x, y in got] != list(range(11)):
        return "morton pair does not invert the table"
    bfam = charpair.preset_family("arith-set", 2)
    if [bfam.unpair(n) for n in range(11)] != want:
        return "arith-set:2 disagrees with morton"
    return None


def _check_preset_roundtrips(rng: int):
    upto = min(rng, 200)
    fams = [
        charpair.preset_family("morton"),
        charpair.preset_family("arith-set", 3),
        charpair.preset_family("squares"),
        charpair.preset_family("powers2"),
        charpair.preset_family("syracuse"),
        charpair.preset_family("bits-of-naturals"),
    ]
    for fam in fams:
        seen = {}
        for n in range(upto + 1):
            p = fam.unpair(n)
            if fam.pair(*p) != n:
                return f"{fam.name}: pair(unpair({n})) != {n}"
            if p in seen:
                return f"{fam.name}: unpair not injective at {n} vs {seen[p]}"
            seen[p] = n
    return None


def _check_morton_interleave(rng: int):
    fam = charpair.preset_family("morton")
    for x in range(32):
        for y in range(32):
            if fam.pair(x, y) != _interleave_bits(x, y):
                return f"morton pair({x},{y}) != bit interleave"
    return None


def _check_cantor(rng: int):
    for n in range(min(rng, 2000) + 1):
        if charpair.cantor_pair(*charpair.cantor_unpair(n)) != n:
            return f"cantor roundtrip broke at {n}"
    return None


def _check_divergence(rng: int):
    probe = streams.Fuel(20_000, label="divergence probe")
    zero_seed = charpair.SeedSpec(encoders.BINS, streams.cycle([0]), "cycle [0]")
    try:
        charpair.generic_pair(zero_seed, 10, 20, probe)
        return "pair over the all-zero seed terminated"
    except FuelExhausted:
        pass
    probe = streams.Fuel(20_000, label="divergence probe")
    one_seed = charpair.SeedSpec(encoders.BINS, streams.cycle([1]), "cycle [1]")
    try:
        charpair.generic_unpair(one_seed, 42, probe)
        return "unpair over the all-one seed terminated"
    except FuelExhausted:
        pass
    return None


_SELFTESTS = [
    ("nadic golden values", _check_nadic_golden),
    ("nadic roundtrips", _check_nadic_roundtrips),
    ("permutation composition law", _check_bij_law),
    ("encoder laws", _check_encoder_laws),
    ("morton golden table", _check_morton_table),
    ("preset roundtrips", _check_preset_roundtrips),
    ("morton vs bit interleave", _check_morton_interleave),
    ("cantor oracle", _check_cantor),
    ("divergence detection", _check_divergence),
]


def _cmd_selftest(args) -> int:
    rng = args.range
    failures = 0
    for name, check in _SELFTESTS:
        try:
            detail = check(rng)
        except PairbijError as e:
            detail = str(e)
        if detail is None:
            print(f"PASS {name}")
        else:
            failures += 1
            print(f"FAIL {name}: {detail}")
    return 1 if failures else 0


# -- entry point ----------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pairbij",
        description="Pairing bijections N^2 <-> N, invertible encoders, and curve export.",
    )
    parser.add_argument(
        "--fuel", type=int, default=None,
        help=f"stream pulls allowed per operation (default {streams.DEFAULT_FUEL}, "
             f"or the {FUEL_ENV} environment variable)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pair", help="pair two naturals under a family")
    p.add_argument("family")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(handler=_cmd_pair)

    p = sub.add_parser("unpair", help="unpair a natural under a family")
    p.add_argument("family")
    p.add_argument("n")
    p.set_defaults(handler=_cmd_unpair)

    p = sub.add_parser("encode", help="route a value between encoders")
    p.add_argument("--from", dest="source", required=True, metavar="ENCODER")
    p.add_argument("--to", dest="target", required=True, metavar="ENCODER")
    p.add_argument("value")
    p.set_defaults(handler=_cmd_encode)

    p = sub.add_parser("permute", help="print the base-change permutation table")
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.add_argument("upto", type=int)
    p.set_defaults(handler=_cmd_permute)

    p = sub.add_parser("curve", help="export the unpairing path of 0..count")
    p.add_argument("family")
    p.add_argument("count", type=int)
    p.add_argument("format", choices=("csv", "svg"))
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.set_defaults(handler=_cmd_curve)

    p = sub.add_parser("selftest", help="run the invariant suites")
    p.add_argument("--range", type=int, default=1000, help="sample range for the sweeps")
    p.set_defaults(handler=_cmd_selftest)

    return parser


def _resolve_fuel(args) -> int:
    budget = args.fuel
    if budget is None:
        env = os.environ.get(FUEL_ENV)
        if env is not None:
            try:
                budget = int(env)
            except ValueError:
                raise PairbijError(f"{FUEL_ENV} must be an integer, got {env!r}") from None
        else:
            budget = streams.DEFAULT_FUEL
    if budget <= 0:
        raise PairbijError(f"fuel budget must be positive, got {budget}")
    return budget


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        args.fuel_budget = _resolve_fuel(args)
        return args.handler(args)
    except PairbijError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
