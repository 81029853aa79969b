"""Pairing bijections driven by the characteristic function of a subset of naturals.

A seed (any value convertible to an infinite bit sequence) acts as a guide:
to pair two naturals, their bit forms are interleaved under the guide, a one
drawing from the first and a zero from the second; to unpair, the bit form is
split the same way. Any seed whose guide keeps alternating between ones and
zeros in finite blocks yields a bijection; degenerate seeds make the process
diverge, which fuel turns into a FuelExhausted error instead of a hang.
"""

from collections import deque
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass
from math import isqrt
from pathlib import Path

from . import encoders, nadic, streams
from .errors import GuideExhausted, InvalidBit, UnknownPreset


def _nat_to_bits(n: int) -> list[int]:
    """The bit form of n: [0] for zero, else least-significant-first ending in 1."""
    return list(encoders.list_to_bins(nadic.nat_to_nats(2, n)))


def _bits_to_nat(bits: Iterable[int]) -> int:
    """Decode a bit sequence; an empty or all-zero sequence decodes to 0."""
    return nadic.nats_to_nat(2, encoders.bins_to_list(bits))


# -- guided splitting and merging ------------------------------------------------

class _Split:
    """Shared pump routing one source into two lazily consumed sides."""

    __slots__ = ("_guide", "_ns", "_sides", "_done", "_consumed")

    def __init__(self, guide: Iterable[int], ns: Iterable[int]):
        self._guide = iter(guide)
        self._ns = iter(ns)
        self._sides = (deque(), deque())
        self._done = False
        self._consumed = 0

    def _pump(self) -> None:
        # The source is examined before the guide, so an ended source closes
        # both sides even when the guide has nothing left to say.
        try:
            n = next(self._ns)
        except StopIteration:
            self._done = True
            return
        try:
            bit = next(self._guide)
        except StopIteration:
            raise GuideExhausted(
                f"split guide provides no guidance at element {n}"
                f" (position {self._consumed})"
            ) from None
        self._consumed += 1
        if bit == 1:
            self._sides[0].append(n)
        elif bit == 0:
            self._sides[1].append(n)
        else:
            raise InvalidBit(f"guide may only contain 0 and 1, got {bit!r}")

    def side(self, i: int) -> Iterator[int]:
        while True:
            while not self._sides[i]:
                if self._done:
                    return
                self._pump()
            yield self._sides[i].popleft()


def bsplit(guide: Iterable[int], ns: Iterable[int]) -> tuple[Iterator[int], Iterator[int]]:
    """Separate ns into (members, non-members): guide bit 1 routes to the first output.

    Both outputs preserve relative order and may be consumed lazily and
    independently. A guide that ends while elements remain raises
    GuideExhausted.
    """
    s = _Split(guide, ns)
    return s.side(0), s.side(1)


class _Peek:
    """Bounded lookahead over an iterator, with pushback for injected padding."""

    __slots__ = ("_it", "_buf")

    def __init__(self, xs: Iterable[int]):
        self._it = iter(xs)
        self._buf = deque()

    def has(self, k: int) -> bool:
        while len(self._buf) < k:
            try:
                self._buf.append(next(self._it))
            except StopIteration:
                return False
        return True

    def pop(self) -> int:
        self.has(1)
        return self._buf.popleft()

    def push(self, x: int) -> None:
        self._buf.appendleft(x)


def bmerge(guide: Iterable[int], xs: Iterable[int], ys: Iterable[int]) -> Iterator[int]:
    """Interleave xs and ys as directed by the guide: 1 pulls from xs, 0 from ys.

    The degenerate endings are matched in a fixed order that downstream
    results depend on, so it must not be rearranged:
      1. both sides empty          -> end
      2. xs empty, ys a singleton  -> emit it, end (guide not consulted)
      3. ys empty, xs a singleton  -> emit it, end (guide not consulted)
      4. xs empty, ys longer       -> refill xs with a zero and keep going
      5. ys empty, xs longer       -> refill ys with a zero and keep going
    Injected zeros may trail the output; the bit decoder discards them.
    """
    bits = iter(guide)
    a, b = _Peek(xs), _Peek(ys)
    used = 0
    while True:
        if not a.has(1) and not b.has(1):
            return
        if not a.has(1) and not b.has(2):
            yield b.pop()
            return
        if not b.has(1) and not a.has(2):
            yield a.pop()
            return
        if not a.has(1):
            a.push(0)
        elif not b.has(1):
            b.push(0)
        try:
            bit = next(bits)
        except StopIteration:
            raise GuideExhausted(
                f"merge guide ended after {used} bits with elements remaining"
            ) from None
        used += 1
        if bit == 1:
            yield a.pop()
        elif bit == 0:
            yield b.pop()
        else:
            raise InvalidBit(f"guide may only contain 0 and 1, got {bit!r}")


# -- seeds -----------------------------------------------------------------------

def _validated_bits(xs: Iterable[int]) -> Iterator[int]:
    for x in xs:
        if x not in (0, 1):
            raise InvalidBit(f"seed bit sequence may only contain 0 and 1, got {x!r}")
        yield x


@dataclass(frozen=True)
class SeedSpec:
    """A characteristic function given as a value under a named encoder.

    The payload is a restartable description (a Stream or any reiterable);
    every pair/unpair call resolves the guide afresh from position zero.
    """

    encoder: encoders.Encoder
    payload: object
    label: str

    def bits(self, fuel: streams.Fuel) -> Iterator[int]:
        """Instantiate the guide as a fuel-metered bit iterator.

        Payloads already in bit form are used directly: rebuilding them
        through the hub is the identity on well-formed infinite seeds and
        would silently drop the trailing zeros of a finite prefix.
        """
        src = iter(self.payload)
        if self.encoder.name == encoders.BINS.name:
            return fuel.meter(_validated_bits(src))
        return fuel.meter(encoders.list_to_bins(self.encoder.forward(src)))


def _fresh_fuel(seed: SeedSpec, fuel: streams.Fuel | None) -> streams.Fuel:
    if fuel is not None:
        return fuel
    return streams.Fuel(label=f"seed {seed.label}")


# -- the generic construction ------------------------------------------------------

def generic_pair(seed: SeedSpec, x: int, y: int, fuel: streams.Fuel | None = None) -> int:
    """Pair (x, y) under the seed's characteristic function.

    The bit form of x is written onto the guide's one-positions in order, the
    bit form of y onto its zero-positions, and positions whose side has no
    bits left carry zeros; the write stops once both forms are fully placed.
    Placement must respect positions even past the end of one side: emitting
    a leftover bit early would land it on the other side's positions and
    break invertibility whenever the guide has runs longer than one.

    Raises FuelExhausted if the seed starves one side (no finite blocks),
    GuideExhausted if a finite seed runs out.
    """
    fuel = _fresh_fuel(seed, fuel)
    xs = _nat_to_bits(x)
    ys = _nat_to_bits(y)
    ix = iy = 0
    merged: list[int] = []
    bits = seed.bits(fuel)
    while ix < len(xs) or iy < len(ys):
        try:
            bit = next(bits)
        except StopIteration:
            raise GuideExhausted(
                f"guide of seed {seed.label} ended at position {len(merged)}"
                f" with bits left to place"
            ) from None
        if bit == 1:
            if ix < len(xs):
                merged.append(xs[ix])
                ix += 1
            else:
                merged.append(0)
        else:
            if iy < len(ys):
                merged.append(ys[iy])
                iy += 1
            else:
                merged.append(0)
    return _bits_to_nat(merged)


def generic_unpair(seed: SeedSpec, n: int, fuel: streams.Fuel | None = None) -> tuple[int, int]:
    """Split n under the seed's characteristic function; inverse of generic_pair.

    The bit form of n is read as a prefix of an infinite sequence padded with
    zeros. Each output side collects the payload bits routed to it and is
    complete once the guide routes it a first beyond-payload bit -- so the
    guide must keep offering both ones and zeros, and a seed that never again
    yields one of them diverges (caught by fuel) exactly like the merge
    direction does.
    """
    fuel = _fresh_fuel(seed, fuel)
    payload = _nat_to_bits(n)
    length = len(payload)
    collected: tuple[list[int], list[int]] = ([], [])
    open_sides = [True, True]
    pos = 0
    for bit in seed.bits(fuel):
        side = 0 if bit == 1 else 1
        if pos < length:
            collected[side].append(payload[pos])
        elif open_sides[side]:
            open_sides[side] = False
            if not open_sides[1 - side]:
                return _bits_to_nat(collected[0]), _bits_to_nat(collected[1])
        pos += 1
    raise GuideExhausted(
        f"guide of seed {seed.label} ended at position {pos}"
        f" before both components were delimited"
    )


# -- named families ----------------------------------------------------------------

@dataclass(frozen=True)
class PairingFamily:
    """A named pair/unpair closure pair; mutually inverse wherever both terminate."""

    name: str
    pair: Callable[[int, int], int]
    unpair: Callable[[int], tuple[int, int]]
    fuel_budget: int = streams.DEFAULT_FUEL


def family_from_seed(seed: SeedSpec, fuel_budget: int = streams.DEFAULT_FUEL) -> PairingFamily:
    """Bundle the generic construction over one seed; each call gets fresh fuel."""

    def pair(x: int, y: int) -> int:
        return generic_pair(seed, x, y, streams.Fuel(fuel_budget, label=f"seed {seed.label}"))

    def unpair(n: int) -> tuple[int, int]:
        return generic_unpair(seed, n, streams.Fuel(fuel_budget, label=f"seed {seed.label}"))

    return PairingFamily(seed.label, pair, unpair, fuel_budget)


def syracuse(n: int) -> int:
    """The 2-adic tail of 6n + 4; iterating it to 0 restates the Collatz problem."""
    return nadic.tail(2, 6 * n + 4)


def nsyr(n: int, fuel: streams.Fuel | None = None) -> list[int]:
    """The syracuse trajectory from n down to and including 0, fuel-guarded."""
    if fuel is None:
        fuel = streams.Fuel(label=f"syracuse trajectory of {n}")
    out = [n]
    while n != 0:
        fuel.tick()
        n = syracuse(n)
        out.append(n)
    return out


def _nat_bits_stream() -> streams.Stream:
    """The concatenated bit forms of 0, 1, 2, ...: an aperiodic infinite seed."""

    def gen() -> Iterator[int]:
        n = 0
        while True:
            yield from encoders.list_to_bins(nadic.nat_to_nats(2, n))
            n += 1

    return streams.Stream(gen)


def preset_seed(name: str, k: int | None = None) -> SeedSpec:
    """The named seed specs shipped with the package."""
    if name == "morton":
        return SeedSpec(encoders.BINS, streams.cycle([1, 0]), "morton")
    if name == "arith-set":
        if k is None or k < 1:
            raise UnknownPreset(f"arith-set needs a step k >= 1, got {k}")
        return SeedSpec(encoders.SET, streams.arith(0, k), f"arith-set:{k}")
    if name == "squares":
        return SeedSpec(encoders.SET, streams.smap(lambda i: i * i, streams.arith(0, 1)), "squares")
    if name == "powers2":
        return SeedSpec(encoders.SET, streams.smap(lambda i: 2**i, streams.arith(0, 1)), "powers2")
    if name == "syracuse":
        return SeedSpec(encoders.LIST, streams.smap(syracuse, streams.arith(0, 1)), "syracuse")
    if name == "bits-of-naturals":
        return SeedSpec(encoders.BINS, _nat_bits_stream(), "bits-of-naturals")
    raise UnknownPreset(f"unknown pairing preset {name!r}")


PRESET_NAMES = ("morton", "arith-set", "squares", "powers2", "syracuse", "bits-of-naturals")


def preset_family(name: str, k: int | None = None,
                  fuel_budget: int = streams.DEFAULT_FUEL) -> PairingFamily:
    """Build the PairingFamily for a preset name; arith-set takes the step k."""
    return family_from_seed(preset_seed(name, k), fuel_budget)


def read_seed_bits(path: str | Path) -> list[int]:
    """Read a seed file of ASCII 0/1 characters, ignoring whitespace."""
    bits = []
    for i, ch in enumerate(Path(path).read_text()):
        if ch.isspace():
            continue
        if ch in "01":
            bits.append(int(ch))
        else:
            raise InvalidBit(f"seed file {path}: unexpected character {ch!r} at offset {i}")
    return bits


def seed_from_file(path: str | Path, encoder_name: str = "bins") -> SeedSpec:
    """A finite characteristic-function prefix loaded from a file.

    Consuming past the end of the prefix raises GuideExhausted with the
    position reached, so external bit sources need only be long enough for
    the calls actually made.
    """
    enc = encoders.by_name(encoder_name)
    bits = read_seed_bits(path)
    return SeedSpec(enc, streams.from_list(bits), f"seed-file:{path}:{encoder_name}")


# -- reference pairing and combinators ----------------------------------------------

def cantor_pair(x: int, y: int) -> int:
    """The classic diagonal pairing (x+y)(x+y+1)/2 + y; used as a test oracle."""
    return (x + y) * (x + y + 1) // 2 + y


def cantor_unpair(n: int) -> tuple[int, int]:
    """Inverse of cantor_pair via the integer triangular root."""
    w = (isqrt(8 * n + 1) - 1) // 2
    y = n - w * (w + 1) // 2
    return w - y, y


def cantor_family() -> PairingFamily:
    return PairingFamily("cantor", cantor_pair, cantor_unpair)


def twist_family(f: PairingFamily, mask: int) -> PairingFamily:
    """XOR the paired value with a fixed mask; still a bijection, new family member."""
    return PairingFamily(
        f"{f.name},xor:{mask}",
        lambda x, y: f.pair(x, y) ^ mask,
        lambda n: f.unpair(n ^ mask),
        f.fuel_budget,
    )
