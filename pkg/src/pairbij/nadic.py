"""Pairing bijections built from base-b valuations, one family member per base b >= 2.

Every positive natural z factors uniquely as b**x * y with b not dividing y,
and the y values (the positive naturals coprime-in-exponent to b) are counted
off bijectively by y' = y - y//b - 1. That turns (x, y') <-> z into a bijection
between N x N and the positive naturals; subtracting one lands it on N itself.
All arithmetic is exact and unbounded -- a change in the first component scales
the result exponentially, so results grow huge by design.
"""

from collections.abc import Iterable

from .errors import InvalidBase, ZeroArgument


def _check_base(b: int) -> None:
    if b < 2:
        raise InvalidBase(f"valuation base must be >= 2, got {b}")


def cons(b: int, x: int, y: int) -> int:
    """Pack (x, y) into a positive natural: b**x times the y-th non-multiple of b."""
    _check_base(b)
    q = y // (b - 1)
    return b**x * (y + q + 1)


def decons(b: int, z: int) -> tuple[int, int]:
    """Invert cons: the base-b valuation of z and the rank of its unit part."""
    _check_base(b)
    if z <= 0:
        raise ZeroArgument(f"decons is defined on positive naturals, got {z}")
    x = 0
    while z % b == 0:
        z //= b
        x += 1
    q = z // b
    return x, z - q - 1


def head(b: int, z: int) -> int:
    """The base-b valuation of z: the largest k with b**k dividing z."""
    return decons(b, z)[0]


def tail(b: int, z: int) -> int:
    """The second decons component: what z encodes beyond its valuation."""
    return decons(b, z)[1]


def pair(b: int, x: int, y: int) -> int:
    """The pairing bijection N x N -> N for base b."""
    return cons(b, x, y) - 1


def unpair(b: int, n: int) -> tuple[int, int]:
    """Inverse of pair."""
    if n < 0:
        raise ZeroArgument(f"unpair is defined on naturals, got {n}")
    return decons(b, n + 1)


def nat_to_nats(b: int, n: int) -> list[int]:
    """Expand a natural into the finite list of valuations peeled off by decons."""
    _check_base(b)
    if n < 0:
        raise ZeroArgument(f"nat_to_nats is defined on naturals, got {n}")
    out = []
    while n > 0:
        x, n = decons(b, n)  # tail strictly decreases, so this terminates
        out.append(x)
    return out


def nats_to_nat(b: int, xs: Iterable[int]) -> int:
    """Fold a finite list back into a natural; inverse of nat_to_nats."""
    _check_base(b)
    n = 0
    for x in reversed(list(xs)):
        n = cons(b, x, n)
    return n


def bij(k: int, l: int, n: int) -> int:
    """A permutation of N: expand in base k, rebuild in base l.

    Composing bij(k, l, .) with bij(l, k, .) gives the identity.
    """
    return nats_to_nat(l, nat_to_nats(k, n))


def nat_to_nats_mixed(bases: Iterable[int], n: int) -> list[int]:
    """Like nat_to_nats, but each recursion level draws a fresh base from a stream.

    Consumes exactly one base per output element.
    """
    if n < 0:
        raise ZeroArgument(f"nat_to_nats_mixed is defined on naturals, got {n}")
    out = []
    bs = iter(bases)
    while n > 0:
        try:
            b = next(bs)
        except StopIteration:
            raise InvalidBase("base stream ended before the expansion finished") from None
        x, n = decons(b, n)
        out.append(x)
    return out


def nats_to_nat_mixed(bases: Iterable[int], xs: Iterable[int]) -> int:
    """Inverse of nat_to_nats_mixed against the same base stream."""
    vals = list(xs)
    bs = []
    bases_it = iter(bases)
    for _ in vals:
        try:
            bs.append(next(bases_it))
        except StopIteration:
            raise InvalidBase("base stream ended before the fold finished") from None
    n = 0
    for b, x in zip(reversed(bs), reversed(vals)):
        n = cons(b, x, n)
    return n
