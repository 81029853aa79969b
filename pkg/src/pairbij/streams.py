"""Restartable, possibly infinite sequences of naturals, with fuel-bounded pulling.

A Stream is an immutable *description*: every iteration instantiates a fresh
generator and replays the sequence from the start. That stands in for lazy
lists in a strict language -- pairing operations re-traverse the same seed
on every call, so descriptions must be cheap to restart and safe to share.
"""

from collections.abc import Callable, Iterable, Iterator
from itertools import islice

from .errors import EmptyCycle, FuelExhausted, ZeroStep

DEFAULT_FUEL = 1_000_000


class Fuel:
    """A budget of stream pulls for one top-level operation.

    Exhaustion raises FuelExhausted rather than truncating: a divergent
    computation must fail loudly, never return a shortened answer.
    """

    def __init__(self, budget: int = DEFAULT_FUEL, label: str = ""):
        if budget <= 0:
            raise ValueError(f"fuel budget must be positive, got {budget}")
        self.budget = budget
        self.remaining = budget
        self.label = label

    def tick(self, count: int = 1) -> None:
        self.remaining -= count
        if self.remaining < 0:
            where = f" while evaluating {self.label}" if self.label else ""
            raise FuelExhausted(
                f"no progress after {self.budget} stream pulls{where}"
            )

    def meter(self, xs: Iterable[int]) -> Iterator[int]:
        """Yield from xs, spending one unit of fuel per element."""
        for x in xs:
            self.tick()
            yield x


class Stream:
    """Description of a (possibly infinite) sequence of naturals.

    finite_hint is advisory; correctness never depends on it.
    """

    __slots__ = ("_make_iter", "finite_hint")

    def __init__(self, make_iter: Callable[[], Iterator[int]], finite_hint: int | None = None):
        self._make_iter = make_iter
        self.finite_hint = finite_hint

    def __iter__(self) -> Iterator[int]:
        return self._make_iter()


def from_list(xs: Iterable[int]) -> Stream:
    """A finite stream yielding exactly the elements of xs, in order."""
    frozen = tuple(xs)
    return Stream(lambda: iter(frozen), finite_hint=len(frozen))


def cycle(xs: Iterable[int]) -> Stream:
    """The infinite repetition of a nonempty finite list."""
    frozen = tuple(xs)
    if not frozen:
        raise EmptyCycle("cannot cycle an empty list")

    def gen() -> Iterator[int]:
        while True:
            yield from frozen

    return Stream(gen)


def arith(start: int, step: int) -> Stream:
    """The infinite arithmetic progression start, start+step, start+2*step, ..."""
    if step == 0:
        raise ZeroStep("arithmetic stream needs step >= 1")

    def gen() -> Iterator[int]:
        n = start
        while True:
            yield n
            n += step

    return Stream(gen)


def smap(f: Callable[[int], int], s: Iterable[int]) -> Stream:
    """Apply f element-wise, lazily; pulling n results pulls s exactly n times."""

    def gen() -> Iterator[int]:
        for x in s:
            yield f(x)

    hint = s.finite_hint if isinstance(s, Stream) else None
    return Stream(gen, finite_hint=hint)


def take(s: Iterable[int], n: int) -> list[int]:
    """The first min(n, length) elements as a list."""
    if n < 0:
        raise ValueError(f"cannot take {n} elements")
    return list(islice(iter(s), n))
