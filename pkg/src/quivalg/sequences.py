"""Eventually periodic sequences of naturals and the resolution preorders.

A sequence is stored as a finite prefix plus a repeating cycle; the empty
cycle means the tail is zero.  Construction canonicalizes: an all-zero cycle
is dropped (and trailing zeros stripped from the prefix), the cycle is reduced
to its primitive root, and the prefix is shortened as long as its last entry
agrees with the rotated cycle.  Two sequences are therefore equal as values
exactly when they are equal as dataclasses.

Admissible sequences are those that can occur as the length sequence of a
minimal projective resolution: the head entry is positive, and an entry that
drops to 1 or 0 forces a zero tail.  ``precedes`` implements the family of
preorders indexed by a positive integer r: a comes before b when the support
of a ends no later than that of b and every pointwise violation a_n > b_n
happens within r steps of the end of a's support.  All quantifiers over the
infinite index set are decided exactly on the periodic representation.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import AdmissibilityError

INFINITY = math.inf


def _primitive_root(cycle: tuple[int, ...]) -> tuple[int, ...]:
    n = len(cycle)
    for d in range(1, n + 1):
        if n % d == 0 and cycle == cycle[:d] * (n // d):
            return cycle[:d]
    return cycle


def _canonical(prefix, cycle) -> tuple[tuple[int, ...], tuple[int, ...]]:
    prefix = list(prefix)
    cycle = list(cycle)
    if all(c == 0 for c in cycle):
        cycle = []
    if not cycle:
        while prefix and prefix[-1] == 0:
            prefix.pop()
        return tuple(prefix), ()
    cycle = list(_primitive_root(tuple(cycle)))
    while prefix and prefix[-1] == cycle[-1]:
        prefix.pop()
        cycle = [cycle[-1]] + cycle[:-1]
    return tuple(prefix), tuple(cycle)


@dataclass(frozen=True)
class EventuallyPeriodic:
    prefix: tuple[int, ...] = ()
    cycle: tuple[int, ...] = ()

    def __post_init__(self):
        for x in tuple(self.prefix) + tuple(self.cycle):
            if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                raise ValueError(f"entries must be nonnegative integers, got {x!r}")
        p, c = _canonical(self.prefix, self.cycle)
        object.__setattr__(self, "prefix", p)
        object.__setattr__(self, "cycle", c)

    def value(self, n: int) -> int:
        if n < len(self.prefix):
            return self.prefix[n]
        if not self.cycle:
            return 0
        return self.cycle[(n - len(self.prefix)) % len(self.cycle)]

    def values(self, count: int) -> tuple[int, ...]:
        return tuple(self.value(n) for n in range(count))

    @property
    def dimension(self) -> int | float:
        """sup of the support: last index with a positive entry."""
        if self.cycle:
            return INFINITY
        if not self.prefix:
            return -INFINITY
        return len(self.prefix) - 1

    def __str__(self) -> str:
        body = ",".join(str(x) for x in self.prefix)
        if self.cycle:
            body += "|" + ",".join(str(x) for x in self.cycle)
        return f"[{body}]"


_LITERAL = re.compile(r"^\[\s*([0-9,\s]*?)\s*(?:\|\s*([0-9,\s]*?)\s*)?\]$")


def parse_sequence(text: str) -> EventuallyPeriodic:
    """Parse a literal like ``[2,2,1]`` or ``[2,3|2,3]``."""
    m = _LITERAL.match(text.strip())
    if not m:
        raise ValueError(f"bad sequence literal: {text!r}")

    def ints(part: str | None) -> tuple[int, ...]:
        if part is None or not part.strip():
            return ()
        try:
            return tuple(int(x) for x in part.split(","))
        except ValueError as exc:
            raise ValueError(f"bad sequence literal: {text!r}") from exc

    return EventuallyPeriodic(ints(m.group(1)), ints(m.group(2)))


def weighted_sum(terms: list[tuple[int, EventuallyPeriodic]]) -> EventuallyPeriodic:
    """Pointwise sum of scaled sequences, aligned over one common period."""
    if not terms:
        return EventuallyPeriodic()
    head = max(len(s.prefix) for _, s in terms)
    periods = [len(s.cycle) for _, s in terms if s.cycle]
    span = math.lcm(*periods) if periods else 0
    vals = [sum(m * s.value(n) for m, s in terms) for n in range(head + span)]
    return EventuallyPeriodic(tuple(vals[:head]), tuple(vals[head:]))


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible: bool
    violation: int | None


def is_admissible(seq: EventuallyPeriodic) -> AdmissibilityReport:
    """Check the two membership rules, reporting the least violating index."""
    if seq.value(0) <= 0:
        return AdmissibilityReport(False, 0)
    horizon = len(seq.prefix) + len(seq.cycle)
    for n in range(horizon):
        if seq.value(n) <= 1 and _positive_after(seq, n):
            return AdmissibilityReport(False, n)
    return AdmissibilityReport(True, None)


def _positive_after(seq: EventuallyPeriodic, n: int) -> bool:
    if seq.cycle:
        return True  # a canonical nonempty cycle contains a positive entry
    return any(x > 0 for x in seq.prefix[n + 1:])


def _require_member(seq: EventuallyPeriodic) -> None:
    report = is_admissible(seq)
    if not report.admissible:
        raise AdmissibilityError(
            f"sequence {seq} is not admissible (violation at index {report.violation})")


def _require_r(r: int) -> None:
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"r must be a positive integer, got {r!r}")


def _comparison_horizon(a: EventuallyPeriodic, b: EventuallyPeriodic) -> int:
    span = math.lcm(len(a.cycle) or 1, len(b.cycle) or 1)
    return max(len(a.prefix), len(b.prefix)) + span


def precedes(a: EventuallyPeriodic, b: EventuallyPeriodic, r: int = 2) -> bool:
    """a comes before b in the preorder with tail slack r."""
    _require_member(a)
    _require_member(b)
    _require_r(r)
    da, db = a.dimension, b.dimension
    if da > db:
        return False
    if da == INFINITY:
        horizon = _comparison_horizon(a, b)
        return all(a.value(n) <= b.value(n) for n in range(horizon))
    # a violation at index n is harmless iff dim a < n + r
    last = int(da) - r
    return all(a.value(n) <= b.value(n) for n in range(last + 1))


def equivalent(a: EventuallyPeriodic, b: EventuallyPeriodic, r: int = 2) -> bool:
    return precedes(a, b, r) and precedes(b, a, r)


def is_least(a: EventuallyPeriodic, m: int | float, r: int = 2) -> bool:
    """Is a a least element among admissible sequences of support dim >= m?"""
    _require_member(a)
    _require_r(r)
    if m == INFINITY:
        if a.dimension != INFINITY:
            raise AdmissibilityError(f"{a} has finite support, so it is outside the class")
        return all(x == 2 for x in a.prefix + a.cycle)
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"m must be a natural number or INFINITY, got {m!r}")
    if a.dimension < m:
        raise AdmissibilityError(f"{a} has support below {m}, so it is outside the class")
    if a.dimension != m:
        return False
    return all(a.value(i) == 2 for i in range(m - r + 1))
