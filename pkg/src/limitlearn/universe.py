"""Stage-indexed enumerators and the hypothesis registry.

An enumerator models a set being listed over discrete stages: ``at_stage(s)``
is the finite portion visible by stage s, and it must never lose elements as
s grows. The registry assigns natural-number codes to enumerators so learners
can output hypotheses as plain ints; code 0 is reserved for the empty set.

Determinism: all methods return frozensets and take no hidden state; callers
that need ordered output must sort. The registry counts every ``at_stage``
query it forwards, which gives reproducible work measurements independent of
wall clock.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable

from .encodings import _check_natural


class Enumerator:
    """One set unfolding over stages; subclasses fill in at_stage."""

    def at_stage(self, s: int) -> frozenset[int]:
        """Elements enumerated by stage s. Must be monotone in s."""
        raise NotImplementedError

    def stable_below(self, k: int, s: int) -> bool:
        """True only if the part below k provably never changes after stage s.

        False means "unknown", not "will change"; the default is always safe.
        """
        return False


class EmptyEnumerator(Enumerator):
    """Never enumerates anything."""

    def at_stage(self, s: int) -> frozenset[int]:
        _check_natural(s, "stage")
        return frozenset()

    def stable_below(self, k: int, s: int) -> bool:
        return True


class FiniteSetEnumerator(Enumerator):
    """Dumps a fixed finite set at stage 1 and never changes again."""

    def __init__(self, elements: Iterable[int]):
        self._elements = frozenset(elements)
        for x in self._elements:
            _check_natural(x, "element")

    def at_stage(self, s: int) -> frozenset[int]:
        _check_natural(s, "stage")
        return self._elements if s >= 1 else frozenset()

    def stable_below(self, k: int, s: int) -> bool:
        return s >= 1


class StepFunctionEnumerator(Enumerator):
    """Wraps a raw stage -> set function without any safety net.

    Exists for fault injection in tests: the callback may violate monotonicity
    and the checkers are expected to catch it. Not for production sets.
    """

    def __init__(self, fn: Callable[[int], Iterable[int]]):
        self._fn = fn

    def at_stage(self, s: int) -> frozenset[int]:
        _check_natural(s, "stage")
        return frozenset(self._fn(s))


class UnionEnumerator(Enumerator):
    """Pointwise union of finitely many enumerators."""

    def __init__(self, parts: Iterable[Enumerator]):
        self._parts = tuple(parts)

    def at_stage(self, s: int) -> frozenset[int]:
        out: set[int] = set()
        for p in self._parts:
            out |= p.at_stage(s)
        return frozenset(out)

    def stable_below(self, k: int, s: int) -> bool:
        return all(p.stable_below(k, s) for p in self._parts)


class Registry:
    """Code -> enumerator table; the shared hypothesis space of a run.

    Codes are assigned sequentially in registration order, which makes every
    experiment replayable: the same registrations in the same order produce
    the same codes. Code 0 is always the empty set.
    """

    def __init__(self) -> None:
        self._table: list[Enumerator] = [EmptyEnumerator()]
        self.query_count = 0

    def register(self, enum: Enumerator) -> int:
        self._table.append(enum)
        return len(self._table) - 1

    def __len__(self) -> int:
        return len(self._table)

    def __contains__(self, code: int) -> bool:
        return isinstance(code, int) and 0 <= code < len(self._table)

    def get(self, code: int) -> Enumerator:
        if code not in self:
            raise KeyError(f"unregistered hypothesis code {code!r}")
        return self._table[code]

    def enumerate_to(self, code: int, s: int) -> frozenset[int]:
        """at_stage(s) of the coded enumerator; counts as one query."""
        enum = self.get(code)
        self.query_count += 1
        return enum.at_stage(s)

    def stable_below(self, code: int, k: int, s: int) -> bool:
        return self.get(code).stable_below(k, s)

    def sym_diff_below(self, h1: int, h2: int, bound: int, s: int) -> frozenset[int]:
        """Symmetric difference of two coded sets, restricted below bound."""
        a = {x for x in self.enumerate_to(h1, s) if x < bound}
        b = {x for x in self.enumerate_to(h2, s) if x < bound}
        return frozenset(a ^ b)


def check_monotone(
    registry: Registry, codes: Iterable[int], s_max: int
) -> list[tuple[int, int, int]]:
    """Scan coded enumerators for stage-monotonicity violations.

    Returns (code, stage, lost_element) triples: at ``stage`` the element was
    present, at ``stage + 1`` it was gone. Empty list means all clean up to
    s_max. Cost is one query per (code, stage) pair, so keep s_max modest.
    """
    violations: list[tuple[int, int, int]] = []
    for code in codes:
        prev = registry.enumerate_to(code, 0)
        for s in range(1, s_max + 1):
            cur = registry.enumerate_to(code, s)
            lost = prev - cur
            for x in sorted(lost):
                violations.append((code, s - 1, x))
            prev = cur
    return violations


class DiscoveryCursor:
    """Tracks first-appearance order of elements across stages.

    Feeding stages in increasing order yields a canonical listing: within one
    stage, newly seen elements are appended in sorted order. Used to turn an
    enumerator into a concrete text deterministically.
    """

    def __init__(self) -> None:
        self._seen: set[int] = set()
        self.order: list[int] = []

    def advance(self, elements: frozenset[int]) -> list[int]:
        """Record a stage snapshot; returns the elements new to this stage."""
        fresh = sorted(elements - self._seen)
        self._seen.update(fresh)
        self.order.extend(fresh)
        return fresh
