"""The diagonal stage table: nested stabilizing strings and their fallout.

For one length-profiled learner and one base value e, the construction
maintains an infinite table of rows, revised stage by stage. Row n tries to
hold the length-lex least admissible string that covers e..e+n, extends row
n-1's string, and stabilizes the learner at depth n in the sense of
``stabilizing.check_stabilizing``. Stage 0 is the seed: row 0 holds the empty
string, everything else is undefined. At each later stage a row keeps its
string only while its string still stabilizes and every lower row kept an
unchanged value; otherwise it is recomputed from scratch, or left undefined
when no admissible string qualifies yet.

Because each stabilization failure is witnessed by facts about fixed stages
that never mutate afterwards, failures are permanent: a (depth, length) pair
that failed once can be cached forever, and a surviving row only needs an
incremental check per stage. That is what makes horizons in the thousands
affordable while staying exactly faithful to the brute-force semantics (the
equivalence is covered by tests that run both methods side by side).

On top of the table live the observations. A row that has sat unchanged long
enough yields its even marker value (observed_a) and the odd successor
(observed_b). Dropping the markers from the tail set [e, infinity) gives two
diagonal sets, "plain" and "hat"; they are exposed as stage-indexed
enumerators whose stage-s slice admits x only when a positive confirmation
exists by stage s that x can never become a marker. Confirmations are
monotone facts, so the enumerators never retract an element.
"""

from __future__ import annotations

from bisect import bisect_right

from .encodings import Sequence, is_prefix
from .learners import Learner
from .stabilizing import StabWitness, check_stabilizing
from .universe import Enumerator, Registry


class _Row:
    """Event-sourced row state: (stage, value) pairs, None meaning undefined."""

    __slots__ = ("n", "events", "stages", "qstate")

    def __init__(self, n: int, seed: Sequence | None):
        self.n = n
        self.events: list[tuple[int, Sequence | None]] = [(0, seed)]
        self.stages = [0]
        self.qstate: _QState | None = None

    @property
    def value(self) -> Sequence | None:
        return self.events[-1][1]

    def log(self, stage: int, value: Sequence | None) -> None:
        self.events.append((stage, value))
        self.stages.append(stage)

    def value_at(self, s: int) -> Sequence | None:
        return self.events[bisect_right(self.stages, s) - 1][1]

    def last_change_at_or_before(self, s: int) -> int:
        return self.stages[bisect_right(self.stages, s) - 1]


class _QState:
    """Incremental survival check for one row's current string.

    Tracks which learner codes have been proven to agree with the row's own
    code below depth k at every stage from |sigma| on (checked), and which
    still need per-stage comparisons (pending, mapping code to the next
    offset t to examine). Settled means no future stage can break anything:
    every code the learner will ever emit is checked and none exceeds the
    string's length.
    """

    __slots__ = ("sigma_len", "k", "c0", "checked", "pending", "settled")

    def __init__(
        self,
        sigma_len: int,
        k: int,
        c0: int,
        checked: set[int],
        pending: dict[int, int],
    ):
        self.sigma_len = sigma_len
        self.k = k
        self.c0 = c0
        self.checked = checked
        self.pending = pending
        self.settled = False


class Construction:
    """Stage table for one (learner, e) pair; see the module docstring."""

    def __init__(
        self,
        learner: Learner,
        e: int,
        registry: Registry,
        method: str = "profile",
    ):
        if method not in ("profile", "brute"):
            raise ValueError(f"unknown method {method!r}")
        if method == "profile" and not learner.length_profiled:
            raise ValueError("profile method requires a length-profiled learner")
        if e < 0:
            raise ValueError("base value e must be a natural number")
        self.learner = learner
        self.e = e
        self.registry = registry
        self.method = method
        self.stage = 0
        self.rows: list[_Row] = [_Row(0, ())]
        # max last-event stage over rows 0..n, for cheap "anything moved?" checks
        self._prefix_last: list[int] = [0]
        self._false_cache: set[tuple[int, int]] = set()
        self._conf_memo: dict[tuple[str, int], tuple] = {}
        self.counters = {
            "stages": 0,
            "searches": 0,
            "length_checks": 0,
            "q_advances": 0,
            "conf_cells": 0,
        }

    # ---------------- table evolution ----------------

    def run_to(self, stage: int) -> None:
        while self.stage < stage:
            self.run_stage()

    def run_stage(self) -> None:
        s = self.stage + 1
        self.counters["stages"] += 1
        lower_defined = True
        lower_changed = False
        n = 0
        while n < len(self.rows):
            row = self.rows[n]
            old = row.value
            if not lower_defined:
                new = None
                if old is not None:
                    self._log(row, s, None)
                row.qstate = None
            else:
                keep = old is not None and not lower_changed and self._survives(row, s)
                if keep:
                    new = old
                else:
                    base = () if n == 0 else self.rows[n - 1].value
                    found = self._search_least(n, base, s)
                    if found is None:
                        new = None
                        row.qstate = None
                        if old is not None:
                            self._log(row, s, None)
                    else:
                        new, row.qstate = found
                        if new != old:
                            self._log(row, s, new)
            if new is None:
                lower_defined = False
            elif new != old:
                lower_changed = True
            if new is not None and n == len(self.rows) - 1:
                self.rows.append(_Row(n + 1, None))
                self._prefix_last.append(self._prefix_last[-1])
            n += 1
        self.stage = s

    def _log(self, row: _Row, stage: int, value: Sequence | None) -> None:
        row.log(stage, value)
        for m in range(row.n, len(self._prefix_last)):
            self._prefix_last[m] = stage

    def _survives(self, row: _Row, s: int) -> bool:
        if self.method == "brute":
            return (
                check_stabilizing(
                    self.e, row.n, row.value, s, self.learner, self.registry,
                    method="brute",
                )
                is None
            )
        return row.qstate is not None and self._advance(row.qstate, s)

    # ---------------- stabilization, collapsed over lengths ----------------

    def _analyze_length(
        self, k: int, m: int, s: int
    ) -> tuple[int, set[int], dict[int, int]] | None:
        """Full stabilization verdict for any admissible length-m string.

        The learner is length-profiled, so all length-m candidates share one
        verdict. Returns (own code, checked codes, pending code -> next t) on
        success, None on failure. Failures are permanent in s: the max output
        code over lengths m..s only grows, and a disagreement below k at a
        fixed stage never un-happens.
        """
        self.counters["length_checks"] += 1
        learner = self.learner
        registry = self.registry
        if learner.length_code_max(m, s) > m:
            return None
        c0 = learner.length_code(m)
        checked = {c0}
        pending: dict[int, int] = {}
        codes = learner.length_codes(m, s)
        if k == 0:
            checked |= set(codes)
            return c0, checked, pending
        for c in sorted(codes):
            if c in checked:
                continue
            for t in range(s + 1):
                stage = m + t
                if self._diff_below(c0, c, k, stage):
                    return None
                if registry.stable_below(c0, k, stage) and registry.stable_below(
                    c, k, stage
                ):
                    checked.add(c)
                    break
            else:
                pending[c] = s + 1
        return c0, checked, pending

    def _diff_below(self, c0: int, c1: int, k: int, stage: int) -> bool:
        registry = self.registry
        a = {x for x in registry.enumerate_to(c0, stage) if x < k}
        b = {x for x in registry.enumerate_to(c1, stage) if x < k}
        return a != b

    def _maybe_settle(self, qs: _QState) -> None:
        finite = self.learner.finite_codes()
        if (
            finite
            and not qs.pending
            and finite <= qs.checked
            and max(finite) <= qs.sigma_len
        ):
            qs.settled = True

    def _advance(self, qs: _QState, s_new: int) -> bool:
        """One more stage of survival checking; False means the row dies."""
        if qs.settled:
            return True
        self.counters["q_advances"] += 1
        learner = self.learner
        registry = self.registry
        c_new = learner.length_code(s_new)
        if c_new > qs.sigma_len:
            return False
        if qs.k == 0:
            qs.checked.add(c_new)
        elif c_new not in qs.checked and c_new not in qs.pending:
            qs.pending[c_new] = 0
        for c in sorted(qs.pending):
            t = qs.pending[c]
            resolved = False
            while t <= s_new:
                stage = qs.sigma_len + t
                if self._diff_below(qs.c0, c, qs.k, stage):
                    return False
                if registry.stable_below(qs.c0, qs.k, stage) and registry.stable_below(
                    c, qs.k, stage
                ):
                    qs.checked.add(c)
                    del qs.pending[c]
                    resolved = True
                    break
                t += 1
            if not resolved:
                qs.pending[c] = t
        self._maybe_settle(qs)
        return True

    def _search_least(
        self, k: int, base: Sequence | None, s: int
    ) -> tuple[Sequence, _QState] | None:
        """Least admissible extension of base that stabilizes at depth k."""
        self.counters["searches"] += 1
        if base is None or self.e + k > s:
            return None
        if self.method == "brute":
            return self._search_brute(k, base, s)
        missing = sorted(set(range(self.e, self.e + k + 1)) - set(base))
        m_lo = len(base)
        for m in range(m_lo, s + 1):
            if m - m_lo < len(missing):
                continue
            if (k, m) in self._false_cache:
                continue
            analysis = self._analyze_length(k, m, s)
            if analysis is None:
                self._false_cache.add((k, m))
                continue
            c0, checked, pending = analysis
            tau = self._least_suffix(base, m, missing)
            qs = _QState(m, k, c0, checked, pending)
            self._maybe_settle(qs)
            return tau, qs
        return None

    def _search_brute(
        self, k: int, base: Sequence, s: int
    ) -> tuple[Sequence, None] | None:
        from .stabilizing import candidate_strings

        for tau in candidate_strings(base, s, self.e):
            if check_stabilizing(
                self.e, k, tau, s, self.learner, self.registry, method="brute"
            ) is None:
                # no incremental state: brute mode re-checks survival in full
                return tau, None
        return None

    def _least_suffix(self, base: Sequence, m: int, missing: list[int]) -> Sequence:
        """Lex-least suffix reaching length m while covering the missing values.

        Emitting e is always the smallest legal move while slack remains; once
        slack runs out the missing values must be placed in ascending order.
        """
        out = list(base)
        left = list(missing)
        while m - len(out) > len(left):
            out.append(self.e)
            if left and left[0] == self.e:
                left.pop(0)
        out.extend(left)
        return tuple(out)

    # ---------------- row access ----------------

    def value_at(self, n: int, s: int) -> Sequence | None:
        if s > self.stage:
            raise ValueError(f"stage {s} beyond current horizon {self.stage}")
        if n >= len(self.rows):
            return None
        return self.rows[n].value_at(s)

    def defined_rows(self, s: int | None = None) -> list[tuple[int, Sequence]]:
        s = self.stage if s is None else s
        out = []
        for n in range(len(self.rows)):
            v = self.value_at(n, s)
            if v is None:
                break
            out.append((n, v))
        return out

    def chain_ok(self, s: int | None = None) -> bool:
        """Each defined row's string must extend the one below it."""
        rows = self.defined_rows(s)
        return all(
            is_prefix(rows[i][1], rows[i + 1][1]) for i in range(len(rows) - 1)
        )

    def reverify_final(
        self, method: str | None = None
    ) -> list[tuple[int, StabWitness | None]]:
        """Re-run the standalone stabilization check on every surviving row."""
        out = []
        for n, v in self.defined_rows():
            w = check_stabilizing(
                self.e,
                n,
                v,
                self.stage,
                self.learner,
                self.registry,
                method=method or self.method,
            )
            out.append((n, w))
        return out

    def rows_snapshot(self, limit: int | None = None) -> list[dict]:
        out = []
        for n, row in enumerate(self.rows[: limit if limit is not None else None]):
            v = row.value
            out.append(
                {
                    "row": n,
                    "value": None if v is None else list(v),
                    "since": row.stages[-1],
                    "changes": len(row.events) - 1,
                }
            )
        return out

    # ---------------- marker observation ----------------

    def observed_a(self, ell: int, s: int | None = None) -> int | None:
        """Even marker for depth ell at horizon s, or None if not observable.

        Requires rows 0..ell all defined at s; the marker is the first even
        value after both the settling point and the floor e + ell + 1, and
        must itself fall within the horizon.
        """
        s = self.stage if s is None else min(s, self.stage)
        feasible = 0
        for h in range(ell + 1):
            if h >= len(self.rows) or self.rows[h].value_at(s) is None:
                return None
            feasible = max(feasible, self.rows[h].last_change_at_or_before(s))
        start = max(feasible, self.e + ell + 2)
        a = start if start % 2 == 0 else start + 1
        return a if a <= s else None

    def observed_b(self, ell: int, s: int | None = None) -> int | None:
        s = self.stage if s is None else min(s, self.stage)
        a = self.observed_a(ell, s)
        if a is None or a + 1 > s:
            return None
        return a + 1

    def a_values(self, s: int | None = None) -> list[int]:
        """observed_a per depth, stopping at the first unobservable one."""
        out = []
        ell = 0
        cap = self.stage if s is None else min(s, self.stage)
        while ell <= cap:
            a = self.observed_a(ell, s)
            if a is None:
                break
            out.append(a)
            ell += 1
        return out

    def b_values(self, s: int | None = None) -> list[int]:
        out = []
        ell = 0
        cap = self.stage if s is None else min(s, self.stage)
        while ell <= cap:
            b = self.observed_b(ell, s)
            if b is None:
                break
            out.append(b)
            ell += 1
        return out

    def r_prefix(
        self, bound: int, variant: str = "plain", s: int | None = None
    ) -> frozenset[int]:
        """Tail set [e, bound) minus the markers observable at horizon s."""
        if variant == "plain":
            excluded = set(self.a_values(s))
        elif variant == "hat":
            excluded = set(self.b_values(s))
        else:
            raise ValueError(f"unknown variant {variant!r}")
        return frozenset(x for x in range(self.e, bound) if x not in excluded)

    # ---------------- confirmed diagonal enumeration ----------------
    #
    # confirmation_stage(x) is the first stage with positive proof that x can
    # never be a marker. Four proof shapes, all anchored to fixed stages:
    #   parity/floor: x is odd, or too small to clear the floor for depth ell;
    #   churn ahead:  row ell is undefined somewhere at or after x;
    #   churn behind: some row at or below ell changes strictly after x;
    #   frozen window: the table at or below ell is defined and event-free
    #                  across (x-2, x], so any marker near x landed at or
    #                  before x-2 already.
    # A marked x (and only a marked x, in the limit) admits none of these at
    # any depth, so it stays out forever.

    def confirmation_stage(self, x: int, variant: str = "plain") -> int | None:
        if x > self.stage:
            raise ValueError(
                f"confirmation for {x} needs the table run to stage {x} first"
            )
        if variant == "plain":
            return self._conf_plain(x)
        if variant == "hat":
            if x == 0:
                return 0
            c = self._conf_plain(x - 1)
            return None if c is None else max(c, x)
        raise ValueError(f"unknown variant {variant!r}")

    def _conf_plain(self, x: int) -> int | None:
        memo = self._conf_memo.get(("p", x))
        if memo is not None:
            if memo[0] == "done":
                return memo[1]
            ell, horizon = memo[1], memo[2]
            if horizon == self.stage or self._still_blocked(x, ell):
                self._conf_memo[("p", x)] = ("blocked", ell, self.stage)
                return None
        result = self._conf_scan(x)
        self._conf_memo[("p", x)] = result
        return result[1] if result[0] == "done" else None

    def _conf_scan(self, x: int) -> tuple:
        e = self.e
        if x % 2 == 1 or x <= e + 1:
            return ("done", x)
        best = x
        run_after_x: int | None = None
        run_after_w: int | None = None
        for ell in range(0, max(0, x - e - 1)):
            self.counters["conf_cells"] += 1
            u = self._first_event_after(ell, x)
            if u is not None and (run_after_x is None or u < run_after_x):
                run_after_x = u
            u = self._first_event_after(ell, x - 2)
            if u is not None and (run_after_w is None or u < run_after_w):
                run_after_w = u
            cell = self._conf_cell(x, ell, run_after_x, run_after_w)
            if cell is None:
                return ("blocked", ell, self.stage)
            if cell > best:
                best = cell
        return ("done", best)

    def _conf_cell(
        self, x: int, ell: int, ev_after_x: int | None, ev_after_w: int | None
    ) -> int | None:
        best = self._first_undefined_from(ell, x)
        if ev_after_x is not None and (best is None or ev_after_x < best):
            best = ev_after_x
        if (
            x >= self.e + ell + 4
            and self.value_at(ell, x - 2) is not None
            and (ev_after_w is None or ev_after_w > x)
        ):
            best = x
        return best

    def _first_event_after(self, ell: int, y: int) -> int | None:
        """Least event stage > y of row ell, if any (rows off-table have none)."""
        if ell >= len(self.rows):
            return None
        stages = self.rows[ell].stages
        if stages[-1] <= y:
            return None
        return stages[bisect_right(stages, y)]

    def _first_undefined_from(self, ell: int, x: int) -> int | None:
        """Least stage u >= x (within horizon) where row ell has no value."""
        if x > self.stage:
            return None
        if ell >= len(self.rows):
            return x
        row = self.rows[ell]
        i = bisect_right(row.stages, x) - 1
        for j in range(i, len(row.events)):
            if row.stages[j] > self.stage:
                break
            if row.events[j][1] is None:
                return max(x, row.stages[j])
        return None

    def _still_blocked(self, x: int, ell: int) -> bool:
        """Cheap recheck of a blocking cell after the horizon has grown.

        The frozen-window proof for (x, ell) was already evaluated at a
        horizon >= x and can never change. What can change: the row may go
        undefined later, or some row at or below ell may log a new event
        after x. The prefix-last array answers the latter in O(1).
        """
        if self._first_undefined_from(ell, x) is not None:
            return False
        top = min(ell, len(self.rows) - 1)
        return self._prefix_last[top] <= x

    def diagonal_at_stage(self, s: int, variant: str = "plain") -> frozenset[int]:
        self.run_to(s)
        out = []
        for x in range(self.e, s + 1):
            c = self.confirmation_stage(x, variant)
            if c is not None and c <= s:
                out.append(x)
        return frozenset(out)

    # ---------------- derived experiments ----------------

    def adversarial_text(self, length: int, window: int = 8) -> Sequence:
        """A text over [e, infinity) engineered to keep the learner moving.

        Greedy per step: if some nearby length would switch the learner to a
        code that visibly differs (symmetric difference below a small bound,
        at a matching stage), pad straight to that length; otherwise feed the
        least tail element not yet shown. Deterministic by construction.
        """
        if not self.learner.length_profiled:
            raise ValueError("adversarial_text requires a length-profiled learner")
        t: list[int] = []
        while len(t) < length:
            m0 = len(t)
            prev = self.learner.decide(tuple(t))
            bound = m0 + window
            adopt = None
            for m in range(m0 + 1, m0 + window + 1):
                c = self.learner.length_code(m)
                if c != prev and self.registry.sym_diff_below(prev, c, bound, bound):
                    adopt = m
                    break
            if adopt is not None:
                t.extend([self.e] * (adopt - m0))
            else:
                x = self.e
                seen = set(t)
                while x in seen:
                    x += 1
                t.append(x)
        return tuple(t[:length])

    def separation_level(self, stage_bound: int) -> int:
        """How deep two-sided disagreement between emitted codes reaches.

        0 when at most one distinct code (or no one-sided difference) shows
        up; otherwise one past the largest first-difference element over
        ordered code pairs, elements and stages both capped at stage_bound.
        """
        if not self.rows or self.rows[0].value is None:
            raise ValueError("row 0 has no stable value at the current horizon")
        row0 = self.rows[0].value
        codes = sorted(
            {
                self.learner.length_code(m)
                for m in range(len(row0), stage_bound + 1)
            }
        )
        if len(codes) <= 1:
            return 0
        sets = {
            c: {x for x in self.registry.enumerate_to(c, stage_bound) if x < stage_bound}
            for c in codes
        }
        best = None
        for ci in codes:
            for cj in codes:
                if ci == cj:
                    continue
                only = sets[ci] - sets[cj]
                if only:
                    first = min(only)
                    if best is None or first > best:
                        best = first
        return 0 if best is None else best + 1


class DiagonalView(Enumerator):
    """Registry-facing face of one construction's plain or hat diagonal set.

    Querying a stage beyond the current horizon advances the underlying
    construction, which is deterministic, so results depend only on the
    query itself.
    """

    def __init__(self, construction: Construction, variant: str):
        if variant not in ("plain", "hat"):
            raise ValueError(f"unknown variant {variant!r}")
        self.construction = construction
        self.variant = variant

    def at_stage(self, s: int) -> frozenset[int]:
        return self.construction.diagonal_at_stage(s, self.variant)
