"""Texts, traces, and finite-horizon verdicts for vacillatory learning.

A text is a fixed listing of a set; a trace is a learner's outputs along its
prefixes. The two checkers ask whether the tail of a trace vacillates between
at most j hypotheses (check_txtfex) and additionally whether those hypotheses
enumerate the same set on the nose (check_txtfext). Everything is judged at a
finite horizon, so verdicts come in three flavors:

  PASS_AT_HORIZON  consistent with success given everything visible so far;
  FAIL_WITNESSED   a concrete violation that later stages cannot erase;
  INCONCLUSIVE     the window is degenerate or still moving.

FAIL witnesses are stage-stamped facts (extra codes seen after the settle
point, or a set element observed early and still absent from the partner at
the full stage), so rerunning with a larger horizon keeps them valid. The
finite-i content clause is the one deliberate exception: it compares against
prefix content, which can still grow, and is marked revocable in details.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .encodings import Sequence
from .learners import Learner
from .universe import DiscoveryCursor, Registry


class Status(str, Enum):
    PASS_AT_HORIZON = "PASS_AT_HORIZON"
    FAIL_WITNESSED = "FAIL_WITNESSED"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class Text:
    """A concrete listing; item n is what the learner sees at step n."""

    items: Sequence
    label: str = ""

    def __len__(self) -> int:
        return len(self.items)

    def prefix(self, n: int) -> Sequence:
        if n > len(self.items):
            raise ValueError(f"text has only {len(self.items)} items, wanted {n}")
        return self.items[:n]

    def content_at(self, n: int) -> frozenset[int]:
        return frozenset(self.prefix(n))


@dataclass(frozen=True)
class Trace:
    """Outputs along a text: outputs[n] is the guess after n items."""

    outputs: tuple[int, ...]
    text: Text
    horizon: int


def canonical_text(
    registry: Registry, code: int, length: int, probe_cap: int | None = None
) -> Text:
    """Discovery-order listing of a coded set, padded deterministically.

    Stage 0 onward, new elements enter in sorted order. Position n first
    refreshes discovery up to stage s0 + n (s0 = first nonempty stage), then
    emits the next undelivered element, or repeats the least known element
    when delivery has caught up; late discoveries still surface later.
    """
    cap = length if probe_cap is None else probe_cap
    s0 = None
    for s in range(cap + 1):
        if registry.enumerate_to(code, s):
            s0 = s
            break
    if s0 is None:
        raise ValueError(
            f"code {code} enumerated nothing by stage {cap}; cannot build a text"
        )
    cursor = DiscoveryCursor()
    cursor.advance(registry.enumerate_to(code, s0))
    items: list[int] = []
    p = 0
    for n in range(length):
        if n > 0:
            cursor.advance(registry.enumerate_to(code, s0 + n))
        if p < len(cursor.order):
            items.append(cursor.order[p])
            p += 1
        else:
            items.append(min(cursor.order))
    return Text(items=tuple(items), label=f"canonical:{code}")


def run_learner(learner: Learner, text: Text, horizon: int) -> Trace:
    """Feed prefixes of lengths 0..horizon; horizon+1 outputs total."""
    if horizon > len(text):
        raise ValueError(f"horizon {horizon} exceeds text length {len(text)}")
    outputs = tuple(learner.decide(text.prefix(n)) for n in range(horizon + 1))
    return Trace(outputs=outputs, text=text, horizon=horizon)


@dataclass(frozen=True)
class Verdict:
    status: Status
    witness: dict | None
    details: dict

    def as_dict(self) -> dict:
        return {
            "status": self.status.value,
            "witness": self.witness,
            "details": self.details,
        }


def _check_ij(value, name: str) -> None:
    if value == "*":
        return
    if isinstance(value, int) and not isinstance(value, bool) and value >= 0:
        return
    raise ValueError(f"{name} must be a natural number or '*', got {value!r}")


def _window_codes(trace: Trace, settle: int) -> list[int]:
    """Distinct codes in outputs[settle..horizon], in first-seen order."""
    seen: list[int] = []
    for c in trace.outputs[settle:]:
        if c not in seen:
            seen.append(c)
    return seen


def _below(registry: Registry, code: int, bound: int, stage: int) -> frozenset[int]:
    return frozenset(x for x in registry.enumerate_to(code, stage) if x < bound)


def check_txtfex(
    trace: Trace,
    registry: Registry,
    i,
    j,
    settle: int | None = None,
    bound: int = 64,
) -> Verdict:
    """Does the trace tail vacillate among at most j near-correct codes?

    j bounds the distinct codes after the settle point (default horizon/2);
    finite i additionally bounds, per tail code, the symmetric difference
    below `bound` between the coded set and the text's prefix content.
    """
    _check_ij(i, "i")
    _check_ij(j, "j")
    horizon = trace.horizon
    if settle is None:
        settle = horizon // 2
    if horizon < 1 or settle < 0 or settle >= horizon:
        return Verdict(
            Status.INCONCLUSIVE,
            None,
            {"reason": "degenerate window", "settle": settle, "horizon": horizon},
        )
    tail = _window_codes(trace, settle)
    base_details = {"settle": settle, "horizon": horizon, "tail_codes": sorted(tail)}
    if j != "*" and len(tail) > j:
        return Verdict(
            Status.FAIL_WITNESSED,
            {"kind": "cardinality", "codes": sorted(tail), "allowed": j},
            base_details,
        )
    if i != "*":
        target = frozenset(x for x in trace.text.content_at(horizon) if x < bound)
        for code in tail:
            diff = _below(registry, code, bound, horizon) ^ target
            if len(diff) > i:
                return Verdict(
                    Status.FAIL_WITNESSED,
                    {
                        "kind": "content",
                        "code": code,
                        "difference": sorted(diff),
                        "allowed": i,
                        "revocable": True,
                    },
                    base_details,
                )
    mid = (settle + horizon) // 2
    if set(trace.outputs[mid:]) != set(tail):
        return Verdict(
            Status.INCONCLUSIVE,
            None,
            dict(base_details, reason="tail still shifting"),
        )
    return Verdict(Status.PASS_AT_HORIZON, None, base_details)


def check_txtfext(
    trace: Trace,
    registry: Registry,
    i,
    j,
    settle: int | None = None,
    bound: int = 64,
    stage: int | None = None,
) -> Verdict:
    """Stricter checker: tail codes must enumerate identical sets.

    Builds on check_txtfex, then compares tail codes pairwise. An element
    enumerated by one code at the early stage and still missing from the
    other at the full stage is a persistent one-sided difference: a FAIL for
    every i, because exact agreement of the enumerated sets is required. A
    difference only visible at the full stage might still close, so it
    downgrades to INCONCLUSIVE instead.
    """
    horizon = trace.horizon
    if stage is None:
        stage = horizon
    fex = check_txtfex(trace, registry, i, j, settle=settle, bound=bound)
    if fex.status is Status.FAIL_WITNESSED:
        return Verdict(fex.status, fex.witness, dict(fex.details, via="vacillation"))
    actual_settle = fex.details.get("settle", horizon // 2)
    tail = _window_codes(trace, actual_settle) if horizon >= 1 else []
    early = max(1, stage // 2)
    late_only = None
    for a, b in combinations(sorted(set(tail)), 2):
        a_early = _below(registry, a, bound, early)
        b_early = _below(registry, b, bound, early)
        a_full = _below(registry, a, bound, stage)
        b_full = _below(registry, b, bound, stage)
        persistent = (a_early - b_full) | (b_early - a_full)
        if persistent:
            return Verdict(
                Status.FAIL_WITNESSED,
                {
                    "kind": "pairwise",
                    "codes": [a, b],
                    "elements": sorted(persistent),
                    "early_stage": early,
                    "stage": stage,
                },
                dict(fex.details, via="pairwise"),
            )
        if late_only is None and a_full != b_full:
            late_only = {"codes": [a, b], "elements": sorted(a_full ^ b_full)}
    if fex.status is Status.INCONCLUSIVE:
        return fex
    if late_only is not None:
        return Verdict(
            Status.INCONCLUSIVE,
            None,
            dict(fex.details, reason="late one-sided difference", pair=late_only),
        )
    return Verdict(Status.PASS_AT_HORIZON, None, fex.details)


def verify_witness(
    verdict: Verdict,
    trace: Trace,
    registry: Registry,
    i,
    j,
    settle: int | None = None,
    bound: int = 64,
    stage: int | None = None,
) -> bool:
    """Re-derive a FAIL witness from raw data, trusting nothing cached."""
    if verdict.status is not Status.FAIL_WITNESSED or verdict.witness is None:
        return False
    w = verdict.witness
    horizon = trace.horizon
    if settle is None:
        settle = horizon // 2
    if stage is None:
        stage = horizon
    kind = w.get("kind")
    if kind == "cardinality":
        tail = set(_window_codes(trace, settle))
        return set(w["codes"]) <= tail and j != "*" and len(tail) > j
    if kind == "content":
        if i == "*":
            return False
        target = frozenset(x for x in trace.text.content_at(horizon) if x < bound)
        diff = _below(registry, w["code"], bound, horizon) ^ target
        return len(diff) > i and sorted(diff) == w["difference"]
    if kind == "pairwise":
        a, b = w["codes"]
        early = w.get("early_stage", max(1, stage // 2))
        persistent = (_below(registry, a, bound, early) - _below(registry, b, bound, stage)) | (
            _below(registry, b, bound, early) - _below(registry, a, bound, stage)
        )
        return bool(persistent) and set(w["elements"]) == persistent
    return False
