"""Stabilization test: does one string pin a learner down on a tail set?

Fix a base value e, a comparison depth k, a candidate string sigma, and a
stage budget s. The admissible extensions of sigma are the strings over
[e, s] that extend it and have length at most s. Sigma stabilizes the learner
when three things hold:

  1. sigma's content covers e..e+k and stays inside [e, infinity);
  2. no admissible extension makes the learner output a code above |sigma|;
  3. every admissible extension's output enumerates the same elements below k
     as sigma's own output, at every stage |sigma| + t with t <= s.

check_stabilizing returns None on success or a concrete witness against the
first failing condition. The brute method enumerates extensions outright and
is exponential, so it is the reference oracle for small budgets only. The
profile method exploits learners whose output depends only on input length:
admissible extensions of a length-m string realize exactly the lengths m..s,
so both quantifiers collapse to a scan over lengths. The two methods agree
on the verdict everywhere; witnesses may differ but are always checkable via
stab_witness_valid.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .encodings import Sequence, content, is_prefix
from .learners import Learner
from .universe import Registry


@dataclass(frozen=True)
class StabWitness:
    """Counterexample: which condition broke, on which extension, at which t."""

    tau: Sequence
    t: int
    violated_condition: int

    def as_dict(self) -> dict:
        return {
            "tau": list(self.tau),
            "t": self.t,
            "violated_condition": self.violated_condition,
        }


def base_qualifies(base: Sequence, s: int, e: int) -> bool:
    """True iff base itself is an admissible string for budget s over [e, s]."""
    return len(base) <= s and all(e <= x <= s for x in base)


def candidate_strings(base: Sequence, s: int, e: int) -> list[Sequence]:
    """All admissible extensions of base, in length-lex order.

    Empty when base is not itself admissible. Size grows like (s-e+1)^s, so
    callers must keep s tiny; the construction never calls this on the fast
    path.
    """
    if not base_qualifies(base, s, e):
        return []
    out: list[Sequence] = []
    for m in range(len(base), s + 1):
        for suffix in product(range(e, s + 1), repeat=m - len(base)):
            out.append(base + suffix)
    return out


def _covers_required(e: int, k: int, sigma: Sequence) -> bool:
    c = content(sigma)
    return all(x >= e for x in c) and set(range(e, e + k + 1)).issubset(c)


def _diff_below(registry: Registry, c0: int, c1: int, k: int, stage: int) -> bool:
    a = {x for x in registry.enumerate_to(c0, stage) if x < k}
    b = {x for x in registry.enumerate_to(c1, stage) if x < k}
    return a != b


def check_stabilizing(
    e: int,
    k: int,
    sigma: Sequence,
    s: int,
    learner: Learner,
    registry: Registry,
    method: str = "profile",
) -> StabWitness | None:
    """None if sigma stabilizes the learner at budget s, else a witness."""
    if not _covers_required(e, k, sigma):
        return StabWitness(tau=sigma, t=0, violated_condition=1)
    if method == "brute":
        return _check_brute(e, k, sigma, s, learner, registry)
    if method == "profile":
        return _check_profile(e, k, sigma, s, learner, registry)
    raise ValueError(f"unknown method {method!r}")


def _check_brute(
    e: int, k: int, sigma: Sequence, s: int, learner: Learner, registry: Registry
) -> StabWitness | None:
    fam = candidate_strings(sigma, s, e)
    if not fam:
        # no admissible extension, nothing to violate conditions 2 and 3
        return None
    for tau in fam:
        if learner.decide(tau) > len(sigma):
            return StabWitness(tau=tau, t=0, violated_condition=2)
    c0 = learner.decide(sigma)
    for tau in fam:
        c1 = learner.decide(tau)
        if c1 == c0:
            continue
        for t in range(s + 1):
            if _diff_below(registry, c0, c1, k, len(sigma) + t):
                return StabWitness(tau=tau, t=t, violated_condition=3)
    return None


def _check_profile(
    e: int, k: int, sigma: Sequence, s: int, learner: Learner, registry: Registry
) -> StabWitness | None:
    if not learner.length_profiled:
        raise ValueError("profile method requires a length-profiled learner")
    if not base_qualifies(sigma, s, e):
        return None
    m0 = len(sigma)
    # condition 1 guarantees e occurs in sigma, hence e <= s here, hence a
    # length-m extension exists for every m in m0..s (pad with e)
    first_at: dict[int, int] = {}
    for m in range(m0, s + 1):
        c = learner.length_code(m)
        if c > m0:
            return StabWitness(tau=sigma + (e,) * (m - m0), t=0, violated_condition=2)
        if c not in first_at:
            first_at[c] = m
    c0 = learner.length_code(m0)
    for c in sorted(first_at):
        if c == c0:
            continue
        mc = first_at[c]
        for t in range(s + 1):
            stage = m0 + t
            if _diff_below(registry, c0, c, k, stage):
                return StabWitness(
                    tau=sigma + (e,) * (mc - m0), t=t, violated_condition=3
                )
            if registry.stable_below(c0, k, stage) and registry.stable_below(
                c, k, stage
            ):
                break
    return None


def stab_witness_valid(
    witness: StabWitness,
    e: int,
    k: int,
    sigma: Sequence,
    s: int,
    learner: Learner,
    registry: Registry,
) -> bool:
    """Independently confirm a witness without trusting its producer."""
    if witness.violated_condition == 1:
        return witness.tau == sigma and not _covers_required(e, k, sigma)
    tau = witness.tau
    admissible = (
        is_prefix(sigma, tau)
        and len(tau) <= s
        and all(e <= x <= s for x in tau)
    )
    if not admissible:
        return False
    if witness.violated_condition == 2:
        return learner.decide(tau) > len(sigma)
    if witness.violated_condition == 3:
        if not 0 <= witness.t <= s:
            return False
        c0 = learner.decide(sigma)
        c1 = learner.decide(tau)
        return _diff_below(registry, c0, c1, k, len(sigma) + witness.t)
    return False
