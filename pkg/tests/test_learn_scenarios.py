"""End-to-end runs: the two-code learner against constructed family members.

The point of the whole apparatus: one learner, driven only by the minimum
and first gap of what it has seen, tracks every member of a family while no
strict learner can. These runs exercise that story at desk scale.
"""

from limitlearn import (
    Status,
    Text,
    Workspace,
    canonical_text,
    check_txtfex,
    check_txtfext,
    run_learner,
    verify_witness,
)

HORIZON = 200


def _member_trace(ws, kind, e, n, variant):
    code = ws.family_member_code(kind, e, n, variant)
    text = canonical_text(ws.registry, code, HORIZON)
    learner = ws.gap_parity_learner(kind)
    return run_learner(learner, text, HORIZON)


def test_constant_members_settle_on_the_matching_code():
    ws = Workspace()
    plain = ws.diagonal_code("constant_zero", 0, "plain")
    hat = ws.diagonal_code("constant_zero", 0, "hat")
    for n in (0, 13):
        for variant, want in (("plain", plain), ("hat", hat)):
            tr = _member_trace(ws, "constant_zero", 0, n, variant)
            tail = set(tr.outputs[HORIZON // 2 :])
            assert tail == {want}, (n, variant)


def test_constant_members_pass_both_checkers():
    ws = Workspace()
    for n in (0, 13):
        for variant in ("plain", "hat"):
            tr = _member_trace(ws, "constant_zero", 0, n, variant)
            assert check_txtfex(tr, ws.registry, "*", 2).status is Status.PASS_AT_HORIZON
            assert check_txtfext(tr, ws.registry, "*", 2).status is Status.PASS_AT_HORIZON


def test_fresh_members_vacillate_between_exactly_two_codes():
    ws = Workspace()
    plain = ws.diagonal_code("fresh_each_step", 0, "plain")
    hat = ws.diagonal_code("fresh_each_step", 0, "hat")
    for variant in ("plain", "hat"):
        tr = _member_trace(ws, "fresh_each_step", 0, 5, variant)
        tail = set(tr.outputs[3 * HORIZON // 4 :])
        assert tail == {plain, hat}
        assert check_txtfex(tr, ws.registry, "*", 2).status is Status.PASS_AT_HORIZON


def test_shifted_base_members_also_pass():
    ws = Workspace()
    for variant in ("plain", "hat"):
        tr = _member_trace(ws, "constant_zero", 2, 9, variant)
        assert check_txtfex(tr, ws.registry, "*", 2).status is Status.PASS_AT_HORIZON


def test_adversarial_text_defeats_the_fresh_learner():
    ws = Workspace()
    c = ws.construction("fresh_each_step", 0)
    c.run_to(150)
    items = c.adversarial_text(120)
    tr = run_learner(ws.sample_learner("fresh_each_step"), Text(items, label="adv"), 120)
    v = check_txtfext(tr, ws.registry, "*", 10)
    assert v.status is Status.FAIL_WITNESSED
    assert v.witness["kind"] == "cardinality"
    assert len(v.witness["codes"]) > 10
    assert verify_witness(v, tr, ws.registry, "*", 10)
    # even the loose reading fails: the tail never thins out
    assert check_txtfex(tr, ws.registry, "*", 10).status is Status.FAIL_WITNESSED


def test_gap_parity_tail_lives_inside_the_code_pair():
    ws = Workspace()
    pair = {
        ws.diagonal_code("constant_zero", 1, "plain"),
        ws.diagonal_code("constant_zero", 1, "hat"),
    }
    for n in (0, 5, 13):
        for variant in ("plain", "hat"):
            tr = _member_trace(ws, "constant_zero", 1, n, variant)
            assert set(tr.outputs[HORIZON // 2 :]) <= pair
