import itertools
import json
import random

import pytest

from braidsplit import linalg
from braidsplit.solver import (
    LEMMAS, CertificateError, SolverError, _exact_span, _lit, _ts1_certificate, build_ansatz,
    derive_constraints_two_factor, gamma2_relations, harvest, linear_vector, nonneg_solutions,
    q1_linear_form, q1_verdict, q_last_verdict, replay_ts1, ts1_verdict, two_factor_verdict,
    verify_derived_lemma,
)


def test_two_factor_examples():
    v = two_factor_verdict("T", 2, 4)
    assert v.decision == "splits" and v.certificate["k4"] == 2
    assert v.certificate["gamma2_system_integer_feasible"] is True
    v = two_factor_verdict("T", 2, 3)
    assert v.decision == "does-not-split" and "no integer solution" in v.certificate["obstruction"]
    v = two_factor_verdict("K", 3, 9)
    assert v.decision == "splits" and v.certificate["multipliers"] == [3]
    assert two_factor_verdict("K", 1, 5).decision == "splits"
    with pytest.raises(SolverError):
        two_factor_verdict("T", 0, 2)


def test_two_factor_derivation_trace():
    for M in "TK":
        for n in (2, 3):
            d = derive_constraints_two_factor(M, n)
            assert d.ok
            ring = d.system.ring
            assert d.final == ring.gen("m") - n * ring.gen("k4")
            trace = "\n".join(d.trace())
            assert "NOT DERIVED" not in trace
            assert f"alpha = ({n}-2)" in trace


def test_derivation_independent_of_constraint_order():
    an = build_ansatz("T", "gamma2", n=3, m=2, extra_symbols=["m"])
    g = an.ring.gen
    system = harvest(an, gamma2_relations("T", 3, g("m"), an.ctx))
    rng = random.Random(0)
    target = linear_vector(g("m") - 3 * g("k4"))
    exact = [c for c in system.constraints if c.modulus == 0]
    for _ in range(5):
        rng.shuffle(exact)
        span = linalg.RationalSpan()
        for idx, c in enumerate(exact):
            span.add(linear_vector(c.poly), idx)
        assert span.express(target) is not None
        assert span.express(linear_vector(g("m") - 2 * g("k4"))) is None


def test_false_claims_are_not_derived():
    an = build_ansatz("T", "gamma2", n=3, m=2, extra_symbols=["m"])
    g = an.ring.gen
    span = _exact_span(harvest(an, gamma2_relations("T", 3, g("m"), an.ctx)))
    for poly in (g("k4"), g("k1"), g("k4") - g("k1") + 1):
        assert span.express(linear_vector(poly)) is None
    an3, _, el, *_ = _ts1_certificate("T", 3, 2)
    assert not el.implies_zero(_lit("x_1_1"))[0]


@pytest.mark.parametrize("lemma", LEMMAS)
@pytest.mark.parametrize("M", "TK")
def test_lemmas_regenerate(lemma, M):
    report = verify_derived_lemma(lemma, M)
    assert report.ok, [c for c in report.checks if not c["holds"]]
    assert json.loads(json.dumps(report.to_json()))["ok"] is True


def test_lemma_parameter_validation():
    with pytest.raises(SolverError):
        verify_derived_lemma("commutator-lemma", "T", {"t": 2, "s": 1})
    with pytest.raises(SolverError):
        verify_derived_lemma("parity-lemma", "T", {"t": 3, "s": 1})
    with pytest.raises(SolverError):
        verify_derived_lemma("no-such-lemma", "T")


def test_q_last():
    assert q_last_verdict("T", [2, 4, 6]).decision == "splits"
    v = q_last_verdict("K", [2, 4, 5])
    assert v.decision == "does-not-split" and v.certificate["witness_block"] == 3


def test_nonneg_solutions():
    assert sorted(nonneg_solutions(5, [2, 3])) == [(1, 1)]
    assert nonneg_solutions(1, [2, 3]) == []
    assert nonneg_solutions(0, []) == [()]


def test_q1_linear_form_cross_check():
    for sizes in itertools.product(range(1, 6), repeat=3):
        lf = q1_linear_form("T", sizes)
        *head, nk = sizes
        brute = any(sum(l * h for l, h in zip(ls, head)) == nk
                    for ls in itertools.product(range(nk + 1), repeat=len(head)))
        assert lf.nonneg_feasible == brute, sizes
        if lf.integer_witness is not None:
            assert sum(l * h for l, h in zip(lf.integer_witness, head)) == nk


def test_q1_verdicts():
    assert q1_verdict("T", [2, 3, 5]).decision == "splits"
    assert q1_verdict("T", [2, 4, 3]).decision == "does-not-split"
    assert q1_verdict("T", [3, 5, 7]).decision == "necessary-condition-only"
    assert q1_verdict("K", [2, 3, 1]).decision == "does-not-split"


def test_ts1_certificate_replays():
    v = ts1_verdict("T", 3, 2)
    assert v.decision == "does-not-split"
    cert = v.certificate
    assert cert["replays"] and v.replay()
    assert cert["trace"][-1] == "after substituting the parity facts: 1 ≡ 0"
    # dropping the delta fact or marking a fact underived breaks the replay
    broken = dict(cert, facts=[f for f in cert["facts"] if not f["fact"].startswith("beta_1_2")])
    assert len(broken["facts"]) == len(cert["facts"]) - 1
    assert not replay_ts1(broken)
    broken = dict(cert, facts=[dict(cert["facts"][0], derived=False)] + cert["facts"][1:])
    assert not replay_ts1(broken)
    with pytest.raises(SolverError):
        ts1_verdict("T", 1, 2)


def test_verdict_json_is_stable():
    v = two_factor_verdict("K", 2, 4)
    assert v.dumps() == v.dumps()
    assert json.loads(v.dumps())["decision"] == "splits"


def test_certificate_error_is_runtime():
    assert issubclass(CertificateError, RuntimeError)
