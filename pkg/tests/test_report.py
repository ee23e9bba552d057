"""Report model: status semantics, rendering, serialization."""

import json

from qlorentz.lorentz import hopf_axiom_check
from qlorentz.qminkowski import (central_elements_check, metric_form_check,
                                 verify_qm_relations)
from qlorentz.report import FAIL, FLAGGED, PASS, VerificationReport


def test_flagged_is_not_fail():
    rep = VerificationReport(suite="t")
    rep.check("good", True)
    rep.check("known-discrepancy", False, expected_failure=True)
    assert rep.ok
    assert rep.summary == {PASS: 1, FAIL: 0, FLAGGED: 1}


def test_expected_failure_that_passes_is_a_failure():
    # a discrepancy we claim to reproduce must actually be reproduced
    rep = VerificationReport(suite="t")
    rep.check("should-have-failed", True, expected_failure=True)
    assert not rep.ok
    assert rep.summary[FAIL] == 1


def test_text_rendering_contains_statuses_and_summary():
    rep = VerificationReport(suite="t", config={"max_block": 2})
    rep.check("alpha", True)
    rep.check("beta", False, residual="off by q")
    text = rep.to_text()
    assert "[PASS   ] alpha" in text
    assert "[FAIL   ] beta" in text
    assert "off by q" in text
    assert "summary: 1 pass, 1 fail, 0 flagged" in text


def test_json_roundtrip():
    rep = VerificationReport(suite="t", config={"p": "3/2"})
    rep.check("alpha", True, anchor="a", backend="exact", block="n=2", p="3/2")
    doc = json.loads(rep.to_json())
    again = VerificationReport.from_dict(doc)
    assert again.to_dict() == rep.to_dict()


def test_standalone_check_operations():
    assert verify_qm_relations().ok
    assert central_elements_check().ok
    metric = metric_form_check()
    assert metric.ok
    assert metric.summary[FLAGGED] == 2
    hopf = hopf_axiom_check()
    assert hopf.ok and hopf.summary[FLAGGED] == 0
    hopf_lit = hopf_axiom_check("paper")
    assert hopf_lit.ok and hopf_lit.summary[FLAGGED] == 8
