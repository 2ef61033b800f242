"""The generic checkers: graded bijection, telescoping sum, cancelation.

Positive cases use tiny synthetic families; every failure reason has a
negative control that must produce a failure certificate with a concrete
counterexample.
"""

import json

import pytest

from qtelescope.qalgebra import LaurentPoly
from qtelescope.telescope import (Certificate, IterationBudgetExceeded,
                                  MarkedObject, cancelation_psi,
                                  check_graded_bijection,
                                  telescoping_sum_check)


def weight_by_table(table):
    return lambda x: LaurentPoly.monomial(*table[x])


# check_graded_bijection -----------------------------------------------------

def test_identity_map_verifies():
    family = ["a", "b", "c"]
    weights = {"a": (1, 0, 0), "b": (1, 0, 1), "c": (-1, 1, 2)}
    cert = check_graded_bijection(lambda x: x, family, family,
                                  weight_by_table(weights), cap=5)
    assert cert.verified
    assert cert.domain_size == 3 and cert.codomain_size == 3


def test_collision_is_reported():
    weights = {"a": (1, 0, 0), "b": (1, 0, 0), "x": (1, 0, 0), "y": (1, 0, 0)}
    cert = check_graded_bijection(lambda _: "x", ["a", "b"], ["x", "y"],
                                  weight_by_table(weights))
    assert not cert.verified
    assert cert.counterexample["reason"] == "collision"
    assert cert.counterexample["image"] == "x"


def test_image_outside_codomain_is_reported():
    weights = {"a": (1, 0, 0), "x": (1, 0, 0), "z": (1, 0, 0)}
    cert = check_graded_bijection(lambda _: "z", ["a"], ["x"],
                                  weight_by_table(weights))
    assert not cert.verified
    assert cert.counterexample["reason"] == "not-in-codomain"


def test_weight_mismatch_is_reported():
    weights = {"a": (1, 0, 1), "x": (1, 0, 2)}
    cert = check_graded_bijection(lambda _: "x", ["a"], ["x"],
                                  weight_by_table(weights))
    assert not cert.verified
    assert cert.counterexample["reason"] == "weight-mismatch"


def test_sign_flip_counts_as_weight_mismatch():
    weights = {"a": (1, 0, 1), "x": (-1, 0, 1)}
    cert = check_graded_bijection(lambda _: "x", ["a"], ["x"],
                                  weight_by_table(weights))
    assert not cert.verified
    assert cert.counterexample["reason"] == "weight-mismatch"


def test_missed_codomain_element_is_reported():
    weights = {"a": (1, 0, 0), "x": (1, 0, 0), "y": (1, 0, 0)}
    cert = check_graded_bijection(lambda _: "x", ["a"], ["x", "y"],
                                  weight_by_table(weights))
    assert not cert.verified
    assert cert.counterexample["reason"] == "not-surjective"
    assert cert.counterexample["image"] == "y"


def test_duplicate_codomain_enumeration_is_rejected():
    weights = {"a": (1, 0, 0), "x": (1, 0, 0)}
    with pytest.raises(ValueError):
        check_graded_bijection(lambda _: "x", ["a"], ["x", "x"],
                               weight_by_table(weights))


# telescoping_sum_check --------------------------------------------------------

def one(q=0, z=0, c=1):
    return LaurentPoly.monomial(c, z, q)


def test_f_equals_g_with_zero_h():
    f = {k: one(q=k) for k in range(4)}
    cert = telescoping_sum_check(f, dict(f), {}, k_max=3)
    assert cert.verified


def test_genuine_telescoping_instance():
    # f(k) = g(k) + h(k+1) - h(k) with h supported on 1..3
    h = {0: LaurentPoly.zero(), 1: one(q=1), 2: one(q=2), 3: one(q=3),
         4: LaurentPoly.zero()}
    g = {k: one(q=2 * k, c=2) for k in range(4)}
    f = {k: g[k] + h.get(k + 1, LaurentPoly.zero()) - h[k] for k in range(4)}
    cert = telescoping_sum_check(f, g, h, k_max=3)
    assert cert.verified


def test_perturbed_coefficient_fails_with_index():
    h = {1: one(q=1)}
    g = {0: one(q=0), 1: one(q=5)}
    f = {0: g[0] + one(q=1), 1: g[1] - one(q=1)}
    assert telescoping_sum_check(f, g, h, k_max=1).verified
    g_bad = dict(g)
    g_bad[1] = g[1] + one(q=9)
    cert = telescoping_sum_check(f, g_bad, h, k_max=1)
    assert not cert.verified
    assert cert.counterexample["reason"] == "index-relation-violated"
    assert cert.counterexample["element"] == {"k": 1}


def test_nonzero_h_at_start_fails():
    cert = telescoping_sum_check({0: one()}, {0: one()}, {0: one(q=2)}, k_max=0)
    assert not cert.verified
    assert cert.counterexample["reason"] == "h-nonzero-at-start"


def test_nonzero_h_beyond_kmax_fails():
    cert = telescoping_sum_check({0: one()}, {0: one()}, {5: one(q=2)}, k_max=2)
    assert not cert.verified
    assert cert.counterexample["reason"] == "h-nonzero-beyond-kmax"


def test_negative_k_min_is_supported():
    f = {k: one(q=abs(k)) for k in range(-2, 3)}
    cert = telescoping_sum_check(f, dict(f), {}, k_max=2, k_min=-2)
    assert cert.verified


# cancelation ---------------------------------------------------------------------

def test_immediate_landing_takes_one_step():
    steps = []

    def phi(x):
        steps.append(x)
        return x + 1

    assert cancelation_psi(phi, 0, lambda v: v >= 1, max_iter=10) == 1
    assert len(steps) == 1


def test_three_step_chain():
    # 0 -> h1 -> h2 -> b: lands after exactly three applications
    table = {0: "h1", "h1": "h2", "h2": "b"}
    calls = []

    def phi(x):
        calls.append(x)
        return table[x]

    assert cancelation_psi(phi, 0, lambda v: v == "b", max_iter=10) == "b"
    assert calls == [0, "h1", "h2"]


def test_two_cycle_exhausts_budget():
    table = {0: "h1", "h1": "h2", "h2": "h1"}
    with pytest.raises(IterationBudgetExceeded):
        cancelation_psi(lambda x: table[x], 0, lambda v: v == "b", max_iter=50)


def test_budget_must_be_positive():
    with pytest.raises(ValueError):
        cancelation_psi(lambda x: x, 0, lambda v: True, max_iter=0)


# certificates ---------------------------------------------------------------------

def test_certificate_json_schema():
    cert = check_graded_bijection(lambda x: x, ["a"], ["a"],
                                  lambda _: LaurentPoly.one(), cap=7,
                                  check="demo", params={"n": 1})
    obj = json.loads(cert.to_json())
    assert set(obj) == {"check", "params", "cap", "status", "domain_size",
                        "codomain_size", "elapsed_ms"}
    assert obj["check"] == "demo" and obj["cap"] == 7
    assert obj["status"] == "verified"


def test_failure_certificate_carries_counterexample():
    weights = {"a": (1, 0, 1), "x": (1, 0, 2)}
    cert = check_graded_bijection(lambda _: "x", ["a"], ["x"],
                                  weight_by_table(weights))
    obj = json.loads(cert.to_json())
    assert obj["status"] == "failed"
    assert set(obj["counterexample"]) == {"element", "image", "reason"}


def test_marked_object_rejects_negative_marker():
    with pytest.raises(ValueError):
        MarkedObject(-1, "payload")


def test_summary_lines():
    good = Certificate(check="demo", params={"n": 2})
    assert good.summary() == "[ok ] demo n=2"
    bad = Certificate(check="demo", params={"n": 2}, status="failed",
                      counterexample={"reason": "collision"})
    assert bad.summary().startswith("[FAIL] demo n=2")
    assert "collision" in bad.summary()
