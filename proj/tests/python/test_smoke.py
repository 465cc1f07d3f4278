import json
import numpy as np
import pytest

import glstar


def test_clifford_is_antipodal():
    star = glstar.clifford([0.0, 0.0, 0.0])
    q = np.array([0.6, 0.0, 0.8])
    assert np.allclose(star.sigma(q), -q)



def test_clifford_off_center():
    star = glstar.clifford([0.0, 0.0, 0.5])
    assert np.allclose(star.sigma([1.0, 0.0, 0.0]), [-0.6, 0.0, 0.8], atol=1e-12)
    with pytest.raises(glstar.GlstarError):
        glstar.clifford([1.0, 0.0, 0.0])


def test_builtin_spot_value():
    t, s = glstar.Fn1.phi_r(1.5), glstar.Fn1.phi_r(2.0)
    assert glstar.param_h(t, s, 1.0, 0.5, 1.0) == pytest.approx(0.525, abs=1e-12)
    assert glstar.builtin_numerator(1.0, 0.5) == pytest.approx([2, 7, 8, 5.25, 3.25, -3, -1.5])


def test_axiom_checks_pass_for_builtin():
    star = glstar.builtin_example()
    assert glstar.check_involution(star, 200)["passed"]
    assert glstar.check_fixed_point_free(star, 200, 0.1)["passed"]
    assert glstar.check_coverage(star, 20)["passed"]


def test_rejected_construction_raises():
    with pytest.raises(glstar.ConditionFailed, match=r"\(2\)"):
        glstar.symmetric_star(glstar.Fn1.tan_sin(2.0))


def test_parallel_through_contains_point():
    par = glstar.Parallelism(glstar.builtin_example())
    line = glstar.PLine.through([0.3, -1.0, 2.0], [1.0, 0.5, -0.2])
    p = np.array([0.4, 0.7, -1.1])
    m = par.parallel_through(p, line)
    assert m.contains(np.array([1.0, *p]), 1e-8)
    assert par.dimension() == 3
    assert glstar.Parallelism(glstar.clifford([0, 0, 0])).dimension() == 2


def test_parallelism_check_by_name():
    par = glstar.Parallelism(glstar.clifford([0, 0, 0]))
    assert par.check("hfd", 10)["passed"]
    with pytest.raises(glstar.GlstarError):
        par.check("nope")


def test_verify_config_is_reproducible():
    cfg = json.dumps({"family": "clifford", "center": [0, 0, 0]})
    first = glstar.verify_config(cfg, seed=7, checks=["involution", "coverage"])
    second = glstar.verify_config(cfg, seed=7, checks=["involution", "coverage"])
    assert first == second
    assert first[0] == 0
    assert first[1].splitlines()[-1] == "RESULT: PASS (2/2)"


def test_bad_config_raises():
    with pytest.raises(glstar.ConfigError):
        glstar.build_star(json.dumps({"family": "fg", "f": {"kind": "identity"}}))
