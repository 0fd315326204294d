"""Model builders, the scripted pipeline, and random generation."""

from fractions import Fraction

import pytest

from pvcalc.birational import at_point, is_exceptional_center, on_curve
from pvcalc.errors import ConfigError
from pvcalc.models import (candidate_centers, case_c_resolved,
                           conic_pipeline_demo, hirzebruch_case_a,
                           hirzebruch_case_b, plane_conic, random_config)
from pvcalc.motring import render
from pvcalc.pvint import e_invariant
from pvcalc.surface import (adjunction_defect, euler_complement, is_connected,
                            validate)

F = Fraction


# ---- builders -------------------------------------------------------------


def test_case_a_constraints():
    with pytest.raises(ConfigError):
        hirzebruch_case_a(-1, [F(1, 2), F(-1, 2)], 2)
    with pytest.raises(ConfigError):
        hirzebruch_case_a(0, [F(1, 2)], 2)
    with pytest.raises(ConfigError):
        hirzebruch_case_a(0, [F(1, 2), F(1, 2)], 2)     # sum must be 0
    cfg = hirzebruch_case_a(1, [F(1, 2), F(1, 2), F(-1)], 2)
    assert validate(cfg).ok
    assert cfg.curve("C1").alpha == -1 and cfg.curve("C1").self_int == -1
    assert e_invariant(cfg).is_zero()


def test_case_b_constraints():
    with pytest.raises(ConfigError):
        hirzebruch_case_b(0, F(1, 2), [], 2)
    with pytest.raises(ConfigError):
        hirzebruch_case_b(2, F(1, 2), [F(1, 2), F(1)], 2)    # sum 3/2, not 1
    cfg = hirzebruch_case_b(2, F(1, 2), [F(1, 2), F(1, 2), F(1)], 2)
    assert validate(cfg).ok
    assert cfg.curve("C1").self_int == -2 and cfg.curve("C2").self_int == 2
    assert cfg.curve("C2").alpha == F(-1, 2)
    assert cfg.intersection("C1", "F1") == 1
    assert cfg.intersection("C2", "F1") == 1
    assert e_invariant(cfg).is_zero()


def test_case_b_zero_alpha1():
    cfg = hirzebruch_case_b(3, 0, [F(1, 3), F(-1, 3), 1], 3)
    assert validate(cfg).ok
    assert e_invariant(cfg).is_zero()


def test_case_c_geometry():
    cfg = case_c_resolved(F(1, 2))
    assert cfg.d == 4                     # halved exponents need quarters
    assert cfg.curve("C").alpha == 0
    assert cfg.curve("C1a").alpha == F(3, 4)
    assert cfg.curve("C2a").alpha == F(1, 4)
    for c in cfg.curves:
        assert adjunction_defect(cfg, c.id) == 0
    assert validate(cfg).ok
    assert e_invariant(cfg).is_zero()
    with pytest.raises(ConfigError):
        case_c_resolved(0)
    with pytest.raises(ConfigError):
        case_c_resolved(F(1, 2), extra_fibres=-1)


def test_case_c_extra_fibres():
    cfg = case_c_resolved(F(3, 2), extra_fibres=2, d=2)
    assert cfg.intersection("C", "F1") == 2
    assert euler_complement(cfg) == 0 - 2 * 0    # fibres keep chi at 0
    assert euler_complement(case_c_resolved(F(3, 2))) == 0
    assert validate(cfg).ok
    assert e_invariant(cfg).is_zero()


def test_plane_conic():
    cfg = plane_conic()
    assert euler_complement(cfg) == 1
    assert render(e_invariant(cfg)) == "-(w^3 + w^2 + w)"


# ---- the scripted pipeline --------------------------------------------------


def test_pipeline_shape_and_invariants():
    steps = conic_pipeline_demo()
    assert [s.label for s in steps] == [
        "plane conic",
        "add tangent line, resolve tangency",
        "blow up E1 x E2",
        "contract T",
        "contract E2",
    ]
    assert [render(s.invariant) for s in steps] == [
        "-(w^3 + w^2 + w)", "-(w^3 + w^2 + w)", "-(w^3 + w^2 + w)", "0", "0",
    ]
    assert [s.exceptional for s in steps] == [False, False, False, True, False]
    assert [render(s.delta) for s in steps] == [
        "0", "0", "0", "w^3 + w^2 + w", "0",
    ]
    # every invariant change is attributed to an exceptional step
    for s in steps:
        assert s.exceptional == (not s.delta.is_zero())
    for s in steps:
        assert validate(s.config).ok


def test_pipeline_final_config():
    final = conic_pipeline_demo()[-1].config
    ids = sorted(c.id for c in final.curves)
    assert ids == ["B", "E1", "E3"]
    assert final.curve("B").self_int == 3
    assert final.curve("E1").self_int == -3
    assert final.curve("E3").self_int == 0
    assert final.curve("E3").alpha == F(1, 2)
    assert final.intersection("B", "E3") == 1
    assert final.intersection("E1", "E3") == 1
    assert final.intersection("B", "E1") == 0
    assert e_invariant(final).is_zero()


def test_pipeline_tuple_protocol():
    label, config, invariant = conic_pipeline_demo()[0]
    assert label == "plane conic"
    assert config == plane_conic()
    assert render(invariant) == "-(w^3 + w^2 + w)"


# ---- random generation -------------------------------------------------------


def test_candidate_centers_order():
    cfg = hirzebruch_case_b(0, F(1, 2), [F(-1)], 2)
    cs = candidate_centers(cfg)
    assert cs == [at_point("C1", "F1"), at_point("C2", "F1"),
                  on_curve("C1"), on_curve("C2"), on_curve("F1")]


def test_random_config_is_deterministic():
    for seed in (0, 1, 7, 42):
        assert random_config(seed) == random_config(seed)
    assert random_config(3, max_blowups=0) == random_config(3, max_blowups=0)


def test_random_config_contracts():
    for seed in range(25):
        cfg = random_config(seed)
        rep = validate(cfg)
        assert rep.ok
        assert is_connected(cfg)
        assert euler_complement(cfg) <= 0
        assert e_invariant(cfg).is_zero()


def test_random_config_blowups_stay_nonexceptional():
    # blowing up any non-exceptional candidate keeps the invariant zero
    cfg = random_config(5, max_blowups=0)
    from pvcalc.birational import blow_up
    for center in candidate_centers(cfg):
        if is_exceptional_center(cfg, center):
            continue
        assert e_invariant(blow_up(cfg, center)).is_zero()
