import math

import pytest

import meridian4 as m


def test_inner_signature():
    assert m.inner((1, 0, 0, 0), (1, 0, 0, 0)) == 1.0
    assert m.inner((0, 0, 0, 1), (0, 0, 0, 1)) == -1.0


def test_mt_family_is_trapped():
    patch = m.mt_family(-1.0, 0.0, 1.0, "plus", 0.0, 0.0, -0.5, "plus", u_range=(0.2, 3.0))
    report = m.verify_marginally_trapped(patch, 40, 10)
    assert report["passed"]
    p = patch.point(1.0, 1.0)
    assert abs(p["HdotH"]) < 1e-12
    assert p["kappa"] == pytest.approx(0.0, abs=1e-12)


def test_non_trapped_parabolic_point():
    patch = m.parabolic("u", "-u", 0.5, 2.0, "1", 0.0, 1.0)
    assert patch.point(1.0, 0.0)["HdotH"] == pytest.approx(0.125)


def test_section_curvature():
    assert m.section_curvature(0.0, 0.0, -0.5, "plus") == pytest.approx(-1.0)


def test_csv_rows():
    patch = m.cone_family(-0.5, 0.0, "1", 0.0, 6.0)
    text = patch.csv(3, 4)
    lines = text.strip().split("\n")
    assert lines[0].startswith("u,v,x1")
    assert len(lines) == 13


def test_errors():
    with pytest.raises(m.ParamError, match="c ≠ 0"):
        m.mt_family(-1.0, 0.0, 0.0, "plus", 0.0, 0.0, -0.5, "plus")
    with pytest.raises(m.UsageError):
        m.parabolic("u+", "-u", 0.5, 2.0, "1", 0.0, 1.0)
    with pytest.raises(m.MeridianError):
        m.section_curvature(0.0, 0.0, 1.0, "plus")


def test_suite_runs():
    reports = m.run_suite()
    assert len(reports) == 11
    assert all(math.isfinite(r["max_residual"]) for r in reports)
