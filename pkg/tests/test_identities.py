"""The identity catalog: entry point behavior plus a small-n sweep."""

import pytest

from cumulantcalc.identities import (
    IDENTITY_CATALOG,
    Report,
    experimental_thm2_multivariate,
    identity_limit,
    identity_names,
    run_catalog,
    verify_identity,
)
from cumulantcalc.limits import ResourceLimitError


def test_catalog_is_complete():
    expected = {
        "free2boolean", "class2free", "class2boolean", "boolean2free",
        "free2class_tutte", "thm1_mono2boolean", "thm1_mono2free",
        "thm2_free2mono", "thm2_boolean2mono", "thm2_class2mono",
        "thm3_boolean2class_tutte", "thm4_cyclecruns", "cor_runs",
        "moment_cumulant_K", "moment_cumulant_R", "moment_cumulant_B",
        "moment_cumulant_H", "mobius_inversions", "series_B", "series_R",
        "swap_identities", "tilde_lemma", "monotone_flow_integer",
        "lenczewski_sum", "beta_expansion", "thm5_reducible",
        "thm5_nonesting", "thm5_depth2", "cor9_factorial",
        "prop10_eulerian", "determinant_formulas", "logbessel_carlitz",
    }
    assert set(identity_names()) == expected
    for name in expected:
        assert identity_limit(name) >= 5


def test_unknown_identity_and_bad_n():
    with pytest.raises(ValueError):
        verify_identity("bogus", 3)
    with pytest.raises(ValueError):
        verify_identity("free2boolean", 0)
    with pytest.raises(ResourceLimitError):
        verify_identity("moment_cumulant_K", 7)


def test_report_serialization():
    rep = verify_identity("cor9_factorial", 4)
    d = rep.to_dict()
    assert d["identity"] == "cor9_factorial"
    assert d["holds"] is True
    assert d["detail"]["sum"] == "6"
    assert "witness" not in d


def test_full_catalog_small_n():
    reports = run_catalog(4)
    assert len(reports) == 4 * len(IDENTITY_CATALOG)
    for rep in reports:
        assert isinstance(rep, Report)
        assert rep.holds, (rep.identity, rep.n, rep.witness)


def test_run_catalog_clamps_limits():
    reports = run_catalog(9, names=["moment_cumulant_K"])
    assert max(r.n for r in reports) == 6
    with pytest.raises(ResourceLimitError):
        run_catalog(9, names=["moment_cumulant_K"], strict_limits=True)
    with pytest.raises(ValueError):
        run_catalog(3, names=["nope"])


def test_catalog_examples_from_the_identity_descriptions():
    # a couple of named spot checks at specific n
    assert verify_identity("thm1_mono2boolean", 4).holds
    assert verify_identity("thm4_cyclecruns", 3).holds
    rep = verify_identity("cor9_factorial", 5)
    assert rep.holds and rep.detail["sum"] == "24"
    rep = verify_identity("logbessel_carlitz", 5)
    assert rep.detail["sequence"] == ["1", "-1", "4", "-33", "456"]


def test_experimental_checker_reports_without_asserting():
    for n in range(1, 5):
        rep = experimental_thm2_multivariate(n)
        assert rep.identity == "thm2_multivariate_experimental"
        assert isinstance(rep.holds, bool)
        assert rep.detail == {"experimental": True}
    assert "thm2_multivariate_experimental" not in identity_names()
    with pytest.raises(ResourceLimitError):
        experimental_thm2_multivariate(8)


def test_deterministic_reports():
    a = verify_identity("series_B", 6)
    b = verify_identity("series_B", 6)
    assert a == b
