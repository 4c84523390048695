"""Tests for nef-diagonal verdicts, the del Pezzo table, and the scans.

Every NotNef witness asserted here was re-derived by hand before freezing
(chi values through the closed hypersurface form, bounds as (n+1) * degree,
covering degrees from the anticanonical double/2^n covers).
"""

from __future__ import annotations

import pytest

from nefkit.chern import CIType, euler_ci_formula
from nefkit.diagonal import (
    DELPEZZO_TABLE,
    OPEN_TWO_QUADRICS_REFERENCE,
    InvalidDelPezzo,
    Reason,
    ScanViolation,
    Status,
    Verdict,
    cp_fibration_obstruction,
    nef_big_filter,
    projection_bound_violated,
    scan_ci,
    verdict_ci,
    verdict_curve,
    verdict_delpezzo,
)


# ---------------------------------------------------------------------------
# Verdict plumbing


def test_verdict_validation():
    with pytest.raises(ValueError):
        Verdict(Status.NEF, Reason.NEGATIVE_SELF_INTERSECTION, "mismatched reason")
    with pytest.raises(ValueError):
        Verdict(Status.NOT_NEF, Reason.NEGATIVE_SELF_INTERSECTION, "bad", {"chi": 5})
    with pytest.raises(ValueError):
        Verdict(
            Status.NOT_NEF, Reason.PROJECTION_BOUND, "bad", {"chi": 5, "bound": 10}
        )
    with pytest.raises(ValueError):
        Verdict(
            Status.NOT_NEF,
            Reason.NEGATIVE_EFFECTIVE_PAIR,
            "bad",
            {"classes": ["a", "b"], "value": 1},
        )
    with pytest.raises(ValueError):
        Verdict(Status.OPEN, Reason.OPEN_QUESTION, "bad", {})


def test_verdict_payload_round_trips_to_plain_data():
    v = verdict_ci(CIType((4,), 3))
    payload = v.to_payload()
    assert payload["status"] == "NotNef"
    assert payload["reason"] == "NegativeSelfIntersection"
    assert payload["witness"] == {"chi": -56}


# ---------------------------------------------------------------------------
# Curves


def test_verdict_curve():
    assert verdict_curve(0).status is Status.NEF
    assert verdict_curve(0).reason is Reason.HOMOGENEOUS
    assert verdict_curve(1).reason is Reason.GROUP_VARIETY
    high = verdict_curve(2)
    assert high.status is Status.NOT_NEF
    assert high.witness["chi"] == -2
    with pytest.raises(ValueError):
        verdict_curve(-1)


# ---------------------------------------------------------------------------
# Projection bound


def test_projection_bound_examples():
    violated, chi, bound = projection_bound_violated(CIType((3,), 4))
    assert (violated, chi, bound) == (True, 27, 15)
    violated, chi, bound = projection_bound_violated(CIType((2, 2), 4))
    assert (violated, chi, bound) == (False, 12, 20)


# ---------------------------------------------------------------------------
# Complete intersection verdicts


def test_verdict_projective_space_and_quadrics():
    for n in (1, 2, 5, 8):
        assert verdict_ci(CIType((), n)).reason is Reason.HOMOGENEOUS
        assert verdict_ci(CIType((2,), n)).reason is Reason.HOMOGENEOUS


def test_verdict_curves_through_ci():
    cubic = verdict_ci(CIType((3,), 1))
    assert cubic.status is Status.NEF
    assert cubic.reason is Reason.GROUP_VARIETY
    assert verdict_ci(CIType((2, 2), 1)).reason is Reason.GROUP_VARIETY
    genus4 = verdict_ci(CIType((2, 3), 1))
    assert genus4.status is Status.NOT_NEF
    assert genus4.witness["chi"] == -6


def test_verdict_odd_two_quadrics_open():
    for n in (3, 5, 7, 11):
        v = verdict_ci(CIType((2, 2), n))
        assert v.status is Status.OPEN
        assert v.witness["reference"] == OPEN_TWO_QUADRICS_REFERENCE


def test_verdict_exception_table_hits():
    cubic_surface = verdict_ci(CIType((3,), 2))
    assert cubic_surface.status is Status.NOT_NEF
    assert cubic_surface.reason is Reason.NEGATIVE_EFFECTIVE_PAIR
    assert cubic_surface.witness == {"classes": ["(-1)-curve", "(-1)-curve"], "value": -1}

    k3 = verdict_ci(CIType((2, 2, 2), 2))
    assert k3.status is Status.NOT_NEF
    assert k3.reason is Reason.K3_SURFACE
    assert k3.witness["table_entry"]

    for n in (2, 4, 6, 10):
        planes = verdict_ci(CIType((2, 2), n))
        assert planes.reason is Reason.NEGATIVE_EFFECTIVE_PAIR
        assert planes.witness == {"classes": ["Lambda_1", "Lambda_2"], "value": -1}


def test_verdict_sign_and_bound_cases():
    quartic = verdict_ci(CIType((4,), 3))
    assert quartic.reason is Reason.NEGATIVE_SELF_INTERSECTION
    assert quartic.witness == {"chi": -56}

    cubic4 = verdict_ci(CIType((3,), 4))
    assert cubic4.reason is Reason.PROJECTION_BOUND
    assert cubic4.witness == {"chi": 27, "bound": 15, "cover_degree": 3}


def test_verdict_witnesses_recheck_on_scan_range():
    from nefkit.diagonal import _ci_grid

    for ci in _ci_grid(8, 5, 3):
        v = verdict_ci(ci)
        if v.status is not Status.NOT_NEF:
            continue
        if v.reason is Reason.NEGATIVE_SELF_INTERSECTION:
            assert v.witness["chi"] == euler_ci_formula(ci) < 0, ci
        elif v.reason is Reason.PROJECTION_BOUND:
            check = projection_bound_violated(ci)
            assert v.witness["chi"] == check.chi
            assert v.witness["bound"] == check.bound
            assert check.violated, ci
        elif v.reason is Reason.NEGATIVE_EFFECTIVE_PAIR:
            assert v.witness["value"] < 0, ci
        else:
            assert v.reason is Reason.K3_SURFACE
            assert ci == CIType((2, 2, 2), 2)


def test_verdict_ci_rejects_dimension_zero():
    with pytest.raises(ValueError):
        verdict_ci(CIType((2,), 0))


# ---------------------------------------------------------------------------
# Del Pezzo manifolds


def test_delpezzo_validity_table():
    for degree in (1, 2, 3, 4):
        verdict_delpezzo(9, degree)
    verdict_delpezzo(6, 5)
    verdict_delpezzo(4, 6)
    verdict_delpezzo(3, 7)
    for n, degree in ((7, 5), (5, 6), (4, 7), (2, 3), (3, 8), (3, 0)):
        with pytest.raises(InvalidDelPezzo):
            verdict_delpezzo(n, degree)


def test_delpezzo_degree_one_and_two():
    odd = verdict_delpezzo(3, 1)
    assert odd.reason is Reason.NEGATIVE_SELF_INTERSECTION
    assert odd.witness == {"chi": -38}
    even = verdict_delpezzo(4, 1)
    assert even.reason is Reason.PROJECTION_BOUND
    assert even.witness == {"chi": 213, "bound": 80, "cover_degree": 16}

    assert verdict_delpezzo(3, 2).witness == {"chi": -16}
    even2 = verdict_delpezzo(4, 2)
    assert even2.reason is Reason.PROJECTION_BOUND
    assert even2.witness["cover_degree"] == 2
    assert even2.witness["chi"] > even2.witness["bound"] == 10


def test_delpezzo_delegates_to_ci():
    assert verdict_delpezzo(3, 3) == verdict_ci(CIType((3,), 3))
    assert verdict_delpezzo(5, 4) == verdict_ci(CIType((2, 2), 5))
    assert verdict_delpezzo(4, 4).reason is Reason.NEGATIVE_EFFECTIVE_PAIR


def test_delpezzo_degree_five_ladder():
    assert verdict_delpezzo(3, 5).reason is Reason.FAKE_PROJECTIVE_SPACE
    four = verdict_delpezzo(4, 5)
    assert four.witness == {"classes": ["sigma(3,1)", "sigma(2,2)"], "value": -1}
    five = verdict_delpezzo(5, 5)
    assert five.witness == {"classes": ["tau(3,-1)", "tau(2,1)"], "value": -1}
    assert verdict_delpezzo(6, 5).reason is Reason.HOMOGENEOUS


def test_delpezzo_degree_six_and_seven():
    for n, variant in ((3, "P1xP1xP1"), (3, "P(T_P2)"), (4, "P2xP2"), (3, None)):
        v = verdict_delpezzo(n, 6, variant)
        assert v.status is Status.NEF
        assert v.reason is Reason.HOMOGENEOUS
        if variant:
            assert variant in v.detail
    blowup = verdict_delpezzo(3, 7)
    assert blowup.status is Status.NOT_NEF
    assert blowup.reason is Reason.BIRATIONAL_CONTRACTION
    assert "blow-down" in str(blowup.witness["contraction"])


def test_delpezzo_nef_golden_set():
    pairs = [(n, d) for d in (1, 2, 3, 4) for n in range(3, 13)]
    pairs += [(n, 5) for n in range(3, 7)]
    pairs += [(3, 6), (4, 6), (3, 7)]
    nef = {(n, d) for n, d in pairs if verdict_delpezzo(n, d).status is Status.NEF}
    assert nef == {(3, 5), (6, 5), (3, 6), (4, 6)}


def test_delpezzo_table_shape():
    assert [row.degree for row in DELPEZZO_TABLE] == [1, 2, 3, 4, 5, 6, 7]
    assert DELPEZZO_TABLE[6].description == "the blow-up of P^3 at a point"
    assert DELPEZZO_TABLE[5].variants == ("P1xP1xP1", "P2xP2", "P(T_P2)")


# ---------------------------------------------------------------------------
# Nef-and-big filter


def test_nef_big_filter():
    assert nef_big_filter("ci", CIType((), 4)) is True
    assert nef_big_filter("ci", CIType((2,), 5)) is True
    assert nef_big_filter("ci", CIType((2,), 4)) is False
    assert nef_big_filter("ci", CIType((2, 2), 3)) is False
    assert nef_big_filter("delpezzo", (3, 5)) is True
    assert nef_big_filter("delpezzo", (4, 5)) is False
    assert nef_big_filter("delpezzo", (3, 6)) is False
    with pytest.raises(ValueError):
        nef_big_filter("ci", (2, 3))
    with pytest.raises(InvalidDelPezzo):
        nef_big_filter("delpezzo", (9, 5))
    with pytest.raises(ValueError):
        nef_big_filter("surface", CIType((), 2))


def test_nef_big_filter_implies_nef_verdict():
    for n in range(1, 10):
        if nef_big_filter("ci", CIType((2,), n)):
            assert verdict_ci(CIType((2,), n)).status is Status.NEF
    assert verdict_delpezzo(3, 5).status is Status.NEF


# ---------------------------------------------------------------------------
# Fibration obstruction


def test_cp_fibration_obstruction_base_case():
    report = cp_fibration_obstruction(1)
    assert report.p_total == (1, 0, 1, -4, 1, 0, 1)
    assert report.p_fiber == (4,)
    assert report.remainder == (0, 16)
    assert report.nonzero


def test_cp_fibration_obstruction_derived_fiber():
    report = cp_fibration_obstruction(2)
    assert report.p_fiber == (1, 0, 6, 0, 1)
    assert report.total_dimension == 5
    assert report.nonzero


def test_cp_fibration_obstruction_gaussian_evaluation():
    # Independent oracle: remainder mod (1+t^2) vanishes iff p(i) = 0, with i
    # the imaginary unit; evaluate exactly over the Gaussian integers.
    def eval_at_i(coeffs):
        re = sum(c * (-1) ** (k // 2) for k, c in enumerate(coeffs) if k % 2 == 0)
        im = sum(c * (-1) ** (k // 2) for k, c in enumerate(coeffs) if k % 2 == 1)
        return re, im

    for n in range(1, 11):
        report = cp_fibration_obstruction(n)
        tre, tim = eval_at_i(report.p_total)
        fre, fim = eval_at_i(report.p_fiber)
        prod = (tre * fre - tim * fim, tre * fim + tim * fre)
        assert prod != (0, 0), n
        assert eval_at_i(report.remainder) == prod, n

    with pytest.raises(ValueError):
        cp_fibration_obstruction(0)


# ---------------------------------------------------------------------------
# Scans


def test_scan_small_grid_clean():
    report = scan_ci(6, 4, 3, quadrics_max_codimension=4)
    assert report.cases == 6 * (1 + 3 + 6 + 10)
    assert report.law_checks["verdict_classified"] == report.cases
    assert report.law_checks["hypersurface_sign"] > 0
    assert report.law_checks["even_dimension_bound"] > 0
    assert sum(report.verdict_counts.values()) == report.cases


def test_scan_verdict_counts_small():
    report = scan_ci(6, 4, 3, quadrics_max_codimension=4)
    # Nef: P^n (6) + quadric (6) + elliptic curves (3;1) and (2,2;1).
    assert report.verdict_counts["Nef"] == 14
    # Open: (2,2) in dimensions 3 and 5.
    assert report.verdict_counts["Open"] == 2


def test_scan_rejects_bad_bounds():
    with pytest.raises(ValueError):
        scan_ci(0, 6, 5)


def test_scan_violation_formatting():
    err = ScanViolation("hypersurface_sign", CIType((3,), 2), "chi = 9")
    assert "hypersurface_sign" in str(err)
    assert err.law == "hypersurface_sign"
