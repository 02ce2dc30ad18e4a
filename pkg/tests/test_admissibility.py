from __future__ import annotations

import pytest

import massadmit.admissibility as adm
from massadmit.admissibility import (
    TABLE1,
    Tuple4,
    Verdict,
    bounds,
    check,
    check_many,
    mvz_upper,
    ramos_lower,
    search_min_d,
    theorem2_bound,
)
from massadmit.dickson import euler_class
from massadmit.errors import BudgetExceeded, NotFound, VerificationError
from massadmit.index import membership_fast


def test_tuple_validation():
    for bad in [(0, 1, 1, 1), (3, -1, 1, 1), (3, 2, 1, 1.5)]:
        with pytest.raises(ValueError):
            Tuple4(*bad)


def test_check_examples():
    assert check(Tuple4(8, 3, 2, 4)).verdict is Verdict.CERTIFIED
    assert check(Tuple4(9, 3, 3, 3)).verdict is Verdict.CERTIFIED
    rep = check(Tuple4(3, 2, 2, 2))
    assert rep.verdict is Verdict.INCONCLUSIVE and rep.witness is None


def test_inapplicable():
    rep = check(Tuple4(5, 2, 3, 1))
    assert rep.verdict is Verdict.INAPPLICABLE and "k > l" in rep.note
    assert check(Tuple4(4, 4, 1, 1)).verdict is Verdict.INAPPLICABLE


def test_bound_examples():
    assert theorem2_bound(2, 4) == 8
    assert theorem2_bound(2, 15) == 23
    assert all(theorem2_bound(1, j) == j for j in range(1, 40))
    assert ramos_lower(2, 2) == 3
    assert ramos_lower(1, 1) == 1
    assert ramos_lower(15, 2) == 23
    assert mvz_upper(4, 2) == 8
    assert all(mvz_upper(j, 1) == j for j in range(1, 40))
    assert mvz_upper(3, 3) == 9
    with pytest.raises(ValueError):
        ramos_lower(0, 2)


def test_bounds_are_ordered():
    for k in range(1, 6):
        for j in range(1, 40):
            b = bounds(k, j)
            assert b.ramos_lower <= b.theorem2_bound == b.mvz_upper


def test_search_examples():
    assert search_min_d(2, 3, 32) == 5
    for j in range(1, 12):
        assert search_min_d(1, j, 32) == j
    with pytest.raises(NotFound):
        search_min_d(2, 2, 3)


def test_search_is_minimal_by_brute_force():
    for k in (1, 2, 3):
        for j in range(1, 7):
            d = search_min_d(k, j, 200)
            e = euler_class(k, j)
            first = next(dd for dd in range(1, 200) if not membership_fast(e, dd).member)
            assert d == first


def test_search_with_oracle():
    assert search_min_d(2, 2, 10, with_oracle=True) == 4
    assert search_min_d(1, 5, 10, with_oracle=True) == 5


def test_method_both_and_oracle():
    rep = check(Tuple4(6, 2, 2, 2), "both")
    assert rep.certified and rep.witness is not None
    rep = check(Tuple4(6, 2, 2, 2), "oracle")
    assert rep.certified and rep.witness is None
    assert check(Tuple4(3, 2, 2, 2), "both").verdict is Verdict.INCONCLUSIVE
    with pytest.raises(ValueError):
        check(Tuple4(6, 2, 2, 2), "guess")


def test_budget_degrades_to_fast(caplog):
    rep = check(Tuple4(8, 3, 2, 4), "oracle", budget=10)
    assert rep.certified and rep.degraded and "oracle skipped" in rep.note
    assert "budget" in caplog.text


def test_disagreement_is_loud(monkeypatch):
    real = adm.membership_oracle

    def flipped(*args, **kw):
        v = real(*args, **kw)
        return type(v)(not v.member, v.method, None, v.degree_checked)

    monkeypatch.setattr(adm, "membership_oracle", flipped)
    with pytest.raises(VerificationError):
        check(Tuple4(6, 2, 2, 2), "both")


def test_budget_error_carries_sizes():
    e = BudgetExceeded(100, 10)
    assert e.cells == 100 and "100" in str(e)


def test_check_many_sorted_and_parallel():
    tuples = [Tuple4(*row) for row in reversed(TABLE1[:3])]
    serial = check_many(tuples)
    parallel = check_many(tuples, workers=2)
    assert [r.tuple for r in serial] == sorted(tuples, key=lambda t: (t.d, t.ell, t.k, t.j))
    assert serial == parallel


def test_report_equality_ignores_elapsed():
    a = check(Tuple4(8, 3, 2, 4))
    b = check(Tuple4(8, 3, 2, 4))
    assert a == b


def test_k_above_l_is_not_judged_by_the_fast_path():
    # the fast path would wrongly report these as escaping the ideal
    for row in [(3, 1, 2, 1), (4, 1, 2, 2)]:
        assert check(Tuple4(*row)).verdict is Verdict.INAPPLICABLE


def test_row_17_14_2_15_lies_in_the_ideal():
    """Why this printed table row cannot be certified by the criterion.

    Every term of e_{2,15} has degree 43, so one exponent is at least 22 >= 17,
    and x_i^17 itself is in the ideal by the cofactor identity.  The bound for
    j = 15 = 2^3 + 7 is 23, which does certify.
    """
    from massadmit.index import cofactor_identity_check

    e = euler_class(2, 15).poly
    assert (e.exponents.max(axis=1) >= 17).all()
    assert cofactor_identity_check(17, 14, 1) and cofactor_identity_check(17, 14, 2)
    assert check(Tuple4(17, 14, 2, 15)).verdict is Verdict.INCONCLUSIVE
    assert check(Tuple4(23, 14, 2, 15)).certified
    assert check(Tuple4(17, 14, 2, 9)).certified
