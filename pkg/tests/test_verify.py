"""Cross-check harness, sweep driver, and reference fixture suite."""

import pytest

from z2z4.cyclic import cyclic_spec, enumerate_cyclic_specs
from z2z4.gf2 import BinPoly
from z2z4.verify import (
    cross_check,
    paper_suite,
    suite_json,
    suite_text,
    sweep,
    sweep_rows_csv,
    sweep_rows_json,
    sweep_text,
)
from z2z4.z4 import QuatPoly

X1 = BinPoly.parse("x+1")
BIN_ONE = BinPoly.parse("1")
Q_ONE = QuatPoly((1,))

CHECK_NAMES = (
    "cardinality",
    "type-structure",
    "type-counting",
    "shift-invariance",
    "gray-identity",
    "standard-form",
    "linearity",
    "kernel-set",
    "kernel-dim",
    "kernel-cyclic",
    "kernel-in-code",
    "kernel-candidates",
    "kernel-bounds",
    "kernel-intersection",
    "maximal-subcodes-linear",
    "x-projection",
    "y-projection",
    "y-projection-size",
    "kernel-projection",
    "kernel-upper-bound",
    "kernel-decomposition",
    "rank-value",
    "rank-candidates",
    "rank-lower-bound",
    "rank-decomposition",
    "rank-set",
    "rank-cyclic",
    "code-in-span",
    "span-projection",
    "order-two-subcode",
    "three-generators",
)


def _mixed_3():
    return cyclic_spec(
        1, 3, X1, BIN_ONE, Q_ONE, QuatPoly((3, 1)), QuatPoly((1, 1, 1))
    )


def test_cross_check_mixed_example():
    report = cross_check(_mixed_3())
    assert report.passed
    assert report.witness is None
    assert report.skipped == ()
    assert report.kernel_dim == 3
    assert report.rank == 6
    assert report.k_prime == QuatPoly((1, 1, 1))
    assert report.r == Q_ONE


def test_check_names_are_stable():
    report = cross_check(_mixed_3())
    assert tuple(name for name, _ in report.checks) == CHECK_NAMES


def test_sweep_is_deterministic():
    first = sweep(alpha_max=2, betas=(1, 3), workers=1)
    second = sweep(alpha_max=2, betas=(1, 3), workers=1)
    assert sweep_rows_csv(first) == sweep_rows_csv(second)
    assert sweep_text(first) == sweep_text(second)
    assert first.total == 8 + 24 + 13 + 39
    assert first.guarded == 0
    assert first.passed


def test_sweep_worker_count_does_not_change_output():
    serial = sweep(alpha_max=1, betas=(1, 3), workers=1)
    pooled = sweep(alpha_max=1, betas=(1, 3), workers=2)
    assert sweep_rows_csv(serial) == sweep_rows_csv(pooled)


def test_sweep_guard_skips_large_codes():
    summary = sweep(alpha_max=2, betas=(3,), max_words=16, workers=1)
    assert summary.guarded > 0
    assert summary.passed
    for row in summary.rows:
        if row.guarded:
            assert row.report is None
            assert row.ok
    text = sweep_text(summary)
    assert "guarded" in text
    csv_out = sweep_rows_csv(summary)
    assert ",,,,guarded" in csv_out


def test_sweep_type_filter():
    summary = sweep(
        alpha_max=2, alpha_min=2, betas=(7,), type_filter=(2, 3), workers=1
    )
    expected = list(enumerate_cyclic_specs(2, 7, type_filter=(2, 3)))
    assert [row.spec for row in summary.rows] == expected
    assert summary.total == 6
    assert summary.passed


def test_sweep_rows_json_verdicts():
    summary = sweep(alpha_max=1, betas=(1,), workers=1)
    rows = sweep_rows_json(summary)
    assert len(rows) == summary.total
    assert all(d["verdict"] == "pass" for d in rows)
    assert all(d["alpha"] == 1 and d["beta"] == 1 for d in rows)


def test_sweep_csv_header():
    summary = sweep(alpha_max=1, betas=(1,), workers=1)
    header = sweep_rows_csv(summary).splitlines()[0]
    assert header == (
        "alpha,beta,b,ell,f,h,g,gamma,delta,kappa,kernel_dim,rank,k_prime,r,verdict"
    )


@pytest.fixture(scope="module")
def suite_report():
    return paper_suite()


def test_suite_fixture_ids(suite_report):
    assert [f.fixture_id for f in suite_report.fixtures] == [
        f"F{i}" for i in range(1, 10)
    ]


def test_suite_all_pass(suite_report):
    assert all(f.passed for f in suite_report.fixtures)
    assert suite_report.ok()


def test_suite_erratum_is_flagged_not_failed(suite_report):
    assert suite_report.flagged == ("F9",)
    flagged = suite_report.fixtures[-1]
    assert flagged.passed and flagged.flagged
    assert not suite_report.ok(strict=True)


def test_suite_text_rendering(suite_report):
    text = suite_text(suite_report)
    assert "F1" in text and "F9" in text
    assert "(flagged)" in text
    assert text.rstrip().endswith("flagged: F9")
    strict = suite_text(suite_report, strict=True)
    assert "suite failed" in strict


def test_suite_json_shape(suite_report):
    doc = suite_json(suite_report)
    assert doc["ok"] is True
    assert doc["strict"] is False
    assert len(doc["fixtures"]) == 9
    assert doc["fixtures"][8]["flagged"] is True
    strict = suite_json(suite_report, strict=True)
    assert strict["ok"] is False
