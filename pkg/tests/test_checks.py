"""Every named identity check passes at the fast tier."""

import pytest

from oddlen.checks import CHECKS, CheckContext, run_checks


@pytest.mark.parametrize("name", sorted(CHECKS))
def test_named_check_passes(fast_ctx, name):
    rows = list(CHECKS[name](fast_ctx))
    assert rows, f"{name} produced no rows"
    bad = [r for r in rows if not r.ok]
    assert not bad, f"{name}: {len(bad)} failing rows, first: {bad[0]}"


def test_run_checks_filters_by_name():
    ctx = CheckContext.for_tier("fast")
    rows = list(run_checks(ctx, only=["remark-values"]))
    assert rows
    assert {r.check for r in rows} == {"remark-values"}


def test_run_checks_rejects_unknown_names():
    ctx = CheckContext.for_tier("fast")
    with pytest.raises(KeyError):
        list(run_checks(ctx, only=["no-such-check"]))


def test_family_restriction_drops_family_specific_rows():
    ctx = CheckContext.for_tier("fast")
    a_only = CheckContext(nmax=dict(ctx.nmax), families=("A",))
    rows = list(CHECKS["d-closed-match"](a_only))
    assert rows == []


def test_rank_cap_restricts_sweeps(fast_ctx):
    small = CheckContext(nmax={"A": 3, "B": 3, "D": 3}, families=("A", "B", "D"))
    rows = list(CHECKS["a-closed-match"](small))
    assert rows and max(r.n for r in rows) == 3
