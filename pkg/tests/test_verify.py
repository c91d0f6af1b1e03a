import pytest

from pythspin import verify


@pytest.mark.parametrize("suite", list(verify.SUITES))
def test_suite_passes(suite):
    results = verify.run([suite])
    assert results
    failed = [c.name for c in results if not c.ok]
    assert not failed


def test_run_all_is_deterministic():
    assert verify.run("all", seed=3) == verify.run("all", seed=3)
