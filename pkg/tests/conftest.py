"""Shared fixtures, including the global strong-implies-weak ledger.

Any test that computes both a strong and a weak verdict for one instance
should call record_strong_weak(); a session-teardown hook rejects the run
if any instance was strongly connected but not weakly connected.
"""

import pytest

_VIOLATIONS: list[str] = []
_CHECKED = [0]


def record_strong_weak(tag: str, strong_ok: bool, weak_ok: bool) -> None:
    _CHECKED[0] += 1
    if strong_ok and not weak_ok:
        _VIOLATIONS.append(tag)


@pytest.fixture(scope="session", autouse=True)
def _strong_implies_weak_ledger():
    yield
    assert not _VIOLATIONS, (
        f"strong-implies-weak monotonicity violated on {len(_VIOLATIONS)} "
        f"instance(s): {_VIOLATIONS[:5]}"
    )
