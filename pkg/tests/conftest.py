from __future__ import annotations

import pytest

from descent_quiver.presentation import QuiverPresentation, quiver_presentation

_CACHE: dict[str, QuiverPresentation] = {}


@pytest.fixture(scope="session")
def pres():
    """Presentation factory with session-wide caching."""

    def get(label: str) -> QuiverPresentation:
        q = _CACHE.get(label)
        if q is None:
            q = _CACHE[label] = quiver_presentation(label)
        return q

    return get
