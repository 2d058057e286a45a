from __future__ import annotations

import pytest

from zetacf.coeff_core import bernoulli_table


@pytest.fixture(scope="session")
def bern520():
    """One shared dual-checked Bernoulli table for the heavier sweeps."""
    return bernoulli_table(520)
