from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"
ZEROS = DATA / "zeta_zeros.txt"


@pytest.fixture(scope="session")
def zero_table():
    from gapgraph.zeros import load_zeros

    if not ZEROS.exists():
        pytest.fail(f"missing fixture {ZEROS}; run scripts/make_zero_fixture.py")
    return load_zeros(ZEROS)
