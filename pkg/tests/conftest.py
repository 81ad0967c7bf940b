import pytest

from muxfec.muxcode import build_mux_code, select_parameters

SEED = 0


@pytest.fixture(scope="session")
def example_code():
    """The worked-example code: (T_v, T_u, B, N) = (12, 6, 4, 2)."""
    return build_mux_code(select_parameters(12, 6, 4, 2), seed=SEED)


@pytest.fixture(scope="session")
def random_dominant_code():
    """(T_v, T_u, B, N) = (12, 6, 4, 3), the B < 2N-1 regime."""
    return build_mux_code(select_parameters(12, 6, 4, 3), seed=SEED)
