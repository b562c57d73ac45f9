import time

import pytest

from latticerect.oracle import (
    DEFAULT_CONFIG,
    OracleConfig,
    f_oracle_geometric,
    f_oracle_quadruples,
)

# First values of the sequence (rectangles in an n x n grid of points),
# [DERIVED] from the frozen golden harness in this repository.
KNOWN_SMALL = {0: 0, 1: 0, 2: 1, 3: 10, 4: 44, 5: 130, 6: 313, 7: 640,
               8: 1192, 9: 2044, 10: 3305}


def test_oracles_match_known_small_values():
    for n, want in KNOWN_SMALL.items():
        assert f_oracle_quadruples(n) == want
        assert f_oracle_geometric(n) == want


def test_oracles_agree_up_to_60():
    for n in range(61):
        assert f_oracle_quadruples(n) == f_oracle_geometric(n), f"n={n}"


def test_geometric_oracle_completes_at_limit():
    t0 = time.monotonic()
    value = f_oracle_geometric(60)
    elapsed = time.monotonic() - t0
    assert value == f_oracle_quadruples(60)
    assert elapsed < 60.0


def test_oracles_refuse_oversized_inputs():
    with pytest.raises(ValueError):
        f_oracle_geometric(DEFAULT_CONFIG.max_n_geometric + 1)
    with pytest.raises(ValueError):
        f_oracle_quadruples(DEFAULT_CONFIG.max_n_quadruple + 1)
    with pytest.raises(ValueError):
        f_oracle_geometric(-1)
    with pytest.raises(ValueError):
        f_oracle_quadruples(-1)


def test_config_overrides_limits():
    cfg = OracleConfig(max_n_quadruple=10, max_n_geometric=10)
    assert f_oracle_quadruples(10, cfg) == KNOWN_SMALL[10]
    assert f_oracle_geometric(10, cfg) == KNOWN_SMALL[10]
    with pytest.raises(ValueError):
        f_oracle_quadruples(11, cfg)
    with pytest.raises(ValueError):
        f_oracle_geometric(11, cfg)
