import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticerect.allvalues import (
    MEMORY_SLOT_FACTOR,
    CoefficientArrays,
    DifferenceChannel,
    ProgressionUpdate,
    build_coefficient_arrays,
    compute_table,
    mobius_convolve,
    recover_table,
)
from latticerect.onevalue import f0, f_baseline, f_divisorlayer
from latticerect.sieves import build_sieve


def direct_coefficient_arrays(N):
    """Literal quadruple enumeration of the G arrays (no primitivity)."""
    G0 = [0] * (N + 1)
    G1 = [0] * (N + 1)
    G2 = [0] * (N + 1)
    for a in range(2, N):
        for b in range(1, a):
            for x in range(1, (N - b) // a + 1):
                for y in range(1, x + 1):
                    L = a * x + b * y
                    if L > N:
                        break
                    K = b * x + a * y
                    mult = 2 if x == y else 4
                    G0[L] += mult
                    G1[L] += mult * (L + K)
                    G2[L] += mult * L * K
    return G0, G1, G2


@pytest.mark.parametrize("N", [1, 2, 3, 10, 50, 200])
def test_coefficient_arrays_match_quadruple_enumeration(N):
    want0, want1, want2 = direct_coefficient_arrays(N)
    G = build_coefficient_arrays(N)
    assert G.G0 == want0
    assert G.G1 == want1
    assert G.G2 == want2


def test_pure_pipeline_matches_baseline():
    N = 120
    G = build_coefficient_arrays(N)
    E = mobius_convolve(G, build_sieve(N))
    table = recover_table(E)
    assert len(table) == N
    for n in range(1, N + 1):
        assert table[n - 1] == f_baseline(n), f"n={n}"


@pytest.mark.parametrize("N", [64, 1000, 4096])
def test_table_matches_divisorlayer(N):
    table = compute_table(N)
    for n in (1, 2, 3, N // 3, N // 2, N - 1, N):
        assert table[n - 1] == f_divisorlayer(n), f"n={n}"
    # spot-check random interior points too
    rng = random.Random(N)
    for n in (rng.randint(1, N) for _ in range(25)):
        assert table[n - 1] == f_divisorlayer(n), f"n={n}"


def test_native_and_pure_tables_agree():
    native = compute_table(400)
    pure = compute_table(400, check_buffers=True)
    assert native == pure


def test_check_buffers_rebuild_is_clean():
    # Two consecutive pure builds with per-step buffer assertions: the
    # flush-and-clear contract must hold on every step of both passes.
    first = build_coefficient_arrays(300, check_buffers=True)
    second = build_coefficient_arrays(300, check_buffers=True)
    assert first.G0 == second.G0
    assert first.G1 == second.G1
    assert first.G2 == second.G2
    checksum = sum(first.G0) + sum(first.G1) + sum(first.G2)
    want0, want1, want2 = direct_coefficient_arrays(300)
    assert checksum == sum(want0) + sum(want1) + sum(want2)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_progression_update_property(data):
    length = data.draw(st.integers(8, 200))
    degree = data.draw(st.integers(0, 2))
    ch = DifferenceChannel(length, degree)
    m = data.draw(st.integers(1, 12))
    updates = []
    for _ in range(data.draw(st.integers(1, 6))):
        step = m
        lo = data.draw(st.integers(0, 5))
        hi = data.draw(st.integers(lo - 1, lo + 20))
        max_base = length - 2 - step * (hi + 1)
        if max_base < 0:
            continue
        base = data.draw(st.integers(0, max_base))
        c = [data.draw(st.integers(-50, 50)) for _ in range(3)]
        if degree < 2:
            c[2] = 0
        if degree < 1:
            c[1] = 0
        updates.append(ProgressionUpdate(base, step, lo, hi,
                                         c[0], c[1], c[2]))
    want = [0] * length
    got = [0] * length
    for upd in updates:
        upd.apply_direct(want)
        ch.add(upd)
    ch.flush(m, got)
    assert got == want
    assert ch.is_clear()


def test_progression_update_validation():
    ch = DifferenceChannel(32, 1)
    with pytest.raises(ValueError):
        ch.add(ProgressionUpdate(0, 0, 1, 3, 1))
    with pytest.raises(ValueError):
        ch.add(ProgressionUpdate(0, 1, 1, 3, 1, 0, 5))  # degree too high
    with pytest.raises(IndexError):
        ch.add(ProgressionUpdate(30, 2, 0, 10, 1))
    with pytest.raises(ValueError):
        DifferenceChannel(10, 3)


def test_memory_slot_factor_documented():
    # Auxiliary exact-integer slots in the pure pipeline, counted from the
    # construction: 3 G arrays + 6 difference buffers + (at stage 2)
    # 3 E arrays, all of length N + O(sqrt(N)).  Peak < 13 N slots.
    assert MEMORY_SLOT_FACTOR == 13
    for N in (100, 10 ** 4):
        B = int(N ** 0.5)
        stage1 = 3 * (N + 1) + 6 * (N + 2 * B + 3) + 6 * (2 * B + 1)
        stage2 = 6 * (N + 1)
        assert max(stage1, stage2) < MEMORY_SLOT_FACTOR * N


def test_compute_table_rejects_bad_n():
    with pytest.raises(ValueError):
        compute_table(0)
    with pytest.raises(ValueError):
        build_coefficient_arrays(-5)
