from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from pfpower import (
    DegenerateGameError,
    GameSpec,
    NotMergeableError,
    TieRule,
    minimal_winning_coalitions,
    minimal_winning_embedded_coalitions,
)
from pfpower.games import CHARACTERISTIC, MinimalSetGame, MWCSet, UnanimityGame
from pfpower.indices import (
    check_weighted_symmetry,
    cm,
    compute_index,
    dp,
    dp_merge_check,
    hcm,
    hcm_alternative,
    null_players,
    pg,
    pg_merge_check,
    round_half_up,
    symmetric_pairs_characteristic,
    symmetric_pairs_partition,
)

A, B, C, D = 1, 2, 4, 8


@pytest.fixture
def apex():
    spec = GameSpec.characteristic(3, [2, 1, 1])
    return minimal_winning_coalitions(spec), spec.table


def test_apex_game_values(apex):
    m, t = apex
    assert dp(m).values == (F(1, 2), F(1, 4), F(1, 4))
    assert pg(m).values == (F(1, 2), F(1, 4), F(1, 4))
    assert cm(m, t).values == (F(2, 3), F(1, 6), F(1, 6))
    assert hcm(m, t).values == (F(4, 6), F(1, 6), F(1, 6))


def test_apex_rounded(apex):
    m, t = apex
    assert cm(m, t).rounded() == ("0.6667", "0.1667", "0.1667")


def test_hcm_forms_agree(apex):
    m, t = apex
    assert hcm(m, t) == hcm_alternative(m, t)


def test_single_coalition():
    m = minimal_winning_coalitions(UnanimityGame(3, A | B))
    assert dp(m).values == (F(1, 2), F(1, 2), 0)
    assert cm(m, [3, 1, 5]).values == (F(3, 4), F(1, 4), 0)
    assert null_players(m) == {2}


def test_partition_form_uses_active_sets():
    m = minimal_winning_embedded_coalitions(GameSpec.partition([1, 1, 1]))
    for kind in ("dp", "pg", "cm", "hcm"):
        assert compute_index(kind, m, [1, 1, 1]).values == (F(1, 3),) * 3


def test_null_player_gets_zero():
    m = minimal_winning_embedded_coalitions(GameSpec.partition([2, 1, 1]))
    assert null_players(m) == {1, 2}
    assert dp(m).values == (1, 0, 0)


def test_degenerate_inputs():
    empty = MWCSet(CHARACTERISTIC, 2, ())
    with pytest.raises(DegenerateGameError):
        dp(empty)
    m = minimal_winning_coalitions(MinimalSetGame(2, [A]))
    with pytest.raises(DegenerateGameError):
        cm(m, [0, 1])
    with pytest.raises(DegenerateGameError):
        hcm(m, [0, 1])


def test_compute_index_unknown_kind(apex):
    with pytest.raises(ValueError):
        compute_index("banzhaf", apex[0], apex[1])


@pytest.mark.parametrize("x, out", [
    (F(1, 2), "0.5000"), (F(1, 3), "0.3333"), (F(2, 3), "0.6667"),
    (F(12345, 10 ** 5), "0.1235"), (F(12344999, 10 ** 8), "0.1234"), (F(1), "1.0000"),
])
def test_round_half_up(x, out):
    assert round_half_up(x) == out


@given(st.fractions(min_value=0, max_value=1))
def test_round_half_up_within_half_unit(x):
    assert abs(F(round_half_up(x)) - x) <= F(1, 20000)


def test_symmetry_characteristic():
    assert symmetric_pairs_characteristic(GameSpec.characteristic(2, [1, 1, 1])) == {
        (0, 1), (0, 2), (1, 2)}
    assert symmetric_pairs_characteristic(GameSpec.characteristic(3, [2, 1, 1])) == {(1, 2)}


def test_symmetry_partition():
    sym = symmetric_pairs_partition(GameSpec.partition([2, 1, 1]))
    assert (1, 2) in sym.pairs
    assert (0, 1) not in sym.pairs
    sym = symmetric_pairs_partition(GameSpec.partition([1, 1, 1], TieRule.TIES_ALL_WIN))
    assert sym.pairs == {(0, 1), (0, 2), (1, 2)}


def test_weighted_symmetry():
    m = minimal_winning_coalitions(UnanimityGame(3, A | B))
    w = [2, 1, 1]
    assert check_weighted_symmetry(cm(m, w), m, w)
    res = check_weighted_symmetry(dp(m), m, w)
    assert res.applicable and not res.holds
    two = minimal_winning_coalitions(GameSpec.characteristic(3, [2, 1, 1]))
    assert not check_weighted_symmetry(dp(two), two, w).applicable


def test_merge_disjoint_unanimity():
    v, w = UnanimityGame(4, A | B), UnanimityGame(4, C | D)
    assert dp_merge_check(v, w)
    assert pg_merge_check(v, w)


def test_merge_weighted():
    v = GameSpec.characteristic(3, [2, 1, 1])
    w = GameSpec.characteristic(2, [0, 1, 1])
    assert dp_merge_check(v, w)
    assert pg_merge_check(v, w)


def test_merge_rejects_nested():
    v = GameSpec.characteristic(3, [2, 1, 1])
    with pytest.raises(NotMergeableError):
        dp_merge_check(v, v)
    with pytest.raises(NotMergeableError):
        pg_merge_check(UnanimityGame(3, A), UnanimityGame(3, A | B))
