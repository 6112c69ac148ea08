import random

import pytest
from hypothesis import given, strategies as st

from bsol.partitions import (
    conjugate,
    enumerate_compositions,
    enumerate_montreal_compositions,
    enumerate_partitions,
    normalize,
    potential_energy,
)
from bsol.operators import (
    AustrianState,
    MultiplayerState,
    PointerState,
    austrian_step,
    bulgarian_step,
    carolina_step,
    dual_step,
    ejs_masked_step,
    janetzko_step,
    montreal_step,
    multiplayer_step,
    popov_masked_step,
    servedio_yeh_step,
)


# --- Bulgarian ---

def test_bulgarian_examples():
    assert bulgarian_step((4, 3, 3)) == (3, 3, 2, 2)
    assert bulgarian_step((6, 3, 1)) == (5, 3, 2)
    assert bulgarian_step((4, 3, 2, 1)) == (4, 3, 2, 1)
    assert bulgarian_step(()) == ()
    assert bulgarian_step((1,)) == (1,)


def test_bulgarian_conserves_and_stays_canonical():
    for n in range(21):
        for lam in enumerate_partitions(n):
            nxt = bulgarian_step(lam)
            assert sum(nxt) == n
            assert all(nxt[i] >= nxt[i + 1] for i in range(len(nxt) - 1))
            assert all(p >= 1 for p in nxt)


def test_bulgarian_energy_monotone():
    # equality holds exactly when the pile count is >= largest pile - 1
    for n in range(1, 26):
        for lam in enumerate_partitions(n):
            before = potential_energy(lam)
            after = potential_energy(bulgarian_step(lam))
            assert after <= before
            if len(lam) >= lam[0] - 1:
                assert after == before
            else:
                assert after < before


# --- Carolina ---

def test_carolina_examples():
    assert carolina_step((4, 3, 3)) == (3, 3, 2, 2)
    assert carolina_step((1, 2)) == (2, 1)
    assert carolina_step((4, 3, 2, 1)) == (4, 3, 2, 1)


def test_carolina_projects_to_bulgarian():
    for n in range(1, 13):
        for alpha in enumerate_compositions(n):
            assert normalize(carolina_step(alpha)) == bulgarian_step(normalize(alpha))


# --- Montreal ---

def test_montreal_worked_examples():
    assert montreal_step((1, 0, 2)) == (1, 1, 1)
    assert montreal_step((1, 2, 0, 1, 0, 2)) == (1, 2, 0, 1, 1, 1)
    assert montreal_step((3, 2, 2)) == (2, 1, 1, 3)


def test_montreal_worked_orbit_prefix():
    path = [(3, 2, 2)]
    for _ in range(5):
        path.append(montreal_step(path[-1]))
    assert path == [
        (3, 2, 2),
        (2, 1, 1, 3),
        (1, 0, 0, 2, 4),
        (1, 0, 1, 3, 2),
        (1, 0, 2, 1, 3),
        (1, 1, 0, 2, 3),
    ]


def test_montreal_rejects_zero_endpoints():
    with pytest.raises(ValueError):
        montreal_step((0, 1, 1))
    with pytest.raises(ValueError):
        montreal_step((1, 1, 0))


def test_montreal_conserves_and_canonical():
    for n in range(1, 9):
        for alpha in enumerate_montreal_compositions(n):
            nxt = montreal_step(alpha)
            assert sum(nxt) == n
            assert nxt[0] >= 1 and nxt[-1] >= 1


def test_montreal_injective_on_small_strata():
    for n in range(1, 9):
        states = list(enumerate_montreal_compositions(n))
        images = {montreal_step(a) for a in states}
        assert len(images) == len(states)


# --- dual ---

def test_dual_worked_examples():
    assert dual_step((4, 4, 3, 2, 2, 1, 1)) == (5, 4, 3, 3, 1, 1)
    assert dual_step((6, 6, 3, 2, 1)) == (7, 4, 3, 2, 1, 1)
    assert dual_step((1,)) == (1,)


def test_dual_rejects_empty():
    with pytest.raises(ValueError):
        dual_step(())


def test_dual_is_conjugate_of_bulgarian():
    for n in range(1, 16):
        for lam in enumerate_partitions(n):
            assert dual_step(lam) == conjugate(bulgarian_step(conjugate(lam)))


def test_dual_result_independent_of_tied_maximum():
    # removing any of several equal largest piles gives the same multiset
    def dual_removing(lam, i):
        m = lam[i]
        rest = list(lam[:i] + lam[i + 1 :])
        give = min(m, len(rest))
        for j in range(give):
            rest[j] += 1
        rest.extend([1] * (m - give))
        return normalize(rest)

    for n in range(1, 13):
        for lam in enumerate_partitions(n):
            ties = [i for i, p in enumerate(lam) if p == lam[0]]
            for i in ties:
                assert dual_removing(lam, i) == dual_step(lam)


# --- Austrian ---

def test_austrian_examples():
    s = AustrianState((3, 2), 0, 3)
    s = austrian_step(s)
    assert (s.piles, s.bank) == ((2, 1), 2)
    s = austrian_step(s)
    assert (s.piles, s.bank) == ((3, 1), 1)
    assert austrian_step(AustrianState((3,), 0, 3)) == AustrianState((2,), 1, 3)


def test_austrian_invariants():
    with pytest.raises(ValueError):
        AustrianState((2,), 0, 0)
    with pytest.raises(ValueError):
        AustrianState((4,), 0, 3)  # pile exceeds the lifetime
    with pytest.raises(ValueError):
        AustrianState((2,), -1, 3)
    rng = random.Random(7)
    for _ in range(300):
        L = rng.randint(1, 6)
        piles = normalize([rng.randint(1, L) for _ in range(rng.randint(0, 8))])
        bank = rng.randint(0, L - 1)
        s = AustrianState(piles, bank, L)
        t = austrian_step(s)
        assert sum(t.piles) + t.bank == sum(s.piles) + s.bank
        assert t.bank < L
        assert all(1 <= p <= L for p in t.piles)


# --- multiplayer ---

def test_multiplayer_examples():
    one = MultiplayerState(((4, 3, 3),))
    assert multiplayer_step(one).players == ((3, 3, 2, 2),)
    two = MultiplayerState(((2, 1), (2, 1)))
    assert multiplayer_step(two).players == ((2, 1), (2, 1))
    other = MultiplayerState(((3,), (1, 1)))
    assert multiplayer_step(other).players == ((2, 2), (1,))


def test_multiplayer_single_player_is_bulgarian():
    for n in range(1, 16):
        for lam in enumerate_partitions(n):
            got = multiplayer_step(MultiplayerState((lam,)))
            assert got.players == (bulgarian_step(lam),)


def test_multiplayer_conserves_total():
    rng = random.Random(11)
    for _ in range(200):
        players = tuple(
            normalize([rng.randint(0, 5) for _ in range(rng.randint(0, 5))])
            for _ in range(rng.randint(1, 4))
        )
        s = MultiplayerState(players)
        t = multiplayer_step(s)
        assert sum(map(sum, t.players)) == sum(map(sum, players))


# --- Servedio-Yeh ---

def test_servedio_yeh_examples():
    assert servedio_yeh_step((1, 1, 1)) == (1, 1, 1)
    assert servedio_yeh_step((2, 1)) == (1, 2)
    assert servedio_yeh_step((3, 0, 0)) == (1, 1, 1)


def test_servedio_yeh_wraps_and_conserves():
    assert servedio_yeh_step((5, 0)) == (3, 2)
    rng = random.Random(3)
    for _ in range(300):
        c = rng.randint(1, 6)
        alpha = tuple(rng.randint(0, 9) for _ in range(c))
        beta = servedio_yeh_step(alpha)
        assert len(beta) == c
        assert sum(beta) == sum(alpha)


# --- Janetzko ---

def test_janetzko_examples():
    s = janetzko_step(PointerState((2, 1, 0), 1))
    assert (s.piles, s.pointer) == ((0, 2, 1), 3)
    s = janetzko_step(PointerState((1, 1), 1))
    assert (s.piles, s.pointer) == ((0, 2), 2)
    s = janetzko_step(PointerState((0, 3, 0), 1))
    assert (s.piles, s.pointer) == ((0, 3, 0), 2)


def test_janetzko_wraparound_hits_own_seat():
    # four cards around a 3-seat table come back to the dealer
    s = janetzko_step(PointerState((4, 0, 0), 1))
    assert (s.piles, s.pointer) == ((1, 2, 1), 2)


def test_janetzko_state_validation():
    with pytest.raises(ValueError):
        PointerState((1, 2), 0)
    with pytest.raises(ValueError):
        PointerState((1, 2), 3)
    with pytest.raises(ValueError):
        PointerState((), 1)


# --- masked stochastic phases ---

def test_popov_masked_examples():
    assert popov_masked_step((4, 3, 3), (0, 1, 2)) == (3, 3, 2, 2)
    assert popov_masked_step((4, 3, 3), (0, 2)) == (3, 3, 2, 2)
    assert popov_masked_step((4, 3, 3), ()) == (4, 3, 3)


def test_popov_full_mask_is_bulgarian():
    for n in range(16):
        for lam in enumerate_partitions(n):
            assert popov_masked_step(lam, range(len(lam))) == bulgarian_step(lam)


def test_popov_masked_rejects_bad_index():
    with pytest.raises(ValueError):
        popov_masked_step((2, 1), (2,))
    with pytest.raises(ValueError):
        popov_masked_step((2, 1), (-1,))


def test_ejs_masked_examples():
    assert ejs_masked_step((4, 3, 3), (4, 3, 3)) == (10,)
    assert ejs_masked_step((4, 3, 3), (2, 0, 3)) == (5, 3, 2)
    assert ejs_masked_step((4, 3, 3), (0, 0, 0)) == (4, 3, 3)


def test_ejs_masked_rejects_out_of_range():
    with pytest.raises(ValueError):
        ejs_masked_step((2, 1), (3, 0))
    with pytest.raises(ValueError):
        ejs_masked_step((2, 1), (0, -1))
    with pytest.raises(ValueError):
        ejs_masked_step((2, 1), (0,))


@given(st.lists(st.integers(min_value=1, max_value=9), min_size=1, max_size=8), st.randoms())
def test_masked_steps_conserve(parts, rnd):
    lam = normalize(parts)
    mask = [i for i in range(len(lam)) if rnd.random() < 0.5]
    assert sum(popov_masked_step(lam, mask)) == sum(lam)
    picks = tuple(rnd.randint(0, p) for p in lam)
    assert sum(ejs_masked_step(lam, picks)) == sum(lam)
