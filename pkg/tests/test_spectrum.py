from itertools import product

import pytest

from nckepler import spectrum
from nckepler.errors import ConstraintError, DomainError, NoStateError

from oracles import count_level_triples


class TestChannelSpec:
    def test_valid(self):
        ch = spectrum.ChannelSpec(1, 2, 0, 1.5)
        assert ch.s_total == 3

    def test_rejects_negative_strength(self):
        with pytest.raises(DomainError):
            spectrum.ChannelSpec(-1, 0, 0, 1.0)

    def test_rejects_nonpositive_gamma(self):
        with pytest.raises(DomainError):
            spectrum.ChannelSpec(0, 0, 0, 0.0)

    def test_rejects_non_integer(self):
        with pytest.raises(DomainError):
            spectrum.ChannelSpec(0.5, 0, 0, 1.0)


class TestBoundEnergy:
    def test_ground_level(self):
        ch = spectrum.ChannelSpec(0, 0, 0, 1.0)
        assert spectrum.bound_energy(ch, 0) == pytest.approx(-0.08, abs=1e-16)

    def test_level_three(self):
        ch = spectrum.ChannelSpec(1, 1, 1, 1.0)
        assert spectrum.bound_energy(ch, 3) == pytest.approx(-2.0 / 121.0, rel=1e-15)

    def test_gamma_scaling(self):
        ch = spectrum.ChannelSpec(0, 0, 0, 2.0)
        assert spectrum.bound_energy(ch, 0) == pytest.approx(-0.32, rel=1e-15)
        for j in range(6):
            ratio = spectrum.bound_energy(ch, j) / spectrum.bound_energy(
                spectrum.ChannelSpec(0, 0, 0, 1.0), j)
            assert ratio == pytest.approx(4.0, rel=1e-14)

    def test_monotone_increasing_to_zero(self):
        ch = spectrum.ChannelSpec(1, 0, 1, 1.0)
        previous = spectrum.bound_energy(ch, ch.s_total)
        for j in range(ch.s_total + 1, 40):
            energy = spectrum.bound_energy(ch, j)
            assert previous < energy < 0.0
            previous = energy

    def test_no_state_below_threshold(self):
        ch = spectrum.ChannelSpec(1, 1, 1, 1.0)
        with pytest.raises(NoStateError):
            spectrum.bound_energy(ch, 2)


class TestDegeneracy:
    def test_small_levels(self):
        ch = spectrum.ChannelSpec(0, 0, 0, 1.0)
        assert spectrum.degeneracy(ch, 0) == 1   # q = 0
        assert spectrum.degeneracy(ch, 2) == 3   # q = 2
        assert spectrum.degeneracy(ch, 5) == 6   # q = 5, d = 3

    def test_brute_force_sweep(self):
        for s1, s2, s3 in product(range(4), repeat=3):
            if s1 + s2 + s3 > 6:
                continue
            ch = spectrum.ChannelSpec(s1, s2, s3, 1.0)
            for j in range(ch.s_total, ch.s_total + 21):
                expected = count_level_triples(j - ch.s_total)
                assert spectrum.degeneracy(ch, j) == expected
                assert len(spectrum.enumerate_states(ch, j)) == expected

    def test_no_state(self):
        with pytest.raises(NoStateError):
            spectrum.degeneracy(spectrum.ChannelSpec(2, 2, 2, 1.0), 5)


class TestEnumerateStates:
    def test_single_state_channel(self):
        ch = spectrum.ChannelSpec(1, 1, 1, 1.0)
        states = spectrum.enumerate_states(ch, 3)
        assert len(states) == 1
        qn = states[0]
        assert (qn.k1, qn.k2, qn.n) == (0, 0, 0)
        assert (qn.l, qn.m) == (3, 2)

    def test_three_states(self):
        ch = spectrum.ChannelSpec(1, 1, 1, 1.0)
        states = spectrum.enumerate_states(ch, 5)
        labelled = [((qn.k1, qn.k2, qn.n), (qn.l, qn.m)) for qn in states]
        assert labelled == [((0, 0, 2), (3, 2)), ((1, 0, 0), (5, 2)), ((0, 1, 0), (5, 4))]

    def test_radial_excitation_only(self):
        ch = spectrum.ChannelSpec(0, 0, 0, 1.0)
        states = spectrum.enumerate_states(ch, 1)
        assert len(states) == 1
        assert (states[0].n, states[0].l, states[0].m) == (1, 0, 0)

    def test_sorted_lexicographically(self):
        ch = spectrum.ChannelSpec(0, 1, 0, 1.0)
        states = spectrum.enumerate_states(ch, 7)
        keys = [(qn.l, qn.m, qn.n) for qn in states]
        assert keys == sorted(keys)

    def test_constraints_hold(self):
        ch = spectrum.ChannelSpec(2, 0, 1, 1.0)
        for qn in spectrum.enumerate_states(ch, 9):
            qn.check_channel(ch)
            assert qn.j == qn.l + qn.n


class TestQuantumNumbers:
    def test_rejects_j_l_n_mismatch(self):
        with pytest.raises(ConstraintError):
            spectrum.QuantumNumbers(j=3, l=1, m=0, k1=0, k2=0, n=1)

    def test_channel_check(self):
        ch = spectrum.ChannelSpec(1, 1, 1, 1.0)
        qn = spectrum.QuantumNumbers(j=3, l=3, m=2, k1=0, k2=0, n=0)
        qn.check_channel(ch)
        with pytest.raises(ConstraintError):
            qn.check_channel(spectrum.ChannelSpec(0, 0, 0, 1.0))

    def test_make_bound_state(self):
        ch = spectrum.ChannelSpec(1, 1, 1, 1.0)
        qn = spectrum.QuantumNumbers(j=3, l=3, m=2, k1=0, k2=0, n=0)
        state = spectrum.make_bound_state(ch, qn)
        assert state.energy == pytest.approx(-2.0 / 121.0, rel=1e-15)
        assert state.energy < 0.0
