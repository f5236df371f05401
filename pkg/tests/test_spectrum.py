from collections import Counter

import numpy as np
import pytest

from steinhaus import (
    BitSeq,
    CeilingExceeded,
    enumeration_ceiling,
    find_weight,
    full_spectrum,
    invert_i,
    level_sets_high,
    level_sets_low,
    members_at_weights,
    rot_l,
    rot_r,
    symmetry_reduced_spectrum,
    triangle_weight,
)
from steinhaus import spectrum as spectrum_mod
from steinhaus.spectrum import _lane_range, _lane_reverse, _lane_rot_l, _lane_rot_r, _lane_weights

from conftest import all_seqs


def brute_histogram(n):
    """Independent oracle: one streamed pure-int weight per generator."""
    return Counter(triangle_weight(x) for x in all_seqs(n))


class TestFullSpectrum:
    @pytest.mark.parametrize("n,expected", [
        (1, {0: 1, 1: 1}),
        (3, {0: 1, 3: 4, 4: 3}),
        (4, {0: 1, 4: 3, 5: 6, 6: 4, 7: 2}),
    ])
    def test_small_exact(self, n, expected):
        spec = full_spectrum(n)
        assert {w: c for w, c in enumerate(spec.counts) if c} == expected

    def test_matches_pure_python_oracle(self):
        for n in range(1, 11):
            spec = full_spectrum(n)
            assert {w: c for w, c in enumerate(spec.counts) if c} == brute_histogram(n)

    def test_global_invariants(self):
        for n in range(1, 15):
            spec = full_spectrum(n)
            assert spec.total == 1 << n
            assert spec.counts[0] == 1
            assert spec.levels[0] == 0
            if n >= 4:
                assert spec.counts[n] >= 3
            assert spec.levels[-1] == -(-n * (n + 1) // 3)

    def test_bad_sizes(self):
        with pytest.raises(ValueError):
            full_spectrum(0)
        with pytest.raises(CeilingExceeded):
            full_spectrum(enumeration_ceiling() + 1)
        with pytest.raises(CeilingExceeded):
            full_spectrum(60, force=True)  # beyond the engine's hard limit

    def test_env_ceiling_override(self, monkeypatch):
        monkeypatch.setenv("STEINHAUS_MAX_N", "8")
        assert enumeration_ceiling() == 8
        with pytest.raises(CeilingExceeded):
            full_spectrum(9)
        assert full_spectrum(9, force=True).total == 512
        monkeypatch.setenv("STEINHAUS_MAX_N", "32")
        assert enumeration_ceiling() == 32


class TestReducedSpectrum:
    def test_agrees_with_full(self):
        for n in range(1, 13):
            assert symmetry_reduced_spectrum(n) == full_spectrum(n)

    def test_agrees_under_workers(self):
        assert symmetry_reduced_spectrum(10, workers=3) == full_spectrum(10)


class TestLanePrimitives:
    """The vector engine must agree with the scalar reference implementations."""

    def test_weights_rotations_and_reversal(self):
        for n in range(1, 13):
            vals = _lane_range(n, 0, 1 << n)
            got_w = _lane_weights(vals, n)
            got_r = _lane_rot_r(vals, n)
            got_l = _lane_rot_l(vals, n)
            got_i = _lane_reverse(vals, n)
            for v in range(1 << n):
                x = BitSeq(n, v)
                assert int(got_w[v]) == triangle_weight(x)
                assert int(got_r[v]) == rot_r(x).bits
                assert int(got_l[v]) == rot_l(x).bits
                assert int(got_i[v]) == invert_i(x).bits

    def test_weight_invariance_under_all_symmetries_to_14(self):
        for n in (13, 14):
            vals = _lane_range(n, 0, 1 << n)
            w = _lane_weights(vals, n)
            rev = _lane_reverse(vals, n)
            for image in (_lane_rot_r(vals, n), _lane_rot_l(vals, n), rev,
                          _lane_rot_r(rev, n), _lane_rot_l(rev, n)):
                assert np.array_equal(_lane_weights(image, n), w)


class TestLevelSets:
    def test_low_at_eight(self):
        w0, w1, w2 = level_sets_low(8, 2)
        assert (w0.weight, w0.count) == (0, 1)
        assert {str(m) for m in w1.members} == {"11111111", "10000000", "00000001"}
        assert w2.weight == 11
        assert {str(m) for m in w2.members} == {
            "10101010", "01000000", "00000011", "01010101", "11000000", "00000010"}

    def test_low_at_seven(self):
        levels = level_sets_low(7, 2)
        assert levels[2].weight == 9
        assert {str(m) for m in levels[2].members} == {
            "0100000", "0001000", "0000010", "0101010"}

    def test_low_full_ladder_at_four(self):
        levels = level_sets_low(4, 4)
        got = {ls.index: (ls.weight, {str(m) for m in ls.members}) for ls in levels}
        assert got == {
            0: (0, {"0000"}),
            1: (4, {"1111", "1000", "0001"}),
            2: (5, {"0100", "0010", "1100", "1010", "0101", "0011"}),
            3: (6, {"1001", "0110", "1110", "0111"}),
            4: (7, {"1101", "1011"}),
        }

    def test_high_at_nine(self):
        top, second = level_sets_high(9, 2)
        assert top.weight == 30
        assert {str(m) for m in top.members} == {
            "110110110", "011011011", "101101101"}
        assert (second.weight, second.count) == (27, 22)

    def test_high_at_seven(self):
        top, second = level_sets_high(7, 2)
        assert (top.weight, top.count) == (19, 2)
        assert (second.weight, [str(m) for m in second.members]) == (18, ["0110110"])

    def test_high_at_four(self):
        top, second = level_sets_high(4, 2)
        assert (top.weight, {str(m) for m in top.members}) == (7, {"1101", "1011"})
        assert (second.weight, second.count) == (6, 4)

    def test_counts_match_histogram(self):
        spec = full_spectrum(9)
        for ls in level_sets_low(9, 3) + level_sets_high(9, 2):
            assert ls.count == spec.counts[ls.weight]
            assert not ls.truncated
            assert len(ls.members) == ls.count

    def test_level_bounds_checked(self):
        with pytest.raises(ValueError, match="exceeds the top level"):
            level_sets_low(4, 5)
        with pytest.raises(ValueError, match="ladder height"):
            level_sets_high(4, 6)
        with pytest.raises(ValueError):
            level_sets_low(4, 0)

    def test_member_cap_and_truncation(self):
        levels = level_sets_low(10, 1, cap=2)
        w1 = levels[1]
        assert w1.count == 3 and len(w1.members) == 2 and w1.truncated
        # capped members are the first in packed order: 1000000000 packs
        # lowest (bit 0 set? no: '1000000000' has x_0=1 -> value 1)
        assert {str(m) for m in w1.members} == {"1000000000", "0000000001"}

    def test_closed_under_symmetries(self):
        for n in range(1, 13):
            spec = full_spectrum(n)
            slices = members_at_weights(n, spec.levels)
            for piece in slices.values():
                members = set(piece.members)
                for x in members:
                    assert rot_r(x) in members
                    assert rot_l(x) in members
                    assert invert_i(x) in members


class TestFindWeight:
    def test_known_orbit_at_ten(self):
        got = find_weight(10, 17)
        assert got.count == 6 and not got.truncated
        assert {str(m) for m in got.members} == {
            "0001000000", "0000001100", "0010001000",
            "0000001000", "0011000000", "0001000100"}

    def test_empty_slices(self):
        assert find_weight(14, 25).count == 0
        assert find_weight(6, 9).count == 0
        assert find_weight(6, 9).members == ()

    def test_counts_match_histogram_everywhere(self):
        for n in (6, 10, 12):
            spec = full_spectrum(n)
            slices = members_at_weights(n, range(len(spec.counts)), cap=1)
            for w, c in enumerate(spec.counts):
                assert slices[w].count == c

    def test_impossible_weight_rejected(self):
        with pytest.raises(ValueError):
            find_weight(4, 11)
        with pytest.raises(ValueError):
            find_weight(4, -1)


class TestDeterminism:
    def test_spectra_identical_across_worker_counts(self):
        base = full_spectrum(11, workers=1)
        for workers in (2, 3, 8):
            assert full_spectrum(11, workers=workers) == base

    def test_members_identical_across_worker_counts(self):
        base = find_weight(11, 16, workers=1)
        for workers in (2, 5):
            assert find_weight(11, 16, workers=workers) == base

    def test_chunk_size_immaterial(self, monkeypatch):
        base = full_spectrum(9)
        members = find_weight(9, 13)
        monkeypatch.setattr(spectrum_mod, "_CHUNK", 37)
        assert full_spectrum(9) == base
        assert find_weight(9, 13) == members

    def test_truncated_capture_deterministic(self):
        base = level_sets_low(9, 2, cap=3, workers=1)
        for workers in (2, 4):
            assert level_sets_low(9, 2, cap=3, workers=workers) == base

    def test_bad_worker_count(self):
        with pytest.raises(ValueError):
            full_spectrum(5, workers=0)
