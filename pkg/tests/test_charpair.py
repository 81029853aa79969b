import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pairbij import charpair, encoders, streams
from pairbij.errors import (
    FuelExhausted,
    GuideExhausted,
    InvalidBit,
    UnknownPreset,
)

MORTON_TABLE = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (3, 0), (2, 1), (3, 1),
                (0, 2), (1, 2), (0, 3)]


def interleave(x: int, y: int) -> int:
    """Independent bit-interleaving oracle: x on even positions, y on odd."""
    out = 0
    shift = 0
    while x or y:
        out |= (x & 1) << shift
        x >>= 1
        out |= (y & 1) << (shift + 1)
        y >>= 1
        shift += 2
    return out


# -- bsplit ------------------------------------------------------------------------

def test_bsplit_golden():
    a, b = charpair.bsplit([0, 1, 0, 1, 0, 1], [10, 20, 30, 40, 50, 60])
    assert (list(a), list(b)) == ([20, 40, 60], [10, 30, 50])


def test_bsplit_empty_source():
    a, b = charpair.bsplit([], [])
    assert (list(a), list(b)) == ([], [])


def test_bsplit_all_ones_prefix():
    a, b = charpair.bsplit([1, 1], [5, 6])
    assert (list(a), list(b)) == ([5, 6], [])


def test_bsplit_guide_exhausted():
    a, b = charpair.bsplit([1], [5, 6])
    with pytest.raises(GuideExhausted):
        (list(a), list(b))


def test_bsplit_outputs_are_independent():
    a, b = charpair.bsplit(streams.cycle([1, 0]), [10, 20, 30, 40])
    assert next(b) == 20
    assert next(a) == 10
    assert list(b) == [40]
    assert list(a) == [30]


def test_bsplit_rejects_non_bits():
    a, b = charpair.bsplit([2], [5])
    with pytest.raises(InvalidBit):
        list(a)


# -- bmerge ------------------------------------------------------------------------

def test_bmerge_golden():
    got = charpair.bmerge([0, 1, 0, 1, 0, 1], [20, 40, 60], [10, 30, 50])
    assert list(got) == [10, 20, 30, 40, 50, 60]


def test_bmerge_both_empty():
    assert list(charpair.bmerge([1, 0], [], [])) == []


def test_bmerge_singleton_clauses_ignore_guide():
    assert list(charpair.bmerge([], [], [9])) == [9]
    assert list(charpair.bmerge([], [7], [])) == [7]


def test_bmerge_pads_exhausted_side_with_zero():
    # hand-trace of the clause order: [a], then pad, then b, c, then the
    # leftover padded zero is emitted by the singleton ending
    got = list(charpair.bmerge([1, 0, 0, 0], ["a"], ["b", "c"]))
    assert got == ["a", "b", "c", 0]


def test_bmerge_guide_exhausted():
    with pytest.raises(GuideExhausted):
        list(charpair.bmerge([1], [5, 6], [7, 8]))


def test_bmerge_rejects_non_bits():
    with pytest.raises(InvalidBit):
        list(charpair.bmerge([3], [5, 6], [7, 8]))


def test_split_merge_duality():
    guide = [1, 0, 1, 1, 0, 0, 1, 0]
    ns = [3, 1, 4, 1, 5, 9, 2, 6]
    a, b = charpair.bsplit(guide, ns)
    assert list(charpair.bmerge(guide, list(a), list(b))) == ns


# -- the generic construction ----------------------------------------------------------

def _seed(payload, encoder=encoders.BINS, label="test"):
    return charpair.SeedSpec(encoder, payload, label)


def test_morton_unpair_table():
    fam = charpair.preset_family("morton")
    got = [fam.unpair(n) for n in range(11)]
    assert got == MORTON_TABLE
    assert [fam.pair(x, y) for x, y in got] == list(range(11))


def test_morton_pair_examples():
    fam = charpair.preset_family("morton")
    assert fam.pair(0, 0) == 0
    assert fam.pair(1, 0) == 1
    assert fam.pair(0, 1) == 2
    assert fam.pair(1, 1) == 3


def test_arith_set_2_equals_morton():
    bfam = charpair.preset_family("arith-set", 2)
    mfam = charpair.preset_family("morton")
    assert [bfam.unpair(n) for n in range(11)] == MORTON_TABLE
    for n in range(10_001):
        assert bfam.unpair(n) == mfam.unpair(n)
    for x in range(64):
        for y in range(64):
            assert bfam.pair(x, y) == mfam.pair(x, y)


def test_pair_zero_zero_for_every_preset():
    for name, k in [("morton", None), ("arith-set", 3), ("squares", None),
                    ("powers2", None), ("syracuse", None), ("bits-of-naturals", None)]:
        fam = charpair.preset_family(name, k)
        assert fam.pair(0, 0) == 0
        assert fam.unpair(0) == (0, 0)


@pytest.mark.parametrize("name,k", [
    ("morton", None),
    ("arith-set", 2),
    ("arith-set", 3),
    ("arith-set", 5),
    ("squares", None),
    ("powers2", None),
    ("syracuse", None),
    ("bits-of-naturals", None),
])
def test_preset_roundtrips(name, k):
    fam = charpair.preset_family(name, k)
    seen = set()
    for n in range(500):
        p = fam.unpair(n)
        assert fam.pair(*p) == n
        seen.add(p)
    assert len(seen) == 500
    for x in range(16):
        for y in range(16):
            assert fam.unpair(fam.pair(x, y)) == (x, y)


def test_morton_equals_interleave():
    fam = charpair.preset_family("morton")
    for x in range(64):
        for y in range(64):
            assert fam.pair(x, y) == interleave(x, y)


def test_arith_set_guide_shape():
    # after the leading one, exactly k-1 zeros sit between consecutive ones
    for k in range(1, 9):
        seed = charpair.preset_seed("arith-set", k)
        bits = streams.take(streams.Stream(lambda: seed.bits(streams.Fuel(10**6))), 1000)
        assert bits[0] == 1
        ones = [i for i, b in enumerate(bits) if b == 1]
        assert all(j - i == k for i, j in zip(ones, ones[1:]))
        assert all(b in (0, 1) for b in bits)


def test_arith_set_2_guide_is_alternating():
    seed = charpair.preset_seed("arith-set", 2)
    bits = streams.take(streams.Stream(lambda: seed.bits(streams.Fuel(10**6))), 1000)
    assert bits == [1, 0] * 500


def test_unknown_preset():
    with pytest.raises(UnknownPreset):
        charpair.preset_family("hilbert")
    with pytest.raises(UnknownPreset):
        charpair.preset_family("arith-set", 0)
    with pytest.raises(UnknownPreset):
        charpair.preset_family("arith-set")


# -- divergence --------------------------------------------------------------------

def test_pair_diverges_on_all_zero_seed():
    seed = _seed(streams.cycle([0]), label="cycle [0]")
    with pytest.raises(FuelExhausted):
        charpair.generic_pair(seed, 10, 20, streams.Fuel(5000, label="cycle [0]"))


def test_unpair_diverges_on_all_one_seed():
    seed = _seed(streams.cycle([1]), label="cycle [1]")
    with pytest.raises(FuelExhausted):
        charpair.generic_unpair(seed, 42, streams.Fuel(5000, label="cycle [1]"))


def test_arith_set_1_is_degenerate():
    # step 1 covers every natural: the all-ones guide starves the second
    # component in both directions, exactly like the all-one bit seed
    fam = charpair.preset_family("arith-set", 1, fuel_budget=5000)
    with pytest.raises(FuelExhausted):
        fam.unpair(1)
    with pytest.raises(FuelExhausted):
        fam.pair(3, 0)


def test_fuel_error_names_the_seed():
    fam = charpair.preset_family("arith-set", 1, fuel_budget=2000)
    with pytest.raises(FuelExhausted, match="arith-set:1"):
        fam.unpair(7)


# -- seed files ---------------------------------------------------------------------

def test_seed_file_matches_morton(tmp_path):
    path = tmp_path / "alternating.bits"
    path.write_text("10 10101010\n101010 10101010\n")
    fam = charpair.family_from_seed(charpair.seed_from_file(path))
    mfam = charpair.preset_family("morton")
    for n in range(30):
        assert fam.unpair(n) == mfam.unpair(n)


def test_seed_file_exhaustion(tmp_path):
    path = tmp_path / "short.bits"
    path.write_text("1010")
    fam = charpair.family_from_seed(charpair.seed_from_file(path))
    with pytest.raises(GuideExhausted, match="position"):
        fam.unpair(10**6)


def test_seed_file_rejects_garbage(tmp_path):
    path = tmp_path / "bad.bits"
    path.write_text("10x1")
    with pytest.raises(InvalidBit):
        charpair.seed_from_file(path)


def test_seed_file_other_encoder(tmp_path):
    # a file of bits can also be read as a hub list routed through an encoder
    path = tmp_path / "list.bits"
    path.write_text("1 0 1 1 0 1 0 1" * 4)
    fam = charpair.family_from_seed(charpair.seed_from_file(path, "list"))
    n = fam.pair(2, 3)
    assert fam.unpair(n) == (2, 3)


# -- syracuse ----------------------------------------------------------------------

def test_syracuse_values():
    assert charpair.syracuse(0) == 0
    assert charpair.syracuse(1) == 2
    assert [charpair.syracuse(n) for n in range(6)] == [0, 2, 0, 5, 3, 8]


def test_nsyr():
    assert charpair.nsyr(0) == [0]
    traj = charpair.nsyr(6)
    assert traj[0] == 6
    assert traj[-1] == 0
    for a, b in zip(traj, traj[1:]):
        assert b == charpair.syracuse(a)


def test_nsyr_fuel():
    with pytest.raises(FuelExhausted):
        charpair.nsyr(27, streams.Fuel(3))


def test_syracuse_stream_matches_map():
    seed = charpair.preset_seed("syracuse")
    got = streams.take(seed.payload, 6)
    assert got == [charpair.syracuse(n) for n in range(6)]


# -- cantor and twist ------------------------------------------------------------------

def test_cantor_values():
    assert charpair.cantor_pair(0, 0) == 0
    assert charpair.cantor_pair(1, 2) == 8
    assert charpair.cantor_unpair(8) == (1, 2)


def test_cantor_roundtrips():
    for x in range(50):
        for y in range(50):
            assert charpair.cantor_unpair(charpair.cantor_pair(x, y)) == (x, y)
    for n in range(3000):
        assert charpair.cantor_pair(*charpair.cantor_unpair(n)) == n


def test_twist_zero_mask_is_identity():
    fam = charpair.preset_family("morton")
    twisted = charpair.twist_family(fam, 0)
    for n in range(100):
        assert twisted.unpair(n) == fam.unpair(n)
        assert twisted.pair(*fam.unpair(n)) == n


def test_twist_is_involutive():
    fam = charpair.preset_family("morton")
    double = charpair.twist_family(charpair.twist_family(fam, 19), 19)
    for n in range(100):
        assert double.unpair(n) == fam.unpair(n)


def test_twist_roundtrip():
    fam = charpair.twist_family(charpair.preset_family("morton"), 7)
    for n in range(1000):
        assert fam.pair(*fam.unpair(n)) == n


def test_twist_of_cantor():
    fam = charpair.twist_family(charpair.cantor_family(), 12345)
    for n in range(500):
        assert fam.pair(*fam.unpair(n)) == n


# -- properties -------------------------------------------------------------------------

@given(st.integers(min_value=0, max_value=10**9), st.integers(min_value=0, max_value=10**9))
@settings(max_examples=60)
def test_morton_matches_interleave_property(x, y):
    fam = charpair.preset_family("morton")
    assert fam.pair(x, y) == interleave(x, y)


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=40)
def test_squares_roundtrip_property(n):
    fam = charpair.preset_family("squares")
    assert fam.pair(*fam.unpair(n)) == n


@given(st.integers(min_value=0, max_value=200), st.integers(min_value=0, max_value=200))
@settings(max_examples=40)
def test_syracuse_pair_roundtrip_property(x, y):
    fam = charpair.preset_family("syracuse")
    assert fam.unpair(fam.pair(x, y)) == (x, y)
