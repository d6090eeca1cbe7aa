import random
from itertools import combinations, product

import pytest

from vandermerge import (
    ConstructionRecipe,
    convert_merge,
    default_convert,
    exhaustive_search,
    field_spec,
    make_field,
    make_pair,
    scalars_automorphism,
    verify_conversion_correctness,
)
from vandermerge.constructions import VARIANT_AUTOMORPHISM
from vandermerge.convert import READ, WRITE
from vandermerge.errors import (
    BadLambda,
    InvalidInitialCodeword,
    LengthMismatch,
    NotSuperRegular,
)


def encode_blocks(pair, message):
    return [pair.initial_code.encode(message[b.start:b.stop])
            for b in pair.initial_partition()]


def test_make_pair_f256(f256):
    pair = make_pair(f256, 4, 3, 2, xi=scalars_automorphism(f256, 1))
    assert (pair.n_initial, pair.k_initial) == (7, 4)
    assert (pair.n_final, pair.k_final) == (11, 8)
    assert pair.initial_code.is_mds() and pair.final_code.is_mds()


def test_make_pair_rejects_lambda_one(f256):
    with pytest.raises(BadLambda):
        make_pair(f256, 4, 3, 1, xi=scalars_automorphism(f256, 1))


def test_make_pair_not_super_regular(f5):
    with pytest.raises(NotSuperRegular) as exc:
        make_pair(f5, 2, 2, 2, xi=(1, 4))
    assert exc.value.witness is not None


def test_make_pair_from_recipe(f256):
    recipe = ConstructionRecipe(VARIANT_AUTOMORPHISM, field_spec(2, 8), 4, 3, e=1)
    pair = make_pair(f256, 4, 3, 2, recipe=recipe)
    assert pair.xi == scalars_automorphism(f256, 1)
    with pytest.raises(ValueError):
        make_pair(f256, 4, 3, 2)  # neither xi nor recipe
    with pytest.raises(ValueError):
        make_pair(f256, 4, 3, 2, xi=(1, 2, 4), recipe=recipe)  # both


def test_make_pair_require_mds_escape_hatch(f4):
    # no [6,4] MDS code exists over GF(4) (divisor rule at m=3), yet the
    # merge procedure itself is well-defined for any scalars
    with pytest.raises(NotSuperRegular):
        make_pair(f4, 2, 2, 2, xi=(1, 2))
    pair = make_pair(f4, 2, 2, 2, xi=(1, 2), require_mds=False)
    assert not pair.final_code.is_mds()


def test_convert_merge_zero_inputs(f256):
    pair = make_pair(f256, 4, 3, 2, xi=scalars_automorphism(f256, 1))
    zeros = [[0] * pair.n_initial for _ in range(2)]
    final, _ = convert_merge(pair, zeros)
    assert final == [0] * pair.n_final


def test_convert_merge_unit_scalar_sums_parities(f256):
    pair = make_pair(f256, 2, 1, 2, xi=(1,))
    cw0 = pair.initial_code.encode([7, 9])
    cw1 = pair.initial_code.encode([100, 3])
    final, _ = convert_merge(pair, [cw0, cw1])
    assert final[-1] == f256.add(cw0[-1], cw1[-1])


def test_convert_merge_matches_default_randomized():
    rng = random.Random(99)
    cases = [
        (field_spec(2, 8), 4, 3, 3),
        (field_spec(2, 8), 5, 2, 2),
        (field_spec(2, 4), 3, 3, 4),
        (field_spec(3, 5), 2, 2, 2),
        (field_spec(5, 2), 3, 3, 3),
    ]
    for spec, kI, r, lam in cases:
        ctx = make_field(spec)
        xi = scalars_automorphism(ctx, 1)[:r]
        # odd-p pairs above the proven range run ungated; equality of the
        # two conversion routes does not depend on MDS-ness
        pair = make_pair(ctx, kI, r, lam, xi=xi, require_mds=False)
        for _ in range(40):
            msg = [rng.randrange(ctx.q) for _ in range(pair.k_final)]
            cws = encode_blocks(pair, msg)
            merged, mstats = convert_merge(pair, cws)
            rebuilt, dstats = default_convert(pair, cws)
            assert merged == rebuilt
            assert (mstats.symbols_read, mstats.symbols_written) == (lam * r, r)
            assert (dstats.symbols_read, dstats.symbols_written) == (lam * kI, r)


def test_convert_access_log_reads_no_data_symbols(f256):
    pair = make_pair(f256, 4, 3, 2, xi=scalars_automorphism(f256, 1))
    msg = list(range(8))
    merged, stats = convert_merge(pair, encode_blocks(pair, msg))
    reads = [e for e in stats.log if e[2] == READ]
    writes = [e for e in stats.log if e[2] == WRITE]
    assert all(cw < pair.lam and sym >= pair.k_initial for cw, sym, _ in reads)
    assert all(cw == pair.lam and sym >= pair.k_final for cw, sym, _ in writes)
    assert len(reads) == stats.symbols_read == 6
    assert len(writes) == stats.symbols_written == 3
    # strictly fewer reads than the default whenever r < kI
    assert stats.symbols_read < pair.lam * pair.k_initial


def test_convert_merge_input_validation(f256):
    pair = make_pair(f256, 4, 3, 2, xi=scalars_automorphism(f256, 1))
    cws = encode_blocks(pair, list(range(8)))
    with pytest.raises(LengthMismatch):
        convert_merge(pair, cws[:1])
    with pytest.raises(LengthMismatch):
        convert_merge(pair, [cws[0], cws[1][:5]])
    with pytest.raises(InvalidInitialCodeword):
        convert_merge(pair, [cws[0], [None] * 7])
    corrupted = list(cws[1])
    corrupted[-1] = f256.add(corrupted[-1], 1)
    convert_merge(pair, [cws[0], corrupted])  # unchecked by default
    with pytest.raises(InvalidInitialCodeword):
        convert_merge(pair, [cws[0], corrupted], recheck_parities=True)


def test_converted_codeword_survives_erasures(f256):
    rng = random.Random(4)
    pair = make_pair(f256, 4, 3, 2, xi=scalars_automorphism(f256, 1))
    msg = [rng.randrange(256) for _ in range(8)]
    merged, _ = convert_merge(pair, encode_blocks(pair, msg))
    for erased in rng.sample(list(combinations(range(pair.n_final), 3)), 30):
        received = [None if i in erased else v for i, v in enumerate(merged)]
        assert pair.final_code.decode(received) == msg


def test_verify_conversion_correctness_zero_and_random(f256):
    pair = make_pair(f256, 4, 3, 2, xi=scalars_automorphism(f256, 1))
    assert verify_conversion_correctness(pair, [0] * 8)
    rng = random.Random(123)
    for _ in range(50):
        assert verify_conversion_correctness(
            pair, [rng.randrange(256) for _ in range(8)])


def test_verify_conversion_correctness_exhaustive_f4(f4):
    # kF = 4 over GF(4) admits no MDS final code, so run ungated; the
    # initial-code scalars come from search as usual
    report = exhaustive_search(f4, 2, 2)
    assert report.exists
    pair = make_pair(f4, 2, 2, 2, xi=report.first_witness, require_mds=False)
    for msg in product(range(4), repeat=4):
        assert verify_conversion_correctness(pair, list(msg))


def test_access_log_is_order_insensitive_multiset(f256):
    pair = make_pair(f256, 4, 3, 3, xi=scalars_automorphism(f256, 1))
    msg = list(range(12))
    _, stats = convert_merge(pair, encode_blocks(pair, msg))
    expected_reads = {(t, pair.k_initial + j, READ)
                      for t in range(3) for j in range(3)}
    expected_writes = {(3, pair.k_final + j, WRITE) for j in range(3)}
    assert set(stats.log) == expected_reads | expected_writes
    assert len(stats.log) == len(expected_reads) + len(expected_writes)
