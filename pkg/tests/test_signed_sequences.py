import itertools

import pytest
from hypothesis import given, strategies as st

from cylskew.partitions import conjugate
from cylskew.signed_sequences import (ZERO, format_signed, normalize, parse_signed,
                                      resolve_skew_symbol, sequence_of, shift, shift_all,
                                      signed)

seqs = st.lists(st.integers(-6, 9), min_size=0, max_size=5)


def test_normalize_examples():
    out = normalize(signed((7, -2, 4, 11)))
    assert out.seq == signed((8, 8, 4, 0)) and out.delta == 4
    assert normalize(signed((7, 5, 4, 4))) == (signed((7, 5, 4, 4)), 0)
    assert normalize(signed((7, 4, 5, 0))) is ZERO


def _moves(seq):
    """Single elementary swaps (a, b) -> (b - 1, a + 1)."""
    for i in range(len(seq) - 1):
        s = list(seq)
        s[i], s[i + 1] = seq[i + 1] - 1, seq[i] + 1
        yield tuple(s)


@given(seqs, st.sampled_from([1, -1]))
def test_normalize_is_reachable_by_moves(seq, sign):
    out = normalize(signed(seq, sign))
    if out is ZERO:
        # some swap fixes the sequence, so it equals its own negative
        shifted = [a - i for i, a in enumerate(seq)]
        assert len(set(shifted)) < len(shifted)
        return
    # breadth-first search over swaps, tracking parity
    target = out.seq.seq
    frontier, seen = {tuple(seq): 0}, {tuple(seq): 0}
    while target not in seen:
        nxt = {}
        for s, parity in frontier.items():
            for t in _moves(s):
                if t not in seen:
                    nxt[t] = seen[t] = parity ^ 1
        frontier = nxt
    assert out.seq.sign == sign * (-1) ** seen[target]
    assert all(target[i] >= target[i + 1] for i in range(len(target) - 1))


def test_shifts():
    assert shift(signed((7, 5, 4, 4)), 1, -7) == signed((0, 5, 4, 4))
    assert shift_all(signed((7, 5, 4, 4)), (0, -1, 0, 1), 7) == signed((7, -2, 4, 11))
    a = signed((3, 1, 0), -1)
    assert shift_all(a, (0, 0, 0), 5) == a
    with pytest.raises(IndexError):
        shift(a, 4, 1)


def test_resolve_examples():
    sign, shape = resolve_skew_symbol(signed((7, -2, 4, 11)), (2, 1))
    assert sign == 1 and shape == (conjugate((8, 8, 4)), (2, 1))
    assert resolve_skew_symbol(signed((7, 4, 5, 0)), ()) is ZERO
    assert resolve_skew_symbol(signed((7, 4, 0, -2), -1), ()) is ZERO


def test_parse_format():
    assert parse_signed("-7,4,0,-2") == signed((7, 4, 0, -2), -1)
    assert parse_signed("(-7,4)") == signed((-7, 4))
    assert parse_signed(format_signed(signed((-1, 2), -1))) == signed((-1, 2), -1)
    assert sequence_of((2, 1), 4) == (2, 1, 0, 0)
    with pytest.raises(ValueError):
        sequence_of((1, 1, 1), 2)


@given(st.lists(st.integers(0, 5), min_size=1, max_size=4))
def test_partition_sequences_are_fixed(parts):
    lam = tuple(sorted(parts, reverse=True))
    assert normalize(signed(lam)) == (signed(lam), 0)


def test_normalize_is_class_invariant():
    for seq in itertools.product(range(-2, 3), repeat=3):
        out = normalize(signed(seq))
        for t in _moves(seq):
            other = normalize(signed(t, -1))
            assert (out is ZERO) == (other is ZERO)
            if out is not ZERO:
                assert out.seq == other.seq
