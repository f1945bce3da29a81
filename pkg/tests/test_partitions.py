import math

import pytest

from sodlab.errors import VerificationError
from sodlab.partitions import (
    Box,
    box_enumerate,
    canon,
    induction_blocks,
    interleaves,
    interleavings,
    lambda_superscript,
    pad,
    shift,
    staircase_terms,
    transpose,
)


def test_canon_strips_trailing_zeros():
    assert canon((2, 1, 0, 0)) == (2, 1)
    assert canon((0, 0)) == ()
    assert canon(()) == ()
    with pytest.raises(ValueError):
        canon((1, 2))
    with pytest.raises(ValueError):
        canon((1, -1))


def test_box_enumerate_2_2():
    assert box_enumerate(Box(2, 2)) == [
        (), (1,), (1, 1), (2,), (2, 1), (2, 2),
    ]


def test_box_degenerate():
    assert box_enumerate(Box(3, 0)) == [()]
    assert box_enumerate(Box(0, 5)) == [()]
    assert box_enumerate(Box(-1, 2)) == []
    assert Box(-1, 2).is_empty
    assert () in Box(0, 0)
    assert (1,) not in Box(0, 3)


def test_box_cardinality_sweep():
    for height in range(9):
        for width in range(9):
            members = box_enumerate(Box(height, width))
            assert len(members) == math.comb(height + width, height)
            assert len(set(members)) == len(members)
            assert all(m in Box(height, width) for m in members)


def test_transpose_examples():
    assert transpose((2, 1)) == (2, 1)
    assert transpose((3, 1)) == (2, 1, 1)
    assert transpose(()) == ()


def test_transpose_involution_on_box():
    for lam in box_enumerate(Box(6, 6)):
        assert transpose(transpose(lam)) == lam


def test_shift_examples():
    assert shift((1,), 1, 2) == (2, 1)
    assert shift((), 0, 3) == (0, 0, 0)
    assert shift((2,), 1, 2) == (3, 1)
    with pytest.raises(ValueError):
        shift((1,), -1, 2)


def test_lambda_superscript_examples():
    assert lambda_superscript((2, 1), 1, 2) == (2, 1, 1)
    assert lambda_superscript((2, 1), 2, 2) == (2, 2, 2)
    assert lambda_superscript((1,), 1, 2) == (1, 1, 1)
    with pytest.raises(ValueError):
        lambda_superscript((2, 1), 3, 2)
    with pytest.raises(ValueError):
        lambda_superscript((2, 1), 0, 2)


def test_lambda_superscript_membership():
    # the result always leaves the smaller box but stays in the taller one
    for box_height in (1, 2, 3):
        for lam in box_enumerate(Box(box_height, 3)):
            width = lam[0] if lam else 0
            for i in range(1, width + 1):
                out = lambda_superscript(lam, i, box_height)
                assert out in Box(box_height + 1, width)
                assert out not in Box(box_height, width)
                assert len(out) == box_height + 1


def test_staircase_terms_extends_past_width():
    # insertion above the top row, cut off by the exterior bound
    terms = staircase_terms((), 0, 2)
    assert terms == [(0, (0,), 0), (1, (1,), 1), (2, (2,), 2)]
    terms = staircase_terms((1,), 1, 4)
    assert terms[0] == (0, (1, 0), 0)
    assert terms[1] == (1, (1, 1), 1)
    assert terms[2] == (2, (2, 2), 3)
    assert terms[3] == (3, (3, 2), 4)
    assert len(terms) == 4


def test_interleaves_examples():
    assert interleaves((1,), (2, 1), 2)
    assert not interleaves((2,), (1,), 2)
    assert interleaves((1, 1), (2, 1), 3)


def test_interleaves_count_is_gap_product():
    for lam in box_enumerate(Box(3, 3)):
        padded = pad(lam, 3)
        count = sum(1 for nu in box_enumerate(Box(2, 3))
                    if interleaves(nu, lam, 3))
        expected = 1
        for k in range(2):
            expected *= padded[k] - padded[k + 1] + 1
        assert count == expected
        assert count == sum(1 for _ in interleavings(lam, 3))


def test_induction_blocks_example():
    fam = induction_blocks(4, 2, 2, 1)
    labels = [label for label, _ in fam.blocks]
    assert labels == [("psi", 0), ("det", 1)]
    psi0 = dict(fam.blocks)[("psi", 0)]
    det = dict(fam.blocks)[("det", 1)]
    assert set(psi0) == {(), (1,), (2,)}
    assert set(det) == {(1, 1), (2, 1), (2, 2)}
    assert sorted(fam.members()) == sorted(box_enumerate(Box(2, 2)))


def test_induction_blocks_width_one():
    fam = induction_blocks(2, 1, 1, 1)
    assert dict(fam.blocks)[("psi", 0)] == ((),)
    assert dict(fam.blocks)[("det", 1)] == ((1,),)


def test_induction_blocks_k_zero():
    fam = induction_blocks(3, 1, 0, 2)  # d < r + 1: single psi block
    assert [label for label, _ in fam.blocks] == [("psi", 0)]
    assert fam.members() == [()]
    fam = induction_blocks(3, 2, 0, 1)  # d > r: degenerate det block
    members = fam.members()
    assert members == [()]


def test_induction_blocks_partition_sweep():
    for n in range(1, 8):
        for d in range(n + 1):
            for r in range(n + 1):
                for k in range(d + 1):
                    fam = induction_blocks(n, d, k, r)
                    assert sorted(fam.members()) == sorted(
                        box_enumerate(Box(n - d, k))
                    )


def test_induction_blocks_bound_flag():
    fam = induction_blocks(4, 2, 2, 1)
    assert fam.naive_bound == 4 - 2 + 1 - 1 == 2
    assert fam.bound_mismatch  # used bound is 0 here
