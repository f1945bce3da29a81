import math

import pytest

from sodlab.characters import LaurentCharacter
from sodlab.errors import VerificationError
from sodlab.partitions import Box, box_enumerate
from sodlab.sod import (
    LocalSetup,
    a_sequence,
    block_order,
    component_count,
    enumerate_components,
    generation_trace,
    inverse_a_sequence,
    k0_unitriangularity,
    order_compare,
)

R4_PRINTED_ORDER = [
    (0, ()), (1, (1, 1, 1)), (1, (1, 1)), (2, (2, 2)),
    (1, (1,)), (2, (2, 1)), (2, (2,)), (3, (3,)),
    (1, ()), (2, (1, 1)), (2, (1,)), (3, (2,)),
    (2, ()), (3, (1,)), (3, ()), (4, ()),
]


def test_a_sequence_examples():
    assert a_sequence(2, (2, 1), 4) == (0, 1)
    assert a_sequence(0, (), 4) == (0, 0, 0, 0)
    assert a_sequence(4, (), 4) == ()
    with pytest.raises(ValueError):
        a_sequence(1, (2,), 4)  # width exceeds i


def test_a_sequence_roundtrip():
    for r in range(7):
        for i in range(r + 1):
            for lam in box_enumerate(Box(r - i, i)):
                assert inverse_a_sequence(a_sequence(i, lam, r), r) == (i, lam)


def test_r4_printed_order():
    comps = enumerate_components(4, 4)
    assert [(c.i, c.lam) for c in comps] == R4_PRINTED_ORDER


def test_order_examples():
    comps = {(c.i, c.lam): c for c in enumerate_components(4, 4)}
    assert order_compare(comps[(0, ())], comps[(1, (1, 1, 1))]) == -1
    assert order_compare(comps[(1, (1,))], comps[(2, (2, 1))]) == -1
    assert order_compare(comps[(3, ())], comps[(4, ())]) == -1
    assert order_compare(comps[(4, ())], comps[(3, ())]) == 1
    assert order_compare(comps[(4, ())], comps[(4, ())]) == 0


def test_order_is_total():
    for r in range(7):
        for d in range(1, 7):
            comps = enumerate_components(r, d)
            keys = [c.order_key_ for c in comps]
            assert len(set(keys)) == len(keys)
            assert keys == sorted(keys)


def test_component_counts():
    assert len(enumerate_components(1, 1)) == 2
    assert len(enumerate_components(3, 2)) == 7
    assert len(enumerate_components(0, 3)) == 1
    for r in range(7):
        for d in range(1, 7):
            count = len(enumerate_components(r, d))
            assert count == component_count(r, d)
            assert count == sum(
                math.comb(r, i) for i in range(min(r, d) + 1))
            if d >= r:
                assert count == 2 ** r
            per_index = {}
            for c in enumerate_components(r, d):
                per_index[c.i] = per_index.get(c.i, 0) + 1
            for i, copies in per_index.items():
                assert copies == math.comb(r, i)


def test_targets_and_kernels():
    comps = enumerate_components(2, 1)
    by_pair = {(c.i, c.lam): c for c in comps}
    assert by_pair[(0, ())].target == "Grass(E^∨[1]; 1)"
    assert by_pair[(1, (1,))].kernel == "S^(1)(E^univ_(1,0)) ⊗ det(Q)^1"


def test_generation_trace_2_1_1():
    trace = generation_trace(LocalSetup(2, 1, 1))
    leaves = trace.leaves
    assert [(l.i, l.lam) for l in leaves] == [(0, ()), (1, ())]
    assert leaves[0].word == (0,)
    assert leaves[0].twist == 0
    assert leaves[1].word == ()
    assert leaves[1].twist == 1
    assert leaves[1].functor_word() == "(⊗det^1)∘Φ⁰"


def test_generation_trace_3_1_2():
    trace = generation_trace(LocalSetup(3, 1, 2))
    leaves = trace.leaves
    assert [(l.i, l.lam) for l in leaves] == [
        (0, ()), (1, (1,)), (1, ()), (2, ())]
    # the i = 0 component targets an empty moduli space here (d > m)
    assert leaves[0].is_empty
    assert not any(l.is_empty for l in leaves[1:])


def test_generation_trace_r0():
    trace = generation_trace(LocalSetup(3, 3, 2))
    assert [(l.i, l.lam) for l in trace.leaves] == [(0, ())]
    assert trace.leaves[0].functor_word() == "Φ⁰"


def test_generation_trace_sweep():
    for n in range(1, 6):
        for m in range(n + 1):
            for d in range(1, n + 1):
                generation_trace(LocalSetup(n, m, d))  # raises on mismatch


def test_block_order_enumerates_box():
    for n in range(1, 6):
        for d in range(1, n + 1):
            for r in range(n + 1):
                order = block_order(n, d, r)
                assert sorted(order) == sorted(box_enumerate(Box(n - d, d)))


def test_k0_certificates():
    for nmd in [(2, 1, 1), (3, 1, 2), (3, 2, 2), (4, 2, 2)]:
        setup = LocalSetup(*nmd)
        cert = k0_unitriangularity(setup)
        assert cert.ok
        one = LaurentCharacter.one(setup.m)
        pos = {alpha: k for k, alpha in enumerate(cert.order)}
        for alpha in cert.order:
            assert cert.entry(alpha, alpha) == one
            for beta in cert.order:
                if pos[beta] < pos[alpha]:
                    assert cert.entry(alpha, beta).is_zero


def test_k0_2_1_1_matrix_is_identityish():
    cert = k0_unitriangularity(LocalSetup(2, 1, 1))
    assert cert.order == [(), (1,)]
    # exceptional-divisor row picks up the single Koszul correction -y
    assert cert.entry((), (1,)) == LaurentCharacter(1, {(1,): -1})
    assert cert.entry((1,), ()).is_zero


def test_local_setup_validation():
    with pytest.raises(ValueError):
        LocalSetup(2, 3, 1)
    with pytest.raises(ValueError):
        LocalSetup(2, 1, 3)
    assert LocalSetup(4, 1, 2).r == 3
