#! /usr/bin/env python3
# -*- coding: utf-8 -*-
#
# dct16 - Factorization.py tests
#
import numpy
import pytest

import Factorization
from Transform      import InvalidArgument, IntegerKernel, proposed_kernel, scaling_diagonal
from Factorization  import OpCount, ButterflyStage, PermutationStage
from Factorization  import FactorizedTransform, P1_CYCLES, P2_CYCLES
from Factorization  import build_proposed_factorization, parse_cycles
from Factorization  import derive_residual_permutation, butterfly, compose


@pytest.fixture(scope="module")
def ft():
    return build_proposed_factorization()


def test_pipeline_composes_to_proposed_kernel(ft):
    assert numpy.array_equal(ft.matrix(), proposed_kernel().entries)


def test_pipeline_stage_order(ft):
    assert [s.name for s in ft.stages] == ["M1", "P1", "M2", "M3", "M4", "P2"]


def test_pipeline_costs_44_additions(ft):
    assert ft.count_ops() == OpCount(44, 0, 0)
    assert Factorization.count_ops(ft).total == 44
    assert ft.stage_additions() == [
        ("M1", 16), ("P1", 0), ("M2", 16), ("M3", 8), ("M4", 4), ("P2", 0)
    ]


def test_apply_matches_dense_product_exactly(ft, rng):
    t = proposed_kernel().entries
    for _ in range(1000):
        x = rng.integers(-255, 256, size=16)
        y = Factorization.apply(ft, x)
        assert y.dtype == numpy.int64
        assert numpy.array_equal(y, t @ x)


def test_m1_of_all_ones(ft):
    y = ft.stages[0].apply(numpy.ones(16, dtype=numpy.int64))
    assert y.tolist() == [2] * 8 + [0] * 8


def test_apply_all_ones_gives_dc_only(ft):
    assert Factorization.apply(ft, numpy.ones(16, dtype=int)).tolist() == [16] + [0] * 15


@pytest.mark.parametrize("i", range(16))
def test_apply_basis_vector_gives_kernel_column(ft, i):
    e = numpy.zeros(16, dtype=numpy.int64)
    e[i] = 1
    assert numpy.array_equal(Factorization.apply(ft, e), proposed_kernel().entries[:, i])


def test_apply_is_linear(ft, rng):
    x = rng.integers(-255, 256, size=16)
    y = rng.integers(-255, 256, size=16)
    a, b = 3, -7
    assert numpy.array_equal(
        Factorization.apply(ft, a * x + b * y),
        a * Factorization.apply(ft, x) + b * Factorization.apply(ft, y)
    )


def test_scaled_pipeline_preserves_norm(ft, rng):
    scaling = scaling_diagonal(proposed_kernel()).values
    x = rng.normal(size=(16, 200))
    y = scaling.reshape(-1, 1) * ft.apply(x)
    assert numpy.allclose(numpy.linalg.norm(y, axis=0), numpy.linalg.norm(x, axis=0))
    q = scaling.reshape(-1, 1) * ft.matrix()
    assert numpy.allclose(q @ q.T, numpy.eye(16))


def test_apply_along_axis(ft, rng):
    t = proposed_kernel().entries
    x = rng.normal(size=(5, 16, 3))
    y = ft.apply(x, axis=1)
    assert y.shape == x.shape
    assert numpy.allclose(y, numpy.einsum("ij,ajb->aib", t, x))


def test_apply_rejects_wrong_length(ft):
    with pytest.raises(InvalidArgument):
        Factorization.apply(ft, numpy.zeros(15))
    with pytest.raises(InvalidArgument):
        Factorization.apply(ft, numpy.zeros((16, 2)))


def test_transpose_computes_kernel_transpose(ft):
    ftt = ft.transpose()
    assert numpy.array_equal(ftt.matrix(), proposed_kernel().entries.T)
    assert ftt.count_ops().additions == 44


def test_check_raises_on_other_target(ft):
    with pytest.raises(FactorizedTransform.Mismatch) as e:
        ft.check(IntegerKernel(numpy.eye(16, dtype=int)))
    assert e.value.reason == "factorization-mismatch"


def test_butterfly_block_form():
    b = butterfly(4)
    assert numpy.array_equal(
        b,
        [[1, 0, 0, 1], [0, 1, 1, 0], [0, 1, -1, 0], [1, 0, 0, -1]]
    )


def test_butterfly_stage_round_trips_its_matrix():
    m = butterfly(8)
    stage = ButterflyStage.from_matrix(m, "B8")
    assert numpy.array_equal(stage.matrix(), m)
    assert stage.additions == 8


def test_butterfly_stage_rejects_dense_rows():
    with pytest.raises(InvalidArgument):
        ButterflyStage.from_matrix([[1, 1, 1], [0, 1, 0], [0, 0, 1]])


def test_butterfly_stage_rejects_unknown_op():
    with pytest.raises(InvalidArgument):
        ButterflyStage([("multiply", 0, 1), ("copy", 1)])


def test_transposition_convention():
    p = parse_cycles("(1)(2 9)", 16)
    y = p.apply(numpy.arange(16))
    assert y[1] == 8 and y[8] == 1
    assert y[0] == 0 and y[15] == 15
    assert p.matrix()[1, 8] == 1


def test_closing_repeat_is_cycle_closure():
    assert parse_cycles("(10 12 16 10)", 16) == parse_cycles("(10 12 16)", 16)


def test_three_cycle_maps_to_next_element():
    p = parse_cycles("(3 8 16)", 16)
    assert p.mapping[2] == 7
    assert p.mapping[7] == 15
    assert p.mapping[15] == 2


def test_cycles_renders_back(ft):
    p2 = ft.stages[-1]
    assert p2.cycles() == "(1)(2 9)(3 8 16 15 5 4 12 11 7 6 10 14 13)"
    assert parse_cycles(p2.cycles(), 16) == parse_cycles(P2_CYCLES, 16)


def test_permutation_transpose_is_inverse():
    p = parse_cycles(P1_CYCLES, 16)
    assert numpy.array_equal(p.transpose().matrix(), p.matrix().T)


@pytest.mark.parametrize("text", [
    "(1 17)",
    "(0 2)",
    "(2 3)(3 4)",
    "1 2",
    "(1 x)",
    "()",
    ""
])
def test_parse_cycles_errors(text):
    with pytest.raises(PermutationStage.ParseError) as e:
        parse_cycles(text, 16)
    assert e.value.reason == "parse-error"


def test_residual_permutation_is_p2(ft):
    residual = derive_residual_permutation(proposed_kernel(), ft.stages[:-1])
    assert residual == parse_cycles(P2_CYCLES, 16)
    assert numpy.array_equal(
        residual.matrix() @ compose(ft.stages[:-1]),
        proposed_kernel().entries
    )


def test_residual_permutation_inconsistent_when_a_stage_is_missing(ft):
    stages = [s for s in ft.stages[:-1] if s.name != "M4"]
    with pytest.raises(FactorizedTransform.Inconsistent) as e:
        derive_residual_permutation(proposed_kernel(), stages)
    assert e.value.reason == "inconsistent-factorization"


def test_permutations_only_cost_nothing():
    ft = FactorizedTransform([parse_cycles(P1_CYCLES, 16), parse_cycles(P2_CYCLES, 16)])
    assert ft.count_ops() == OpCount(0, 0, 0)


def test_fixed_points_only_is_identity():
    p = parse_cycles("(1)(2)(3)", 3)
    assert p == PermutationStage(range(3))
    assert numpy.array_equal(p.matrix(), numpy.eye(3, dtype=int))


def test_residual_of_m1_alone_is_identity(ft):
    m1 = ft.stages[0]
    identity = PermutationStage(range(16))
    residual = derive_residual_permutation(
        IntegerKernel(m1.matrix()), [m1, identity, identity]
    )
    assert residual == identity


def test_residual_inconsistent_for_negated_row(ft):
    entries = proposed_kernel().entries.copy()
    entries[5] = -entries[5]
    with pytest.raises(FactorizedTransform.Inconsistent):
        derive_residual_permutation(IntegerKernel(entries), ft.stages[:-1])


def test_stage_orders_must_agree():
    with pytest.raises(InvalidArgument):
        FactorizedTransform(
            [ButterflyStage.from_matrix(butterfly(4)), parse_cycles("(1 2)", 8)]
        )


# EOF
