#! /usr/bin/env python3
# -*- coding: utf-8 -*-
#
# dct16 - Transform.py tests
#
import math

import numpy
import pytest
from scipy.linalg import hadamard

from Transform import Error, InvalidArgument
from Transform import IntegerKernel, DiagonalScaling, OrthonormalTransform
from Transform import exact_dct_matrix, proposed_kernel, scaling_diagonal
from Transform import orthogonalize, sign_changes, wht_matrix_16, direct_additions


GRAM_DIAGONAL = (16, 16, 4, 8, 8, 16, 4, 4, 16, 4, 4, 8, 8, 4, 4, 4)


def test_proposed_kernel_is_ternary_16x16():
    kernel = proposed_kernel()
    assert kernel.order == 16
    assert kernel.is_ternary()
    assert kernel.entries.dtype == numpy.int64


def test_proposed_kernel_gram_is_diagonal():
    gram = proposed_kernel().gram()
    assert numpy.array_equal(gram, numpy.diag(GRAM_DIAGONAL))


def test_kernel_entries_are_read_only():
    kernel = proposed_kernel()
    with pytest.raises(ValueError):
        kernel.entries[0, 0] = 5


def test_proposed_kernel_rows():
    kernel = proposed_kernel()
    assert numpy.all(kernel.entries[0] == 1)
    assert kernel.entries[7].tolist() == [0, 0, 0, 0, 0, 0, -1, 1, -1, 1, 0, 0, 0, 0, 0, 0]
    assert numpy.trace(kernel.gram()) == kernel.nonzero_count() == 128


def test_identity_kernel_scaling():
    assert numpy.all(scaling_diagonal(IntegerKernel(numpy.eye(5, dtype=int))).values == 1.0)


def test_scaling_diagonal_of_proposed_kernel():
    scaling = scaling_diagonal(proposed_kernel())
    assert numpy.allclose(scaling.values, 1.0 / numpy.sqrt(GRAM_DIAGONAL))
    assert scaling.values[0] == pytest.approx(0.25)
    assert scaling.values[2] == pytest.approx(0.5)
    assert scaling.values[3] == pytest.approx(1.0 / math.sqrt(8.0))


def test_orthogonalized_proposed_is_orthonormal():
    t = orthogonalize(proposed_kernel())
    assert t.provenance == OrthonormalTransform.ORTHOGONALIZED
    assert t.deviation() < 1e-12
    assert numpy.allclose(t.matrix[0], 0.25)
    assert numpy.allclose(t.matrix, t.scaling.matrix() @ t.kernel.entries)


def test_exact_dct_matrix_is_orthonormal():
    c = exact_dct_matrix(16)
    assert c.provenance == OrthonormalTransform.EXACT_DCT
    assert c.deviation() < 1e-12
    assert numpy.all(c.matrix[0] == 0.25)
    assert c.matrix[1, 0] == pytest.approx(math.sqrt(2 / 16) * math.cos(math.pi / 32))


def test_exact_dct_order_one():
    assert exact_dct_matrix(1).matrix.tolist() == [[1.0]]


@pytest.mark.parametrize("order", [1, 2, 8, 32])
def test_exact_dct_other_orders(order):
    assert exact_dct_matrix(order).deviation() < 1e-12


@pytest.mark.parametrize("order", [0, -3])
def test_exact_dct_rejects_bad_order(order):
    with pytest.raises(InvalidArgument):
        exact_dct_matrix(order)


def test_identical_rows_are_rank_deficient():
    entries = numpy.eye(4, dtype=int)
    entries[1] = entries[0]
    with pytest.raises(IntegerKernel.RankDeficient) as e:
        scaling_diagonal(IntegerKernel(entries))
    assert e.value.reason == "rank-deficient"


def test_zero_row_is_rank_deficient():
    entries = numpy.eye(4, dtype=int)
    entries[3] = 0
    with pytest.raises(IntegerKernel.RankDeficient):
        orthogonalize(IntegerKernel(entries))


def test_non_orthogonal_rows_are_not_orthogonalizable():
    with pytest.raises(IntegerKernel.NotOrthogonalizable) as e:
        scaling_diagonal(IntegerKernel([[1, 1], [1, 0]]))
    assert e.value.reason == "not-orthogonalizable"


@pytest.mark.parametrize("entries", [
    [[1, 0, 0], [0, 1, 0]],
    [],
    [[0.5, 1.0], [1.0, 0.0]],
    [["a", "b"], ["c", "d"]]
])
def test_kernel_rejects_invalid_entries(entries):
    with pytest.raises(InvalidArgument):
        IntegerKernel(entries)


def test_scaling_must_be_positive():
    with pytest.raises(InvalidArgument):
        DiagonalScaling([1.0, 0.0])


def test_non_orthonormal_matrix_is_rejected():
    with pytest.raises(OrthonormalTransform.NotOrthonormal):
        OrthonormalTransform(2.0 * numpy.eye(4), OrthonormalTransform.PLUGIN)


def test_unknown_provenance_is_rejected():
    with pytest.raises(InvalidArgument):
        OrthonormalTransform(numpy.eye(4), "guess")


def test_errors_are_value_errors():
    assert issubclass(Error, ValueError)
    assert issubclass(IntegerKernel.RankDeficient, Error)


def test_sign_changes():
    assert sign_changes([1, 1, -1, -1]) == 1
    assert sign_changes([1, 0, -1, 0, 1]) == 2
    assert sign_changes([0, 0]) == 0


def test_wht_sequency_row_k_has_k_sign_changes():
    w = wht_matrix_16("sequency")
    assert w.provenance == OrthonormalTransform.WHT
    assert [sign_changes(row) for row in w.matrix] == list(range(16))
    assert numpy.all(w.matrix[0] == 0.25)
    assert numpy.all(numpy.abs(w.matrix[15]) == 0.25)
    assert w.deviation() < 1e-12


def test_wht_default_ordering_is_sequency():
    assert numpy.array_equal(wht_matrix_16().matrix, wht_matrix_16("sequency").matrix)


def test_wht_natural_is_sylvester_order():
    w = wht_matrix_16("natural")
    assert numpy.array_equal(w.matrix, hadamard(16) / 4.0)


def test_wht_unknown_ordering():
    with pytest.raises(InvalidArgument):
        wht_matrix_16("dyadic")


def test_direct_computation_needs_112_additions():
    assert direct_additions(proposed_kernel()) == 112


# EOF
