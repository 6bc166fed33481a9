#! /usr/bin/env python3
# -*- coding: utf-8 -*-
#
# dct16 - Metrics.py tests
#
# Golden values are the published three-decimal figures for N = 16 and
# rho = 0.95.
#
import math

import numpy
import pytest

from Transform  import InvalidArgument, exact_dct_matrix
from Registry   import Registry, Entry
from Metrics    import MarkovModel, MetricReport, NumericalDegeneracy
from Metrics    import markov_covariance, total_error_energy, transform_mse
from Metrics    import coding_gain_db, transform_efficiency_pct
from Metrics    import dct_distortion_d2, evaluate, complexity_table, savings_pct


GOLDEN = {
    #               d2      epsilon  mse    gain   efficiency
    "wht":      (0.878, 92.563, 0.428, 8.194, 70.646),
    "proposed": (0.493, 41.000, 0.095, 7.857, 67.608)
}


@pytest.fixture(scope="module")
def registry():
    return Registry.builtin()


@pytest.fixture(scope="module")
def exact():
    return exact_dct_matrix(16)


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_published_figures(registry, exact, name):
    report = evaluate(name, registry.get(name).transform, exact)
    assert isinstance(report, MetricReport)
    for value, expected in zip(report[1:], GOLDEN[name]):
        assert value == pytest.approx(expected, abs=1e-3)


def test_exact_dct_figures(exact):
    report = evaluate("dct", exact, exact)
    assert report.d2 == pytest.approx(0.0, abs=1e-12)
    assert report.epsilon == pytest.approx(0.0, abs=1e-12)
    assert report.mse == pytest.approx(0.0, abs=1e-12)
    assert report.coding_gain_db == pytest.approx(9.455, abs=1e-3)
    assert report.efficiency_pct == pytest.approx(88.452, abs=1e-3)


def test_markov_covariance():
    r = markov_covariance(MarkovModel(4, 0.5))
    assert numpy.allclose(r[0], [1.0, 0.5, 0.25, 0.125])
    assert numpy.allclose(r, r.T)
    assert numpy.all(numpy.diag(r) == 1.0)


def test_markov_covariance_at_default_rho():
    r = markov_covariance(MarkovModel(16, 0.95))
    assert r[0, 1] == pytest.approx(0.95)
    assert r[0, 2] == pytest.approx(0.9025)
    assert r[3, 0] == pytest.approx(0.95 ** 3)


@pytest.mark.parametrize("rho", [0.0, 0.25, 0.5, 0.9, 0.95, 0.99])
def test_markov_covariance_is_positive_definite(rho):
    assert numpy.all(numpy.linalg.eigvalsh(markov_covariance(MarkovModel(16, rho))) > 0)


def test_error_measures_ignore_row_order(registry, exact, rng):
    approx = registry.get("proposed").transform.matrix
    order = rng.permutation(16)
    assert total_error_energy(approx[order], exact.matrix[order]) == pytest.approx(
        total_error_energy(approx, exact)
    )
    assert transform_mse(approx[order], exact.matrix[order]) == pytest.approx(
        transform_mse(approx, exact)
    )


@pytest.mark.parametrize("name", ["dct", "proposed", "wht"])
def test_coding_measures_ignore_row_order(registry, rng, name):
    m = registry.get(name).transform.matrix
    order = rng.permutation(16)
    assert coding_gain_db(m[order]) == pytest.approx(coding_gain_db(m))
    assert transform_efficiency_pct(m[order]) == pytest.approx(transform_efficiency_pct(m))


def test_wht_is_further_from_dct_than_proposed(registry, exact):
    proposed = total_error_energy(registry.get("proposed").transform, exact)
    wht = total_error_energy(registry.get("wht").transform, exact)
    assert wht > proposed > 0.0


def test_markov_model_defaults():
    model = MarkovModel()
    assert model.order == 16
    assert model.rho == 0.95


@pytest.mark.parametrize("rho", [-0.1, 1.0, 1.5])
def test_markov_model_rejects_rho(rho):
    with pytest.raises(InvalidArgument):
        MarkovModel(16, rho)


def test_zero_correlation_has_no_coding_gain(exact):
    model = MarkovModel(16, 0.0)
    assert coding_gain_db(exact, model) == pytest.approx(0.0, abs=1e-12)
    assert transform_efficiency_pct(exact, model) == pytest.approx(100.0)


def test_identity_has_no_coding_gain():
    assert coding_gain_db(numpy.eye(16)) == pytest.approx(0.0, abs=1e-12)


def test_metrics_accept_plain_arrays(exact):
    assert total_error_energy(numpy.eye(16), exact.matrix) == pytest.approx(
        math.pi * numpy.sum((exact.matrix - numpy.eye(16)) ** 2)
    )


def test_mismatched_orders(exact):
    with pytest.raises(InvalidArgument):
        total_error_energy(numpy.eye(8), exact)
    with pytest.raises(InvalidArgument):
        transform_mse(exact, exact, MarkovModel(8))


def test_degenerate_variance():
    with pytest.raises(NumericalDegeneracy) as e:
        coding_gain_db(numpy.zeros((16, 16)))
    assert e.value.reason == "numerical-degeneracy"


def test_d2_requires_unit_rows(exact):
    with pytest.raises(InvalidArgument):
        dct_distortion_d2(2.0 * numpy.eye(16), exact)


def test_complexity_table(registry):
    rows = complexity_table(registry.select(["dct", "proposed", "wht"]))
    assert rows == [
        ("dct", 44, 74, 0, 118),
        ("proposed", 0, 44, 0, 44),
        ("wht", 0, 64, 0, 64)
    ]


@pytest.mark.parametrize("additions,expected", [
    (64, 31.25),
    (60, 26.67),
    (72, 38.89)
])
def test_savings(registry, additions, expected):
    reference = Entry("reference", None, additions)
    assert savings_pct(registry.get("proposed"), reference) == pytest.approx(
        expected, abs=5e-3
    )


def test_savings_against_empty_reference(registry):
    with pytest.raises(InvalidArgument):
        savings_pct(registry.get("proposed"), Entry("free", None))


# EOF
