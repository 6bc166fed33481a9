#! /usr/bin/env python3
# -*- coding: utf-8 -*-
#
# dct16 - multiplierless 16-point DCT approximation toolkit
#
# Metrics.py
#   0.1.0   2026.10.18  Initial version.
#
#
# Similarity (d2, total error energy, MSE) and coding (coding gain,
# transform efficiency) figures of merit over a first-order Markov model,
# and the complexity comparison of registered transforms.
#
# All functions take OrthonormalTransform instances or plain square
# arrays.
#
import math
import numpy

from typing import NamedTuple
from scipy.linalg import toeplitz

from Config     import Config
from Transform  import Error, InvalidArgument


class NumericalDegeneracy(Error):
    reason = "numerical-degeneracy"



class MarkovModel:
    """Stationary first-order Markov covariance, r_ij = rho^|i - j|."""

    def __init__(self, order: int = 16, rho: float = None):
        rho = Config.Metrics.rho if rho is None else rho
        if not isinstance(order, (int, numpy.integer)) or order < 1:
            raise InvalidArgument("Model order must be >= 1, got {}".format(order))
        if not 0.0 <= rho < 1.0:
            raise InvalidArgument("rho must be in [0, 1), got {}".format(rho))
        self.order  = int(order)
        self.rho    = float(rho)


    def covariance(self) -> numpy.ndarray:
        return toeplitz(self.rho ** numpy.arange(self.order))


    def __repr__(self):
        return "MarkovModel(order={}, rho={})".format(self.order, self.rho)



class MetricReport(NamedTuple):
    name:               str
    d2:                 float
    epsilon:            float
    mse:                float
    coding_gain_db:     float
    efficiency_pct:     float



def _matrix(t) -> numpy.ndarray:
    return numpy.asarray(getattr(t, "matrix", t), dtype=numpy.float64)


def _pair(approx, exact):
    a, c = _matrix(approx), _matrix(exact)
    if a.shape != c.shape or a.ndim != 2:
        raise InvalidArgument(
            "Transform orders differ: {} vs {}".format(a.shape, c.shape)
        )
    return a, c


def _model_for(m: numpy.ndarray, model: MarkovModel) -> MarkovModel:
    if model is None:
        return MarkovModel(m.shape[0])
    if model.order != m.shape[0]:
        raise InvalidArgument(
            "Model order {} does not match transform order {}".format(
                model.order, m.shape[0]
            )
        )
    return model


def markov_covariance(model: MarkovModel) -> numpy.ndarray:
    return model.covariance()


def total_error_energy(approx, exact) -> float:
    """pi * ||C - C^||_F^2 (Parseval form of the transfer-function error)."""
    a, c = _pair(approx, exact)
    return float(math.pi * numpy.sum((c - a) ** 2))


def transform_mse(approx, exact, model: MarkovModel = None) -> float:
    """(1/N) * trace((C - C^) R (C - C^)^T)."""
    a, c = _pair(approx, exact)
    r = _model_for(a, model).covariance()
    d = c - a
    return float(numpy.trace(d @ r @ d.T) / a.shape[0])


def _transformed_covariance(t, model: MarkovModel) -> numpy.ndarray:
    m = _matrix(t)
    r = _model_for(m, model).covariance()
    return m @ r @ m.T


def coding_gain_db(t, model: MarkovModel = None) -> float:
    """10 log10 of arithmetic over geometric mean of the coefficient
    variances diag(T R T^T)."""
    variances = numpy.diag(_transformed_covariance(t, model))
    if numpy.any(variances <= 0):
        raise NumericalDegeneracy(
            "Non-positive coefficient variance {:.3e}".format(variances.min())
        )
    arithmetic = numpy.mean(variances)
    geometric = math.exp(numpy.mean(numpy.log(variances)))
    return float(10.0 * math.log10(arithmetic / geometric))


def transform_efficiency_pct(t, model: MarkovModel = None) -> float:
    """100 * sum|diag(R^)| / sum|R^|, R^ = T R T^T."""
    covariance = numpy.abs(_transformed_covariance(t, model))
    return float(100.0 * numpy.trace(covariance) / numpy.sum(covariance))


def dct_distortion_d2(approx, exact) -> float:
    """1 - (1/N) * sum_k (c_k . c^_k)^2 over matched unit-norm rows."""
    a, c = _pair(approx, exact)
    for label, m in (("approximation", a), ("reference", c)):
        norms = numpy.linalg.norm(m, axis=1)
        if not numpy.allclose(norms, 1.0, rtol=0, atol=1e-9):
            raise InvalidArgument(
                "Rows of the {} are not unit-norm (worst {:.6f})".format(
                    label, norms[numpy.argmax(numpy.abs(norms - 1.0))]
                )
            )
    dots = numpy.sum(a * c, axis=1)
    return float(1.0 - numpy.mean(dots ** 2))


def evaluate(name: str, approx, exact, model: MarkovModel = None) -> MetricReport:
    """All five figures of merit for one transform."""
    return MetricReport(
        name,
        dct_distortion_d2(approx, exact),
        total_error_energy(approx, exact),
        transform_mse(approx, exact, model),
        coding_gain_db(approx, model),
        transform_efficiency_pct(approx, model)
    )


def complexity_table(entries) -> list:
    """(name, mult, add, shift, total) per registry entry, in given order."""
    return [
        (
            e.name,
            e.multiplications,
            e.additions,
            e.bit_shifts,
            e.multiplications + e.additions + e.bit_shifts
        )
        for e in entries
    ]


def savings_pct(entry, reference) -> float:
    """Percentage fewer total operations of 'entry' relative to 'reference'."""
    if reference.total == 0:
        raise InvalidArgument(
            "Reference '{}' has zero operations".format(reference.name)
        )
    return 100.0 * (reference.total - entry.total) / reference.total


# EOF
