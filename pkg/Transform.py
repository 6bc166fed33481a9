#! /usr/bin/env python3
# -*- coding: utf-8 -*-
#
# dct16 - multiplierless 16-point DCT approximation toolkit
#
# Transform.py
#   0.1.0   2026.10.18  Initial version.
#   0.2.0   2026.10.18  Natural order Walsh-Hadamard added.
#
#
# Exact DCT-II, the proposed integer kernel T, its orthogonalizing
# diagonal S, the orthonormal approximation C^ = S * T and the
# Walsh-Hadamard reference.
#
# Integer kernels are kept as int64 matrices, S and all orthonormal
# matrices as float64. Every array handed out is read-only.
#
import math
import numpy

from scipy.linalg import hadamard

from Config import Config


class Error(ValueError):
    """Base for all domain errors. 'reason' is the machine readable prefix."""
    reason = "error"


class InvalidArgument(Error):
    reason = "invalid-argument"


def _frozen(array):
    array.setflags(write=False)
    return array


# Proposed transformation matrix, transcribed row by row.
_PROPOSED = (
    ( 1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1),
    ( 1,  1,  1,  1,  1,  1,  1,  1, -1, -1, -1, -1, -1, -1, -1, -1),
    ( 1,  0,  0,  0,  0,  0,  0, -1, -1,  0,  0,  0,  0,  0,  0,  1),
    ( 1,  1,  0,  0,  0,  0, -1, -1,  1,  1,  0,  0,  0,  0, -1, -1),
    ( 1,  0,  0, -1, -1,  0,  0,  1,  1,  0,  0, -1, -1,  0,  0,  1),
    ( 1,  1, -1, -1, -1, -1,  1,  1, -1, -1,  1,  1,  1,  1, -1, -1),
    ( 0,  0, -1,  0,  0,  1,  0,  0,  0,  0,  1,  0,  0, -1,  0,  0),
    ( 0,  0,  0,  0,  0,  0, -1,  1, -1,  1,  0,  0,  0,  0,  0,  0),
    ( 1, -1, -1,  1,  1, -1, -1,  1,  1, -1, -1,  1,  1, -1, -1,  1),
    ( 0,  0, -1,  1,  0,  0,  0,  0,  0,  0,  0,  0, -1,  1,  0,  0),
    ( 0, -1,  0,  0,  0,  0,  1,  0,  0,  1,  0,  0,  0,  0, -1,  0),
    ( 0,  0,  1,  1, -1, -1,  0,  0,  0,  0,  1,  1, -1, -1,  0,  0),
    ( 0, -1,  1,  0,  0,  1, -1,  0,  0, -1,  1,  0,  0,  1, -1,  0),
    ( 1, -1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1, -1),
    ( 0,  0,  0, -1,  1,  0,  0,  0,  0,  0,  0,  1, -1,  0,  0,  0),
    ( 0,  0,  0,  0, -1,  1,  0,  0,  0,  0, -1,  1,  0,  0,  0,  0)
)

# diag(T * T^T) of the proposed kernel, off-diagonal entries are zero
PROPOSED_GRAM_DIAGONAL = (16, 16, 4, 8, 8, 16, 4, 4, 16, 4, 4, 8, 8, 4, 4, 4)



class IntegerKernel:
    """Square integer matrix. The proposed T is defined over {0, +1, -1}."""

    class NotOrthogonalizable(Error):
        reason = "not-orthogonalizable"

    class RankDeficient(Error):
        reason = "rank-deficient"


    def __init__(self, entries):
        array = numpy.array(entries)
        if array.ndim != 2 or array.shape[0] != array.shape[1] or array.size == 0:
            raise InvalidArgument(
                "Kernel must be a non-empty square matrix, got shape {}".format(
                    array.shape
                )
            )
        if array.dtype.kind == 'f':
            if not numpy.all(array == numpy.rint(array)):
                raise InvalidArgument("Kernel entries must be integers!")
        elif array.dtype.kind not in "biu":
            raise InvalidArgument(
                "Kernel entries must be integers, got '{}'".format(array.dtype)
            )
        self.entries = _frozen(array.astype(numpy.int64))


    @property
    def order(self) -> int:
        return self.entries.shape[0]


    def gram(self) -> numpy.ndarray:
        """T * T^T, exactly, in integer arithmetic."""
        return self.entries @ self.entries.T


    def is_ternary(self) -> bool:
        return bool(numpy.all(numpy.abs(self.entries) <= 1))


    def nonzero_count(self) -> int:
        return int(numpy.count_nonzero(self.entries))


    def __eq__(self, other):
        if not isinstance(other, IntegerKernel):
            return NotImplemented
        return numpy.array_equal(self.entries, other.entries)


    def __repr__(self):
        return "IntegerKernel(order={}, nonzeros={})".format(
            self.order, self.nonzero_count()
        )



class DiagonalScaling:
    """Per-row positive scale factors, the diagonal of S."""

    def __init__(self, values):
        array = numpy.array(values, dtype=numpy.float64)
        if array.ndim != 1 or array.size == 0:
            raise InvalidArgument("Scaling must be a non-empty vector")
        if not numpy.all(array > 0):
            raise InvalidArgument("Scaling values must be strictly positive")
        self.values = _frozen(array)


    @property
    def order(self) -> int:
        return self.values.size


    def matrix(self) -> numpy.ndarray:
        return numpy.diag(self.values)



class OrthonormalTransform:
    """Real orthonormal matrix with its provenance.

    For provenance ORTHOGONALIZED (and PLUGIN transforms built from a
    kernel) 'kernel' and 'scaling' are set and matrix == diag(S) * T.
    'factorization' is an optional FactorizedTransform computing the
    kernel with additions only.
    """
    EXACT_DCT       = "exact-dct"
    ORTHOGONALIZED  = "orthogonalized-kernel"
    WHT             = "wht"
    PLUGIN          = "plugin"

    class NotOrthonormal(Error):
        reason = "invalid-argument"


    def __init__(
        self,
        matrix,
        provenance: str,
        kernel: IntegerKernel = None,
        scaling: DiagonalScaling = None,
        factorization = None,
        tolerance: float = None
    ):
        if provenance not in (self.EXACT_DCT, self.ORTHOGONALIZED, self.WHT, self.PLUGIN):
            raise InvalidArgument("Unknown provenance '{}'".format(provenance))
        array = numpy.array(matrix, dtype=numpy.float64)
        if array.ndim != 2 or array.shape[0] != array.shape[1] or array.size == 0:
            raise InvalidArgument(
                "Transform must be a non-empty square matrix, got shape {}".format(
                    array.shape
                )
            )
        if (kernel is None) != (scaling is None):
            raise InvalidArgument("Kernel and scaling must be given together")
        if kernel is not None:
            if kernel.order != array.shape[0] or scaling.order != array.shape[0]:
                raise InvalidArgument("Kernel, scaling and matrix orders differ")
        if factorization is not None and kernel is None:
            raise InvalidArgument("A factorization requires an integer kernel")
        self.matrix         = _frozen(array)
        self.provenance     = provenance
        self.kernel         = kernel
        self.scaling        = scaling
        self.factorization  = factorization
        tolerance = tolerance or Config.Transform.orthonormality_tolerance
        deviation = self.deviation()
        if not deviation < tolerance:
            raise OrthonormalTransform.NotOrthonormal(
                "max|M*M^T - I| = {:.3e} exceeds {:.1e}".format(
                    deviation, tolerance
                )
            )


    @property
    def order(self) -> int:
        return self.matrix.shape[0]


    def deviation(self) -> float:
        """Maximum absolute deviation of M * M^T from identity."""
        return float(
            numpy.max(
                numpy.abs(self.matrix @ self.matrix.T - numpy.eye(self.order))
            )
        )


    def __repr__(self):
        return "OrthonormalTransform(order={}, provenance='{}')".format(
            self.order, self.provenance
        )



###############################################################################
#
# Operations
#
###############################################################################

def exact_dct_matrix(order: int) -> OrthonormalTransform:
    """Orthonormal DCT-II. Row k, column n:
    alpha_k * sqrt(2/N) * cos(pi * k * (2n + 1) / (2N))."""
    if not isinstance(order, (int, numpy.integer)) or order < 1:
        raise InvalidArgument("DCT order must be >= 1, got {}".format(order))
    k = numpy.arange(order).reshape(-1, 1)
    n = numpy.arange(order).reshape(1, -1)
    matrix = math.sqrt(2.0 / order) * numpy.cos(
        math.pi * k * (2 * n + 1) / (2.0 * order)
    )
    # alpha_0 * sqrt(2/N) == sqrt(1/N), written directly to keep row 0 exact
    matrix[0, :] = math.sqrt(1.0 / order)
    return OrthonormalTransform(matrix, OrthonormalTransform.EXACT_DCT)


def proposed_kernel() -> IntegerKernel:
    return IntegerKernel(_PROPOSED)


def scaling_diagonal(kernel: IntegerKernel) -> DiagonalScaling:
    """S = sqrt((T * T^T)^-1), defined when T * T^T is diagonal."""
    if numpy.linalg.matrix_rank(kernel.entries) < kernel.order:
        raise IntegerKernel.RankDeficient(
            "Kernel rank is {} (order {})".format(
                numpy.linalg.matrix_rank(kernel.entries), kernel.order
            )
        )
    gram = kernel.gram()
    diagonal = numpy.diag(gram)
    if numpy.count_nonzero(gram - numpy.diag(diagonal)):
        raise IntegerKernel.NotOrthogonalizable(
            "T * T^T is not diagonal"
        )
    # Full rank and diagonal, so every diagonal entry is positive
    return DiagonalScaling(1.0 / numpy.sqrt(diagonal.astype(numpy.float64)))


def orthogonalize(kernel: IntegerKernel, factorization = None) -> OrthonormalTransform:
    """C^ = S * T."""
    scaling = scaling_diagonal(kernel)
    matrix = scaling.values.reshape(-1, 1) * kernel.entries
    return OrthonormalTransform(
        matrix,
        OrthonormalTransform.ORTHOGONALIZED,
        kernel          = kernel,
        scaling         = scaling,
        factorization   = factorization
    )


def sign_changes(row) -> int:
    """Number of sign changes along a row (zeros skipped)."""
    signs = numpy.sign(numpy.asarray(row))
    signs = signs[signs != 0]
    return int(numpy.count_nonzero(signs[1:] != signs[:-1]))


def wht_matrix_16(ordering: str = "sequency") -> OrthonormalTransform:
    """16-point Walsh-Hadamard transform scaled by 1/4.

    'sequency' sorts rows by number of sign changes (row k has k changes),
    'natural' keeps the Sylvester (Hadamard) order. The natural order is
    the one that reproduces the published WHT similarity figures.
    """
    rows = hadamard(16)
    if ordering == "sequency":
        rows = rows[numpy.argsort([sign_changes(r) for r in rows], kind="stable")]
    elif ordering != "natural":
        raise InvalidArgument(
            "Unknown WHT ordering '{}' (sequency, natural)".format(ordering)
        )
    return OrthonormalTransform(rows / 4.0, OrthonormalTransform.WHT)


def direct_additions(kernel: IntegerKernel) -> int:
    """Additions needed to compute T * x row by row (no factorization)."""
    return int(
        sum(
            max(numpy.count_nonzero(row) - 1, 0)
            for row in kernel.entries
        )
    )


# EOF
