#! /usr/bin/env python3
# -*- coding: utf-8 -*-
#
# dct16 - multiplierless 16-point DCT approximation toolkit
#
# Factorization.py
#   0.1.0   2026.10.18  Initial version.
#   0.1.1   2026.10.18  Residual permutation oracle for P2.
#   0.2.0   2026.10.18  Transposed pipeline for the inverse transform.
#
#
# Sparse factorization T = P2 * M4 * M3 * M2 * P1 * M1 as an executable
# pipeline. Stages are applied input-to-output in the order
# M1, P1, M2, M3, M4, P2.
#
# Butterfly stages hold assignment rules (copy, negate, add, subtract)
# instead of matrices. Evaluation is done with index arithmetic only;
# nothing in this module multiplies sample values.
#
# Permutations follow cycle notation sigma: i -> next element of its
# cycle, and the stage computes (P x)_i = x_sigma(i), i.e. P[i, sigma(i)] = 1.
#
import re
import numpy

from typing import NamedTuple
from scipy.linalg import block_diag

from Transform import Error, InvalidArgument, IntegerKernel, proposed_kernel


class OpCount(NamedTuple):
    additions:          int = 0
    multiplications:    int = 0
    bit_shifts:         int = 0

    @property
    def total(self) -> int:
        return self.additions + self.multiplications + self.bit_shifts

    def __add__(self, other):
        return OpCount(
            self.additions + other.additions,
            self.multiplications + other.multiplications,
            self.bit_shifts + other.bit_shifts
        )


class Rule(NamedTuple):
    """One output slot: 'copy' a, 'negate' a, 'add' a + b, 'subtract' a - b."""
    op:     str
    a:      int
    b:      int = -1



class ButterflyStage:
    """Sparse stage whose outputs are copies, negations, sums or differences
    of input slots. Rules read the input vector only (no chaining)."""

    OPS = ("copy", "negate", "add", "subtract")

    def __init__(self, rules, name: str = ""):
        self.rules = tuple(Rule(*r) for r in rules)
        self.name  = name
        order = len(self.rules)
        if order == 0:
            raise InvalidArgument("Empty butterfly stage")
        for slot, rule in enumerate(self.rules):
            if rule.op not in self.OPS:
                raise InvalidArgument(
                    "Stage '{}' slot {}: unknown op '{}'".format(name, slot, rule.op)
                )
            sources = (rule.a, rule.b) if rule.op in ("add", "subtract") else (rule.a,)
            for src in sources:
                if not 0 <= src < order:
                    raise InvalidArgument(
                        "Stage '{}' slot {}: source {} out of range".format(
                            name, slot, src
                        )
                    )
        # Index arrays per op, for vectorized evaluation
        self._index = {}
        for op in self.OPS:
            selected = [(slot, r) for slot, r in enumerate(self.rules) if r.op == op]
            self._index[op] = (
                numpy.array([slot for slot, _ in selected], dtype=numpy.intp),
                numpy.array([r.a for _, r in selected], dtype=numpy.intp),
                numpy.array([r.b for _, r in selected], dtype=numpy.intp)
            )


    @classmethod
    def from_matrix(cls, matrix, name: str = ""):
        """Rows must have one nonzero (+1 or -1) or two nonzeros that are
        not both -1."""
        matrix = numpy.asarray(matrix)
        rules = []
        for i, row in enumerate(matrix):
            nz = numpy.flatnonzero(row)
            values = tuple(int(row[j]) for j in nz)
            if len(nz) == 1 and values == (1,):
                rules.append(("copy", int(nz[0])))
            elif len(nz) == 1 and values == (-1,):
                rules.append(("negate", int(nz[0])))
            elif len(nz) == 2 and values == (1, 1):
                rules.append(("add", int(nz[0]), int(nz[1])))
            elif len(nz) == 2 and values == (1, -1):
                rules.append(("subtract", int(nz[0]), int(nz[1])))
            elif len(nz) == 2 and values == (-1, 1):
                rules.append(("subtract", int(nz[1]), int(nz[0])))
            else:
                raise InvalidArgument(
                    "Stage '{}' row {} is not a butterfly row: {}".format(
                        name, i, row.tolist()
                    )
                )
        return cls(rules, name)


    @classmethod
    def from_blocks(cls, blocks, name: str = ""):
        """Block-diagonal stage, blocks given as small integer matrices."""
        return cls.from_matrix(block_diag(*[numpy.asarray(b) for b in blocks]), name)


    @property
    def order(self) -> int:
        return len(self.rules)


    @property
    def additions(self) -> int:
        return sum(1 for r in self.rules if r.op in ("add", "subtract"))


    def matrix(self) -> numpy.ndarray:
        m = numpy.zeros((self.order, self.order), dtype=numpy.int64)
        for slot, rule in enumerate(self.rules):
            if rule.op == "copy":
                m[slot, rule.a] = 1
            elif rule.op == "negate":
                m[slot, rule.a] = -1
            elif rule.op == "add":
                m[slot, rule.a] += 1
                m[slot, rule.b] += 1
            else:
                m[slot, rule.a] += 1
                m[slot, rule.b] -= 1
        return m


    def transpose(self):
        return ButterflyStage.from_matrix(self.matrix().T, self.name + "^T")


    def apply(self, x: numpy.ndarray) -> numpy.ndarray:
        """Evaluate on axis 0 of x."""
        out = numpy.empty_like(x)
        slots, a, _ = self._index["copy"]
        out[slots] = x[a]
        slots, a, _ = self._index["negate"]
        out[slots] = -x[a]
        slots, a, b = self._index["add"]
        out[slots] = x[a] + x[b]
        slots, a, b = self._index["subtract"]
        out[slots] = x[a] - x[b]
        return out


    def __repr__(self):
        return "ButterflyStage('{}', additions={})".format(self.name, self.additions)



class PermutationStage:
    """(P x)_i = x_mapping[i]. Zero arithmetic cost."""

    class ParseError(Error):
        reason = "parse-error"

    additions = 0


    def __init__(self, mapping, name: str = ""):
        self.mapping = tuple(int(m) for m in mapping)
        self.name    = name
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise InvalidArgument(
                "Stage '{}' mapping is not a bijection: {}".format(
                    name, self.mapping
                )
            )
        self._index = numpy.array(self.mapping, dtype=numpy.intp)


    @property
    def order(self) -> int:
        return len(self.mapping)


    def matrix(self) -> numpy.ndarray:
        m = numpy.zeros((self.order, self.order), dtype=numpy.int64)
        m[numpy.arange(self.order), self._index] = 1
        return m


    def transpose(self):
        return PermutationStage(numpy.argsort(self._index), self.name + "^T")


    def apply(self, x: numpy.ndarray) -> numpy.ndarray:
        return x[self._index]


    def cycles(self) -> str:
        """1-based cycle notation, fixed points included."""
        seen = set()
        text = ""
        for start in range(self.order):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self.mapping[start]
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self.mapping[nxt]
            text += "(" + " ".join(str(c + 1) for c in cycle) + ")"
        return text


    def __eq__(self, other):
        if not isinstance(other, PermutationStage):
            return NotImplemented
        return self.mapping == other.mapping


    def __repr__(self):
        return "PermutationStage('{}', {})".format(self.name, self.cycles())



class FactorizedTransform:
    """Ordered stage pipeline, applied input-to-output."""

    class Mismatch(Error):
        reason = "factorization-mismatch"

    class Inconsistent(Error):
        reason = "inconsistent-factorization"


    def __init__(self, stages, name: str = ""):
        self.stages = tuple(stages)
        self.name   = name
        if not self.stages:
            raise InvalidArgument("Empty pipeline")
        orders = {s.order for s in self.stages}
        if len(orders) != 1:
            raise InvalidArgument("Stage orders differ: {}".format(sorted(orders)))


    @property
    def order(self) -> int:
        return self.stages[0].order


    def matrix(self) -> numpy.ndarray:
        """Composed linear map, exactly, in integer arithmetic."""
        return compose(self.stages)


    def apply(self, x, axis: int = 0) -> numpy.ndarray:
        """Evaluate along 'axis'. Integer input stays integer (int64)."""
        x = numpy.asarray(x)
        if x.ndim == 0 or x.shape[axis] != self.order:
            raise InvalidArgument(
                "Expected length {} along axis {}, got shape {}".format(
                    self.order, axis, x.shape
                )
            )
        if x.dtype.kind in "biu":
            y = x.astype(numpy.int64)
        else:
            y = x.astype(numpy.float64)
        y = numpy.moveaxis(y, axis, 0)
        for stage in self.stages:
            y = stage.apply(y)
        return numpy.moveaxis(y, 0, axis)


    def stage_additions(self) -> list:
        return [(s.name, s.additions) for s in self.stages]


    def count_ops(self) -> OpCount:
        # Negations are sign changes and permutations are wiring: both free
        return OpCount(additions = sum(s.additions for s in self.stages))


    def transpose(self):
        return FactorizedTransform(
            [s.transpose() for s in reversed(self.stages)],
            self.name + "^T"
        )


    def check(self, target: IntegerKernel):
        """Raise Mismatch unless the composed matrix equals target exactly."""
        composed = self.matrix()
        if composed.shape != target.entries.shape \
                or not numpy.array_equal(composed, target.entries):
            rows = [
                i for i in range(min(composed.shape[0], target.order))
                if not numpy.array_equal(composed[i], target.entries[i])
            ]
            raise FactorizedTransform.Mismatch(
                "Composed pipeline differs from target in rows {}".format(rows)
            )


    def __repr__(self):
        return "FactorizedTransform('{}', {})".format(
            self.name, ", ".join(s.name for s in self.stages)
        )



###############################################################################
#
# Operations
#
###############################################################################

def compose(stages) -> numpy.ndarray:
    """Product of stage matrices, first stage applied first."""
    stages = list(stages)
    product = numpy.eye(stages[0].order, dtype=numpy.int64)
    for stage in stages:
        product = stage.matrix() @ product
    return product


def apply(ft: FactorizedTransform, x) -> numpy.ndarray:
    x = numpy.asarray(x)
    if x.ndim != 1:
        raise InvalidArgument("Expected a vector, got shape {}".format(x.shape))
    return ft.apply(x)


def count_ops(ft: FactorizedTransform) -> OpCount:
    return ft.count_ops()


_CYCLE = re.compile(r"\(([^()]*)\)")

def parse_cycles(text: str, order: int) -> PermutationStage:
    """Parse 1-based cycle notation such as "(1)(2 9)(3 8 16 3)".

    A cycle whose last element repeats its first is read as explicit
    closure. Indices not mentioned are fixed points.
    """
    if not isinstance(text, str):
        raise PermutationStage.ParseError("Cycle text must be a string")
    stripped = text.strip()
    if not stripped:
        raise PermutationStage.ParseError("Empty cycle text")
    # Everything outside parentheses must be whitespace
    if _CYCLE.sub("", stripped).strip():
        raise PermutationStage.ParseError(
            "Malformed cycle notation: '{}'".format(text)
        )
    mapping = list(range(order))
    used = set()
    for body in _CYCLE.findall(stripped):
        tokens = body.replace(",", " ").split()
        if not tokens:
            raise PermutationStage.ParseError("Empty cycle in '{}'".format(text))
        try:
            cycle = [int(t) for t in tokens]
        except ValueError:
            raise PermutationStage.ParseError(
                "Non-integer index in cycle '({})'".format(body)
            ) from None
        if len(cycle) > 1 and cycle[-1] == cycle[0]:
            cycle = cycle[:-1]
        for index in cycle:
            if not 1 <= index <= order:
                raise PermutationStage.ParseError(
                    "Index {} out of range 1..{}".format(index, order)
                )
            if index in used:
                raise PermutationStage.ParseError(
                    "Index {} appears in more than one place".format(index)
                )
            used.add(index)
        for k, index in enumerate(cycle):
            mapping[index - 1] = cycle[(k + 1) % len(cycle)] - 1
    return PermutationStage(mapping)


def derive_residual_permutation(target, stages) -> PermutationStage:
    """Solve target = R * (stages composed) for R, which must be a 0/1
    permutation matrix. The result is checked exactly in integers."""
    entries = target.entries if isinstance(target, IntegerKernel) else numpy.asarray(target)
    partial = compose(stages)
    if entries.shape != partial.shape:
        raise InvalidArgument(
            "Target shape {} does not match stage order {}".format(
                entries.shape, partial.shape
            )
        )
    try:
        # R * Q = T  <=>  Q^T * R^T = T^T
        estimate = numpy.linalg.solve(
            partial.T.astype(numpy.float64),
            entries.T.astype(numpy.float64)
        ).T
    except numpy.linalg.LinAlgError:
        raise FactorizedTransform.Inconsistent(
            "Partial pipeline is singular"
        ) from None
    residual = numpy.rint(estimate).astype(numpy.int64)
    is_permutation = (
        numpy.all((residual == 0) | (residual == 1))
        and numpy.all(residual.sum(axis=0) == 1)
        and numpy.all(residual.sum(axis=1) == 1)
    )
    if not is_permutation or not numpy.array_equal(residual @ partial, entries):
        raise FactorizedTransform.Inconsistent(
            "Residual of target and pipeline is not a permutation matrix"
        )
    return PermutationStage(numpy.argmax(residual, axis=1), "R")


def butterfly(size: int) -> numpy.ndarray:
    """[[I, J], [J, -I]] with J the counter-identity, size = 2 * half."""
    half = size // 2
    identity = numpy.eye(half, dtype=numpy.int64)
    counter = numpy.fliplr(identity)
    return numpy.block([[identity, counter], [counter, -identity]])


# Printed permutations (1-based, closing repeats included as printed)
P1_CYCLES = "(1)(2)(3)(4)(5)(6)(7)(8)(9)(10 12 16 10)(11 13 15 11)(14)"
P2_CYCLES = "(1)(2 9)(3 8 16 15 5 4 12 11 7 6 10 14 13 3)"

def build_proposed_factorization() -> FactorizedTransform:
    """T = P2 * M4 * M3 * M2 * P1 * M1, 44 additions."""
    eye = lambda n: numpy.eye(n, dtype=numpy.int64)
    m1 = ButterflyStage.from_blocks([butterfly(16)], "M1")
    m2 = ButterflyStage.from_blocks([butterfly(8), butterfly(8)], "M2")
    m3 = ButterflyStage.from_blocks(
        [butterfly(4), -eye(4), butterfly(4), -eye(4)],
        "M3"
    )
    m4 = ButterflyStage.from_blocks(
        [
            [[1, 1, 0], [1, -1, 0], [0, 0, -1]],
            eye(4),
            [[-1, 0, 0], [0, 1, 1], [0, 1, -1]],
            -eye(4),
            [[1, 0], [0, -1]]
        ],
        "M4"
    )
    p1 = parse_cycles(P1_CYCLES, 16)
    p1.name = "P1"
    p2 = parse_cycles(P2_CYCLES, 16)
    p2.name = "P2"

    kernel = proposed_kernel()
    # The residual oracle pins P2 independently of how the notation is read
    residual = derive_residual_permutation(kernel, [m1, p1, m2, m3, m4])
    if residual != p2:
        raise FactorizedTransform.Mismatch(
            "P2 read as {} but the residual permutation is {}".format(
                p2.cycles(), residual.cycles()
            )
        )
    ft = FactorizedTransform([m1, p1, m2, m3, m4, p2], "T")
    ft.check(kernel)
    return ft




if __name__ == '__main__':

    ft = build_proposed_factorization()
    for name, additions in ft.stage_additions():
        print("{s:.<40} {p}".format(s=name, p=additions))
    print("{s:.<40} {p}".format(s="Total", p=ft.count_ops()))
    T = proposed_kernel().entries
    x = numpy.random.randint(-255, 256, size=16)
    print("{s:.<40} {p}".format(
        s="Random vector oracle",
        p="OK" if numpy.array_equal(ft.apply(x), T @ x) else "FAILED!"
    ))


# EOF
