#! /usr/bin/env python3
# -*- coding: utf-8 -*-
#
# dct16 - multiplierless 16-point DCT approximation toolkit
#
# Registry.py
#   0.1.0   2026.10.18  Initial version.
#   0.1.1   2026.10.18  Plugin matrix files.
#
#
# Named transforms with their declared arithmetic cost. Built-in costs are
# the published complexity figures; plugin costs are whatever the plugin
# file declares (they are not measured).
#
# Plugin file format (whitespace separated matrix, '#' comments):
#
#   # name: bas2013
#   # additions: 64
#   # multiplications: 0
#   # bit_shifts: 0
#   1 1 1 1 ...
#
# Integer matrices are orthogonalized (S * T), real matrices must be
# orthonormal as given.
#
import os
import numpy

from typing import NamedTuple

import log
from Transform      import Error, InvalidArgument, IntegerKernel
from Transform      import OrthonormalTransform
from Transform      import exact_dct_matrix, proposed_kernel, orthogonalize
from Transform      import scaling_diagonal, wht_matrix_16
from Factorization  import OpCount, build_proposed_factorization


class Entry(NamedTuple):
    name:               str
    transform:          OrthonormalTransform
    additions:          int = 0
    multiplications:    int = 0
    bit_shifts:         int = 0

    @property
    def cost(self) -> OpCount:
        return OpCount(self.additions, self.multiplications, self.bit_shifts)

    @property
    def total(self) -> int:
        return self.cost.total



class Registry:

    class UnknownName(Error):
        reason = "invalid-argument"

    class DuplicateName(Error):
        reason = "invalid-argument"


    def __init__(self):
        self._entries = {}


    def register(
        self,
        name: str,
        transform: OrthonormalTransform,
        additions: int = 0,
        multiplications: int = 0,
        bit_shifts: int = 0
    ) -> Entry:
        if not name or not isinstance(name, str):
            raise InvalidArgument("Transform name must be a non-empty string")
        if name in self._entries:
            raise Registry.DuplicateName(
                "Transform '{}' already registered".format(name)
            )
        for label, value in (
            ("additions", additions),
            ("multiplications", multiplications),
            ("bit_shifts", bit_shifts)
        ):
            if not isinstance(value, (int, numpy.integer)) or value < 0:
                raise InvalidArgument(
                    "'{}' {} must be a nonnegative integer, got {}".format(
                        name, label, value
                    )
                )
        entry = Entry(
            name, transform, int(additions), int(multiplications), int(bit_shifts)
        )
        self._entries[name] = entry
        log.debug(
            "Registered '{}' ({}, {} additions)".format(
                name, transform.provenance, additions
            )
        )
        return entry


    def get(self, name: str) -> Entry:
        try:
            return self._entries[name]
        except KeyError:
            raise Registry.UnknownName(
                "Unknown transform '{}' (known: {})".format(
                    name, ", ".join(self.names())
                )
            ) from None


    def select(self, names = None) -> list:
        """Entries for 'names' in the given order; all entries if None."""
        if not names:
            return list(self._entries.values())
        return [self.get(n) for n in names]


    def names(self) -> list:
        return list(self._entries)


    def __contains__(self, name):
        return name in self._entries


    def __iter__(self):
        return iter(self._entries.values())


    def __len__(self):
        return len(self._entries)


    def load_plugin(self, path: str) -> Entry:
        """Register a transform from a plugin matrix file."""
        header = {}
        try:
            with open(path, "r") as plugin:
                for line in plugin:
                    line = line.strip()
                    if line.startswith("#") and ":" in line:
                        key, value = line[1:].split(":", 1)
                        header[key.strip().lower()] = value.strip()
            matrix = numpy.loadtxt(path, comments="#", ndmin=2)
        except FileNotFoundError:
            raise PluginError(
                "Plugin file '{}' does not exist".format(path), "missing-file"
            ) from None
        except ValueError as e:
            raise PluginError(
                "Plugin file '{}' is not a numeric matrix ({})".format(path, e)
            ) from None
        name = header.get("name") or os.path.splitext(os.path.basename(path))[0]
        try:
            costs = {
                key: int(header.get(key, "0"))
                for key in ("additions", "multiplications", "bit_shifts")
            }
        except ValueError:
            raise PluginError(
                "Plugin file '{}' has a non-integer cost header".format(path)
            ) from None
        if numpy.all(matrix == numpy.rint(matrix)):
            kernel = IntegerKernel(numpy.rint(matrix).astype(numpy.int64))
            scaling = scaling_diagonal(kernel)
            transform = OrthonormalTransform(
                scaling.values.reshape(-1, 1) * kernel.entries,
                OrthonormalTransform.PLUGIN,
                kernel  = kernel,
                scaling = scaling
            )
        else:
            transform = OrthonormalTransform(matrix, OrthonormalTransform.PLUGIN)
        log.info("Plugin '{}' loaded from '{}'".format(name, path))
        return self.register(name, transform, **costs)


    @staticmethod
    def builtin():
        """Exact DCT (Chen algorithm cost), WHT and the proposed transform."""
        registry = Registry()
        registry.register(
            "dct", exact_dct_matrix(16),
            additions = 74, multiplications = 44
        )
        registry.register(
            "proposed",
            orthogonalize(proposed_kernel(), build_proposed_factorization()),
            additions = 44
        )
        registry.register("wht", wht_matrix_16("natural"), additions = 64)
        registry.register("wht-sequency", wht_matrix_16("sequency"), additions = 64)
        return registry



class PluginError(Error):
    reason = "parse-error"

    def __init__(self, message: str, reason: str = None):
        super().__init__(message)
        if reason:
            self.reason = reason


# EOF
