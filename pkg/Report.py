#! /usr/bin/env python3
# -*- coding: utf-8 -*-
#
# dct16 - multiplierless 16-point DCT approximation toolkit
#
# Report.py
#   0.1.0   2026.10.18  Initial version.
#
#
# Rectangular CSV output. Floats are written with a fixed number of
# decimals (Config.Metrics.decimals), so equal inputs give byte-identical
# files.
#
import csv
import math
import numpy

from Config     import Config
from Transform  import InvalidArgument


class CsvReport:

    def __init__(self, header, rows, sort: bool = True):
        self.header = tuple(header)
        rows = [tuple(row) for row in rows]
        for row in rows:
            if len(row) != len(self.header):
                raise InvalidArgument(
                    "Row {} has {} fields, header has {}".format(
                        row, len(row), len(self.header)
                    )
                )
        # Leading columns are the keys (transform name, then r)
        self.rows = sorted(rows, key=lambda row: row[:2]) if sort else rows


    @staticmethod
    def format(value) -> str:
        if isinstance(value, (bool, numpy.bool_)):
            return str(bool(value)).lower()
        if isinstance(value, (int, numpy.integer)):
            return str(int(value))
        if isinstance(value, (float, numpy.floating)):
            if math.isnan(value):
                return "nan"
            if math.isinf(value):
                return "inf" if value > 0 else "-inf"
            return "{:.{}f}".format(value, Config.Metrics.decimals)
        return str(value)


    def write(self, stream):
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(self.header)
        for row in self.rows:
            writer.writerow([self.format(v) for v in row])


    def __len__(self):
        return len(self.rows)


# EOF
