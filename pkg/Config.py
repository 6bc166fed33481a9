#! /usr/bin/env python3
# -*- coding: utf-8 -*-
#
# dct16 - multiplierless 16-point DCT approximation toolkit
# Configuration values
#
# Config.py
#   0.1.0   2026.10.18  Initial version.
#   0.1.1   2026.10.18  Exit codes moved here from command.py.
#
# Command line options are written into these class attributes by
# command.py BEFORE any computation starts.
#
import os


class Config:
    name                        = "dct16"
    class Transform:
        order                   = 16
        default                 = "proposed"
        orthonormality_tolerance = 1e-12
    class Metrics:
        rho                     = 0.95  # first-order Markov correlation
        decimals                = 6     # CSV float formatting
    class Codec:
        block                   = 16
        r_min                   = 1
        r_max                   = 150   # default sweep grid is r_min..r_max
        pad                     = False # edge-replication for non-multiples
        max_value               = 255
        snap_decimals           = 6     # reconstructions of S * T are multiples of 1/256
        class SSIM:
            sigma               = 1.5
            truncate            = 3.5   # 2 * int(3.5 * 1.5 + 0.5) + 1 = 11 taps
            k1                  = 0.01
            k2                  = 0.03
    class Sweep:
        workers_env             = "DCT16_WORKERS"
        workers                 = os.cpu_count() or 1
        pattern                 = "*.pgm"
    class Verify:
        random_vectors          = 1000
        sample_range            = 255
        seed                    = 44
    class ExitCode:
        codes = {
            "ok":                           0,
            "verify-failed":                1,
            "invalid-config":               2,  # same as argparse usage errors
            "invalid-argument":             3,
            "invalid-dimensions":           4,
            "parse-error":                  5,
            "missing-file":                 6,
            "unsupported-format":           7,
            "truncated-payload":            8,
            "unsupported-maxval":           9,
            "not-orthogonalizable":         10,
            "rank-deficient":               11,
            "factorization-mismatch":       12,
            "inconsistent-factorization":   13,
            "numerical-degeneracy":         14,
            "io-error":                     15,
            "internal":                     70
        }
        @staticmethod
        def of(reason: str) -> int:
            return Config.ExitCode.codes.get(
                reason,
                Config.ExitCode.codes["internal"]
            )
    # 'DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'
    logging_level               = "INFO"




#
# Not perfect, but good enough for my own purposes...
#
def display_config(obj=Config, indent_level=0, file=None):
    """Created for class'es (might work for objects)."""
    def get_name(x):
        if hasattr(x, '__name__'):
            return x.__name__           # class
        else:
            return type(x).__name__     # object
    indent = 4
    print("{}[{}]".format(" " * indent * indent_level, get_name(obj)), file=file)
    for k, v in vars(obj).items():
        # Disregard double-underscore members
        if k[:2] != '__':
            if type(v).__name__ in ('bool', 'float', 'int', 'str', 'NoneType'):
                print(
                    "{}{} = {}".format(
                        " " * indent * (indent_level + 1), k, str(v) or "None"
                    ),
                    file=file
                )
            elif type(v).__name__ == 'dict':
                for dk, dv in v.items():
                    print(
                        "{}{}[{}] = {}".format(
                            " " * indent * (indent_level + 1), k, dk, dv
                        ),
                        file=file
                    )
            elif type(v).__name__ == 'type':
                # it's a class
                display_config(v, indent_level + 1, file)
            elif isinstance(v, staticmethod) or callable(v):
                pass
            else:
                print("ERROR: Unhandled type: '{}'".format(str(type(v))), file=file)


# EOF
