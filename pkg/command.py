#! /usr/bin/env python3
# -*- coding: utf-8 -*-
#
# dct16 - multiplierless 16-point DCT approximation toolkit
# Command line interface
#
# command.py
#   0.1.0   2026.10.18  Initial version.
#   0.1.1   2026.10.18  Plugins, --show-config.
#   0.2.0   2026.10.18  Parallel sweep, DCT16_WORKERS.
#
#
#   dct16 [-l LEVEL] [--show-config] <verify|metrics|compress|sweep>
#         [--transform NAME]... [--r N | --r-range A:B] [--rho F] [--pad]
#         [--out PATH] [--plugin FILE]... [--workers N] inputs...
#
# Diagnostics go to STDERR as one "<reason>: <message>" line, the process
# exit status is Config.ExitCode.of(reason). Reports go to STDOUT (or
# --out).
#
import os
import sys
import glob
import numpy
import logging
import argparse

# PEP 396 -- Module Version Numbers https://www.python.org/dev/peps/pep-0396/
__version__ = "0.2.0"
VERSION = __version__
HEADER  = """
=============================================================================
dct16 - multiplierless 16-point DCT approximation toolkit
Version {}
""".format(__version__)

import log
from Config         import Config, display_config
from Transform      import Error, InvalidArgument
from Transform      import PROPOSED_GRAM_DIAGONAL, direct_additions
from Factorization  import FactorizedTransform, P1_CYCLES, P2_CYCLES
from Factorization  import parse_cycles, derive_residual_permutation
from Registry       import Registry
from Metrics        import MarkovModel, evaluate, complexity_table, savings_pct
from Codec          import SweepReport, forward_2d, compress, sweep
from Pgm            import Pgm, read_pgm, write_pgm
from Report         import CsvReport


METRICS_HEADER = (
    "name", "mult", "add", "shift", "total",
    "d2", "epsilon", "mse", "coding_gain_db", "efficiency_pct"
)


class RunConfig:
    """Parsed command line. validate() runs before any computation."""
    SUBCOMMANDS = ("verify", "metrics", "compress", "sweep")

    class Invalid(Error):
        reason = "invalid-config"


    def __init__(
        self,
        subcommand: str = None,
        inputs = (),
        transforms = (),
        r: int = None,
        r_range: str = None,
        rho: float = None,
        pad: bool = False,
        out: str = None,
        plugins = (),
        workers: int = None,
        show_config: bool = False
    ):
        self.subcommand     = subcommand
        self.inputs         = list(inputs)
        self.transforms     = list(transforms)
        self.r              = r
        self.r_range        = r_range
        self.rho            = Config.Metrics.rho if rho is None else rho
        self.pad            = pad
        self.out            = out
        self.plugins        = list(plugins)
        self.workers        = workers
        self.show_config    = show_config


    def _check_r(self, r):
        limit = Config.Codec.block ** 2
        if not 1 <= r <= limit:
            raise RunConfig.Invalid("r must be within 1..{}, got {}".format(limit, r))


    def validate(self):
        if self.show_config and self.subcommand is None:
            return self
        if self.subcommand not in self.SUBCOMMANDS:
            raise RunConfig.Invalid(
                "Subcommand must be one of {}, got '{}'".format(
                    ", ".join(self.SUBCOMMANDS), self.subcommand
                )
            )
        if not 0.0 <= self.rho < 1.0:
            raise RunConfig.Invalid("rho must be in [0, 1), got {}".format(self.rho))
        if self.r is not None and self.r_range is not None:
            raise RunConfig.Invalid("--r and --r-range are mutually exclusive")
        if self.r is not None:
            self._check_r(self.r)
        if self.r_range is not None:
            try:
                first, last = (int(v) for v in self.r_range.split(":"))
            except ValueError:
                raise RunConfig.Invalid(
                    "--r-range must be A:B, got '{}'".format(self.r_range)
                ) from None
            self._check_r(first)
            self._check_r(last)
            if first > last:
                raise RunConfig.Invalid("Empty --r-range '{}'".format(self.r_range))
        if self.subcommand in ("verify", "metrics") and self.inputs:
            raise RunConfig.Invalid(
                "'{}' takes no input files".format(self.subcommand)
            )
        if self.subcommand == "compress":
            if len(self.inputs) != 1:
                raise RunConfig.Invalid("'compress' takes exactly one input image")
            if self.r is None:
                raise RunConfig.Invalid("'compress' requires --r")
            if len(self.transforms) > 1:
                raise RunConfig.Invalid("'compress' takes at most one --transform")
        if self.subcommand == "sweep" and not self.inputs:
            raise RunConfig.Invalid("'sweep' needs at least one file or directory")
        if self.workers is None:
            value = os.environ.get(Config.Sweep.workers_env)
            if value is not None:
                try:
                    self.workers = int(value)
                except ValueError:
                    raise RunConfig.Invalid(
                        "{}='{}' is not an integer".format(
                            Config.Sweep.workers_env, value
                        )
                    ) from None
        if self.workers is not None and self.workers < 1:
            raise RunConfig.Invalid(
                "Worker count must be positive, got {}".format(self.workers)
            )
        return self


    def r_values(self) -> list:
        if self.r is not None:
            return [self.r]
        if self.r_range is not None:
            first, last = (int(v) for v in self.r_range.split(":"))
            return list(range(first, last + 1))
        return list(range(Config.Codec.r_min, Config.Codec.r_max + 1))



def parse_args(argv = None) -> RunConfig:
    parser = argparse.ArgumentParser(
        prog            = Config.name,
        description     = HEADER,
        formatter_class = argparse.RawTextHelpFormatter
    )
    parser.add_argument(
        '-l',
        '--log',
        help    = "Set logging level. Default: '{}'".format(Config.logging_level),
        choices = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
        nargs   = '?',
        dest    = "logging_level",
        const   = "INFO",
        default = Config.logging_level,
        type    = str.upper,
        metavar = "LEVEL"
    )
    parser.add_argument(
        '--show-config',
        help    = "Print configuration and exit.",
        action  = 'store_true'
    )
    parser.add_argument(
        'subcommand',
        help    = "One of: {}".format(", ".join(RunConfig.SUBCOMMANDS)),
        nargs   = '?'
    )
    parser.add_argument(
        'inputs',
        help    = "PGM images ('compress') or images and directories ('sweep').",
        nargs   = '*'
    )
    parser.add_argument(
        '--transform',
        help    = "Registered transform name (repeatable). Default for "
                  "'compress': '{}'".format(Config.Transform.default),
        action  = 'append',
        dest    = "transforms",
        default = [],
        metavar = "NAME"
    )
    parser.add_argument(
        '--r',
        help    = "Number of retained zig-zag coefficients per block.",
        type    = int,
        metavar = "N"
    )
    parser.add_argument(
        '--r-range',
        help    = "Inclusive r range for 'sweep'. Default: {}:{}".format(
            Config.Codec.r_min, Config.Codec.r_max
        ),
        dest    = "r_range",
        metavar = "A:B"
    )
    parser.add_argument(
        '--rho',
        help    = "Markov correlation coefficient. Default: {}".format(
            Config.Metrics.rho
        ),
        type    = float,
        default = Config.Metrics.rho,
        metavar = "F"
    )
    parser.add_argument(
        '--pad',
        help    = "Edge-replicate images that are not multiples of 16.",
        action  = 'store_true'
    )
    parser.add_argument(
        '--out',
        help    = "Output file (reconstruction for 'compress', CSV otherwise).",
        metavar = "PATH"
    )
    parser.add_argument(
        '--plugin',
        help    = "Register a transform from a matrix file (repeatable).",
        action  = 'append',
        dest    = "plugins",
        default = [],
        metavar = "FILE"
    )
    parser.add_argument(
        '--workers',
        help    = "Sweep worker threads. Default: ${} or CPU count".format(
            Config.Sweep.workers_env
        ),
        type    = int,
        metavar = "N"
    )
    # Options may follow the input files
    args = parser.parse_intermixed_args(argv)
    if not args.subcommand and not args.show_config:
        parser.error("a subcommand is required")
    Config.logging_level = getattr(logging, args.logging_level)

    return RunConfig(
        subcommand  = args.subcommand or None,
        inputs      = args.inputs,
        transforms  = args.transforms,
        r           = args.r,
        r_range     = args.r_range,
        rho         = args.rho,
        pad         = args.pad,
        out         = args.out,
        plugins     = args.plugins,
        workers     = args.workers,
        show_config = args.show_config
    )



###############################################################################
#
# Subcommands
#
###############################################################################

def _status(label: str, value, width: int = 60):
    print("{s:.<{w}} {p}".format(w=width, s=label, p=value))


def do_verify(config: RunConfig, registry: Registry) -> int:
    """Orthonormality, exact factorization and operation counts."""
    failures = 0

    def check(label, ok, detail = "OK"):
        nonlocal failures
        if not ok:
            failures += 1
            log.error("Check failed: {}".format(label))
        _status(label, detail if ok else "FAILED!")

    proposed = registry.get(Config.Transform.default).transform
    kernel = proposed.kernel
    ft = proposed.factorization
    check("Kernel entries in {0, +1, -1}", kernel.is_ternary())
    gram = kernel.gram()
    diagonal = numpy.diag(gram).tolist()
    check(
        "T * T^T diagonal",
        numpy.array_equal(gram, numpy.diag(PROPOSED_GRAM_DIAGONAL)),
        "diag = ({})".format(",".join(str(v) for v in diagonal))
    )
    for entry in registry:
        deviation = entry.transform.deviation()
        check(
            "Orthonormal '{}'".format(entry.name),
            deviation < Config.Transform.orthonormality_tolerance,
            "max|M*M^T - I| = {:.1e}".format(deviation)
        )
    try:
        ft.check(kernel)
        check("Factorization equals T", True)
    except FactorizedTransform.Mismatch as e:
        check("Factorization equals T", False)
        log.error(str(e))
    stages = list(ft.stages)
    residual = derive_residual_permutation(kernel.entries, stages[:-1])
    _status("P1", parse_cycles(P1_CYCLES, kernel.order).cycles())
    check(
        "Residual permutation equals P2",
        residual == parse_cycles(P2_CYCLES, kernel.order),
        residual.cycles()
    )

    rng = numpy.random.default_rng(Config.Verify.seed)
    x = rng.integers(
        -Config.Verify.sample_range,
        Config.Verify.sample_range + 1,
        size = (kernel.order, Config.Verify.random_vectors)
    )
    check(
        "Random vector oracle ({} vectors)".format(Config.Verify.random_vectors),
        numpy.array_equal(ft.apply(x, axis=0), kernel.entries @ x)
    )
    block = rng.integers(0, 256, size=(kernel.order, kernel.order))
    fast, dense = forward_2d(block, proposed), forward_2d(block, proposed, fast=False)
    check(
        "Fast 2-D transform matches dense",
        numpy.allclose(fast, dense, rtol=0, atol=1e-9),
        "max diff {:.1e}".format(float(numpy.max(numpy.abs(fast - dense))))
    )

    for name, additions in ft.stage_additions():
        _status("Stage {} additions".format(name), additions)
    ops = ft.count_ops()
    entry = registry.get(Config.Transform.default)
    check(
        "Pipeline additions match declared cost",
        ops == entry.cost,
        "{} / {}".format(ops.additions, entry.additions)
    )
    _status("Direct computation additions", direct_additions(kernel))
    for other in registry:
        if other.name != entry.name and other.total > 0:
            _status(
                "Savings vs '{}' ({} ops)".format(other.name, other.total),
                "{:.2f}%".format(savings_pct(entry, other))
            )

    print(
        "additions={} multiplications={} bit_shifts={}".format(
            ops.additions, ops.multiplications, ops.bit_shifts
        )
    )
    if failures:
        print(
            "verify-failed: {} check(s) failed".format(failures),
            file = sys.stderr
        )
        return Config.ExitCode.of("verify-failed")
    return Config.ExitCode.of("ok")


def _write_report(report: CsvReport, path: str):
    if path is None:
        report.write(sys.stdout)
        return
    try:
        with open(path, "w", newline="") as file:
            report.write(file)
    except OSError as e:
        raise Pgm.WriteFailed("Cannot write '{}': {}".format(path, e.strerror)) from None
    log.info("Report written to '{}'".format(path))


def do_metrics(config: RunConfig, registry: Registry) -> int:
    exact = registry.get("dct").transform
    model = MarkovModel(exact.order, config.rho)
    entries = registry.select(config.transforms)
    rows = []
    for (name, mult, add, shift, total), entry in zip(complexity_table(entries), entries):
        report = evaluate(name, entry.transform, exact, model)
        rows.append(
            (
                name, mult, add, shift, total,
                report.d2, report.epsilon, report.mse,
                report.coding_gain_db, report.efficiency_pct
            )
        )
    _write_report(CsvReport(METRICS_HEADER, rows), config.out)
    return Config.ExitCode.of("ok")


def do_compress(config: RunConfig, registry: Registry) -> int:
    name = config.transforms[0] if config.transforms else Config.Transform.default
    entry = registry.get(name)
    source = config.inputs[0]
    image = read_pgm(source)
    out = config.out or "{}-{}-r{}.pgm".format(
        os.path.splitext(os.path.basename(source))[0], name, config.r
    )
    if os.path.exists(out) and os.path.samefile(out, source):
        raise InvalidArgument("Refusing to overwrite input '{}'".format(source))
    result = compress(image, entry.transform, config.r, config.pad)
    write_pgm(result.reconstructed, out)
    log.info("Reconstruction written to '{}'".format(out))
    print(
        "psnr_db={} ssim={}".format(
            CsvReport.format(result.psnr_db), CsvReport.format(result.ssim)
        )
    )
    return Config.ExitCode.of("ok")


def corpus_files(inputs) -> list:
    """Files as given, directories expanded to their sorted *.pgm files."""
    files = []
    for path in inputs:
        if os.path.isdir(path):
            found = sorted(glob.glob(os.path.join(path, Config.Sweep.pattern)))
            if not found:
                log.warning("No '{}' files in '{}'".format(Config.Sweep.pattern, path))
            files.extend(found)
        elif os.path.exists(path):
            files.append(path)
        else:
            raise Pgm.MissingFile("'{}' does not exist".format(path))
    return files


def do_sweep(config: RunConfig, registry: Registry) -> int:
    entries = registry.select(config.transforms)
    images, unreadable = [], []
    for path in corpus_files(config.inputs):
        try:
            images.append(read_pgm(path))
        except Error as e:
            log.warning("Skipping '{}': {}: {}".format(path, e.reason, e))
            unreadable.append((path, "{}: {}".format(e.reason, e)))
    if not images:
        raise InvalidArgument("No readable images in the corpus")
    report = sweep(
        images, entries, config.r_values(),
        pad     = config.pad,
        workers = config.workers
    )
    for label, reason in unreadable:
        report.skip(label, reason)
    for label, reason in report.skipped:
        print("skipped: {}: {}".format(label, reason), file=sys.stderr)
    _write_report(CsvReport(SweepReport.HEADER, report.rows()), config.out)
    return Config.ExitCode.of("ok")


SUBCOMMAND = {
    "verify":   do_verify,
    "metrics":  do_metrics,
    "compress": do_compress,
    "sweep":    do_sweep
}


def run(config: RunConfig) -> int:
    """Execute 'config'. Returns the process exit status."""
    log.init()
    try:
        config.validate()
        if config.show_config:
            display_config()
            if config.subcommand is None:
                return Config.ExitCode.of("ok")
        registry = Registry.builtin()
        for path in config.plugins:
            registry.load_plugin(path)
        log.debug(
            "'{}' with transforms {}".format(config.subcommand, registry.names())
        )
        return SUBCOMMAND[config.subcommand](config, registry)
    except Error as e:
        log.debug("{} raised {}".format(config.subcommand, type(e).__name__))
        print("{}: {}".format(e.reason, e), file=sys.stderr)
        return Config.ExitCode.of(e.reason)
    except Exception as e:
        log.exception("Unexpected error")
        print("internal: {}".format(e), file=sys.stderr)
        return Config.ExitCode.of("internal")


def main(argv = None):
    sys.exit(run(parse_args(argv)))


# EOF
