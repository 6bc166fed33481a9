#! /usr/bin/env python3
# -*- coding: utf-8 -*-
# dct16 - multiplierless 16-point DCT approximation toolkit
#
# log.py
#
#   0.1.0   2026.10.18  Initial version.
#
#
# Global logging solution. Depends on Config.py.
# Alternations to Config.py:Config MUST BE MADE PRIOR TO CALLING init()!
# Usage:
#
# import log
#
# log.init()
# log.debug("blah blah")
# log.info("Sweep done")
# log.error("Does not work!")
#
# All output goes to STDERR, because STDOUT carries the CSV reports.
#
import sys
import logging

from Config import Config

# Module private
__log           = logging.getLogger(Config.name)
__handlerStderr = None

#
# Initialization
#
def init():
    global __handlerStderr

    level = Config.logging_level
    if isinstance(level, str):
        level = getattr(logging, level.upper())
    __log.setLevel(level)
    # Repeated init() calls (tests, multiple run()'s) replace the handler,
    # the previous sys.stderr may already be closed
    if __handlerStderr is not None:
        if __handlerStderr.stream is sys.stderr:
            return
        __log.removeHandler(__handlerStderr)
    __handlerStderr = logging.StreamHandler(sys.stderr)
    formatter = logging.Formatter(
        fmt='%(asctime)s.%(msecs)03d %(levelname)s: %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )
    __handlerStderr.setFormatter(formatter)
    __log.addHandler(__handlerStderr)
    __log.propagate = False


def remove_std_handler():
    """Remove STDERR stream handler from logger."""
    global __handlerStderr
    if __handlerStderr is not None:
        __log.removeHandler(__handlerStderr)
        __handlerStderr = None

#
# Wrappers
#
def debug(msg, *args, **kwargs):
    __log.debug(msg, *args, **kwargs)

def info(msg, *args, **kwargs):
    __log.info(msg, *args, **kwargs)

def warning(msg, *args, **kwargs):
    __log.warning(msg, *args, **kwargs)

def error(msg, *args, **kwargs):
    __log.error(msg, *args, **kwargs)

def exception(msg, *args, **kwargs):
    __log.exception(msg, *args, **kwargs)


# EOF
