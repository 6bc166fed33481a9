#! /usr/bin/env python3
# -*- coding: utf-8 -*-
#
# dct16 - test configuration
#
# Modules are flat at the repository root.
#
import os
import sys

import numpy
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from Config import Config


@pytest.fixture
def rng():
    return numpy.random.default_rng(20261018)


@pytest.fixture(autouse=True)
def restore_config():
    """Commands write options into Config; put them back after each test."""
    saved = (Config.logging_level, Config.Codec.pad, Config.Metrics.rho)
    yield
    Config.logging_level, Config.Codec.pad, Config.Metrics.rho = saved


# EOF
