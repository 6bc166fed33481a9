#! /usr/bin/env python3
# -*- coding: utf-8 -*-
#
# dct16 - multiplierless 16-point DCT approximation toolkit
# Package setup script
#
# setup.py
#   0.1.0   2026.10.18  Initial version.
#
#   pip install .            # runtime: numpy, scipy, scikit-image
#   pip install .[test]      # + pytest
#
from setuptools import setup

# PEP 396 -- Module Version Numbers https://www.python.org/dev/peps/pep-0396/
__version__ = "0.2.0"
VERSION = __version__
HEADER  = """
=============================================================================
dct16 - multiplierless 16-point DCT approximation toolkit
Version {}
""".format(__version__)


setup(
    name                = "dct16",
    version             = VERSION,
    description         = "Multiplierless 16-point DCT approximation, "
                          "fast algorithm, metrics and block codec",
    long_description    = HEADER,
    python_requires     = ">=3.8",
    py_modules          = [
        "Config",
        "log",
        "Transform",
        "Factorization",
        "Registry",
        "Metrics",
        "Codec",
        "Pgm",
        "Report",
        "command"
    ],
    scripts             = ["dct16"],
    install_requires    = [
        "numpy",
        "scipy",
        "scikit-image"
    ],
    extras_require      = {
        "test": [
            "pytest"
        ]
    }
)


# EOF
