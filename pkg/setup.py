#!/usr/bin/env python

"""Exact character sums, L-polynomials and correlation sequences over finite fields."""

import re
from os.path import dirname, join

from setuptools import setup

DIR = (dirname(__file__) or '.')

with open(join(DIR, 'weillib', '_version.py')) as handle:
    VERSION = re.search(r'__version__\s*=\s*"([^"]+)"', handle.read()).group(1)

with open(join(DIR, 'README.rst')) as handle:
    LONG_DESCRIPTION = handle.read()

setup(
    name='WeilKit',
    version=VERSION,
    description=__doc__,
    long_description=LONG_DESCRIPTION,
    packages=['weillib', 'weillib.gf'],
    scripts=[join(DIR, 'weilkit.py')],
    python_requires='>=3.8',
    install_requires=[
        'numpy >= 1.17',
        'pandas >= 0.18.1',
    'sympy >= 1.1',
    ],
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: POSIX",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
