#!/usr/bin/env python
# The MIT License (MIT)
#
# Copyright (c) 2026 The glpkit developers
#
# See LICENSE.md for the full license text.

from setuptools import find_packages
from setuptools import setup

setup(
    name='glpkit',
    version='0.1.0',
    description='Transfinite provability logic toolkit',
    long_description="""
    Decision, refutation and certification tools for polymodal
     provability logic with modalities indexed by ordinals below epsilon_0.

    Checks Hilbert proofs, validates finite J-models, decides formulas by
     condensation and bounded countermodel search, and runs Solovay
     paths over rooted models.
    """,
    author='The glpkit developers',
    license='MIT',
    packages=find_packages(),
    package_data={
        'glpkit': ['corpus/*.json'],
    },
    entry_points={
        'console_scripts': [
            'glpkit = glpkit.main:main_func',
        ],
    },
    setup_requires=[],
    install_requires=[
        'lark',
        'networkx', ],
    tests_require=[
        'hypothesis', ],
    test_suite='glpkit.test',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Utilities',
    ]
)
