#!/usr/bin/env python

from setuptools import setup, find_packages

setup(
    name='cocycle_states',
    version='0.0.1',
    description='Fractional symmetry cocycle states over (Z_2)^m: GF(2) '
    'cohomology, tensor normal forms, orbit census and exact simulation',
    author='The Cocycle States Authors',
    packages=find_packages(),
    package_data={'cocycle_states.data': ['samples/*.json']},
    install_requires=[
        'absl-py>=0.7.0',
        'numpy>=1.17.0',  # numpy.random.default_rng
    ],
    entry_points={
        'console_scripts': [
            'cocycle_states=cocycle_states.run.main:entry_point',
        ],
    },
)
