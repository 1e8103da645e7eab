# -*- coding: utf-8 -*-

from setuptools import setup, find_packages

with open('README.rst') as f:
    long_description = f.read()

setup(
    name='coaster',
    version='0.1.0',
    description='Achterbahn keystream generators and a parity-check '
                'cryptanalysis workbench',
    long_description=long_description,
    packages=find_packages(exclude=['tests', 'tests.*']),
    python_requires='>=3.9',
    install_requires=[
        'numpy>=1.20',
        'scipy>=1.6',
    ],
    entry_points={
        'console_scripts': ['coaster = coaster.cli:main'],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3 :: Only',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.11',
        'Topic :: Security :: Cryptography',
        ]
    )
