# -*- coding: utf-8 -*-
"""foodsubs setup module."""


import os
from codecs import open

from setuptools import find_packages, setup


__copyright__ = "Copyright (c) 2026 The foodsubs developers."
__license__ = "MIT"


PACKAGE_NAME = 'foodsubs'

PACKAGE_KEYWORDS = [
    'food',
    'substitutes',
    'nutrition',
    'meal logs',
    'distributional semantics',
    'ppmi',
    'svd',
    'recommendation',
]

PACKAGE_CLASSIFIERS = [
    'Development Status :: 4 - Beta',
    'Intended Audience :: Science/Research',
    'Intended Audience :: Developers',
    'Intended Audience :: Healthcare Industry',
    'Natural Language :: English',
    'License :: OSI Approved :: MIT License',
    'Programming Language :: Python :: 3',
    'Programming Language :: Python :: 3.9',
    'Programming Language :: Python :: 3.10',
    'Programming Language :: Python :: 3.11',
    'Programming Language :: Python :: 3.12',
    'Topic :: Scientific/Engineering :: Information Analysis',
]

INSTALLATION_REQUIREMENTS = [
    'numpy>=1.20',
    'scipy>=1.6',
    'scikit-learn>=1.0',
]


project_root = os.path.abspath(os.path.dirname(__file__))


# Get package metadata
metadata = {}
with open(os.path.join(project_root, PACKAGE_NAME, '_metadata.py')) as f:
    exec(f.read(), metadata)


# Get the long description from the project's README.rst file
with open(os.path.join(project_root, 'README.rst'), encoding='utf-8') as f:
    long_description = f.read()


setup(
    name=PACKAGE_NAME,

    version=metadata['__version__'],

    description=metadata['__description__'],
    long_description=long_description,

    url=metadata['__url__'],
    download_url=metadata['__download_url__'],

    author=metadata['__author__'],
    author_email=metadata['__author_email__'],

    license=metadata['__license__'] + '; ' + metadata['__copyright__'],

    classifiers=PACKAGE_CLASSIFIERS,

    keywords=" ".join(PACKAGE_KEYWORDS),

    packages=find_packages(include=[PACKAGE_NAME, PACKAGE_NAME + '.*']),
    package_data={PACKAGE_NAME: ['data/*.tsv', 'data/*.jsonl', 'data/*.json']},

    python_requires='>=3.9',
    install_requires=INSTALLATION_REQUIREMENTS,

    entry_points={
        'console_scripts': ['foodsubs=foodsubs.cli:main'],
    },
)
