#!/usr/bin/python
# -*- coding: utf-8 -*-

from setuptools import find_packages, setup
from scripts.version import get_git_version


setup(
    name='zpoly',
    version=get_git_version(),
    packages=find_packages(exclude=["scripts", "tests"]),

    include_package_data = True,

    exclude_package_data = {'': ['.gitignore']},

    python_requires=">=3.7",

    install_requires=["numpy", "networkx"],

    extras_require={"tests": ["sympy"]},

    tests_require=["sympy"],

    # installing unzipped
    zip_safe = False,

    entry_points = """
    [console_scripts]
    zpoly = zpoly.zpoly:main
    zpoly_compute = zpoly.zpoly_compute:main
    zpoly_verify = zpoly.zpoly_verify:main
    zpoly_bench = zpoly.zpoly_bench:main
    """,
    # pypi metadata
    author = "zpoly developers",

    author_email = "",
    description = "Kazhdan-Lusztig and Z-polynomials of matroids: lattice recursions, family tables and root certificates",

    long_description = open("README.md").read(),

    long_description_content_type = "text/markdown",

    license = "GPL",

    keywords = "matroid kazhdan-lusztig z-polynomial real-rootedness sturm",

    url = "",
    test_suite='tests'
)
