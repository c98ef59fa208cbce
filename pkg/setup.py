#!/usr/bin/env python

from setuptools import find_packages, setup

# Define package version
version = open("version.txt").read().rstrip()

requires = [
    "setuptools",
    "click>=7",
    "click-plugins",
    "jinja2",
    "tabulate",
    "termcolor",
]

setup(
    name="sphere.forge",
    version=version,
    description="Construction and exact verification of A1-bundle threefolds "
    "{fV - gU = 1} over affine surfaces",
    license="BSD",
    author="Sphere Forge Developers",
    long_description=open("README.rst").read(),
    packages=find_packages(),
    include_package_data=True,
    package_data={
        "sphere.forge": [
            "templates/*.sfs",
            "templates/examples/*.sfs",
            "data/*.json",
        ],
    },
    zip_safe=False,
    # when updating these dependencies, update the README and the conda
    # recipe too
    install_requires=requires,
    extras_require={
        "test": ["pytest", "pytest-cov", "sympy"],
        "doc": ["sphinx", "sphinx_rtd_theme"],
    },
    entry_points={
        "console_scripts": ["sphere-forge = sphere.forge.scripts.sf:main"],
        "sphere_forge.cli": [
            "run = sphere.forge.scripts.run:run",
            "fmt = sphere.forge.scripts.fmt:fmt",
            "new = sphere.forge.scripts.new:new",
        ],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: BSD License",
        "Natural Language :: English",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
