"""
betti-utilities - setup.py

Licensed under the MIT License.
"""
from setuptools import find_packages, setup

setup(name="betti-utilities", version="0.1.0",
      description="Multigraded Betti numbers of edge ideals of weighted oriented graphs",
      license="MIT", packages=find_packages(exclude=["tests", "tests.*"]),
      package_data={"betti_utils": ["configuration/project.yml"]},
      python_requires=">=3.8",
      install_requires=["numpy", "pyyaml", "toolz", "joblib", "networkx", "sympy", "pandas", "tqdm"],
      entry_points={"console_scripts": ["betti-utils=betti_utils.cli.main:run"]})
