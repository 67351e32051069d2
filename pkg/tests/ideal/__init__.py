"""
betti-utilities - tests/ideal/__init__.py

Licensed under the MIT License.
"""
