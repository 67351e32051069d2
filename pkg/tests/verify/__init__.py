"""
betti-utilities - tests/verify/__init__.py

Licensed under the MIT License.
"""
