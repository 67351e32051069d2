"""
betti-utilities - tests/configuration/__init__.py

Licensed under the MIT License.
"""
