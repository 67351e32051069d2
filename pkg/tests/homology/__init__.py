"""
betti-utilities - tests/homology/__init__.py

Licensed under the MIT License.
"""
