"""
betti-utilities - tests/betti/__init__.py

Licensed under the MIT License.
"""
