"""
betti-utilities - tests/cli/__init__.py

Licensed under the MIT License.
"""
