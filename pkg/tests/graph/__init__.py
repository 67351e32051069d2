"""
betti-utilities - tests/graph/__init__.py

Licensed under the MIT License.
"""
