"""
betti-utilities - tests/__init__.py

Licensed under the MIT License.
"""
