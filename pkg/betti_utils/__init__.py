"""
betti-utilities - betti_utils/__init__.py

Licensed under the MIT License.
"""
import os

directory = os.path.dirname(os.path.realpath(__file__))
default_configuration_file = os.path.join(directory, "configuration", "project.yml")
