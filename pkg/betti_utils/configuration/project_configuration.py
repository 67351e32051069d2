"""
betti-utilities - configuration/project_configuration.py

Licensed under the MIT License.
"""
import logging
import os
from typing import Any, Dict, List, Optional, Tuple

import yaml

from betti_utils import default_configuration_file

project_configuration_file = "project.yml"


class ProjectConfiguration:
    """
    YAML project settings, a project name plus a list of named settings:

        project_name: Betti Default Project
        settings:
          - field_prime:
            - description: Prime modulus p of the coefficient field GF(p)
            - value: 32003
          - lcm_generator_cap:
            - description: Largest generator count accepted by the lcm lattice enumeration
            - value: 18
    """

    configuration: Dict[str, Any]
    project_key = "project_name"
    settings_key = "settings"
    setting_value = "value"
    setting_description = "description"

    def __init__(self, configuration_file: str = project_configuration_file):
        """
        Read configuration_file from the working directory or one of its parents, or the
        packaged defaults when there is none. Saving writes next to the working directory.

        :param configuration_file: file name or path
        """
        found, file_dir = find_file(configuration_file)
        target = os.path.join(file_dir, os.path.basename(configuration_file))
        if not found:
            logging.getLogger(__name__).debug("%s not found, using packaged defaults", configuration_file)
        self.configuration = self._read(target if found else default_configuration_file)
        self.configuration_file = target

    @staticmethod
    def _read(path: str) -> Dict[str, Any]:
        with open(path) as yml_file:
            return yaml.safe_load(yml_file) or {}

    def _require(self, key_name: str):
        if not self.configuration:
            raise ValueError("Load configuration file first")
        if key_name not in self.configuration:
            raise ValueError("Invalid configuration file, missing key: {}".format(key_name))

    def _entry(self, setting_name: str) -> Optional[List[dict]]:
        """ Attribute list of the setting, None when it is absent or repeated """
        settings = self.configuration.get(ProjectConfiguration.settings_key)
        if not isinstance(settings, list):
            return None
        matches = [s[setting_name] for s in settings if isinstance(s, dict) and setting_name in s]
        return matches[0] if len(matches) == 1 else None

    def project_name(self) -> str:
        self._require(ProjectConfiguration.project_key)
        return self.configuration[ProjectConfiguration.project_key]

    def get_settings(self) -> List[dict]:
        self._require(ProjectConfiguration.settings_key)
        return self.configuration[ProjectConfiguration.settings_key]

    def add_setting(self, setting_name: str, description: str, value: Any):
        """
        Append a setting with its description and value.

        :param setting_name: setting key
        :param description: human readable description
        :param value: setting value
        """
        if not isinstance(self.configuration.get(ProjectConfiguration.settings_key), list):
            self.configuration[ProjectConfiguration.settings_key] = []
        self.configuration[ProjectConfiguration.settings_key].append(
            {
                setting_name: [
                    {ProjectConfiguration.setting_description: description},
                    {ProjectConfiguration.setting_value: value},
                ]
            }
        )

    def get_value(self, setting_name: str) -> Optional[Any]:
        """
        :param setting_name: setting key
        :return: the value, None when the setting or its value is missing
        """
        self._require(ProjectConfiguration.settings_key)
        values = [a for a in self._entry(setting_name) or [] if ProjectConfiguration.setting_value in a]
        return values[0][ProjectConfiguration.setting_value] if len(values) == 1 else None

    def set_value(self, setting_name: str, value: Any):
        """
        Replace the value of a setting, adding the setting without a description when absent.

        :param setting_name: setting key
        :param value: new value
        """
        attributes = self._entry(setting_name)
        if attributes is None:
            self.add_setting(setting_name, "", value)
            return
        for attribute in attributes:
            if ProjectConfiguration.setting_value in attribute:
                attribute[ProjectConfiguration.setting_value] = value
                return
        attributes.append({ProjectConfiguration.setting_value: value})

    def save_configuration(self) -> None:
        with open(self.configuration_file, "w") as yml_file:
            yaml.dump(self.configuration, yml_file)


def find_file(file: str, search_depth: int = 3) -> Tuple[bool, str]:
    """
    Look for file in the working directory and up to search_depth parents. Absolute paths are
    only checked in place.

    :param file: file name or path
    :param search_depth: parent directories to climb
    :return: (found, directory holding the file, or the working directory)
    """
    if os.path.isabs(file):
        return os.path.isfile(file), os.path.dirname(file)

    working_dir = os.path.abspath(os.curdir)
    search_dir = working_dir
    for _ in range(search_depth + 1):
        candidate = os.path.join(search_dir, file)
        if os.path.isfile(candidate):
            return True, os.path.dirname(os.path.abspath(candidate))
        parent = os.path.dirname(search_dir)
        if parent == search_dir:
            break
        search_dir = parent
    return False, working_dir
