"""
betti-utilities - configuration/settings.py

Licensed under the MIT License.
"""
import logging
from dataclasses import asdict, dataclass, replace
from typing import Any, Dict, Optional

from betti_utils.configuration.configuration_validation import (
    Validation,
    ValidationResult,
)
from betti_utils.configuration.project_configuration import (
    ProjectConfiguration,
    project_configuration_file,
)


class SettingsError(ValueError):
    """ A setting failed validation """


@dataclass(frozen=True)
class BettiSettings:
    field_prime: int = 32003
    lcm_generator_cap: int = 18
    taylor_generator_cap: int = 20
    n_jobs: int = 1
    seed: int = 20200101
    explore_max_n: int = 6
    explore_max_weight: int = 3
    max_counterexamples: int = 5
    log_level: str = "WARNING"


def load_settings(
    configuration_file: str = project_configuration_file,
    overrides: Optional[Dict[str, Any]] = None,
) -> BettiSettings:
    """
    Read settings from the project configuration file, apply overrides (None values are ignored)
    and validate every value.

    :param configuration_file: project file searched for by ProjectConfiguration
    :param overrides: setting name to value, usually from command line flags
    :return: validated settings
    :raises SettingsError: when any setting fails validation
    """
    project_configuration = ProjectConfiguration(configuration_file)
    defaults = BettiSettings()
    values = {}
    for name, default in asdict(defaults).items():
        value = project_configuration.get_value(name)
        values[name] = default if value is None else value
    for name, value in (overrides or {}).items():
        if value is not None:
            values[name] = value

    validation = Validation()
    failures = []
    for name, value in values.items():
        result = validation.validate_input(name, value)
        if result.status == ValidationResult.failure:
            failures.append("{}={!r}: {}".format(name, value, result.reason))
        elif result.status == ValidationResult.warning:
            validation.dump_validation_result(result)
    if failures:
        raise SettingsError("Invalid settings: " + "; ".join(failures))

    settings = replace(defaults, **values)
    logging.getLogger(__name__).debug("Loaded settings %s", settings)
    return settings
