"""
betti-utilities - configuration/configuration_validation.py

Licensed under the MIT License.
"""
import collections
import logging
from enum import Enum
from typing import Any, Optional

from sympy import isprime


class ValidationType(Enum):
    """ Settings with a validation rule """

    field_prime = "field_prime"
    lcm_generator_cap = "lcm_generator_cap"
    taylor_generator_cap = "taylor_generator_cap"
    n_jobs = "n_jobs"
    seed = "seed"
    explore_max_n = "explore_max_n"
    explore_max_weight = "explore_max_weight"
    max_counterexamples = "max_counterexamples"
    log_level = "log_level"

    @classmethod
    def has_value(cls, value):
        return value in cls._value2member_map_


class ValidationResult(Enum):
    """ Outcome of validating one setting """

    success = "PASSED"
    warning = "WARNING"
    failure = "FAILED"


# Returned by Validation.validate_input: setting name, value, ValidationResult, reason
validation_result = collections.namedtuple(
    "validation_result", "type value status reason"
)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

# Generator counts above this make 2^g subset walks impractical.
HARD_GENERATOR_LIMIT = 24


class ResultsGenerator:
    """ Builders for validation_result values """

    @staticmethod
    def create_range_failure(type_name, value, value_range) -> validation_result:
        """ value_range is inclusive, None meaning unbounded """
        return validation_result(
            type_name,
            value,
            ValidationResult.failure,
            "Value outside accepted range [{}, {}]".format(*value_range),
        )

    @staticmethod
    def create_type_failure(type_name, value) -> validation_result:
        return validation_result(
            type_name, value, ValidationResult.failure, "Value must be an integer"
        )

    @staticmethod
    def create_success(type_name, value, content="") -> validation_result:
        return validation_result(type_name, value, ValidationResult.success, content)

    @staticmethod
    def create_failure(type_name, value, content) -> validation_result:
        return validation_result(type_name, value, ValidationResult.failure, content)

    @staticmethod
    def create_warning(type_name, value, content) -> validation_result:
        return validation_result(type_name, value, ValidationResult.warning, content)


class Validation:
    """
    Range, type and custom rules per setting. Unknown settings pass with a warning.
    """

    FIELD_NOT_RECOGNIZED = "Field not recognized/validated."

    def __init__(self):
        # A new setting needs a ValidationType member and an entry here.
        validation_restrictions = collections.namedtuple(
            "validation_restrictions", ["integer", "value_range", "custom_validator"]
        )
        self.type_restrictions = {
            ValidationType.field_prime: validation_restrictions(
                True, [2, None], self._validate_prime
            ),
            ValidationType.lcm_generator_cap: validation_restrictions(
                True, [1, HARD_GENERATOR_LIMIT], None
            ),
            ValidationType.taylor_generator_cap: validation_restrictions(
                True, [1, HARD_GENERATOR_LIMIT], None
            ),
            ValidationType.n_jobs: validation_restrictions(
                True, [None, None], self._validate_n_jobs
            ),
            ValidationType.seed: validation_restrictions(True, [0, None], None),
            ValidationType.explore_max_n: validation_restrictions(True, [2, 8], None),
            ValidationType.explore_max_weight: validation_restrictions(True, [1, 6], None),
            ValidationType.max_counterexamples: validation_restrictions(True, [0, None], None),
            ValidationType.log_level: validation_restrictions(
                False, None, self._validate_log_level
            ),
        }
        self.validated_fields = [x.name for x in self.type_restrictions]

    def is_field_valid(self, field_name: str) -> bool:
        return field_name in self.validated_fields

    def validate_input(self, type_name: str, value: Any) -> validation_result:
        """
        Check one setting value.

        :param type_name: setting name
        :param value: value read from the file or the command line
        :return: validation_result, a WARNING for unknown names
        """
        validation_type = self._get_validation_type(type_name)
        if not validation_type:
            return ResultsGenerator.create_warning(
                type_name, value, Validation.FIELD_NOT_RECOGNIZED
            )

        restriction = self.type_restrictions[validation_type]
        if restriction.integer:
            if isinstance(value, bool) or not isinstance(value, int):
                return ResultsGenerator.create_type_failure(type_name, value)
            if not self._validate_range(restriction.value_range, value):
                return ResultsGenerator.create_range_failure(
                    type_name, value, restriction.value_range
                )
        if restriction.custom_validator:
            return restriction.custom_validator(type_name, value)
        return ResultsGenerator.create_success(type_name, value)

    @staticmethod
    def dump_validation_result(result: validation_result):
        """ Log a result, WARNING level unless it passed """
        logger = logging.getLogger(__name__)
        level = logging.INFO if result.status == ValidationResult.success else logging.WARNING
        logger.log(level, "%s - %s - %s", result.status.value, result.type, result.value)
        if result.reason:
            logger.log(level, "  %s", result.reason)

    @staticmethod
    def _validate_range(value_range, value: int) -> bool:
        low, high = value_range
        return (low is None or value >= low) and (high is None or value <= high)

    @staticmethod
    def _get_validation_type(type_name: str) -> Optional[ValidationType]:
        if ValidationType.has_value(type_name):
            return ValidationType(type_name)
        return None

    # Custom validators

    @staticmethod
    def _validate_prime(type_name, value) -> validation_result:
        if not isprime(value):
            return ResultsGenerator.create_failure(type_name, value, "Field modulus must be prime")
        if value < 1000:
            return ResultsGenerator.create_warning(
                type_name, value, "Small primes may differ from characteristic zero"
            )
        return ResultsGenerator.create_success(type_name, value)

    @staticmethod
    def _validate_n_jobs(type_name, value) -> validation_result:
        if value == 0:
            return ResultsGenerator.create_failure(
                type_name, value, "n_jobs must be positive or negative, never 0"
            )
        return ResultsGenerator.create_success(type_name, value)

    @staticmethod
    def _validate_log_level(type_name, value) -> validation_result:
        if str(value).upper() not in LOG_LEVELS:
            return ResultsGenerator.create_failure(
                type_name, value, "Log level must be one of {}".format(", ".join(LOG_LEVELS))
            )
        return ResultsGenerator.create_success(type_name, value)
