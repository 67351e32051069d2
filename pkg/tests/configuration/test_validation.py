"""
betti-utilities - tests/configuration/test_validation.py

Licensed under the MIT License.
"""
import pytest

from betti_utils.configuration.configuration_validation import Validation, ValidationResult

v = Validation()


def test_field_prime_validation_success():
    r = v.validate_input("field_prime", 32003)
    assert_validation_result(r, ValidationResult.success)


@pytest.mark.parametrize("value", [32004, 1, "32003", 1.5])
def test_field_prime_validation_failure(value):
    r = v.validate_input("field_prime", value)
    assert_validation_result(r, ValidationResult.failure)


def test_small_prime_warning():
    r = v.validate_input("field_prime", 2)
    assert_validation_result(r, ValidationResult.warning)


def test_validation_warning():
    r = v.validate_input("foo", "asbas;klj;ijer;kasdf")
    assert_validation_result(r, ValidationResult.warning)


@pytest.mark.parametrize(
    "name, value, result",
    [
        ("lcm_generator_cap", 18, ValidationResult.success),
        ("lcm_generator_cap", 25, ValidationResult.failure),
        ("taylor_generator_cap", 0, ValidationResult.failure),
        ("n_jobs", -1, ValidationResult.success),
        ("n_jobs", 0, ValidationResult.failure),
        ("n_jobs", True, ValidationResult.failure),
        ("seed", -3, ValidationResult.failure),
        ("explore_max_n", 8, ValidationResult.success),
        ("explore_max_n", 1, ValidationResult.failure),
        ("explore_max_weight", 7, ValidationResult.failure),
        ("max_counterexamples", 0, ValidationResult.success),
        ("log_level", "debug", ValidationResult.success),
        ("log_level", "LOUD", ValidationResult.failure),
    ],
)
def test_setting_validation(name, value, result):
    assert_validation_result(v.validate_input(name, value), result)


def test_is_field_valid():
    assert v.is_field_valid("field_prime")
    assert not v.is_field_valid("no_such_setting")


def assert_validation_result(r, result):
    """
    :param r: validation_result to check
    :param result: expected ValidationResult
    """
    Validation.dump_validation_result(r)
    assert r.status is result
