"""
betti-utilities - verify/verification_report.py

Licensed under the MIT License.
"""
import collections
from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterable, List, Mapping, Tuple


class CheckStatus(Enum):
    """ Enumerator used to Identify check results """

    passed = "PASS"
    failed = "FAIL"
    not_applicable = "NOT_APPLICABLE"


# Result of one check
#
# check_id - Name of the identity or formula checked
# status - CheckStatus
# expected - Value predicted by the formula
# actual - Value read from the computed tables
# witness - For FAIL the offending index with both values, for NOT_APPLICABLE the unmet hypothesis
check_result = collections.namedtuple("check_result", "check_id status expected actual witness")


class ResultsGenerator:
    """ Collection of results for checks """

    @staticmethod
    def create_pass(check_id: str, expected: Any, actual: Any) -> check_result:
        return check_result(check_id, CheckStatus.passed, expected, actual, None)

    @staticmethod
    def create_failure(check_id: str, expected: Any, actual: Any, witness: Any) -> check_result:
        """
        Create Failure Result

        :param check_id: Name of the check
        :param expected: predicted value
        :param actual: computed value
        :param witness: offending index and values, required
        :return: Returns a check_result failure object
        """
        if witness is None or witness == "":
            raise ValueError("A failed check needs a witness: {}".format(check_id))
        return check_result(check_id, CheckStatus.failed, expected, actual, witness)

    @staticmethod
    def create_not_applicable(check_id: str, hypothesis: str) -> check_result:
        """
        Create a result for a check whose hypothesis does not hold

        :param check_id: Name of the check
        :param hypothesis: name of the unmet hypothesis
        :return: Returns a check_result not applicable object
        """
        return check_result(check_id, CheckStatus.not_applicable, None, None, hypothesis)

    @staticmethod
    def create_comparison(check_id: str, expected: Any, actual: Any) -> check_result:
        """ PASS when expected == actual, otherwise FAIL with both values as witness """
        if expected == actual:
            return ResultsGenerator.create_pass(check_id, expected, actual)
        return ResultsGenerator.create_failure(
            check_id, expected, actual, {"expected": expected, "actual": actual}
        )


def compare_tables(check_id: str, expected: Mapping, actual: Mapping) -> check_result:
    """
    Compare two tables entrywise, missing keys counting as zero. The witness of a failure is the
    first differing key in sorted order with both values.

    :param check_id: Name of the check
    :param expected: key -> value predicted
    :param actual: key -> value computed
    :return: check_result
    """
    expected = {k: v for k, v in expected.items() if v}
    actual = {k: v for k, v in actual.items() if v}
    for key in sorted(set(expected) | set(actual)):
        if expected.get(key, 0) != actual.get(key, 0):
            return ResultsGenerator.create_failure(
                check_id,
                expected,
                actual,
                {"index": key, "expected": expected.get(key, 0), "actual": actual.get(key, 0)},
            )
    return ResultsGenerator.create_pass(check_id, expected, actual)


@dataclass(frozen=True)
class VerificationReport:
    subject: str
    field_prime: int
    checks: Tuple[check_result, ...]

    @property
    def overall(self) -> bool:
        """ True when no check failed """
        return all(c.status != CheckStatus.failed for c in self.checks)

    def failures(self) -> List[check_result]:
        return [c for c in self.checks if c.status == CheckStatus.failed]

    def status_of(self, check_id: str) -> CheckStatus:
        matches = [c.status for c in self.checks if c.check_id == check_id]
        if len(matches) != 1:
            raise KeyError("Expected exactly one check named {}, found {}".format(check_id, len(matches)))
        return matches[0]

    def applicable(self) -> List[check_result]:
        return [c for c in self.checks if c.status != CheckStatus.not_applicable]


def combine_reports(subject: str, field_prime: int, reports: Iterable[VerificationReport], prefix: str = "") -> VerificationReport:
    """
    Concatenate the checks of several reports, optionally prefixing check ids.

    :param subject: subject of the combined report
    :param field_prime: field modulus
    :param reports: reports to join
    :param prefix: prepended to every check id
    :return: :class:`VerificationReport`
    """
    checks = []
    for report in reports:
        for check in report.checks:
            checks.append(check._replace(check_id=prefix + check.check_id))
    return VerificationReport(subject, field_prime, tuple(checks))


def dump_report(report: VerificationReport, verbose: bool = False) -> str:
    """
    Text rendering of a report, one line per check

    :param report: report to render
    :param verbose: include expected and actual values of passing checks
    :return: report text ending in a newline
    """
    lines = ["subject: {}".format(report.subject), "field: GF({})".format(report.field_prime)]
    for check in report.checks:
        line = "{} {}".format(check.status.value, check.check_id)
        if check.status == CheckStatus.failed:
            line += " witness={}".format(check.witness)
        elif check.status == CheckStatus.not_applicable:
            line += " ({})".format(check.witness)
        elif verbose:
            line += " expected={} actual={}".format(check.expected, check.actual)
        lines.append(line)
    lines.append("overall: {}".format("PASS" if report.overall else "FAIL"))
    return "\n".join(lines) + "\n"
