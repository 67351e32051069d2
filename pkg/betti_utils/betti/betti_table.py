"""
betti-utilities - betti/betti_table.py

Licensed under the MIT License.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Mapping, Tuple

from toolz import reduceby

from betti_utils.ideal.monomial_ideal import Monomial, degree

Key = Tuple[int, Monomial]


class Convention(Enum):
    """ Betti numbers of the ideal I or of the quotient R/I """

    ideal = "ideal"
    quotient = "quotient"


@dataclass(frozen=True)
class BettiTable:
    """
    Multigraded Betti numbers keyed by (homological index, multidegree). Zero entries are dropped
    and the remaining ones are kept in (index, multidegree) order.
    """

    convention: Convention
    ambient_n: int
    entries: Mapping[Key, int] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        cleaned = {}
        for (i, b), value in sorted(self.entries.items()):
            b = tuple(b)
            if len(b) != self.ambient_n:
                raise ValueError("Multidegree {} does not have {} entries".format(b, self.ambient_n))
            if value < 0:
                raise ValueError("Betti numbers are non negative, got {} at {}".format(value, (i, b)))
            if value:
                cleaned[(i, b)] = value
        object.__setattr__(self, "entries", cleaned)

    def get(self, i: int, b: Monomial) -> int:
        return self.entries.get((i, tuple(b)), 0)

    def multidegrees(self) -> List[Monomial]:
        return sorted({b for _, b in self.entries})

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class AlgebraicInvariants:
    pdim: int
    reg: int
    extremals: Tuple[Tuple[int, int], ...]
    unique_extremal: bool


def _require(table: BettiTable, convention: Convention, operation: str):
    if table.convention != convention:
        raise ValueError(
            "{} expects a {} convention table, got {}".format(
                operation, convention.value, table.convention.value
            )
        )


def empty_quotient_table(ambient_n: int) -> BettiTable:
    """ Betti table of R/(0) """
    return BettiTable(Convention.quotient, ambient_n, {(0, (0,) * ambient_n): 1})


def to_quotient(table: BettiTable) -> BettiTable:
    """
    Shift an ideal table to the quotient: beta_{i+1,b}(R/I) = beta_{i,b}(I), plus beta_{0,0} = 1.

    :param table: IDEAL convention table
    :return: QUOTIENT convention table
    """
    _require(table, Convention.ideal, "to_quotient")
    entries = {(i + 1, b): value for (i, b), value in table.entries.items()}
    entries[(0, (0,) * table.ambient_n)] = 1
    return BettiTable(Convention.quotient, table.ambient_n, entries)


def to_ideal(table: BettiTable) -> BettiTable:
    """ Inverse of to_quotient """
    _require(table, Convention.quotient, "to_ideal")
    return BettiTable(
        Convention.ideal,
        table.ambient_n,
        {(i - 1, b): value for (i, b), value in table.entries.items() if i >= 1},
    )


def graded_view(table: BettiTable) -> Dict[Tuple[int, int], int]:
    """
    Sum entries over multidegrees of equal total degree.

    :param table: Betti table
    :return: (i, j) -> beta_{i,j}
    """
    return dict(
        sorted(
            reduceby(
                lambda item: (item[0][0], degree(item[0][1])),
                lambda total, item: total + item[1],
                table.entries.items(),
                0,
            ).items()
        )
    )


def total_view(table: BettiTable) -> Dict[int, int]:
    """ i -> total Betti number beta_i """
    return dict(
        sorted(
            reduceby(
                lambda item: item[0][0],
                lambda total, item: total + item[1],
                table.entries.items(),
                0,
            ).items()
        )
    )


def invariants_of(table: BettiTable) -> AlgebraicInvariants:
    """
    Projective dimension, regularity and extremal Betti numbers of R/I.

    A non zero beta_{k,l} is extremal when no other non zero beta_{i,j} has i >= k and
    j - i >= l - k, i.e. it is the upper left corner of a block of zeroes in the diagram.

    :param table: QUOTIENT convention table
    :return: :class:`AlgebraicInvariants`
    """
    _require(table, Convention.quotient, "invariants_of")
    graded = graded_view(table)
    pdim = max(i for i, _ in graded)
    reg = max(j - i for i, j in graded)
    extremals = tuple(
        (k, l)
        for k, l in graded
        if not any(
            (i, j) != (k, l) and i >= k and j - i >= l - k for i, j in graded
        )
    )
    return AlgebraicInvariants(pdim, reg, extremals, len(extremals) == 1)


def render_diagram(table: BettiTable) -> str:
    """
    Betti diagram of R/I: row r, column i holds beta_{i,i+r}, "-" for zero. Labels fill a
    5 character column, cells are right aligned in 4 characters.

    :param table: QUOTIENT convention table
    :return: diagram text ending in a newline
    """
    _require(table, Convention.quotient, "render_diagram")
    graded = graded_view(table)
    totals = total_view(table)
    invariants = invariants_of(table)
    columns = range(invariants.pdim + 1)

    def row(label: str, cells) -> str:
        return label.ljust(5) + "".join(str(cell).rjust(4) for cell in cells)

    separator = "-" * (5 + 4 * len(columns))
    lines = [row("", columns), separator]
    for r in range(invariants.reg + 1):
        lines.append(row("{}:".format(r), (graded.get((i, i + r), 0) or "-" for i in columns)))
    lines.append(separator)
    lines.append(row("Tot:", (totals.get(i, 0) for i in columns)))
    return "\n".join(lines) + "\n"


def lift(table: BettiTable, label_map: Mapping[int, int], ambient_n: int) -> BettiTable:
    """
    Pull a table computed on an induced subgraph back to the variables of the parent graph.

    :param table: table over len(label_map) variables
    :param label_map: parent vertex -> subgraph vertex
    :param ambient_n: parent variable count
    :return: table of the same convention over ambient_n variables
    """
    if len(label_map) != table.ambient_n:
        raise ValueError("Label map covers {} vertices, table has {}".format(len(label_map), table.ambient_n))
    entries = {}
    for (i, b), value in table.entries.items():
        lifted = [0] * ambient_n
        for old, new in label_map.items():
            lifted[old - 1] = b[new - 1]
        entries[(i, tuple(lifted))] = value
    return BettiTable(table.convention, ambient_n, entries)
