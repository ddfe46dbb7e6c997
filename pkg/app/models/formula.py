# app/models/formula.py
import re
from dataclasses import dataclass

LETTER_PATTERN = re.compile(r'^[a-z][a-z0-9_]*$')
RESERVED_WORDS = frozenset({'box', 'dia', 'true', 'false'})


def is_letter_id(name):
    return isinstance(name, str) and bool(LETTER_PATTERN.match(name)) and name not in RESERVED_WORDS


class Formula:
    """Abstract syntax tree of a WAML formula. Cases are immutable and hashable."""

    __slots__ = ()

    def __str__(self):
        from app.logic.syntax import render
        return render(self)

    def to_dict(self):
        return {'formula': str(self)}


@dataclass(frozen=True)
class Letter(Formula):
    name: str

    def __post_init__(self):
        if not is_letter_id(self.name):
            raise ValueError(f"invalid letter id '{self.name}'")


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Box(Formula):
    operand: Formula


@dataclass(frozen=True)
class Diamond(Formula):
    operand: Formula


UNARY = (Not, Box, Diamond)
BINARY = (And, Or, Implies, Iff)
MODAL = (Box, Diamond)
