# app/models/fol.py
from dataclasses import dataclass


class FolFormula:
    """First-order formula over one (n+1)-ary relation symbol and unary letter predicates."""

    __slots__ = ()

    def __str__(self):
        from app.logic.translate import render_text
        return render_text(self)


@dataclass(frozen=True)
class Pred(FolFormula):
    letter: str
    variable: str


@dataclass(frozen=True)
class Rel(FolFormula):
    variables: tuple


@dataclass(frozen=True)
class Truth(FolFormula):
    value: bool


@dataclass(frozen=True)
class Neg(FolFormula):
    operand: FolFormula


@dataclass(frozen=True)
class Conj(FolFormula):
    operands: tuple


@dataclass(frozen=True)
class Disj(FolFormula):
    operands: tuple


@dataclass(frozen=True)
class Cond(FolFormula):
    left: FolFormula
    right: FolFormula


@dataclass(frozen=True)
class Bicond(FolFormula):
    left: FolFormula
    right: FolFormula


@dataclass(frozen=True)
class Forall(FolFormula):
    variable: str
    body: FolFormula


@dataclass(frozen=True)
class Exists(FolFormula):
    variable: str
    body: FolFormula
