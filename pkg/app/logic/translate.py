# app/logic/translate.py
"""Standard translation into first-order logic, finite-structure evaluation and TPTP export."""
import logging
import re

from app.logic.errors import ArityMismatchError, TptpNameError, UnassignedVariableError, WamlError
from app.models.fol import Bicond, Cond, Conj, Disj, Exists, Forall, Neg, Pred, Rel, Truth
from app.models.formula import (
    And, Bottom, Box, Diamond, Iff, Implies, Letter, Not, Or, Top,
)

logger = logging.getLogger(__name__)

TPTP_WORD = re.compile(r'^[a-z][a-zA-Z0-9_]*$')
_FIRST_BLOCK = re.compile(r'^y(\d+)_0$')


class _Translator:
    def __init__(self, arity, reserved=()):
        self.arity = arity
        self.reserved = frozenset(reserved)
        self.blocks = 0

    def fresh(self):
        """Next block of bound variables; blocks clashing with a reserved name are skipped."""
        while True:
            block = self.blocks
            self.blocks += 1
            names = tuple(f'y{i}_{block}' for i in range(1, self.arity + 1))
            if self.reserved.isdisjoint(names):
                return names

    def translate(self, f, x):
        match f:
            case Letter(name):
                return Pred(name, x)
            case Top():
                return Truth(True)
            case Bottom():
                return Truth(False)
            case Not(operand):
                return Neg(self.translate(operand, x))
            case And(left, right):
                return Conj((self.translate(left, x), self.translate(right, x)))
            case Or(left, right):
                return Disj((self.translate(left, x), self.translate(right, x)))
            case Implies(left, right):
                return Cond(self.translate(left, x), self.translate(right, x))
            case Iff(left, right):
                return Bicond(self.translate(left, x), self.translate(right, x))
            case Box(operand):
                ys = self.fresh()
                branches = tuple(self.translate(operand, y) for y in ys)
                body = Cond(Rel((x,) + ys), branches[0] if len(branches) == 1 else Disj(branches))
                return _quantify(Forall, ys, body)
            case Diamond(operand):
                ys = self.fresh()
                body = Conj((Rel((x,) + ys),) + tuple(self.translate(operand, y) for y in ys))
                return _quantify(Exists, ys, body)
        raise TypeError(f"not a formula: {f!r}")


def _quantify(kind, variables, body):
    for variable in reversed(variables):
        body = kind(variable, body)
    return body


def st(f, arity, free_var='x'):
    """ST_x: box becomes a universal block over y1..yn guarding the disjunction of
    ST_{yi}; dia becomes the existential mirror with a conjunction."""
    if arity < 1:
        raise WamlError("arity ≥ 1 required")
    return _Translator(arity, reserved={free_var}).translate(f, free_var)


def free_variables(g):
    match g:
        case Pred(_, variable):
            return frozenset({variable})
        case Rel(variables):
            return frozenset(variables)
        case Truth():
            return frozenset()
        case Neg(operand):
            return free_variables(operand)
        case Conj(operands) | Disj(operands):
            return frozenset().union(*(free_variables(h) for h in operands))
        case Cond(left, right) | Bicond(left, right):
            return free_variables(left) | free_variables(right)
        case Forall(variable, body) | Exists(variable, body):
            return free_variables(body) - {variable}
    raise TypeError(f"not a first-order formula: {g!r}")


def fol_eval(m, assignment, g):
    """Tarskian satisfaction of g in m; quantifiers range over m.worlds."""
    match g:
        case Pred(letter, variable):
            return letter in m.valuation[_lookup(assignment, variable)]
        case Rel(variables):
            if len(variables) != m.arity + 1:
                raise ArityMismatchError(len(variables) - 1, m.arity)
            return tuple(_lookup(assignment, v) for v in variables) in m.relation
        case Truth(value):
            return value
        case Neg(operand):
            return not fol_eval(m, assignment, operand)
        case Conj(operands):
            return all(fol_eval(m, assignment, h) for h in operands)
        case Disj(operands):
            return any(fol_eval(m, assignment, h) for h in operands)
        case Cond(left, right):
            return not fol_eval(m, assignment, left) or fol_eval(m, assignment, right)
        case Bicond(left, right):
            return fol_eval(m, assignment, left) == fol_eval(m, assignment, right)
        case Forall(variable, body):
            return all(fol_eval(m, {**assignment, variable: w}, body) for w in m.worlds)
        case Exists(variable, body):
            return any(fol_eval(m, {**assignment, variable: w}, body) for w in m.worlds)
    raise TypeError(f"not a first-order formula: {g!r}")


def _lookup(assignment, variable):
    try:
        return assignment[variable]
    except KeyError:
        raise UnassignedVariableError(variable) from None


def _collect(g, kind):
    variables = []
    while isinstance(g, kind):
        variables.append(g.variable)
        g = g.body
    return variables, g


def render_text(g):
    match g:
        case Pred(letter, variable):
            return f'P_{letter}({variable})'
        case Rel(variables):
            return f"R({', '.join(variables)})"
        case Truth(value):
            return 'true' if value else 'false'
        case Neg(operand):
            return '~' + render_text(operand)
        case Conj(operands):
            return '(' + ' & '.join(render_text(h) for h in operands) + ')'
        case Disj(operands):
            return '(' + ' | '.join(render_text(h) for h in operands) + ')'
        case Cond(left, right):
            return f'({render_text(left)} -> {render_text(right)})'
        case Bicond(left, right):
            return f'({render_text(left)} <-> {render_text(right)})'
        case Forall() | Exists():
            variables, body = _collect(g, type(g))
            word = 'forall' if isinstance(g, Forall) else 'exists'
            return f"{word} {' '.join(variables)}. {render_text(body)}"
    raise TypeError(f"not a first-order formula: {g!r}")


def _tptp_variable(name):
    first = _FIRST_BLOCK.match(name)
    if first:
        return f'Y{first.group(1)}'
    return name[0].upper() + name[1:]


class _TptpWriter:
    def __init__(self, grounding):
        self.grounding = grounding

    def term(self, variable, bound):
        if variable in bound:
            return _tptp_variable(variable)
        return self.grounding[variable]

    def unit(self, g, bound):
        text = self.formula(g, bound)
        if isinstance(g, (Forall, Exists)):
            return f'({text})'
        return text

    def formula(self, g, bound=frozenset()):
        match g:
            case Pred(letter, variable):
                return f'p_{letter}({self.term(variable, bound)})'
            case Rel(variables):
                return 'r(' + ','.join(self.term(v, bound) for v in variables) + ')'
            case Truth(value):
                return '$true' if value else '$false'
            case Neg(operand):
                return '~ ' + self.unit(operand, bound)
            case Conj(operands):
                return '(' + ' & '.join(self.unit(h, bound) for h in operands) + ')'
            case Disj(operands):
                return '(' + ' | '.join(self.unit(h, bound) for h in operands) + ')'
            case Cond(left, right):
                return f'({self.unit(left, bound)} => {self.unit(right, bound)})'
            case Bicond(left, right):
                return f'({self.unit(left, bound)} <=> {self.unit(right, bound)})'
            case Forall() | Exists():
                variables, body = _collect(g, type(g))
                symbol = '!' if isinstance(g, Forall) else '?'
                inner = bound | frozenset(variables)
                names = ','.join(_tptp_variable(v) for v in variables)
                return f'{symbol} [{names}] : {self.formula(body, inner)}'
        raise TypeError(f"not a first-order formula: {g!r}")


def tptp_export(g, role, name, grounding):
    """One ``fof`` line; free variables are replaced by the grounding constants."""
    if role not in ('axiom', 'conjecture'):
        raise WamlError(f"unsupported TPTP role '{role}'")
    if not TPTP_WORD.match(name):
        raise TptpNameError(f"'{name}' is not a valid TPTP name")
    for variable in sorted(free_variables(g)):
        if variable not in grounding:
            raise UnassignedVariableError(variable)
    for constant in grounding.values():
        if not TPTP_WORD.match(constant):
            raise TptpNameError(f"'{constant}' is not a valid TPTP constant")
    return f'fof({name}, {role}, {_TptpWriter(grounding).formula(g)}).'


def tptp_problem(f, arity, name='waml', premises=()):
    """Global-consequence problem: each premise as a universally closed axiom,
    f as the universally closed conjecture."""
    lines = [
        tptp_export(Forall('x', st(g, arity, 'x')), 'axiom', f'{name}_premise_{i}', {})
        for i, g in enumerate(premises, start=1)
    ]
    lines.append(tptp_export(Forall('x', st(f, arity, 'x')), 'conjecture', name, {}))
    return '\n'.join(lines)
