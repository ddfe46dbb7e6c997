# app/logic/syntax.py
"""Formula parsing, printing and structural metrics.

Grammar (ASCII): letters ``[a-z][a-z0-9_]*``, ``true``, ``false``, ``~``, ``&``,
``|``, ``->``, ``<->``, ``box``, ``dia`` and parentheses. ``~``/``box``/``dia``
bind tightest, then ``&``, ``|``, ``->``, ``<->``; the last two associate to
the right.
"""
from functools import lru_cache, reduce
import logging

from lark import Lark
from lark.exceptions import UnexpectedInput, VisitError
from lark.visitors import Transformer_NonRecursive

from app.logic.errors import BudgetExceededError, FormulaSyntaxError
from app.models.formula import (
    And, Bottom, Box, Diamond, Iff, Implies, Letter, Not, Or, Top,
    BINARY,
)

logger = logging.getLogger(__name__)

GRAMMAR = r"""
?start: iff

?iff: implies
    | implies "<->" iff     -> iff_

?implies: disj
    | disj "->" implies     -> implies_

?disj: conj
    | disj "|" conj         -> or_

?conj: unary
    | conj "&" unary        -> and_

?unary: "~" unary           -> not_
    | "box" unary           -> box_
    | "dia" unary           -> dia_
    | atom

?atom: "true"               -> top_
    | "false"               -> bottom_
    | LETTER                -> letter_
    | "(" iff ")"

LETTER: /[a-z][a-z0-9_]*/

%import common.WS
%ignore WS
"""

_parser = Lark(GRAMMAR, parser='lalr', maybe_placeholders=False)

# Deepest operator nesting accepted by parse; formula walks recurse once per level.
MAX_NESTING = 200


class _AlphabetViolation(Exception):
    def __init__(self, name, position):
        super().__init__(name)
        self.name = name
        self.position = position


class _FormulaBuilder(Transformer_NonRecursive):
    def __init__(self, alphabet=None):
        super().__init__()
        self.alphabet = alphabet

    def letter_(self, items):
        token = items[0]
        if self.alphabet is not None and str(token) not in self.alphabet:
            raise _AlphabetViolation(str(token), token.start_pos)
        return Letter(str(token))

    def top_(self, _):
        return Top()

    def bottom_(self, _):
        return Bottom()

    def not_(self, items):
        return Not(items[0])

    def box_(self, items):
        return Box(items[0])

    def dia_(self, items):
        return Diamond(items[0])

    def and_(self, items):
        return And(items[0], items[1])

    def or_(self, items):
        return Or(items[0], items[1])

    def implies_(self, items):
        return Implies(items[0], items[1])

    def iff_(self, items):
        return Iff(items[0], items[1])


def parse(text, alphabet=None, max_nesting=MAX_NESTING):
    """Parse ``text`` into a Formula.

    When ``alphabet`` is given, every letter must be drawn from it.
    Raises FormulaSyntaxError carrying the 0-based character position, and
    BudgetExceededError when operators nest deeper than ``max_nesting``.
    """
    try:
        tree = _parser.parse(text)
    except UnexpectedInput as e:
        position = getattr(e, 'pos_in_stream', None)
        if position is None or position < 0:
            position = len(text)
        found = text[position:position + 1] or 'end of input'
        raise FormulaSyntaxError(f"unexpected '{found}'", position) from None

    try:
        f = _FormulaBuilder(alphabet).transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, _AlphabetViolation):
            violation = e.orig_exc
            raise FormulaSyntaxError(
                f"letter '{violation.name}' is not in the declared alphabet",
                violation.position,
            ) from None
        raise

    depth = nesting_depth(f)
    if depth > max_nesting:
        raise BudgetExceededError(f"formula nesting depth {depth}", max_nesting)
    return f


def nesting_depth(f):
    """Longest chain of operators from the root to a leaf, computed without recursion."""
    deepest = 0
    stack = [(f, 0)]
    while stack:
        g, depth = stack.pop()
        deepest = max(deepest, depth)
        if isinstance(g, (Not, Box, Diamond)):
            stack.append((g.operand, depth + 1))
        elif isinstance(g, BINARY):
            stack.append((g.left, depth + 1))
            stack.append((g.right, depth + 1))
    return deepest


_PRECEDENCE = {Iff: 1, Implies: 2, Or: 3, And: 4}
_SYMBOLS = {Iff: '<->', Implies: '->', Or: '|', And: '&'}
_RIGHT_ASSOCIATIVE = (Iff, Implies)
_UNARY_PRECEDENCE = 5
_ATOM_PRECEDENCE = 6


def _precedence(f):
    if isinstance(f, BINARY):
        return _PRECEDENCE[type(f)]
    if isinstance(f, (Not, Box, Diamond)):
        return _UNARY_PRECEDENCE
    return _ATOM_PRECEDENCE


def _wrap(f, minimum):
    text = render(f)
    return text if _precedence(f) >= minimum else f'({text})'


def render(f):
    """Minimal-parentheses rendering; ``parse(render(f)) == f``."""
    match f:
        case Letter(name):
            return name
        case Top():
            return 'true'
        case Bottom():
            return 'false'
        case Not(operand):
            return '~' + _wrap(operand, _UNARY_PRECEDENCE)
        case Box(operand):
            return 'box ' + _wrap(operand, _UNARY_PRECEDENCE)
        case Diamond(operand):
            return 'dia ' + _wrap(operand, _UNARY_PRECEDENCE)

    precedence = _PRECEDENCE[type(f)]
    if isinstance(f, _RIGHT_ASSOCIATIVE):
        left = _wrap(f.left, precedence + 1)
        right = _wrap(f.right, precedence)
    else:
        left = _wrap(f.left, precedence)
        right = _wrap(f.right, precedence + 1)
    return f'{left} {_SYMBOLS[type(f)]} {right}'


@lru_cache(maxsize=65536)
def modal_depth(f):
    match f:
        case Box(operand) | Diamond(operand):
            return modal_depth(operand) + 1
        case Not(operand):
            return modal_depth(operand)
        case And(left, right) | Or(left, right) | Implies(left, right) | Iff(left, right):
            return max(modal_depth(left), modal_depth(right))
    return 0


@lru_cache(maxsize=65536)
def letters(f):
    match f:
        case Letter(name):
            return frozenset({name})
        case Not(operand) | Box(operand) | Diamond(operand):
            return letters(operand)
        case And(left, right) | Or(left, right) | Implies(left, right) | Iff(left, right):
            return letters(left) | letters(right)
    return frozenset()


@lru_cache(maxsize=65536)
def size(f):
    match f:
        case Not(operand) | Box(operand) | Diamond(operand):
            return size(operand) + 1
        case And(left, right) | Or(left, right) | Implies(left, right) | Iff(left, right):
            return size(left) + size(right) + 1
    return 1


def subformulas(f):
    """All subformulas of f, children before parents, without repeats."""
    seen = {}

    def visit(g):
        if isinstance(g, (Not, Box, Diamond)):
            visit(g.operand)
        elif isinstance(g, BINARY):
            visit(g.left)
            visit(g.right)
        seen.setdefault(g, None)

    visit(f)
    return list(seen)


def conjoin(formulas):
    formulas = list(formulas)
    if not formulas:
        return Top()
    return reduce(And, formulas)


def disjoin(formulas):
    formulas = list(formulas)
    if not formulas:
        return Bottom()
    return reduce(Or, formulas)


def substitute(f, mapping):
    """Replace every letter named in ``mapping`` by its formula."""
    match f:
        case Letter(name):
            return mapping.get(name, f)
        case Not(operand):
            return Not(substitute(operand, mapping))
        case Box(operand):
            return Box(substitute(operand, mapping))
        case Diamond(operand):
            return Diamond(substitute(operand, mapping))
    if isinstance(f, BINARY):
        return type(f)(substitute(f.left, mapping), substitute(f.right, mapping))
    return f


def _flatten(f, kind):
    if isinstance(f, kind):
        return _flatten(f.left, kind) + _flatten(f.right, kind)
    return [f]


def simplify(f):
    """Flatten conjunctions and disjunctions, drop duplicates and neutral elements."""
    match f:
        case Not(Not(operand)):
            return simplify(operand)
        case Not(operand):
            return Not(simplify(operand))
        case Box(operand):
            return Box(simplify(operand))
        case Diamond(operand):
            return Diamond(simplify(operand))
        case Implies(left, right) | Iff(left, right):
            return type(f)(simplify(left), simplify(right))
        case And():
            parts = list(dict.fromkeys(simplify(g) for g in _flatten(f, And)))
            if Bottom() in parts:
                return Bottom()
            return conjoin(g for g in parts if g != Top())
        case Or():
            parts = list(dict.fromkeys(simplify(g) for g in _flatten(f, Or)))
            if Top() in parts:
                return Top()
            return disjoin(g for g in parts if g != Bottom())
    return f


def enumerate_formulas(alphabet, depth, size_budget):
    """Yield every formula over ``alphabet`` up to ``depth`` and ``size_budget``.

    Canonical-form policy: the basis is true, letters, ~, &, box and dia;
    double negations are skipped and a conjunction ``a & b`` is only built when
    ``a`` precedes ``b`` in (size, printed form) order. Formulas come out by
    size, then lexicographically by printed form.
    """
    levels = {}
    for current in range(1, size_budget + 1):
        found = set()
        if current == 1:
            found.add(Top())
            found.update(Letter(name) for name in sorted(alphabet))
        else:
            for g in levels[current - 1]:
                if not isinstance(g, Not):
                    found.add(Not(g))
                if modal_depth(g) < depth:
                    found.add(Box(g))
                    found.add(Diamond(g))
            for left_size in range(1, (current - 1) // 2 + 1):
                right_size = current - 1 - left_size
                for a in levels[left_size]:
                    for b in levels[right_size]:
                        if left_size < right_size or render(a) < render(b):
                            found.add(And(a, b))
        level = sorted(found, key=render)
        levels[current] = level
        logger.debug("enumerated %d formulas of size %d", len(level), current)
        yield from level
