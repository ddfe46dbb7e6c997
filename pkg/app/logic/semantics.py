# app/logic/semantics.py
"""Model checking for the diagonal n-semantics, validity and bounded satisfiability."""
from dataclasses import dataclass
import itertools
import logging

import z3

from app.logic.errors import BudgetExceededError, WamlError
from app.logic.model import build
from app.logic.syntax import enumerate_formulas, letters, subformulas
from app.models.formula import (
    And, Bottom, Box, Diamond, Iff, Implies, Letter, Not, Or, Top,
)
from app.models.nmodel import PointedModel

logger = logging.getLogger(__name__)

DEFAULT_SAT_BUDGET = 5_000_000


class Evaluator:
    """Computes truth sets of formulas in one model, memoising by subformula."""

    def __init__(self, model):
        self.model = model
        self.universe = frozenset(model.worlds)
        self._cache = {}

    def extension(self, f):
        cached = self._cache.get(f)
        if cached is not None:
            return cached
        result = self._compute(f)
        self._cache[f] = result
        return result

    def holds(self, world, f):
        self.model.require(world)
        return world in self.extension(f)

    def _compute(self, f):
        m = self.model
        match f:
            case Letter(name):
                return frozenset(w for w in m.worlds if name in m.valuation[w])
            case Top():
                return self.universe
            case Bottom():
                return frozenset()
            case Not(operand):
                return self.universe - self.extension(operand)
            case And(left, right):
                return self.extension(left) & self.extension(right)
            case Or(left, right):
                return self.extension(left) | self.extension(right)
            case Implies(left, right):
                return (self.universe - self.extension(left)) | self.extension(right)
            case Iff(left, right):
                a, b = self.extension(left), self.extension(right)
                return self.universe - (a ^ b)
            case Box(operand):
                inner = self.extension(operand)
                # Every successor tuple must contain some operand-world.
                return frozenset(
                    w for w in m.worlds
                    if all(any(v in inner for v in vector) for vector in m.successors(w))
                )
            case Diamond(operand):
                inner = self.extension(operand)
                return frozenset(
                    w for w in m.worlds
                    if any(all(v in inner for v in vector) for vector in m.successors(w))
                )
        raise TypeError(f"not a formula: {f!r}")


def check(m, w, f):
    """Truth of ``f`` at world ``w``; letters outside the valuation are false."""
    return Evaluator(m).holds(w, f)


def extension(m, f):
    return Evaluator(m).extension(f)


def valid_on_model(m, f):
    return Evaluator(m).extension(f) == frozenset(m.worlds)


def aggregation_axiom():
    """C: box p & box q -> box (p & q); valid on every 1-model, refutable on 2-models."""
    p, q = Letter('p'), Letter('q')
    return Implies(And(Box(p), Box(q)), Box(And(p, q)))


def equivalent_up_to(left, w, right, v, alphabet, depth, size_budget):
    """First enumerated formula on which (left, w) and (right, v) disagree, else None."""
    left_eval, right_eval = Evaluator(left), Evaluator(right)
    left.require(w)
    right.require(v)
    for f in enumerate_formulas(alphabet, depth, size_budget):
        if (w in left_eval.extension(f)) != (v in right_eval.extension(f)):
            return f
    return None


@dataclass(frozen=True)
class SatResult:
    satisfiable: bool
    bound: int
    witness: PointedModel | None = None

    def to_dict(self):
        result = {
            'status': 'sat' if self.satisfiable else 'unsat-up-to-bound',
            'bound': self.bound,
        }
        if self.witness is not None:
            result['witness'] = self.witness.to_dict()
        return result


class _SearchSpace:
    """z3 encoding of all pointed models with ``size`` worlds, the point being w0."""

    def __init__(self, f, arity, size, alphabet):
        self.size = size
        self.arity = arity
        self.alphabet = alphabet
        indices = range(size)
        self.tuples = list(itertools.product(indices, repeat=arity + 1))
        self.relation = {t: z3.Bool('R_' + '_'.join(map(str, t))) for t in self.tuples}
        self.valuation = {(w, p): z3.Bool(f'V_{w}_{p}') for w in indices for p in alphabet}
        self.successors = {w: [t for t in self.tuples if t[0] == w] for w in indices}
        self.truth = {}
        for g in subformulas(f):
            self.truth[g] = [self._encode(g, w) for w in indices]
        self.goal = self.truth[f][0]

    def bits(self):
        return [self.relation[t] for t in self.tuples] + [
            self.valuation[(w, p)] for w in range(self.size) for p in self.alphabet
        ]

    def _encode(self, g, w):
        t = self.truth
        match g:
            case Letter(name):
                return self.valuation[(w, name)]
            case Top():
                return z3.BoolVal(True)
            case Bottom():
                return z3.BoolVal(False)
            case Not(operand):
                return z3.Not(t[operand][w])
            case And(left, right):
                return z3.And(t[left][w], t[right][w])
            case Or(left, right):
                return z3.Or(t[left][w], t[right][w])
            case Implies(left, right):
                return z3.Implies(t[left][w], t[right][w])
            case Iff(left, right):
                return t[left][w] == t[right][w]
            case Box(operand):
                return _all([
                    z3.Implies(self.relation[tup], z3.Or([t[operand][v] for v in tup[1:]]))
                    for tup in self.successors[w]
                ])
            case Diamond(operand):
                return _any([
                    z3.And(self.relation[tup], *[t[operand][v] for v in tup[1:]])
                    for tup in self.successors[w]
                ])
        raise TypeError(f"not a formula: {g!r}")

    def decode(self, model):
        names = [f'w{i}' for i in range(self.size)]
        relation = [
            tuple(names[i] for i in tup) for tup in self.tuples
            if z3.is_true(model.eval(self.relation[tup], model_completion=True))
        ]
        valuation = {
            names[w]: [p for p in self.alphabet
                       if z3.is_true(model.eval(self.valuation[(w, p)], model_completion=True))]
            for w in range(self.size)
        }
        return build(self.arity, names, relation, valuation)


def _all(items):
    return z3.And(items) if items else z3.BoolVal(True)


def _any(items):
    return z3.Or(items) if items else z3.BoolVal(False)


def _run(solver, budget):
    outcome = solver.check()
    if outcome == z3.unknown:
        raise BudgetExceededError("bounded model search", budget)
    return outcome == z3.sat


def bounded_sat(f, arity, max_worlds, budget=DEFAULT_SAT_BUDGET):
    """Search pointed models with at most ``max_worlds`` worlds for one satisfying f.

    Canonical order: fewer worlds first, the point is ``w0``, then the
    lexicographic order of the bit vector (relation tuples in lexicographic
    order, then valuation bits), 0 before 1. The first model in that order
    is returned; a timeout on the solver's resource budget raises
    BudgetExceededError.
    """
    if max_worlds < 1:
        raise WamlError("max_worlds must be at least 1")
    if arity < 1:
        raise WamlError("arity ≥ 1 required")
    alphabet = sorted(letters(f))

    for size in range(1, max_worlds + 1):
        space = _SearchSpace(f, arity, size, alphabet)
        solver = z3.Solver()
        solver.set('rlimit', budget)
        solver.add(space.goal)
        if not _run(solver, budget):
            logger.debug("no %d-world model for %s", size, f)
            continue

        # Fix bits one by one to their least value; the current model
        # already witnesses every bit it sets to false.
        current = solver.model()
        for bit in space.bits():
            if z3.is_false(current.eval(bit, model_completion=True)):
                solver.add(z3.Not(bit))
                continue
            solver.push()
            solver.add(z3.Not(bit))
            if _run(solver, budget):
                current = solver.model()
                solver.pop()
                solver.add(z3.Not(bit))
            else:
                solver.pop()
                solver.add(bit)
        if not _run(solver, budget):
            raise WamlError("lexicographic minimisation lost satisfiability")
        witness = space.decode(solver.model())
        if not check(witness, 'w0', f):
            raise WamlError("solver witness rejected by the model checker")
        logger.info("found %d-world witness for %s", size, f)
        return SatResult(True, max_worlds, PointedModel(witness, 'w0'))

    return SatResult(False, max_worlds)
