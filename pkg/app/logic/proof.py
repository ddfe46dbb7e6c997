# app/logic/proof.py
"""Hilbert-style proof checking for K_n.

Propositional reasoning works on an abstraction: every maximal boxed
subformula becomes an atom, letters stay atoms, and ``dia f`` is read as
``~box ~f``. Two boxed subformulas share an atom only when they are
syntactically identical.
"""
import itertools
import logging

from pydantic import ValidationError

from app.logic.errors import (
    BudgetExceededError, FormulaSyntaxError, ProofFormatError, SubstitutionError,
)
from app.logic.model import dumps
from app.logic.syntax import conjoin, disjoin, parse
from app.models.formula import (
    And, Bottom, Box, Diamond, Iff, Implies, Letter, Not, Or, Top,
)
from app.models.proof import InvalidLine, Justification, ProofLine, ProofScript
from app.schemas import ProofDocument
from app.utils.helpers import format_error_message

logger = logging.getLogger(__name__)

DEFAULT_MAX_ATOMS = 20
_SOURCE_COUNTS = {'Taut': (0,), 'KnAxiom': (0,), 'MP': (2,), 'Nec': (1,), 'RM': (1,), 'RE': (0, 1)}


def _collect_atoms(f, found):
    match f:
        case Letter() | Box():
            found.setdefault(f, None)
        case Diamond(operand):
            found.setdefault(Box(Not(operand)), None)
        case Not(operand):
            _collect_atoms(operand, found)
        case And(left, right) | Or(left, right) | Implies(left, right) | Iff(left, right):
            _collect_atoms(left, found)
            _collect_atoms(right, found)


def abstract(*formulas):
    """Propositional atoms of ``formulas`` in order of first occurrence."""
    found = {}
    for f in formulas:
        _collect_atoms(f, found)
    return tuple(found)


def _truth(f, valuation):
    match f:
        case Letter() | Box():
            return valuation[f]
        case Diamond(operand):
            return not valuation[Box(Not(operand))]
        case Top():
            return True
        case Bottom():
            return False
        case Not(operand):
            return not _truth(operand, valuation)
        case And(left, right):
            return _truth(left, valuation) and _truth(right, valuation)
        case Or(left, right):
            return _truth(left, valuation) or _truth(right, valuation)
        case Implies(left, right):
            return not _truth(left, valuation) or _truth(right, valuation)
        case Iff(left, right):
            return _truth(left, valuation) == _truth(right, valuation)
    raise TypeError(f"not a formula: {f!r}")


def tautological_consequence(premises, f, max_atoms=DEFAULT_MAX_ATOMS):
    """True when every row of the truth table satisfying ``premises`` satisfies ``f``."""
    premises = list(premises)
    atoms = abstract(*premises, f)
    if len(atoms) > max_atoms:
        raise BudgetExceededError('propositional atoms', max_atoms)
    for row in itertools.product((False, True), repeat=len(atoms)):
        valuation = dict(zip(atoms, row))
        if all(_truth(g, valuation) for g in premises) and not _truth(f, valuation):
            return False
    return True


def is_tautology(f, max_atoms=DEFAULT_MAX_ATOMS):
    return tautological_consequence((), f, max_atoms)


def identity_substitution(arity):
    return {f'p{i}': Letter(f'p{i}') for i in range(arity + 1)}


def kn_axiom(arity, substitution):
    """□p0 ∧ … ∧ □pn → □⋁_{i<j}(pi ∧ pj) with ``substitution`` applied."""
    expected = {f'p{i}' for i in range(arity + 1)}
    missing = sorted(expected - set(substitution))
    extra = sorted(set(substitution) - expected)
    if missing or extra:
        problems = []
        if missing:
            problems.append(f"missing {', '.join(missing)}")
        if extra:
            problems.append(f"unexpected {', '.join(extra)}")
        raise SubstitutionError(f"K{arity} substitution: {'; '.join(problems)}")

    args = [substitution[f'p{i}'] for i in range(arity + 1)]
    pairs = [And(args[i], args[j]) for i, j in itertools.combinations(range(arity + 1), 2)]
    return Implies(conjoin(Box(a) for a in args), Box(disjoin(pairs)))


def _check_line(script, number, line, max_atoms):
    just = line.just
    f = line.formula
    expected = _SOURCE_COUNTS.get(just.kind)
    if expected is not None and len(just.sources) not in expected:
        return f"{just.kind} cites {len(just.sources)} lines"
    for source in just.sources:
        if not 1 <= source < number:
            return f"cites line {source}, which is not an earlier line"
    cited = [script.line(source).formula for source in just.sources]

    match just.kind:
        case 'Taut':
            if not is_tautology(f, max_atoms):
                return "not a propositional tautology"
        case 'KnAxiom':
            try:
                instance = kn_axiom(script.arity, just.substitution)
            except SubstitutionError as e:
                return str(e)
            if f != instance:
                return f"not the K{script.arity} instance {instance}"
        case 'MP':
            minor, major = cited
            if major != Implies(minor, f):
                return f"line {just.sources[1]} is not line {just.sources[0]} -> this line"
        case 'Nec':
            if f != Box(cited[0]):
                return f"not box of line {just.sources[0]}"
        case 'RM':
            if not isinstance(cited[0], Implies):
                return f"line {just.sources[0]} is not an implication"
            if f != Implies(Box(cited[0].left), Box(cited[0].right)):
                return f"not box-monotone image of line {just.sources[0]}"
        case 'RE':
            if not (isinstance(f, Iff) and isinstance(f.left, Box) and isinstance(f.right, Box)):
                return "RE must conclude box a <-> box b"
            inner = Iff(f.left.operand, f.right.operand)
            if cited:
                if cited[0] != inner:
                    return f"line {just.sources[0]} is not {inner}"
            elif not is_tautology(inner, max_atoms):
                return f"{inner} is not a propositional tautology"
        case 'PLFrom':
            if not tautological_consequence(cited, f, max_atoms):
                return "not a tautological consequence of the cited lines"
    return None


def check_script(script, max_atoms=DEFAULT_MAX_ATOMS):
    """Validate ``script`` line by line; None when every line holds,
    otherwise the first invalid line."""
    for number, line in enumerate(script.lines, start=1):
        reason = _check_line(script, number, line, max_atoms)
        if reason is not None:
            logger.debug("proof line %d rejected: %s", number, reason)
            return InvalidLine(number, reason, str(line.formula))
        logger.debug("proof line %d ok (%s)", number, line.just)
    return None


def _parse_at(text, where):
    try:
        return parse(text)
    except FormulaSyntaxError as e:
        raise ProofFormatError("invalid proof script", [f"{where}: {e}"]) from None


def load_script(text):
    """Parse Proof-JSON into a ProofScript."""
    try:
        document = ProofDocument.model_validate_json(text)
    except ValidationError as e:
        details = [format_error_message(err) for err in e.errors()]
        raise ProofFormatError("invalid proof script", details) from None

    lines = []
    for index, entry in enumerate(document.lines):
        formula = _parse_at(entry.formula, f"lines.{index}.formula")
        kind = entry.just.kind
        if kind == 'KnAxiom':
            subst = {
                key: _parse_at(value, f"lines.{index}.just.subst.{key}")
                for key, value in entry.just.subst.items()
            }
            just = Justification.kn_axiom(subst)
        elif kind == 'Taut':
            just = Justification.taut()
        else:
            just = Justification(kind, entry.just.from_)
        lines.append(ProofLine(formula, just))
    return ProofScript(document.arity, lines)


def save_script(script):
    return dumps(script.to_dict())


def _script(arity, steps):
    return ProofScript(arity, [ProofLine(f, just) for f, just in steps])


def _collapse(arity, args, target):
    """K_n on ``args``, then RE and PL down to ``box args -> box target``."""
    subst = {f'p{i}': a for i, a in enumerate(args)}
    axiom = kn_axiom(arity, subst)
    return [
        (axiom, Justification.kn_axiom(subst)),
        (Iff(axiom.right, Box(target)), Justification.re()),
        (Implies(axiom.left, Box(target)), Justification.pl_from(1, 2)),
    ]


def _binary_script():
    p, q, r = Letter('p'), Letter('q'), Letter('r')
    phi = And(Box(Or(Not(p), Not(q))), Diamond(q))
    psi = And(Box(And(p, r)), Box(And(p, Not(r))))
    args = [Or(Not(p), Not(q)), And(p, r), And(p, Not(r))]
    target = And(p, Not(q))
    steps = _collapse(2, args, target)
    steps += [
        (Implies(And(phi, psi), And(Box(target), Diamond(q))), Justification.pl_from(3)),
        (Implies(target, Not(q)), Justification.taut()),
        (Implies(Box(target), Box(Not(q))), Justification.rm(5)),
        (Implies(And(phi, psi), And(Box(Not(q)), Diamond(q))), Justification.pl_from(4, 6)),
        (Implies(phi, Not(psi)), Justification.pl_from(7)),
    ]
    return _script(2, steps)


def _dia_top_script(arity, args, target, truth, phi, psi):
    """Refutation of ``phi & psi`` where both share ``dia truth`` and every
    pairwise conjunction of ``args`` is contradictory (collapsing to ``target``)."""
    steps = _collapse(arity, args, target)
    steps += [
        (Implies(target, Not(truth)), Justification.taut()),
        (Implies(Box(target), Box(Not(truth))), Justification.rm(4)),
        (Implies(And(phi, psi), And(Box(Not(truth)), Diamond(truth))), Justification.pl_from(3, 5)),
        (Implies(phi, Not(psi)), Justification.pl_from(6)),
    ]
    return _script(arity, steps)


def _ternary_script():
    p, q, r = Letter('p'), Letter('q'), Letter('r')
    excluded = Or(p, Not(p))
    args = [And(p, Not(q)), And(p, q), And(Not(p), r), And(Not(p), Not(r))]
    phi = conjoin([Box(args[0]), Box(args[1]), Diamond(excluded)])
    psi = conjoin([Box(args[2]), Box(args[3]), Diamond(excluded)])
    return _dia_top_script(3, args, And(p, Not(p)), excluded, phi, psi)


def generate_interp_refutation(n):
    """Derivation of phi_n -> ~psi_n in K_n for the interpolation counterexamples."""
    if n < 2:
        raise ValueError("n ≥ 2 required")
    if n == 2:
        return _binary_script()
    if n == 3:
        return _ternary_script()

    from app.logic.interp import box_arguments, interp_formulas
    phi, psi = interp_formulas(n)
    return _dia_top_script(n, box_arguments(n), Bottom(), Top(), phi, psi)
