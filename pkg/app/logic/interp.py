# app/logic/interp.py
"""Interpolation counterexamples for K_n (n ≥ 2) and their end-to-end verification."""
import logging
import os

from app.logic.bisim import check_bisim, distinguishing_formula, save_relation
from app.logic.errors import BudgetExceededError, WamlError
from app.logic.model import build, dumps, save
from app.logic.proof import check_script, generate_interp_refutation, save_script
from app.logic.semantics import (
    DEFAULT_SAT_BUDGET, bounded_sat, check, equivalent_up_to, valid_on_model,
)
from app.logic.syntax import conjoin, enumerate_formulas, letters, parse
from app.models.bundle import ConditionResult, CounterexampleBundle, InterpolationReport
from app.models.formula import And, Box, Diamond, Implies, Letter, Not, Top
from app.models.nmodel import PointedModel
from app.models.relation import PairRelation
from app.utils.helpers import write_bytes

logger = logging.getLogger(__name__)

DEFAULT_SWEEP_DEPTH = 2
DEFAULT_SWEEP_SIZE = 6


def rho_width(n):
    """Least m with 2^m ≥ n - 1."""
    m = 0
    while 2 ** m < n - 1:
        m += 1
    return m


def rho(i, m):
    """Conjunction of r-literals encoding the bits of i - 1 (bit b set gives r{b+1})."""
    literals = []
    for b in range(m):
        r = Letter(f'r{b + 1}')
        literals.append(r if (i - 1) >> b & 1 else Not(r))
    return conjoin(literals)


def rho_letters(i, m):
    return frozenset(f'r{b + 1}' for b in range(m) if (i - 1) >> b & 1)


def box_arguments(n):
    """The n + 1 arguments whose boxes phi_n & psi_n assert."""
    p, q = Letter('p'), Letter('q')
    m = rho_width(n)
    return [And(p, Not(q)), And(p, q)] + [And(Not(p), rho(i, m)) for i in range(1, n)]


def interp_formulas(n):
    """(phi_n, psi_n) of the general construction."""
    args = box_arguments(n)
    phi = conjoin([Box(args[0]), Box(args[1]), Diamond(Top())])
    psi = conjoin([Box(a) for a in args[2:]] + [Diamond(Top())])
    return phi, psi


def common_letters(phi, psi):
    return letters(phi) & letters(psi)


def _binary():
    m = build(2, ['w', 'w1', 'w2', 'w3', 'w4'],
              [('w', 'w1', 'w2'), ('w', 'w3', 'w4')],
              {'w1': ['p'], 'w2': ['p'], 'w3': ['p', 'q'], 'w4': ['q']})
    n = build(2, ['v', 'v1', 'v2'], [('v', 'v1', 'v2')],
              {'v1': ['p'], 'v2': ['p', 'r']})
    phi = parse('box (~p | ~q) & dia q')
    psi = parse('box (p & r) & box (p & ~r)')
    pairs = [('w', 'v'), ('w1', 'v1'), ('w2', 'v2'), ('w3', 'v1'), ('w3', 'v2')]
    return m, n, phi, psi, pairs


def _ternary():
    m = build(3, ['w', 'w1', 'w2', 'w3'], [('w', 'w1', 'w2', 'w3')],
              {'w1': ['p'], 'w2': ['p', 'q'], 'w3': ['q']})
    n = build(3, ['v', 'v1', 'v2', 'v3'], [('v', 'v1', 'v2', 'v3')],
              {'v1': ['r'], 'v3': ['p', 'r']})
    phi = parse('box (p & ~q) & box (p & q) & dia (p | ~p)')
    psi = parse('box (~p & r) & box (~p & ~r) & dia (p | ~p)')
    pairs = [('w', 'v'), ('w1', 'v3'), ('w2', 'v3'), ('w3', 'v1'), ('w3', 'v2')]
    return m, n, phi, psi, pairs


def _general(n):
    width = rho_width(n)
    left_worlds = ['w'] + [f'w{i}' for i in range(1, n + 1)]
    right_worlds = ['v'] + [f'v{i}' for i in range(1, n + 1)]
    m = build(n, left_worlds, [tuple(left_worlds)], {'w1': ['p'], 'w2': ['p', 'q']})
    valuation = {'v1': ['p']}
    for i in range(1, n):
        valuation[f'v{i + 1}'] = sorted(rho_letters(i, width))
    right = build(n, right_worlds, [tuple(right_worlds)], valuation)
    phi, psi = interp_formulas(n)
    pairs = [('w', 'v'), ('w1', 'v1'), ('w2', 'v1')]
    pairs += [(a, b) for a in left_worlds[3:] for b in right_worlds[2:]]
    return m, right, phi, psi, pairs


def build_counterexample(n):
    """Pointed models, formulas, bisimulation and refutation witnessing that K_n lacks interpolation."""
    if n < 2:
        raise WamlError("n ≥ 2 required")
    if n == 2:
        m, right, phi, psi, pairs = _binary()
    elif n == 3:
        m, right, phi, psi, pairs = _ternary()
    else:
        m, right, phi, psi, pairs = _general(n)
    z = PairRelation(m, right, frozenset(pairs), common_letters(phi, psi))
    return CounterexampleBundle(
        n=n,
        model_m=PointedModel(m, 'w'),
        model_n=PointedModel(right, 'v'),
        phi=phi,
        psi=psi,
        z=z,
        refutation=generate_interp_refutation(n),
    )


def _truth_condition(bundle):
    m, w = bundle.model_m.model, bundle.model_m.point
    n, v = bundle.model_n.model, bundle.model_n.point
    left = check(m, w, bundle.phi)
    right = check(n, v, bundle.psi)
    failures = []
    if not left:
        failures.append(f'M, {w} does not satisfy {bundle.phi}')
    if not right:
        failures.append(f'N, {v} does not satisfy {bundle.psi}')
    return ConditionResult('truth at the points', left and right, '; '.join(failures),
                           {'phi_at_w': left, 'psi_at_v': right})


def _derivability_condition(bundle, sat_bound, sat_budget):
    script = bundle.refutation
    goal = Implies(bundle.phi, Not(bundle.psi))
    evidence = {'script_lines': len(script.lines)}
    if script.arity != bundle.n:
        return ConditionResult('K_n derives phi -> ~psi', False,
                               f'refutation is a K{script.arity} script', evidence)
    if script.theorem != goal:
        return ConditionResult('K_n derives phi -> ~psi', False,
                               f'refutation ends with {script.theorem}, expected {goal}', evidence)
    invalid = check_script(script)
    if invalid is not None:
        evidence['invalid_line'] = invalid.to_dict()
        return ConditionResult('K_n derives phi -> ~psi', False, str(invalid), evidence)

    # Bounded search only corroborates; the checked script decides.
    try:
        result = bounded_sat(And(bundle.phi, bundle.psi), bundle.n, sat_bound, budget=sat_budget)
    except BudgetExceededError as e:
        evidence['bounded_sat'] = {'status': 'inconclusive', 'bound': sat_bound, 'reason': str(e)}
        return ConditionResult('K_n derives phi -> ~psi', True, 'bounded search inconclusive', evidence)
    evidence['bounded_sat'] = result.to_dict()
    if result.satisfiable:
        return ConditionResult('K_n derives phi -> ~psi', False,
                               'phi & psi has a model, contradicting soundness', evidence)
    return ConditionResult('K_n derives phi -> ~psi', True, '', evidence)


def _indistinguishability_condition(bundle, sweep_depth, sweep_size):
    m, w = bundle.model_m.model, bundle.model_m.point
    n, v = bundle.model_n.model, bundle.model_n.point
    common = common_letters(bundle.phi, bundle.psi)
    name = 'common-letter indistinguishability'
    evidence = {'alphabet': sorted(common)}

    def failed(detail):
        witness = distinguishing_formula(m, w, n, v, common)
        if witness is not None:
            evidence['distinguishing_formula'] = str(witness)
        return ConditionResult(name, False, detail, evidence)

    if frozenset(bundle.z.alphabet) != common:
        return failed(f"relation alphabet {sorted(bundle.z.alphabet)} differs from {sorted(common)}")
    if (w, v) not in bundle.z:
        return failed(f'({w}, {v}) is not in the relation')
    counterexample = check_bisim(bundle.z)
    if counterexample is not None:
        evidence['counterexample'] = counterexample.to_dict()
        return failed(str(counterexample))
    disagreement = equivalent_up_to(m, w, n, v, common, sweep_depth, sweep_size)
    evidence['sweep'] = {'depth': sweep_depth, 'size': sweep_size}
    if disagreement is not None:
        evidence['sweep']['disagreement'] = str(disagreement)
        return failed(f'the points disagree on {disagreement}')
    return ConditionResult(name, True, '', evidence)


def verify_lemma1(bundle, sat_bound, sweep_depth=DEFAULT_SWEEP_DEPTH, sweep_size=DEFAULT_SWEEP_SIZE,
                  sat_budget=DEFAULT_SAT_BUDGET):
    """Check the three conditions that make ``bundle`` an interpolation counterexample."""
    conditions = (
        _truth_condition(bundle),
        _derivability_condition(bundle, sat_bound, sat_budget),
        _indistinguishability_condition(bundle, sweep_depth, sweep_size),
    )
    notes = ('the argument uses only soundness of K_n',)
    report = InterpolationReport(bundle.n, conditions, notes)
    logger.info("K%d counterexample: %s", bundle.n, 'pass' if report.passed else 'fail')
    return report


def axiom4_failures(bundle, depth=1, size_budget=4):
    """Check box f -> box box f on both models for every small f over their letters.

    Returns a mapping side -> first failing instance (None when all hold).
    """
    results = {}
    for side, pointed in (('M', bundle.model_m), ('N', bundle.model_n)):
        model = pointed.model
        alphabet = frozenset().union(*model.valuation.values())
        failure = None
        for f in enumerate_formulas(alphabet, depth, size_budget):
            instance = Implies(Box(f), Box(Box(f)))
            if not valid_on_model(model, instance):
                failure = str(instance)
                break
        results[side] = failure
    return results


def save_bundle(bundle, directory):
    """Write models, relation, refutation and formulas of ``bundle`` as JSON files."""
    os.makedirs(directory, exist_ok=True)
    files = {
        'M.json': save(bundle.model_m.model),
        'N.json': save(bundle.model_n.model),
        'Z.json': save_relation(bundle.z),
        'proof.json': save_script(bundle.refutation),
        'formulas.json': dumps({
            'n': bundle.n,
            'phi': str(bundle.phi),
            'psi': str(bundle.psi),
            'points': {'M': bundle.model_m.point, 'N': bundle.model_n.point},
        }),
    }
    paths = []
    for name, data in files.items():
        path = os.path.join(directory, name)
        write_bytes(path, data)
        paths.append(path)
    return paths
