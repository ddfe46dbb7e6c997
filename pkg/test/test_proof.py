import random

import pytest
from hypothesis import given, settings, strategies as st

from app.logic.errors import BudgetExceededError, ProofFormatError, SubstitutionError
from app.logic.model import random_model
from app.logic.proof import (
    abstract, check_script, generate_interp_refutation, identity_substitution, is_tautology,
    kn_axiom, load_script, save_script, tautological_consequence,
)
from app.logic.semantics import aggregation_axiom, bounded_sat, valid_on_model
from app.logic.syntax import parse
from app.models.formula import And, Implies, Letter, Not
from app.models.proof import Justification, ProofLine, ProofScript
from app.utils.helpers import read_bytes
from conftest import fixture_path
from strategies import shallow_formulas

PHI2 = parse('box (~p | ~q) & dia q')
PSI2 = parse('box (p & r) & box (p & ~r)')


def script_of(arity, *steps):
    return ProofScript(arity, [ProofLine(parse(text), just) for text, just in steps])


@pytest.mark.parametrize('name, n', [('proof2.json', 2), ('proof3.json', 3)])
def test_fixture_scripts_check(name, n):
    """The shipped derivations validate and match the generated ones"""
    script = load_script(read_bytes(fixture_path(name)))
    assert check_script(script) is None
    assert script == generate_interp_refutation(n)
    assert save_script(script) == read_bytes(fixture_path(name))


def test_k2_refutation_theorem():
    script = generate_interp_refutation(2)
    assert script.theorem == Implies(PHI2, Not(PSI2))
    assert len(script.lines) == 8


@pytest.mark.parametrize('n', [4, 5, 6])
def test_generated_scripts_check(n):
    script = generate_interp_refutation(n)
    assert script.arity == n
    assert check_script(script) is None


def test_generated_script_for_five_is_corroborated_by_search():
    from app.logic.interp import interp_formulas
    phi, psi = interp_formulas(5)
    assert not bounded_sat(And(phi, psi), 5, 2).satisfiable


def test_kn_axiom_arity_one_is_aggregation():
    axiom = kn_axiom(1, identity_substitution(1))
    assert axiom == parse('box p0 & box p1 -> box (p0 & p1)')
    assert is_tautology(Implies(axiom, axiom))


def test_kn_axiom_arity_two():
    assert kn_axiom(2, identity_substitution(2)) == \
        parse('box p0 & box p1 & box p2 -> box (p0 & p1 | p0 & p2 | p1 & p2)')


def test_kn_axiom_k3_instance():
    subst = {key: parse(text) for key, text in
             {'p0': 'p & ~q', 'p1': 'p & q', 'p2': '~p & r', 'p3': '~p & ~r'}.items()}
    assert kn_axiom(3, subst) == generate_interp_refutation(3).lines[0].formula


def test_kn_axiom_needs_complete_substitution():
    with pytest.raises(SubstitutionError):
        kn_axiom(2, {'p0': Letter('p'), 'p1': Letter('q')})
    with pytest.raises(SubstitutionError):
        kn_axiom(1, {'p0': Letter('p'), 'p1': Letter('q'), 'p5': Letter('r')})


def test_single_tautology_line():
    assert check_script(script_of(1, ('p -> p', Justification.taut()))) is None


def test_aggregation_is_not_propositional():
    """box p, box q do not give box (p & q): the boxes abstract to distinct atoms"""
    script = script_of(
        2,
        ('box p', Justification.taut()),
    )
    assert check_script(script).line == 1
    assert not tautological_consequence([parse('box p'), parse('box q')], parse('box (p & q)'))


def test_plfrom_rejects_aggregation_step():
    script = ProofScript(2, [
        ProofLine(parse('box p -> box p'), Justification.taut()),
        ProofLine(parse('box q -> box q'), Justification.taut()),
        ProofLine(parse('box p & box q -> box (p & q)'), Justification.pl_from(1, 2)),
    ])
    report = check_script(script)
    assert report.line == 3
    assert 'tautological consequence' in report.reason


def test_modus_ponens_and_necessitation():
    script = script_of(
        1,
        ('p -> p', Justification.taut()),
        ('(p -> p) -> (q -> q)', Justification.taut()),
        ('q -> q', Justification.mp(1, 2)),
        ('box (q -> q)', Justification.nec(3)),
    )
    assert check_script(script) is None


def test_rm_and_re():
    script = script_of(
        1,
        ('p & q -> p', Justification.taut()),
        ('box (p & q) -> box p', Justification.rm(1)),
        ('box (p & q) <-> box (q & p)', Justification.re()),
        ('p <-> ~~p', Justification.taut()),
        ('box p <-> box ~~p', Justification.re(4)),
    )
    assert check_script(script) is None


def test_rm_shape_is_checked():
    script = script_of(
        1,
        ('p & q -> p', Justification.taut()),
        ('box p -> box (p & q)', Justification.rm(1)),
    )
    assert check_script(script).line == 2


def test_forward_reference_is_rejected():
    script = script_of(1, ('p -> p', Justification.pl_from(1)))
    report = check_script(script)
    assert report.line == 1
    assert 'not an earlier line' in report.reason


def test_wrong_source_count_is_rejected():
    script = ProofScript(1, [
        ProofLine(parse('p -> p'), Justification.taut()),
        ProofLine(parse('p -> p'), Justification('MP', (1,))),
    ])
    assert check_script(script).line == 2


def test_wrong_kn_instance_is_rejected():
    wrong = kn_axiom(1, identity_substitution(1))
    script = ProofScript(2, [ProofLine(wrong, Justification.kn_axiom(identity_substitution(1)))])
    report = check_script(script)
    assert report.line == 1
    assert 'K2' in report.reason


def test_abstraction_reads_dia_as_negated_box():
    assert abstract(parse('dia q & box ~q')) == (parse('box ~q'),)
    assert is_tautology(parse('dia q <-> ~box ~q'))
    assert not is_tautology(parse('box q <-> box ~~q'))


def test_atom_budget():
    wide = parse(' & '.join(f'a{i}' for i in range(21)) + ' -> a0')
    with pytest.raises(BudgetExceededError):
        is_tautology(wide)
    assert is_tautology(parse('a0 & a1 -> a0'), max_atoms=2)


def test_load_script_errors():
    with pytest.raises(ProofFormatError):
        load_script('{"arity": 1, "lines": []}')
    with pytest.raises(ProofFormatError) as excinfo:
        load_script('{"arity": 1, "lines": [{"formula": "p &", "just": {"kind": "Taut"}}]}')
    assert excinfo.value.details[0].startswith('lines.0.formula')
    with pytest.raises(ProofFormatError):
        load_script('{"arity": 1, "lines": [{"formula": "p", "just": {"kind": "Magic"}}]}')


def test_justification_json_shape():
    assert Justification.pl_from(1, 2).to_dict() == {'kind': 'PLFrom', 'from': [1, 2]}
    assert Justification.re().to_dict() == {'kind': 'RE'}
    assert Justification.kn_axiom({'p0': Letter('p')}).to_dict() == {'kind': 'KnAxiom', 'subst': {'p0': 'p'}}


@settings(max_examples=500)
@given(st.integers(min_value=1, max_value=4), st.data())
def test_kn_instances_are_sound(arity, data):
    """500 random K_n instances, each valid on its own random n-model"""
    subst = {f'p{i}': data.draw(shallow_formulas(('p', 'q'))) for i in range(arity + 1)}
    axiom = kn_axiom(arity, subst)
    worlds = data.draw(st.integers(min_value=1, max_value=5))
    density = data.draw(st.sampled_from([0.1, 0.25, 0.4]))
    seed = data.draw(st.integers(min_value=0, max_value=10_000))
    m = random_model(arity, worlds, density, {'p', 'q'}, seed)
    assert valid_on_model(m, axiom), (str(axiom), m)


@pytest.mark.parametrize('n', [2, 3, 4])
def test_accepted_scripts_are_sound(n):
    script = generate_interp_refutation(n)
    rng = random.Random(n)
    for _ in range(20):
        m = random_model(n, 1 + rng.randrange(3), 0.2, {'p', 'q', 'r', 'r1', 'r2'}, rng.randrange(10_000))
        for line in script.lines:
            assert valid_on_model(m, line.formula), str(line.formula)


def test_aggregation_shape_fails_on_two_models():
    result = bounded_sat(Not(aggregation_axiom()), 2, 3)
    assert result.satisfiable
    assert valid_on_model(random_model(1, 3, 0.5, {'p', 'q'}, 1), aggregation_axiom())
