import itertools
import math

import pytest

from app.logic.bisim import (
    bisimilar, check_bisim, distance, distinguishing_formula, greatest_bisim, k_bisim,
    load_relation, refinement_stages, save_relation,
)
from app.logic.errors import ArityMismatchError, ModelLoadError, UnknownWorldError
from app.logic.model import build, random_model
from app.logic.semantics import Evaluator, check
from app.logic.syntax import enumerate_formulas, letters, modal_depth, parse
from app.models.relation import PairRelation
from app.utils.helpers import read_bytes
from conftest import fixture_path


def random_pair(seed, arity=2, max_worlds=5):
    left = random_model(arity, 1 + seed % max_worlds, 0.15, {'p', 'q'}, 2 * seed)
    right = random_model(arity, 1 + (seed // max_worlds) % max_worlds, 0.15, {'p', 'q'}, 2 * seed + 1)
    return left, right


@pytest.mark.parametrize('relation, left, right', [
    ('ex1_z.json', 'ex1_left.json', 'ex1_right.json'),
    ('z2.json', 'm2.json', 'n2.json'),
    ('z3.json', 'm3.json', 'n3.json'),
    ('z4.json', 'm4.json', 'n4.json'),
])
def test_exhibited_relations_are_bisimulations(relation_fixture, relation, left, right):
    """Every relation shipped with the fixtures passes the bisimulation check"""
    z = relation_fixture(relation, left, right)
    assert z.alphabet == frozenset({'p'})
    assert check_bisim(z) is None
    assert check_bisim(z.inverse()) is None
    assert greatest_bisim(z.left, z.right, z.alphabet).issuperset(z)


def test_missing_pair_breaks_forth(relation_fixture):
    z = relation_fixture('z2.json', 'm2.json', 'n2.json')
    counterexample = check_bisim(z.with_pairs(z.pairs - {('w3', 'v1')}))
    assert counterexample.condition == 'forth'
    assert counterexample.subject == ('w', 'v')
    assert counterexample.witness == ('w', 'w3', 'w4')


def test_label_mismatch_breaks_inv(relation_fixture):
    z = relation_fixture('z2.json', 'm2.json', 'n2.json')
    counterexample = check_bisim(z.with_pairs(z.pairs | {('w4', 'v1')}))
    assert counterexample.condition == 'inv'
    assert counterexample.subject == ('w4', 'v1')


def test_missing_pair_breaks_back(relation_fixture):
    z = relation_fixture('z2.json', 'm2.json', 'n2.json')
    counterexample = check_bisim(z.with_pairs(z.pairs - {('w1', 'v1'), ('w3', 'v1')}))
    assert counterexample.condition in ('forth', 'back')


def test_empty_relation_is_rejected(model_fixture):
    z = PairRelation(model_fixture('m2.json'), model_fixture('n2.json'), frozenset(), {'p'})
    assert check_bisim(z).condition == 'nonempty'


def test_arity_mismatch(model_fixture):
    z = PairRelation(model_fixture('m2.json'), model_fixture('m3.json'), {('w', 'w')}, {'p'})
    with pytest.raises(ArityMismatchError):
        check_bisim(z)


def test_relation_loading_checks_worlds(model_fixture):
    with pytest.raises(UnknownWorldError):
        load_relation('{"pairs": [["w", "nosuch"]]}', model_fixture('m2.json'), model_fixture('n2.json'))
    with pytest.raises(ModelLoadError):
        load_relation('{"pairs": [["w"]]}', model_fixture('m2.json'), model_fixture('n2.json'))


def test_relation_save_is_canonical(relation_fixture):
    z = relation_fixture('z2.json', 'm2.json', 'n2.json')
    assert save_relation(z) == read_bytes(fixture_path('z2.json'))


def test_fixture_roots_are_bisimilar(model_fixture):
    assert bisimilar(model_fixture('ex1_left.json'), 'w', model_fixture('ex1_right.json'), 'v', {'p'})


def test_refinement_stages_decrease(model_fixture):
    m, n = model_fixture('m2.json'), model_fixture('n2.json')
    refinement = refinement_stages(m, n, {'p', 'q'})
    for earlier, later in zip(refinement.stages, refinement.stages[1:]):
        assert later < earlier
    assert ('w', 'v') not in refinement.greatest
    stage, condition, _ = refinement.deleted[('w', 'v')]
    assert stage >= 1 and condition in ('forth', 'back')
    assert refinement.deleted[('w3', 'v1')][1] == 'inv'


def test_k_bisim_zero_is_label_agreement(model_fixture):
    m, n = model_fixture('m3.json'), model_fixture('n3.json')
    zero = k_bisim(m, n, {'p'}, 0)
    expected = {(a, b) for a in m.worlds for b in n.worlds if ('p' in m.label(a)) == ('p' in n.label(b))}
    assert zero.pairs == frozenset(expected)


def test_distinguishing_formula_on_fixtures(model_fixture):
    m, n = model_fixture('m2.json'), model_fixture('n2.json')
    assert distinguishing_formula(m, 'w', n, 'v', {'p'}) is None
    f = distinguishing_formula(m, 'w', n, 'v', {'p', 'q'})
    assert letters(f) <= {'p', 'q'}
    assert check(m, 'w', f) and not check(n, 'v', f)


def test_bisimulation_invariance_suite():
    """Pairs in the greatest bisimulation agree on every small formula"""
    corpus = list(enumerate_formulas({'p', 'q'}, 2, 7))
    for seed in range(100):
        left, right = random_pair(seed)
        z = greatest_bisim(left, right, {'p', 'q'})
        if not z:
            continue
        left_eval, right_eval = Evaluator(left), Evaluator(right)
        for f in corpus:
            a, b = left_eval.extension(f), right_eval.extension(f)
            for x, y in z.pairs:
                assert (x in a) == (y in b), (seed, x, y, str(f))


def test_hennessy_milner_suite():
    """Every non-bisimilar root pair yields a verified distinguishing formula"""
    extracted = 0
    for seed in range(100):
        left, right = random_pair(seed)
        refinement = refinement_stages(left, right, {'p', 'q'})
        if ('w0', 'w0') in refinement.greatest:
            continue
        f = distinguishing_formula(left, 'w0', right, 'w0', {'p', 'q'})
        assert check(left, 'w0', f) and not check(right, 'w0', f)
        assert modal_depth(f) <= refinement.deleted[('w0', 'w0')][0]
        extracted += 1
    assert extracted > 0


def test_distance_on_unraveling_fixture(model_fixture):
    m = model_fixture('ex2.json')
    assert distance(m, 'w', 'w') == 0
    assert distance(m, 'w', 'u') == 1
    assert distance(m, 'w', 'v') == 2
    assert distance(build(1, ['a', 'b'], [], {}), 'a', 'b') == math.inf


def test_triangle_inequality():
    for seed in range(100):
        m = random_model(2, 1 + seed % 5, 0.1, set(), seed)
        for x, y, z in itertools.product(m.worlds, repeat=3):
            assert distance(m, x, z) + distance(m, z, y) >= distance(m, x, y)


def test_self_bisimilarity_is_an_equivalence():
    """The greatest bisimulation of a model with itself is reflexive, symmetric and transitive"""
    for seed in range(60):
        m = random_model(2, 1 + seed % 5, 0.15, {'p', 'q'}, seed)
        z = greatest_bisim(m, m, {'p', 'q'}).pairs
        assert all((w, w) in z for w in m.worlds)
        assert z == frozenset((b, a) for a, b in z)
        assert all((a, c) in z for a, b in z for b2, c in z if b == b2)


def test_greatest_bisimulation_passes_the_check():
    for seed in range(100):
        left, right = random_pair(seed)
        z = greatest_bisim(left, right, {'p', 'q'})
        if z:
            assert check_bisim(z) is None, (seed, z.to_dict())


def test_k_bisim_stabilizes_at_the_greatest_bisimulation():
    for seed in range(60):
        left, right = random_pair(seed)
        k = len(left.worlds) * len(right.worlds)
        greatest = greatest_bisim(left, right, {'p', 'q'}).pairs
        assert k_bisim(left, right, {'p', 'q'}, k).pairs == greatest
        assert k_bisim(left, right, {'p', 'q'}, k + 3).pairs == greatest


def test_single_world_models_are_bisimilar():
    left = build(2, ['a'], [], {'a': ['p']})
    right = build(2, ['b'], [], {'b': ['p']})
    z = greatest_bisim(left, right, {'p'})
    assert z.pairs == frozenset({('a', 'b')})
    assert check_bisim(z) is None
    assert distinguishing_formula(left, 'a', right, 'b', {'p'}) is None


def test_dia_separates_a_tuple_of_p_worlds_from_no_tuples():
    """Roots agree on p; only the left root has a successor tuple, made of p-worlds"""
    left = build(2, ['a', 'b'], [('a', 'b', 'b')], {'b': ['p']})
    right = build(2, ['c'], [], {})
    assert check(left, 'a', parse('dia p'))
    assert not check(right, 'c', parse('dia p'))
    assert ('a', 'c') in k_bisim(left, right, {'p'}, 0)
    assert not bisimilar(left, 'a', right, 'c', {'p'})

    f = distinguishing_formula(left, 'a', right, 'c', {'p'})
    assert f is not None
    assert check(left, 'a', f) and not check(right, 'c', f)
    assert modal_depth(f) == 1
