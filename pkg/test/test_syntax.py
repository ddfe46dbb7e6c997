import pytest
from hypothesis import given, settings

from app.logic.errors import BudgetExceededError, FormulaSyntaxError
from app.logic.syntax import (
    MAX_NESTING, conjoin, disjoin, enumerate_formulas, letters, modal_depth, nesting_depth, parse, render,
    simplify, size, subformulas, substitute,
)
from app.models.formula import And, Bottom, Box, Diamond, Iff, Implies, Letter, Not, Or, Top
from strategies import formulas

p, q, r = Letter('p'), Letter('q'), Letter('r')


def test_parse_k2_phi():
    """The left formula of the two-arity counterexample parses with box binding tightest"""
    assert parse('box (~p | ~q) & dia q') == And(Box(Or(Not(p), Not(q))), Diamond(q))


def test_parse_atom():
    assert parse('p') == p


def test_implication_is_right_associative():
    assert parse('p -> q -> r') == Implies(p, Implies(q, r))


def test_iff_is_right_associative_and_weakest():
    assert parse('p <-> q <-> r') == Iff(p, Iff(q, r))
    assert parse('p -> q <-> r') == Iff(Implies(p, q), r)


def test_precedence_chain():
    """~ binds tighter than &, & tighter than |, | tighter than ->"""
    assert parse('~p & q | r -> p') == Implies(Or(And(Not(p), q), r), p)


def test_constants_and_whitespace():
    assert parse('  box  true &dia false ') == And(Box(Top()), Diamond(Bottom()))


def test_conjunction_is_left_associative():
    assert parse('p & q & r') == And(And(p, q), r)


def test_syntax_error_reports_position():
    with pytest.raises(FormulaSyntaxError) as excinfo:
        parse('p & & q')
    assert excinfo.value.position == 4


def test_syntax_error_on_truncated_input():
    with pytest.raises(FormulaSyntaxError):
        parse('box (p')


def test_reserved_words_are_not_letters():
    with pytest.raises(FormulaSyntaxError):
        parse('box')


def test_alphabet_restriction():
    assert parse('p & q', alphabet={'p', 'q'}) == And(p, q)
    with pytest.raises(FormulaSyntaxError) as excinfo:
        parse('p & r', alphabet={'p'})
    assert excinfo.value.position == 4


def test_nesting_depth():
    assert nesting_depth(p) == 0
    assert nesting_depth(And(Box(p), q)) == 2
    assert nesting_depth(parse('((((p))))')) == 0


def test_deep_nesting_is_a_reported_limit():
    """Formulas nested past the limit are rejected before any recursive walk"""
    with pytest.raises(BudgetExceededError) as excinfo:
        parse('~' * 3000 + 'p')
    assert excinfo.value.budget == MAX_NESTING
    with pytest.raises(BudgetExceededError):
        parse(' & '.join(['p'] * 1000))


def test_nesting_up_to_the_limit_is_accepted():
    f = parse('~' * MAX_NESTING + 'p')
    assert nesting_depth(f) == MAX_NESTING
    assert parse(render(f)) == f
    assert parse('(' * 500 + 'p' + ')' * 500) == p
    assert parse('box ' * 3 + 'p', max_nesting=3) == Box(Box(Box(p)))


def test_render_uses_minimal_parentheses():
    assert render(And(Box(Or(Not(p), Not(q))), Diamond(q))) == 'box (~p | ~q) & dia q'
    assert render(Implies(Implies(p, q), r)) == '(p -> q) -> r'
    assert render(Implies(p, Implies(q, r))) == 'p -> q -> r'
    assert render(And(p, And(q, r))) == 'p & (q & r)'
    assert render(Not(Not(p))) == '~~p'


@settings(max_examples=1000)
@given(formulas(('p', 'q', 'r'), max_leaves=10))
def test_print_then_parse_is_identity(f):
    assert parse(render(f)) == f


@given(formulas())
def test_str_matches_render(f):
    assert str(f) == render(f)


def test_metrics():
    f = parse('box (p & dia q) | ~r')
    assert modal_depth(f) == 2
    assert letters(f) == frozenset({'p', 'q', 'r'})
    assert size(f) == 8


def test_subformulas_lists_children_first():
    f = parse('box (p & q)')
    assert subformulas(f) == [p, q, And(p, q), f]


def test_conjoin_and_disjoin_fold_left():
    assert conjoin([p, q, r]) == And(And(p, q), r)
    assert disjoin([p, q, r]) == Or(Or(p, q), r)
    assert conjoin([]) == Top()
    assert disjoin([]) == Bottom()


def test_substitute_replaces_letters_everywhere():
    f = parse('box p0 & dia p1')
    assert substitute(f, {'p0': q, 'p1': And(p, r)}) == parse('box q & dia (p & r)')


def test_simplify_flattens_and_drops_neutral_elements():
    assert simplify(parse('(p & true) & (p & ~~q)')) == And(p, q)
    assert simplify(parse('p | false | p')) == p
    assert simplify(parse('p & false')) == Bottom()
    assert simplify(parse('q | true')) == Top()


def test_enumeration_count_for_one_letter_depth_one():
    assert len(list(enumerate_formulas({'p'}, 1, 4))) == 36


def test_enumeration_order_and_bounds():
    found = list(enumerate_formulas({'p', 'q'}, 2, 5))
    assert found[:3] == [p, q, Top()]
    keys = [(size(f), render(f)) for f in found]
    assert keys == sorted(keys)
    assert len(set(found)) == len(found)
    assert all(modal_depth(f) <= 2 and size(f) <= 5 for f in found)
    assert not any(isinstance(f, Not) and isinstance(f.operand, Not) for f in found)
