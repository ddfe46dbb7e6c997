# app/cli/bisim.py
import logging

import click
from flask import Blueprint

from app.cli.output import emit, read_input, verdict, waml_command
from app.logic.bisim import (
    check_bisim, distinguishing_formula, greatest_bisim, k_bisim, load_relation,
)
from app.logic.model import load
from app.utils.helpers import parse_letters

logger = logging.getLogger(__name__)
bisim_bp = Blueprint('bisim', __name__)

letters_option = click.option('--letters', default='', help='Comma-separated alphabet, e.g. p,q.')


@bisim_bp.cli.command('check')
@click.argument('left_path', metavar='LEFT')
@click.argument('right_path', metavar='RIGHT')
@click.argument('relation_path', metavar='RELATION')
@click.option('--letters', default=None, help='Alphabet; defaults to the relation document\'s.')
@waml_command
def check(left_path, right_path, relation_path, letters):
    """Is RELATION a wa^n-bisimulation between LEFT and RIGHT?"""
    left = load(read_input(left_path))
    right = load(read_input(right_path))
    z = load_relation(read_input(relation_path), left, right, parse_letters(letters))
    counterexample = check_bisim(z)
    if counterexample is None:
        emit({'command': 'bisim check', 'bisimulation': True, 'alphabet': sorted(z.alphabet)},
             'bisimulation', verdict(True))
    emit({'command': 'bisim check', 'bisimulation': False, 'counterexample': counterexample.to_dict()},
         [f'not a bisimulation: {counterexample}'], verdict(False))


@bisim_bp.cli.command('max')
@click.argument('left_path', metavar='LEFT')
@click.argument('right_path', metavar='RIGHT')
@letters_option
@click.option('--k', type=click.IntRange(min=0), default=None, help='Stop at the k-th refinement stage.')
@waml_command
def maximum(left_path, right_path, letters, k):
    """Greatest wa^n-bisimulation (or k-bisimilarity) between LEFT and RIGHT."""
    left = load(read_input(left_path))
    right = load(read_input(right_path))
    alphabet = parse_letters(letters)
    z = greatest_bisim(left, right, alphabet) if k is None else k_bisim(left, right, alphabet, k)
    payload = {'command': 'bisim max', 'k': k, **z.to_dict()}
    text = [f'{a} {b}' for a, b in z.sorted_pairs()] or ['(empty)']
    emit(payload, text)


@bisim_bp.cli.command('distinguish')
@click.argument('left_path', metavar='LEFT')
@click.argument('w')
@click.argument('right_path', metavar='RIGHT')
@click.argument('v')
@letters_option
@waml_command
def distinguish(left_path, w, right_path, v, letters):
    """A formula true at (LEFT, W) and false at (RIGHT, V); exit 1 when they are bisimilar."""
    left = load(read_input(left_path))
    right = load(read_input(right_path))
    f = distinguishing_formula(left, w, right, v, parse_letters(letters))
    if f is None:
        emit({'command': 'bisim distinguish', 'bisimilar': True, 'formula': None},
             f'{w} and {v} are bisimilar', verdict(False))
    emit({'command': 'bisim distinguish', 'bisimilar': False, 'formula': str(f)}, str(f))
