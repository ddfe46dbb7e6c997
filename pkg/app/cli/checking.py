# app/cli/checking.py
import logging

import click
from flask import Blueprint

from app.cli.output import budget, emit, read_input, verdict, waml_command
from app.logic.model import load, save
from app.logic.semantics import bounded_sat, check
from app.logic.syntax import parse

logger = logging.getLogger(__name__)
checking_bp = Blueprint('checking', __name__, cli_group=None)


@checking_bp.cli.command('mc')
@click.argument('model_path', metavar='MODEL')
@click.argument('world')
@click.argument('formula')
@waml_command
def model_check(model_path, world, formula):
    """Decide MODEL, WORLD |= FORMULA."""
    m = load(read_input(model_path))
    f = parse(formula)
    holds = check(m, world, f)
    logger.info("%s at %s: %s", f, world, holds)
    emit({'command': 'mc', 'world': world, 'formula': str(f), 'holds': holds},
         'true' if holds else 'false', verdict(holds))


@checking_bp.cli.command('sat')
@click.argument('formula')
@click.option('--arity', type=click.IntRange(min=1), required=True)
@click.option('--max-worlds', type=click.IntRange(min=1), required=True)
@waml_command
def satisfiable(formula, arity, max_worlds):
    """Search pointed models of at most --max-worlds worlds for one satisfying FORMULA."""
    f = parse(formula)
    result = bounded_sat(f, arity, max_worlds, budget=budget('SAT_BUDGET'))
    payload = {'command': 'sat', 'formula': str(f), 'arity': arity, **result.to_dict()}
    if result.satisfiable:
        text = ['sat', f'point: {result.witness.point}', save(result.witness.model).decode('utf-8').rstrip()]
    else:
        text = f'unsat-up-to-bound {max_worlds}'
    emit(payload, text, verdict(result.satisfiable))
