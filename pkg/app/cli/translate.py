# app/cli/translate.py
import click
from flask import Blueprint

from app.cli.output import emit, waml_command
from app.logic.translate import render_text, st, tptp_export, tptp_problem
from app.logic.syntax import parse

translate_bp = Blueprint('translate', __name__, cli_group=None)


@translate_bp.cli.command('translate')
@click.argument('formula')
@click.option('--arity', type=click.IntRange(min=1), required=True)
@click.option('--format', 'output_format', type=click.Choice(['text', 'tptp']), default='text')
@click.option('--ground', default='c0', show_default=True, help='TPTP constant for the free variable.')
@click.option('--role', type=click.Choice(['axiom', 'conjecture']), default='axiom', show_default=True)
@click.option('--name', default='waml', show_default=True, help='TPTP formula name.')
@click.option('--validity', is_flag=True, help='Emit the universally closed conjecture instead.')
@waml_command
def translate(formula, arity, output_format, ground, role, name, validity):
    """Standard translation of FORMULA with free variable x."""
    g = st(parse(formula), arity, 'x')
    if output_format == 'text':
        text = render_text(g)
    elif validity:
        text = tptp_problem(parse(formula), arity, name)
    else:
        text = tptp_export(g, role, name, {'x': ground})
    emit({'command': 'translate', 'format': output_format, 'arity': arity, 'output': text}, text)
