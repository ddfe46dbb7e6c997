# app/cli/experiment.py
import click
from flask import Blueprint

from app.cli.output import budget, emit, read_input, waml_command
from app.logic.model import load
from app.logic.syntax import parse
from app.logic.unravel import locality_sweep

experiment_bp = Blueprint('experiment', __name__)


@experiment_bp.cli.command('locality')
@click.argument('model_path', metavar='MODEL')
@click.argument('world')
@click.argument('formula')
@click.option('--max-depth', type=click.IntRange(min=0), required=True)
@waml_command
def locality(model_path, world, formula, max_depth):
    """EXPERIMENT: least unraveling depth whose root agrees with WORLD on FORMULA."""
    m = load(read_input(model_path))
    report = locality_sweep(m, world, parse(formula), max_depth,
                            node_budget=budget('UNRAVEL_NODE_BUDGET'))
    data = report.to_dict()
    text = [f"EXPERIMENT locality of {data['formula']} (modal depth {data['modal_depth']})"]
    for row in data['rows']:
        text.append(f"  depth {row['depth']}: {'agrees' if row['agrees'] else 'differs'}")
    text.append(f"  least agreeing depth: {data['least_agreeing_depth']}")
    emit({'command': 'experiment locality', **data}, text)
