# app/cli/unravel.py
import click
from flask import Blueprint

from app.cli.output import budget, emit, read_input, waml_command
from app.logic.model import dumps, load, save
from app.logic.unravel import unravel
from app.utils.helpers import write_bytes

unravel_bp = Blueprint('unravel', __name__, cli_group=None)


@unravel_bp.cli.command('unravel')
@click.argument('model_path', metavar='MODEL')
@click.argument('world')
@click.option('--depth', type=click.IntRange(min=0), required=True)
@click.option('--out', 'out_path', default=None, help='Write the unraveled model as Model-JSON.')
@click.option('--emit-rmap', 'rmap_path', default=None, help='Write the projection map as JSON.')
@waml_command
def unravel_command(model_path, world, depth, out_path, rmap_path):
    """Bounded unraveling of MODEL around WORLD."""
    m = load(read_input(model_path))
    result = unravel(m, world, depth, node_budget=budget('UNRAVEL_NODE_BUDGET'))
    if out_path:
        write_bytes(out_path, save(result.model))
    if rmap_path:
        write_bytes(rmap_path, dumps(result.to_dict()['rmap']))

    size = len(result.model.worlds)
    tuples = len(result.model.relation)
    text = [f'root {result.root}, depth {depth}: {size} nodes, {tuples} tuples']
    if not out_path:
        text.append(save(result.model).decode('utf-8').rstrip())
    emit({'command': 'unravel', 'nodes': size, 'tuples': tuples, **result.to_dict()}, text)
