# app/cli/model.py
import click
from flask import Blueprint

from app.cli.output import emit, read_input, seed, verdict, waml_command
from app.logic.errors import ModelLoadError
from app.logic.model import load, random_model, restrict_valuation, save
from app.schemas import RandomModelParams
from app.utils.helpers import parse_letters, write_bytes

model_bp = Blueprint('model', __name__)


def _write_or_print(m, out_path):
    data = save(m)
    if out_path:
        write_bytes(out_path, data)
        return f'wrote {out_path}'
    return data.decode('utf-8').rstrip()


@model_bp.cli.command('validate')
@click.argument('model_path', metavar='MODEL')
@waml_command
def validate(model_path):
    """Report every well-formedness violation of a Model-JSON file."""
    try:
        m = load(read_input(model_path))
    except ModelLoadError as e:
        emit({'command': 'model validate', 'valid': False, 'message': str(e), 'details': e.details},
             [f'invalid: {e}'] + [f'  {detail}' for detail in e.details], verdict(False))
    emit({'command': 'model validate', 'valid': True, 'model': m.to_dict()},
         f'valid {m.arity}-model with {len(m.worlds)} worlds', verdict(True))


@model_bp.cli.command('random')
@click.option('--arity', type=int, required=True)
@click.option('--worlds', type=int, required=True)
@click.option('--density', type=float, default=0.3, show_default=True)
@click.option('--letters', default='p')
@click.option('--out', 'out_path', default=None)
@waml_command
def random_command(arity, worlds, density, letters, out_path):
    """Seeded random n-model over worlds w0, w1, ..."""
    params = RandomModelParams(arity=arity, worlds=worlds, density=density,
                               letters=sorted(parse_letters(letters)), seed=seed())
    m = random_model(params.arity, params.worlds, params.density, params.letters, params.seed)
    emit({'command': 'model random', 'seed': params.seed, 'model': m.to_dict()},
         _write_or_print(m, out_path))


@model_bp.cli.command('restrict')
@click.argument('model_path', metavar='MODEL')
@click.option('--letters', required=True)
@click.option('--out', 'out_path', default=None)
@waml_command
def restrict(model_path, letters, out_path):
    """Drop every letter outside --letters from the valuation."""
    m = restrict_valuation(load(read_input(model_path)), parse_letters(letters))
    emit({'command': 'model restrict', 'model': m.to_dict()}, _write_or_print(m, out_path))
