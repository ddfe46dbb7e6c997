# app/cli/proof.py
import click
from flask import Blueprint, current_app

from app.cli.output import emit, read_input, verdict, waml_command
from app.logic.proof import check_script, generate_interp_refutation, load_script, save_script
from app.utils.helpers import write_bytes

proof_bp = Blueprint('proof', __name__)


@proof_bp.cli.command('check')
@click.argument('script_path', metavar='SCRIPT')
@waml_command
def check(script_path):
    """Validate a Proof-JSON derivation line by line."""
    script = load_script(read_input(script_path))
    invalid = check_script(script, max_atoms=current_app.config['PROOF_MAX_ATOMS'])
    payload = {
        'command': 'proof check',
        'arity': script.arity,
        'lines': len(script.lines),
        'ok': invalid is None,
        'theorem': str(script.theorem),
    }
    if invalid is None:
        emit(payload, f'ok: K{script.arity} proves {script.theorem}', verdict(True))
    payload['invalid'] = invalid.to_dict()
    emit(payload, f'invalid {invalid}', verdict(False))


@proof_bp.cli.command('generate')
@click.option('--n', 'n', type=click.IntRange(min=2), required=True)
@click.option('--out', 'out_path', default=None)
@waml_command
def generate(n, out_path):
    """Derivation of phi_n -> ~psi_n for the K_n interpolation counterexample."""
    script = generate_interp_refutation(n)
    data = save_script(script)
    if out_path:
        write_bytes(out_path, data)
        text = f'wrote {len(script.lines)} lines to {out_path}'
    else:
        text = data.decode('utf-8').rstrip()
    emit({'command': 'proof generate', 'n': n, 'script': script.to_dict()}, text)
