# app/cli/interp.py
import logging

import click
from flask import Blueprint, current_app

from app.cli.output import budget, emit, verdict, waml_command
from app.logic.interp import build_counterexample, axiom4_failures, save_bundle, verify_lemma1
from app.schemas import InterpParams

logger = logging.getLogger(__name__)
interp_bp = Blueprint('interp', __name__)


@interp_bp.cli.command('demo')
@click.option('--n', 'n', type=int, required=True)
@click.option('--sat-bound', type=int, default=3, show_default=True)
@click.option('--emit-bundle', 'bundle_dir', default=None, help='Directory for the JSON bundle.')
@waml_command
def demo(n, sat_bound, bundle_dir):
    """Build the K_n interpolation counterexample and check all three conditions."""
    params = InterpParams(n=n, sat_bound=sat_bound)
    bundle = build_counterexample(params.n)
    report = verify_lemma1(
        bundle,
        params.sat_bound,
        sweep_depth=current_app.config['SWEEP_DEPTH'],
        sweep_size=current_app.config['SWEEP_SIZE'],
        sat_budget=budget('SAT_BUDGET'),
    )
    failures = axiom4_failures(bundle) if params.n <= 3 else None

    text = list(report.lines())
    if failures is not None:
        holds = all(failure is None for failure in failures.values())
        text.append(f"  axiom 4 on both models: {'valid' if holds else 'refuted'}")
    payload = {'command': 'interp demo', 'report': report.to_dict(), 'axiom4': failures}
    if bundle_dir:
        payload['bundle'] = save_bundle(bundle, bundle_dir)
        text.append(f'bundle written to {bundle_dir}')
    emit(payload, text, verdict(report.passed))
