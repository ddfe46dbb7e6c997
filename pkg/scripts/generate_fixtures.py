#!/usr/bin/env python
"""
Fixture generation script for the WAML workbench.
This script rebuilds the interpolation counterexamples for K_2, K_3 and K_4,
writes their models, relations and refutations into the fixtures directory
and checks each bundle before writing it.
"""

import os
import sys
from pathlib import Path

# Add the project root to the Python path
project_root = Path(__file__).parent.parent
sys.path.append(str(project_root))

from app import create_app
from app.logic.bisim import save_relation
from app.logic.interp import build_counterexample, verify_lemma1
from app.logic.model import save
from app.logic.proof import save_script
from app.utils.helpers import write_bytes

# Create the Flask application
app = create_app()

# Arity -> whether a proof fixture is shipped for it
ARITIES = {2: True, 3: True, 4: False}


def generate_bundle(n, directory):
    """Build, verify and write the fixtures of the K_n counterexample."""
    bundle = build_counterexample(n)
    report = verify_lemma1(bundle, sat_bound=2)
    if not report.passed:
        for line in report.lines():
            print(line)
        return False

    write_bytes(os.path.join(directory, f'm{n}.json'), save(bundle.model_m.model))
    write_bytes(os.path.join(directory, f'n{n}.json'), save(bundle.model_n.model))
    write_bytes(os.path.join(directory, f'z{n}.json'), save_relation(bundle.z))
    if ARITIES[n]:
        write_bytes(os.path.join(directory, f'proof{n}.json'), save_script(bundle.refutation))
    print(f"Wrote K{n} fixtures.")
    return True


def main():
    with app.app_context():
        directory = app.config['FIXTURES_DIR']
        os.makedirs(directory, exist_ok=True)
        print(f"Generating fixtures in {directory}...")
        for n in ARITIES:
            if not generate_bundle(n, directory):
                print(f"K{n} counterexample failed verification. Aborting.")
                return False
        print("Fixture generation completed successfully.")
        return True


if __name__ == "__main__":
    sys.exit(0 if main() else 1)
