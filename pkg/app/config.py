# app/config.py
import os

from dotenv import load_dotenv

load_dotenv()

BASE_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))


class Config:
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'WARNING')

    # No file handler unless a path is given
    LOG_FILE = os.environ.get('LOG_FILE')

    JSON_SCHEMA_VERSION = 1

    SAT_BUDGET = int(os.environ.get('WAML_SAT_BUDGET', '5000000'))
    UNRAVEL_NODE_BUDGET = int(os.environ.get('WAML_UNRAVEL_NODE_BUDGET', '20000'))
    PROOF_MAX_ATOMS = int(os.environ.get('WAML_PROOF_MAX_ATOMS', '20'))

    # Formula sweep used by the interpolation demo
    SWEEP_DEPTH = int(os.environ.get('WAML_SWEEP_DEPTH', '2'))
    SWEEP_SIZE = int(os.environ.get('WAML_SWEEP_SIZE', '6'))

    FIXTURES_DIR = os.environ.get('WAML_FIXTURES_DIR', os.path.join(BASE_DIR, 'fixtures'))
