# app/cli/__init__.py
import logging

from app.cli.bisim import bisim_bp
from app.cli.checking import checking_bp
from app.cli.experiment import experiment_bp
from app.cli.interp import interp_bp
from app.cli.model import model_bp
from app.cli.output import EXIT_ERROR, global_parameters
from app.cli.proof import proof_bp
from app.cli.translate import translate_bp
from app.cli.unravel import unravel_bp
from app.config import Config

logger = logging.getLogger(__name__)

PROG_NAME = 'waml'


def register_blueprints(app):
    app.register_blueprint(checking_bp)
    app.register_blueprint(bisim_bp)
    app.register_blueprint(unravel_bp)
    app.register_blueprint(translate_bp)
    app.register_blueprint(proof_bp)
    app.register_blueprint(interp_bp)
    app.register_blueprint(experiment_bp)
    app.register_blueprint(model_bp)
    app.cli.params.extend(global_parameters())


def dispatch(argv, config_class=Config):
    """Run one command; returns the process exit code."""
    from app import create_app

    app = create_app(config_class)
    with app.app_context():
        try:
            app.cli.main(args=list(argv), prog_name=PROG_NAME, standalone_mode=True)
        except SystemExit as e:
            if e.code is None:
                return 0
            if isinstance(e.code, int):
                return e.code
            logger.error("exiting: %s", e.code)
            return EXIT_ERROR
    return 0
