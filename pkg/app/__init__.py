# app/__init__.py
from flask import Flask

from app.config import Config
from app.cli import register_blueprints
from app.utils.logging_config import configure_logging


def create_app(config_class=Config):
    app = Flask(__name__)
    app.config.from_object(config_class)
    app.json.sort_keys = True

    # Configure logging
    configure_logging(app)

    # Register command groups
    register_blueprints(app)

    app.logger.debug("Application initialized successfully")
    return app
