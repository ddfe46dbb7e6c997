# app/utils/logging_config.py
import logging
import sys
from logging.handlers import RotatingFileHandler

_HANDLER_TAG = '_waml_handler'


def configure_logging(app):
    """Configure logging for the application.

    Console output goes to stderr; stdout carries command output only.
    """
    log_level = app.config.get('LOG_LEVEL', logging.WARNING)

    # Configure root logger
    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)
    for handler in [h for h in root_logger.handlers if getattr(h, _HANDLER_TAG, False)]:
        root_logger.removeHandler(handler)
        handler.close()

    # Console handler
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(log_level)
    console_formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    console_handler.setFormatter(console_formatter)
    setattr(console_handler, _HANDLER_TAG, True)
    root_logger.addHandler(console_handler)

    # File handler
    log_file = app.config.get('LOG_FILE')
    if log_file:
        file_handler = RotatingFileHandler(
            log_file,
            maxBytes=10485760,  # 10MB
            backupCount=10
        )
        file_handler.setLevel(log_level)
        file_formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(message)s'
        )
        file_handler.setFormatter(file_formatter)
        setattr(file_handler, _HANDLER_TAG, True)
        root_logger.addHandler(file_handler)

    # z3 and lark stay quiet below warnings
    for name in ('lark', 'z3'):
        logging.getLogger(name).setLevel(max(logging.WARNING, root_logger.level))

    # Configure Flask app logger
    app.logger.handlers = []
    app.logger.propagate = True
    app.logger.setLevel(log_level)

    app.logger.debug("Logging configured")
