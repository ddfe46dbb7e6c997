# app/cli/output.py
"""Shared option handling, output emission and error mapping for every command."""
import functools
import logging

import click
from flask import current_app
from pydantic import ValidationError

from app.logic.errors import WamlError
from app.utils.helpers import format_error_message, read_bytes

logger = logging.getLogger(__name__)

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_ERROR = 2


class CommandError(click.ClickException):
    """A failure reported with a ``{"message", "details"}`` body and exit code 2."""
    exit_code = EXIT_ERROR

    def __init__(self, message, details=None):
        super().__init__(message)
        self.details = list(details or [])
        # Rendered now: the command context is gone by the time click shows the error.
        self.rendered = current_app.json.dumps(_with_schema(self.body())) if json_mode() else None

    def body(self):
        return {"message": self.message, "details": self.details}

    def show(self, file=None):
        if self.rendered is not None:
            click.echo(self.rendered)
            return
        click.echo(f"Error: {self.message}", err=True)
        for detail in self.details:
            click.echo(f"  {detail}", err=True)


def _remember(ctx, param, value):
    if value not in (None, False):
        ctx.meta[f'waml.{param.name}'] = value
    return value


def _setting(name, default=None):
    ctx = click.get_current_context(silent=True)
    if ctx is None:
        return default
    return ctx.meta.get(f'waml.{name}', default)


_GLOBAL_OPTIONS = (
    (('--json', 'json_output'), {'is_flag': True, 'help': 'Structured JSON output on stdout.'}),
    (('--seed',), {'type': int, 'help': 'Seed for randomised commands.'}),
    (('--budget',), {'type': click.IntRange(min=1), 'help': 'Resource budget overriding the configured one.'}),
)


def global_parameters():
    """``--json``, ``--seed`` and ``--budget``; accepted before or after the subcommand."""
    return [
        click.Option(list(decls), expose_value=False, callback=_remember, **options)
        for decls, options in _GLOBAL_OPTIONS
    ]


def json_mode():
    return bool(_setting('json_output', False))


def seed(default=0):
    return _setting('seed', default)


def budget(config_key):
    return _setting('budget', current_app.config[config_key])


def _with_schema(payload):
    return {'schema': current_app.config['JSON_SCHEMA_VERSION'], **payload}


def emit(payload, text, exit_code=EXIT_TRUE):
    """Print ``payload`` as JSON or ``text`` (a string or lines) and exit with ``exit_code``."""
    if json_mode():
        click.echo(current_app.json.dumps(_with_schema(payload)))
    else:
        if isinstance(text, str):
            text = [text]
        for line in text:
            click.echo(line)
    click.get_current_context().exit(exit_code)


def verdict(flag):
    return EXIT_TRUE if flag else EXIT_FALSE


def read_input(path):
    try:
        return read_bytes(path)
    except OSError as e:
        raise CommandError(f"cannot read {path}: {e.strerror}") from None


def waml_command(f):
    """Attach the global options and translate failures into exit code 2."""
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except (click.exceptions.Exit, click.ClickException):
            raise
        except WamlError as e:
            body = e.to_dict()
            logger.info("command failed: %s", body["message"])
            raise CommandError(body["message"], body["details"]) from None
        except ValidationError as e:
            raise CommandError("invalid options", [format_error_message(err) for err in e.errors()]) from None
        except OSError as e:
            raise CommandError(f"{e.filename}: {e.strerror}") from None
        except Exception as e:
            logger.error(f"Unexpected error: {str(e)}", exc_info=True)
            raise CommandError("An unexpected error occurred") from None

    for decls, options in reversed(_GLOBAL_OPTIONS):
        wrapper = click.option(*decls, expose_value=False, callback=_remember, **options)(wrapper)
    return wrapper
