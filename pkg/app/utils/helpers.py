# app/utils/helpers.py
import logging

logger = logging.getLogger(__name__)


def format_error_message(err):
    """Render one pydantic error as ``<json.path>: <message>``."""
    loc = err.get('loc') or ()
    if isinstance(loc, (tuple, list)) and len(loc) > 0:
        field_path = '.'.join(str(part) for part in loc)
    else:
        field_path = "document"

    message = err['msg']

    return f"{field_path}: {message}"


def parse_letters(value):
    """Split a ``p,q`` command-line letter list into a frozenset."""
    if value is None:
        return None
    return frozenset(part.strip() for part in value.split(',') if part.strip())


def read_bytes(path):
    with open(path, 'rb') as handle:
        return handle.read()


def write_bytes(path, data):
    with open(path, 'wb') as handle:
        handle.write(data)
    logger.info("wrote %s", path)
