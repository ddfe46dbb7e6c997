import os

import pytest
from hypothesis import settings

from app import create_app
from app.config import BASE_DIR
from app.logic.bisim import load_relation
from app.logic.model import load
from app.utils.helpers import read_bytes

settings.register_profile('waml', max_examples=60, deadline=None, derandomize=True)
settings.load_profile('waml')

FIXTURES = os.path.join(BASE_DIR, 'fixtures')


def fixture_path(name):
    return os.path.join(FIXTURES, name)


@pytest.fixture(scope='function')
def app():
    """Create and configure a Flask app for testing"""
    app = create_app()
    app.config.update({
        'TESTING': True,
        'LOG_LEVEL': 'WARNING',
    })

    with app.app_context():
        yield app


@pytest.fixture(scope='function')
def runner(app):
    """A test CLI runner for the app"""
    return app.test_cli_runner()


@pytest.fixture(scope='function')
def model_fixture():
    """Load a Model-JSON file from fixtures/"""
    def _load(name):
        return load(read_bytes(fixture_path(name)))
    return _load


@pytest.fixture(scope='function')
def relation_fixture(model_fixture):
    """Load a Relation-JSON file from fixtures/ against two fixture models"""
    def _load(name, left, right):
        return load_relation(read_bytes(fixture_path(name)), model_fixture(left), model_fixture(right))
    return _load
