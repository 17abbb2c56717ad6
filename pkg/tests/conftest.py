import pytest
from hypothesis import settings

from bigl.hopf import Model
from bigl.relations import build_group_rules, build_oscillator_rules

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def osc():
    return {n: build_oscillator_rules(n) for n in (1, 2, 3)}


@pytest.fixture(scope="session")
def group():
    return {n: build_group_rules(n) for n in (1, 2, 3)}


@pytest.fixture(scope="session")
def models():
    return {n: Model(n) for n in (1, 2, 3)}
