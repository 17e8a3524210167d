import pytest
from hypothesis import settings

from frobclose.cli import corpus_dir
from frobclose.ringcore import RingPresentation, load_ring

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def corpus_ring(name):
    return load_ring(corpus_dir() / f"{name}.ring")


@pytest.fixture(scope="session")
def hyp4():
    return corpus_ring("hyp4_p5")


@pytest.fixture(scope="session")
def quintic():
    return corpus_ring("quintic_p2")


@pytest.fixture(scope="session")
def cubic():
    return corpus_ring("cubic_p2")


@pytest.fixture(scope="session")
def sr4():
    return corpus_ring("sr4_p2")


@pytest.fixture(scope="session")
def regular2():
    return corpus_ring("regular2_p5")


@pytest.fixture
def poly_ring_f5():
    return RingPresentation.make(5, "xyz")


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(LINES):
            terminalreporter.write_line(LINES[key])
