from functools import lru_cache
from types import SimpleNamespace

from hypothesis import HealthCheck, settings

from hermatlas.atlas import get_fixture
from hermatlas.atlas.runner import fixture_action
from hermatlas.cartan import base_point, centralizer, full_centralizer
from hermatlas.decomp import derived_k, invariant_factors

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ALL_IDS = ("(2)", "(6)", "(8)", "(10)", "(14)", "(16)", "(26)/(1e)", "(27)", "(1e)", "(2e)", "(3e)", "(4e)", "(6e)")
ELLIPTIC_IDS = ("(1e)", "(2e)", "(3e)", "(4e)", "(6e)")


@lru_cache(maxsize=None)
def pipeline(fid: str) -> SimpleNamespace:
    """Exact pipeline objects for one fixture, computed once per session."""
    fx = get_fixture(fid)
    action, dims, _ = fixture_action(fx)
    zk, zp = centralizer(action)
    k = derived_k(zp)
    return SimpleNamespace(fixture=fx, action=action, dims=dims, bp=base_point(action),
                           zk=zk, zp=zp, k=k, factors=invariant_factors(zp, k))


@lru_cache(maxsize=None)
def joint_centralizer(fid: str):
    return full_centralizer(pipeline(fid).action)


@lru_cache(maxsize=None)
def report(fid: str, backend: str = "crosscheck"):
    from hermatlas.atlas import run_family

    return run_family(fid, backend)


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
