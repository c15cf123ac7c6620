from functools import lru_cache

from hypothesis import HealthCheck, settings

from tensorsquare import nu as nm
from tensorsquare.catalog import resolve

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@lru_cache(maxsize=None)
def group(name: str):
    return resolve(name)


@lru_cache(maxsize=None)
def nu_of(name: str, mode: str = "auto"):
    return nm.nu_image(group(name), mode)


@lru_cache(maxsize=None)
def analysis(name: str):
    return nm.TensorAnalysis(nu_of(name))


ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, title = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {status}  {title}")
