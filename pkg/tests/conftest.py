from contextlib import contextmanager
from functools import cache
from time import perf_counter

import pytest
from hypothesis import strategies as st

from symfund.partition import partitions_of
from symfund.splethysm import CACHE
from symfund.symfun import SchurVector


@cache
def parts_list(d: int) -> tuple:
    return tuple(partitions_of(d))


def partitions_st(min_size: int = 0, max_size: int = 10):
    return st.integers(min_size, max_size).flatmap(lambda d: st.sampled_from(parts_list(d)))


def homogeneous_st(d: int, coeff: int = 5, max_terms: int = 6):
    """Random integer Schur vectors of degree d (possibly zero)."""
    term = st.tuples(st.sampled_from(parts_list(d)), st.integers(-coeff, coeff))
    return st.lists(term, max_size=max_terms).map(SchurVector)


def vector_st(max_degree: int = 6, coeff: int = 5, max_terms: int = 6):
    term = st.tuples(partitions_st(0, max_degree), st.integers(-coeff, coeff))
    return st.lists(term, max_size=max_terms).map(SchurVector)


def pairs_up_to(total: int, product: bool = False):
    """All (alpha, beta) with |alpha|,|beta| >= 1 and |alpha||beta| (or |alpha|+|beta|) <= total."""
    out = []
    for a in range(1, total + 1):
        for b in range(1, total + 1):
            if (a * b if product else a + b) > total:
                continue
            for alpha in parts_list(a):
                for beta in parts_list(b):
                    out.append((alpha, beta))
    return out


@pytest.fixture
def fresh_plethysm_cache():
    saved = CACHE.items()
    CACHE.clear()
    yield CACHE
    CACHE.clear()
    for (a, b, p), v in saved:
        CACHE.put(a, b, p, v)


def cold_caches() -> None:
    """Drop every memo so a timed run starts from nothing."""
    from symfund import derivation, oracle, shadows, splethysm, symfun

    splethysm.CACHE.clear()
    for fn in (
        derivation._collapse,
        derivation._lr_pair,
        derivation.antiderivative,
        oracle.kostka,
        oracle._power_monomial_poly,
        oracle._plethysm_monomial,
        oracle.character_columns,
        shadows._schur_rank_poly,
        splethysm._power_plethysm_monomial,
        symfun._power_monomial_in_schur,
        symfun._schur_in_power_table,
        symfun.character_table,
    ):
        fn.cache_clear()


RESULTS: dict[int, str] = {}


@contextmanager
def criterion(number: int, title: str, limit: float | None = None):
    """Time one acceptance criterion from cold caches and record a PASS/FAIL line."""
    cold_caches()
    start = perf_counter()
    status, detail = "FAIL", ""
    try:
        yield
        elapsed = perf_counter() - start
        if limit is not None and elapsed > limit:
            detail = f"exceeded {limit:g}s"
            raise AssertionError(f"criterion {number} took {elapsed:.2f}s, limit {limit:g}s")
        status = "PASS"
    except BaseException as exc:
        detail = detail or f"{type(exc).__name__}: {exc}".splitlines()[0][:160]
        raise
    finally:
        elapsed = perf_counter() - start
        budget = f" (limit {limit:g}s)" if limit is not None else ""
        line = f"criterion {number} [{title}]: {status} in {elapsed:.2f}s{budget}"
        RESULTS[number] = line + (f" -- {detail}" if detail else "")
        print(RESULTS[number])


def pytest_terminal_summary(terminalreporter):
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
