import pytest

from quivertilt.algebra import (
    linear_quiver_radical_square,
    nakayama_cyclic,
    parse_algebra,
)
from quivertilt.contexts import RunConfig, build_exact_context, build_stable_context

A2_SPEC = """\
field 2
vertices 1 2
arrow a: 1 -> 2
"""

DUAL_SPEC = """\
field 2
vertices 1
arrow x: 1 -> 1
relation x*x
"""


@pytest.fixture(scope="session")
def a2():
    return parse_algebra(A2_SPEC)


@pytest.fixture(scope="session")
def dual_numbers():
    return parse_algebra(DUAL_SPEC)


@pytest.fixture(scope="session")
def a3_rad2():
    return linear_quiver_radical_square(3)


@pytest.fixture(scope="session")
def nak22():
    return nakayama_cyclic(2, 2)


@pytest.fixture(scope="session")
def nak32():
    return nakayama_cyclic(3, 2)


@pytest.fixture(scope="session")
def nak104():
    return nakayama_cyclic(10, 4)


@pytest.fixture(scope="session")
def test_algebras(a2, dual_numbers, a3_rad2, nak22, nak32):
    return {
        "a2": a2,
        "dual_numbers": dual_numbers,
        "a3_rad2": a3_rad2,
        "nak22": nak22,
        "nak32": nak32,
    }


@pytest.fixture(scope="session")
def exact_contexts(test_algebras):
    return {name: build_exact_context(alg) for name, alg in test_algebras.items()}


@pytest.fixture(scope="session")
def stable_contexts(dual_numbers, nak22, nak32):
    return {
        "dual_numbers": build_stable_context(dual_numbers),
        "nak22": build_stable_context(nak22),
        "nak32": build_stable_context(nak32),
    }


@pytest.fixture(scope="session")
def stable_nak104(nak104):
    return build_stable_context(nak104)
