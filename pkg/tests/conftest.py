import pytest
from hypothesis import strategies as st

from indsat.trigraph import Trigraph, pair_count


def trigraph_from_code(n: int, code: int) -> Trigraph:
    """Decode a base-3 pair coloring: digit 0=white, 1=black, 2=gray."""
    black = gray = 0
    for i in range(pair_count(n)):
        code, digit = divmod(code, 3)
        if digit == 1:
            black |= 1 << i
        elif digit == 2:
            gray |= 1 << i
    return Trigraph(n, black, gray)


def all_trigraphs(n: int):
    for code in range(3 ** pair_count(n)):
        yield trigraph_from_code(n, code)


@st.composite
def trigraphs(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    code = draw(st.integers(0, 3 ** pair_count(n) - 1))
    return trigraph_from_code(n, code)


@pytest.fixture
def t5_layered():
    from indsat.constructions import construct_tn

    return construct_tn(5)
