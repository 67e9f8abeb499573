import hypothesis.strategies as st
from hypothesis import settings

from stanley import MonomialIdeal, RingCtx

settings.register_profile("suite", max_examples=60, deadline=None)
settings.load_profile("suite")

# one summary line per acceptance criterion, printed after the test run
ACCEPTANCE = {}


def record(number, description, passed, elapsed, budget):
    ACCEPTANCE[number] = (description, passed, elapsed, budget)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        desc, passed, elapsed, budget = ACCEPTANCE[k]
        word = "PASS" if passed else "FAIL"
        window = f"{elapsed:.2f}s of {budget:.0f}s" if budget else f"{elapsed:.2f}s"
        terminalreporter.write_line(
            f"criterion {k}: {word}  {desc}  [{window}]")


@st.composite
def monomials(draw, n, exp_max=2, nonzero=True):
    m = [draw(st.integers(0, exp_max)) for _ in range(n)]
    if nonzero and not any(m):
        i = draw(st.integers(0, n - 1))
        m[i] = draw(st.integers(1, exp_max))
    return tuple(m)


@st.composite
def ideals(draw, n_max=3, gens_max=3, exp_max=2):
    """A nonzero proper monomial ideal in a small ring."""
    n = draw(st.integers(1, n_max))
    ring = RingCtx(n)
    k = draw(st.integers(1, gens_max))
    gens = [draw(monomials(n, exp_max)) for _ in range(k)]
    return MonomialIdeal(ring, gens)


@st.composite
def ideal_pairs(draw, n_max=3, gens_max=3, exp_max=2):
    n = draw(st.integers(1, n_max))
    ring = RingCtx(n)
    a = [draw(monomials(n, exp_max))
         for _ in range(draw(st.integers(1, gens_max)))]
    b = [draw(monomials(n, exp_max))
         for _ in range(draw(st.integers(1, gens_max)))]
    return MonomialIdeal(ring, a), MonomialIdeal(ring, b)
