import random
from fractions import Fraction

from hypothesis import strategies as st

from recdet.exact import Polynomial, RationalFunction
from recdet.matrices import PolyMatrix, RatMatrix
from recdet.sequences import RecurrenceSpec, chebyshev_s, chebyshev_t, fibonacci, lucas

NAMED = [fibonacci(), lucas(), chebyshev_t(), chebyshev_s()]


def random_poly(rng, max_deg=3, bound=5):
    return Polynomial([rng.randint(-bound, bound) for _ in range(rng.randint(0, max_deg) + 1)])


def random_nonzero_poly(rng, max_deg=3, bound=5):
    while True:
        p = random_poly(rng, max_deg, bound)
        if not p.is_zero:
            return p


def random_ratfun(rng, max_deg=2, bound=5):
    return RationalFunction(random_poly(rng, max_deg, bound), random_nonzero_poly(rng, 1, bound))


def random_polymatrix(rng, n, max_deg=3, bound=5):
    return PolyMatrix([[random_poly(rng, max_deg, bound) for _ in range(n)] for _ in range(n)])


def random_ratmatrix(rng, n, max_deg=2, bound=4):
    return RatMatrix([[random_ratfun(rng, max_deg, bound) for _ in range(n)] for _ in range(n)])


def spec_pool(count=20, seed=2024):
    """Named families plus seeded random rational specs with c != 0."""
    rng = random.Random(seed)
    pool = [f.spec for f in NAMED]
    vals = [Fraction(n, d) for n in range(-3, 4) for d in (1, 2, 3)]
    nonzero = [v for v in vals if v]
    for _ in range(count):
        pool.append(RecurrenceSpec(rng.choice(vals), rng.choice(vals), rng.choice(vals),
                                   rng.choice(vals), rng.choice(vals), rng.choice(nonzero)))
    return pool


small_rationals = st.fractions(min_value=-9, max_value=9, max_denominator=6)
int_polys = st.lists(st.integers(-9, 9), min_size=0, max_size=9).map(Polynomial)
nonzero_int_polys = int_polys.filter(lambda p: not p.is_zero)
specs = st.builds(
    RecurrenceSpec,
    small_rationals, small_rationals, small_rationals,
    small_rationals, small_rationals, small_rationals.filter(lambda v: v != 0),
)


# PASS/FAIL lines from the acceptance suite, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda l: int(l.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
