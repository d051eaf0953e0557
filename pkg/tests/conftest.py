import pytest

from pvsft import ftsolver, symbolic

# the (rep, q) cases of the exact theorem regression
THEOREM_CASES = [
    ("sym2-2", 3), ("sym2-2", 5), ("sym2-2", 7),
    ("sym2-3", 3), ("sym2-3", 5), ("sym2-3", 7),
    ("2sym2-2", 3), ("2sym2-2", 5), ("2sym2-2", 7),
    ("sym3-2", 5), ("sym3-2", 7), ("sym3-2", 11), ("sym3-2", 13),
    ("2sym2-3", 3), ("2sym2-3", 5), ("2sym2-3", 7),
]


@pytest.fixture(scope="session")
def solved():
    """Formula-provider matrices for every theorem-regression case."""
    return {(rep, q): ftsolver.solve_ft_matrix(rep, q) for rep, q in THEOREM_CASES}


@pytest.fixture(scope="session")
def poly_matrices():
    """Interpolated PolyMatrix per (rep, class), shared across tests."""
    out = {}
    for name in ("sym3-2", "sym2-2", "sym2-3", "2sym2-2", "2sym2-3"):
        for cls, pm in symbolic.interpolate(name).items():
            out[(name, cls)] = pm
    return out
