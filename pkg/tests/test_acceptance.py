"""End-to-end acceptance checks, one group per criterion.

The terminal summary prints ``criterion N: PASS/FAIL`` for each group (see
conftest.py).  E7 and E8 closures only run with ``LIEWEYL_LONG=1``.
"""
import json
import subprocess
import sys
import time
from io import StringIO
from itertools import product

import pytest

from lieweyl.cli import main
from lieweyl.embedding import embed, generic_product, split_terms
from lieweyl.levimodule import weyl_dimension
from lieweyl.liealgebra import simple_lie_algebra, verify_jacobi
from lieweyl.parabolic import make_parabolic
from lieweyl.polynomial import is_compatible
from lieweyl.verify import (
    action_oracle,
    adjoint_matrices,
    exhaustive_exponents,
    lie_closure,
    omega_contract,
    specialization_check,
)
from notation import DATA, g2_bracket_table, g2_operators, parse_weyl


def proper_parabolics(rank):
    return [c for c in product((0, 1), repeat=rank) if any(c)]


def one_hot(rank, k):
    return tuple(int(i == k) for i in range(rank))


# -- 1: golden G2 operators ------------------------------------------------------

@pytest.mark.criterion(1)
def test_g2_golden_operators_exact():
    result = embed("G2", (1, 0), (0, 0))
    alg = result.algebra
    golden = g2_operators()
    for g in [alg.root_gen(k) for k in (1, -1, 2, -2)]:
        op = result.images[g]
        text = golden[alg.name(g)]
        body = text[1 : text.index(")\\otimes")]
        assert op.dim == 1 and set(op.entries) == {(0, 0)}
        assert op.entries[(0, 0)] == parse_weyl(body, 5)


@pytest.mark.criterion(1)
def test_g2_golden_operators_under_one_second_cold():
    # fresh interpreter so no cache is warm
    code = (
        "import time; from lieweyl.embedding import embed; t = time.perf_counter(); "
        "embed('G2', (1, 0), (0, 0)); print(time.perf_counter() - t)"
    )
    seconds = float(subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True).stdout)
    print(f"G2 (1,0) embedding: {seconds:.3f} s")
    assert seconds < 1.0


# -- 2: bracket table --------------------------------------------------------------

@pytest.mark.criterion(2)
def test_table_g2_reproduced_exactly():
    out = StringIO()
    assert main(["table", "G2"], out=out) == 0
    cols, golden = g2_bracket_table()
    rows = [line.split() for line in out.getvalue().splitlines()]
    assert rows[0][3:] == cols
    raw = (DATA / "g2_bracket_table.tex").read_text().splitlines()[2:]
    assert len(rows) - 1 == len(raw) == 14
    for cells, line in zip(rows[1:], raw):
        want = [c.strip() for c in line.split("&")]
        assert cells[0] + cells[1] == want[0].replace(" ", "")
        assert cells[3] == want[2]
        assert cells[4:] == [golden[(cells[3], c)] for c in cols]
    latex = StringIO()
    main(["table", "G2", "--format", "latex"], out=latex)
    eps = [line.split(" & ")[1] for line in latex.getvalue().splitlines()[2:-1]]
    assert eps == [line.split("&")[1].strip() for line in raw]


# -- 3: nilradical dimensions ---------------------------------------------------------

NILRADICAL = [
    ("G2", (1, 0), 5),
    ("G2", (0, 1), 5),
    ("F4", (1, 0, 0, 0), 15),
    ("F4", (0, 0, 0, 1), 15),
    ("E6", one_hot(6, 0), 16),
    ("E7", one_hot(7, 6), 27),
    ("E8", one_hot(8, 7), 57),
]


@pytest.mark.criterion(3)
@pytest.mark.parametrize("name, crossed, dim", NILRADICAL)
def test_nilradical_dimension(name, crossed, dim):
    assert make_parabolic(simple_lie_algebra(name), crossed).n == dim


# -- 4: closure ---------------------------------------------------------------------

def closure_case(name, crossed, dim, budget):
    t = time.perf_counter()
    result = embed(name, crossed)
    report = lie_closure(result.simple_images(), dim)
    seconds = time.perf_counter() - t
    print(f"{name} {crossed}: closure {report.basis_size}, depth {report.bracket_depth}, {seconds:.1f} s")
    assert report, report.reason
    assert report.basis_size == dim
    assert seconds < budget


@pytest.mark.criterion(4)
@pytest.mark.parametrize("name, crossed, dim", [
    ("G2", (1, 0), 14),
    ("G2", (0, 1), 14),
    ("F4", (1, 0, 0, 0), 52),
    ("F4", (0, 0, 0, 1), 52),
    ("E6", one_hot(6, 0), 78),
])
def test_closure(name, crossed, dim):
    closure_case(name, crossed, dim, 300)


@pytest.mark.criterion(4)
@pytest.mark.slow
@pytest.mark.parametrize("name, crossed, dim", [("E7", one_hot(7, 6), 133), ("E8", one_hot(8, 7), 248)])
def test_closure_large(name, crossed, dim):
    closure_case(name, crossed, dim, 1800)


@pytest.mark.criterion(4)
def test_check_cli_f4():
    out = StringIO()
    assert main(["check", "--type", "F4", "--crossed", "0,0,0,1", "--format", "structured"], out=out) == 0
    assert json.loads(out.getvalue())["closure"]["basis_size"] == 52


# -- 5: action oracle -----------------------------------------------------------------

def small_levi_weight(name, crossed):
    """Weight 2 on uncrossed nodes, 1 on crossed ones."""
    return tuple(1 if c else 2 for c in crossed)


ORACLE = [
    (name, crossed, lam)
    for name, rank in [("A1", 1), ("A2", 2), ("B2", 2), ("G2", 2)]
    for crossed in proper_parabolics(rank)
    for lam in [(0,) * rank, small_levi_weight(name, crossed)]
]


@pytest.mark.criterion(5)
@pytest.mark.parametrize("name, crossed, lam", ORACLE)
def test_action_oracle(name, crossed, lam):
    result = embed(name, crossed, lam)
    assert result.module.dim <= 6
    assert result.module.dim == weyl_dimension(result.parabolic, lam)
    report = action_oracle(result, 4)
    assert report, report.failure


# -- 6: property suites ---------------------------------------------------------------

@pytest.mark.criterion(6)
@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"])
def test_jacobi_exhaustive(name):
    report = verify_jacobi(simple_lie_algebra(name))
    assert report, report.failure


@pytest.mark.criterion(6)
@pytest.mark.parametrize("name", ["E6", "E7", "E8"])
def test_jacobi_sampled(name):
    report = verify_jacobi(simple_lie_algebra(name), samples=10_000, seed=7)
    assert report, report.failure
    assert report.triples_checked >= 10_000


BUILDS = [
    ("A1", (1,), None),
    ("A2", (1, 0), (0, 2)),
    ("B2", (0, 1), None),
    ("G2", (1, 0), None),
    ("G2", (0, 1), None),
    ("G2", (1, 0), (0, 1)),
    ("G2", (1, 1), None),
    ("F4", (1, 0, 0, 0), None),
    ("F4", (0, 0, 0, 1), None),
    ("E6", one_hot(6, 0), None),
]


@pytest.mark.criterion(6)
@pytest.mark.parametrize("name, crossed, lam", BUILDS)
def test_omega_contract(name, crossed, lam):
    report = omega_contract(embed(name, crossed, lam), samples=200)
    assert report, report.failure


@pytest.mark.criterion(6)
@pytest.mark.parametrize("name, crossed", [(n, c) for n, c, _ in BUILDS if _ is None])
def test_compatibility_of_every_extracted_term(name, crossed):
    alg = simple_lie_algebra(name)
    par = make_parabolic(alg, crossed)
    result = embed(alg, crossed)
    for g, red in result.reduced.items():
        for p, b, _ in split_terms(par, red):
            assert is_compatible(p, b), (alg.name(g), b)


@pytest.mark.criterion(6)
@pytest.mark.parametrize("name, crossed", [(n, c) for n, r in [("A1", 1), ("A2", 2), ("G2", 2)] for c in proper_parabolics(r)])
def test_reduction_agrees_with_specialization(name, crossed):
    alg = simple_lie_algebra(name)
    par = make_parabolic(alg, crossed)
    ad = adjoint_matrices(alg)
    for g in range(alg.dim):
        red = generic_product(alg, par, g)
        assert specialization_check(alg, par, g, red, exhaustive_exponents(par.n, 3), ad), alg.name(g)


# -- 7: bench (information only) -------------------------------------------------------

@pytest.mark.criterion(7)
def test_bench_prints_counts():
    out = StringIO()
    assert main(["bench"], out=out) == 0
    text = out.getvalue()
    print(text)
    for name in ("E7", "E6", "F4", "G2"):
        assert name in text
