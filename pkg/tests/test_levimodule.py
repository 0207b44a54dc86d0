import json
from fractions import Fraction

import pytest

from lieweyl.levimodule import (
    CapacityError,
    build_irreducible,
    check_homomorphism,
    trivial_module,
    weyl_dimension,
)
from lieweyl.liealgebra import simple_lie_algebra
from lieweyl.parabolic import make_parabolic


def parabolic(name, crossed):
    return make_parabolic(simple_lie_algebra(name), crossed)


def test_trivial_module():
    p = parabolic("G2", (1, 0))
    m = trivial_module(p)
    assert m.dim == 1
    for g in p.levi_generators():
        assert m.matrix(g) == {}
    assert check_homomorphism(m) is None


@pytest.mark.parametrize("weight, dim", [(1, 2), (2, 3), (3, 4), (5, 6)])
def test_sl2_levi_dimensions(weight, dim):
    m = build_irreducible(parabolic("A2", (1, 0)), (0, weight))
    assert m.dim == dim
    assert check_homomorphism(m) is None


def test_g2_long_root_levi_matches_weyl_formula():
    p = parabolic("G2", (1, 0))
    m = build_irreducible(p, (0, 2))
    assert m.dim == weyl_dimension(p, (0, 2)) == 3


CASES = [
    ("B2", (1, 0), (Fraction(1, 2), 2)),
    ("B2", (0, 1), (3, Fraction(-1, 3))),
    ("G2", (0, 1), (2, 1)),
    ("A3", (0, 1, 0), (1, 5, 1)),
    ("C3", (1, 0, 0), (0, 1, 1)),
    ("F4", (0, 0, 0, 1), (1, 0, 0, 0)),
    ("F4", (1, 0, 0, 0), (0, 0, 1, 0)),
    ("E6", (1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0)),
    ("D4", (0, 1, 0, 0), (0, 0, 1, 1)),
]


@pytest.fixture(scope="module", params=CASES, ids=lambda c: f"{c[0]}-{''.join(map(str, c[1]))}")
def module(request):
    name, crossed, lam = request.param
    p = parabolic(name, crossed)
    return build_irreducible(p, lam)


def test_dimension_matches_weyl_formula(module):
    assert module.dim == weyl_dimension(module.parabolic, module.highest_weight)


def test_homomorphism_on_all_levi_pairs(module):
    assert check_homomorphism(module) is None


def test_root_vectors_shift_weights(module):
    p = module.parabolic
    alg = p.algebra
    for g in p.levi_generators():
        if alg.is_cartan(g):
            continue
        root = alg.root_of(g)
        # weights are in fundamental coordinates; a root shifts them by its Cartan-matrix row combination
        cartan = alg.roots.cartan_matrix
        shift = tuple(sum(root[i] * cartan[i][k] for i in range(alg.rank)) for k in range(alg.rank))
        for (i, j) in module.matrix(g):
            mu, nu = module.basis_weights[j], module.basis_weights[i]
            assert tuple(n - m for m, n in zip(mu, nu)) == shift


def test_cartan_acts_diagonally(module):
    alg = module.parabolic.algebra
    for i in range(1, alg.rank + 1):
        assert all(r == c for r, c in module.matrix(alg.cartan_gen(i)))


def test_highest_weight_vector_is_killed_by_raising(module):
    p = module.parabolic
    alg = p.algebra
    for i in p.levi_simple:
        e = alg.gen_of_root(tuple(int(k == i) for k in range(alg.rank)))
        assert all(col != 0 for (_, col) in module.matrix(e))


def test_nilradical_acts_by_zero():
    p = parabolic("G2", (1, 0))
    m = build_irreducible(p, (0, 1))
    for root in p.nilradical_roots:
        assert m.matrix(p.algebra.gen_of_root(root)) == {}
    with pytest.raises(ValueError):
        m.matrix(p.generators[0])


def test_rejects_bad_weights():
    p = parabolic("G2", (1, 0))
    with pytest.raises(ValueError):
        build_irreducible(p, (0, -1))
    with pytest.raises(ValueError):
        build_irreducible(p, (0, Fraction(1, 2)))
    with pytest.raises(ValueError):
        build_irreducible(p, (0,))


def test_capacity_cap():
    p = parabolic("A3", (1, 0, 0))
    with pytest.raises(CapacityError):
        build_irreducible(p, (0, 4, 4), dim_cap=20)


def test_structured_dump_is_json():
    m = build_irreducible(parabolic("B2", (1, 0)), (Fraction(1, 2), 2))
    doc = json.loads(json.dumps(m.to_dict()))
    assert doc["dim"] == m.dim
    assert doc["highest_weight"] == [[1, 2], [2, 1]]
