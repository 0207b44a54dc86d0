"""Finite-dimensional irreducible modules of the Levi factor.

The module ``V_lambda(l)`` is built weight space by weight space, going down
from the highest weight vector.  A vector below the top is zero in the
irreducible quotient exactly when every simple raising operator kills it, so
each candidate ``f_i w`` is identified with the tuple ``(e_j f_i w)_j``
(computed from ``e_j f_i = f_i e_j + delta_ij h_i``) and a basis is extracted
by exact row reduction.  This is the quotient of the Verma module by the
radical of its contravariant form.

Weights are in fundamental coordinates ``mu_i = mu(h_i^vee)``.  Entries of
``lambda`` on crossed roots may be arbitrary rationals; they only enter
through the Cartan action.  Root vectors of the nilradical act by zero.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .parabolic import ParabolicDatum


class CapacityError(ValueError):
    pass


# -- sparse matrices {(row, col): coeff} --------------------------------------

def mat_mul(a: dict, b: dict) -> dict:
    by_row: dict = {}
    for (j, l), c in b.items():
        by_row.setdefault(j, []).append((l, c))
    out: dict = {}
    for (i, j), c1 in a.items():
        for l, c2 in by_row.get(j, ()):
            out[(i, l)] = out.get((i, l), 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def mat_add(a: dict, b: dict, scale=1) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + scale * v
    return {k: v for k, v in out.items() if v}


def mat_commutator(a: dict, b: dict) -> dict:
    return mat_add(mat_mul(a, b), mat_mul(b, a), -1)


def mat_scale(a: dict, c) -> dict:
    return {k: v * c for k, v in a.items() if v * c}


@dataclass
class LeviModule:
    parabolic: ParabolicDatum
    highest_weight: tuple
    dim: int
    basis_weights: list
    matrices: dict = field(repr=False)  # basis position -> sparse matrix

    def matrix(self, g: int) -> dict:
        """Action of basis element ``g`` of the parabolic subalgebra."""
        if self.parabolic.in_nminus(g):
            raise ValueError(f"{self.parabolic.algebra.name(g)} does not lie in the parabolic")
        return self.matrices.get(g, {})

    def act(self, element: dict) -> dict:
        out: dict = {}
        for g, c in element.items():
            out = mat_add(out, self.matrix(g), c)
        return out

    def to_dict(self) -> dict:
        alg = self.parabolic.algebra
        def rat(c):
            c = Fraction(c)
            return [c.numerator, c.denominator]
        return {
            "dim": self.dim,
            "highest_weight": [rat(c) for c in self.highest_weight],
            "basis_weights": [[rat(c) for c in w] for w in self.basis_weights],
            "matrices": {
                alg.name(g): [[i, j, *rat(c)] for (i, j), c in sorted(m.items())]
                for g, m in sorted(self.matrices.items())
            },
        }


def _validate_weight(p: ParabolicDatum, lam):
    alg = p.algebra
    if len(lam) != alg.rank:
        raise ValueError(f"weight has length {len(lam)}, expected {alg.rank}")
    lam = tuple(Fraction(c) for c in lam)
    for i in p.levi_simple:
        if lam[i] < 0 or lam[i].denominator != 1:
            raise ValueError(f"weight coordinate {i + 1} must be a nonnegative integer on the Levi factor")
    return lam


def weyl_dimension(p: ParabolicDatum, lam) -> int:
    """Weyl dimension formula for the semisimple part of the Levi factor."""
    rs = p.algebra.roots
    lam = _validate_weight(p, lam)
    lengths = [rs.form[i][i] for i in range(rs.rank)]
    num = den = Fraction(1)
    for root in p.levi_roots:
        norm = rs.pairing(root, root)
        co = [Fraction(c * lengths[i], norm) for i, c in enumerate(root)]
        num *= sum((lam[i] + 1) * co[i] for i in range(rs.rank))
        den *= sum(co)
    val = num / den
    assert val.denominator == 1
    return int(val)


def trivial_module(p: ParabolicDatum) -> LeviModule:
    zero = tuple(Fraction(0) for _ in range(p.algebra.rank))
    return LeviModule(p, zero, 1, [zero], {})


def build_irreducible(p: ParabolicDatum, lam, dim_cap: int = 1000) -> LeviModule:
    alg = p.algebra
    rs = alg.roots
    lam = _validate_weight(p, lam)
    predicted = weyl_dimension(p, lam)
    if predicted > dim_cap:
        raise CapacityError(f"module dimension {predicted} exceeds cap {dim_cap}")
    S = p.levi_simple
    cartan = rs.cartan_matrix
    weights = [lam]
    E = {i: {} for i in S}  # E[i][v] = e_i v as {u: c}
    F = {i: {} for i in S}
    layer = [0]
    while layer:
        groups: dict = {}
        for w in layer:
            for i in S:
                mu = tuple(weights[w][k] - cartan[i][k] for k in range(rs.rank))
                raising = {}
                for j in S:
                    for u, c in E[j].get(w, {}).items():
                        for t, c2 in F[i][u].items():
                            raising[(j, t)] = raising.get((j, t), 0) + c * c2
                    if j == i and weights[w][i]:
                        raising[(j, w)] = raising.get((j, w), 0) + weights[w][i]
                raising = {k: v for k, v in raising.items() if v}
                groups.setdefault(mu, []).append((i, w, raising))
        new_layer = []
        for mu, cands in groups.items():
            rows = []  # (pivot, vec, combo)
            for i, w, raising in cands:
                vec = dict(raising)
                comb: dict = {}
                for piv, rvec, rcomb in rows:
                    f = vec.get(piv)
                    if f:
                        f = Fraction(f) / rvec[piv]
                        for k, v in rvec.items():
                            nv = vec.get(k, 0) - f * v
                            if nv:
                                vec[k] = nv
                            else:
                                vec.pop(k, None)
                        for b, v in rcomb.items():
                            comb[b] = comb.get(b, 0) + f * v
                comb = {b: v for b, v in comb.items() if v}
                if not vec:
                    F[i][w] = comb
                    continue
                b = len(weights)
                weights.append(mu)
                new_layer.append(b)
                for j in S:
                    E[j][b] = {}
                for (j, u), c in raising.items():
                    E[j][b][u] = c
                F[i][w] = {b: 1}
                rcomb = {b: 1}
                for bb, v in comb.items():
                    rcomb[bb] = rcomb.get(bb, 0) - v
                piv = min(vec, key=lambda k: (k[0], k[1]))
                rows.append((piv, vec, rcomb))
            if len(weights) > dim_cap:
                raise CapacityError(f"module dimension exceeds cap {dim_cap}")
        layer = new_layer
    dim = len(weights)
    mats: dict = {}
    for i in S:
        simple = tuple(int(k == i) for k in range(rs.rank))
        e = {(u, v): c for v, vec in E[i].items() for u, c in vec.items() if c}
        f = {(u, v): c for v, vec in F[i].items() for u, c in vec.items() if c}
        mats[alg.gen_of_root(simple)] = e
        mats[alg.gen_of_root(tuple(-c for c in simple))] = f
    for j in range(rs.rank):
        half = Fraction(rs.form[j][j], 2)
        h = {(v, v): weights[v][j] * half for v in range(dim) if weights[v][j]}
        mats[alg.cartan_gen(j + 1)] = h
    extraspecial = alg._N.extraspecial
    for root in sorted(p.levi_roots, key=sum):
        if sum(root) == 1:
            continue
        a0, b0 = extraspecial[root]
        for sign in (1, -1):
            ra = tuple(sign * c for c in a0)
            rb = tuple(sign * c for c in b0)
            n0 = alg.structure_constant(ra, rb)
            m = mat_commutator(mats[alg.gen_of_root(ra)], mats[alg.gen_of_root(rb)])
            mats[alg.gen_of_root(tuple(sign * c for c in root))] = mat_scale(m, Fraction(1, n0))
    mats = {g: m for g, m in mats.items() if m}
    if dim != predicted:
        raise RuntimeError(f"constructed dimension {dim} differs from predicted {predicted}")
    return LeviModule(p, lam, dim, weights, mats)


def check_homomorphism(module: LeviModule):
    """First Levi basis pair violating ``act([x,y]) = [act x, act y]``, or ``None``."""
    p = module.parabolic
    alg = p.algebra
    gens = [g for g in range(alg.dim) if not p.in_nminus(g)]
    for x in gens:
        mx = module.matrix(x)
        for y in gens:
            lhs = module.act(alg.bracket_basis(x, y))
            rhs = mat_commutator(mx, module.matrix(y))
            if lhs != rhs:
                return (x, y)
    return None
