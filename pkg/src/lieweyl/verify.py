"""Independent checks of computed realisations.

* :func:`lie_closure` spans the Lie algebra generated by a set of operators and
  compares its dimension with the expected one.
* :func:`action_oracle` compares the operators with the action of ``g`` on the
  generalized Verma module computed directly by PBW straightening with integer
  exponents, without any polynomial-exponent machinery.
* :func:`specialization_check` evaluates a reduced ``g u_1^{a_1}...u_n^{a_n}``
  at integer exponents in the adjoint representation.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import lcm

import numpy as np

from . import opcount
from .embedding import EmbeddingResult, simple_generator_order, split_terms
from .levimodule import LeviModule
from .parabolic import ParabolicDatum
from .polynomial import is_compatible
from .weyl import apply, omega


# -- Lie closure ---------------------------------------------------------------

@dataclass
class ClosureReport:
    basis_size: int
    expected_dim: int
    passed: bool
    bracket_depth: int
    op_count: int
    brackets: int = 0
    reason: str = ""

    def __bool__(self):
        return self.passed


class _Echelon:
    """Incremental exact row reduction over sparse coordinate dicts."""

    def __init__(self):
        self.rows = []  # (pivot, vec)

    def reduce(self, vec: dict) -> dict:
        vec = dict(vec)
        for piv, row in self.rows:
            f = vec.get(piv)
            if f:
                f = Fraction(f) / row[piv]
                for k, v in row.items():
                    nv = vec.get(k, 0) - f * v
                    if nv:
                        vec[k] = nv
                    else:
                        vec.pop(k, None)
        return vec

    def add(self, vec: dict) -> bool:
        vec = self.reduce(vec)
        if not vec:
            return False
        self.rows.append((min(vec), vec))
        return True

    def __len__(self):
        return len(self.rows)


def lie_closure(ops, expected_dim: int, max_basis: int | None = None, max_brackets: int | None = None) -> ClosureReport:
    """Dimension of the Lie algebra generated by ``ops``.

    Brackets are taken breadth-first, ``[generator, element]`` for every new
    basis element, until no new direction appears.  The run stops early once
    the span exceeds ``max_basis`` (default ``2 * expected_dim``).
    """
    ops = list(ops)
    max_basis = max_basis or 2 * expected_dim
    ech = _Echelon()
    gens = []
    with opcount.counting() as ops_done:
        for op in ops:
            if ech.add(op.coordinates()):
                gens.append(op)
        frontier = list(gens)
        depth = 1 if gens else 0
        brackets = 0
        while frontier:
            nxt = []
            for elem in frontier:
                for g in gens:
                    brackets += 1
                    if max_brackets and brackets > max_brackets:
                        return ClosureReport(len(ech), expected_dim, False, depth, ops_done(), brackets, "bracket budget exhausted")
                    b = g.bracket(elem)
                    if b.is_zero():
                        continue
                    if ech.add(b.coordinates()):
                        nxt.append(b)
                        if len(ech) > max_basis:
                            return ClosureReport(len(ech), expected_dim, False, depth + 1, ops_done(), brackets, "span exceeds basis budget")
            if nxt:
                depth += 1
            frontier = nxt
        size = len(ech)
        passed = size == expected_dim
        reason = "" if passed else f"closure has dimension {size}, expected {expected_dim}"
        return ClosureReport(size, expected_dim, passed, depth, ops_done(), brackets, reason)


# -- generalized Verma module --------------------------------------------------

class GeneralizedVermaModule:
    """``U(g) (x)_{U(p)} V`` on the basis ``u_1^{c_1}...u_n^{c_n} (x) m_j``.

    Vectors are dicts ``{(c, j): coeff}`` with ``c`` an exponent tuple.
    """

    def __init__(self, par: ParabolicDatum, module: LeviModule):
        self.par = par
        self.alg = par.algebra
        self.module = module
        self.n = par.n
        self.pos = {g: k for k, g in enumerate(par.generators)}
        self.zero = (0,) * self.n
        self._cols: dict = {}
        self._memo: dict = {}

    def _column(self, g, j):
        key = (g, j)
        col = self._cols.get(key)
        if col is None:
            col = [(i, c) for (i, jj), c in self.module.matrix(g).items() if jj == j]
            self._cols[key] = col
        return col

    def act_basis(self, x: int, c: tuple, j: int) -> dict:
        key = (x, c, j)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        out = self._act_basis(x, c, j)
        self._memo[key] = out
        return out

    def _act_basis(self, x, c, j):
        px = self.pos.get(x)
        k = next((i for i, ci in enumerate(c) if ci), None)
        if px is not None and (k is None or px <= k):
            d = list(c)
            d[px] += 1
            return {(tuple(d), j): 1}
        if k is None:
            return {(self.zero, i): v for i, v in self._column(x, j)}
        w = list(c)
        w[k] -= 1
        w = tuple(w)
        uk = self.par.generators[k]
        # x u_k w = u_k (x w) + [x, u_k] w
        out = self.act(uk, self.act_basis(x, w, j))
        for z, cz in self.alg.bracket_basis(x, uk).items():
            for key, v in self.act_basis(z, w, j).items():
                out[key] = out.get(key, 0) + cz * v
        return {key: v for key, v in out.items() if v}

    def act(self, x: int, vec: dict) -> dict:
        out: dict = {}
        for (c, j), v in vec.items():
            for key, w in self.act_basis(x, c, j).items():
                out[key] = out.get(key, 0) + v * w
        return {key: v for key, v in out.items() if v}


@dataclass
class ActionReport:
    passed: bool
    checked: int
    failure: dict | None = None

    def __bool__(self):
        return self.passed


def monomials_up_to(n: int, degree: int):
    for d in range(degree + 1):
        for combo in combinations_with_replacement(range(n), d):
            a = [0] * n
            for i in combo:
                a[i] += 1
            yield tuple(a)


def action_oracle(result: EmbeddingResult, degree_cap: int, samples: int | None = None, seed: int = 0, generators=None) -> ActionReport:
    """Compare each image with the direct module action on ``x^a (x) m_j``."""
    if degree_cap < 1:
        raise ValueError("degree_cap must be at least 1")
    par, module = result.parabolic, result.module
    verma = GeneralizedVermaModule(par, module)
    monos = list(monomials_up_to(par.n, degree_cap))
    if samples is not None and samples < len(monos):
        monos = random.Random(seed).sample(monos, samples)
    gens = generators if generators is not None else simple_generator_order(result.algebra)
    checked = 0
    for g in gens:
        op = result.images[g] if g in result.images else result.image(g)
        for a in monos:
            for j in range(module.dim):
                got = op.apply({(a, j): 1})
                want = verma.act_basis(g, a, j)
                checked += 1
                if got != want:
                    keys = set(got) | set(want)
                    diff = {k: (want.get(k, 0), got.get(k, 0)) for k in sorted(keys) if want.get(k, 0) != got.get(k, 0)}
                    return ActionReport(False, checked, {
                        "generator": result.algebra.name(g),
                        "monomial": a,
                        "vector": j,
                        "diff": diff,
                    })
    return ActionReport(True, checked)


# -- specialisation in the adjoint representation ------------------------------

def adjoint_matrices(alg) -> list:
    """Integer matrices of ``ad x`` for every basis element ``x``.

    The module basis is the root vectors together with the coroots, which
    keeps every entry integral.
    """
    rs = alg.roots
    dim = alg.dim
    # h_i = (alpha_i, alpha_i)/2 * h_i^vee; change to coroot coordinates
    half = [Fraction(rs.form[i][i], 2) for i in range(rs.rank)]
    to_co = {}
    for i in range(rs.rank):
        to_co[alg.cartan_gen(i + 1)] = half[i]
    mats = []
    for x in range(dim):
        m = np.zeros((dim, dim), dtype=np.int64)
        for y in range(dim):
            scale_y = Fraction(1) / to_co[y] if y in to_co else 1
            for z, c in alg.table[x][y].items():
                v = Fraction(c) * scale_y
                if z in to_co:
                    v *= to_co[z]
                assert v.denominator == 1
                m[z, y] = int(v)
        mats.append(m)
    return mats


def specialization_check(alg, par: ParabolicDatum, g: int, reduced, exponents, ad=None) -> bool:
    """Check ``g u^a`` against its reduced form at each integer vector in ``exponents``."""
    ad = ad if ad is not None else adjoint_matrices(alg)
    dim = alg.dim
    ident = np.eye(dim, dtype=np.int64)
    terms = list(split_terms(par, reduced))
    cache: dict = {}

    def power(x, e):
        key = (x, e)
        if key not in cache:
            cache[key] = np.linalg.matrix_power(ad[x], e) if e else ident
        return cache[key]

    for a in exponents:
        direct = ad[g].copy()
        for k, u in enumerate(par.generators):
            direct = direct @ power(u, a[k])
        parts = {}
        for p, b, f in terms:
            coef = Fraction(p.evaluate(a))
            if not coef:
                continue
            if any(a[k] - b[k] < 0 for k in range(par.n)):
                return False  # compatibility would force coef == 0
            m = ident
            for k, u in enumerate(par.generators):
                m = m @ power(u, a[k] - b[k])
            if f is not None:
                m = m @ ad[f]
            parts.setdefault(coef.denominator, []).append((coef.numerator, m))
        L = lcm(*parts) if parts else 1
        total = np.zeros((dim, dim), dtype=np.int64)
        for d, items in parts.items():
            for num, m in items:
                total += (L // d) * num * m
        if np.abs(total).max(initial=0) > 2**50 or np.abs(direct).max(initial=0) > 2**50:
            raise OverflowError("matrix entries too large for exact int64 comparison")
        if not np.array_equal(total, L * direct):
            return False
    return True


def exhaustive_exponents(n: int, top: int = 3):
    return product(range(top + 1), repeat=n)


# -- omega contract -------------------------------------------------------------

@dataclass
class ContractReport:
    passed: bool
    checked: int
    failure: dict | None = None

    def __bool__(self):
        return self.passed


def omega_contract(result: EmbeddingResult, samples: int = 200, seed: int = 0, top: int = 6) -> ContractReport:
    """Check ``omega(data) . x^a = sum_i p_i(a) x^(a - b_i)`` at random ``a``.

    ``data`` is every group of terms sharing a trailing factor in every
    reduced product of the build.  Terms whose shifted exponent would be
    negative must have a vanishing coefficient.  Each ``(p, b)`` is also
    checked for compatibility.
    """
    rng = random.Random(seed)
    n = result.n
    checked = 0
    for g in sorted(result.reduced):
        groups: dict = {}
        for p, b, f in split_terms(result.parabolic, result.reduced[g]):
            if not is_compatible(p, b):
                return ContractReport(False, checked, {"generator": result.algebra.name(g), "b": b, "reason": "incompatible"})
            groups.setdefault(f, []).append((p, b))
        for f, data in sorted(groups.items(), key=lambda kv: (kv[0] is None, kv[0] or 0)):
            w = omega(n, data)
            for _ in range(samples):
                a = tuple(rng.randint(0, top) for _ in range(n))
                got = apply(w, {a: 1})
                want: dict = {}
                for p, b in data:
                    c = p.evaluate(a)
                    if not c:
                        continue
                    e = tuple(x - y for x, y in zip(a, b))
                    if min(e) < 0:
                        return ContractReport(False, checked, {"generator": result.algebra.name(g), "a": a, "b": b, "reason": "negative exponent with nonzero coefficient"})
                    want[e] = want.get(e, 0) + c
                want = {k: v for k, v in want.items() if v}
                checked += 1
                if got != want:
                    return ContractReport(False, checked, {"generator": result.algebra.name(g), "a": a, "expected": want, "got": got})
    return ContractReport(True, checked)
