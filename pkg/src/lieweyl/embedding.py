"""Differential-operator realisations ``g -> W_n (x) End V_lambda(l)``.

For a generator ``g`` the product ``g u_1^{a_1} ... u_n^{a_n}`` is rewritten
into a sum of terms ``p_i(a) u_1^{a_1 - b_i1} ... u_n^{a_n - b_in} f_i`` with
``f_i`` outside the opposite nilradical (or absent).  Each term contributes
``omega(p_i, b_i) (x) act(f_i)``.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import opcount
from .levimodule import LeviModule, build_irreducible, trivial_module
from .liealgebra import ChevalleyAlgebra, simple_lie_algebra
from .parabolic import ParabolicDatum, make_parabolic
from .polynomial import CompatibilityError, Poly, divide_by_falling_factorials
from .uea import UEAElement, generator_rank, reduce
from .weyl import WeylMatrixOperator, WeylOperator, omega


class ExtractionError(RuntimeError):
    pass


def generic_monomial(par: ParabolicDatum) -> tuple:
    return tuple((g, Poly.var(k)) for k, g in enumerate(par.generators))


def generic_product(alg: ChevalleyAlgebra, par: ParabolicDatum, g: int) -> UEAElement:
    """Reduced form of ``g u_1^{a_1} ... u_n^{a_n}``."""
    rank = generator_rank(alg, par.generators)
    start = UEAElement.monomial(((g, Poly.const(1)),) + generic_monomial(par))
    return reduce(alg, start, rank)


def split_terms(par: ParabolicDatum, e: UEAElement):
    """Yield ``(p, b, f)`` for every term; ``f`` is ``None`` for a trailing 1."""
    n = par.n
    gens = par.generators
    for mono, p in e.terms.items():
        factors = list(mono)
        f = None
        if len(factors) == n + 1:
            f, fe = factors.pop()
            if fe != 1 or par.in_nminus(f):
                raise ExtractionError("unexpected trailing factor")
        if len(factors) != n:
            raise ExtractionError("term is not of the form u-word times a generator")
        b = []
        for k, (gk, ek) in enumerate(factors):
            if gk != gens[k]:
                raise ExtractionError("u-factors out of order")
            shift = ek - Poly.var(k)
            c = shift.constant_value()
            if c is None:
                raise ExtractionError(f"exponent of u_{k + 1} is not a_{k + 1} plus a constant")
            b.append(-int(c))
        yield p, tuple(b), f


def extract_operator(par: ParabolicDatum, e: UEAElement, module: LeviModule | None = None) -> WeylMatrixOperator:
    """Assemble ``sum_i omega(p_i, b_i) (x) act(f_i)`` from a reduced element."""
    n = par.n
    if module is None:
        module = trivial_module(par)
    dim = module.dim
    by_factor: dict = {}
    for p, b, f in split_terms(par, e):
        try:
            divide_by_falling_factorials(p, b)
        except CompatibilityError as exc:
            raise ExtractionError(str(exc)) from exc
        by_factor.setdefault(f, []).append((p, b))
    entries: dict = {}
    for f, data in by_factor.items():
        if f is None:
            mat = {(i, i): 1 for i in range(dim)}
        else:
            mat = module.matrix(f)
        if not mat:
            continue
        w = omega(n, data)
        if w.is_zero():
            continue
        for (i, j), c in mat.items():
            term = w.scale(c)
            entries[(i, j)] = entries[(i, j)] + term if (i, j) in entries else term
    return WeylMatrixOperator(n, dim, entries)


def simple_generator_order(alg: ChevalleyAlgebra) -> list:
    """``g_1, g_{-1}, g_2, g_{-2}, ..., h_1, ..., h_r``."""
    out = []
    for i in range(1, alg.rank + 1):
        out += [alg.root_gen(i), alg.root_gen(-i)]
    out += [alg.cartan_gen(i) for i in range(1, alg.rank + 1)]
    return out


@dataclass
class EmbeddingResult:
    algebra: ChevalleyAlgebra
    parabolic: ParabolicDatum
    module: LeviModule
    images: dict  # basis position -> WeylMatrixOperator
    reduced: dict = field(repr=False)  # basis position -> UEAElement
    op_counts: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def n(self) -> int:
        return self.parabolic.n

    @property
    def type(self) -> str:
        return str(self.algebra.roots.type)

    @property
    def total_ops(self) -> int:
        return sum(self.op_counts.values())

    def image(self, g: int) -> WeylMatrixOperator:
        """Image of any basis element, computed on demand by the same pipeline."""
        op = self.images.get(g)
        if op is None:
            red = generic_product(self.algebra, self.parabolic, g)
            op = extract_operator(self.parabolic, red, self.module)
            self.images[g] = op
            self.reduced[g] = red
        return op

    def image_of(self, element: dict) -> WeylMatrixOperator:
        out = WeylMatrixOperator(self.n, self.module.dim)
        for g, c in element.items():
            out = out + self.image(g).scale(c)
        return out

    def simple_images(self) -> list:
        return [self.images[g] for g in simple_generator_order(self.algebra)[: 2 * self.algebra.rank]]


def embed(type_name, crossed, lam=None, module: LeviModule | None = None, dim_cap: int = 1000) -> EmbeddingResult:
    """Images of all simple Chevalley-Weyl generators and Cartan elements."""
    alg = type_name if isinstance(type_name, ChevalleyAlgebra) else simple_lie_algebra(type_name)
    par = make_parabolic(alg, crossed)
    if par.n == 0:
        raise ValueError("at least one simple root must be crossed out")
    if module is None:
        if lam is None or not any(Fraction(c) for c in lam):
            module = trivial_module(par)
        else:
            module = build_irreducible(par, lam, dim_cap=dim_cap)
    images, reduced, counts = {}, {}, {}
    t0 = time.perf_counter()
    for g in simple_generator_order(alg):
        with opcount.counting() as ops:
            red = generic_product(alg, par, g)
            images[g] = extract_operator(par, red, module)
        reduced[g] = red
        counts[alg.name(g)] = ops()
    return EmbeddingResult(alg, par, module, images, reduced, counts, time.perf_counter() - t0)
