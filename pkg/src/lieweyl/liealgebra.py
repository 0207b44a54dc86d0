"""Chevalley-Weyl basis and structure constants.

Basis elements are addressed by integer positions ``0..dim-1`` in the order

    g_{-N}, ..., g_{-1}, h_1, ..., h_r, g_1, ..., g_N

which is also the row/column order of the printed bracket table.  ``h_i`` is
the Cartan element dual to the simple root ``alpha_i`` under the invariant
form, so ``[h_i, g_a] = (alpha_i, a) g_a`` and ``[g_a, g_{-a}]`` is the coroot
``2/(a, a) * sum_i c_i h_i`` for ``a = sum_i c_i alpha_i``.

Root-vector structure constants ``N(a, b)`` come from the extraspecial-pair
recursion: ``N(alpha_0, beta_0) = +(p + 1)`` for every extraspecial pair, and
all other constants are forced by the Jacobi identity.  With this sign choice
the G2 table coincides entry-by-entry with the published one.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .rootsystem import RootSystem, build_root_system


class BasisElement(NamedTuple):
    kind: str  # "root" or "cartan"
    index: int  # signed root index, or 1-based simple index

    def name(self) -> str:
        return f"g_{{{self.index}}}" if self.kind == "root" else f"h_{{{self.index}}}"


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _neg(a):
    return tuple(-x for x in a)


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _is_positive(a):
    return any(x > 0 for x in a)


class _StructureConstants:
    """Memoised ``N(r, s)`` for roots ``r, s`` with ``r + s`` a root."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.cache = {}
        self.extraspecial = {}
        for xi in rs.positive_roots:
            if sum(xi) == 1:
                continue
            for a in rs.positive_roots:
                b = _sub(xi, a)
                if rs.is_root(b) and _is_positive(b):
                    self.extraspecial[xi] = (a, b)
                    break

    def length(self, a):
        return self.rs.pairing(a, a)

    def string_p(self, r, s):
        """Largest p with ``s - p r`` a root."""
        p = 0
        cur = _sub(s, r)
        while self.rs.is_root(cur):
            p += 1
            cur = _sub(cur, r)
        return p

    def __call__(self, r, s):
        key = (r, s)
        val = self.cache.get(key)
        if val is None:
            val = self._compute(r, s)
            self.cache[key] = val
        return val

    def _compute(self, r, s):
        rs = self.rs
        t = _neg(_add(r, s))
        pr, ps = _is_positive(r), _is_positive(s)
        if pr and ps:
            xi = _add(r, s)
            a0, b0 = self.extraspecial[xi]
            if r == a0:
                return self.string_p(r, s) + 1
            if s == a0:
                return -(self.string_p(s, r) + 1)
            if rs.index(r) > rs.index(s):
                return -self(s, r)
            total = Fraction(0)
            n0 = self(a0, b0)
            d = _sub(s, a0)
            if rs.is_root(d):
                total += Fraction(self(s, _neg(a0)) * self(r, _neg(b0)), self.length(d))
            d = _sub(r, a0)
            if rs.is_root(d):
                total += Fraction(self(_neg(a0), r) * self(s, _neg(b0)), self.length(d))
            val = Fraction(self.length(xi), n0) * total
            assert val.denominator == 1
            return int(val)
        if not pr and not ps:
            return -self(_neg(r), _neg(s))
        # one of r, s positive; use N(r,s)/(t,t) = N(s,t)/(r,r) = N(t,r)/(s,s)
        if pr:
            if _is_positive(t):
                val = Fraction(self.length(t), self.length(s)) * self(t, r)
            else:
                val = Fraction(self.length(t), self.length(r)) * self(s, t)
        else:
            if _is_positive(t):
                val = Fraction(self.length(t), self.length(r)) * self(s, t)
            else:
                val = Fraction(self.length(t), self.length(s)) * self(t, r)
        assert val.denominator == 1
        return int(val)


class ChevalleyAlgebra:
    """Simple Lie algebra with its Chevalley-Weyl bracket table."""

    def __init__(self, roots: RootSystem, table=None):
        self.roots = roots
        self.rank = roots.rank
        self.num_positive = roots.num_positive
        self.dim = roots.dimension
        n, r = self.num_positive, self.rank
        self.basis = tuple(
            [BasisElement("root", k) for k in range(-n, 0)]
            + [BasisElement("cartan", i) for i in range(1, r + 1)]
            + [BasisElement("root", k) for k in range(1, n + 1)]
        )
        self._N = _StructureConstants(roots)
        self.table = table if table is not None else self._build_table()

    # -- addressing -------------------------------------------------------
    def root_gen(self, k: int) -> int:
        """Basis position of ``g_k`` (signed root index)."""
        n, r = self.num_positive, self.rank
        return n + k if k < 0 else n + r + k - 1

    def cartan_gen(self, i: int) -> int:
        """Basis position of ``h_i`` (1-based)."""
        return self.num_positive + i - 1

    def is_cartan(self, g: int) -> bool:
        return self.basis[g].kind == "cartan"

    def root_of(self, g: int):
        """Root of a basis element; the zero vector for Cartan elements."""
        e = self.basis[g]
        if e.kind == "cartan":
            return (0,) * self.rank
        return self.roots.root(e.index)

    def gen_of_root(self, root) -> int:
        return self.root_gen(self.roots.index(root))

    def name(self, g: int) -> str:
        return self.basis[g].name()

    def structure_constant(self, a, b) -> int:
        return self._N(tuple(a), tuple(b))

    def coroot(self, root) -> dict:
        """``[g_a, g_{-a}]`` in the ``h_i`` basis."""
        scale = Fraction(2, self.roots.pairing(root, root))
        return {self.cartan_gen(i + 1): scale * c for i, c in enumerate(root) if c}

    # -- table ------------------------------------------------------------
    def _build_table(self):
        rs = self.roots
        dim = self.dim
        table = [[None] * dim for _ in range(dim)]
        simple = [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]
        for x in range(dim):
            ex = self.basis[x]
            for y in range(dim):
                ey = self.basis[y]
                out = {}
                if ex.kind == "cartan" and ey.kind == "cartan":
                    pass
                elif ex.kind == "cartan":
                    c = rs.pairing(simple[ex.index - 1], rs.root(ey.index))
                    if c:
                        out[y] = c
                elif ey.kind == "cartan":
                    c = rs.pairing(simple[ey.index - 1], rs.root(ex.index))
                    if c:
                        out[x] = -c
                else:
                    a, b = rs.root(ex.index), rs.root(ey.index)
                    s = _add(a, b)
                    if not any(s):
                        out = self.coroot(a)
                    elif rs.is_root(s):
                        out[self.gen_of_root(s)] = self._N(a, b)
                table[x][y] = out
        return table

    def bracket_basis(self, x: int, y: int) -> dict:
        return self.table[x][y]

    def bracket(self, u: dict, v: dict) -> dict:
        """Bilinear extension of the table to sparse elements ``{pos: coeff}``."""
        out = {}
        for x, cx in u.items():
            row = self.table[x]
            for y, cy in v.items():
                for z, cz in row[y].items():
                    val = out.get(z, 0) + cx * cy * cz
                    if val:
                        out[z] = val
                    else:
                        out.pop(z, None)
        return out

    def format_element(self, u: dict, latex: bool = False) -> str:
        return format_element(self, u, latex=latex)


def compute_structure_constants(roots) -> ChevalleyAlgebra:
    if not isinstance(roots, RootSystem):
        roots = build_root_system(roots)
    return ChevalleyAlgebra(roots)


_ALGEBRA_CACHE: dict = {}


def simple_lie_algebra(name) -> ChevalleyAlgebra:
    """Cached ``ChevalleyAlgebra`` for a type name such as ``"G2"``."""
    key = str(name).replace("_", "").upper()
    alg = _ALGEBRA_CACHE.get(key)
    if alg is None:
        alg = compute_structure_constants(build_root_system(key))
        _ALGEBRA_CACHE[key] = alg
    return alg


def bracket(alg: ChevalleyAlgebra, x: dict, y: dict) -> dict:
    return alg.bracket(x, y)


@dataclass
class JacobiReport:
    passed: bool
    triples_checked: int
    failure: tuple | None = None

    def __bool__(self):
        return self.passed


def _jacobi_defect(alg, x, y, z):
    t = alg.table
    out = {}
    for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
        for w, cw in t[b][c].items():
            for v, cv in t[a][w].items():
                out[v] = out.get(v, 0) + cw * cv
    return {k: v for k, v in out.items() if v}


def verify_jacobi(alg: ChevalleyAlgebra, samples: int | None = None, seed: int = 0) -> JacobiReport:
    """Check the Jacobi identity on all basis triples, or on random ones."""
    dim = alg.dim
    if samples is None:
        triples = ((x, y, z) for x in range(dim) for y in range(x + 1, dim) for z in range(y + 1, dim))
    else:
        rng = random.Random(seed)
        triples = ((rng.randrange(dim), rng.randrange(dim), rng.randrange(dim)) for _ in range(samples))
    count = 0
    for x, y, z in triples:
        count += 1
        if _jacobi_defect(alg, x, y, z):
            return JacobiReport(False, count, (x, y, z))
    # antisymmetry is not implied by the cyclic sums above
    for x in range(dim):
        for y in range(x, dim):
            a, b = alg.table[x][y], alg.table[y][x]
            if a != {k: -v for k, v in b.items()}:
                return JacobiReport(False, count, (x, y))
    return JacobiReport(True, count)


def format_coefficient(c, latex=False) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    if latex:
        sign = "-" if c < 0 else ""
        return f"{sign}\\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"
    return f"{c.numerator}/{c.denominator}"


def format_element(alg: ChevalleyAlgebra, u: dict, latex: bool = False) -> str:
    """Render ``u`` as e.g. ``-h_{1}-2/3h_{2}`` (terms in basis order)."""
    if not u:
        return "0"
    parts = []
    for g in sorted(u):
        c = Fraction(u[g])
        name = alg.name(g)
        if c == 1:
            s = name
        elif c == -1:
            s = "-" + name
        else:
            s = format_coefficient(c, latex) + name
        if parts and not s.startswith("-"):
            s = "+" + s
        parts.append(s)
    return "".join(parts)


def bracket_table_text(alg: ChevalleyAlgebra, latex: bool = False) -> str:
    """The full bracket table; row ``x`` column ``y`` holds ``[x, y]``."""
    names = [alg.name(g) for g in range(alg.dim)]
    rows = []
    for x in range(alg.dim):
        rows.append([names[x]] + [format_element(alg, alg.table[x][y], latex) for y in range(alg.dim)])
    header = ["[.,.]"] + names
    if latex:
        lines = ["\\begin{array}{c|" + "c" * alg.dim + "}", "[\\bullet,\\bullet] & " + " & ".join(names) + "\\\\\\hline"]
        lines += [" & ".join(r) + "\\\\" for r in rows]
        lines.append("\\end{array}")
        return "\n".join(lines)
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(len(header))]
    fmt = lambda r: "  ".join(s.rjust(w) for s, w in zip(r, widths))
    return "\n".join([fmt(header)] + [fmt(r) for r in rows])
