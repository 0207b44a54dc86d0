"""The Weyl algebra W_n over Q and its matrix-coefficient extension.

A :class:`WeylOperator` stores normal-ordered terms ``c * x^A d^B`` keyed by
``(A, B)`` with ``A, B`` dense exponent tuples of length ``n``.  Printing
orders terms by descending total degree, ties broken by comparing the
exponent vector ``(A_1..A_n, B_1..B_n)`` from the last entry (``d_n``) down.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb, perm

from .opcount import count
from .polynomial import Poly, divide_by_falling_factorials


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _accumulate(out: dict, key, c) -> None:
    v = out.get(key)
    if v is None:
        if c:
            out[key] = c
        return
    v = _norm(v + c)
    if v:
        out[key] = v
    else:
        del out[key]


class WeylOperator:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {k: _norm(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def x(cls, n: int, i: int) -> "WeylOperator":
        """Multiplication by ``x_{i+1}``."""
        a = tuple(int(j == i) for j in range(n))
        return cls(n, {(a, (0,) * n): 1})

    @classmethod
    def d(cls, n: int, i: int) -> "WeylOperator":
        """The derivation ``d_{i+1}``."""
        b = tuple(int(j == i) for j in range(n))
        return cls(n, {((0,) * n, b): 1})

    @classmethod
    def scalar(cls, n: int, c) -> "WeylOperator":
        return cls(n, {((0,) * n, (0,) * n): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, WeylOperator):
            return self.n == other.n and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, c)
        count(len(other.terms))
        return WeylOperator(self.n, out)

    def __neg__(self):
        return WeylOperator(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "WeylOperator":
        c = _norm(c)
        if not c:
            return WeylOperator(self.n)
        count(len(self.terms))
        return WeylOperator(self.n, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, WeylOperator):
            return self.scale(other)
        return weyl_mul(self, other)

    def __rmul__(self, c):
        return self.scale(c)

    def bracket(self, other) -> "WeylOperator":
        return weyl_mul(self, other) - weyl_mul(other, self)

    def __repr__(self):
        return f"WeylOperator({format_weyl(self, latex=False)})"

    def __str__(self):
        return format_weyl(self, latex=False)


def weyl_mul(u: WeylOperator, v: WeylOperator) -> WeylOperator:
    """Normal-ordered product using ``d^B x^C = sum_k C(B,k) C!/(C-k)! x^(C-k) d^(B-k)``."""
    n = u.n
    out: dict = {}
    ops = 0
    for (a, b), c1 in u.terms.items():
        for (cc, d), c2 in v.terms.items():
            idx = [i for i in range(n) if b[i] and cc[i]]
            if not idx:
                key = (tuple(x + y for x, y in zip(a, cc)), tuple(x + y for x, y in zip(b, d)))
                _accumulate(out, key, c1 * c2)
                ops += 2
                continue
            for ks in product(*(range(min(b[i], cc[i]) + 1) for i in idx)):
                coef = c1 * c2
                xs = [x + y for x, y in zip(a, cc)]
                ds = [x + y for x, y in zip(b, d)]
                for i, k in zip(idx, ks):
                    if k:
                        coef *= comb(b[i], k) * perm(cc[i], k)
                        xs[i] -= k
                        ds[i] -= k
                _accumulate(out, (tuple(xs), tuple(ds)), coef)
                ops += 2 + len(idx)
    count(ops)
    return WeylOperator(n, out)


# -- action on polynomials ---------------------------------------------------

def apply(op: WeylOperator, f: dict) -> dict:
    """The action on ``f = {exponent tuple: coeff}``: ``d_i`` differentiates."""
    out: dict = {}
    for (a, b), c in op.terms.items():
        for e, fc in f.items():
            coef = c * fc
            ok = True
            for i in range(op.n):
                if b[i]:
                    if e[i] < b[i]:
                        ok = False
                        break
                    coef *= perm(e[i], b[i])
            if not ok:
                continue
            key = tuple(ei - bi + ai for ei, bi, ai in zip(e, b, a))
            _accumulate(out, key, coef)
    return out


# -- omega -------------------------------------------------------------------

_EULER_CACHE: dict = {0: {0: 1}}


def euler_power(m: int) -> dict:
    """``(x d)^m`` in one variable as ``{j: c}`` meaning ``sum c x^j d^j``."""
    hit = _EULER_CACHE.get(m)
    if hit is not None:
        return hit
    prev = euler_power(m - 1)
    # (x d) x^j d^j = x^{j+1} d^{j+1} + j x^j d^j
    out: dict = {}
    for j, c in prev.items():
        out[j + 1] = out.get(j + 1, 0) + c
        if j:
            out[j] = out.get(j, 0) + j * c
    _EULER_CACHE[m] = out
    return out


def _omega_single(n: int, p: Poly, b) -> dict:
    bpos = [bk if bk > 0 else 0 for bk in b]
    raise_ = [-bk if bk < 0 else 0 for bk in b]
    if any(bpos):
        q = divide_by_falling_factorials(p, b)
        # d^{b+} acts first, so the Euler part sees exponents already lowered
        q = q.shift_many({k: bk for k, bk in enumerate(bpos) if bk})
    else:
        q = p
    out: dict = {}
    for mono, c in q.terms.items():
        per_var = [[(0, 1)] for _ in range(n)]
        for v, e in mono:
            per_var[v] = list(euler_power(e).items())
        active = [i for i in range(n) if len(per_var[i]) > 1 or per_var[i][0][0]]
        for choice in product(*(per_var[i] for i in active)):
            xs = list(raise_)
            ds = list(bpos)
            coef = c
            for i, (j, cj) in zip(active, choice):
                xs[i] += j
                ds[i] += j
                coef *= cj
            _accumulate(out, (tuple(xs), tuple(ds)), coef)
    count(len(out))
    return out


def omega(n: int, data) -> WeylOperator:
    """The operator sending ``x^a`` to ``sum_i p_i(a) x^(a - b_i)``.

    ``data`` is an iterable of ``(p, b)`` with ``p`` a
    :class:`~lieweyl.polynomial.Poly` that is ``b``-compatible.
    """
    out: dict = {}
    for p, b in data:
        for k, c in _omega_single(n, p, b).items():
            _accumulate(out, k, c)
    return WeylOperator(n, out)


# -- printing ----------------------------------------------------------------

def term_sort_key(key):
    a, b = key
    vec = a + b
    return (-sum(vec), tuple(-e for e in reversed(vec)))


def _coef_text(c, latex):
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    if latex:
        sign = "-" if c < 0 else ""
        return f"{sign}\\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"
    return f"{c.numerator}/{c.denominator}"


def _monomial_text(a, b, latex):
    parts = []
    for i, e in enumerate(a):
        if e:
            if latex:
                parts.append(f"x_{{{i + 1}}}" + (f"^{{{e}}}" if e > 1 else ""))
            else:
                parts.append(f"x{i + 1}" + (f"^{e}" if e > 1 else ""))
    for i, e in enumerate(b):
        if e:
            if latex:
                parts.append(f"\\partial_{{{i + 1}}}" + (f"^{{{e}}}" if e > 1 else ""))
            else:
                parts.append(f"d{i + 1}" + (f"^{e}" if e > 1 else ""))
    return ("" if latex else " ").join(parts)


def format_weyl(op: WeylOperator, latex: bool = True) -> str:
    """``-3x_{1}\\partial_{4}^{2}-2x_{3}\\partial_{4}+x_{5}`` or ``-3 x1 d4^2 - 2 x3 d4 + x5``."""
    if not op.terms:
        return "0"
    pieces = []
    for key in sorted(op.terms, key=term_sort_key):
        c = Fraction(op.terms[key])
        mono = _monomial_text(*key, latex)
        neg = c < 0
        mag = -c if neg else c
        if not mono:
            body = _coef_text(mag, latex)
        elif mag == 1:
            body = mono
        else:
            body = _coef_text(mag, latex) + ("" if latex else " ") + mono
        if latex:
            pieces.append(("-" if neg else ("+" if pieces else "")) + body)
        elif pieces:
            pieces.append(("- " if neg else "+ ") + body)
        else:
            pieces.append(("-" if neg else "") + body)
    return "".join(pieces) if latex else " ".join(pieces)


# -- matrix coefficients -----------------------------------------------------

class WeylMatrixOperator:
    """Element of ``W_n (x) End V`` as ``{(i, j): WeylOperator}``.

    The entry at ``(i, j)`` is the Weyl-algebra coefficient of the matrix unit
    ``E_ij`` (which sends basis vector ``m_j`` to ``m_i``).
    """

    __slots__ = ("n", "dim", "entries")

    def __init__(self, n: int, dim: int, entries=None):
        self.n = n
        self.dim = dim
        self.entries = {k: w for k, w in (entries or {}).items() if not w.is_zero()}

    @classmethod
    def from_weyl(cls, op: WeylOperator, dim: int = 1) -> "WeylMatrixOperator":
        return cls(op.n, dim, {(i, i): op for i in range(dim)})

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, WeylMatrixOperator):
            return NotImplemented
        return self.n == other.n and self.dim == other.dim and self.entries == other.entries

    def __add__(self, other):
        out = dict(self.entries)
        for k, w in other.entries.items():
            out[k] = out[k] + w if k in out else w
        return WeylMatrixOperator(self.n, self.dim, out)

    def __neg__(self):
        return WeylMatrixOperator(self.n, self.dim, {k: -w for k, w in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "WeylMatrixOperator":
        return WeylMatrixOperator(self.n, self.dim, {k: w.scale(c) for k, w in self.entries.items()})

    def __mul__(self, other):
        if not isinstance(other, WeylMatrixOperator):
            return self.scale(other)
        by_row: dict = {}
        for (j, l), w in other.entries.items():
            by_row.setdefault(j, []).append((l, w))
        out: dict = {}
        for (i, j), w1 in self.entries.items():
            for l, w2 in by_row.get(j, ()):
                prod = weyl_mul(w1, w2)
                out[(i, l)] = out[(i, l)] + prod if (i, l) in out else prod
        return WeylMatrixOperator(self.n, self.dim, out)

    def bracket(self, other) -> "WeylMatrixOperator":
        return self * other - other * self

    def coordinates(self) -> dict:
        """Flat coordinates ``{(i, j, A, B): c}``."""
        return {(i, j, a, b): c for (i, j), w in self.entries.items() for (a, b), c in w.terms.items()}

    def scalar_part(self):
        """The Weyl operator if this is ``w (x) id``, else ``None``."""
        if self.dim == 1:
            return self.entries.get((0, 0), WeylOperator(self.n))
        diag = [self.entries.get((i, i)) for i in range(self.dim)]
        if len(self.entries) == self.dim and all(d is not None and d == diag[0] for d in diag):
            return diag[0]
        return None

    def apply(self, f: dict) -> dict:
        """Act on ``{(exponent tuple, j): coeff}`` in ``S_n (x) V``."""
        by_col: dict = {}
        for e, j in f:
            by_col.setdefault(j, {})[e] = f[(e, j)]
        out: dict = {}
        for (i, j), w in self.entries.items():
            col = by_col.get(j)
            if not col:
                continue
            for e, c in apply(w, col).items():
                _accumulate(out, (e, i), c)
        return out

    def __repr__(self):
        return f"WeylMatrixOperator({format_weyl_matrix(self, latex=False)})"


def format_weyl_matrix(op: WeylMatrixOperator, latex: bool = True) -> str:
    w = op.scalar_part()
    if w is not None:
        ident = "\\otimes \\mathrm{id}" if latex else "(x) id"
        body = format_weyl(w, latex)
        return f"({body}){ident}" if latex else f"({body}) {ident}"
    parts = []
    for (i, j) in sorted(op.entries):
        body = format_weyl(op.entries[(i, j)], latex)
        unit = f"\\otimes E_{{{i + 1},{j + 1}}}" if latex else f"(x) E[{i + 1},{j + 1}]"
        parts.append(f"({body}){unit}" if latex else f"({body}) {unit}")
    if not parts:
        return "0"
    return "+".join(parts) if latex else " + ".join(parts)
