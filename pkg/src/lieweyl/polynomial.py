"""Sparse multivariate polynomials over Q in the exponent variables a_1..a_n.

A monomial is a tuple of ``(variable, power)`` pairs sorted by variable, with
variables numbered from 0 (``a_1`` is variable 0).  The constant monomial is
``()``.  Coefficients are ``int`` or ``Fraction``; zero coefficients are never
stored, so structural equality is polynomial equality.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import factorial

from .opcount import count, counting


class CompatibilityError(ArithmeticError):
    """Division by falling factorials left a nonzero remainder."""


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class Poly:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def const(cls, c) -> "Poly":
        c = _norm(c)
        return cls({(): c} if c else {})

    @classmethod
    def var(cls, i: int, shift=0) -> "Poly":
        """``a_{i+1} + shift``."""
        t = {((i, 1),): 1}
        if shift:
            t[()] = shift
        return cls(t)

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self):
        """Value of a constant polynomial, ``None`` otherwise."""
        if not self.terms:
            return 0
        if len(self.terms) == 1 and () in self.terms:
            return self.terms[()]
        return None

    def nonneg_int(self):
        """The value if this is a constant nonnegative integer, else ``None``."""
        c = self.constant_value()
        if c is None or c < 0:
            return None
        if isinstance(c, Fraction):
            return c.numerator if c.denominator == 1 else None
        return c

    def variables(self):
        return sorted({v for m in self.terms for v, _ in m})

    def degree_in(self, i: int) -> int:
        return max((e for m in self.terms for v, e in m if v == i), default=0)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = _norm(v + c)
                if v:
                    out[m] = v
                else:
                    del out[m]
        count(len(other.terms))
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Poly":
        c = _norm(c)
        if not c:
            return Poly()
        if c == 1:
            return self
        count(len(self.terms))
        return Poly({m: _norm(v * c) for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return Poly()
        if len(a) == 1 and () in a:
            return other.scale(a[()])
        if len(b) == 1 and () in b:
            return self.scale(b[()])
        out = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        count(2 * len(a) * len(b))
        return Poly({m: _norm(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, c):
        return self.scale(Fraction(1) / Fraction(c))

    # -- equality / hashing --------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)):
                return self.terms == ({(): other} if other else {})
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash(frozenset(self.terms.items()))
        return h

    def __repr__(self):
        return f"Poly({format_poly(self)})"

    def __str__(self):
        return format_poly(self)

    # -- evaluation / substitution -----------------------------------------
    def evaluate(self, values):
        """Evaluate at ``values[i]`` for variable ``i`` (sequence or mapping)."""
        total = 0
        for m, c in self.terms.items():
            t = c
            for v, e in m:
                t = t * values[v] ** e
            total += t
        return _norm(total)

    def substitute(self, var: int, value) -> "Poly":
        """Replace ``a_{var+1}`` by ``value``, a number or another Poly."""
        if not isinstance(value, Poly):
            out = Poly()
            for m, c in self.terms.items():
                rest = tuple((v, e) for v, e in m if v != var)
                e = sum(e for v, e in m if v == var)
                out = out + Poly({rest: _norm(c * Fraction(value) ** e)})
            return out
        out = Poly()
        for m, c in self.terms.items():
            rest = tuple((v, e) for v, e in m if v != var)
            e = sum(e for v, e in m if v == var)
            out = out + Poly({rest: c}) * value**e
        return out

    def shift(self, var: int, c) -> "Poly":
        """Replace ``a_{var+1}`` by ``a_{var+1} + c``."""
        if not c:
            return self
        lin = Poly.var(var, c)
        out = Poly()
        for m, coef in self.terms.items():
            rest = tuple((v, e) for v, e in m if v != var)
            e = sum(e for v, e in m if v == var)
            out = out + Poly({rest: coef}) * (lin**e)
        return out

    def shift_many(self, shifts) -> "Poly":
        out = self
        for var, c in shifts.items():
            out = out.shift(var, c)
        return out

    def to_json(self):
        return [[[list(p) for p in m], _coef_str(c)] for m, c in sorted(self.terms.items())]


def _coef_str(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


_BINOM_CACHE: dict = {}
_BINOM_LOCK = threading.Lock()


def binomial_poly(p: Poly, c: int) -> Poly:
    """``p (p-1) ... (p-c+1) / c!`` as a polynomial."""
    if c < 0:
        raise ValueError("c must be nonnegative")
    key = (p, c)
    hit = _BINOM_CACHE.get(key)
    if hit is not None:
        # charge the original cost so op counts do not depend on cache state
        out, cost = hit
        count(cost)
        return out
    with counting() as cost:
        out = Poly.const(1)
        for i in range(c):
            out = out * (p - i)
        out = out.scale(Fraction(1, factorial(c)))
    with _BINOM_LOCK:
        _BINOM_CACHE[key] = (out, cost())
    return out


def falling_factorial(var: int, b: int) -> Poly:
    """``a (a-1) ... (a-b+1)`` in variable ``var``."""
    out = Poly.const(1)
    for j in range(b):
        out = out * Poly.var(var, -j)
    return out


def _divide_linear(p: Poly, var: int, root) -> Poly:
    """Exact division of ``p`` by ``a_{var+1} - root``."""
    # group by power of the variable: p = sum_e c_e a^e
    groups: dict = {}
    for m, c in p.terms.items():
        e = 0
        rest = []
        for v, k in m:
            if v == var:
                e = k
            else:
                rest.append((v, k))
        groups.setdefault(e, {})[tuple(rest)] = c
    top = max(groups, default=0)
    quotient = {}
    carry: dict = {}
    # synthetic division from the top power down
    for e in range(top, 0, -1):
        coeff = dict(groups.get(e, {}))
        for m, c in carry.items():
            coeff[m] = coeff.get(m, 0) + c
        coeff = {m: c for m, c in coeff.items() if c}
        for m, c in coeff.items():
            key = tuple(sorted(m + ((var, e - 1),))) if e - 1 else m
            quotient[key] = _norm(c)
        carry = {m: c * root for m, c in coeff.items()} if root else {}
        count(2 * len(coeff))
    rem = dict(groups.get(0, {}))
    for m, c in carry.items():
        rem[m] = rem.get(m, 0) + c
    if any(c for c in rem.values()):
        raise CompatibilityError(f"{format_poly(p)} is not divisible by a_{var + 1} - {root}")
    return Poly(quotient)


def divide_by_falling_factorials(p: Poly, b) -> Poly:
    """``p / prod_{b_k > 0} a_k (a_k - 1) ... (a_k - b_k + 1)``, exactly."""
    out = p
    for k, bk in enumerate(b):
        for j in range(bk if bk > 0 else 0):
            out = _divide_linear(out, k, j)
    return out


def is_compatible(p: Poly, b) -> bool:
    try:
        divide_by_falling_factorials(p, b)
    except CompatibilityError:
        return False
    return True


def _mono_str(m, latex):
    parts = []
    for v, e in m:
        name = f"a_{{{v + 1}}}" if latex else f"a_{v + 1}"
        if e != 1:
            name += f"^{{{e}}}" if latex else f"^{e}"
        parts.append(name)
    return "".join(parts) if latex else "*".join(parts)


def poly_sort_key(m, nvars):
    """Descending total degree, then descending exponents from the last variable."""
    dense = dict(m)
    return (-sum(dense.values()), tuple(-dense.get(v, 0) for v in reversed(range(nvars))))


def format_poly(p: Poly, latex: bool = False) -> str:
    if not p.terms:
        return "0"
    parts = []
    nvars = 1 + max((v for m in p.terms for v, _ in m), default=-1)
    for m in sorted(p.terms, key=lambda m: poly_sort_key(m, nvars)):
        c = Fraction(p.terms[m])
        body = _mono_str(m, latex)
        if not m:
            s = _coef_str(c)
        elif c == 1:
            s = body
        elif c == -1:
            s = "-" + body
        else:
            s = _coef_str(c) + ("" if latex else "*") + body
        if parts and not s.startswith("-"):
            s = "+" + s
        parts.append(s)
    return "".join(parts)
