"""Universal enveloping algebra elements with polynomial exponents.

A monomial is a tuple of ``(generator, exponent)`` factors, where a generator
is a basis position of a :class:`~lieweyl.liealgebra.ChevalleyAlgebra` and the
exponent is a :class:`~lieweyl.polynomial.Poly` in ``a_1..a_n``.  An element is
a mapping from monomials to polynomial coefficients.  Representations are not
unique (no PBW normal form is imposed); :func:`reduce` only guarantees the
reducedness condition relative to a given generator order.
"""
from __future__ import annotations

from .polynomial import Poly, binomial_poly, format_poly


class ReductionError(RuntimeError):
    pass


def _is_pos_int(p: Poly):
    v = p.nonneg_int()
    return v is not None and v > 0


def normalize_monomial(factors) -> tuple:
    """Drop zero exponents and merge neighbouring equal generators."""
    out = []
    for g, e in factors:
        if e.is_zero():
            continue
        if out and out[-1][0] == g:
            e = out[-1][1] + e
            out.pop()
            if e.is_zero():
                continue
        out.append((g, e))
    # merging can make a zero exponent disappear and expose a new equal pair
    if any(out[i][0] == out[i + 1][0] for i in range(len(out) - 1)):
        return normalize_monomial(out)
    return tuple(out)


class UEAElement:
    """Sum of ``coefficient * monomial`` with polynomial coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for m, c in dict(terms).items():
                self.add_term(m, c)

    @classmethod
    def monomial(cls, factors, coef=1) -> "UEAElement":
        e = cls()
        e.add_term(factors, coef)
        return e

    def add_term(self, mono, coef) -> None:
        if not isinstance(coef, Poly):
            coef = Poly.const(coef)
        if coef.is_zero():
            return
        mono = normalize_monomial(mono)
        old = self.terms.get(mono)
        if old is None:
            self.terms[mono] = coef
            return
        new = old + coef
        if new.is_zero():
            del self.terms[mono]
        else:
            self.terms[mono] = new

    def __add__(self, other):
        out = UEAElement()
        out.terms = dict(self.terms)
        for m, c in other.terms.items():
            out.add_term(m, c)
        return out

    def __neg__(self):
        out = UEAElement()
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, UEAElement) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())


def generator_rank(alg, generators) -> list:
    """Total order on basis positions: ``generators`` first (in the given
    order), every other basis element above them."""
    rank = [0] * alg.dim
    pos = {g: k for k, g in enumerate(generators)}
    for g in range(alg.dim):
        rank[g] = pos[g] if g in pos else len(generators) + g
    return rank


def is_reduced_monomial(mono, rank) -> bool:
    k = len(mono)
    for s in range(k):
        gs, ps = mono[s]
        ints = ps.nonneg_int() is not None
        for t in range(s + 1, k):
            gt, pt = mono[t]
            if rank[gs] > rank[gt] and (ints or pt.nonneg_int() is not None):
                return False
    return True


def is_reduced(e: UEAElement, rank) -> bool:
    return all(is_reduced_monomial(m, rank) for m in e.terms)


class _AdCache:
    def __init__(self, alg):
        self.alg = alg
        self.cache = {}

    def powers(self, b: int, a: int) -> list:
        """``[(ad b)^k (a) for k = 0, 1, ...]`` up to the last nonzero one."""
        key = (b, a)
        hit = self.cache.get(key)
        if hit is None:
            hit = [{a: 1}]
            cur = {a: 1}
            while True:
                cur = self.alg.bracket({b: 1}, cur)
                if not cur:
                    break
                hit.append(cur)
            self.cache[key] = hit
        return hit


_AD_CACHES: dict = {}


def _ad_cache(alg) -> _AdCache:
    c = _AD_CACHES.get(id(alg))
    if c is None or c.alg is not alg:
        c = _AD_CACHES[id(alg)] = _AdCache(alg)
    return c


def commute_once(alg, mono, j: int, rank=None) -> UEAElement:
    """One application of the commutation identities at positions ``j, j+1``.

    If the left exponent is a positive integer and the right generator is a
    root vector, one copy of the left generator is moved to the right:
    ``a b^m = sum_k C(m,k) (-1)^k b^(m-k) (ad b)^k(a)``.  Otherwise the right
    exponent must be a positive integer and the left generator a root vector,
    and one copy of the right generator is moved left:
    ``b^m a = sum_k C(m,k) (ad b)^k(a) b^(m-k)``.
    """
    ad = _ad_cache(alg)
    (g1, p1), (g2, p2) = mono[j], mono[j + 1]
    prefix, suffix = mono[:j], mono[j + 2:]
    out = UEAElement()
    if _is_pos_int(p1) and not alg.is_cartan(g2):
        a, b, m = g1, g2, p2
        left = prefix + ((a, p1 - 1),)
        mconst = m.nonneg_int()
        for k, adk in enumerate(ad.powers(b, a)):
            if mconst is not None and k > mconst:
                break
            coef = binomial_poly(m, k)
            if k % 2:
                coef = -coef
            bpart = ((b, m - k),)
            for c, cc in adk.items():
                out.add_term(left + bpart + ((c, Poly.const(1)),) + suffix, coef.scale(cc))
        return out
    if _is_pos_int(p2) and not alg.is_cartan(g1):
        b, m, a = g1, p1, g2
        right = ((a, p2 - 1),) + suffix
        mconst = m.nonneg_int()
        for k, adk in enumerate(ad.powers(b, a)):
            if mconst is not None and k > mconst:
                break
            coef = binomial_poly(m, k)
            bpart = ((b, m - k),)
            for c, cc in adk.items():
                out.add_term(prefix + ((c, Poly.const(1)),) + bpart + right, coef.scale(cc))
        return out
    raise ReductionError(f"no commutation identity applies at position {j}")


def _find_step(alg, mono, rank):
    for j in range(len(mono) - 1):
        (g1, p1), (g2, p2) = mono[j], mono[j + 1]
        if rank[g1] <= rank[g2]:
            continue
        if _is_pos_int(p1) and not alg.is_cartan(g2):
            return j
        if _is_pos_int(p2) and not alg.is_cartan(g1):
            return j
    return None


def reduce(alg, e: UEAElement, rank, budget: int = 10**6) -> UEAElement:
    """Rewrite ``e`` until every monomial is reduced relative to ``rank``."""
    out = UEAElement()
    pending = dict(e.terms)
    steps = 0
    while pending:
        mono, coef = pending.popitem()
        mono = normalize_monomial(mono)
        if is_reduced_monomial(mono, rank):
            out.add_term(mono, coef)
            continue
        j = _find_step(alg, mono, rank)
        if j is None:
            raise ReductionError(f"stuck on non-reduced monomial {format_monomial(alg, mono)}")
        steps += 1
        if steps > budget:
            raise ReductionError(f"reduction exceeded {budget} steps")
        for m, c in commute_once(alg, mono, j).terms.items():
            c = c * coef
            old = pending.get(m)
            if old is None:
                pending[m] = c
            else:
                new = old + c
                if new.is_zero():
                    del pending[m]
                else:
                    pending[m] = new
    return out


def _plain_name(name: str) -> str:
    return name.replace("{", "").replace("}", "")


def format_monomial(alg, mono, latex: bool = True) -> str:
    """LaTeX ``g_{-6}^{a_{1}+1}g_{-1}``, or plain ``g_-6^(a_1+1) g_-1``."""
    parts = []
    for g, e in mono:
        name = alg.name(g)
        if latex:
            parts.append(name if e == 1 else f"{name}^{{{format_poly(e, latex=True)}}}")
            continue
        name = _plain_name(name)
        if e == 1:
            parts.append(name)
        else:
            exp = format_poly(e, latex=False)
            atomic = len(e.terms) == 1 and not any(ch in exp[1:] for ch in "+-*/^")
            parts.append(f"{name}^{exp}" if atomic and not exp.startswith("-") else f"{name}^({exp})")
    return "".join(parts) if latex else " ".join(parts)


def format_element(alg, e: UEAElement, latex: bool = True) -> str:
    """Render in the style ``-3a_{4}g_{-6}^{a_{1}}...+(...)g_{-6}^{a_{1}+1}...``.

    The plain form writes ``-3*a_4 g_-6^a_1 ... + (...) g_-6^(a_1+1) ...``.
    """
    if not e.terms:
        return "0"
    parts = []
    for mono in sorted(e.terms, key=lambda m: format_monomial(alg, m)):
        coef = e.terms[mono]
        body = format_monomial(alg, mono, latex=latex)
        if latex:
            if coef == 1:
                s = body or "1"
            elif coef == -1:
                s = "-" + (body or "1")
            elif len(coef.terms) == 1:
                s = format_poly(coef, latex=True) + body
            else:
                s = "(" + format_poly(coef, latex=True) + ")" + body
            if parts and not s.startswith("-"):
                s = "+" + s
            parts.append(s)
            continue
        neg = len(coef.terms) == 1 and format_poly(coef, latex=False).startswith("-")
        mag = -coef if neg else coef
        c = format_poly(mag, latex=False)
        if mag == 1:
            s = body or "1"
        elif len(mag.terms) == 1:
            s = c + (" " + body if body else "")
        else:
            s = "(" + c + ")" + (" " + body if body else "")
        if parts:
            parts.append((" - " if neg else " + ") + s)
        else:
            parts.append(("-" if neg else "") + s)
    return "".join(parts)
