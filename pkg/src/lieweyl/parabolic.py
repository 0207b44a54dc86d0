"""Parabolic subalgebras given by crossed-out simple roots."""
from __future__ import annotations

from dataclasses import dataclass

from .liealgebra import ChevalleyAlgebra
from .rootsystem import graded_lex_key


@dataclass(frozen=True)
class ParabolicDatum:
    """Levi/nilradical split of a parabolic subalgebra.

    ``generators`` are the basis positions of ``u_1 < ... < u_n`` spanning the
    opposite nilradical, ordered by the graded lexicographic order of their
    (negative) roots.  The generic PBW monomial is
    ``u_1^{a_1} ... u_n^{a_n}`` and ``x_k`` corresponds to ``u_k``.  For G2 with
    the short root crossed this is ``g_{-6}^{a_1} g_{-5}^{a_2} ... g_{-1}^{a_5}``.
    """

    algebra: ChevalleyAlgebra
    crossed: tuple
    levi_roots: tuple  # positive roots of the Levi factor
    nilradical_roots: tuple  # positive roots of the nilradical, graded-lex ascending
    generators: tuple
    weights: tuple  # root of each u_k

    @property
    def n(self) -> int:
        return len(self.generators)

    @property
    def levi_simple(self) -> tuple:
        """0-based indices of uncrossed simple roots."""
        return tuple(i for i, c in enumerate(self.crossed) if not c)

    def in_nminus(self, g: int) -> bool:
        return g in self._gen_set

    def is_levi(self, g: int) -> bool:
        """True for Cartan elements and root vectors of Levi roots."""
        root = self.algebra.root_of(g)
        return all(root[i] == 0 for i, c in enumerate(self.crossed) if c)

    @property
    def generators_nminus(self) -> tuple:
        """The same generators listed by increasing positive counterpart,
        e.g. ``g_{-1}, g_{-3}, g_{-4}, g_{-5}, g_{-6}`` for G2 with the short
        root crossed; the PBW word reads this list right to left."""
        return tuple(reversed(self.generators))

    def levi_generators(self) -> list:
        return [g for g in range(self.algebra.dim) if self.is_levi(g)]

    @property
    def _gen_set(self):
        s = self.__dict__.get("_gs")
        if s is None:
            s = frozenset(self.generators)
            object.__setattr__(self, "_gs", s)
        return s


def make_parabolic(alg: ChevalleyAlgebra, crossed) -> ParabolicDatum:
    crossed = tuple(bool(int(c)) for c in crossed)
    if len(crossed) != alg.rank:
        raise ValueError(f"crossed vector has length {len(crossed)}, expected {alg.rank}")
    levi, nil = [], []
    for root in alg.roots.positive_roots:
        if any(root[i] for i, c in enumerate(crossed) if c):
            nil.append(root)
        else:
            levi.append(root)
    weights = sorted((tuple(-c for c in r) for r in nil), key=graded_lex_key)
    gens = tuple(alg.gen_of_root(w) for w in weights)
    return ParabolicDatum(
        algebra=alg,
        crossed=crossed,
        levi_roots=tuple(levi),
        nilradical_roots=tuple(nil),
        generators=gens,
        weights=tuple(weights),
    )


def nilradical_dimension(p: ParabolicDatum) -> int:
    return p.n
