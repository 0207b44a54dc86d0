"""Root systems of the simple Lie algebras A-G.

Roots are integer coordinate tuples in the basis of simple roots.  Positive
roots are indexed ``1..N`` in graded lexicographic order (height first, ties
broken by comparing coordinates starting from the last simple root); the
negative of the root with index ``k`` has index ``-k``.

Simple roots follow the Bourbaki numbering:

=====  ==========================================================
type   Dynkin diagram (numbers are simple-root indices)
=====  ==========================================================
A_n    1 - 2 - ... - n
B_n    1 - 2 - ... - (n-1) => n          (alpha_n short)
C_n    1 - 2 - ... - (n-1) <= n          (alpha_n long)
D_n    1 - 2 - ... - (n-2) - (n-1), (n-2) - n
E_n    1 - 3 - 4 - 5 - 6 [- 7 [- 8]],  2 - 4
F_4    1 - 2 => 3 - 4                    (alpha_1, alpha_2 long)
G_2    1 <= 2                            (alpha_1 short)
=====  ==========================================================

The invariant form is normalised so that short roots have squared length 2.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property

FAMILIES = "ABCDEFG"

# classical count of positive roots per type
_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        f, r = self.family, self.rank
        if f not in FAMILIES:
            raise ValueError(f"unknown family {f!r}")
        ok = {
            "A": r >= 1,
            "B": r >= 2,
            "C": r >= 2,
            "D": r >= 4,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }[f]
        if not ok:
            raise ValueError(f"invalid rank {r} for type {f}")

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse simple type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def num_positive_roots(self) -> int:
        return _POSITIVE_ROOT_COUNT[self.family](self.rank)


def _edges(t: SimpleType):
    n = t.rank
    if t.family in "ABC":
        return [(i, i + 1) for i in range(n - 1)]
    if t.family == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if t.family == "E":
        return [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
    if t.family == "F":
        return [(0, 1), (1, 2), (2, 3)]
    return [(0, 1)]


def _root_lengths(t: SimpleType):
    n = t.rank
    if t.family == "B":
        return [4] * (n - 1) + [2]
    if t.family == "C":
        return [2] * (n - 1) + [4]
    if t.family == "F":
        return [4, 4, 2, 2]
    if t.family == "G":
        return [2, 6]
    return [2] * n


def symmetric_form(t: SimpleType):
    """Gram matrix ``(alpha_i, alpha_j)`` of the simple roots."""
    n = t.rank
    lengths = _root_lengths(t)
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = lengths[i]
    for i, j in _edges(t):
        short, long_ = sorted((lengths[i], lengths[j]))
        # bond multiplicity is long/short; (a_i, a_j) = -long/2
        gram[i][j] = gram[j][i] = -long_ // 2
    return gram


def cartan_matrix(t: SimpleType):
    """``A[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)``."""
    g = symmetric_form(t)
    n = t.rank
    return [[2 * g[i][j] // g[j][j] for j in range(n)] for i in range(n)]


def graded_lex_key(coords):
    return (sum(coords), tuple(reversed(coords)))


def graded_lex_compare(a, b) -> int:
    """Return -1, 0 or 1 as root ``a`` is below, equal to, or above ``b``."""
    ka, kb = graded_lex_key(tuple(a)), graded_lex_key(tuple(b))
    return (ka > kb) - (ka < kb)


@dataclass(frozen=True)
class RootSystem:
    type: SimpleType
    cartan_matrix: tuple
    form: tuple
    positive_roots: tuple
    _index: dict = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    @property
    def dimension(self) -> int:
        return 2 * len(self.positive_roots) + self.rank

    def root(self, index: int):
        if index > 0:
            return self.positive_roots[index - 1]
        return tuple(-c for c in self.positive_roots[-index - 1])

    def index(self, root) -> int:
        """Signed index of ``root``; raises KeyError for non-roots."""
        return self._index[tuple(root)]

    def is_root(self, v) -> bool:
        return tuple(v) in self._index

    @cached_property
    def all_roots(self):
        """All roots ordered as g_{-N}, ..., g_{-1}, g_1, ..., g_N."""
        n = self.num_positive
        return tuple(self.root(k) for k in list(range(-n, 0)) + list(range(1, n + 1)))

    def pairing(self, a, b):
        """Invariant form ``(a, b)`` of two vectors in simple-root coordinates."""
        g = self.form
        r = self.rank
        return sum(a[i] * g[i][j] * b[j] for i in range(r) if a[i] for j in range(r) if b[j])

    def coroot_pairing(self, a, i: int) -> int:
        """``<a, alpha_i^vee>`` for simple index ``i`` (0-based)."""
        return sum(a[j] * self.cartan_matrix[j][i] for j in range(self.rank))

    def height(self, root) -> int:
        return sum(root)

    def to_dict(self) -> dict:
        return {"type": str(self.type), "positive_roots": [list(r) for r in self.positive_roots]}


def _generate_positive_roots(t: SimpleType, cartan):
    """Closure under adding simple roots, decided by alpha_i-strings."""
    n = t.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                if beta == simple[i]:
                    continue
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * cartan[j][i] for j in range(n))
                q = p - pairing
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=graded_lex_key)


def build_root_system(t) -> RootSystem:
    if isinstance(t, str):
        t = SimpleType.parse(t)
    cartan = cartan_matrix(t)
    pos = _generate_positive_roots(t, cartan)
    if len(pos) != t.num_positive_roots:
        raise RuntimeError(f"root generation for {t} produced {len(pos)} roots")
    index = {}
    for k, r in enumerate(pos, start=1):
        index[r] = k
        index[tuple(-c for c in r)] = -k
    return RootSystem(
        type=t,
        cartan_matrix=tuple(tuple(row) for row in cartan),
        form=tuple(tuple(row) for row in symmetric_form(t)),
        positive_roots=tuple(pos),
        _index=index,
    )
