"""Closure dimensions for the exceptional types, with timings."""
import time

from lieweyl import embed, lie_closure

CASES = [
    ("G2", (1, 0)),
    ("G2", (0, 1)),
    ("F4", (1, 0, 0, 0)),
    ("F4", (0, 0, 0, 1)),
    ("E6", (1, 0, 0, 0, 0, 0)),
    ("E7", (0, 0, 0, 0, 0, 0, 1)),
]

#%%
for name, crossed in CASES:
    t = time.perf_counter()
    result = embed(name, crossed)
    report = lie_closure(result.simple_images(), result.algebra.dim)
    print(f"{name} {crossed}: n = {result.n}, closure {report.basis_size}/{result.algebra.dim}, "
          f"depth {report.bracket_depth}, {time.perf_counter() - t:.1f} s")
