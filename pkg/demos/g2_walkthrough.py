"""G2 with the short simple root crossed out, step by step."""
from lieweyl import embed, make_parabolic, simple_lie_algebra
from lieweyl.embedding import generic_product
from lieweyl.uea import format_element
from lieweyl.verify import action_oracle, lie_closure
from lieweyl.weyl import format_weyl_matrix

#%%
alg = simple_lie_algebra("G2")
for g in range(alg.dim):
    print(alg.name(g), alg.root_of(g))

#%%
par = make_parabolic(alg, (1, 0))
print("n =", par.n)
print("PBW word:", " ".join(alg.name(g) for g in par.generators))

#%%
# g u for the generic monomial u, reduced to PBW order
for k in (1, -1):
    g = alg.root_gen(k)
    print(alg.name(g), "u =", format_element(alg, generic_product(alg, par, g), latex=False))

#%%
result = embed("G2", (1, 0), (0, 0))
for g, op in zip(("g_1", "g_-1", "g_2", "g_-2"), result.simple_images()):
    print(g, "->", format_weyl_matrix(op, latex=False))

#%%
print(lie_closure(result.simple_images(), alg.dim))
print(action_oracle(result, 3))

#%%
# a two-dimensional Levi module: weight 1 on the long simple root
twisted = embed("G2", (1, 0), (0, 1))
print("dim V =", twisted.module.dim)
print(format_weyl_matrix(twisted.simple_images()[2], latex=False))
