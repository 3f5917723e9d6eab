"""
Bigraded homology tables
========================

Chain groups, boundary matrices and integral homology for a few corpus
diagrams.  Torsion shows up already for the trefoil.
"""

from framedkh import KhovanovComplex, homology, load_corpus

corpus = load_corpus()


def show(name):
    cx = KhovanovComplex(corpus[name])
    h = homology(cx)
    print(f"{name}: {sum(cx.ranks_table().values())} generators")
    for (p, q), g in sorted(h.groups.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        print(f"  p={str(p):>5}  q={q:>4}  {g}")


for name in ("unknot", "strand", "hopf", "trefoil"):
    show(name)

# %%
# The differential lowers p by one and keeps q, so each q is its own
# little complex.  Here are the nonzero blocks of the Hopf link.

cx = KhovanovComplex(corpus["hopf"])
for (p, q), m in cx.matrices().items():
    if not m.is_zero():
        print(f"({p}, {q}) -> ({p - 1}, {q})")
        for row in m.to_dense():
            print("   ", row)

# %%
# Half-integral p for a tangle with two endpoints.

show("twisted_cap_3")

# %%
# Euler characteristic of the homology recovers the bracket.

h = homology(corpus["trefoil"])
print(h.euler_characteristic())
