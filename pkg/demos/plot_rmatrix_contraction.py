"""
R-matrix weights and the transfer operator
==========================================

Index 1 on an edge means the strand runs up through it.  Folding the
rows bottom to top gives a map from bottom index words to top index
words.
"""

from framedkh import load_corpus
from framedkh.rmatrix import R, RINV, matmul, matrix_identity_report, open_tangle_report, transfer

corpus = load_corpus()

for row in R:
    print("  ".join(f"{str(x):>10s}" for x in row))

# %%

print(matmul(R, RINV) == tuple(tuple(int(i == j) for j in range(4)) for i in range(4)))
for k, v in matrix_identity_report().items():
    print(f"{k:30s} {v}")

# %%
# The braid relation at the level of operators.

print(transfer(corpus["r3_tangle_a"]) == transfer(corpus["r3_tangle_b"]))

# %%
# For open tangles the contraction and the state sum are different
# normalizations; on the cap they differ by a unit on each boundary word.

for r in open_tangle_report(corpus["arcmax"]):
    print(r["bottom"], r["tensor"], "|", r["statesum"], r["ratio"])
