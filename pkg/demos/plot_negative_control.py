"""
A broken sign table
===================

Flip one sign in the split rule and the label-table differential no longer
squares to zero.  The grading-defined differential does not use the table
and is unaffected.
"""

import copy

from framedkh import chain_complex, load_corpus, verify_dsquare

corpus = load_corpus()
trefoil = corpus["trefoil"]

table = copy.deepcopy(chain_complex.FROBENIUS)
first, second = table["split"]["1"]
table["split"]["1"] = (first, (second[0], -second[1]))

print("table, as shipped:", verify_dsquare(trefoil, method="link"))
print("table, one sign flipped:", verify_dsquare(trefoil, method="link", table=table))
print("grading rule:", verify_dsquare(trefoil))

# %%
# The flip only matters when a circle carrying 1 splits, which needs
# enough crossings.  The Hopf link is too small to notice.

print("hopf, flipped:", verify_dsquare(corpus["hopf"], method="link", table=table))
