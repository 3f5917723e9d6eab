"""
Second and third moves, and kinks
=================================

Homology tables agree across diagrams related by framing-preserving moves.
A curl changes the framing and multiplies the bracket by -A^{+-3}.
"""

from framedkh import compare_homology, homology, insert_kink, load_corpus, parse_diagram
from framedkh.statesum import bracket_state_sum, kink_factor

corpus = load_corpus()

pairs = [
    ("unknot", "r2_unknot"),
    ("r2_tangle_a", "r2_tangle_b"),
    ("r3_link_a", "r3_link_b"),
    ("r3_tangle_a", "r3_tangle_b"),
]
for a, b in pairs:
    print(f"{a:12s} vs {b:12s}", "equal" if compare_homology(corpus[a], corpus[b]) else "DIFFERENT")

# %%
# A curl is not a framing-preserving move, so the tables differ.

u = corpus["unknot"]
print(homology(u) == homology(corpus["kink_pos"]))

# %%
# Kinks on an open strand.

strand = parse_diagram("id")
for sign in "+-":
    kinked = insert_kink(strand, 0, sign)
    before = bracket_state_sum(strand).value
    after = bracket_state_sum(kinked).value
    print(sign, after, after == kink_factor(sign) * before)

# %%
# Opposite kinks cancel in the bracket.

both = insert_kink(insert_kink(strand, 0, "+"), 0, "-")
print(bracket_state_sum(both).value)
