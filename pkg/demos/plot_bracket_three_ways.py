"""
The Kauffman bracket, three ways
================================

A trefoil drawn as a two-bridge diagram, evaluated by summing over
enhanced states, by counting circles and by contracting R-matrices.
"""

from framedkh import (
    bracket_circles,
    bracket_state_sum,
    bracket_tensor,
    bracket_tensor_marked,
    load_corpus,
)

corpus = load_corpus()
trefoil = corpus["trefoil"]
print(trefoil)

# %%
# Every marker assignment gives a Kauffman state; every orientation of its
# circles gives an enhanced state.

result = bracket_state_sum(trefoil)
print(result.state_count, "enhanced states")
print("state sum:   ", result.value)

# %%
# Summing the two labels of each circle first leaves A^sigma * delta^#circles.

print("circles:     ", bracket_circles(trefoil))

# %%
# The same number as a tensor network: R on each xa, its inverse on xb,
# n on caps, u on cups.

print("tensor:      ", bracket_tensor(trefoil))
print("marked split:", bracket_tensor_marked(trefoil))

# %%
# Open tangles get Gaussian-integer coefficients from half-integral degrees.

for name in ("strand", "arcmax", "twisted_cap_2"):
    print(f"{name:14s}", bracket_state_sum(corpus[name]).value)
