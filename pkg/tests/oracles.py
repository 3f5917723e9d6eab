"""Independent reference computations used to freeze expected values.

Nothing here calls into the state, complex or contraction code paths it is
used to check.
"""

import itertools
from math import gcd

from framedkh.diagram import Tile


def naive_poly(terms):
    """Canonical dict from a list of (exp, int coeff) pairs, merging by scan."""
    out = {}
    for e, c in terms:
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def naive_mul(a, b):
    return naive_poly([(e1 + e2, c1 * c2) for e1, c1 in a.items() for e2, c2 in b.items()])


def _circles(d, markers):
    parent = list(range(d.n_edges))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def join(a, b):
        parent[find(a)] = find(b)

    k = 0
    for p in d.placements:
        if p.kind is Tile.ID:
            join(p.inputs[0], p.outputs[0])
        elif p.kind is Tile.CAP:
            join(*p.inputs)
        elif p.kind is Tile.CUP:
            join(*p.outputs)
        else:
            # positive marker on xa keeps the strands vertical; xb the reverse
            straight = (markers[k] == 1) == (p.kind is Tile.CROSS_A)
            k += 1
            if straight:
                join(p.inputs[0], p.outputs[0])
                join(p.inputs[1], p.outputs[1])
            else:
                join(*p.inputs)
                join(*p.outputs)
    return len({find(e) for e in range(d.n_edges)})


def circle_bracket(d):
    """sum_s A^sigma(s) (-A^2 - A^-2)^#circles(s) as an exponent -> int dict."""
    delta = {2: -1, -2: -1}
    total = {}
    for markers in itertools.product((1, -1), repeat=d.n_crossings):
        term = {sum(markers): 1}
        for _ in range(_circles(d, markers)):
            term = naive_mul(term, delta)
        total = naive_poly(list(total.items()) + list(term.items()))
    return total


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i, j in itertools.combinations(range(n), 2) if perm[i] > perm[j])
        prod = 1
        for i in range(n):
            prod *= m[i][perm[i]]
        total += -prod if inv % 2 else prod
    return total


def determinantal_factors(m):
    """Invariant factors via gcds of k x k minors."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    divisors = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in itertools.combinations(range(rows), k):
            for cs in itertools.combinations(range(cols), k):
                g = gcd(g, leibniz_det([[m[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        divisors.append(g)
    return tuple(divisors[k] // divisors[k - 1] for k in range(1, len(divisors)))


def brute_tensor(d, weight):
    """Sum over every index assignment of all edges of the product of weights."""
    from framedkh.ring import ONE, ZERO

    total = ZERO
    for idx in itertools.product((0, 1), repeat=d.n_edges):
        w = ONE
        for p in d.placements:
            ins = tuple(idx[e] for e in p.inputs)
            outs = tuple(idx[e] for e in p.outputs)
            if p.kind is Tile.ID:
                f = weight(Tile.ID, ins[0], outs[0])
            elif p.kind is Tile.CAP:
                f = weight(Tile.CAP, *ins)
            elif p.kind is Tile.CUP:
                f = weight(Tile.CUP, *outs)
            else:
                f = weight(p.kind, *ins, *outs)
            if not f:
                w = ZERO
                break
            w = w * f
        total = total + w
    return total
