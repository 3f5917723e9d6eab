"""Shared test data that is not an oracle."""

import copy

from framedkh import chain_complex as cc


def flipped_split_table():
    """Label table with the sign of the second split term of ``1`` flipped."""
    table = copy.deepcopy(cc.FROBENIUS)
    first, second = table["split"]["1"]
    table["split"]["1"] = (first, (second[0], -second[1]))
    return table


def braid_closure(n, word):
    """``.tang`` text for the closure of a braid word on ``n`` strands.

    ``word`` holds signed generators: ``k`` puts ``xa`` on strands
    ``k-1, k`` and ``-k`` puts ``xb`` there.
    """
    rows = []
    for k in range(n):
        rows.append(" ".join(["id"] * k + ["cup"] + ["id"] * k))
    for g in word:
        k = abs(g) - 1
        tile = "xa" if g > 0 else "xb"
        rows.append(" ".join(["id"] * k + [tile] + ["id"] * (2 * n - k - 2)))
    for k in reversed(range(n)):
        rows.append(" ".join(["id"] * k + ["cap"] + ["id"] * k))
    return "\n".join(rows)
