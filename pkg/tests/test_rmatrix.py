import itertools

import pytest

from framedkh.chain_complex import ClosedOnly
from framedkh.diagram import Tile, compose, parse_diagram
from framedkh.ring import ONE, ZERO, LaurentPoly
from framedkh.rmatrix import (
    IDENTITY,
    R,
    R_MARKED,
    RINV,
    RINV_MARKED,
    TURNBACK,
    TURNBACK_DIAGONAL,
    WEIGHTS,
    bracket_tensor,
    bracket_tensor_marked,
    check_matrix_identities,
    marked_weights,
    matmul,
    matrix_identity_report,
    open_tangle_report,
    transfer,
    weight,
)
from framedkh.statesum import bracket_state_sum
from oracles import brute_tensor

A = LaurentPoly.monomial(1)
Ainv = LaurentPoly.monomial(-1)


def lin(a, m, b, n):
    return tuple(tuple(a * x + b * y for x, y in zip(r, s)) for r, s in zip(m, n))


def scale(c, m):
    return tuple(tuple(c * x for x in r) for r in m)


class TestWeight:
    def test_examples(self):
        assert weight("E1", 0, 0, 0, 0) == A
        assert weight("E1", 1, 0, 1, 0) == LaurentPoly({1: 1, -3: -1})
        assert weight("E3", 0, 1) == A
        assert weight("E4", 0, 1) == -A
        assert weight(Tile.CUP, 1, 0) == Ainv
        assert weight(Tile.CAP, 1, 0) == -Ainv

    def test_arity_errors(self):
        with pytest.raises(ValueError):
            weight("E1", 0, 0)
        with pytest.raises(ValueError):
            weight("E3", 0, 0, 0)

    def test_zero_pattern(self):
        support = {(r, c) for r in range(4) for c in range(4) if R[r][c]}
        assert support == {(0, 0), (1, 2), (2, 1), (2, 2), (3, 3)}
        support = {(r, c) for r in range(4) for c in range(4) if RINV[r][c]}
        assert support == {(0, 0), (1, 1), (1, 2), (2, 1), (3, 3)}

    def test_support_is_orientable(self):
        # a weight can only be nonzero if the indices admit the vertical
        # smoothing (i = k, j = l) or the turn-back (i != j, k != l)
        for part in ("E1", "E2"):
            for i, j, k, l in itertools.product((0, 1), repeat=4):
                if weight(part, i, j, k, l):
                    assert (i, j) == (k, l) or (i != j and k != l)
        for part in ("E3", "E4"):
            for i, j in itertools.product((0, 1), repeat=2):
                assert bool(weight(part, i, j)) == (i != j)


def test_unknot_hand_sum():
    total = sum((weight("E4", i, j) * weight("E3", i, j) for i in (0, 1) for j in (0, 1)), ZERO)
    assert total == LaurentPoly({2: -1, -2: -1})


@pytest.mark.parametrize("name", ["unknot", "hopf", "kink_pos", "kink_neg", "twist_loop", "zigzag_unknot"])
def test_fold_matches_brute_force(corpus, name):
    d = corpus[name]
    assert bracket_tensor(d) == brute_tensor(d, weight)


def test_tensor_equals_state_sum(corpus):
    for name, d in corpus.items():
        if d.is_closed:
            assert bracket_tensor(d) == bracket_state_sum(d).value, name


def test_marked_equals_tensor(corpus):
    for name, d in corpus.items():
        if d.is_closed:
            assert bracket_tensor_marked(d) == bracket_tensor(d), name
    assert bracket_tensor_marked(corpus["kink_pos"]) == LaurentPoly({5: 1, 1: 1})


def test_closed_only(corpus):
    for f in (bracket_tensor, bracket_tensor_marked):
        with pytest.raises(ClosedOnly):
            f(corpus["arcmax"])


class TestIdentities:
    def test_inverse(self):
        assert matmul(R, RINV) == IDENTITY == matmul(RINV, R)

    def test_decompositions(self):
        assert lin(A, IDENTITY, Ainv, TURNBACK) == R
        assert lin(Ainv, IDENTITY, A, TURNBACK) == RINV

    def test_report(self):
        report = matrix_identity_report()
        assert report and all(report.values())
        assert check_matrix_identities()

    def test_diagonal_turnback_is_not_enough(self):
        # without the off-diagonal entries the second decomposition misses
        # exactly the two A entries of R^-1 at (01, 10) and (10, 01)
        wrong = lin(Ainv, IDENTITY, A, TURNBACK_DIAGONAL)
        assert wrong != RINV
        diff = {(r, c) for r in range(4) for c in range(4) if RINV[r][c] != wrong[r][c]}
        assert diff == {(1, 2), (2, 1)}
        assert all(RINV[r][c] == A for r, c in diff)

    def test_turnback_is_cap_cup(self):
        assert TURNBACK == tuple(tuple(WEIGHTS.n[r] * WEIGHTS.u[c] for c in range(4)) for r in range(4))

    def test_broken_table_detected(self):
        from dataclasses import replace

        bad = replace(WEIGHTS, R=scale(ONE + ONE, R))
        assert not check_matrix_identities(bad)


class TestMarked:
    def test_parts_sum_to_matrix(self):
        assert lin(ONE, marked_weights(Tile.CROSS_A, 1), ONE, marked_weights(Tile.CROSS_A, -1)) == R
        assert lin(ONE, marked_weights(Tile.CROSS_B, 1), ONE, marked_weights(Tile.CROSS_B, -1)) == RINV

    def test_marked_entries(self):
        neg = marked_weights(Tile.CROSS_A, -1)
        assert {(r, c): neg[r][c] for r in range(4) for c in range(4) if neg[r][c]} == R_MARKED
        pos = marked_weights(Tile.CROSS_B, 1)
        assert {(r, c): pos[r][c] for r in range(4) for c in range(4) if pos[r][c]} == RINV_MARKED
        assert marked_weights(Tile.CROSS_A, 1) == scale(A, IDENTITY)

    def test_not_a_crossing(self):
        with pytest.raises(ValueError):
            marked_weights(Tile.CAP, 1)

    def test_single_marker_state_matches_state_sum(self, corpus):
        # each marker assignment on its own already reproduces that
        # state's contribution A^sigma * delta^#circles
        from framedkh.states import smooth

        d = corpus["trefoil"]
        delta = LaurentPoly({2: -1, -2: -1})
        for markers in itertools.product((1, -1), repeat=d.n_crossings):
            mats = [marked_weights(p.kind, m) for p, m in zip(d.crossings, markers)]
            got = transfer(d, mats).get(((), ()), ZERO)
            want = (delta ** smooth(d, markers).n_circles).shift(sum(markers))
            assert got == want, markers


def _product(lower, upper):
    out = {}
    for (b, m), x in lower.items():
        for (m2, t), y in upper.items():
            if m == m2:
                out[(b, t)] = out.get((b, t), ZERO) + x * y
    return {k: v for k, v in out.items() if v}


@pytest.mark.parametrize("name", ["r3_tangle_a", "twisted_cup_mixed", "hopf", "trefoil_braid"])
def test_contraction_is_associative(corpus, name):
    d = corpus[name]
    whole = transfer(d)
    for cut in range(1, len(d.rows)):
        lower = parse_diagram("\n".join(" ".join(t.value for t in r) for r in d.rows[:cut]))
        upper = parse_diagram("\n".join(" ".join(t.value for t in r) for r in d.rows[cut:]))
        assert compose(lower, upper) == d
        assert _product(transfer(lower), transfer(upper)) == whole, cut


class TestOpenReport:
    def test_cap_ratios_are_units(self, corpus):
        rows = open_tangle_report(corpus["arcmax"])
        assert {r["bottom"]: r["ratio"] for r in rows} == {(0, 1): ("i", -2), (1, 0): ("i", 2)}

    def test_strand_trivial(self, corpus):
        assert all(r["ratio"] == ("1", 0) for r in open_tangle_report(corpus["strand"]))

    def test_no_uniform_relation(self, corpus):
        rows = open_tangle_report(corpus["twisted_cup_mixed"])
        assert any(r["ratio"] is None for r in rows)
