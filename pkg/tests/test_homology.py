import pytest
from hypothesis import given, settings, strategies as st

from framedkh.chain_complex import KhovanovComplex
from framedkh.homology import (
    BigradedHomology,
    HomologyGroup,
    NotAComplex,
    compare_homology,
    homology,
    smith_normal_form,
)
from framedkh.ring import LaurentPoly
from framedkh.statesum import bracket_state_sum
from oracles import determinantal_factors
from fixtures import flipped_split_table


class TestSmith:
    def test_zero(self):
        snf = smith_normal_form([[0, 0], [0, 0]])
        assert snf.rank == 0 and snf.invariant_factors == ()

    def test_diag(self):
        assert smith_normal_form([[2, 0], [0, 3]]).invariant_factors == (1, 6)

    def test_single(self):
        snf = smith_normal_form([[2]])
        assert snf.invariant_factors == (2,) and snf.torsion == (2,)

    def test_empty(self):
        assert smith_normal_form([]).rank == 0

    def test_dense_remainder(self):
        m = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
        assert smith_normal_form(m).invariant_factors == (2, 6, 12)

    def test_big_entries(self):
        big = 10**30
        assert smith_normal_form([[big, 0], [0, big * 3]]).invariant_factors == (big, 3 * big)


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_smith_matches_minors(m):
    snf = smith_normal_form(m)
    assert snf.invariant_factors == determinantal_factors(m)
    fs = snf.invariant_factors
    assert all(fs[i + 1] % fs[i] == 0 for i in range(len(fs) - 1))
    assert snf.rank <= min(len(m), len(m[0]))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.sampled_from([-1, 0, 0, 0, 1]), min_size=5, max_size=5), min_size=4, max_size=4))
def test_smith_sparse_unit_path(m):
    assert smith_normal_form(m).invariant_factors == determinantal_factors(m)


def table(h):
    return {(r["p2"], r["q"]): (r["rank"], tuple(r["torsion"])) for r in h.to_json()}


class TestHomology:
    def test_unknot(self, corpus):
        assert table(homology(corpus["unknot"])) == {(2, -2): (1, ()), (-2, 2): (1, ())}

    def test_strand(self, corpus):
        assert table(homology(corpus["strand"])) == {(0, 0): (2, ())}

    def test_trefoil(self, corpus):
        h = homology(corpus["trefoil"])
        assert h.euler_characteristic() == LaurentPoly({7: 1, 3: 1, -1: 1, -9: -1})
        assert h == homology(corpus["trefoil_braid"])
        assert any(g.torsion for g in h.groups.values())

    def test_rank_bounded_by_chains(self, corpus):
        for d in corpus.values():
            cx = KhovanovComplex(d)
            h = homology(cx)
            for bg, g in h.groups.items():
                assert g.rank <= cx.groups[bg].rank

    def test_euler_characteristic(self, corpus):
        for name, d in corpus.items():
            assert homology(d).euler_characteristic() == bracket_state_sum(d).value, name

    def test_to_json_sorted(self, corpus):
        rows = homology(corpus["hopf"]).to_json()
        assert rows == sorted(rows, key=lambda r: (r["q"], r["p2"]))

    def test_not_a_complex(self, corpus):
        cx = KhovanovComplex(corpus["trefoil"], method="link", table=flipped_split_table())
        with pytest.raises(NotAComplex):
            homology(cx)


class TestCompare:
    def test_r2(self, corpus):
        assert compare_homology(corpus["unknot"], corpus["r2_unknot"])

    def test_unknot_vs_hopf(self, corpus):
        assert not compare_homology(corpus["unknot"], corpus["hopf"])

    def test_self(self, corpus):
        for d in corpus.values():
            assert compare_homology(d, d)


def test_lookup_and_str():
    h = BigradedHomology({})
    assert h[(0, 0)] == HomologyGroup(0)
    assert str(HomologyGroup(2, (2,))) == "Z^2 + Z/2"
    assert str(HomologyGroup(0)) == "0"
