import pytest

from disimplicial import build_digraph
from disimplicial.oracle import (enumerate_maximal_dicliques, naive_disimplicial_arcs,
                                 naive_is_dedekind, naive_is_di, naive_is_disimplicial,
                                 naive_is_wdi, naive_transitive_vertices)

from graphs import A, B, C, D, c6_st, chain, diamond, k22, p3_fork, two_tops


def fs(*xs):
    return frozenset(xs)


def test_naive_disimplicial():
    assert naive_is_disimplicial(build_digraph(2, [(0, 1)]), (0, 1))
    assert naive_disimplicial_arcs(k22()) == sorted(k22().arcs)
    assert naive_disimplicial_arcs(p3_fork()) == [(A, D), (C, B)]
    with pytest.raises(KeyError):
        naive_is_disimplicial(p3_fork(), (B, A))


def test_naive_transitive():
    assert naive_transitive_vertices(build_digraph(3, [(0, 1), (1, 2)])) == {0, 2}
    assert naive_transitive_vertices(diamond()) == {0, 1, 2, 3}
    assert naive_transitive_vertices(build_digraph(2, [(0, 1), (1, 0)])) == set()


def test_maximal_dicliques():
    assert enumerate_maximal_dicliques(k22()) == {(fs(0, 1), fs(2, 3))}
    assert enumerate_maximal_dicliques(p3_fork()) == {(fs(A), fs(B, D)), (fs(A, C), fs(B))}
    assert enumerate_maximal_dicliques(build_digraph(3)) == set()
    assert len(enumerate_maximal_dicliques(c6_st())) == 6


def test_maximal_dicliques_are_maximal():
    g = build_digraph(5, [(0, 2), (0, 3), (1, 3), (1, 4), (0, 0)])
    found = enumerate_maximal_dicliques(g)
    for vs, ws in found:
        assert all((v, w) in g.arcs for v in vs for w in ws)
        for x in range(g.n):
            assert x in vs or not all((x, w) in g.arcs for w in ws)
            assert x in ws or not all((v, x) in g.arcs for v in vs)


def test_naive_classes():
    assert naive_is_wdi(k22()) and naive_is_di(k22())
    assert naive_is_wdi(p3_fork()) and naive_is_di(p3_fork())
    assert not naive_is_wdi(c6_st()) and not naive_is_di(c6_st())
    assert naive_is_dedekind(diamond())
    assert not naive_is_dedekind(two_tops())
    assert naive_is_dedekind(chain(5))


def test_caps():
    with pytest.raises(ValueError):
        enumerate_maximal_dicliques(build_digraph(21))
    with pytest.raises(ValueError):
        naive_is_dedekind(chain(13))
