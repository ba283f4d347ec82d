import random

import pytest

from disimplicial import (build_digraph, is_perfect_elimination_st, join, matched_elimination,
                          maximal_elimination, transitive_v_elimination, verify_scheme)
from disimplicial.elimination import TransitiveEliminationState
from disimplicial.hdigraph import HDigraph
from disimplicial.oracle import naive_disimplicial_arcs, naive_is_disimplicial

from graphs import (A, B, C, D, c6_st, c_even_st, k22, p3_fork, random_digraph,
                    random_matching, random_perfect_elimination_st, random_st)


def test_maximal_elimination_examples():
    s = maximal_elimination(k22())
    assert len(s) == 2 and s.perfect
    s = maximal_elimination(p3_fork())
    assert set(s.steps) == {(A, D), (C, B)} and s.perfect
    s = maximal_elimination(build_digraph(3))
    assert len(s) == 0 and s.perfect


def test_matched_elimination_examples():
    s = matched_elimination(k22(), [(0, 2), (1, 3)])
    assert len(s) == 2 and s.perfect
    assert matched_elimination(p3_fork(), [(A, B)]).steps == ()
    s = matched_elimination(p3_fork(), [(A, D), (C, B)])
    assert len(s) == 2
    assert verify_scheme(p3_fork(), s, [(A, D), (C, B)])


def test_matched_elimination_rejects_bad_matching():
    with pytest.raises(ValueError):
        matched_elimination(p3_fork(), [(B, A)])


def test_matched_elimination_head_feeding_another_arc():
    # 1 is a matched head inside N-(2), so 3 -> 2 has to wait for 0 -> 1
    g = build_digraph(5, [(0, 1), (1, 2), (3, 2), (3, 4)])
    m = [(3, 2), (0, 1)]
    s = matched_elimination(g, m)
    assert verify_scheme(g, s, m)
    assert s.steps[0] == (0, 1)


def test_transitive_v_elimination_examples():
    path = build_digraph(3, [(0, 1), (1, 2)])
    assert transitive_v_elimination(path, [1]) == []
    assert transitive_v_elimination(build_digraph(1, [(0, 0)]), [0]) == [0]
    h, _ = join(p3_fork(), [(A, D), (C, B)])
    assert sorted(transitive_v_elimination(h, [0, 1])) == [0, 1]


def _naive_transitive(d, alive, v):
    ins = [x for x in d.in_adj[v] if x in alive]
    outs = [y for y in d.out_adj[v] if y in alive]
    return all((x, y) in d.arcs for x in ins for y in outs)


def test_transitive_v_elimination_replay():
    rng = random.Random(8)
    for _ in range(300):
        n = rng.randint(1, 9)
        d = random_digraph(rng, n, rng.randint(0, 3 * n))
        eligible = set(rng.sample(range(n), rng.randint(0, n)))
        order = transitive_v_elimination(d, eligible)
        alive = set(range(n))
        for v in order:
            assert v in eligible and v in alive
            assert _naive_transitive(d, alive, v)
            alive.discard(v)
        assert not any(_naive_transitive(d, alive, v) for v in eligible & alive)


def test_perfect_elimination_st_examples():
    assert is_perfect_elimination_st(k22())[0]
    assert is_perfect_elimination_st(p3_fork())[0]
    ok, scheme = is_perfect_elimination_st(c6_st())
    assert not ok and len(scheme) == 0
    assert naive_disimplicial_arcs(c6_st()) == []
    with pytest.raises(ValueError):
        is_perfect_elimination_st(build_digraph(3, [(0, 1), (1, 2)]))


def test_perfect_elimination_families():
    rng = random.Random(6)
    for _ in range(50):
        assert is_perfect_elimination_st(random_perfect_elimination_st(rng, rng.randint(1, 12)))[0]
    for k in range(3, 12):
        assert not is_perfect_elimination_st(c_even_st(k))[0]


def test_verify_scheme_rejects_bad_schemes():
    g = p3_fork()
    assert not verify_scheme(g, [(A, B)])
    assert not verify_scheme(g, [(A, D)])  # c -> b is still disimplicial
    assert not verify_scheme(g, [(A, D), (A, D)])
    assert verify_scheme(build_digraph(2), [])


def test_verify_scheme_rejects_reordering():
    a, b, c, d, e = range(5)
    g = build_digraph(5, [(a, b), (a, d), (c, b), (c, e)])
    assert verify_scheme(g, [(c, e), (a, b)])
    check = verify_scheme(g, [(a, b), (c, e)])
    assert not check and "not disimplicial" in check.reason


def test_random_schemes_validate():
    rng = random.Random(9)
    for _ in range(300):
        n = rng.randint(1, 8)
        g = random_digraph(rng, n, rng.randint(0, 3 * n))
        s = maximal_elimination(g)
        assert verify_scheme(g, s), verify_scheme(g, s).reason
        assert naive_disimplicial_arcs(s.residual) == []
        m = random_matching(rng, g, keep=0.8)
        s = matched_elimination(g, m)
        assert verify_scheme(g, s, m), verify_scheme(g, s, m).reason


def test_full_rescan_rounds_also_maximal():
    # a scheme built by rescanning every disimplicial arc each round is
    # equally maximal, though it may pick different arcs
    rng = random.Random(10)
    for _ in range(100):
        g = random_st(rng, rng.randint(1, 5), rng.randint(1, 5), rng.random())
        steps, cur, used = [], g, set()
        while True:
            free = [a for a in naive_disimplicial_arcs(cur) if not set(a) & used]
            if not free:
                break
            v, w = free[0]
            steps.append((v, w))
            used |= {v, w}
            cur = cur.without((v, w))
        assert verify_scheme(g, steps)
        assert verify_scheme(g, maximal_elimination(g))


def test_each_step_disimplicial_in_reduced_graph():
    g = random_st(random.Random(12), 6, 6, 0.4)
    cur = g
    for v, w in maximal_elimination(g).steps:
        assert naive_is_disimplicial(cur, (v, w))
        cur = cur.without((v, w))


def test_transitive_counters_track_removals():
    rng = random.Random(17)
    for _ in range(100):
        n = rng.randint(1, 10)
        d = random_digraph(rng, n, rng.randint(0, 4 * n))
        h = HDigraph(d)
        t = [sum((x, y) in d.arcs for x in d.in_adj[v] for y in d.out_adj[v]) for v in range(n)]
        state = TransitiveEliminationState(h, bytearray(n), t)
        alive = set(range(n))
        for u in rng.sample(range(n), n):
            state.remove(u)
            alive.discard(u)
            for v in alive:
                ins = [x for x in d.in_adj[v] if x in alive]
                outs = [y for y in d.out_adj[v] if y in alive]
                assert t[v] == sum((x, y) in d.arcs for x in ins for y in outs)
