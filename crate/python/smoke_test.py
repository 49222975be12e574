"""Smoke test for the ddmop extension module.

Build and install with `maturin develop -m crates/py/Cargo.toml`, or copy
target/<profile>/libddmop.so next to this script as ddmop.so, then run
`python python/smoke_test.py`.
"""

import ddmop


def cycle(n):
    return ddmop.Graph(n, [(i, (i + 1) % n) for i in range(n)])


def main():
    k3 = ddmop.Graph(3, [(0, 1), (1, 2), (2, 0)])
    assert k3.degrees() == [2, 2, 2]
    assert k3.closed_neighborhood(0) == [0, 1, 2]
    assert k3.is_double_dominating([0, 1])

    c6 = cycle(6)
    assert c6.is_double_dominating([0, 1, 3, 4])
    assert not c6.is_double_dominating([0, 3])
    try:
        ddmop.recognize_mop(c6)
    except ValueError as e:
        assert "edge count 6" in str(e)
    else:
        raise AssertionError("C6 accepted as a MOP")

    fan = ddmop.fan(6)
    emb = ddmop.recognize_mop(fan)
    assert emb.cycle == [0, 1, 2, 3, 4, 5]
    assert emb.chords == [(1, 5), (2, 5), (3, 5)]
    assert emb.striped
    steps, kernel = ddmop.recognize_two_tree(fan)
    assert len(steps) == 3 and len(kernel) == 3

    colors = ddmop.rainbow_four_coloring(fan)
    assert all(colors[u] != colors[v] for u, v in fan.edges())

    for k in range(2, 6):
        g = ddmop.family_u(k, inner="random", seed=k)
        assert ddmop.exact_gamma_x2(g).optimum == 2 * k
        assert len(ddmop.dispatch_bound(g)) == 2 * k

    for q in (3, 5, 7):
        g = ddmop.family_a(q)
        assert ddmop.recognize_mop(g).striped
        assert ddmop.exact_gamma_x2(g).optimum == g.n // 2 + 1

    for seed in range(20):
        g = ddmop.random_mop(11, seed)
        n, t = g.n, len(g.degree_two_vertices())
        exact = ddmop.exact_gamma_x2(g)
        assert exact.optimum == ddmop.brute_force_gamma_x2(g).optimum
        peel = ddmop.peel_double_domination(g)
        rainbow = ddmop.rainbow_double_domination(g)
        degree = ddmop.degree_set_double_domination(g)
        assert len(peel) <= 2 * n // 3 and peel.method == "peel"
        assert len(rainbow) <= (n + t) // 2
        assert len(degree) == n - t
        for r in (peel, rainbow, degree):
            assert g.is_double_dominating(r.set)
            assert exact.optimum <= len(r)

    text = ddmop.family_a(5).to_edge_list()
    assert ddmop.Graph.from_edge_list(text).edge_count == 17

    try:
        ddmop.exact_gamma_x2(cycle(15), budget=5)
    except ddmop.BudgetExceeded:
        pass
    else:
        raise AssertionError("budget not enforced")

    print("ddmop smoke test passed")


if __name__ == "__main__":
    main()
