"""Smoke test for the rainbow_py extension. Build first with
`maturin develop -m crates/python/Cargo.toml`."""

import rainbow_py as rp

# K4 plus pendants on three clique vertices: rc equals the pendant count.
g = rp.Graph(7, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 5), (2, 6)])
clique, indep = rp.recognize_split(g)
assert sorted(clique) == [0, 1, 2, 3], clique
k, colours = rp.rc_split(g)
assert k == 3, k
ok, bad = rp.verify_rainbow(g, colours)
assert ok and bad is None
assert rp.rc_exact(g)[0] == k

assert rp.rc_exact(rp.Graph.cycle(6))[0] == 3
assert rp.rc_exact(rp.Graph.path(5))[0] == 4
assert rp.verify_rainbow(rp.Graph.path(3), [0, 0]) == (False, (0, 2))

try:
    rp.rc_exact(rp.Graph(3, [(0, 1)]))
except rp.DisconnectedError:
    pass
else:
    raise AssertionError("expected DisconnectedError")

sat = rp.sat_to_rc2(3, [[1, 2, 3]])
assert rp.solve_rc2(sat) is not None
unsat = [[a * 1, b * 2, c * 3] for a in (1, -1) for b in (1, -1) for c in (1, -1)]
assert rp.solve_rc2(rp.sat_to_rc2(3, unsat)) is None

assert "color=" in g.to_dot(colours)
print("ok")
