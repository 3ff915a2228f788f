"""Python smoke tests for the extension module."""

import math
import random

import arcunion as au


def test_disc_union_basics():
    u = au.DiscUnion()
    rep = u.insert(0.0, 0.0)
    assert rep["class"] == "disjoint"
    assert abs(u.area() - math.pi) < 1e-12

    rep = u.insert(1.0, 0.0)
    assert rep["class"] == "normal"
    assert abs(u.area() - au.two_disc_union_area(1.0)) < 1e-9

    rep = u.insert(1.0, 0.0)
    assert rep["class"] == "contained"
    assert rep["k"] == 0

    arcs = u.boundary()
    assert len(arcs) == 2
    snap = u.save()
    v = au.DiscUnion.load(snap)
    assert v.area() == u.area()
    assert "<svg" in u.svg()


def test_three_discs_inclusion_exclusion():
    rng = random.Random(7)
    for _ in range(20):
        pts = [(rng.uniform(0, 1.6), rng.uniform(0, 1.6)) for _ in range(3)]
        u = au.DiscUnion()
        for x, y in pts:
            u.insert(x, y)
        want = au.three_disc_union_area(*pts[0], *pts[1], *pts[2])
        assert abs(u.area() - want) < 1e-9


def test_monte_carlo_agrees():
    rng = random.Random(3)
    pts = [(rng.uniform(0, 5), rng.uniform(0, 5)) for _ in range(40)]
    u = au.DiscUnion()
    for x, y in pts:
        u.insert(x, y)
    est, se = au.mc_area(pts, 500000, 11)
    assert abs(u.area() - est) < 4 * se


def test_lower_envelope():
    env = au.LowerEnvelope()
    env.add_line(-1.0, 0.0, 0)
    env.add_line(1.0, 0.0, 1)
    assert env.ray_shoot(-2.0) == 1
    assert env.ray_shoot(2.0) == 0
    segs = env.envelope()
    assert len(segs) == 2
    env.add_line(0.0, -5.0, 2)
    assert env.ray_shoot(0.0) == 2
    assert env.curves_below(0.0, 10.0) == [0, 1, 2]
    env.remove(2)
    assert len(env) == 2
    # oracle comparison on a random family
    rng = random.Random(5)
    lines = {}
    for i in range(3, 203):
        s, b = rng.uniform(-3, 3), rng.uniform(-10, 10)
        env.add_line(s, b, i)
        lines[i] = (s, b)
    lines[0] = (-1.0, 0.0)
    lines[1] = (1.0, 0.0)
    for _ in range(50):
        x = rng.uniform(-20, 20)
        got = env.ray_shoot(x)
        best = min(lines, key=lambda i: lines[i][0] * x + lines[i][1])
        by = lines[best][0] * x + lines[best][1]
        gy = lines[got][0] * x + lines[got][1]
        assert abs(gy - by) < 1e-9


def test_arcsearch_matches_bruteforce():
    rng = random.Random(11)
    idx = au.ArcSearchIndex()
    arcs = {}
    for i in range(120):
        a = math.pi + rng.uniform(0.001, math.pi - 0.002)
        b = min(2 * math.pi, a + 0.001 + rng.uniform(0, 2 * math.pi - a - 0.001))
        arc = (rng.uniform(0, 6), rng.uniform(0, 6), a, b)
        arcs[i] = arc
        idx.insert(*arc, i)
    for i in range(0, 120, 3):
        idx.erase(i)
        del arcs[i]
    for _ in range(60):
        q = (rng.uniform(-1, 7), rng.uniform(-1, 7))
        got = idx.query_disc(*q)
        want = sorted(
            i for i, arc in arcs.items() if au.arc_intersects_disc(*arc, *q)
        )
        assert got == want


def test_criteria_identity_sample():
    rng = random.Random(13)
    disagreements = 0
    for _ in range(2000):
        a = math.pi + rng.uniform(0.001, math.pi - 0.002)
        b = min(2 * math.pi, a + 0.001 + rng.uniform(0, 2 * math.pi - a - 0.001))
        arc = (rng.uniform(0, 4), rng.uniform(0, 4), a, b)
        q = (rng.uniform(-2, 6), rng.uniform(-2, 6))
        if au.criteria_check(*arc, *q) != au.arc_intersects_disc(*arc, *q):
            disagreements += 1
    assert disagreements <= 2  # borderline-only


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"{t.__name__}: ok")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    main()
