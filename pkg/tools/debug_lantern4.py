"""Brute search for the wrap-gap lantern trio on the six-holed torus."""

import itertools
import sys

sys.path.insert(0, "src")

from dehnkit.bandmodel import Band, Enclosure, PathCurve, RibbonLayout

lay = RibbonLayout(
    [
        Band("P5", -4, -1),
        Band("A", 1, 3),
        Band("B", 2, 4),
        Band("P1", 5, 8),
        Band("P2", 9, 12),
        Band("P3", 13, 16),
        Band("P4", 17, 20),
    ]
)
names = ["P5", "A", "B", "P1", "P2", "P3", "P4"]

t_a1 = lay.twist(PathCurve((("A", 1),)))
t_a4 = lay.twist(PathCurve((("A", 1), ("P1", 1), ("P2", 1), ("P3", 1), ("P4", 1))))
t_z1 = lay.twist(Enclosure(1, 20))
t_d1 = lay.twist(Enclosure(-4, -1))
t_out = lay.twist(Enclosure(-4, 24))
boundary = [t_a1, t_a4, t_d1, t_out]

R = t_a1 * t_a4 * t_d1 * t_out

# Enumerate candidate path curves up to 4 passages; keep those whose twist
# exists and commutes with all four lantern boundary twists, and which are
# essential for the lantern (not boundary parallel).
cands = []
seen_homs = {}
for k in range(1, 5):
    for combo in itertools.permutations(names, k):
        # fix cyclic rotation: smallest band name first
        if combo[0] != min(combo):
            continue
        for signs in itertools.product((1, -1), repeat=k):
            if signs[0] == -1:
                continue  # orientation reversal gives the same twist
            cur = PathCurve(tuple(zip(combo, signs)))
            try:
                tw = lay.twist(cur)
            except Exception:
                continue
            if any(tw * b != b * tw for b in boundary):
                continue
            key = tw
            if key in seen_homs:
                continue
            seen_homs[key] = cur
            cands.append((cur, tw))

print("boundary-disjoint candidates:", len(cands))
for cur, _ in cands:
    print("   ", cur.passages, lay.curve_class(cur))

# Search ordered pairs (X, Y) with t_X t_Y t_z1 == R.
target = R * t_z1.inverse()
hits = []
for (c1, tw1), (c2, tw2) in itertools.permutations(cands, 2):
    if tw1 * tw2 == target:
        hits.append((c1, c2))
print("trio hits with z1 last:", len(hits))
for c1, c2 in hits:
    print("  x1 =", c1.passages, " y1 =", c2.passages)
