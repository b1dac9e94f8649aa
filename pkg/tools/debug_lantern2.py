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
print("genus", lay.genus, "boundary", lay.n_boundary)
for k, c in enumerate(lay.boundary_cycles()):
    print("comp", k, c.format(lay.names))

curves = {
    "a1": PathCurve((("A", 1),)),
    "a2": PathCurve((("A", 1), ("P1", 1))),
    "a3": PathCurve((("A", 1), ("P1", 1), ("P2", 1), ("P3", 1))),
    "a4": PathCurve((("A", 1), ("P1", 1), ("P2", 1), ("P3", 1), ("P4", 1))),
    "runL": PathCurve(
        (("P5", 1), ("A", 1), ("P1", 1), ("P2", 1), ("P3", 1), ("P4", 1))
    ),
    "hopL": PathCurve((("P5", 1), ("A", 1))),
    "z1": Enclosure(1, 20),
    "d1": Enclosure(-4, -1),
    "out": Enclosure(-4, 24),
}
tw = {}
for k, c in curves.items():
    try:
        tw[k] = lay.twist(c)
    except Exception as exc:
        print("twist failed for", k, ":", exc)

# Boundary-disjointness: trio members must commute with all four boundary
# twists of the lantern.
boundary = ["a1", "a4", "d1", "out"]
for trio_name in ["runL", "hopL", "z1"]:
    for b in boundary:
        a, bb = tw[trio_name], tw[b]
        if a * bb != bb * a:
            print("boundary crossing:", trio_name, "vs", b)

R = tw["a1"] * tw["a4"] * tw["d1"] * tw["out"]
for perm in itertools.permutations(["runL", "hopL", "z1"]):
    prod = tw[perm[0]] * tw[perm[1]] * tw[perm[2]]
    if prod == R:
        print("LANTERN-1 HIT:", perm)
