import itertools
import sys

sys.path.insert(0, "src")

from dehnkit.bandmodel import Band, Enclosure, PathCurve, RibbonLayout

lay = RibbonLayout(
    [
        Band("A", 1, 3),
        Band("B", 2, 4),
        Band("P1", 5, 8),
        Band("P2", 9, 12),
        Band("P3", 13, 16),
        Band("P4", 17, 20),
        Band("P5", 21, 24),
    ]
)

alpha1 = PathCurve((("A", 1),))
alpha4 = PathCurve((("A", 1), ("P1", 1), ("P2", 1), ("P3", 1), ("P4", 1)))
run5 = PathCurve((("A", 1), ("P1", 1), ("P2", 1), ("P3", 1), ("P4", 1), ("P5", 1)))
hop5 = PathCurve((("A", 1), ("P5", 1)))

t_a1 = lay.twist(alpha1)
t_a4 = lay.twist(alpha4)
t_run5 = lay.twist(run5)
t_hop5 = lay.twist(hop5)
t_z1 = lay.twist(Enclosure(1, 20))
t_d1 = lay.twist(Enclosure(21, 24))
t_out = lay.twist(Enclosure(1, 24))

R = t_a1 * t_a4 * t_d1 * t_out

trio = {"run5": t_run5, "hop5": t_hop5, "z1": t_z1}
for perm in itertools.permutations(trio):
    prod = trio[perm[0]] * trio[perm[1]] * trio[perm[2]]
    print(perm, prod == R)

# Show what the closest product misses.
q = R * t_z1.inverse()
for name, tw in [("hop5*run5", t_hop5 * t_run5), ("run5*hop5", t_run5 * t_hop5)]:
    prod_names = []
    for g in range(lay.rank):
        w = FreeWord = None
    print(name, "equal:", tw == q)

from dehnkit.words import FreeWord

gen = lambda i: FreeWord.generator(lay.rank, i)
for g in range(lay.rank):
    a = q.apply(gen(g))
    b = (t_hop5 * t_run5).apply(gen(g))
    c = (t_run5 * t_hop5).apply(gen(g))
    flag = " " if a == b else "*"
    print(
        f"{flag} {lay.names[g]}: q={a.format(lay.names)} | hr={b.format(lay.names)} | rh={c.format(lay.names)}"
    )
