"""Pin conventions: enclosure twist sign vs path-derived twists, the chain
relation vs full enclosure, and the lantern relation on the 4-holed sphere."""

from itertools import permutations, product

from dehnkit.bandmodel import Band, PathCurve, Enclosure, RibbonLayout
from dehnkit.words import FreeWord, FreeHom

# 1) torus: full enclosure must equal (t_a t_b)^6
lay = RibbonLayout([Band("A", 1, 3), Band("B", 2, 4)])
ta = lay.twist(PathCurve((("A", 1),)))
tb = lay.twist(PathCurve((("B", 1),)))
chain = (ta * tb) ** 6
t_full = lay.twist(Enclosure(1, 4))
print("full enclosure == chain:", t_full == chain)
print("full enclosure == chain^-1:", t_full == chain.inverse())

# 2) 4-holed sphere: three bridges; compare 2-bridge enclosure against its
# path encoding
s4 = RibbonLayout([Band("S1", 1, 2), Band("S2", 3, 4), Band("S3", 5, 6)])
names = s4.names
print("sphere boundary comps:", [w.format(names) for w in s4.boundary_cycles()])
enc12 = s4.twist(Enclosure(1, 4))
path12 = s4.twist(PathCurve((("S1", 1), ("S2", 1))))
print("enclosure(S1,S2) == path(S1,S2):", enc12 == path12)
print("enclosure images:", [w.format(names) for w in enc12.images])
print("path images:     ", [w.format(names) for w in path12.images])

# 3) lantern hunt: interior curves are the three 2-bridge circles around
# pairs (12), (23), and (13); the last needs a path passing over S2 or a
# different route. x13 = passage S1 then S3, chords crossing S2's tails.
x12 = s4.twist(PathCurve((("S1", 1), ("S2", 1))))
x23 = s4.twist(PathCurve((("S2", 1), ("S3", 1))))
x13 = s4.twist(PathCurve((("S1", 1), ("S3", 1))))
bw = s4.based_boundary_word()
n = s4.rank
t_outer = s4.twist(Enclosure(1, 6))
print("outer == conj by bw:", t_outer.images == tuple(bw * FreeWord.generator(n, i) * bw.inverse() for i in range(n)))

# boundary twists about the three small holes act trivially
for nm in names:
    i = s4.index[nm]
    b = s4.bands[i]
    t_hole = s4.twist(Enclosure(b.f0, b.f1))
    print(f"hole twist {nm} trivial:", t_hole.is_identity)

# RHS = t_outer (other three trivial). Try orderings of the three interior twists.
rhs = t_outer
for combo in permutations([("x12", x12), ("x23", x23), ("x13", x13)]):
    f = combo[0][1] * combo[1][1] * combo[2][1]
    if f == rhs:
        print("LANTERN:", " ".join(c[0] for c in combo), "= outer  (HANDEDNESS +1 works)")
for combo in permutations([("x12", x12), ("x23", x23), ("x13", x13)]):
    f = (combo[0][1] * combo[1][1] * combo[2][1]).inverse()
    if f == rhs:
        print("lantern with all inverses:", " ".join(c[0] for c in combo))
