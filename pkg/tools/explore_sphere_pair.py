"""Find how the skip-pair curve on a 4-holed sphere arises as a twist image.

The three interior curves of a lantern configuration are the two adjacent
pairs and the skip pair.  The skip pair has no single-passage encoding in
some ambient arrangements, so we want an identity expressing its twist as a
conjugate of an adjacent pair twist.  Search exhaustively on the sphere.
"""

import sys

sys.path.insert(0, "src")

from dehnkit.bandmodel import Band, Enclosure, PathCurve, RibbonLayout

lay = RibbonLayout([Band("S1", 1, 2), Band("S2", 3, 4), Band("S3", 5, 6)])

curves = {
    "x12": Enclosure(1, 4),
    "x23": Enclosure(3, 6),
    "x13": PathCurve((("S1", 1), ("S3", 1))),
    "h1": Enclosure(1, 2),
    "h2": Enclosure(3, 4),
    "h3": Enclosure(5, 6),
    "h4": Enclosure(1, 6),
}
t = {k: lay.twist(c) for k, c in curves.items()}

target = t["x13"]
alphabet = [(k, s) for k in ("x12", "x23", "h1", "h2", "h3", "h4") for s in (1, -1)]

hom = {}
for k, s in alphabet:
    hom[(k, s)] = t[k] if s == 1 else t[k].inverse()

found = []
words = [()]
for l1 in alphabet:
    words.append((l1,))
for l1 in alphabet:
    for l2 in alphabet:
        if l1[0] == l2[0] and l1[1] == -l2[1]:
            continue
        words.append((l1, l2))

for base in ("x12", "x23"):
    for word in words:
        conj = None
        for l in word:
            conj = hom[l] if conj is None else conj * hom[l]
        tb = t[base]
        cand = tb if conj is None else conj * tb * conj.inverse()
        if cand == target:
            found.append((base, 1, word))
        elif cand == target.inverse():
            found.append((base, -1, word))

print(f"{len(found)} hits")
for base, s, word in found[:20]:
    print(f"  x13 twist^{s} = conj of {base} by {word}")
