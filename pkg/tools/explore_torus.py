"""Engine smoke test on the one-holed torus: boundary word, braid relation,
chain relation, twist images."""

from dehnkit.bandmodel import Band, PathCurve, Enclosure, RibbonLayout
from dehnkit.words import FreeWord, FreeHom

lay = RibbonLayout([Band("A", 1, 3), Band("B", 2, 4)])
names = lay.names
print("rank", lay.rank, "genus", lay.genus, "boundary", lay.n_boundary)
bw = lay.based_boundary_word()
print("based boundary word:", bw.format(names))
print("pairing:", lay.pairing())

alpha = PathCurve((("A", 1),))
beta = PathCurve((("B", 1),))
ta = lay.twist(alpha)
tb = lay.twist(beta)
print("t_alpha images:", [w.format(names) for w in ta.images])
print("t_beta  images:", [w.format(names) for w in tb.images])
print("t_alpha fixes boundary:", ta(bw) == bw)
print("t_beta fixes boundary:", tb(bw) == bw)
print("inverses verify:", ta.verify_inverse(), tb.verify_inverse())

print("braid:", ta * tb * ta == tb * ta * tb)

# chain relation: (t_a t_b)^6 equals the boundary twist, which is conjugation
# by the boundary word one way or the other
chain = (ta * tb) ** 6
n = lay.rank
conj_pos = FreeHom(n, [bw * FreeWord.generator(n, i) * bw.inverse() for i in range(n)],
                   [bw.inverse() * FreeWord.generator(n, i) * bw for i in range(n)])
conj_neg = conj_pos.inverse()
print("chain == conj by dw:", chain == conj_pos)
print("chain == conj by dw^-1:", chain == conj_neg)

# curve image: t_a t_b sends alpha's class to beta's class up to conjugacy/inversion
w_alpha = lay.curve_cycle_word(alpha)
w_beta = lay.curve_cycle_word(beta)
img = (ta * tb)(w_alpha)
print("t_a t_b (alpha):", img.format(names))
print("  conj to beta:", img.is_conjugate_to(w_beta), " conj to beta^-1:", img.is_conjugate_to(w_beta.inverse()))

# orientation independence: reversed curve gives the same twist
alpha_rev = PathCurve((("A", -1),))
print("reversed alpha same twist:", lay.twist(alpha_rev) == ta)

# abelianized action vs transvection
import itertools
pair = lay.pairing()
cls_a = lay.curve_class(alpha)
ab = ta.abelianized()
print("ab(t_alpha):", ab)
for x in range(n):
    col = [ab[i][x] for i in range(n)]
    base = [1 if i == x else 0 for i in range(n)]
    delta = [c - b for c, b in zip(col, base)]
    ip = pair[x][0] * cls_a[0] + pair[x][1] * cls_a[1]  # <x, [alpha]>
    print(f"  gen {names[x]}: delta {delta}, <x,[a]>[a] = {[ip*c for c in cls_a]}")
