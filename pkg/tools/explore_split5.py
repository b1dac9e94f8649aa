"""Certify lantern residuals as genuine twists.

The embedded B-curve candidates pass every disjointness filter; what is
left is showing the residual twist each one implies is itself a twist,
namely a conjugate of the matching pair curve.  The conjugating pool
includes through-tube curves, which earlier hunts lacked.
"""

import sys
import time
from math import gcd

sys.path.insert(0, "tools")
from explore_appendix import stage_b  # noqa: E402
from explore_split2 import dfs_sequences  # noqa: E402

from dehnkit.bandmodel import PathCurve, LayoutError  # noqa: E402
from collections import Counter  # noqa: E402


def twist_class(h):
    """Primitive transvection vector of an abelianized twist, or None."""
    m = h.abelianized()
    n = len(m)
    for j in range(n):
        col = [m[i][j] - (1 if i == j else 0) for i in range(n)]
        if any(col):
            g = 0
            for x in col:
                g = gcd(g, abs(x))
            return tuple(x // g for x in col)
    return None


def main():
    ext, cm, C, t, tTb, t_w1, t_w2, lhs3, T3, T4 = stage_b()
    print("--- residual certification ---")

    curves = dict(C)
    for k in ("delta1", "delta2", "delta3", "delta4"):
        curves.pop(k)
    curves["c1pair"] = PathCurve((("Q4", 1), ("E1", 1)))
    curves["c2pair"] = PathCurve((("Q3", 1), ("Q4", 1)))
    curves["tube"] = PathCurve((("T1", 1),))
    curves["tubeQ2"] = PathCurve((("Q2", 1), ("T1", 1)))
    curves["tubeD1"] = PathCurve((("T1", 1), ("D1", 1)))

    pool = {}
    for k, cur in curves.items():
        pool[k] = t[k] if k in t else cm.induce(ext.twist(cur))
    pool["Tbeta"] = tTb

    for k in ("y1", "alpha1", "tubeD1", "tubeQ2", "d1"):
        print(f"engine class {k}: {twist_class(pool[k])}")
    c3 = twist_class(T3)
    c4 = twist_class(T4)
    print("target B21 class:", c3)
    print("target B22 class:", c4)

    P3 = t["x1"] * t["alpha3"] * t["x2"] * t["alpha1"]
    P4 = t["y1"] * t["alpha2"] * t["y2"] * t["alpha4"]
    bd3 = [t["x1"], t["alpha3"], t["x2"], t["alpha1"]]
    bd4 = [t["y1"], t["alpha2"], t["y2"], t["alpha4"]]

    def embedded_b(head, rest, pair_sets, bd, td, target, label):
        """Filtered candidate twists for a pair-of-curves class."""
        homs = {}
        for pairs in pair_sets:
            pool_ms = Counter(rest)
            for name in pairs:
                pool_ms[(name, 1)] += 1
                pool_ms[(name, -1)] += 1
            for seq in dfs_sequences(ext, head, pool_ms):
                try:
                    variants = ext.twist_variants(PathCurve(seq))
                except LayoutError:
                    continue
                for vi, h in enumerate(variants):
                    tb = cm.induce(h)
                    if tb in homs:
                        continue
                    if twist_class(tb) not in (target, tuple(-x for x in target)):
                        continue
                    if not all(tb * b == b * tb for b in bd):
                        continue
                    if tb * td == td * tb:
                        continue
                    homs[tb] = (seq, vi)
                    print(f"  {label} candidate: {seq} v{vi}")
        print(f"{label}: {len(homs)} distinct filtered twists")
        return homs

    b_sets = [
        (),
        ("T1",),
        ("D1",),
        ("Q2",),
        ("Q3",),
        ("T1", "D1"),
        ("T1", "Q2"),
        ("T1", "Q3"),
        ("T1", "A"),
        ("T1", "B"),
        ("D1", "Q2"),
    ]
    tb3 = embedded_b(
        ("A", 1),
        [("A", 1), ("Q2", 1), ("Q3", 1), ("Q3", 1), ("Q4", 1), ("E1", 1)],
        b_sets, bd3, t["d1"], c3, "B21",
    )
    tb4 = embedded_b(
        ("A", 1),
        [("A", 1), ("Q2", 1), ("Q2", 1), ("Q3", 1), ("Q4", 1), ("D1", 1)],
        b_sets, bd4, t["d2"], c4, "B22a",
    )
    tb4.update(embedded_b(
        ("A", 1),
        [("A", 1), ("Q2", 1), ("Q3", 1), ("Q4", 1)],
        b_sets, bd4, t["d2"], c4, "B22b",
    ))

    def residuals(homs, P, td):
        td_inv = td.inverse()
        out = {}
        for tb, tag in homs.items():
            tb_inv = tb.inverse()
            for rot, S in (
                ("BCd", tb_inv * P * td_inv),
                ("CdB", P * tb_inv * td_inv),
                ("dBC", tb_inv * td_inv * P),
            ):
                out.setdefault(S, (tag, rot))
        return out

    want3 = residuals(tb3, P3, t["d1"])
    want4 = residuals(tb4, P4, t["d2"])
    print(f"L3 residuals: {len(want3)}; L4 residuals: {len(want4)}")

    gens = [(k, pool[k], pool[k].inverse()) for k in sorted(pool)]

    def inv_key(kk):
        return kk[:-1] if kk.endswith("'") else kk + "'"

    def certify(base_key, want, label, max_depth=3):
        frontier = {pool[base_key]: ()}
        seen = dict(frontier)
        hits = []
        if pool[base_key] in want:
            print(f"{label} TRIVIAL: base itself matches {want[pool[base_key]]}")
        for depth in range(1, max_depth + 1):
            t0 = time.time()
            nxt = {}
            for h, word in frontier.items():
                for k, g, g_inv in gens:
                    for kk, h2 in ((k, g * h * g_inv), (k + "'", g_inv * h * g)):
                        if word and kk == inv_key(word[0]):
                            continue
                        if h2 in seen or h2 in nxt:
                            continue
                        nxt[h2] = (kk,) + word
                        if h2 in want:
                            hits.append((nxt[h2], want[h2]))
                            print(f"{label} CERTIFIED: C = {nxt[h2]} ({base_key}) <- B {want[h2]}")
            seen.update(nxt)
            frontier = nxt
            print(f"  {label} depth {depth}: {len(seen)} conjugates, {time.time()-t0:.1f}s")
            if hits:
                break
        return hits

    certify("c1pair", want3, "L3")
    certify("c2pair", want4, "L4")


if __name__ == "__main__":
    main()
