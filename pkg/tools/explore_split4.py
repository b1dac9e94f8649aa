"""Conjugator hunt for the lantern splits.

Pair-of-curves classes are immobile under twists whose classes avoid the
tube direction, so the pool here adds through-tube curves.  The hunt is
class-guided: meet-in-the-middle search over abelianized actions finds
words w with w([base]) equal to the wanted class, then each lift is
checked at the word level against the lantern residuals.
"""

import sys
import time

sys.path.insert(0, "tools")
from explore_appendix import stage_b  # noqa: E402

from dehnkit.bandmodel import PathCurve, LayoutError  # noqa: E402


def matvec(m, v):
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


def main():
    ext, cm, C, t, tTb, t_w1, t_w2, lhs3, T3, T4 = stage_b()
    print("--- conjugator hunt ---")

    curves = dict(C)
    curves.pop("delta1"), curves.pop("delta2")
    curves.pop("delta3"), curves.pop("delta4")
    curves["c1pair"] = PathCurve((("Q4", 1), ("E1", 1)))
    curves["c2pair"] = PathCurve((("Q3", 1), ("Q4", 1)))
    # Tube-passing curves unlock the tube direction of the pairing.
    curves["tube"] = PathCurve((("T1", 1),))
    curves["tubeQ2"] = PathCurve((("Q2", 1), ("T1", 1)))
    curves["tubeD1"] = PathCurve((("T1", 1), ("D1", 1)))

    pool = {}
    for k, cur in curves.items():
        pool[k] = t[k] if k in t else cm.induce(ext.twist(cur))
    pool["Tbeta"] = tTb

    def capped_class(cur):
        v = list(ext.curve_class(cur))
        v[2] += v[5]
        del v[5]
        return tuple(v)

    cls = {k: capped_class(cur) for k, cur in curves.items()}
    print("classes:")
    for k in sorted(cls):
        print(f"  {k}: {cls[k]}")
    c3 = tuple(a + b for a, b in zip(cls["x1"], cls["x2"]))
    c4 = tuple(a + b for a, b in zip(cls["y1"], cls["y2"]))
    print("target B21 class:", c3)
    print("target B22 class:", c4)

    ab = {}
    for k, h in pool.items():
        ab[k] = [row[:] for row in h.abelianized()]
        ab[k + "'"] = [row[:] for row in h.inverse().abelianized()]

    def inv_name(g):
        return g[:-1] if g.endswith("'") else g + "'"

    def bfs2(start, target, depth_each=5, cap=250000, max_paths=40):
        if start == target:
            return [[]]
        seenF = {start: None}
        seenB = {target: None}
        frontF = [start]
        frontB = [target]
        paths = []

        def build(meet):
            fwd = []
            u = meet
            while seenF[u] is not None:
                u, g = seenF[u]
                fwd.append(g)
            fwd.reverse()
            u = meet
            while seenB[u] is not None:
                u, g = seenB[u]
                fwd.append(inv_name(g))
            return fwd

        for d in range(depth_each):
            for side in ("F", "B"):
                seen, front = (seenF, frontF) if side == "F" else (seenB, frontB)
                other = seenB if side == "F" else seenF
                new = []
                for v in front:
                    for g, m in ab.items():
                        w = matvec(m, v)
                        if w in seen:
                            continue
                        seen[w] = (v, g)
                        new.append(w)
                        if w in other:
                            paths.append(build(w))
                            if len(paths) >= max_paths:
                                return paths
                    if len(seen) > cap:
                        return paths
                if side == "F":
                    frontF = new
                else:
                    frontB = new
                if paths:
                    return paths
        return paths

    def lift(path):
        h = None
        for g in path:
            base = pool[g[:-1]] if g.endswith("'") else pool[g]
            step = base.inverse() if g.endswith("'") else base
            h = step if h is None else step * h
        return h

    P3 = t["x1"] * t["alpha3"] * t["x2"] * t["alpha1"]
    P4 = t["y1"] * t["alpha2"] * t["y2"] * t["alpha4"]
    bd3 = [t["x1"], t["alpha3"], t["x2"], t["alpha1"]]
    bd4 = [t["y1"], t["alpha2"], t["y2"], t["alpha4"]]
    neg = lambda v: tuple(-x for x in v)

    def hunt(label, base_names, target, P, td, bd):
        td_inv = td.inverse()
        results = []
        for bname in base_names:
            start = cls[bname]
            for tgt in (target, neg(target)):
                t0 = time.time()
                paths = bfs2(start, tgt, 5)
                print(f"  {label} {bname} -> {tgt}: {len(paths)} class paths, {time.time()-t0:.1f}s")
                ok = 0
                for path in paths:
                    W = lift(path)
                    T = W * pool[bname] * W.inverse()
                    if not all(T * b == b * T for b in bd):
                        continue
                    if T * td == td * T:
                        continue
                    ok += 1
                    print(f"    lift passes filters: {path}")
                    T_inv = T.inverse()
                    for rot, S in (
                        ("BCd", T_inv * P * td_inv),
                        ("CdB", P * T_inv * td_inv),
                        ("dBC", T_inv * td_inv * P),
                    ):
                        results.append((bname, tuple(path), rot, T, S))
                print(f"    {ok} lifts pass filters")
        print(f"{label}: {len(results)} (base, rotation) residuals to certify")
        return results

    res3 = hunt("L3", ["x1", "y2", "alpha3"], c3, P3, t["d1"], bd3)
    res4 = hunt("L4", ["y1", "x2", "alpha2"], c4, P4, t["d2"], bd4)

    # Certify residuals as genuine twists: conjugates of pair curves.
    def certify(results, base_keys, label):
        if not results:
            return
        want = {}
        for bname, path, rot, T, S in results:
            want.setdefault(S, []).append((bname, path, rot))
        gens = [(k, pool[k], pool[k].inverse()) for k in pool]
        for bk in base_keys:
            frontier = {pool[bk]: ()}
            out = dict(frontier)
            for depth in range(1, 4):
                nxt = {}
                for h, word in frontier.items():
                    for k, g, g_inv in gens:
                        h2 = g * h * g_inv
                        if h2 not in out and h2 not in nxt:
                            nxt[h2] = (k,) + word
                            if h2 in want:
                                for bname, path, rot in want[h2]:
                                    print(
                                        f"{label} CERTIFIED: B from {bname} via {path} rot {rot}"
                                        f" / C = {nxt[h2]} applied to {bk}"
                                    )
                out.update(nxt)
                frontier = nxt
                print(f"  {label} {bk} conjugates at depth {depth}: {len(out)}")

    certify(res3, ["c1pair", "c2pair"], "L3")
    certify(res4, ["c2pair", "c1pair"], "L4")


if __name__ == "__main__":
    main()
