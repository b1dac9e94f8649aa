"""Close the lantern splits: match solved interior twists to actual curves.

The B-curve candidates surviving the disjointness filters pin the other
interior twist up to trio rotation; this enumerates deeper curve spaces
for the C-curves and looks the solved homs up by equality.
"""

import itertools
import sys
import time

sys.path.insert(0, "tools")
from explore_appendix import stage_b  # noqa: E402
from explore_split2 import dfs_sequences  # noqa: E402

from dehnkit.bandmodel import PathCurve, LayoutError  # noqa: E402
from collections import Counter  # noqa: E402


def enumerate_c(ext, cm, head, rest, pair_sets, targets, label):
    """DFS candidate curves against the solved twist targets."""
    found = []
    t0 = time.time()
    n_emb = 0
    for pairs in pair_sets:
        pool = Counter(rest)
        for name in pairs:
            pool[(name, 1)] += 1
            pool[(name, -1)] += 1
        for seq in dfs_sequences(ext, head, pool):
            try:
                variants = ext.twist_variants(PathCurve(seq))
            except LayoutError:
                continue
            n_emb += 1
            for vi, h in enumerate(variants):
                ind = cm.induce(h)
                if ind in targets:
                    found.append((seq, vi, targets[ind]))
                    print(f"{label} HIT: C = {seq} variant {vi} <- {targets[ind]}")
        print(f"  {label} pairs={pairs}: cumulative {n_emb} embedded, {time.time()-t0:.1f}s")
    print(f"{label}: {n_emb} embedded candidates, {len(found)} hits, {time.time()-t0:.1f}s")
    return found


def solved_targets(ext, cm, P, t_d, b_cands, boundary, t_cross):
    """Candidate C-twists implied by each B-candidate and trio rotation."""
    td_inv = t_d.inverse()
    targets = {}
    for name, seq in b_cands:
        try:
            variants = ext.twist_variants(PathCurve(seq))
        except LayoutError:
            continue
        for vi, h in enumerate(variants):
            tb = cm.induce(h)
            if not all(tb * b == b * tb for b in boundary):
                continue
            if tb * t_cross == t_cross * tb:
                continue
            tb_inv = tb.inverse()
            for rot, tc in (
                ("BCd", tb_inv * P * td_inv),
                ("CdB", P * tb_inv * td_inv),
                ("dBC", tb_inv * td_inv * P),
            ):
                targets.setdefault(tc, (name, vi, rot))
    return targets


def b_candidates(ext, cm, head, rest, pair_sets, boundary, t_cross, label):
    """Filtered B-curve candidates: boundary-disjoint, d-crossing."""
    cands = []
    for pairs in pair_sets:
        pool = Counter(rest)
        for name in pairs:
            pool[(name, 1)] += 1
            pool[(name, -1)] += 1
        for seq in dfs_sequences(ext, head, pool):
            try:
                variants = ext.twist_variants(PathCurve(seq))
            except LayoutError:
                continue
            for vi, h in enumerate(variants):
                tb = cm.induce(h)
                if all(tb * b == b * tb for b in boundary) and not (
                    tb * t_cross == t_cross * tb
                ):
                    cands.append((f"{label}{len(cands)}", seq))
                    break
    print(f"{label} filtered candidates: {len(cands)}")
    for name, seq in cands:
        print(f"  {name}: {seq}")
    return cands


def main():
    stage = sys.argv[1] if len(sys.argv) > 1 else "all"
    ext, cm, C, t, tTb, t_w1, t_w2, lhs3, T3, T4 = stage_b()
    print("--- split hunt 3 ---")
    P3 = t["x1"] * t["alpha3"] * t["x2"] * t["alpha1"]
    P4 = t["y1"] * t["alpha2"] * t["y2"] * t["alpha4"]
    bd3 = [t["x1"], t["alpha3"], t["x2"], t["alpha1"]]
    bd4 = [t["y1"], t["alpha2"], t["y2"], t["alpha4"]]

    if stage in ("l3", "all"):
        b21_cands = [
            ("r9", (("A", 1), ("Q2", 1), ("Q3", 1), ("Q4", 1), ("T1", -1), ("Q3", 1), ("A", 1), ("T1", 1), ("E1", 1))),
            ("r11a", (("A", 1), ("Q2", 1), ("Q3", 1), ("Q4", 1), ("D1", -1), ("T1", -1), ("Q3", 1), ("A", 1), ("T1", 1), ("D1", 1), ("E1", 1))),
            ("r11b", (("A", 1), ("Q2", 1), ("Q3", 1), ("Q4", 1), ("D1", 1), ("T1", -1), ("Q3", 1), ("A", 1), ("T1", 1), ("D1", -1), ("E1", 1))),
        ]
        tg3 = solved_targets(ext, cm, P3, t["d1"], b21_cands, bd3, t["d1"])
        print(f"L3 solved targets: {len(tg3)}")
        c_sets = [()] + [
            s
            for r in (1, 2, 3)
            for s in itertools.combinations(["A", "B", "Q2", "Q3", "D1", "T1"], r)
        ]
        enumerate_c(ext, cm, ("Q4", 1), [("E1", 1)], c_sets, tg3, "L3")

    if stage in ("l4", "all"):
        b_sets = [
            (),
            ("T1",),
            ("D1",),
            ("Q2",),
            ("T1", "D1"),
            ("T1", "Q2"),
            ("T1", "B"),
            ("T1", "A"),
            ("T1", "Q3"),
            ("D1", "Q2"),
        ]
        cands = b_candidates(
            ext, cm, ("A", 1),
            [("A", 1), ("Q2", 1), ("Q2", 1), ("Q3", 1), ("Q4", 1), ("D1", 1)],
            b_sets, bd4, t["d2"], "s",
        )
        cands += b_candidates(
            ext, cm, ("A", 1),
            [("A", 1), ("Q2", 1), ("Q3", 1), ("Q4", 1)],
            b_sets, bd4, t["d2"], "u",
        )
        tg4 = solved_targets(ext, cm, P4, t["d2"], cands, bd4, t["d2"])
        print(f"L4 solved targets: {len(tg4)}")
        c_sets = [()] + [
            s
            for r in (1, 2, 3)
            for s in itertools.combinations(["A", "B", "Q2", "D1", "T1"], r)
        ]
        enumerate_c(ext, cm, ("Q3", 1), [("Q4", 1)], c_sets, tg4, "L4")


if __name__ == "__main__":
    main()
