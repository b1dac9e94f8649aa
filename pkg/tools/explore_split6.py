"""Direct test of tube-detour curve shapes for the lantern splits.

The surviving pair-of-curves candidates all share one shape: the first
curve's passages interrupted by a through-tube detour that traverses the
second curve, then returns.  This applies the same shape to the other
interior curve of each lantern and checks the induced twists against the
solved residuals.
"""

import itertools
import sys
import time

sys.path.insert(0, "tools")
from explore_appendix import stage_b  # noqa: E402
from explore_split2 import dfs_sequences  # noqa: E402

from dehnkit.bandmodel import PathCurve, LayoutError  # noqa: E402
from collections import Counter  # noqa: E402


def main():
    ext, cm, C, t, tTb, t_w1, t_w2, lhs3, T3, T4 = stage_b()
    print("--- direct split test ---")

    P3 = t["x1"] * t["alpha3"] * t["x2"] * t["alpha1"]
    P4 = t["y1"] * t["alpha2"] * t["y2"] * t["alpha4"]
    bd3 = [t["x1"], t["alpha3"], t["x2"], t["alpha1"]]
    bd4 = [t["y1"], t["alpha2"], t["y2"], t["alpha4"]]

    b21_seqs = [
        (("A", 1), ("Q2", 1), ("Q3", 1), ("Q4", 1), ("T1", -1), ("Q3", 1), ("A", 1), ("T1", 1), ("E1", 1)),
        (("A", 1), ("Q2", 1), ("Q3", 1), ("Q4", 1), ("D1", -1), ("T1", -1), ("Q3", 1), ("A", 1), ("T1", 1), ("D1", 1), ("E1", 1)),
        (("A", 1), ("Q2", 1), ("Q3", 1), ("Q4", 1), ("D1", 1), ("T1", -1), ("Q3", 1), ("A", 1), ("T1", 1), ("D1", -1), ("E1", 1)),
    ]
    b22_seqs = [
        (("A", 1), ("Q2", 1), ("Q3", 1), ("Q4", 1), ("D1", 1), ("T1", -1), ("A", 1), ("Q2", 1), ("T1", 1)),
        (("A", 1), ("Q2", 1), ("Q3", 1), ("Q4", 1), ("D1", 1), ("T1", -1), ("Q2", 1), ("A", 1), ("T1", 1)),
        (("A", 1), ("Q2", 1), ("Q3", 1), ("Q4", 1), ("T1", -1), ("Q2", 1), ("A", 1), ("T1", 1), ("D1", 1)),
        (("A", 1), ("Q2", 1), ("Q3", 1), ("Q4", 1), ("D1", -1), ("T1", -1), ("Q2", 1), ("A", 1), ("T1", 1), ("D1", 1), ("D1", 1)),
        (("A", 1), ("Q2", 1), ("Q3", 1), ("Q4", 1), ("D1", 1), ("D1", 1), ("T1", -1), ("A", 1), ("Q2", 1), ("T1", 1), ("D1", -1)),
        (("A", 1), ("Q2", 1), ("Q3", 1), ("Q4", 1), ("T1", -1), ("A", 1), ("T1", 1)),
        (("A", 1), ("Q2", 1), ("Q3", 1), ("Q4", 1), ("D1", -1), ("T1", -1), ("A", 1), ("T1", 1), ("D1", 1)),
        (("A", 1), ("Q2", 1), ("Q3", 1), ("Q4", 1), ("D1", 1), ("T1", -1), ("A", 1), ("T1", 1), ("D1", -1)),
    ]

    def residual_map(seqs, P, td, bd, label):
        td_inv = td.inverse()
        out = {}
        for seq in seqs:
            for vi, h in enumerate(ext.twist_variants(PathCurve(seq))):
                tb = cm.induce(h)
                if not all(tb * b == b * tb for b in bd):
                    continue
                if tb * td == td * tb:
                    continue
                S = tb.inverse() * P * td_inv
                out.setdefault(S, (seq, vi))
        print(f"{label}: {len(out)} residuals")
        return out

    want3 = residual_map(b21_seqs, P3, t["d1"], bd3, "L3")
    want4 = residual_map(b22_seqs, P4, t["d2"], bd4, "L4")

    # Direct candidates: first curve with a tube detour traversing the
    # reversed second curve.
    def detour_candidates(first, second_rev, label):
        """All insert positions for a (T1-) ... (T1+) detour block."""
        cands = []
        n = len(first)
        for cut in range(n + 1):
            for block in itertools.permutations(second_rev):
                seq = (
                    first[:cut]
                    + (("T1", -1),)
                    + block
                    + (("T1", 1),)
                    + first[cut:]
                )
                cands.append(seq)
            # Reversed tube direction.
            for block in itertools.permutations(second_rev):
                seq = (
                    first[:cut]
                    + (("T1", 1),)
                    + block
                    + (("T1", -1),)
                    + first[cut:]
                )
                cands.append(seq)
        print(f"{label}: {len(cands)} direct candidates")
        return cands

    x1 = (("A", 1), ("Q2", 1), ("Q3", 1), ("Q4", 1), ("E1", 1))
    a3_rev = (("Q3", -1), ("Q2", -1), ("A", -1))
    y1 = (("A", 1), ("Q2", 1), ("Q3", 1), ("Q4", 1), ("D1", 1))
    a2_rev = (("A", -1),)

    def check(cands, want, label):
        hits = []
        n_emb = 0
        for seq in cands:
            try:
                variants = ext.twist_variants(PathCurve(seq))
            except LayoutError:
                continue
            n_emb += 1
            for vi, h in enumerate(variants):
                S = cm.induce(h)
                if S in want:
                    hits.append((seq, vi, want[S]))
                    print(f"{label} HIT: C = {seq} v{vi}")
                    print(f"   matches B = {want[S]}")
        print(f"{label}: {n_emb} embedded, {len(hits)} hits")
        return hits

    hits3 = check(detour_candidates(x1, a3_rev, "C1"), want3, "L3")
    hits4 = check(detour_candidates(y1, a2_rev, "C2"), want4, "L4")

    if not hits3:
        print("L3 fallback: enumerating 4-pair space")
        pool = Counter([("E1", 1)])
        for name in ("A", "Q2", "Q3", "T1"):
            pool[(name, 1)] += 1
            pool[(name, -1)] += 1
        n_emb = 0
        t0 = time.time()
        for seq in dfs_sequences(ext, ("Q4", 1), pool):
            try:
                variants = ext.twist_variants(PathCurve(seq))
            except LayoutError:
                continue
            n_emb += 1
            for vi, h in enumerate(variants):
                S = cm.induce(h)
                if S in want3:
                    print(f"L3 HIT: C = {seq} v{vi} <- B {want3[S]}")
        print(f"L3 fallback: {n_emb} embedded, {time.time()-t0:.1f}s")


if __name__ == "__main__":
    main()
