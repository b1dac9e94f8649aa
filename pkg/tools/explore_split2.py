"""Deeper hunt for the interior lantern curves, with pruned enumeration.

Candidate curves are passage sequences from a base multiset plus
cancelling same-band pairs; a depth-first enumeration prunes any prefix
whose joining chords interleave at integer level with four distinct
feet, which no strand arrangement can repair.
"""

import itertools
import sys
import time
from collections import Counter

sys.path.insert(0, "tools")
from explore_appendix import stage_b  # noqa: E402

from dehnkit.bandmodel import PathCurve, LayoutError  # noqa: E402


def feet(ext, passage):
    band = ext.bands[ext.index[passage[0]]]
    if passage[1] > 0:
        return band.f0, band.f1
    return band.f1, band.f0


def strictly_interleaved(c1, c2):
    a_lo, a_hi = min(c1), max(c1)
    b_lo, b_hi = min(c2), max(c2)
    pts = {a_lo, a_hi, b_lo, b_hi}
    if len(pts) < 4:
        return False
    inside = (a_lo < b_lo < a_hi, a_lo < b_hi < a_hi)
    return any(inside) and not all(inside)


def dfs_sequences(ext, head, pool):
    """Embedded-candidate sequences: head + permutations of pool, pruned."""
    order = sorted(pool.keys())

    def rec(seq, chords, remaining):
        if sum(remaining.values()) == 0:
            close = (feet(ext, seq[-1])[1], feet(ext, seq[0])[0])
            if all(not strictly_interleaved(close, c) for c in chords):
                yield tuple(seq)
            return
        prev_exit = feet(ext, seq[-1])[1]
        for el in order:
            if remaining[el] == 0:
                continue
            chord = (prev_exit, feet(ext, el)[0])
            if any(strictly_interleaved(chord, c) for c in chords):
                continue
            remaining[el] -= 1
            seq.append(el)
            chords.append(chord)
            yield from rec(seq, chords, remaining)
            chords.pop()
            seq.pop()
            remaining[el] += 1

    yield from rec([head], [], Counter(pool))


def collect(ext, cm, head, base, pair_sets, verbose=""):
    """Induced twists from all pruned sequences over base plus pair subsets."""
    out = {}
    for pairs in pair_sets:
        t0 = time.time()
        pool = Counter(base)
        for name in pairs:
            pool[(name, 1)] += 1
            pool[(name, -1)] += 1
        n_seq = n_emb = 0
        for seq in dfs_sequences(ext, head, pool):
            n_seq += 1
            try:
                variants = ext.twist_variants(PathCurve(seq))
            except LayoutError:
                continue
            n_emb += 1
            for h in variants:
                ind = cm.induce(h)
                if ind not in out:
                    out[ind] = seq
        if verbose:
            print(
                f"  {verbose} +{sorted(pairs)}: {n_seq} pruned-ok, {n_emb} embedded,"
                f" {len(out)} cumulative twists, {time.time()-t0:.1f}s"
            )
    return out


def hunt(label, P, t_d, b_twists, c_twists):
    td_inv = t_d.inverse()
    hits = []
    for c_hom, c_seq in c_twists.items():
        c_inv = c_hom.inverse()
        for rot, tgt in (
            ("B C d", P * td_inv * c_inv),
            ("C d B", td_inv * c_inv * P),
            ("d B C", td_inv * P * c_inv),
        ):
            if tgt in b_twists:
                hits.append((rot, b_twists[tgt], c_seq))
                print(f"{label} HIT rot({rot})")
                print(f"  B = {b_twists[tgt]}")
                print(f"  C = {c_seq}")
    if not hits:
        print(f"{label}: no hit")
    return hits


def main():
    ext, cm, C, t, tTb, t_w1, t_w2, lhs3, T3, T4 = stage_b()
    print("--- split hunt 2 ---")
    P3 = t["x1"] * t["alpha3"] * t["x2"] * t["alpha1"]
    P4 = t["y1"] * t["alpha2"] * t["y2"] * t["alpha4"]

    pair_sets_small = [
        (),
        ("T1",),
        ("D1",),
        ("A",),
        ("Q3",),
        ("B",),
        ("T1", "D1"),
        ("T1", "A"),
        ("T1", "Q3"),
        ("T1", "B"),
        ("A", "Q3"),
    ]

    c1_tw = collect(
        ext, cm, ("Q4", 1), [("E1", 1)], pair_sets_small, verbose="C1"
    )
    c2_tw = collect(
        ext, cm, ("Q3", 1), [("Q4", 1)], pair_sets_small, verbose="C2"
    )
    print(f"C1 {len(c1_tw)} twists, C2 {len(c2_tw)} twists")

    b21_base = [("A", 1), ("Q2", 1), ("Q3", 1), ("Q3", 1), ("Q4", 1), ("E1", 1)]
    b21_tw = collect(
        ext,
        cm,
        ("A", 1),
        b21_base,
        [(), ("T1",), ("D1",), ("B",), ("T1", "D1"), ("T1", "B")],
        verbose="B21",
    )
    hits3 = hunt("L3", P3, t["d1"], b21_tw, c1_tw)

    b22_base = [("A", 1), ("Q2", 1), ("Q3", 1), ("Q4", 1)]
    b22_tw = collect(
        ext,
        cm,
        ("A", 1),
        b22_base,
        [(), ("T1",), ("D1",), ("B",), ("T1", "D1"), ("T1", "B"), ("T1", "D1", "B")],
        verbose="B22",
    )
    hits4 = hunt("L4", P4, t["d2"], b22_tw, c2_tw)

    if hits3 and hits4:
        print("SPLIT SOLVED")


if __name__ == "__main__":
    main()
