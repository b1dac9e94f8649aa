"""Hunt for the four interior lantern curves of the genus-2 relation.

The two lanterns inside the capped model factor the boundary products

    t_x1 t_a3 t_x2 t_a1 = rotation of (t_B21, t_C1, t_d1)
    t_y1 t_a2 t_y2 t_a4 = rotation of (t_B22, t_C2, t_d2)

with the interior trios pairwise crossing.  The B-curves pass the A band
and one Q band twice, so they only exist as multi-pass path curves; this
script enumerates candidate passage sequences, derives their twists in
every embedded strand arrangement, and looks the targets up by exact hom
equality.
"""

import itertools
import sys
import time

sys.path.insert(0, "tools")
from explore_appendix import stage_b  # noqa: E402

from dehnkit.bandmodel import PathCurve, LayoutError  # noqa: E402


def candidate_sequences(base, extra_pairs):
    """Cyclic sequences: permutations of base plus optional cancelling pairs.

    The first element stays fixed to kill cyclic symmetry; each element is
    a (band, dir) passage.  extra_pairs is a list of band names that may be
    inserted as a +1/-1 pair.
    """
    pools = [tuple(base)]
    for name in extra_pairs:
        grown = []
        for pool in pools:
            grown.append(pool + ((name, 1), (name, -1)))
        pools += grown
    seen = set()
    for pool in pools:
        head, rest = pool[0], pool[1:]
        for perm in itertools.permutations(rest):
            seq = (head,) + perm
            if seq in seen:
                continue
            seen.add(seq)
            yield seq


def collect_twists(ext, cm, base, extra_pairs, limit=None):
    """Map induced capped twists to the sequences producing them."""
    out = {}
    n_seq = 0
    n_embed = 0
    for seq in candidate_sequences(base, extra_pairs):
        n_seq += 1
        if limit and n_seq > limit:
            break
        cur = PathCurve(seq)
        try:
            variants = ext.twist_variants(cur)
        except LayoutError:
            continue
        n_embed += 1
        for vi, h in enumerate(variants):
            ind = cm.induce(h)
            if ind not in out:
                out[ind] = (seq, vi)
    return out, n_seq, n_embed


def hunt_lantern(label, P, t_d, b_twists, c_twists):
    """Try the three trio rotations for every candidate pair."""
    td_inv = t_d.inverse()
    hits = []
    for c_hom, (c_seq, c_vi) in c_twists.items():
        c_inv = c_hom.inverse()
        targets = [
            ("B C d", P * td_inv * c_inv),
            ("C d B", td_inv * c_inv * P),
            ("d B C", td_inv * P * c_inv),
        ]
        for rot, tgt in targets:
            if tgt in b_twists:
                b_seq, b_vi = b_twists[tgt]
                hits.append((rot, b_seq, b_vi, c_seq, c_vi))
                print(f"{label} HIT rot({rot})")
                print(f"  B = {b_seq} variant {b_vi}")
                print(f"  C = {c_seq} variant {c_vi}")
    if not hits:
        print(f"{label}: no hit")
    return hits


def main():
    ext, cm, C, t, tTb, t_w1, t_w2, lhs3, T3, T4 = stage_b()
    print("--- split hunt ---")

    P3 = t["x1"] * t["alpha3"] * t["x2"] * t["alpha1"]
    P4 = t["y1"] * t["alpha2"] * t["y2"] * t["alpha4"]

    b21_pool = [("A", 1)] + sorted(
        [("A", 1), ("Q2", 1), ("Q3", 1), ("Q3", 1), ("Q4", 1), ("E1", 1)]
    )
    b21_tw = {}
    for extras in ([], ["T1"], ["D1"]):
        t0 = time.time()
        tws, ns, ne = collect_twists(ext, cm, b21_pool, extras)
        for h, v in tws.items():
            b21_tw.setdefault(h, v)
        print(
            f"B21 +{extras}: {ns} sequences, {ne} embeddable, "
            f"{len(tws)} twists, {time.time()-t0:.1f}s"
        )

    c1_tw = {}
    for extras in ([], ["T1"], ["D1"], ["T1", "D1"]):
        tws, ns, ne = collect_twists(ext, cm, [("Q4", 1), ("E1", 1)], extras)
        for h, v in tws.items():
            c1_tw.setdefault(h, v)
    print(f"C1 candidates: {len(c1_tw)} distinct twists")

    hits3 = hunt_lantern("L3", P3, t["d1"], b21_tw, c1_tw)

    b22_pool = [("A", 1)] + sorted([("A", 1), ("Q2", 1), ("Q3", 1), ("Q4", 1)])
    b22_tw = {}
    for extras in ([], ["T1"], ["D1"], ["T1", "D1"]):
        t0 = time.time()
        tws, ns, ne = collect_twists(ext, cm, b22_pool, extras)
        for h, v in tws.items():
            b22_tw.setdefault(h, v)
        print(
            f"B22 +{extras}: {ns} sequences, {ne} embeddable, "
            f"{len(tws)} twists, {time.time()-t0:.1f}s"
        )

    c2_tw = {}
    for extras in ([], ["T1"], ["D1"], ["T1", "D1"]):
        tws, ns, ne = collect_twists(ext, cm, [("Q3", 1), ("Q4", 1)], extras)
        for h, v in tws.items():
            c2_tw.setdefault(h, v)
    print(f"C2 candidates: {len(c2_tw)} distinct twists")

    hits4 = hunt_lantern("L4", P4, t["d2"], b22_tw, c2_tw)

    if hits3 and hits4:
        print("SPLIT SOLVED")
    return hits3, hits4


if __name__ == "__main__":
    main()
