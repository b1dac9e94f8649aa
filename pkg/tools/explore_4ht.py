"""Pin the four-holed torus relation on a torus-with-bridges layout.

Model: torus bands A(1,3), B(2,4); three bridge holes S1(5,6), S2(7,8),
S3(9,10); outer boundary is the fourth hole.  Vertical curves e1..e4 pass
through A and over initial runs of bridges; beta passes through B.
"""

import itertools
import sys

sys.path.insert(0, "src")

from dehnkit.bandmodel import Band, Enclosure, PathCurve, RibbonLayout


def main():
    lay = RibbonLayout(
        [
            Band("A", 1, 3),
            Band("B", 2, 4),
            Band("S1", 5, 6),
            Band("S2", 7, 8),
            Band("S3", 9, 10),
        ]
    )
    print("genus", lay.genus, "boundary", lay.n_boundary)
    for k, c in enumerate(lay.boundary_cycles()):
        print("comp", k, c.format(lay.names))

    # Candidate meridian copies: A plus an initial run of bridges, trying
    # both passage signs for each band.
    def meridian(run_len):
        found = []
        bands = ["A"] + [f"S{i}" for i in range(1, run_len + 1)]
        for signs in itertools.product((1, -1), repeat=len(bands)):
            cur = PathCurve(tuple(zip(bands, signs)))
            try:
                tw = lay.twist(cur)
            except Exception:
                continue
            found.append((cur, tw))
        return found

    for r in range(4):
        cands = meridian(r)
        print(f"run {r}: {len(cands)} embeddable sign choices")
        for cur, _ in cands:
            print("   ", cur.passages)

    # Beta: the other torus handle.
    beta = PathCurve((("B", 1),))
    tb = lay.twist(beta)

    # Pick one embeddable representative per run length; then test the
    # four-holed torus relation over hole assignments.
    reps = []
    for r in range(4):
        cands = meridian(r)
        if not cands:
            print(f"NO embeddable meridian for run {r}")
            return
        reps.append(cands)

    rhs_holes = (
        lay.twist(Enclosure(5, 6))
        * lay.twist(Enclosure(7, 8))
        * lay.twist(Enclosure(9, 10))
        * lay.twist(Enclosure(1, 10))
    )

    hits = []
    for combo in itertools.product(*[range(len(r)) for r in reps]):
        es = [reps[r][combo[r]][1] for r in range(4)]
        # The relation (t_a1 t_a3 t_b t_a2 t_a4 t_b)^2 for assignments of
        # e-curves to the four alpha slots.
        for perm in itertools.permutations(range(4)):
            a1, a2, a3, a4 = (es[p] for p in perm)
            lhs = (a1 * a3 * tb * a2 * a4 * tb) ** 2
            if lhs == rhs_holes:
                hits.append((combo, perm))
    print("4HT hits:", len(hits))
    for combo, perm in hits[:12]:
        print("  signs-choice", combo, "alpha order e" ,
              tuple(p + 1 for p in perm))

    # Boundary-multiplicity check for the natural assignment: the extended
    # transvection product of the LHS must match one positive twist about
    # each of the four boundary components.
    from dehnkit.matrices import IntMatrix

    def tw_mat(curve):
        return IntMatrix(lay.extended_twist_matrix(lay.curve_class(curve)))

    e_curves = [
        PathCurve((("A", 1),)),
        PathCurve((("A", 1), ("S1", 1))),
        PathCurve((("A", 1), ("S1", 1), ("S2", 1))),
        PathCurve((("A", 1), ("S1", 1), ("S2", 1), ("S3", 1))),
    ]
    a1m, a2m, a3m, a4m = (tw_mat(c) for c in e_curves)
    bm = tw_mat(beta)
    half = a1m @ a3m @ bm @ a2m @ a4m @ bm
    lhs_mat = half @ half
    rhs_mat = (
        tw_mat(Enclosure(5, 6))
        @ tw_mat(Enclosure(7, 8))
        @ tw_mat(Enclosure(9, 10))
        @ tw_mat(Enclosure(1, 10))
    )
    print("extended multiplicity check:", lhs_mat == rhs_mat)
    # Tampered version must fail: drop one hole twist.
    bad = (
        tw_mat(Enclosure(5, 6))
        @ tw_mat(Enclosure(7, 8))
        @ tw_mat(Enclosure(1, 10))
    )
    print("tampered check fails:", lhs_mat != bad)


if __name__ == "__main__":
    main()
