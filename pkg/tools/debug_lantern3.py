import sys

sys.path.insert(0, "src")

from dehnkit.bandmodel import Band, Enclosure, PathCurve, RibbonLayout

lay = RibbonLayout([Band("S1", 1, 2), Band("S2", 3, 4), Band("S3", 5, 6)])

x12 = lay.twist(PathCurve((("S1", 1), ("S2", 1))))
x23 = lay.twist(PathCurve((("S2", 1), ("S3", 1))))
x13 = lay.twist(PathCurve((("S1", 1), ("S3", 1))))

pairs = {"x12": x12, "x23": x23, "x13": x13}
for tgt_name, tgt in pairs.items():
    for a_name, a in pairs.items():
        for b_name, b in pairs.items():
            if a_name == b_name:
                continue
            for e in (1, -1):
                conj = a if e == 1 else a.inverse()
                if conj * b * conj.inverse() == tgt:
                    print(
                        f"{tgt_name} = t_{a_name}^{e}({b_name})"
                    )
