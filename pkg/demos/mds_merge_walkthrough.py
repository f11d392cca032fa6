"""Merging two [6, 4] Reed-Solomon codewords into one [10, 8] codeword over F_19.

Run with ``python demos/mds_merge_walkthrough.py``. The script builds the coset
layout, prints the transfer matrix and then follows one conversion symbol by
symbol, showing which initial symbols are kept, read or left untouched.
"""

import random

from convcodes import mds_access_bounds, mds_convert, plan_mds_conversion
from convcodes.field import PrimeField


def main(seed: int = 0):
    code = plan_mds_conversion(zeta=2, k=4, l_initial=2, l_final=2, field=PrimeField(19))
    L = code.layout
    print(f"field F_{code.field.p}, subgroup of order {L.subgroup_order} generated by {L.subgroup_generator}")
    for i, A in enumerate(L.A_sets, start=1):
        print(f"  A_{i} = {list(A)}")
    print(f"  C   = {list(L.C)}  (shared parity points)")

    print("\nThe second block is moved onto A_1 by M = V(A_1) diag(theta) V(A_2)^-1:")
    print(f"  theta = {code.thetas[1]}")
    for row in code.M_matrices[1].tolist():
        print("   ", " ".join(f"{v:2d}" for v in row))
    print(f"  M c_j in span(c_1, c_2) with coefficients {code.etas[1]}")

    rng = random.Random(seed)
    msgs = [[rng.randrange(19) for _ in range(4)] for _ in range(2)]
    words = [code.initial.encode(m) for m in msgs]
    for i, w in enumerate(words, start=1):
        print(f"\nc{i} = {list(w)}  (message {msgs[i - 1]})")

    final, trace = mds_convert(code, words)
    print(f"\nd  = {list(final)}")
    init_pts = [code.initial.points.points] * 2
    for rec in trace.records(init_pts, code.final.points.points):
        note = rec["source"] or rec["target"] or ""
        if isinstance(note, list):
            note = "from " + ", ".join(note)
        print(f"  {rec['coord']:>6}  {rec['role']:<9} {note}")

    b = mds_access_bounds(code.initial.n, 4, code.final.n, 2)
    print(f"\n{trace.summary()}; lower bound read>={b.read_lower} write>={b.write_lower}")
    print("decoded messages:", code.decode_final(final))


if __name__ == "__main__":
    main()
