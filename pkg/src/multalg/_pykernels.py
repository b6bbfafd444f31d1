"""Pure-Python versions of the hot kernels.

These are the reference implementations; ``_ckernels.pyx`` must agree with
them exactly.  Rows are reduced as sparse dicts, which keeps the fallback
usable on the very sparse systems produced by structure-constant equations.
"""

from __future__ import annotations


def rref_modp(rows, ncols, p):
    """Reduced row-echelon form over GF(p).

    Returns ``(rref_rows, pivots)`` where ``rref_rows`` are dense lists of ints
    in ``range(p)`` (zero rows dropped) and ``pivots`` the pivot columns.
    Pivoting is deterministic: leftmost column first, first nonzero row.
    """
    echelon = {}  # pivot column -> sparse row with leading entry 1
    for row in rows:
        vec = {j: v % p for j, v in enumerate(row) if v % p}
        while vec:
            lead = min(vec)
            piv = echelon.get(lead)
            if piv is None:
                inv = pow(vec[lead], -1, p)
                echelon[lead] = {j: (v * inv) % p for j, v in vec.items()}
                break
            f = vec[lead]
            for j, v in piv.items():
                nv = (vec.get(j, 0) - f * v) % p
                if nv:
                    vec[j] = nv
                else:
                    vec.pop(j, None)
    pivots = sorted(echelon)
    # back substitution, last pivot first
    for idx in range(len(pivots) - 1, -1, -1):
        pc = pivots[idx]
        prow = echelon[pc]
        for other in pivots[:idx]:
            orow = echelon[other]
            f = orow.get(pc)
            if f:
                for j, v in prow.items():
                    nv = (orow.get(j, 0) - f * v) % p
                    if nv:
                        orow[j] = nv
                    else:
                        orow.pop(j, None)
    out = []
    for pc in pivots:
        dense = [0] * ncols
        for j, v in echelon[pc].items():
            dense[j] = v
        out.append(dense)
    return out, pivots


def match_pairs(left_keys, right_keys):
    """All index pairs ``(i, j)`` with ``left_keys[i] == right_keys[j]``.

    This is a literal all-pairs comparison; it is the inner loop of the
    exhaustive multiplier oracle.
    """
    out = []
    for i, a in enumerate(left_keys):
        for j, b in enumerate(right_keys):
            if a == b:
                out.append((i, j))
    return out
