"""Reference search kernel for the admissible-data enumerator.

Candidates are nondecreasing k-tuples of indices into the lexicographically
sorted list of weight multisets ("points"), which breaks the point-permutation
symmetry at generation time.  The kernel runs the cheap integer pruning ladder
and returns the candidates that survive it; the symbolic rigidity filter runs
in the caller.  The compiled extension (_core.pyx) is a line-for-line
transliteration of this module and must keep identical semantics and counter
attribution.

Pruning ladder, cheap to expensive, each sound and exact at the leaves:

1. weight pairing feasibility: a value v is "missing" while it occurs but -v
   does not.  Prune when some missing value's negation occurs in no point at
   or after the current index (indices are nondecreasing, so only those points
   can still be chosen), or when the count of distinct missing values exceeds
   r*n, the number of weight slots the r remaining points have.
2. N-vector symmetry feasibility: each remaining point raises one bucket of
   the negative-weight histogram by 1, so symmetry N^i = N^(n-i) (necessary
   for the rigidity identity) is reachable only if the pairwise deficit
   sum_{i<n-i} |N^i - N^(n-i)| is at most r and the leftover r - deficit can
   be placed symmetrically (always possible via the middle bucket for even n;
   for odd n the leftover must be even).
3. smallest-weight pairing, complete candidates only: the smallest positive
   weight is a global property, so partial checks are unsound.
4. effectiveness, complete candidates only: gcd of all |w| equals 1.

Pruned-candidate counters attribute every discarded leaf to the first rule
that fired, in the order above.
"""

from __future__ import annotations

import math

PRUNE_ORDER = ("pairing", "nvector_symmetry", "smallest_weight_pairing", "effectiveness")


def search_chunk(
    n: int,
    k: int,
    max_weight: int,
    points_flat: list[int],
    first_lo: int,
    first_hi: int,
    enable_pairing: bool,
    enable_nvector: bool,
    enable_smallest: bool,
    effective_only: bool,
) -> tuple[list[tuple[int, ...]], tuple[int, int, int, int]]:
    """Explore all candidates whose first (smallest) point index lies in
    [first_lo, first_hi); return survivors and per-rule pruned-leaf counts."""
    if n == 0:
        # one empty point; the single candidate trivially passes every rule
        if first_lo <= 0 < first_hi:
            return [(0,) * k], (0, 0, 0, 0)
        return [], (0, 0, 0, 0)
    W = max_weight
    nvals = 2 * W
    P = len(points_flat) // n

    # slot encoding: value v -> v+W for v<0, v+W-1 for v>0; negation is slot
    # reversal s -> nvals-1-s
    pt_slots: list[list[int]] = []
    pt_neg: list[int] = []
    pt_mask: list[int] = []
    for idx in range(P):
        vals = points_flat[idx * n : (idx + 1) * n]
        slots = [v + W if v < 0 else v + W - 1 for v in vals]
        pt_slots.append(slots)
        pt_neg.append(sum(1 for v in vals if v < 0))
        m = 0
        for s in slots:
            m |= 1 << s
        pt_mask.append(m)

    # flip_avail[i]: slots whose negated value occurs in some point >= i
    flip_avail = [0] * (P + 1)
    have = 0
    for idx in range(P - 1, -1, -1):
        have |= pt_mask[idx]
        rev = 0
        for s in range(nvals):
            if have >> s & 1:
                rev |= 1 << (nvals - 1 - s)
        flip_avail[idx] = rev

    # completions[i][r] = number of nondecreasing r-tuples over indices [i, P)
    completions = [
        [math.comb(P - i + r - 1, r) if P - i + r > 0 else 1 for r in range(k + 1)]
        for i in range(P + 1)
    ]

    cnt = [0] * nvals
    counts_np = [0] * (n + 1)
    chosen: list[int] = []
    missing_mask = 0
    missing_count = 0
    pruned = [0, 0, 0, 0]
    survivors: list[tuple[int, ...]] = []

    def add_point(idx: int) -> None:
        nonlocal missing_mask, missing_count
        for s in pt_slots[idx]:
            o = nvals - 1 - s
            if cnt[s] == 0:
                if cnt[o] > 0:
                    missing_mask &= ~(1 << o)
                    missing_count -= 1
                else:
                    missing_mask |= 1 << s
                    missing_count += 1
            cnt[s] += 1
        counts_np[pt_neg[idx]] += 1
        chosen.append(idx)

    def remove_point(idx: int) -> None:
        nonlocal missing_mask, missing_count
        chosen.pop()
        counts_np[pt_neg[idx]] -= 1
        for s in reversed(pt_slots[idx]):
            cnt[s] -= 1
            if cnt[s] == 0:
                o = nvals - 1 - s
                if cnt[o] > 0:
                    missing_mask |= 1 << o
                    missing_count += 1
                else:
                    missing_mask &= ~(1 << s)
                    missing_count -= 1

    def symmetry_deficit() -> int:
        d = 0
        lo, hi = 0, n
        while lo < hi:
            d += abs(counts_np[lo] - counts_np[hi])
            lo += 1
            hi -= 1
        return d

    def leaf_passes_smallest() -> bool:
        w_slot = -1
        for s in range(W, nvals):
            if cnt[s] > 0:
                w_slot = s
                break
        if w_slot < 0:
            return False  # weights exist (n >= 1) but none is positive
        neg_slot = nvals - 1 - w_slot
        pos = [0] * (n + 2)
        neg = [0] * (n + 2)
        for idx in chosen:
            np_ = pt_neg[idx]
            for s in pt_slots[idx]:
                if s == w_slot:
                    pos[np_] += 1
                elif s == neg_slot:
                    neg[np_] += 1
        return all(pos[i] == neg[i + 1] for i in range(n))

    def leaf_is_effective() -> bool:
        g = 0
        for idx in chosen:
            for s in pt_slots[idx]:
                g = math.gcd(g, s - W + 1 if s >= W else W - s)
        return g == 1

    def descend(depth: int, lo: int, hi: int) -> None:
        r = k - depth - 1  # points still to choose after this one
        for idx in range(lo, hi):
            add_point(idx)
            if enable_pairing and (
                missing_count > r * n or missing_mask & ~flip_avail[idx]
            ):
                pruned[0] += completions[idx][r]
            elif enable_nvector and (
                (deficit := symmetry_deficit()) > r
                or (n % 2 == 1 and (r - deficit) % 2 == 1)
            ):
                pruned[1] += completions[idx][r]
            elif r == 0:
                if enable_smallest and not leaf_passes_smallest():
                    pruned[2] += 1
                elif effective_only and not leaf_is_effective():
                    pruned[3] += 1
                else:
                    survivors.append(tuple(chosen))
            else:
                descend(depth + 1, idx, P)
            remove_point(idx)

    descend(0, first_lo, min(first_hi, P))
    return survivors, tuple(pruned)
