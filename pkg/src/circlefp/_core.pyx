# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the reference search kernel.

Line-for-line transliteration of _core_py.search_chunk with identical
semantics and counter attribution; see that module for the soundness notes on
the pruning ladder.  Weight slots live in 64-bit masks, so this kernel
handles max_weight <= 32; the caller falls back to the reference kernel
beyond that.
"""

import math

from cpython cimport array
import array


cdef unsigned long long _gcd(unsigned long long a, unsigned long long b) noexcept:
    cdef unsigned long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef class _Search:
    cdef int n, k, P, W, nvals
    cdef bint enable_pairing, enable_nvector, enable_smallest, effective_only
    cdef long long[::1] pt_slots        # P*n slot-encoded weights
    cdef long long[::1] pt_neg          # negative-weight count per point
    cdef unsigned long long[::1] flip_avail   # (P+1) suffix masks
    cdef unsigned long long[::1] completions  # (P+1)*(k+1) table
    cdef long long[::1] cnt             # occurrences per slot
    cdef long long[::1] counts_np       # points per negative-count bucket
    cdef long long[::1] chosen
    cdef long long[::1] pos_buf
    cdef long long[::1] neg_buf
    cdef int chosen_len
    cdef unsigned long long missing_mask
    cdef long long missing_count
    cdef unsigned long long pruned0, pruned1, pruned2, pruned3
    cdef list survivors

    def __init__(self, int n, int k, int max_weight, points_flat,
                 bint enable_pairing, bint enable_nvector,
                 bint enable_smallest, bint effective_only):
        cdef int idx, j, s, v, r
        self.n = n
        self.k = k
        self.W = max_weight
        self.nvals = 2 * max_weight
        self.P = len(points_flat) // n
        self.enable_pairing = enable_pairing
        self.enable_nvector = enable_nvector
        self.enable_smallest = enable_smallest
        self.effective_only = effective_only

        cdef int P = self.P
        self.pt_slots = array.array("q", [0]) * (P * n)
        self.pt_neg = array.array("q", [0]) * P
        self.flip_avail = array.array("Q", [0]) * (P + 1)
        self.completions = array.array("Q", [0]) * ((P + 1) * (k + 1))
        self.cnt = array.array("q", [0]) * self.nvals
        self.counts_np = array.array("q", [0]) * (n + 1)
        self.chosen = array.array("q", [0]) * k
        self.pos_buf = array.array("q", [0]) * (n + 2)
        self.neg_buf = array.array("q", [0]) * (n + 2)

        for idx in range(P):
            for j in range(n):
                v = points_flat[idx * n + j]
                s = v + self.W if v < 0 else v + self.W - 1
                self.pt_slots[idx * n + j] = s
                if v < 0:
                    self.pt_neg[idx] += 1

        cdef unsigned long long have = 0, rev, bit
        self.flip_avail[P] = 0
        for idx in range(P - 1, -1, -1):
            for j in range(n):
                have |= (<unsigned long long> 1) << self.pt_slots[idx * n + j]
            rev = 0
            for s in range(self.nvals):
                if have >> s & 1:
                    rev |= (<unsigned long long> 1) << (self.nvals - 1 - s)
            self.flip_avail[idx] = rev

        for idx in range(P + 1):
            for r in range(k + 1):
                if P - idx + r > 0:
                    c = math.comb(P - idx + r - 1, r)
                else:
                    c = 1
                if c > (1 << 62):
                    raise OverflowError("candidate space exceeds compiled-kernel range")
                self.completions[idx * (k + 1) + r] = c

        self.chosen_len = 0
        self.missing_mask = 0
        self.missing_count = 0
        self.pruned0 = self.pruned1 = self.pruned2 = self.pruned3 = 0
        self.survivors = []

    cdef void add_point(self, int idx) noexcept:
        cdef int j, s, o
        for j in range(self.n):
            s = self.pt_slots[idx * self.n + j]
            o = self.nvals - 1 - s
            if self.cnt[s] == 0:
                if self.cnt[o] > 0:
                    self.missing_mask &= ~((<unsigned long long> 1) << o)
                    self.missing_count -= 1
                else:
                    self.missing_mask |= (<unsigned long long> 1) << s
                    self.missing_count += 1
            self.cnt[s] += 1
        self.counts_np[self.pt_neg[idx]] += 1
        self.chosen[self.chosen_len] = idx
        self.chosen_len += 1

    cdef void remove_point(self, int idx) noexcept:
        cdef int j, s, o
        self.chosen_len -= 1
        self.counts_np[self.pt_neg[idx]] -= 1
        for j in range(self.n - 1, -1, -1):
            s = self.pt_slots[idx * self.n + j]
            self.cnt[s] -= 1
            if self.cnt[s] == 0:
                o = self.nvals - 1 - s
                if self.cnt[o] > 0:
                    self.missing_mask |= (<unsigned long long> 1) << o
                    self.missing_count += 1
                else:
                    self.missing_mask &= ~((<unsigned long long> 1) << s)
                    self.missing_count -= 1

    cdef long long symmetry_deficit(self) noexcept:
        cdef long long d = 0, diff
        cdef int lo = 0, hi = self.n
        while lo < hi:
            diff = self.counts_np[lo] - self.counts_np[hi]
            d += diff if diff >= 0 else -diff
            lo += 1
            hi -= 1
        return d

    cdef bint leaf_passes_smallest(self) noexcept:
        cdef int w_slot = -1, neg_slot, s, i, j, idx
        cdef long long np_
        for s in range(self.W, self.nvals):
            if self.cnt[s] > 0:
                w_slot = s
                break
        if w_slot < 0:
            return False  # weights exist (n >= 1) but none is positive
        neg_slot = self.nvals - 1 - w_slot
        for i in range(self.n + 2):
            self.pos_buf[i] = 0
            self.neg_buf[i] = 0
        for i in range(self.chosen_len):
            idx = self.chosen[i]
            np_ = self.pt_neg[idx]
            for j in range(self.n):
                s = self.pt_slots[idx * self.n + j]
                if s == w_slot:
                    self.pos_buf[np_] += 1
                elif s == neg_slot:
                    self.neg_buf[np_] += 1
        for i in range(self.n):
            if self.pos_buf[i] != self.neg_buf[i + 1]:
                return False
        return True

    cdef bint leaf_is_effective(self) noexcept:
        cdef unsigned long long g = 0
        cdef int i, j, s, idx
        for i in range(self.chosen_len):
            idx = self.chosen[i]
            for j in range(self.n):
                s = self.pt_slots[idx * self.n + j]
                g = _gcd(g, <unsigned long long> (s - self.W + 1 if s >= self.W else self.W - s))
        return g == 1

    cdef void descend(self, int depth, int lo, int hi):
        cdef int idx, r = self.k - depth - 1
        cdef long long deficit
        cdef int i
        cdef list out
        for idx in range(lo, hi):
            self.add_point(idx)
            if self.enable_pairing and (
                self.missing_count > <long long> r * self.n
                or self.missing_mask & ~self.flip_avail[idx]
            ):
                self.pruned0 += self.completions[idx * (self.k + 1) + r]
            elif self.enable_nvector and (
                (deficit := self.symmetry_deficit()) > r
                or (self.n % 2 == 1 and (r - deficit) % 2 == 1)
            ):
                self.pruned1 += self.completions[idx * (self.k + 1) + r]
            elif r == 0:
                if self.enable_smallest and not self.leaf_passes_smallest():
                    self.pruned2 += 1
                elif self.effective_only and not self.leaf_is_effective():
                    self.pruned3 += 1
                else:
                    out = []
                    for i in range(self.chosen_len):
                        out.append(self.chosen[i])
                    self.survivors.append(tuple(out))
            else:
                self.descend(depth + 1, idx, self.P)
            self.remove_point(idx)


def search_chunk(int n, int k, int max_weight, points_flat,
                 int first_lo, int first_hi,
                 bint enable_pairing, bint enable_nvector,
                 bint enable_smallest, bint effective_only):
    """Explore all candidates whose first point index lies in
    [first_lo, first_hi); return survivors and per-rule pruned-leaf counts."""
    if n == 0:
        if first_lo <= 0 < first_hi:
            return [(0,) * k], (0, 0, 0, 0)
        return [], (0, 0, 0, 0)
    if max_weight > 32:
        raise ValueError("compiled kernel supports max_weight <= 32")
    cdef _Search search = _Search(n, k, max_weight, points_flat,
                                  enable_pairing, enable_nvector,
                                  enable_smallest, effective_only)
    cdef int hi = first_hi if first_hi < search.P else search.P
    search.descend(0, first_lo, hi)
    return search.survivors, (search.pruned0, search.pruned1,
                              search.pruned2, search.pruned3)
