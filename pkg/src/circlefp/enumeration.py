"""Exhaustive, pruned enumeration of admissible fixed point data.

A query fixes the half-dimension n, the point count k, and a weight bound W;
the search space is every nondecreasing k-tuple over the lexicographically
sorted alphabet of n-multisets with values in [-W, W] minus 0.  Generating
candidates in nondecreasing order breaks the point-permutation symmetry up
front, so results are canonical and duplicate-free by construction.

The cheap integer filters run inside the selected kernel (see _kernel); the
symbolic rigidity certificate runs here on the kernel's survivors.  Candidate
accounting is exact: candidate_space = sum of all pruned counters
+ sign_flip_removed + admissible.  Per-filter pruned counters attribute each
discarded candidate to the first rule that fired and are engine diagnostics;
only the admissible set is part of the cross-engine contract (the brute-force
oracle attributes differently by design, e.g. it has no separate N-vector
symmetry rule).

brute_force_admissible is deliberately independent of the kernel: it walks
the raw product space with itertools and applies only public verify-module
checks, so agreement between the two engines is meaningful evidence that the
pruning ladder is sound.
"""

from __future__ import annotations

import itertools
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ._kernel import kernel_for
from .fpdata import (
    FixedPoint,
    FixedPointDatum,
    canonicalize,
    gen_cpn,
    gen_s2,
    gen_s6,
    is_effective,
    n_vector,
    sign_flip,
    to_document,
    weight_types,
)
from .verify import (
    NotConstantError,
    check_crowded,
    check_middle_range,
    check_rigidity,
    check_smallest_weight_pairing,
    check_weight_pairing,
    chi_vector,
    kosniowski_bound,
    theorem_scope,
)


class ResourceLimitError(RuntimeError):
    """The candidate space exceeds the configured ceiling; narrow the query."""


#: Filters that are necessary conditions on valid data and may prune the
#: search.  check_crowded / check_middle_range concern open questions and are
#: deliberately not eligible.
ALLOWED_CHECKS = ("rigidity", "weight_pairing", "smallest_weight_pairing")
DEFAULT_CHECKS = ALLOWED_CHECKS

DEFAULT_CANDIDATE_CEILING = 10**9
BRUTE_FORCE_GUARD = 10**7

# compiled-kernel counters are 64-bit; keep the ceiling clear of them
_MAX_CEILING = 1 << 62

_PRUNE_KEYS = (
    "pairing",
    "nvector_symmetry",
    "smallest_weight_pairing",
    "effectiveness",
    "rigidity",
)


@dataclass(frozen=True)
class EnumerationQuery:
    """Search bounds plus filter/engine configuration.

    worker_count None means machine parallelism; it never affects results,
    only scheduling, and is excluded from serialized reports.
    """

    half_dim: int
    point_count: int
    max_weight: int
    effective_only: bool = True
    dedup_sign_flip: bool = False
    checks: tuple[str, ...] = DEFAULT_CHECKS
    worker_count: int | None = None
    candidate_ceiling: int = DEFAULT_CANDIDATE_CEILING

    def __post_init__(self):
        if self.half_dim < 0:
            raise ValueError(f"half_dim must be >= 0, got {self.half_dim}")
        if self.point_count < 1:
            raise ValueError(f"point_count must be >= 1, got {self.point_count}")
        if self.max_weight < 1:
            raise ValueError(f"max_weight must be >= 1, got {self.max_weight}")
        bad = [c for c in self.checks if c not in ALLOWED_CHECKS]
        if bad:
            raise ValueError(
                f"not valid pruning filters: {bad}; allowed: {list(ALLOWED_CHECKS)}"
            )
        # canonical order, duplicates dropped
        object.__setattr__(
            self, "checks", tuple(c for c in ALLOWED_CHECKS if c in self.checks)
        )
        if self.worker_count is not None and self.worker_count < 1:
            raise ValueError(f"worker_count must be >= 1, got {self.worker_count}")
        if not 1 <= self.candidate_ceiling <= _MAX_CEILING:
            raise ValueError(
                f"candidate_ceiling must be in [1, 2^62], got {self.candidate_ceiling}"
            )

    def to_json_dict(self) -> dict:
        return {
            "half_dim": self.half_dim,
            "point_count": self.point_count,
            "max_weight": self.max_weight,
            "effective_only": self.effective_only,
            "dedup_sign_flip": self.dedup_sign_flip,
            "checks": list(self.checks),
        }


@dataclass(frozen=True)
class EnumerationReport:
    """Admissible data with per-datum diagnostics and exact candidate
    accounting.  JSON serialization excludes wall time and worker count so
    identical queries produce byte-identical documents."""

    query: EnumerationQuery
    admissible: tuple[FixedPointDatum, ...]
    diagnostics: tuple[dict, ...]
    counters: dict
    engine: str
    wall_time_s: float
    worker_count_used: int

    def to_json_dict(self) -> dict:
        return {
            "query": self.query.to_json_dict(),
            "engine": self.engine,
            "counters": self.counters,
            "admissible": [to_document(d) for d in self.admissible],
            "diagnostics": list(self.diagnostics),
        }


def point_alphabet(half_dim: int, max_weight: int) -> list[tuple[int, ...]]:
    """All sorted weight multisets of size n over [-W, W] minus 0, in
    lexicographic order."""
    values = [v for v in range(-max_weight, max_weight + 1) if v]
    return list(itertools.combinations_with_replacement(values, half_dim))


def candidate_space_size(half_dim: int, point_count: int, max_weight: int) -> int:
    p = len(point_alphabet(half_dim, max_weight))
    return math.comb(p + point_count - 1, point_count)


def _chunk_task(args):
    n, k, w, flat, lo, hi, flags = args
    kernel, _ = kernel_for(w)
    return kernel(n, k, w, flat, lo, hi, *flags)


def _weight_gcd(d: FixedPointDatum) -> int:
    return math.gcd(*(abs(w) for w in d.all_weights())) if d.half_dim else 0


def _diagnostics_for(d: FixedPointDatum) -> dict:
    try:
        chi: list[int] | None = list(chi_vector(d))
    except NotConstantError:
        chi = None  # reachable only when rigidity was not a selected filter
    return {
        "datum": to_document(d),
        "n_vector": list(n_vector(d)),
        "chi": chi,
        "weight_types": sorted(weight_types(d)),
        "weight_gcd": _weight_gcd(d),
        "theorem_scope": theorem_scope(d),
        "crowded": check_crowded(d).passed,
        "middle_range": check_middle_range(d).passed,
        "meets_point_bound": len(d.points) >= kosniowski_bound(d.dim),
    }


def _apply_sign_flip_dedup(data: list[FixedPointDatum]) -> tuple[list[FixedPointDatum], int]:
    """Keep one representative per global-negation orbit (the lexicographically
    smaller of datum and flipped datum); the symmetry is opt-in, never
    assumed."""
    kept = []
    removed = 0
    for d in data:
        flipped = canonicalize(sign_flip(d))
        if tuple(p.weights for p in flipped.points) < tuple(p.weights for p in d.points):
            removed += 1
        else:
            kept.append(d)
    return kept, removed


def _finalize_report(
    q: EnumerationQuery,
    admissible: list[FixedPointDatum],
    pruned: dict,
    space: int,
    alphabet_size: int,
    engine: str,
    wall_start: float,
    workers: int,
) -> EnumerationReport:
    removed = 0
    if q.dedup_sign_flip:
        admissible, removed = _apply_sign_flip_dedup(admissible)
    counters = {
        "candidate_space": space,
        "point_alphabet": alphabet_size,
        "pruned": {key: pruned.get(key, 0) for key in _PRUNE_KEYS},
        "sign_flip_removed": removed,
        "admissible": len(admissible),
    }
    diagnostics = tuple(_diagnostics_for(d) for d in admissible)
    return EnumerationReport(
        query=q,
        admissible=tuple(admissible),
        diagnostics=diagnostics,
        counters=counters,
        engine=engine,
        wall_time_s=time.perf_counter() - wall_start,
        worker_count_used=workers,
    )


def enumerate_admissible(q: EnumerationQuery) -> EnumerationReport:
    """All canonical data with k points and weights in [-W, W] minus 0 that
    pass every selected filter (plus effectiveness when requested).

    Work is split at the first point index into contiguous chunks; the merge
    preserves subtree order, so output is identical for every worker count.
    Raises ResourceLimitError when the candidate space exceeds the ceiling.
    """
    t0 = time.perf_counter()
    n, k, w = q.half_dim, q.point_count, q.max_weight
    points = point_alphabet(n, w)
    p = len(points)
    space = math.comb(p + k - 1, k)
    if space > q.candidate_ceiling:
        raise ResourceLimitError(
            f"candidate space {space} exceeds ceiling {q.candidate_ceiling}"
        )
    flat = [value for pt in points for value in pt]
    flags = (
        "weight_pairing" in q.checks,
        "rigidity" in q.checks,
        "smallest_weight_pairing" in q.checks,
        q.effective_only,
    )
    kernel, engine = kernel_for(w)
    workers = q.worker_count if q.worker_count is not None else (os.cpu_count() or 1)
    workers = max(1, min(workers, p))

    if workers == 1:
        survivors, rule_counts = kernel(n, k, w, flat, 0, p, *flags)
        rule_counts = list(rule_counts)
    else:
        bounds = []
        base, extra = divmod(p, workers)
        lo = 0
        for i in range(workers):
            hi = lo + base + (1 if i < extra else 0)
            if hi > lo:
                bounds.append((lo, hi))
            lo = hi
        survivors = []
        rule_counts = [0, 0, 0, 0]
        tasks = [(n, k, w, flat, lo, hi, flags) for lo, hi in bounds]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk_survivors, chunk_counts in pool.map(_chunk_task, tasks):
                survivors.extend(chunk_survivors)
                for i, c in enumerate(chunk_counts):
                    rule_counts[i] += c

    pruned = dict(zip(("pairing", "nvector_symmetry", "smallest_weight_pairing", "effectiveness"), rule_counts))
    admissible: list[FixedPointDatum] = []
    rigidity_failures = 0
    want_rigidity = "rigidity" in q.checks
    for combo in survivors:
        d = FixedPointDatum(n, tuple(FixedPoint(points[i]) for i in combo))
        if want_rigidity and not check_rigidity(d).passed:
            rigidity_failures += 1
            continue
        admissible.append(d)
    pruned["rigidity"] = rigidity_failures
    return _finalize_report(q, admissible, pruned, space, p, engine, t0, workers)


def brute_force_admissible(q: EnumerationQuery) -> EnumerationReport:
    """Oracle engine: no pruning, no kernel, no shared search code.

    Walks every candidate with itertools and applies the public verify-module
    checks post hoc.  Guarded at 10^7 candidates.
    """
    t0 = time.perf_counter()
    n, k = q.half_dim, q.point_count
    points = point_alphabet(n, q.max_weight)
    p = len(points)
    space = math.comb(p + k - 1, k)
    if space > BRUTE_FORCE_GUARD:
        raise ResourceLimitError(
            f"brute-force guard: candidate space {space} exceeds {BRUTE_FORCE_GUARD}"
        )
    pruned = dict.fromkeys(_PRUNE_KEYS, 0)
    admissible: list[FixedPointDatum] = []
    for combo in itertools.combinations_with_replacement(range(p), k):
        d = FixedPointDatum(n, tuple(FixedPoint(points[i]) for i in combo))
        if "weight_pairing" in q.checks and not check_weight_pairing(d).passed:
            pruned["pairing"] += 1
            continue
        if "smallest_weight_pairing" in q.checks:
            r = check_smallest_weight_pairing(d)
            if not r.passed:
                pruned["smallest_weight_pairing"] += 1
                continue
        if q.effective_only and not is_effective(d):
            pruned["effectiveness"] += 1
            continue
        if "rigidity" in q.checks and not check_rigidity(d).passed:
            pruned["rigidity"] += 1
            continue
        admissible.append(d)
    return _finalize_report(q, admissible, pruned, space, p, "brute_force", t0, 1)


# -- experiment drivers -------------------------------------------------------

def _matches_any(d: FixedPointDatum, references) -> bool:
    target = canonicalize(d)
    return any(canonicalize(ref) == target for ref in references)


def _sphere_forms(max_weight: int):
    return [gen_s2(w) for w in range(1, max_weight + 1)]


def _s6_forms(max_weight: int):
    return [
        gen_s6(a, b)
        for a in range(1, max_weight + 1)
        for b in range(a, max_weight + 1)
        if a + b <= max_weight
    ]


def _cp2_forms(max_weight: int):
    return [
        gen_cpn((0, c, c + e))
        for c in range(1, max_weight + 1)
        for e in range(1, max_weight + 1)
        if c + e <= max_weight
    ]


def classify_two_points(max_weight: int, n_range, **query_kwargs) -> dict:
    """Enumerate two-point data per half-dimension and compare against the
    known family: rotations of the 2-sphere (n=1) and the 6-sphere forms
    (n=3); all other half-dimensions should come back empty (within the
    stated weight bound)."""
    rows = []
    consistent = True
    for n in n_range:
        q = EnumerationQuery(
            half_dim=n, point_count=2, max_weight=max_weight, **query_kwargs
        )
        report = enumerate_admissible(q)
        row = {
            "half_dim": n,
            "count": len(report.admissible),
            "admissible": [to_document(d) for d in report.admissible],
        }
        if n == 1:
            row["all_sphere_form"] = all(
                _matches_any(d, _sphere_forms(max_weight)) for d in report.admissible
            )
            consistent &= row["all_sphere_form"]
        elif n == 3:
            row["all_s6_form"] = all(
                _matches_any(d, _s6_forms(max_weight)) for d in report.admissible
            )
            consistent &= row["all_s6_form"]
        else:
            row["expected_empty"] = not report.admissible
            consistent &= row["expected_empty"]
        rows.append(row)
    return {
        "point_count": 2,
        "max_weight": max_weight,
        "note": f"emptiness statements hold up to weight bound {max_weight}",
        "per_half_dim": rows,
        "matches_classification": consistent,
    }


def classify_three_points(max_weight: int, n_range, **query_kwargs) -> dict:
    """Enumerate three-point data per half-dimension; only n=2 should be
    nonempty (within the weight bound), every result matching a linear
    projective-plane form gen_cpn(0, c, c+e)."""
    rows = []
    consistent = True
    for n in n_range:
        q = EnumerationQuery(
            half_dim=n, point_count=3, max_weight=max_weight, **query_kwargs
        )
        report = enumerate_admissible(q)
        row = {
            "half_dim": n,
            "count": len(report.admissible),
            "admissible": [to_document(d) for d in report.admissible],
        }
        if n == 2:
            row["all_cp2_form"] = all(
                _matches_any(d, _cp2_forms(max_weight)) for d in report.admissible
            )
            consistent &= row["all_cp2_form"]
        else:
            row["expected_empty"] = not report.admissible
            consistent &= row["expected_empty"]
        rows.append(row)
    return {
        "point_count": 3,
        "max_weight": max_weight,
        "note": f"emptiness statements hold up to weight bound {max_weight}",
        "per_half_dim": rows,
        "matches_classification": consistent,
    }


def open_question_violators(data) -> list[dict]:
    """Full-witness records for every datum failing the crowdedness or
    middle-range question checks."""
    violators = []
    for d in data:
        crowded = check_crowded(d)
        middle = check_middle_range(d)
        if not crowded.passed or not middle.passed:
            violators.append(
                {
                    "datum": to_document(d),
                    "crowded": crowded.to_json_dict(),
                    "middle_range": middle.to_json_dict(),
                }
            )
    return violators


def experiment_open_questions(q: EnumerationQuery) -> dict:
    """Evaluate the crowdedness and middle-range questions on every
    admissible datum.  A violator is a research finding and is reported
    verbatim with full check witnesses, never raised as an error."""
    report = enumerate_admissible(q)
    violators = open_question_violators(report.admissible)
    return {
        "query": q.to_json_dict(),
        "admissible_count": len(report.admissible),
        "violator_count": len(violators),
        "violators": violators,
    }


def bound_table(max_n: int) -> list[dict]:
    """Per dimension 2..2*max_n: the conjectured lower bound and the smallest
    point count reachable by products of the generator families (disjoint
    unions only multiply counts, so they never help the minimum)."""
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    best: list[int | None] = [None] * (max_n + 1)
    how: list[str] = [""] * (max_n + 1)
    for m in range(1, max_n + 1):
        options: list[tuple[int, str]] = []
        if m == 1:
            options.append((2, "gen_s2"))
        if m == 3:
            options.append((2, "gen_s6"))
        options.append((m + 1, f"gen_cpn(0..{m})"))
        for a in range(1, m // 2 + 1):
            options.append((best[a] * best[m - a], f"{how[a]} x {how[m - a]}"))
        count, desc = options[0]
        for c, d in options[1:]:
            if c < count:
                count, desc = c, d
        best[m], how[m] = count, desc
    return [
        {
            "dim": 2 * m,
            "kosniowski_bound": kosniowski_bound(2 * m),
            "known_minimum": best[m],
            "realized_by": how[m],
        }
        for m in range(1, max_n + 1)
    ]
