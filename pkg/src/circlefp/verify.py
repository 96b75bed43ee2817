"""Identity and bound checks on fixed point data.

Every check returns a CheckReport with machine-readable witnesses on failure;
nothing here raises on a *failing* datum, only on violated preconditions.
The central certificate is chi_vector: for each degree i it forms the exact
rational-function sum of all per-point contributions over one common
denominator and certifies that the sum is a constant integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .fpdata import (
    DataError,
    FixedPointDatum,
    NVector,
    n_vector,
    smallest_positive_weight,
    weight_types,
    NoPositiveWeightError,
)
from .poly import LaurentPolynomial, RationalFunction, elementary_symmetric_all


class NotConstantError(DataError):
    """A degree-i localization sum is not constant in t.

    Such a datum cannot arise from a circle action on a compact almost
    complex manifold with discrete fixed set.
    """

    def __init__(self, index: int, residual: RationalFunction):
        self.index = index
        self.residual = residual
        super().__init__(f"degree-{index} localization sum is not constant")


class NotSingleTypeError(DataError):
    """check_single_weight_structure needs exactly one weight type."""


class DimensionTooLargeError(DataError):
    """check_dim6_crowding only applies in dimension <= 6."""


@dataclass(frozen=True)
class ChiVector:
    """The integers chi^0..chi^n certified constant by the localization sums."""

    entries: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one check; failed reports always carry a witness."""

    check_name: str
    passed: bool
    witness: dict | None = None
    skipped: bool = False

    def status(self) -> str:
        if self.skipped:
            return "skip"
        return "pass" if self.passed else "fail"

    def to_json_dict(self) -> dict:
        out: dict = {"check": self.check_name, "status": self.status()}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


# -- dense helpers for the common-denominator certificate --------------------
#
# Coefficient lists indexed by exponent; every denominator factor is 1 - t^m
# with m > 0, so multiplying by one factor is a shift-and-subtract.

def _dense_mul_one_minus(a: list[int], m: int) -> list[int]:
    out = a + [0] * m
    for i, c in enumerate(a):
        out[i + m] -= c
    return out


def _dense_product_one_minus(ms: Sequence[int]) -> list[int]:
    out = [1]
    for m in ms:
        out = _dense_mul_one_minus(out, m)
    return out


def _rf_witness(rf: RationalFunction) -> dict:
    return {
        "numerator": sorted(rf.numerator.items()),
        "denominator": sorted(rf.denominator.items()),
    }


def chi_vector(d: FixedPointDatum) -> ChiVector:
    """Certify constancy of every degree-i localization sum and return the
    constants.

    Each point contributes sigma_i(t^w1..t^wn) / prod_j (1 - t^wj).  Negative
    weights are cleared with 1/(1-t^-m) = -t^m/(1-t^m), after which all terms
    share the denominator D = prod over all points and weights of (1-t^|w|).
    Raises NotConstantError at the first non-constant degree.
    """
    if not d.points:
        raise ValueError("chi_vector needs a nonempty datum")
    n = d.half_dim
    point_abs = [[abs(w) for w in p.weights] for p in d.points]
    denom = _dense_product_one_minus([m for absw in point_abs for m in absw])
    top = len(denom) - 1

    cofactors = []
    signs = []
    neg_shifts = []
    for j, p in enumerate(d.points):
        others = [m for jj, absw in enumerate(point_abs) if jj != j for m in absw]
        cofactors.append(_dense_product_one_minus(others))
        signs.append(-1 if p.negative_count() % 2 else 1)
        neg_shifts.append(sum(-w for w in p.weights if w < 0))
    sigmas = [elementary_symmetric_all(p.weights) for p in d.points]

    entries = []
    for i in range(n + 1):
        acc = [0] * (top + 1)
        for j in range(len(d.points)):
            cof = cofactors[j]
            shift = neg_shifts[j]
            sign = signs[j]
            for e, c in sigmas[j][i].items():
                coeff = sign * c
                off = e + shift
                for idx, cv in enumerate(cof):
                    acc[off + idx] += coeff * cv
        c0 = acc[0]  # denom has constant term 1
        if any(acc[idx] != c0 * denom[idx] for idx in range(top + 1)):
            residual = RationalFunction(
                LaurentPolynomial({e: c for e, c in enumerate(acc) if c}),
                LaurentPolynomial({e: c for e, c in enumerate(denom) if c}),
            )
            raise NotConstantError(i, residual)
        entries.append(c0)
    return ChiVector(tuple(entries))


def check_rigidity(d: FixedPointDatum) -> CheckReport:
    """chi_vector succeeds, chi^i = (-1)^i N^i, and N^i = N^(n-i)."""
    name = "rigidity"
    if not d.points:
        return CheckReport(name, True, {"skipped_reason": "empty datum"}, skipped=True)
    nvec = n_vector(d)
    try:
        chi = chi_vector(d)
    except NotConstantError as err:
        return CheckReport(
            name,
            False,
            {
                "reason": "not_constant",
                "degree": err.index,
                "residual": _rf_witness(err.residual),
            },
        )
    expected = tuple((-1) ** i * nvec[i] for i in range(d.half_dim + 1))
    if chi.entries != expected:
        return CheckReport(
            name,
            False,
            {
                "reason": "chi_nvector_mismatch",
                "chi": list(chi.entries),
                "n_vector": list(nvec.counts),
            },
        )
    if not nvec.is_symmetric():
        return CheckReport(
            name,
            False,
            {"reason": "n_vector_asymmetric", "n_vector": list(nvec.counts)},
        )
    return CheckReport(name, True)


def check_weight_pairing(d: FixedPointDatum, strict: bool = False) -> CheckReport:
    """Every occurring weight w has -w occurring at some (possibly other) point.

    strict further requires equal total multiplicities of +w and -w; that is
    stronger than the existence statement and is labeled in the witness.
    """
    name = "weight_pairing"
    counts: dict[int, int] = {}
    for w in d.all_weights():
        counts[w] = counts.get(w, 0) + 1
    unpaired = sorted(w for w in counts if -w not in counts)
    if unpaired:
        return CheckReport(name, False, {"reason": "unpaired_weights", "weights": unpaired})
    if strict:
        mismatched = {
            w: [counts[w], counts[-w]]
            for w in sorted(counts)
            if w > 0 and counts[w] != counts[-w]
        }
        if mismatched:
            return CheckReport(
                name,
                False,
                {
                    "reason": "strict_multiplicity_mismatch",
                    "note": "strict mode only; stronger than existence pairing",
                    "counts": {str(w): v for w, v in mismatched.items()},
                },
            )
    return CheckReport(name, True)


def check_smallest_weight_pairing(d: FixedPointDatum) -> CheckReport:
    """With w the smallest positive weight: for each i, occurrences of +w at
    points with i negative weights equal occurrences of -w at points with
    i+1 negative weights."""
    name = "smallest_weight_pairing"
    if not any(True for _ in d.all_weights()):
        return CheckReport(name, True, {"skipped_reason": "no weights occur"}, skipped=True)
    try:
        w = smallest_positive_weight(d)
    except NoPositiveWeightError:
        return CheckReport(name, False, {"reason": "no_positive_weight"})
    n = d.half_dim
    pos = [0] * (n + 1)
    neg = [0] * (n + 1)
    for p in d.points:
        np_ = p.negative_count()
        pos[np_] += p.multiplicity(w)
        neg[np_] += p.multiplicity(-w)
    violations = [
        {"i": i, "count_plus_w": pos[i], "count_minus_w": neg[i + 1]}
        for i in range(n)
        if pos[i] != neg[i + 1]
    ]
    if violations:
        return CheckReport(
            name, False, {"smallest_weight": w, "violations": violations}
        )
    return CheckReport(name, True)


def check_single_weight_structure(d: FixedPointDatum) -> CheckReport:
    """With a single weight type w: point count is l * 2^n and N^i = l * C(n,i)."""
    name = "single_weight_structure"
    types = weight_types(d)
    if len(types) != 1:
        raise NotSingleTypeError(f"need exactly one weight type, got {sorted(types)}")
    n = d.half_dim
    k = len(d.points)
    if k % (1 << n):
        return CheckReport(
            name,
            False,
            {"reason": "point_count_not_multiple_of_2^n", "points": k, "half_dim": n},
        )
    l = k >> n
    nvec = n_vector(d)
    bad = [
        {"i": i, "count": nvec[i], "expected": l * math.comb(n, i)}
        for i in range(n + 1)
        if nvec[i] != l * math.comb(n, i)
    ]
    if bad:
        return CheckReport(name, False, {"reason": "binomial_profile_violated", "l": l, "violations": bad})
    return CheckReport(name, True, {"l": l})


def check_quarter_band(d: FixedPointDatum) -> CheckReport:
    """If every point sees the smallest positive weight w with
    N_p(w) + N_p(-w) >= 3*dim/8, then every i in [floor(n/4), ceil(3n/4)]
    has a point with i negative weights.

    A failed hypothesis is reported as a flagged vacuous pass: the statement
    is an implication and only its conclusion under its hypothesis is
    testable.
    """
    name = "quarter_band"
    if not d.points:
        return CheckReport(name, True, {"skipped_reason": "empty datum"}, skipped=True)
    n = d.half_dim
    if not any(True for _ in d.all_weights()):
        return CheckReport(name, True, {"hypothesis": "vacuous", "note": "no weights"})
    try:
        w = smallest_positive_weight(d)
    except NoPositiveWeightError:
        return CheckReport(name, True, {"hypothesis": "not-applicable", "note": "no positive weight"})
    # hypothesis: N_p(w)+N_p(-w) >= 3*(2n)/8 at every point, tested as 4*count >= 3n
    for p in d.points:
        if 4 * (p.multiplicity(w) + p.multiplicity(-w)) < 3 * n:
            return CheckReport(
                name,
                True,
                {
                    "hypothesis": "not-applicable",
                    "smallest_weight": w,
                    "failing_point": list(p.weights),
                },
            )
    lo = n // 4
    hi = -(-3 * n // 4)  # ceil(3n/4)
    nvec = n_vector(d)
    missing = [i for i in range(lo, hi + 1) if nvec[i] == 0]
    if missing:
        return CheckReport(
            name,
            False,
            {"smallest_weight": w, "range": [lo, hi], "missing": missing},
        )
    return CheckReport(name, True, {"smallest_weight": w, "range": [lo, hi]})


def kosniowski_bound(dim: int) -> int:
    """The conjectured fixed-point lower bound floor(dim/4) + 1."""
    if dim < 0 or dim % 2:
        raise ValueError(f"dimension must be even and nonnegative, got {dim}")
    return dim // 4 + 1


def check_kosniowski(d: FixedPointDatum) -> CheckReport:
    """Point count meets the conjectured bound floor(dim/4) + 1."""
    name = "kosniowski_bound"
    if not d.points:
        return CheckReport(name, True, {"skipped_reason": "empty datum"}, skipped=True)
    bound = kosniowski_bound(d.dim)
    k = len(d.points)
    if k < bound:
        return CheckReport(name, False, {"points": k, "bound": bound, "dim": d.dim})
    return CheckReport(name, True, {"points": k, "bound": bound})


def _pairwise_coprime(values: Sequence[int]) -> bool:
    vals = list(values)
    return all(
        math.gcd(vals[i], vals[j]) == 1
        for i in range(len(vals))
        for j in range(i + 1, len(vals))
    )


def _small_count_inequality(dim: int, l: int) -> bool:
    """dim < 4 * 2^(dim/(2l)), decided exactly as dim^(2l) < 4^(2l) * 2^dim."""
    return dim ** (2 * l) < 4 ** (2 * l) * (1 << dim)


def theorem_scope(d: FixedPointDatum) -> dict:
    """Which structural fixed-point-count theorems apply to this datum, and
    whether the conjectured bound holds under each applicable one."""
    types = sorted(weight_types(d))
    l = len(types)
    dim = d.dim
    bound_report = check_kosniowski(d)
    bound_holds = bound_report.passed and not bound_report.skipped

    single = {"applies": l == 1}
    two = {"applies": l == 2}
    coprime_all = l >= 1 and all(t > 1 for t in types) and _pairwise_coprime(types)
    small_count = {
        "applies": bool(coprime_all and dim > 0 and _small_count_inequality(dim, l)),
        "types_coprime_and_nontrivial": coprime_all,
    }
    if coprime_all and dim > 0:
        small_count["inequality_holds"] = _small_count_inequality(dim, l)
    three = {"applies": l == 3 and coprime_all}
    for entry in (single, two, small_count, three):
        if entry["applies"]:
            entry["bound_holds"] = bound_holds
    return {
        "weight_types": types,
        "type_count": l,
        "single_type": single,
        "two_types": two,
        "coprime_small_count": small_count,
        "three_coprime_types": three,
    }


def check_theorem_scope(d: FixedPointDatum) -> CheckReport:
    """theorem_scope wrapped as a report: fails iff an applicable theorem's
    bound is violated (vacuous pass when none applies)."""
    scope = theorem_scope(d)
    applicable = [
        key
        for key in ("single_type", "two_types", "coprime_small_count", "three_coprime_types")
        if scope[key]["applies"]
    ]
    passed = all(scope[key]["bound_holds"] for key in applicable)
    return CheckReport("theorem_scope", passed, scope)


def check_crowded(d: FixedPointDatum) -> CheckReport:
    """The set {i : N^i != 0} is a contiguous integer interval."""
    name = "crowded"
    nvec = n_vector(d)
    support = [i for i, c in enumerate(nvec) if c]
    if not support:
        return CheckReport(name, True, {"skipped_reason": "empty datum"}, skipped=True)
    gaps = [i for i in range(support[0], support[-1] + 1) if nvec[i] == 0]
    if gaps:
        return CheckReport(name, False, {"support": support, "gaps": gaps})
    return CheckReport(name, True)


def check_middle_range(d: FixedPointDatum) -> CheckReport:
    """N^i > 0 for every i with floor(n/3) <= i <= ceil(2n/3)."""
    name = "middle_range"
    if not d.points:
        return CheckReport(name, True, {"skipped_reason": "empty datum"}, skipped=True)
    n = d.half_dim
    lo = n // 3
    hi = -(-2 * n // 3)
    nvec = n_vector(d)
    missing = [i for i in range(lo, hi + 1) if nvec[i] == 0]
    if missing:
        return CheckReport(name, False, {"range": [lo, hi], "missing": missing})
    return CheckReport(name, True, {"range": [lo, hi]})


def check_dim6_crowding(d: FixedPointDatum) -> CheckReport:
    """Crowdedness in dimension <= 6, asserted as a theorem; for n = 3 also
    the dichotomy: either N^1 = N^2 > 0 with N^0 = N^3 = 0, or all N^i > 0."""
    name = "dim6_crowding"
    if d.half_dim > 3:
        raise DimensionTooLargeError(f"half-dimension {d.half_dim} exceeds 3")
    base = check_crowded(d)
    if base.skipped:
        return CheckReport(name, True, base.witness, skipped=True)
    if not base.passed:
        return CheckReport(name, False, {"reason": "not_crowded", **(base.witness or {})})
    if d.half_dim != 3:
        return CheckReport(name, True)
    nvec = n_vector(d)
    boundary_empty = nvec[1] == nvec[2] > 0 and nvec[0] == nvec[3] == 0
    all_occupied = all(c > 0 for c in nvec)
    if boundary_empty:
        return CheckReport(name, True, {"dichotomy_branch": 1})
    if all_occupied:
        return CheckReport(name, True, {"dichotomy_branch": 2})
    return CheckReport(
        name, False, {"reason": "dichotomy_violated", "n_vector": list(nvec.counts)}
    )


def restrict_to_divisor(d: FixedPointDatum, b: int) -> list[tuple[int, ...]]:
    """Per point, the sub-multiset of weights divisible by b (b >= 2)."""
    if b < 2:
        raise ValueError(f"divisor must be >= 2, got {b}")
    return [tuple(w for w in p.weights if w % b == 0) for p in d.points]


#: Documented execution order of run_all_checks.
ALL_CHECKS = (
    "rigidity",
    "weight_pairing",
    "smallest_weight_pairing",
    "single_weight_structure",
    "quarter_band",
    "kosniowski_bound",
    "theorem_scope",
    "crowded",
    "middle_range",
    "dim6_crowding",
)


def run_all_checks(d: FixedPointDatum, strict_pairing: bool = False) -> list[CheckReport]:
    """Run every applicable check in the fixed ALL_CHECKS order; checks whose
    preconditions fail are recorded as skips."""
    reports: list[CheckReport] = []
    rigidity = check_rigidity(d)
    reports.append(rigidity)
    reports.append(check_weight_pairing(d, strict=strict_pairing))
    reports.append(check_smallest_weight_pairing(d))
    if len(weight_types(d)) == 1:
        reports.append(check_single_weight_structure(d))
    else:
        reports.append(
            CheckReport(
                "single_weight_structure",
                True,
                {"skipped_reason": "not a single weight type"},
                skipped=True,
            )
        )
    reports.append(check_quarter_band(d))
    reports.append(check_kosniowski(d))
    reports.append(check_theorem_scope(d))
    rigid_ok = rigidity.passed and not rigidity.skipped
    if rigid_ok:
        reports.append(check_crowded(d))
    else:
        reports.append(
            CheckReport("crowded", True, {"skipped_reason": "rigidity did not pass"}, skipped=True)
        )
    if rigid_ok and d.points:
        reports.append(check_middle_range(d))
    else:
        reports.append(
            CheckReport(
                "middle_range",
                True,
                {"skipped_reason": "rigidity did not pass or empty datum"},
                skipped=True,
            )
        )
    if d.half_dim <= 3 and rigid_ok:
        reports.append(check_dim6_crowding(d))
    else:
        reports.append(
            CheckReport(
                "dim6_crowding",
                True,
                {"skipped_reason": "half-dimension > 3 or rigidity did not pass"},
                skipped=True,
            )
        )
    return reports
