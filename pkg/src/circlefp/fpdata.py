"""Abstract fixed point data of circle actions.

A datum records a circle action with discrete fixed set at the combinatorial
level only: a half-dimension n and, for each fixed point, the multiset of its
n nonzero integer tangent weights.  Everything downstream (identity checks,
enumeration) operates on this data, never on manifolds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class DataError(ValueError):
    """Invalid fixed point data."""


class WrongArityError(DataError):
    """A point carries a number of weights different from the half-dimension."""


class ZeroWeightError(DataError):
    """A weight of zero appeared."""


class DimensionMismatchError(DataError):
    """Disjoint union of data with different half-dimensions."""


class DuplicateExponentError(DataError):
    """Repeated exponent in a projective-space generator call."""


class NoPositiveWeightError(DataError):
    """No positive weight occurs anywhere (only possible for invalid data)."""


@dataclass(frozen=True, order=True)
class FixedPoint:
    """One fixed point: its weight multiset, stored sorted ascending."""

    weights: tuple[int, ...]

    def __init__(self, weights: Iterable[int]):
        ws = tuple(sorted(weights))
        if any(w == 0 for w in ws):
            raise ZeroWeightError(f"zero weight in point {ws}")
        object.__setattr__(self, "weights", ws)

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self) -> Iterator[int]:
        return iter(self.weights)

    def negative_count(self) -> int:
        """Number of strictly negative weights at this point."""
        return sum(1 for w in self.weights if w < 0)

    def multiplicity(self, w: int) -> int:
        """How many times the weight ``w`` occurs at this point."""
        if w == 0:
            raise ZeroWeightError("weight 0 has no multiplicity")
        return self.weights.count(w)


@dataclass(frozen=True)
class FixedPointDatum:
    """Half-dimension n plus an ordered list of fixed points.

    The modeled manifold dimension is 2n; every point carries exactly n
    weights.  Point order is preserved as given; canonicalize() produces the
    representative with points sorted lexicographically.
    """

    half_dim: int
    points: tuple[FixedPoint, ...]

    def __post_init__(self):
        if self.half_dim < 0:
            raise DataError(f"negative half-dimension {self.half_dim}")
        for p in self.points:
            if len(p) != self.half_dim:
                raise WrongArityError(
                    f"point {p.weights} has {len(p)} weights, expected {self.half_dim}"
                )

    @classmethod
    def from_weights(cls, half_dim: int, points: Iterable[Iterable[int]]) -> "FixedPointDatum":
        return cls(half_dim, tuple(FixedPoint(ws) for ws in points))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[FixedPoint]:
        return iter(self.points)

    @property
    def dim(self) -> int:
        return 2 * self.half_dim

    def all_weights(self) -> Iterator[int]:
        for p in self.points:
            yield from p.weights


@dataclass(frozen=True)
class NVector:
    """Counts N^0..N^n of fixed points by number of negative weights."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.counts):
            raise DataError("negative count in N-vector")

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def is_symmetric(self) -> bool:
        return self.counts == self.counts[::-1]


def new_datum(half_dim: int, points: Iterable[Iterable[int]]) -> FixedPointDatum:
    """Validated datum with each point's weights in canonical sorted storage."""
    return FixedPointDatum.from_weights(half_dim, points)


def n_vector(d: FixedPointDatum) -> NVector:
    counts = [0] * (d.half_dim + 1)
    for p in d.points:
        counts[p.negative_count()] += 1
    return NVector(tuple(counts))


def smallest_positive_weight(d: FixedPointDatum) -> int:
    """Minimum over all positive weights at all points."""
    best: int | None = None
    for w in d.all_weights():
        if w > 0 and (best is None or w < best):
            best = w
    if best is None:
        raise NoPositiveWeightError("no positive weight occurs in the datum")
    return best


def weight_types(d: FixedPointDatum) -> set[int]:
    """Absolute values of all occurring weights."""
    return {abs(w) for w in d.all_weights()}


def is_effective(d: FixedPointDatum) -> bool:
    """True iff the gcd of all occurring |w| is 1 (vacuously true with no weights)."""
    ws = [abs(w) for w in d.all_weights()]
    return math.gcd(*ws) == 1 if ws else True


def gen_s2(w: int) -> FixedPointDatum:
    """Rotation of the 2-sphere at speed w: two points {w} and {-w}."""
    if w < 1:
        raise ValueError(f"rotation speed must be >= 1, got {w}")
    return new_datum(1, [[w], [-w]])


def gen_s6(a: int, b: int) -> FixedPointDatum:
    """The 6-sphere action with two fixed points {-a-b, a, b} and {-a, -b, a+b}."""
    if a < 1 or b < 1:
        raise ValueError(f"parameters must be >= 1, got a={a}, b={b}")
    return new_datum(3, [[-a - b, a, b], [-a, -b, a + b]])


def gen_cpn(exponents: Sequence[int]) -> FixedPointDatum:
    """Linear action on complex projective space with the given exponents.

    Exponents must be strictly increasing and nonnegative; point i carries the
    weights {a_j - a_i : j != i} and therefore has exactly i negative weights.
    """
    exps = list(exponents)
    if not exps:
        raise ValueError("need at least one exponent")
    if any(e < 0 for e in exps):
        raise ValueError("exponents must be nonnegative")
    for prev, cur in zip(exps, exps[1:]):
        if cur == prev:
            raise DuplicateExponentError(f"duplicate exponent {cur}")
        if cur < prev:
            raise ValueError("exponents must be strictly increasing")
    points = []
    for i, ai in enumerate(exps):
        points.append([aj - ai for j, aj in enumerate(exps) if j != i])
    return new_datum(len(exps) - 1, points)


def product(d1: FixedPointDatum, d2: FixedPointDatum) -> FixedPointDatum:
    """Datum of a product action: one point per pair, weights merged."""
    points = []
    for p in d1.points:
        for q in d2.points:
            points.append(p.weights + q.weights)
    return new_datum(d1.half_dim + d2.half_dim, points)


def disjoint_union(d1: FixedPointDatum, d2: FixedPointDatum) -> FixedPointDatum:
    """Concatenated point lists; half-dimensions must agree."""
    if d1.half_dim != d2.half_dim:
        raise DimensionMismatchError(
            f"cannot union half-dimensions {d1.half_dim} and {d2.half_dim}"
        )
    return FixedPointDatum(d1.half_dim, d1.points + d2.points)


def canonicalize(d: FixedPointDatum) -> FixedPointDatum:
    """The fixed representative under point reordering: points sorted lex."""
    return FixedPointDatum(d.half_dim, tuple(sorted(d.points)))


def sign_flip(d: FixedPointDatum) -> FixedPointDatum:
    """Negate every weight at every point (not canonicalized)."""
    return FixedPointDatum(d.half_dim, tuple(FixedPoint(-w for w in p) for p in d.points))


# -- JSON document form (shared by the CLI and report serialization) ---------

def to_document(d: FixedPointDatum) -> dict:
    """{"dim": 2n, "fixed_points": [{"weights": [...]}, ...]}"""
    return {
        "dim": d.dim,
        "fixed_points": [{"weights": list(p.weights)} for p in d.points],
    }


def datum_from_document(doc: object) -> FixedPointDatum:
    """Parse the JSON document form; raises DataError with a field diagnostic."""
    if not isinstance(doc, dict):
        raise DataError("document must be a JSON object")
    if "dim" not in doc:
        raise DataError("missing field 'dim'")
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0 or dim % 2:
        raise DataError(f"'dim' must be an even nonnegative integer, got {dim!r}")
    if "fixed_points" not in doc or not isinstance(doc["fixed_points"], list):
        raise DataError("missing or invalid field 'fixed_points'")
    points = []
    for idx, item in enumerate(doc["fixed_points"]):
        if not isinstance(item, dict) or "weights" not in item:
            raise DataError(f"fixed_points[{idx}] must be an object with a 'weights' field")
        ws = item["weights"]
        if not isinstance(ws, list) or any(not isinstance(w, int) or isinstance(w, bool) for w in ws):
            raise DataError(f"fixed_points[{idx}].weights must be a list of integers")
        points.append(ws)
    return new_datum(dim // 2, points)
