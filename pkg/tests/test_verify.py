"""Identity and bound checks, validated against an independent evaluation
oracle.

The oracle never touches the polynomial machinery: it evaluates each
localization sum exactly with fractions.Fraction at deg(D)+1 distinct integer
arguments >= 2 (no poles there, since 1 - x^w = 0 forces |x| = 1).  A rational
function whose numerator and denominator have degree <= deg(D) and which takes
one value at deg(D)+1 distinct points is that constant identically, so
agreement at those points is a proof, not a sample.
"""

import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import circlefp.fpdata as fp
import circlefp.verify as vf


def localization_sum_at(d, i, x):
    """Degree-i localization sum evaluated at the rational number x."""
    total = Fraction(0)
    for p in d.points:
        num = sum((x ** sum(c) for c in itertools.combinations(p.weights, i)), Fraction(0))
        den = Fraction(1)
        for w in p.weights:
            den *= 1 - x**w
        total += num / den
    return total


def oracle_constants(d):
    """For each i: the constant the degree-i sum equals, or None."""
    bound = sum(abs(w) for w in d.all_weights())
    xs = [Fraction(v) for v in range(2, bound + 4)]  # > deg(D) points
    out = []
    for i in range(d.half_dim + 1):
        vals = [localization_sum_at(d, i, x) for x in xs]
        out.append(vals[0] if all(v == vals[0] for v in vals) else None)
    return out


ORACLE_DATA = [
    fp.gen_s2(1),
    fp.gen_s2(4),
    fp.gen_s6(1, 1),
    fp.gen_s6(1, 2),
    fp.gen_s6(2, 3),
    fp.gen_cpn((0, 1)),
    fp.gen_cpn((0, 1, 3)),
    fp.gen_cpn((0, 2, 3)),
    fp.gen_cpn((0, 1, 2, 3)),
    fp.gen_cpn((0, 3, 5, 9)),
    fp.product(fp.gen_s2(1), fp.gen_s2(2)),
    fp.product(fp.gen_s2(2), fp.gen_s6(1, 2)),
    fp.disjoint_union(fp.gen_s2(1), fp.gen_s2(3)),
]


@pytest.mark.parametrize("d", ORACLE_DATA, ids=range(len(ORACLE_DATA)))
def test_chi_vector_matches_evaluation_oracle(d):
    chi = vf.chi_vector(d)
    expected = oracle_constants(d)
    assert [Fraction(c) for c in chi] == expected


def test_chi_vector_examples():
    assert vf.chi_vector(fp.gen_s2(1)).entries == (1, -1)
    assert vf.chi_vector(fp.gen_s6(1, 2)).entries == (0, -1, 1, 0)
    assert vf.chi_vector(fp.gen_cpn((0, 1, 3))).entries == (1, -1, 1)
    assert vf.chi_vector(fp.new_datum(0, [[]])).entries == (1,)


def test_chi_vector_needs_points():
    with pytest.raises(ValueError):
        vf.chi_vector(fp.new_datum(2, []))


def test_regression_fixture_not_constant():
    bad = fp.new_datum(2, [[1, 2], [-1, -2]])
    # the independent oracle shows the degree-1 sum is non-constant (and in
    # fact the degree-0 sum already is)
    constants = oracle_constants(bad)
    assert constants[1] is None
    assert constants[0] is None
    with pytest.raises(vf.NotConstantError) as exc:
        vf.chi_vector(bad)
    assert exc.value.index == 0  # first failing degree is reported
    assert exc.value.residual.constant_ratio() is None
    report = vf.check_rigidity(bad)
    assert not report.passed
    assert report.witness["reason"] == "not_constant"
    assert report.witness["degree"] == 0


def test_check_rigidity_passes_on_generators():
    assert vf.check_rigidity(fp.gen_cpn((0, 1, 3))).passed
    single = fp.new_datum(0, [[]])
    r = vf.check_rigidity(single)
    assert r.passed and not r.skipped
    assert vf.check_rigidity(fp.new_datum(3, [])).skipped


generator_data = st.one_of(
    st.integers(1, 5).map(fp.gen_s2),
    st.tuples(st.integers(1, 5), st.integers(1, 5)).map(lambda ab: fp.gen_s6(*ab)),
    st.sets(st.integers(0, 10), min_size=2, max_size=5).map(
        lambda es: fp.gen_cpn(tuple(sorted(es)))
    ),
)

# products keep combined n <= 4 so the property suite stays fast
small_generator_data = st.one_of(
    st.integers(1, 5).map(fp.gen_s2),
    st.sets(st.integers(0, 10), min_size=2, max_size=3).map(
        lambda es: fp.gen_cpn(tuple(sorted(es)))
    ),
)
composite_data = st.one_of(
    generator_data,
    st.tuples(small_generator_data, small_generator_data).map(lambda dd: fp.product(*dd)),
    st.tuples(st.integers(1, 5), st.integers(1, 5)).map(
        lambda ww: fp.disjoint_union(fp.gen_s2(ww[0]), fp.gen_s2(ww[1]))
    ),
)


@settings(max_examples=40, deadline=None)
@given(composite_data)
def test_generator_data_pass_core_checks(d):
    assert vf.check_rigidity(d).passed
    assert vf.check_weight_pairing(d).passed
    assert vf.check_smallest_weight_pairing(d).passed


@settings(max_examples=40, deadline=None)
@given(composite_data)
def test_rigid_chi_properties(d):
    chi = vf.chi_vector(d)
    n = d.half_dim
    assert sum(abs(c) for c in chi) == len(d.points)
    assert all((-1) ** i * chi[i] >= 0 for i in range(n + 1))
    assert all(chi[i] == (-1) ** n * chi[n - i] for i in range(n + 1))


@settings(max_examples=30, deadline=None)
@given(small_generator_data, small_generator_data)
def test_chi_multiplicative_under_product(d1, d2):
    c1, c2 = vf.chi_vector(d1), vf.chi_vector(d2)
    conv = [0] * (d1.half_dim + d2.half_dim + 1)
    for i, a in enumerate(c1):
        for j, b in enumerate(c2):
            conv[i + j] += a * b
    assert list(vf.chi_vector(fp.product(d1, d2))) == conv


@settings(max_examples=30, deadline=None)
@given(generator_data, generator_data)
def test_chi_additive_under_union(d1, d2):
    if d1.half_dim != d2.half_dim:
        return
    u = fp.disjoint_union(d1, d2)
    assert list(vf.chi_vector(u)) == [
        a + b for a, b in zip(vf.chi_vector(d1), vf.chi_vector(d2))
    ]


@settings(max_examples=30, deadline=None)
@given(generator_data, st.integers(2, 4))
def test_weight_scaling_preserves_chi(d, c):
    scaled = fp.new_datum(d.half_dim, [[c * w for w in p.weights] for p in d.points])
    assert fp.n_vector(scaled) == fp.n_vector(d)
    assert vf.chi_vector(scaled).entries == vf.chi_vector(d).entries


def test_check_weight_pairing():
    assert vf.check_weight_pairing(fp.gen_s6(1, 2)).passed
    assert vf.check_weight_pairing(fp.new_datum(1, [[1], [-1]])).passed
    r = vf.check_weight_pairing(fp.new_datum(1, [[1], [1]]))
    assert not r.passed
    assert r.witness["weights"] == [1]


def test_check_weight_pairing_strict_mode():
    d = fp.new_datum(2, [[1, 1], [-1, 3], [-3, 1]])
    assert vf.check_weight_pairing(d).passed  # existence holds
    strict = vf.check_weight_pairing(d, strict=True)
    assert not strict.passed
    assert strict.witness["reason"] == "strict_multiplicity_mismatch"
    assert "stronger" in strict.witness["note"]
    # balanced multiplicities satisfy strict mode too
    assert vf.check_weight_pairing(fp.gen_s6(1, 2), strict=True).passed


def test_check_smallest_weight_pairing():
    assert vf.check_smallest_weight_pairing(fp.gen_s6(1, 2)).passed
    assert vf.check_smallest_weight_pairing(
        fp.product(fp.gen_s2(1), fp.gen_s2(1))
    ).passed
    r = vf.check_smallest_weight_pairing(fp.new_datum(2, [[1, 1], [-1, -1]]))
    assert not r.passed
    assert r.witness["smallest_weight"] == 1
    assert {"i": 0, "count_plus_w": 2, "count_minus_w": 0} in r.witness["violations"]
    assert vf.check_smallest_weight_pairing(fp.new_datum(0, [[], []])).skipped
    bad = vf.check_smallest_weight_pairing(fp.new_datum(1, [[-1], [-2]]))
    assert not bad.passed


def test_check_single_weight_structure():
    cube = fp.product(fp.product(fp.gen_s2(2), fp.gen_s2(2)), fp.gen_s2(2))
    r = vf.check_single_weight_structure(cube)
    assert r.passed
    assert r.witness["l"] == 1
    doubled = fp.disjoint_union(cube, cube)
    r2 = vf.check_single_weight_structure(doubled)
    assert r2.passed
    assert r2.witness["l"] == 2
    odd = fp.new_datum(2, [[1, 1], [-1, -1], [-1, 1], [-1, 1], [-1, 1]])
    assert not vf.check_single_weight_structure(odd).passed
    with pytest.raises(vf.NotSingleTypeError):
        vf.check_single_weight_structure(fp.gen_s6(1, 2))


def test_check_quarter_band():
    four = fp.gen_s2(1)
    for _ in range(3):
        four = fp.product(four, fp.gen_s2(1))
    r = vf.check_quarter_band(four)
    assert r.passed
    assert r.witness["range"] == [1, 3]

    flagged = vf.check_quarter_band(fp.gen_s6(1, 2))
    assert flagged.passed
    assert flagged.witness["hypothesis"] == "not-applicable"

    assert vf.check_quarter_band(fp.new_datum(0, [[]])).passed


def test_check_quarter_band_detects_gap():
    # hypothesis satisfied but the band has a hole: n=2, all points see +-1
    # twice, yet no point has exactly one negative weight
    d = fp.new_datum(2, [[1, 1], [-1, -1]])
    r = vf.check_quarter_band(d)
    assert not r.passed
    assert r.witness["missing"] == [1]


def test_kosniowski_bound():
    assert vf.kosniowski_bound(12) == 4
    assert vf.kosniowski_bound(0) == 1
    assert [vf.kosniowski_bound(2 * n) for n in range(1, 7)] == [1, 2, 2, 3, 3, 4]
    for n in range(1, 9):
        assert vf.kosniowski_bound(2 * n) == n // 2 + 1
    with pytest.raises(ValueError):
        vf.kosniowski_bound(7)
    with pytest.raises(ValueError):
        vf.kosniowski_bound(-2)


def test_check_kosniowski():
    assert vf.check_kosniowski(fp.gen_s6(1, 2)).passed  # 2 >= 2
    for n in range(1, 6):
        assert vf.check_kosniowski(fp.gen_cpn(tuple(range(n + 1)))).passed
    slim = fp.new_datum(4, [[1, 1, 1, 1], [-1, -1, -1, -1]])
    r = vf.check_kosniowski(slim)
    assert not r.passed
    assert r.witness == {"points": 2, "bound": 3, "dim": 8}
    assert vf.check_kosniowski(fp.new_datum(2, [])).skipped


def test_theorem_scope_three_coprime_types():
    scope = vf.theorem_scope(fp.gen_s6(2, 3))
    assert scope["weight_types"] == [2, 3, 5]
    assert scope["three_coprime_types"]["applies"]
    assert scope["three_coprime_types"]["bound_holds"]
    assert not scope["single_type"]["applies"]


def test_theorem_scope_single_type():
    d = fp.product(fp.gen_s2(1), fp.gen_s2(1))
    scope = vf.theorem_scope(d)
    assert scope["single_type"]["applies"]
    assert scope["single_type"]["bound_holds"]


def test_theorem_scope_small_count_inequality_boundary():
    # dimension 16 with four pairwise coprime types: 16^8 = 4^8 * 2^16, so the
    # strict inequality fails and the small-count theorem does not apply
    d16 = fp.new_datum(8, [[3, 5, 7, 11, -3, -5, -7, -11]])
    scope = vf.theorem_scope(d16)
    assert scope["coprime_small_count"]["types_coprime_and_nontrivial"]
    assert scope["coprime_small_count"]["inequality_holds"] is False
    assert not scope["coprime_small_count"]["applies"]
    # dimension 18, same four types: 18^8 < 4^8 * 2^18 holds
    d18 = fp.new_datum(9, [[3, 3, 5, 7, 11, -3, -5, -7, -11]])
    scope18 = vf.theorem_scope(d18)
    assert scope18["coprime_small_count"]["applies"]


def test_theorem_scope_two_types():
    d = fp.product(fp.gen_s2(2), fp.gen_s2(3))
    scope = vf.theorem_scope(d)
    assert scope["two_types"]["applies"]
    assert scope["two_types"]["bound_holds"]
    assert scope["coprime_small_count"]["applies"]  # {2,3} coprime, dim 4
    report = vf.check_theorem_scope(d)
    assert report.passed
    assert report.witness["weight_types"] == [2, 3]


def test_check_crowded():
    assert vf.check_crowded(fp.gen_s6(1, 2)).passed
    assert vf.check_crowded(fp.gen_cpn((0, 1, 3))).passed
    gap = vf.check_crowded(fp.new_datum(2, [[1, 2], [-1, -2]]))
    assert not gap.passed
    assert gap.witness["gaps"] == [1]
    assert vf.check_crowded(fp.new_datum(2, [])).skipped


def test_check_middle_range():
    r = vf.check_middle_range(fp.gen_s6(1, 2))
    assert r.passed
    assert r.witness["range"] == [1, 2]
    assert vf.check_middle_range(fp.gen_cpn((0, 1, 2, 3))).passed
    single = vf.check_middle_range(fp.new_datum(0, [[]]))
    assert single.passed
    assert single.witness["range"] == [0, 0]
    hole = vf.check_middle_range(fp.new_datum(3, [[1, 1, 1], [-1, -1, -1]]))
    assert not hole.passed
    assert hole.witness["missing"] == [1, 2]


def test_check_dim6_crowding():
    branch1 = vf.check_dim6_crowding(fp.gen_s6(1, 2))
    assert branch1.passed
    assert branch1.witness == {"dichotomy_branch": 1}
    branch2 = vf.check_dim6_crowding(fp.gen_cpn((0, 1, 2, 3)))
    assert branch2.passed
    assert branch2.witness == {"dichotomy_branch": 2}
    assert vf.check_dim6_crowding(fp.gen_cpn((0, 1, 3))).passed  # n=2: no dichotomy
    with pytest.raises(vf.DimensionTooLargeError):
        vf.check_dim6_crowding(fp.new_datum(4, [[1, 1, 1, 1], [-1, -1, -1, -1]]))
    split = vf.check_dim6_crowding(fp.new_datum(3, [[1, 1, 1], [-1, -1, -1]]))
    assert not split.passed
    skew = vf.check_dim6_crowding(fp.new_datum(3, [[1, 2, 3], [-1, 2, 3]]))
    assert not skew.passed
    assert skew.witness["reason"] == "dichotomy_violated"


def test_restrict_to_divisor():
    assert vf.restrict_to_divisor(fp.gen_s6(2, 3), 3) == [(3,), (-3,)]
    assert vf.restrict_to_divisor(fp.gen_s6(2, 3), 7) == [(), ()]
    d = fp.product(fp.gen_s2(2), fp.gen_s2(3))
    assert vf.restrict_to_divisor(d, 2) == [(2,), (2,), (-2,), (-2,)]
    with pytest.raises(ValueError):
        vf.restrict_to_divisor(fp.gen_s2(1), 1)


def test_run_all_checks_order_and_outcomes():
    reports = vf.run_all_checks(fp.gen_s6(1, 2))
    assert [r.check_name for r in reports] == list(vf.ALL_CHECKS)
    assert all(r.passed for r in reports)
    # gen_s6 has three weight types, so the single-type check is a skip
    by_name = {r.check_name: r for r in reports}
    assert by_name["single_weight_structure"].skipped
    assert not by_name["rigidity"].skipped

    bad = vf.run_all_checks(fp.new_datum(1, [[1], [1]]))
    bad_by_name = {r.check_name: r for r in bad}
    assert not bad_by_name["weight_pairing"].passed
    assert not bad_by_name["rigidity"].passed
    assert bad_by_name["crowded"].skipped  # precondition (rigidity) failed

    empty = vf.run_all_checks(fp.new_datum(2, []))
    assert all(r.passed or r.skipped for r in empty)
    assert not any(r.status() == "fail" for r in empty)


def test_reports_serialize_to_json():
    reports = vf.run_all_checks(fp.gen_s6(2, 3), strict_pairing=True)
    blob = json.dumps([r.to_json_dict() for r in reports])
    parsed = json.loads(blob)
    assert [entry["check"] for entry in parsed] == list(vf.ALL_CHECKS)
    assert {entry["status"] for entry in parsed} <= {"pass", "fail", "skip"}
    failing = vf.check_rigidity(fp.new_datum(2, [[1, 2], [-1, -2]]))
    json.dumps(failing.to_json_dict())  # witness with residual is serializable
