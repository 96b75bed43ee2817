"""Exact arithmetic for Laurent polynomials and rational functions in one
indeterminate ``t`` over arbitrary-precision integers.

Values are immutable and every operation is a pure function, so the types in
this module are safe for unrestricted concurrent use.  There is no rounding
anywhere: coefficients are Python ints, ratios are ``fractions.Fraction``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

# Rational functions whose numerator or denominator exceeds this many terms
# get a polynomial-GCD reduction after arithmetic; smaller ones only get the
# (always applied) integer-content reduction.
SIMPLIFY_TERM_THRESHOLD = 512


class LaurentPolynomial:
    """Sparse Laurent polynomial: exponent (possibly negative) -> nonzero int."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        cleaned: dict[int, int] = {}
        if terms:
            for exp, coeff in terms.items():
                if coeff != 0:
                    cleaned[exp] = coeff
        self._terms = cleaned

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        """The monomial ``coefficient * t**exponent``."""
        return cls({exponent: coefficient})

    def terms(self) -> dict[int, int]:
        """A copy of the exponent -> coefficient mapping (no zero entries)."""
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._terms.items())

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def min_exponent(self) -> int:
        """Lowest exponent with a nonzero coefficient; undefined on zero."""
        if not self._terms:
            raise ValueError("the zero polynomial has no exponents")
        return min(self._terms)

    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no exponents")
        return max(self._terms)

    def content(self) -> int:
        """gcd of all coefficients (0 for the zero polynomial)."""
        return math.gcd(*self._terms.values()) if self._terms else 0

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by ``t**k``."""
        if k == 0:
            return self
        return LaurentPolynomial({e + k: c for e, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPolynomial):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        result = LaurentPolynomial.__new__(LaurentPolynomial)
        result._terms = out
        return result

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        if isinstance(other, int):
            if other == 0:
                return LaurentPolynomial.zero()
            return LaurentPolynomial({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        result = LaurentPolynomial.__new__(LaurentPolynomial)
        result._terms = out
        return result

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self._terms:
            return "LaurentPolynomial('0')"
        parts = []
        for e in sorted(self._terms):
            c = self._terms[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return f"LaurentPolynomial('{text}')"


def one_minus_t_pow(w: int) -> LaurentPolynomial:
    """The factor ``1 - t**w`` for a nonzero weight ``w``.

    ``w = 0`` is rejected: the factor would vanish identically and can never
    appear in a denominator.
    """
    if w == 0:
        raise ValueError("weight 0 is not allowed: 1 - t^0 vanishes identically")
    return LaurentPolynomial({0: 1, w: -1})


def elementary_symmetric(i: int, weights: Iterable[int]) -> LaurentPolynomial:
    """The i-th elementary symmetric polynomial evaluated at ``t**w`` for the
    given weights; ``i = 0`` gives 1.
    """
    ws = list(weights)
    if not 0 <= i <= len(ws):
        raise ValueError(f"need 0 <= i <= {len(ws)}, got i={i}")
    return elementary_symmetric_all(ws)[i]


def elementary_symmetric_all(weights: Iterable[int]) -> list[LaurentPolynomial]:
    """All elementary symmetric polynomials sigma_0 .. sigma_n at ``t**w``."""
    sigmas = [LaurentPolynomial.one()]
    for w in weights:
        if w == 0:
            raise ValueError("weights must be nonzero")
        tw = LaurentPolynomial.monomial(w)
        sigmas.append(LaurentPolynomial.zero())
        for d in range(len(sigmas) - 1, 0, -1):
            sigmas[d] = sigmas[d] + sigmas[d - 1] * tw
    return sigmas


class RationalFunction:
    """Quotient of two Laurent polynomials, kept in a normal form.

    Normal form: numerator and denominator are shifted by a common power of t
    so both are ordinary polynomials not both divisible by t, their shared
    integer content is divided out, and the denominator's lowest nonzero
    coefficient is positive.  The zero function is stored as 0/1.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, numerator: LaurentPolynomial, denominator: LaurentPolynomial | None = None):
        if denominator is None:
            denominator = LaurentPolynomial.one()
        if denominator.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self._num, self._den = _normalize(numerator, denominator)

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls(LaurentPolynomial.zero())

    @classmethod
    def from_integer(cls, c: int) -> "RationalFunction":
        return cls(LaurentPolynomial.monomial(0, c))

    @property
    def numerator(self) -> LaurentPolynomial:
        return self._num

    @property
    def denominator(self) -> LaurentPolynomial:
        return self._den

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = RationalFunction.from_integer(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        # Cross-multiplication decides equality without needing unique forms.
        return self._num * other._den == other._num * self._den

    def __hash__(self) -> int:
        # Collapse to a canonical representative first.
        reduced = self.simplify()
        return hash((reduced._num, reduced._den))

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self._num, self._den)

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        if not isinstance(other, RationalFunction):
            return NotImplemented
        num = self._num * other._den + other._num * self._den
        den = self._den * other._den
        result = RationalFunction(num, den)
        if len(result._num) > SIMPLIFY_TERM_THRESHOLD or len(result._den) > SIMPLIFY_TERM_THRESHOLD:
            result = result.simplify()
        return result

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(self._num * other._num, self._den * other._den)

    def constant_ratio(self) -> Fraction | None:
        """The constant c with numerator = c * denominator, or None if the
        function is not constant.  The ratio may be a non-integer Fraction."""
        if self._num.is_zero():
            return Fraction(0)
        if self._num.min_exponent() != self._den.min_exponent():
            return None
        e = self._den.min_exponent()
        ratio = Fraction(self._num.coefficient(e), self._den.coefficient(e))
        if self._num * ratio.denominator == self._den * ratio.numerator:
            return ratio
        return None

    def is_constant(self) -> int | None:
        """The integer constant this function equals, or None.

        A function proportional to 1 with a non-integer ratio also returns
        None; callers needing to distinguish that case use constant_ratio().
        """
        ratio = self.constant_ratio()
        if ratio is None or ratio.denominator != 1:
            return None
        return int(ratio)

    def simplify(self) -> "RationalFunction":
        """Divide out the polynomial gcd of numerator and denominator."""
        if self._num.is_zero():
            return self
        a = _dense_from_poly(self._num)
        b = _dense_from_poly(self._den)
        g = _poly_gcd(a, b)
        if len(g) == 1 and g[0] == 1:
            return self
        num = _poly_to_laurent(_div_exact(a, g))
        den = _poly_to_laurent(_div_exact(b, g))
        return RationalFunction(num, den)

    def __repr__(self) -> str:
        return f"RationalFunction({self._num!r}, {self._den!r})"


def _normalize(num: LaurentPolynomial, den: LaurentPolynomial) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    if num.is_zero():
        return LaurentPolynomial.zero(), LaurentPolynomial.one()
    # Common power of t: afterwards both are ordinary polynomials and at
    # least one has a nonzero constant term.
    m = min(num.min_exponent(), den.min_exponent())
    num, den = num.shift(-m), den.shift(-m)
    shared = math.gcd(num.content(), den.content())
    if shared > 1:
        num = LaurentPolynomial({e: c // shared for e, c in num.items()})
        den = LaurentPolynomial({e: c // shared for e, c in den.items()})
    if den.coefficient(den.min_exponent()) < 0:
        num, den = -num, -den
    return num, den


# -- dense univariate helpers (coefficient lists, index = exponent) ----------
#
# Used for the gcd reduction; callers guarantee min exponent >= 0.

def _dense_from_poly(p: LaurentPolynomial) -> list[int]:
    top = p.max_exponent()
    if p.min_exponent() < 0:
        raise ValueError("dense form needs nonnegative exponents")
    out = [0] * (top + 1)
    for e, c in p.items():
        out[e] = c
    return out


def _poly_to_laurent(coeffs: list[int]) -> LaurentPolynomial:
    return LaurentPolynomial({e: c for e, c in enumerate(coeffs) if c})


def _trim(coeffs: list[int]) -> list[int]:
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return coeffs[:end]


def _primitive(coeffs: list[int]) -> list[int]:
    coeffs = _trim(coeffs)
    if not coeffs:
        return coeffs
    g = math.gcd(*coeffs)
    if coeffs[-1] < 0:
        g = -g
    return [c // g for c in coeffs]


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b (b nonzero); exact over the integers."""
    r = a[:]
    db = len(b) - 1
    lb = b[-1]
    while True:
        r = _trim(r)
        if len(r) - 1 < db:
            return r
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, bc in enumerate(b):
            r[shift + i] -= lr * bc


def _poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """gcd of the primitive parts, by a primitive pseudo-remainder sequence."""
    a, b = _primitive(a), _primitive(b)
    if not a:
        return b if b else [0]
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _primitive(_pseudo_rem(a, b))
        a, b = b, r
    return a


def _div_exact(a: list[int], g: list[int]) -> list[int]:
    """Exact polynomial division a / g; raises if g does not divide a."""
    a = _trim(a)
    if not a:
        return []
    q = [0] * (len(a) - len(g) + 1)
    r = a[:]
    for k in range(len(q) - 1, -1, -1):
        c, rem = divmod(r[k + len(g) - 1], g[-1])
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[k] = c
        for i, gc in enumerate(g):
            r[k + i] -= c * gc
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return q
