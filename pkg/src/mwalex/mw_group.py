"""Group law on sections of the elliptic threefold u^3 + v^2 = F over the
rational function field in x, y.

A finite section is a pair (A, B) of rational functions with A^3 + B^2 = F in
the chart z = 1; A is the weight-2 coordinate and B the weight-3 coordinate.
Under (x_W, y_W) = (-A, B) the law agrees with the standard chord-tangent
construction on y_W^2 = x_W^3 + F, which the test suite checks independently.

The order-6 automorphism is (A, B) -> (w3*A, -B) with w3 a fixed primitive
cube root of unity; it represents multiplication by the scalar w6 = 1 + w3^2
acting on sections, and satisfies w^2 = w - 1 as an operator.
"""

from __future__ import annotations

from mwalex.algebra import AlexPoly, FieldLacksRoot, IncompatibleField
from mwalex.multipoly import RatFunc, ReductionPolicy, TriPoly

# Sections are reduced much more eagerly than generic rational functions:
# the group-law formulas square and cube their inputs, so unreduced
# coordinates blow up doubly exponentially along a chain of operations.
SECTION_POLICY = ReductionPolicy(threshold=80)


class NotOnCurve(Exception):
    pass


class UnsupportedShape(Exception):
    pass


class CurveF:
    """The threefold datum: F of degree 6k, kept in the chart z = 1."""

    def __init__(self, F_affine: TriPoly, k: int):
        if any(e[2] for e in F_affine.terms):
            raise ValueError("curve polynomial must live in the chart z=1")
        if k < 0:
            raise ValueError("k must be nonnegative")
        self.F = F_affine
        self.k = k

    @staticmethod
    def from_homogeneous(F: TriPoly):
        if not F.is_homogeneous():
            raise ValueError("expected a homogeneous polynomial")
        d = F.degree
        if d % 6 != 0:
            raise ValueError("degree of F must be a multiple of 6")
        return CurveF(F.dehomogenize("z"), d // 6)

    @property
    def spec(self):
        return self.F.spec

    def rhs(self) -> RatFunc:
        return RatFunc(self.F)

    def __repr__(self):
        return "CurveF(k=%d, F=%r)" % (self.k, self.F)


class Section:
    """A point of the Mordell-Weil group: Infinity or a pair (A, B)."""

    __slots__ = ("A", "B")

    def __init__(self, A: RatFunc = None, B: RatFunc = None):
        if (A is None) != (B is None):
            raise ValueError("both coordinates or neither")
        self.A = A
        self.B = B

    @staticmethod
    def infinity():
        return Section()

    @staticmethod
    def from_polys(A: TriPoly, B: TriPoly):
        return Section(RatFunc(A), RatFunc(B))

    def is_infinity(self):
        return self.A is None

    @property
    def spec(self):
        if self.is_infinity():
            raise ValueError("the section at infinity carries no field")
        return self.A.spec

    def eq(self, other: "Section") -> bool:
        if self.is_infinity() or other.is_infinity():
            return self.is_infinity() and other.is_infinity()
        return self.A == other.A and self.B == other.B

    def normalized(self, policy=None, force=False):
        if self.is_infinity():
            return self
        return Section(self.A.normalized(policy, force), self.B.normalized(policy, force))

    def __repr__(self):
        if self.is_infinity():
            return "Section(infinity)"
        return "Section(A=%r, B=%r)" % (self.A, self.B)


def on_curve(sigma: Section, curve: CurveF) -> bool:
    if sigma.is_infinity():
        return True
    if sigma.spec != curve.spec:
        raise IncompatibleField("section and curve over different towers")
    return sigma.A ** 3 + sigma.B ** 2 == curve.rhs()


def _require_on_curve(sigma, curve):
    if not on_curve(sigma, curve):
        raise NotOnCurve("section does not satisfy A^3 + B^2 = F")


def negate(sigma: Section, curve: CurveF) -> Section:
    _require_on_curve(sigma, curve)
    if sigma.is_infinity():
        return sigma
    return Section(sigma.A, -sigma.B)


def add(sigma1: Section, sigma2: Section, curve: CurveF, check=True) -> Section:
    """Sum of two sections; dispatches to doubling/inverse on equal A."""
    if check:
        _require_on_curve(sigma1, curve)
        _require_on_curve(sigma2, curve)
    if sigma1.is_infinity():
        return sigma2
    if sigma2.is_infinity():
        return sigma1
    f2, f3 = sigma1.A, sigma1.B
    g2, g3 = sigma2.A, sigma2.B
    if f2 == g2:
        if f3 == -g3:
            return Section.infinity()
        if f3 == g3:
            return double(sigma1, curve, check=False)
        raise NotOnCurve("sections share A with incompatible B coordinates")
    F = curve.rhs()
    d = f2 - g2
    d2 = d * d
    d3 = d2 * d
    A3 = (g2 * f2 * f2 + g2 * g2 * f2 + 2 * (g3 * f3) - 2 * F) / d2
    B3 = (3 * (f2 * g2) * (g3 * f2 - f3 * g2) + (g3 - f3) * (g3 * f3 - 3 * F)) / d3
    return Section(A3, B3).normalized(SECTION_POLICY)


def double(sigma: Section, curve: CurveF, check=True) -> Section:
    if check:
        _require_on_curve(sigma, curve)
    if sigma.is_infinity():
        return sigma
    f2, f3 = sigma.A, sigma.B
    if f3.is_zero():
        return Section.infinity()
    f2c = f2 ** 3
    f3sq = f3 * f3
    A2 = -(f2 * (9 * f2c + 8 * f3sq)) / (4 * f3sq)
    B2 = -(27 * f2c * f2c + 36 * f2c * f3sq + 8 * f3sq * f3sq) / (8 * (f3sq * f3))
    return Section(A2, B2).normalized(SECTION_POLICY)


def sub(sigma1: Section, sigma2: Section, curve: CurveF) -> Section:
    return add(sigma1, negate(sigma2, curve), curve)


def omega_action(sigma: Section, curve: CurveF) -> Section:
    """The order-6 automorphism (A, B) -> (w3*A, -B); w^3 is negation."""
    _require_on_curve(sigma, curve)
    if sigma.is_infinity():
        return sigma
    try:
        w3 = curve.spec.omega(3)
    except FieldLacksRoot:
        raise FieldLacksRoot("omega action needs a primitive cube root of unity in the field")
    A = RatFunc(sigma.A.num.scaled(w3), sigma.A.den)
    return Section(A, -sigma.B)


def int_multiple(n: int, sigma: Section, curve: CurveF) -> Section:
    """n*sigma by double-and-add; negative n via the inverse."""
    _require_on_curve(sigma, curve)
    if n == 0 or sigma.is_infinity():
        return Section.infinity()
    if n < 0:
        return int_multiple(-n, negate(sigma, curve), curve)
    result = Section.infinity()
    base = sigma
    while n:
        if n & 1:
            result = add(result, base, curve, check=False)
        n >>= 1
        if n:
            base = double(base, curve, check=False)
    return result


def zomega_scalar(coeff, sigma: Section, curve: CurveF) -> Section:
    """(a + b*w6) * sigma for integers a, b, with w6 acting as omega_action."""
    a, b = int(coeff[0]), int(coeff[1])
    _require_on_curve(sigma, curve)
    result = int_multiple(a, sigma, curve)
    if b:
        result = add(result, int_multiple(b, omega_action(sigma, curve), curve), curve, check=False)
    return result


def mw_rank_from_alexander(alex: AlexPoly) -> int:
    """Mordell-Weil rank of u^3+v^2=F for an irreducible nodal-cuspidal curve:
    the degree of its Alexander polynomial (t^2-t+1)^s."""
    for k, v in alex.cyclo_mults.items():
        if k != 6 and v:
            raise UnsupportedShape("Alexander polynomial has a factor phi_%d" % k)
    if not alex.extra.is_constant():
        raise UnsupportedShape("Alexander polynomial has an untracked factor")
    return 2 * alex.s(6)


def unit_matches(sigma: Section, target: Section, curve: CurveF):
    """The unit u in {±w^j} with sigma = u * target, or None.

    Units are reported as strings: '1', '-1', 'w', '-w', ..., 'w^5' with w the
    implemented order-6 automorphism.
    """
    cand = target
    for j in range(6):
        name = "1" if j == 0 else ("w" if j == 1 else "w^%d" % j)
        if sigma.eq(cand):
            return name
        neg = negate(cand, curve)
        if sigma.eq(neg):
            return "-" + name
        cand = omega_action(cand, curve)
    return None
