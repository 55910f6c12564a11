"""Quasi-toric relations h1^p F1 + h2^q F2 + h3^r F3 = 0: verification, degree
bookkeeping, elliptic-type classification, equivalence, the (2,3,6) normal
form, conversion to and from Mordell-Weil sections, and Kummer pullbacks.
"""

from __future__ import annotations

from mwalex.algebra import QQ, FieldElem, IncompatibleField, qq
from mwalex.multipoly import (
    NotDivisible,
    RatFunc,
    TriPoly,
    tri_divexact,
)
from mwalex.mw_group import CurveF, NotOnCurve, Section, on_curve


class IncompatibleTypes(Exception):
    pass


class RelationNotNormalized(Exception):
    pass


class DegenerateLines(Exception):
    pass


ELLIPTIC_TYPES = ((2, 3, 6), (3, 3, 3), (2, 4, 4), (2, 2, 2, 2))


class QTRel:
    """A quasi-toric relation: exponents ptype, curve parts F, cofactors h."""

    __slots__ = ("ptype", "F", "h")

    def __init__(self, ptype, F, h):
        self.ptype = tuple(int(e) for e in ptype)
        self.F = tuple(F)
        self.h = tuple(h)
        if len(self.F) != len(self.ptype) or len(self.h) != len(self.ptype):
            raise ValueError("ptype, F and h must have matching lengths")
        if any(e < 1 for e in self.ptype):
            raise ValueError("exponents must be positive")
        if any(p.is_zero() for p in self.F) or any(p.is_zero() for p in self.h):
            raise ValueError("relation parts must be nonzero")
        specs = {p.spec for p in self.F} | {p.spec for p in self.h}
        if len(specs) > 1:
            raise IncompatibleField("relation parts over different towers")

    @property
    def spec(self):
        return self.F[0].spec

    def parts(self):
        """The addends h_i^{e_i} F_i."""
        return tuple(h ** e * F for e, F, h in zip(self.ptype, self.F, self.h))

    def total(self) -> TriPoly:
        acc = None
        for p in self.parts():
            acc = p if acc is None else acc + p
        return acc

    def support(self) -> TriPoly:
        acc = TriPoly.constant(self.spec, 1)
        for F in self.F:
            acc = acc * F
        return acc

    def kappa(self):
        return self.ptype[0] * self.h[0].degree + self.F[0].degree

    def __repr__(self):
        return "QTRel(type=%s)" % (self.ptype,)


def qt_elliptic_type(*multiplicities):
    """The elliptic orbifold type matching the multiplicities, or None."""
    ms = tuple(sorted(int(m) for m in multiplicities))
    if any(m < 2 for m in ms):
        raise ValueError("orbifold multiplicities must be >= 2")
    n = len(ms)
    total = sum(QQ(1, m) for m in ms)
    if total != n - 2:
        return None
    return ms if ms in ELLIPTIC_TYPES else None


def qt_verify(rel: QTRel):
    """Check homogeneity, the kappa degree identity, and exact vanishing.

    Returns a report dict whose 'verdict' is one of ok, fails_sum,
    fails_degrees, not_homogeneous; elliptic types also get the integer
    omega = kappa - sum deg h_i and its degree identity.
    """
    report = {"type": list(rel.ptype)}
    for p in rel.F + rel.h:
        if not p.is_homogeneous():
            report["verdict"] = "not_homogeneous"
            return report
    kappas = [e * h.degree + F.degree for e, F, h in zip(rel.ptype, rel.F, rel.h)]
    report["kappas"] = kappas
    if len(set(kappas)) != 1:
        report["verdict"] = "fails_degrees"
        return report
    kappa = kappas[0]
    report["kappa"] = kappa
    try:
        etype = qt_elliptic_type(*rel.ptype)
    except ValueError:
        etype = None
    if etype is not None:
        report["elliptic_type"] = list(etype)
        omega = kappa - sum(h.degree for h in rel.h)
        report["omega"] = omega
        weighted = sum(QQ(F.degree, e) for e, F in zip(rel.ptype, rel.F))
        report["omega_identity"] = bool(qq(omega) == weighted)
    total = rel.total()
    if not total.is_zero():
        from mwalex.multipoly import format_tripoly

        report["verdict"] = "fails_sum"
        report["residual"] = format_tripoly(total)
        return report
    report["verdict"] = "ok"
    return report


def qt_equivalent(rel1: QTRel, rel2: QTRel) -> bool:
    """Equivalence through a single rational factor lambda.

    Solves lambda from the first addend and checks the remaining identities
    by cross-multiplication; the h-product identity is included.
    """
    if tuple(sorted(rel1.ptype)) != tuple(sorted(rel2.ptype)):
        raise IncompatibleTypes("relations have different types")
    if rel1.ptype != rel2.ptype:
        raise IncompatibleTypes("relation slots are ordered differently")
    p1 = rel1.parts()
    p2 = rel2.parts()
    lam_num, lam_den = p2[0], p1[0]
    for a, b in zip(p1[1:], p2[1:]):
        if b * lam_den != a * lam_num:
            return False
    hp1 = rel1.h[0] * rel1.h[1] * rel1.h[2]
    hp2 = rel2.h[0] * rel2.h[1] * rel2.h[2]
    return hp2 * lam_den == hp1 * lam_num


def qt_normal_form_236(rel: QTRel) -> QTRel:
    """The equivalent relation hb1^2 + hb2^3 + (F1^3 F2^2 F3) hb3^6 = 0."""
    if rel.ptype != (2, 3, 6):
        raise IncompatibleTypes("normal form applies to type (2,3,6) relations")
    F1, F2, F3 = rel.F
    h1, h2, h3 = rel.h
    one = TriPoly.constant(rel.spec, 1)
    if F1.is_constant() and F2.is_constant():
        return rel
    hb1 = F1 ** 2 * F2 * h1
    hb2 = F1 * F2 * h2
    hb3 = h3
    return QTRel((2, 3, 6), (one, one, F1 ** 3 * F2 ** 2 * F3), (hb1, hb2, hb3))


def section_from_qt(rel: QTRel, check=True):
    """Section (A, B) of u^3 + v^2 = F from a (2,3,6) relation.

    The relation must have constant F1, F2 (apply the normal form first if it
    does not); constants are absorbed through square and cube roots taken in
    the field, and the curve is F = -F3 in the chart z = 1.  Returns the pair
    (section, curve).
    """
    if rel.ptype != (2, 3, 6):
        raise IncompatibleTypes("section conversion applies to type (2,3,6)")
    if not (rel.F[0].is_constant() and rel.F[1].is_constant()):
        rel = qt_normal_form_236(rel)
    spec = rel.spec
    c1 = rel.F[0].constant_value()
    c2 = rel.F[1].constant_value()
    root_b = spec.kth_root(c1, 2)
    root_a = spec.kth_root(c2, 3)
    if root_a is None or root_b is None:
        raise RelationNotNormalized(
            "the field lacks the square/cube roots absorbing the constant parts"
        )
    F3 = rel.F[2]
    Fh = -F3
    d = Fh.degree
    if d % 6 != 0:
        raise RelationNotNormalized("curve part has degree not divisible by 6")
    curve = CurveF.from_homogeneous(Fh)
    h1, h2, h3 = (p.dehomogenize("z") for p in rel.h)
    A = RatFunc(h2.scaled(root_a), h3 ** 2)
    B = RatFunc(h1.scaled(root_b), h3 ** 3)
    sigma = Section(A, B)
    if check and not on_curve(sigma, curve):
        raise RelationNotNormalized("converted section fails the curve equation")
    return sigma, curve


def qt_from_section(sigma: Section, curve: CurveF) -> QTRel:
    """Clear denominators of a finite section into f^3 + g^2 = h^6 F.

    The result is encoded with exponents (2, 3, 6) on (g, f, h) against the
    parts (1, 1, -F); degrees satisfy deg f = 2(deg h + k), deg g = 3(deg h+k).
    """
    if sigma.is_infinity():
        raise NotOnCurve("the zero section yields no quasi-toric relation")
    if not on_curve(sigma, curve):
        raise NotOnCurve("section does not satisfy A^3 + B^2 = F")
    spec = curve.spec
    one = TriPoly.constant(spec, 1)
    k = curve.k
    Fh = curve.F.homogenize(6 * k)
    A = sigma.A.normalized(force=True)
    B = sigma.B.normalized(force=True)

    if A.is_zero() or B.is_zero():
        # degenerate sections: F is a perfect square or cube of a polynomial
        if A.is_zero():
            g = B.as_poly()
            gh = g.homogenize(3 * k)
            return QTRel((2, 3, 6), (one, Fh, -2 * Fh), (gh, one, one))
        f = A.as_poly()
        fh = f.homogenize(2 * k)
        return QTRel((2, 3, 6), (Fh, one, -2 * Fh), (one, fh, one))

    da, db = A.den, B.den
    h_aff = None
    if not da.is_constant() or not db.is_constant():
        try:
            h_aff = tri_divexact(db, da)
        except NotDivisible:
            h_aff = None
    if h_aff is None:
        h_aff = da * db if not (da.is_constant() and db.is_constant()) else one
    f_r = (A * RatFunc(h_aff) * RatFunc(h_aff)).normalized(force=True)
    g_r = (B * RatFunc(h_aff) * RatFunc(h_aff) * RatFunc(h_aff)).normalized(force=True)
    if not (f_r.is_poly() and g_r.is_poly()):
        h_aff = da * db
        f_r = (A * RatFunc(h_aff ** 2)).normalized(force=True)
        g_r = (B * RatFunc(h_aff ** 3)).normalized(force=True)
    f_aff = f_r.as_poly()
    g_aff = g_r.as_poly()
    a = 0
    dh = h_aff.degree
    while 2 * (dh + a + k) < f_aff.degree or 3 * (dh + a + k) < g_aff.degree:
        a += 1
    delta = dh + a
    f = f_aff.homogenize(2 * (delta + k))
    g = g_aff.homogenize(3 * (delta + k))
    h = h_aff.homogenize(delta)
    rel = QTRel((2, 3, 6), (one, one, -Fh), (g, f, h))
    if not rel.total().is_zero():
        raise ArithmeticError("denominator clearing failed to produce a relation")
    return rel


def kummer_pullback(C: TriPoly, m: int, lines=None) -> TriPoly:
    """Preimage of C under the degree-m Kummer cover branched along the lines.

    C is rewritten in the coordinate system in which the three independent
    lines become the coordinate lines, then (x^m, y^m, z^m) is substituted;
    the degree multiplies by m.
    """
    if m < 1:
        raise ValueError("cover degree must be >= 1")
    spec = C.spec
    xs = [TriPoly.variable(spec, v) for v in "xyz"]
    if lines is None:
        coords = C
    else:
        if len(lines) != 3:
            raise DegenerateLines("exactly three lines are required")
        rows = []
        for ln in lines:
            if ln.degree != 1 or not ln.is_homogeneous():
                raise DegenerateLines("branch loci must be linear forms")
            rows.append([
                ln.terms.get((1, 0, 0), spec.zero()),
                ln.terms.get((0, 1, 0), spec.zero()),
                ln.terms.get((0, 0, 1), spec.zero()),
            ])
        inv = _invert3(rows, spec)
        if inv is None:
            raise DegenerateLines("the three lines are linearly dependent")
        subs = []
        for i in range(3):
            acc = TriPoly.zero(spec)
            for j in range(3):
                if not inv[i][j].is_zero():
                    acc = acc + xs[j].scaled(inv[i][j])
            subs.append(acc)
        coords = C.substitute(*subs)
    if m == 1:
        return coords
    return coords.substitute(xs[0] ** m, xs[1] ** m, xs[2] ** m)


def _invert3(rows, spec):
    n = 3
    aug = [[rows[i][j] for j in range(n)] + [spec.one() if i == j else spec.zero() for j in range(n)]
           for i in range(n)]
    for c in range(n):
        piv = None
        for r in range(c, n):
            if not aug[r][c].is_zero():
                piv = r
                break
        if piv is None:
            return None
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = aug[c][c].inverse()
        aug[c] = [v * inv for v in aug[c]]
        for r in range(n):
            if r != c and not aug[r][c].is_zero():
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    return [[aug[i][n + j] for j in range(n)] for i in range(n)]
