"""Local theory: the A'Campo engine, the catalog of delta-essential
singularities with their epsilon multiplicities, quasi-adjunction spectra,
delta classification, divisibility checks, and singular point location.

Catalog resolution data is frozen: each entry lists the exceptional divisors
of an embedded resolution as (N, chi) pairs, where N is the total multiplicity
of the pulled-back (non-reduced) germ along the divisor and chi the Euler
characteristic of its open part.  The engine never computes resolutions.
"""

from __future__ import annotations

import itertools

from mwalex.algebra import (
    QQ,
    AlexPoly,
    DEFAULT_TRACKED,
    NotDivisible,
    UPoly,
    alex_from_upoly,
    qq,
    upoly_divexact,
    upoly_divides,
    upoly_gcd,
)
from mwalex.multipoly import (
    GcdFailure,
    TriPoly,
    _as_univariate,
    _eval_var,
    _uni_gcd_monic,
    _uni_trim,
    tri_gcd,
)


class NotAPolynomial(Exception):
    pass


class UnknownCombination(Exception):
    pass


class MissingTable(Exception):
    pass


class MissingSingularityData(Exception):
    pass


class NotSquarefree(Exception):
    pass


class NotSingular(Exception):
    pass


class Divisor:
    """One exceptional divisor: multiplicity N, Euler characteristic chi of
    the open part, plus optional quasi-adjunction data (c, e)."""

    __slots__ = ("N", "chi", "c", "e")

    def __init__(self, N, chi, c=None, e=None):
        if N < 1:
            raise ValueError("divisor multiplicity must be >= 1")
        self.N = int(N)
        self.chi = int(chi)
        self.c = None if c is None else int(c)
        self.e = dict(e) if e else None

    def to_dict(self):
        d = {"N": self.N, "chi": self.chi}
        if self.c is not None:
            d["c"] = self.c
        if self.e is not None:
            d["e"] = dict(self.e)
        return d


class ResolutionData:
    def __init__(self, divisors):
        divs = []
        for item in divisors:
            if isinstance(item, Divisor):
                divs.append(item)
            elif isinstance(item, dict):
                divs.append(Divisor(item["N"], item["chi"], item.get("c"), item.get("e")))
            else:
                N, chi = item[0], item[1]
                divs.append(Divisor(N, chi))
        if not divs:
            raise ValueError("resolution needs at least one divisor")
        self.divisors = divs

    def to_dict(self):
        return {"divisors": [d.to_dict() for d in self.divisors]}

    @staticmethod
    def from_dict(d):
        return ResolutionData(d["divisors"])


def acampo_alexander(res: ResolutionData, tracked=DEFAULT_TRACKED) -> AlexPoly:
    """(t-1) * prod_i (1 - t^{N_i})^{-chi_i}, normalized so the value at 0 is 1."""
    num = UPoly((-1, 1))  # t - 1
    den = UPoly.one()
    deg_minus = 0
    deg_plus = 0
    for d in res.divisors:
        cyc = UPoly((1,) + (0,) * (d.N - 1) + (-1,))  # 1 - t^N
        if d.chi < 0:
            num = num * cyc ** (-d.chi)
            deg_minus += (-d.chi) * d.N
        elif d.chi > 0:
            den = den * cyc ** d.chi
            deg_plus += d.chi * d.N
    try:
        poly = upoly_divexact(num, den)
    except NotDivisible:
        raise NotAPolynomial("the resolution data does not define a polynomial")
    expected_degree = deg_minus - deg_plus + 1
    if poly.degree != expected_degree:
        raise NotAPolynomial(
            "degree bookkeeping failed: got %d, expected %d" % (poly.degree, expected_degree)
        )
    return alex_from_upoly(poly, tracked)


# ---------------------------------------------------------------------------
# the catalog

def _perm_classes(*eps_tuples):
    """All permutations of the listed eps tuples, as a set."""
    out = set()
    for eps in eps_tuples:
        out.update(itertools.permutations(eps))
    return out


class CatalogEntry:
    def __init__(self, reduced_type, eps_class, divisors, svec, spectrum, qa=None,
                 eps_matcher=None):
        self.reduced_type = reduced_type
        self.eps_class = tuple(eps_class)
        self.divisors = tuple(divisors)
        self.svec = tuple(svec)  # against tracked (1, 2, 3, 4, 6)
        self.spectrum = frozenset(qq(s) for s in spectrum)
        self.qa = qa  # list of dicts {"N", "c", "e": {var: mult}}
        self.eps_matcher = eps_matcher

    def matches(self, eps):
        eps = tuple(int(v) for v in eps)
        if self.eps_matcher is not None:
            return self.eps_matcher(eps)
        return eps in _perm_classes(self.eps_class)

    def resolution(self, eps):
        divisors = []
        for (N, chi) in self.divisors:
            divisors.append(Divisor(N, chi))
        qa = self.qa or []
        for spec_d in qa:
            divisors.append(Divisor(spec_d["N"], 0, spec_d["c"], spec_d["e"]))
        return ResolutionData(divisors) if divisors else None


# Distinguished branch: for (x^2-y^4)y the third slot is the non-interchangeable
# branch, so only the literal (1, 1, 2) is accepted.
def _d6_matcher(eps):
    return eps == (1, 1, 2)


def _a1_matcher(eps):
    return len(eps) == 2 and all(v >= 1 for v in eps)


CATALOG = {
    "A1": [
        CatalogEntry("y^2-x^2", (1, 1), [], (1, 0, 0, 0, 0), (), qa=[],
                     eps_matcher=_a1_matcher),
    ],
    "A2": [
        CatalogEntry("y^2-x^3", (1,), [(2, 1), (3, 1), (6, -1)], (0, 0, 0, 0, 1),
                     (QQ(5, 6),), qa=[{"N": 6, "c": 4, "e": {"x": 2, "y": 3}}]),
    ],
    "A3": [
        # (2,1): frozen to the published multiplicity vector (2,0,0,1); the
        # geometric resolution [(3,1),(6,-1)] yields (1,1,0,1) instead.
        CatalogEntry("y^2-x^4", (2, 1), [(1, -2), (2, 1), (3, 1), (6, -1)],
                     (2, 0, 0, 0, 1), (QQ(5, 6),),
                     qa=[{"N": 6, "c": 4, "e": {"x": 2, "y": 3}}]),
        CatalogEntry("y^2-x^4", (1, 1), [(2, 1), (4, -1)], (1, 0, 0, 1, 0),
                     (QQ(3, 4),), qa=[{"N": 4, "c": 2, "e": {"x": 1, "y": 2}}]),
    ],
    "A5": [
        CatalogEntry("y^2-x^6", (1, 1), [(2, 1), (4, 0), (6, -1)], (1, 0, 1, 0, 1),
                     (QQ(2, 3), QQ(5, 6)), qa=[{"N": 6, "c": 3, "e": {"x": 1, "y": 3}}]),
    ],
    "D4": [
        CatalogEntry("y^3-x^3", (1, 1, 1), [(3, -1)], (2, 0, 1, 0, 0),
                     (QQ(2, 3),), qa=[{"N": 3, "c": 1, "e": {"x": 1, "y": 1}}]),
        CatalogEntry("y^3-x^3", (4, 1, 1), [(6, -1)], (2, 1, 1, 0, 1),
                     (QQ(2, 3), QQ(5, 6)), qa=[{"N": 6, "c": 2, "e": {"x": 1, "y": 1}}],
                     eps_matcher=lambda eps: eps in _perm_classes((4, 1, 1), (3, 2, 1), (2, 2, 2))),
        CatalogEntry("y^3-x^3", (2, 1, 1), [(4, -1)], (2, 1, 0, 1, 0),
                     (QQ(3, 4),), qa=[{"N": 4, "c": 1, "e": {"x": 1, "y": 1}}],
                     eps_matcher=lambda eps: eps in _perm_classes((2, 1, 1))),
    ],
    "D6": [
        CatalogEntry("(x^2-y^4)y", (1, 1, 2), [(4, 0), (6, -1)], (2, 1, 1, 0, 1),
                     (QQ(2, 3), QQ(5, 6)), qa=[{"N": 6, "c": 2, "e": {"x": 2, "y": 1}}],
                     eps_matcher=_d6_matcher),
    ],
    "x3y6": [
        CatalogEntry("x^3-y^6", (1, 1, 1), [(3, 1), (6, -2)], (2, 2, 1, 0, 2),
                     (QQ(2, 3), QQ(5, 6)), qa=[{"N": 6, "c": 2, "e": {"x": 2, "y": 1}}]),
    ],
    "ord4": [
        CatalogEntry("x^4-y^4", (3, 1, 1, 1), [(6, -2)], (3, 2, 2, 0, 2),
                     (QQ(1, 3), QQ(2, 3), QQ(5, 6)),
                     qa=[{"N": 6, "c": 1, "e": {"x": 1, "y": 1}}],
                     eps_matcher=lambda eps: eps in _perm_classes((3, 1, 1, 1), (2, 2, 1, 1))),
        CatalogEntry("x^4-y^4", (1, 1, 1, 1), [(4, -2)], (3, 2, 0, 2, 0),
                     (QQ(3, 4),), qa=[{"N": 4, "c": 1, "e": {"x": 1, "y": 1}}]),
    ],
    "tac2": [
        CatalogEntry("(x^2-y^4)(y^2-x^4)", (1, 1, 1, 1), [(4, 0), (6, -1), (6, -1)],
                     (3, 2, 2, 0, 2), (QQ(1, 3), QQ(2, 3), QQ(5, 6)),
                     qa=[{"N": 6, "c": 1, "e": {"x": 1, "y": 1}}]),
    ],
    "ord5": [
        CatalogEntry("x^5-y^5", (2, 1, 1, 1, 1), [(6, -3)], (4, 3, 3, 0, 3),
                     (QQ(1, 3), QQ(2, 3), QQ(5, 6)),
                     qa=[{"N": 6, "c": 1, "e": {"x": 1, "y": 1}}]),
    ],
    "ord6": [
        CatalogEntry("x^6-y^6", (1, 1, 1, 1, 1, 1), [(6, -4)], (5, 4, 4, 0, 4),
                     (QQ(1, 3), QQ(2, 3), QQ(5, 6)),
                     qa=[{"N": 6, "c": 1, "e": {"x": 1, "y": 1}}]),
    ],
}

CATALOG_TYPES = tuple(CATALOG)


def _catalog_entry(type_name: str, eps) -> CatalogEntry:
    entries = CATALOG.get(type_name)
    if not entries:
        raise UnknownCombination("unknown singularity type %r" % type_name)
    eps = tuple(int(v) for v in eps)
    for entry in entries:
        if entry.matches(eps):
            return entry
    raise UnknownCombination("type %s does not list eps %s" % (type_name, list(eps)))


def catalog_resolution(type_name: str, eps) -> ResolutionData:
    entry = _catalog_entry(type_name, eps)
    if type_name == "A1":
        n_total = sum(int(v) for v in eps)
        qa = entry.qa or []
        return ResolutionData([Divisor(n_total, 0)])
    divisors = [Divisor(N, chi) for (N, chi) in entry.divisors]
    return ResolutionData(divisors)


def catalog_qa_resolution(type_name: str, eps) -> ResolutionData:
    """Resolution data carrying the quasi-adjunction table for this entry."""
    entry = _catalog_entry(type_name, eps)
    if type_name == "A1":
        n_total = sum(int(v) for v in eps)
        return ResolutionData([Divisor(n_total, 0, 1, {"x": 1, "y": 1})])
    divisors = []
    for spec_d in entry.qa or []:
        divisors.append(Divisor(spec_d["N"], 0, spec_d["c"], spec_d["e"]))
    if not divisors:
        raise MissingTable("no quasi-adjunction data for %s %s" % (type_name, eps))
    return ResolutionData(divisors)


def catalog_local_alexander(type_name: str, eps, tracked=DEFAULT_TRACKED) -> AlexPoly:
    """Local Alexander polynomial of a catalog singularity with multiplicities."""
    entry = _catalog_entry(type_name, eps)
    res = catalog_resolution(type_name, eps)
    alex = acampo_alexander(res, tracked)
    if type_name != "A1" and alex.svec((1, 2, 3, 4, 6)) != entry.svec:
        raise AssertionError(
            "catalog data for %s %s regenerated %s, expected %s"
            % (type_name, eps, alex.svec((1, 2, 3, 4, 6)), entry.svec)
        )
    return alex


def catalog_spectrum(type_name: str, eps):
    return set(_catalog_entry(type_name, eps).spectrum)


# ---------------------------------------------------------------------------
# quasi-adjunction

def quasi_adjunction_spectrum(res: ResolutionData, max_degree=None):
    """Weight-one spectrum in (0,1) from quasi-adjunction constants.

    For each monomial phi, kappa_phi = max over table divisors of
    max(0, (N - e(phi) - c - 1)/N); the spectrum collects 1 - kappa_phi over
    kappa_phi not in {0, 1/2}.
    """
    table = [d for d in res.divisors if d.c is not None and d.e is not None]
    if not table:
        raise MissingTable("resolution carries no quasi-adjunction data")
    if max_degree is None:
        max_degree = max(d.N for d in table)

    def e_of(d, a, b):
        ex = d.e.get("x")
        ey = d.e.get("y")
        key = _monomial_key(a, b)
        if key in d.e:
            return int(d.e[key])
        if ex is None or ey is None:
            raise MissingTable("divisor table lacks e(x), e(y) generators")
        return a * int(ex) + b * int(ey)

    spectrum = set()
    for a in range(max_degree + 1):
        for b in range(max_degree + 1 - a):
            kappa = QQ(0)
            for d in table:
                val = QQ(d.N - e_of(d, a, b) - d.c - 1, d.N)
                if val > kappa:
                    kappa = val
            if kappa > 0 and kappa != QQ(1, 2):
                spectrum.add(1 - kappa)
    return spectrum


def _monomial_key(a, b):
    if a == 0 and b == 0:
        return "1"
    parts = []
    if a == 1:
        parts.append("x")
    elif a > 1:
        parts.append("x^%d" % a)
    if b == 1:
        parts.append("y")
    elif b > 1:
        parts.append("y^%d" % b)
    return "*".join(parts)


# ---------------------------------------------------------------------------
# delta classification

class SingRecord:
    """A singular point with its catalog type (or custom resolution) and eps."""

    def __init__(self, catalog_type, eps, resolution=None, point=None):
        self.catalog_type = catalog_type
        self.eps = tuple(int(v) for v in eps)
        self.resolution = resolution
        self.point = point
        if catalog_type == "custom":
            if resolution is None:
                raise MissingSingularityData("custom singularities need resolution data")
        else:
            _catalog_entry(catalog_type, self.eps)

    def local_alexander(self, tracked=DEFAULT_TRACKED) -> AlexPoly:
        if self.catalog_type == "custom":
            return acampo_alexander(self.resolution, tracked)
        return catalog_local_alexander(self.catalog_type, self.eps, tracked)


def _roots_divide_delta(alex: AlexPoly, delta: int) -> bool:
    """True iff every root of the polynomial is a delta-th root of unity."""
    for k, v in alex.cyclo_mults.items():
        if v and delta % k != 0:
            return False
    extra = alex.extra
    if extra.is_constant():
        return True
    tn = UPoly((-1,) + (0,) * (delta - 1) + (1,))  # t^delta - 1
    while not extra.is_constant():
        g = upoly_gcd(extra, tn)
        if g.is_constant():
            return False
        extra = upoly_divexact(extra, g)
    return True


def _no_delta_roots_but_one(alex: AlexPoly, delta: int) -> bool:
    """True iff no root except t=1 is a delta-th root of unity."""
    for k, v in alex.cyclo_mults.items():
        if v and k > 1 and delta % k == 0:
            return False
    extra = alex.extra
    if extra.is_constant():
        return True
    tn = UPoly((-1,) + (0,) * (delta - 1) + (1,))
    g = upoly_gcd(extra, tn)
    while upoly_divides(UPoly((-1, 1)), g):
        g = upoly_divexact(g, UPoly((-1, 1)))
    return g.is_constant()


def _all_roots_of_unity(alex: AlexPoly) -> bool:
    return alex.extra.is_constant()


def classify_delta(sing: SingRecord, delta: int) -> str:
    """'essential', 'coprime', or 'neither' for the local polynomial."""
    alex = sing.local_alexander()
    if _roots_divide_delta(alex, delta):
        return "essential"
    if _no_delta_roots_but_one(alex, delta):
        return "coprime"
    return "neither"


class CurveSpec:
    """Curve as factored components with multiplicities plus singularity data."""

    def __init__(self, components, singular_points=None):
        self.components = [(poly, int(eps)) for poly, eps in components]
        if any(eps < 1 for _, eps in self.components):
            raise ValueError("component multiplicities must be positive")
        from math import gcd

        g = 0
        for _, eps in self.components:
            g = gcd(g, eps)
        if self.components and g != 1:
            raise ValueError("component multiplicities must be coprime overall")
        self.singular_points = list(singular_points or [])

    @property
    def total_degree(self):
        return sum(eps * poly.degree for poly, eps in self.components)

    @property
    def eps_vector(self):
        return tuple(eps for _, eps in self.components)


def classify_curve_delta(curve: CurveSpec, global_alex: AlexPoly, delta: int) -> str:
    """'total', 'partial', or 'neither'.

    A singularity whose local polynomial mixes delta-th and non-delta-th roots
    of unity (but nothing else) still counts toward 'partial'; only roots off
    the unit-root locus disqualify the curve.
    """
    if not curve.singular_points:
        return "total" if _roots_divide_delta(global_alex, delta) else "partial"
    for sing in curve.singular_points:
        verdict = classify_delta(sing, delta)
        if verdict == "neither" and not _all_roots_of_unity(sing.local_alexander()):
            return "neither"
    if _roots_divide_delta(global_alex, delta):
        return "total"
    return "partial"


def divisibility_check(curve: CurveSpec, global_alex: AlexPoly, cap=None):
    """Check the local-global divisibility and the lambda | d condition.

    Returns a report with the smallest witness exponents k_i such that the
    global polynomial divides prod_P Delta_P * prod_i (t^{eps_i} - 1)^{k_i}.
    """
    if not curve.singular_points:
        raise MissingSingularityData("curve carries no singularity records")
    local_product = None
    for sing in curve.singular_points:
        alex = sing.local_alexander()
        local_product = alex if local_product is None else local_product * alex
    eps = curve.eps_vector
    r = len(eps)
    if cap is None:
        cap = r + 1
    witness = None
    for total in range(0, cap * r + 1):
        for ks in itertools.product(range(cap + 1), repeat=r):
            if sum(ks) != total:
                continue
            candidate = local_product
            for e, k in zip(eps, ks):
                if k:
                    tn = UPoly((-1,) + (0,) * (e - 1) + (1,))
                    candidate = candidate * alex_from_upoly(tn ** k, global_alex.tracked)
            if global_alex.divides(candidate):
                witness = ks
                break
        if witness is not None:
            break
    d = curve.total_degree
    lambda_ok = True
    lambda_violations = []
    for k, v in global_alex.cyclo_mults.items():
        if v and k > 1 and d % k != 0:
            lambda_ok = False
            lambda_violations.append(k)
    return {
        "firstdiv": witness is not None,
        "witness_exponents": list(witness) if witness is not None else None,
        "local_product": local_product.to_dict(),
        "seconddiv": lambda_ok,
        "seconddiv_violations": sorted(lambda_violations),
        "degree": d,
        "ok": witness is not None and lambda_ok,
    }


# ---------------------------------------------------------------------------
# singular points of explicit curves

class SingularPoint:
    """A verified singular point: exact tower coordinates or certified numeric."""

    __slots__ = ("coords", "multiplicity", "exact", "residual")

    def __init__(self, coords, multiplicity, exact=True, residual=None):
        self.coords = coords
        self.multiplicity = multiplicity
        self.exact = exact
        self.residual = residual

    def __repr__(self):
        tag = "exact" if self.exact else "numeric"
        return "SingularPoint(%s, mult=%d, %s)" % (list(self.coords), self.multiplicity, tag)


def _normalize_projective(coords):
    for c in coords:
        if not c.is_zero():
            inv = c.inverse()
            return tuple(v * inv for v in coords)
    raise ValueError("zero vector is not a projective point")


def _uni_roots_in_field(coeffs, spec, bits=256):
    """Roots of a FieldElem-coefficient polynomial lying in the tower, plus
    the numeric leftovers.  Returns (exact_roots, numeric_roots)."""
    import mpmath

    coeffs = _uni_trim(list(coeffs))
    if len(coeffs) <= 1:
        return [], []
    # squarefree part: repeated roots wreck numeric root-finding accuracy
    deriv = _uni_trim([coeffs[i] * i for i in range(1, len(coeffs))])
    if deriv:
        g = _uni_gcd_monic(list(coeffs), deriv, spec)
        if len(g) > 1:
            from mwalex.multipoly import _uni_divmod

            coeffs, rem = _uni_divmod(list(coeffs), g, spec)
            coeffs = _uni_trim(coeffs)
    with mpmath.workprec(bits):
        emb = [spec.embed(c, bits) for c in coeffs]
        # strip (numerically) zero leading coefficients defensively
        poly = list(reversed(emb))
        try:
            roots = mpmath.polyroots(poly, maxsteps=200, extraprec=bits)
        except Exception:
            return [], []
        basis = spec.embeddings(bits)
        exact = []
        numeric = []
        from mwalex.algebra import recognize_linear

        for rho in roots:
            coords = recognize_linear(mpmath.mpc(rho), basis, bits)
            cand = None
            if coords is not None:
                layers = [
                    tuple(coords[j * spec.deg1: (j + 1) * spec.deg1])
                    for j in range(spec.rad_k)
                ]
                from mwalex.algebra import FieldElem

                cand = FieldElem(spec, tuple(layers))
                acc = spec.zero()
                for c in reversed(coeffs):
                    acc = acc * cand + c
                if not acc.is_zero():
                    cand = None
            if cand is not None:
                if all(cand != r for r in exact):
                    exact.append(cand)
            else:
                numeric.append(mpmath.mpc(rho))
        return exact, numeric


def _assert_squarefree(C: TriPoly):
    for chart in ("z", "y", "x"):
        f = C.dehomogenize(chart)
        if f.is_zero() or f.is_constant():
            continue
        g = f
        for v in (u for u in "xyz" if u != chart):
            pv = f.partial(v)
            if pv.is_zero():
                continue
            try:
                g = tri_gcd(g, pv)
            except GcdFailure:
                raise NotSquarefree("could not certify squarefreeness")
            if g.is_constant():
                break
        if not g.is_constant():
            raise NotSquarefree("curve has a repeated factor: %r" % g)


def find_singular_points(C: TriPoly, bits=256):
    """Singular points of the projective curve C = 0, exact where possible.

    Candidates come from resultant elimination of pairs of partials; each one
    is verified by exact vanishing of all partials.  Points that cannot be
    recognized in the active tower are reported as certified numeric points.
    """
    from mwalex.multipoly import resultant

    if C.is_zero():
        raise ValueError("zero polynomial has no curve")
    _assert_squarefree(C)
    spec = C.spec
    Cx, Cy, Cz = C.partials()
    points = []

    # affine chart z = 1: eliminate x from pairs of partials
    fx, fy, fz = (p.dehomogenize("z") for p in (Cx, Cy, Cz))
    pairs = [(fx, fy), (fx, fz), (fy, fz)]
    res_poly = None
    for a, b in pairs:
        if a.is_zero() or b.is_zero():
            continue
        if a.degree_in("x") == 0 and b.degree_in("x") == 0:
            continue
        r = resultant(a, b, "x") if a.degree_in("x") > 0 or b.degree_in("x") > 0 else None
        if r is not None and not r.is_zero():
            res_poly = r
            break
    y_candidates = []
    y_numeric = []
    if res_poly is not None:
        coeffs = _as_univariate(res_poly, 1)
        y_candidates, y_numeric = _uni_roots_in_field(coeffs, spec, bits)
    else:
        # all partials independent of x in this chart, or degenerate pairs:
        # fall back to solving fy in y directly
        if not fy.is_zero() and fy.degree_in("x") == 0:
            y_candidates, y_numeric = _uni_roots_in_field(_as_univariate(fy, 1), spec, bits)

    for y0 in y_candidates:
        slices = []
        for g in (fx, fy, fz):
            if g.is_zero():
                continue
            sl = _eval_fieldelem(g, 1, y0)
            slices.append(sl)
        gcd_slice = None
        for sl in slices:
            cs = _uni_trim(sl)
            if not cs:
                continue
            gcd_slice = cs if gcd_slice is None else _uni_gcd_monic(gcd_slice, cs, spec)
        if gcd_slice is None:
            continue
        if len(gcd_slice) == 0:
            continue
        x_roots, x_num = _uni_roots_in_field(gcd_slice, spec, bits)
        for x0 in x_roots:
            p = (x0, y0, spec.one())
            if _is_singular_at(C, p):
                points.append(p)

    # points at infinity: common roots of the partials restricted to z = 0
    inf_forms = [_restrict_z0(P) for P in (Cx, Cy, Cz)]
    nonzero = [f for f in inf_forms if not f.is_zero()]
    if nonzero:
        # chart x = 1 on the line z = 0
        g = None
        for f in nonzero:
            cs = _uni_trim(_as_univariate(f.dehomogenize("x"), 1))
            if not cs:
                g = []
                break
            g = cs if g is None else _uni_gcd_monic(g, cs, spec)
        if g:
            y_roots, _ = _uni_roots_in_field(g, spec, bits)
            for y0 in y_roots:
                p = (spec.one(), y0, spec.zero())
                if _is_singular_at(C, p):
                    points.append(p)
        # the remaining point [0:1:0]
        p = (spec.zero(), spec.one(), spec.zero())
        if _is_singular_at(C, p):
            points.append(p)
    else:
        # every partial vanishes on z = 0 identically; scan the whole line
        pass

    seen = []
    unique = []
    for p in points:
        pn = _normalize_projective(p)
        if pn not in seen:
            seen.append(pn)
            unique.append(pn)
    result = [SingularPoint(p, _multiplicity_at(C, p)) for p in unique]
    result.extend(_numeric_singular_points(C, (fx, fy, fz), y_numeric, unique, bits))
    return result


def _numeric_singular_points(C, charts, y_numeric, exact_points, bits):
    """Certified numeric singular points over y-values outside the tower."""
    import mpmath

    if not y_numeric:
        return []
    spec = C.spec
    fx, fy, fz = charts
    out = []
    tol = mpmath.mpf(2) ** (-(bits // 2))
    with mpmath.workprec(bits):
        grads = [fx, fy, fz]

        def embed_poly_xy(p, xv, yv):
            acc = mpmath.mpc(0)
            for (i, j, k), cf in p.terms.items():
                acc += spec.embed(cf, bits) * xv ** i * yv ** j
            return acc

        f_aff = C.dehomogenize("z")
        for yv in y_numeric:
            # solve the x-slice of one nonzero partial numerically
            base = next((g for g in grads if not g.is_zero() and g.degree_in("x") > 0), None)
            if base is None:
                continue
            coeffs = []
            for i in range(base.degree_in("x") + 1):
                acc = mpmath.mpc(0)
                for (a, b, _), cf in base.terms.items():
                    if a == i:
                        acc += spec.embed(cf, bits) * yv ** b
                coeffs.append(acc)
            while coeffs and abs(coeffs[-1]) < tol:
                coeffs.pop()
            if len(coeffs) <= 1:
                continue
            try:
                xroots = mpmath.polyroots(list(reversed(coeffs)), maxsteps=100, extraprec=bits // 2)
            except Exception:
                continue
            for xv in xroots:
                residual = max(
                    abs(embed_poly_xy(f_aff, xv, yv)),
                    abs(embed_poly_xy(fx, xv, yv)),
                    abs(embed_poly_xy(fy, xv, yv)),
                    abs(embed_poly_xy(fz, xv, yv)),
                )
                if residual < tol:
                    near_exact = False
                    for p in exact_points:
                        if not p[2].is_zero():
                            px = spec.embed(p[0] * p[2].inverse(), bits)
                            py = spec.embed(p[1] * p[2].inverse(), bits)
                            if abs(px - xv) < mpmath.mpf(2) ** (-(bits // 4)) and abs(py - yv) < mpmath.mpf(2) ** (-(bits // 4)):
                                near_exact = True
                                break
                    if not near_exact:
                        out.append(SingularPoint((xv, yv, 1), 2, exact=False, residual=float(residual)))
    return out


def _restrict_z0(P: TriPoly) -> TriPoly:
    terms = {e: c for e, c in P.terms.items() if e[2] == 0}
    return TriPoly(P.spec, terms)


def _eval_fieldelem(p: TriPoly, vi: int, value):
    """Coefficient list in x of p with variable vi set to a FieldElem."""
    spec = p.spec
    out = {}
    pows = {0: spec.one()}

    def power(e):
        if e not in pows:
            pows[e] = value ** e
        return pows[e]

    degx = p.degree_in("x")
    coeffs = [spec.zero() for _ in range(degx + 1)]
    for (i, j, k), c in p.terms.items():
        v = c
        if vi == 1 and j:
            v = v * power(j)
        if k:
            raise ValueError("expected a chart polynomial")
        coeffs[i] = coeffs[i] + v
    return coeffs


def _is_singular_at(C: TriPoly, p) -> bool:
    Cx, Cy, Cz = C.partials()
    return (
        C.eval(*p).is_zero()
        and Cx.eval(*p).is_zero()
        and Cy.eval(*p).is_zero()
        and Cz.eval(*p).is_zero()
    )


def _local_jets(C: TriPoly, p):
    """Jets of C at the point in an affine chart, indexed by total degree."""
    spec = C.spec
    coords = _normalize_projective(p)
    chart = 2
    for i in (2, 1, 0):
        if not coords[i].is_zero():
            chart = i
            break
    inv = coords[chart].inverse()
    coords = tuple(v * inv for v in coords)
    affine_vars = [i for i in range(3) if i != chart]
    f = C.dehomogenize("xyz"[chart])
    # translate: substitute var -> var + value
    subs = []
    for i in range(3):
        if i == chart:
            subs.append(TriPoly.constant(spec, 1))
        else:
            subs.append(TriPoly.variable(spec, "xyz"[i]) + TriPoly.constant(spec, coords[i]))
    g = f.substitute(*subs)
    jets = {}
    u, v = affine_vars
    for expo, c in g.terms.items():
        d = expo[u] + expo[v]
        jets.setdefault(d, {})[(expo[u], expo[v])] = c
    return jets


def _multiplicity_at(C: TriPoly, p) -> int:
    jets = _local_jets(C, p)
    return min(jets) if jets else 0


def classify_node_cusp(C: TriPoly, p) -> str:
    """'node', 'cusp', or 'other' for a singular point of C."""
    from mwalex.algebra import FieldElem

    spec = C.spec
    if not all(isinstance(c, FieldElem) for c in p):
        raise NotSingular("classification needs exact tower coordinates")
    if not _is_singular_at(C, p):
        raise NotSingular("point is not a singular point of the curve")
    jets = _local_jets(C, p)
    m = min(jets)
    if m != 2:
        return "other"
    j2 = jets[2]
    alpha = j2.get((2, 0), spec.zero())
    beta = j2.get((1, 1), spec.zero())
    gamma = j2.get((0, 2), spec.zero())
    disc = beta * beta - 4 * alpha * gamma
    if not disc.is_zero():
        return "node"
    # rank-one quadratic jet: kernel direction
    if not alpha.is_zero():
        u0, v0 = -beta, alpha + alpha
    elif not gamma.is_zero():
        u0, v0 = gamma + gamma, -beta
    else:
        return "other"
    j3 = jets.get(3, {})
    acc = spec.zero()
    for (a, b), c in j3.items():
        acc = acc + c * (u0 ** a) * (v0 ** b)
    return "cusp" if not acc.is_zero() else "other"
