"""Trivariate polynomials over a field tower and bivariate rational functions.

TriPoly stores a sparse map from exponent triples (i, j, k) for x^i y^j z^k to
nonzero FieldElem coefficients.  RatFunc is a lazily reduced quotient of two
TriPoly in x, y only (the affine chart z = 1); equality is always decided by
cross-multiplication, never by representation.
"""

from __future__ import annotations

from mwalex.algebra import (
    ONE,
    QQ,
    ZERO,
    DivisionByZero,
    FieldElem,
    FieldSpec,
    IncompatibleField,
    NotDivisible,
    qq,
)

VARS = ("x", "y", "z")
VAR_INDEX = {"x": 0, "y": 1, "z": 2}


class GcdFailure(ArithmeticError):
    pass


class ReductionPolicy:
    """When RatFunc normalization runs a full GCD reduction.

    Content stripping is always performed; the expensive multivariate GCD only
    runs when a numerator or denominator exceeds ``threshold`` terms (or when
    ``always`` is set).
    """

    def __init__(self, threshold=2000, always=False):
        self.threshold = threshold
        self.always = always


DEFAULT_POLICY = ReductionPolicy()


def _grlex_key(expo):
    return (expo[0] + expo[1] + expo[2], expo)


class TriPoly:
    __slots__ = ("spec", "terms")

    def __init__(self, spec: FieldSpec, terms=None):
        self.spec = spec
        clean = {}
        for expo, coeff in (terms or {}).items():
            if not isinstance(coeff, FieldElem):
                coeff = spec.scalar(coeff)
            if not coeff.is_zero():
                clean[tuple(int(e) for e in expo)] = coeff
        self.terms = clean

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(spec):
        return TriPoly(spec, {})

    @staticmethod
    def constant(spec, c):
        return TriPoly(spec, {(0, 0, 0): c})

    @staticmethod
    def variable(spec, name):
        expo = [0, 0, 0]
        expo[VAR_INDEX[name]] = 1
        return TriPoly(spec, {tuple(expo): spec.one()})

    @staticmethod
    def monomial(spec, expo, coeff=1):
        return TriPoly(spec, {tuple(expo): coeff})

    # -- structure ------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(e == (0, 0, 0) for e in self.terms)

    def constant_value(self):
        if self.is_zero():
            return self.spec.zero()
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms[(0, 0, 0)]

    @property
    def degree(self):
        if not self.terms:
            return -1
        return max(i + j + k for (i, j, k) in self.terms)

    def degree_in(self, var):
        vi = VAR_INDEX[var]
        if not self.terms:
            return -1
        return max(e[vi] for e in self.terms)

    def is_homogeneous(self):
        if not self.terms:
            return True
        degs = {i + j + k for (i, j, k) in self.terms}
        return len(degs) == 1

    def num_terms(self):
        return len(self.terms)

    def leading(self):
        """(exponent, coefficient) of the grlex-largest term."""
        expo = max(self.terms, key=_grlex_key)
        return expo, self.terms[expo]

    def __eq__(self, other):
        if isinstance(other, TriPoly):
            return self.spec == other.spec and self.terms == other.terms
        if isinstance(other, (int, type(ONE))):
            return self == TriPoly.constant(self.spec, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, tuple(sorted(self.terms.items(), key=lambda t: t[0]))))

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TriPoly):
            if other.spec != self.spec:
                raise IncompatibleField("polynomials over different field towers")
            return other
        if isinstance(other, FieldElem):
            return TriPoly.constant(self.spec, other)
        return TriPoly.constant(self.spec, qq(other))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for expo, c in other.terms.items():
            if expo in out:
                s = out[expo] + c
                if s.is_zero():
                    del out[expo]
                else:
                    out[expo] = s
            else:
                out[expo] = c
        p = TriPoly.__new__(TriPoly)
        p.spec = self.spec
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = TriPoly.__new__(TriPoly)
        p.spec = self.spec
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, type(ONE), FieldElem)):
            return self.scaled(other)
        other = self._coerce(other)
        out = {}
        for (i1, j1, k1), c1 in self.terms.items():
            for (i2, j2, k2), c2 in other.terms.items():
                expo = (i1 + i2, j1 + j2, k1 + k2)
                prod = c1 * c2
                if expo in out:
                    s = out[expo] + prod
                    if s.is_zero():
                        del out[expo]
                    else:
                        out[expo] = s
                elif not prod.is_zero():
                    out[expo] = prod
        p = TriPoly.__new__(TriPoly)
        p.spec = self.spec
        p.terms = out
        return p

    __rmul__ = __mul__

    def scaled(self, c):
        if not isinstance(c, FieldElem):
            c = self.spec.scalar(c)
        if c.is_zero():
            return TriPoly.zero(self.spec)
        p = TriPoly.__new__(TriPoly)
        p.spec = self.spec
        p.terms = {e: v * c for e, v in self.terms.items()}
        return p

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = TriPoly.constant(self.spec, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- calculus and substitution ---------------------------------------------

    def partial(self, var):
        vi = VAR_INDEX[var]
        out = {}
        for expo, c in self.terms.items():
            e = expo[vi]
            if e == 0:
                continue
            ne = list(expo)
            ne[vi] = e - 1
            out[tuple(ne)] = c * e
        return TriPoly(self.spec, out)

    def partials(self):
        return self.partial("x"), self.partial("y"), self.partial("z")

    def substitute(self, gx, gy, gz):
        """f(gx, gy, gz), exact; the g's are TriPoly over the same spec."""
        gx, gy, gz = self._coerce(gx), self._coerce(gy), self._coerce(gz)
        pow_cache = {}

        def power(base_id, base, e):
            key = (base_id, e)
            if key not in pow_cache:
                pow_cache[key] = base ** e
            return pow_cache[key]

        acc = TriPoly.zero(self.spec)
        for (i, j, k), c in self.terms.items():
            term = TriPoly.constant(self.spec, c)
            if i:
                term = term * power(0, gx, i)
            if j:
                term = term * power(1, gy, j)
            if k:
                term = term * power(2, gz, k)
            acc = acc + term
        return acc

    def eval(self, px, py, pz):
        """Value at a projective/affine point of FieldElem coordinates."""
        pow_cache = {}

        def power(idx, base, e):
            key = (idx, e)
            if key not in pow_cache:
                pow_cache[key] = base ** e
            return pow_cache[key]

        acc = self.spec.zero()
        for (i, j, k), c in self.terms.items():
            v = c
            if i:
                v = v * power(0, px, i)
            if j:
                v = v * power(1, py, j)
            if k:
                v = v * power(2, pz, k)
            acc = acc + v
        return acc

    def dehomogenize(self, var="z"):
        """Set one variable to 1."""
        vi = VAR_INDEX[var]
        out = {}
        for expo, c in self.terms.items():
            ne = list(expo)
            ne[vi] = 0
            ne = tuple(ne)
            if ne in out:
                s = out[ne] + c
                if s.is_zero():
                    del out[ne]
                    continue
                out[ne] = s
            else:
                out[ne] = c
        return TriPoly(self.spec, out)

    def homogenize(self, target_degree=None, var="z"):
        vi = VAR_INDEX[var]
        if any(e[vi] for e in self.terms):
            raise ValueError("polynomial already involves %s" % var)
        d = self.degree if target_degree is None else target_degree
        out = {}
        for expo, c in self.terms.items():
            total = expo[0] + expo[1] + expo[2]
            if total > d:
                raise ValueError("degree exceeds homogenization target")
            ne = list(expo)
            ne[vi] = d - total
            out[tuple(ne)] = c
        return TriPoly(self.spec, out)

    # -- content and normal forms ----------------------------------------------

    def monomial_content(self):
        if not self.terms:
            return (0, 0, 0)
        mins = [None, None, None]
        for expo in self.terms:
            for t in range(3):
                mins[t] = expo[t] if mins[t] is None else min(mins[t], expo[t])
        return tuple(mins)

    def shift_down(self, mono):
        if mono == (0, 0, 0):
            return self
        out = {}
        for expo, c in self.terms.items():
            out[(expo[0] - mono[0], expo[1] - mono[1], expo[2] - mono[2])] = c
        return TriPoly(self.spec, out)

    def rational_content(self):
        """Positive rational c such that self/c has coprime integer coordinates."""
        nums = []
        dens = []
        for coeff in self.terms.values():
            for layer in coeff.coords:
                for r in layer:
                    if r != 0:
                        nums.append(abs(int(r.numerator)))
                        dens.append(int(r.denominator))
        if not nums:
            return ONE
        from math import gcd, lcm

        g = 0
        for v in nums:
            g = gcd(g, v)
        l = 1
        for v in dens:
            l = lcm(l, v)
        return QQ(g, l)

    def primitive(self):
        c = self.rational_content()
        if c == 1 or self.is_zero():
            return self
        return self.scaled(QQ(c.denominator, c.numerator))

    def sign_normalized(self):
        """Scale by -1 when the grlex-leading coefficient starts negative."""
        if self.is_zero():
            return self
        _, lead = self.leading()
        for layer in lead.coords:
            for r in layer:
                if r != 0:
                    return self if r > 0 else self.scaled(-1)
        return self

    def __repr__(self):
        return "TriPoly(%s)" % format_tripoly(self)


def format_tripoly(p: TriPoly) -> str:
    """Canonical string in the expression grammar, largest monomial first."""
    from mwalex.algebra import format_field_elem

    if p.is_zero():
        return "0"
    parts = []
    for expo in sorted(p.terms, key=_grlex_key, reverse=True):
        coeff = p.terms[expo]
        factors = []
        for name, e in zip(VARS, expo):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append("%s^%d" % (name, e))
        cs = format_field_elem(coeff)
        composite = ("+" in cs[1:]) or ("-" in cs[1:]) or ("*" in cs) or ("/" in cs and not cs.startswith("("))
        if not factors:
            mono = "(%s)" % cs if composite else cs
        elif cs == "1":
            mono = "*".join(factors)
        elif cs == "-1":
            mono = "-" + "*".join(factors)
        else:
            mono = "*".join((("(%s)" % cs) if composite else cs,) + tuple(factors))
        if parts and not mono.startswith("-"):
            parts.append("+" + mono)
        else:
            parts.append(mono)
    return "".join(parts)


# ---------------------------------------------------------------------------
# exact division and gcd

def tri_divexact(f: TriPoly, g: TriPoly) -> TriPoly:
    """Exact quotient f/g using grlex leading-term reduction."""
    if g.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    if f.is_zero():
        return TriPoly.zero(f.spec)
    if f.spec != g.spec:
        raise IncompatibleField("polynomials over different field towers")
    g_expo, g_coeff = g.leading()
    g_inv = g_coeff.inverse()
    quotient = {}
    rem = f
    while not rem.is_zero():
        r_expo, r_coeff = rem.leading()
        diff = tuple(r_expo[t] - g_expo[t] for t in range(3))
        if any(d < 0 for d in diff):
            raise NotDivisible("leading term not divisible")
        q_coeff = r_coeff * g_inv
        quotient[diff] = q_coeff
        rem = rem - TriPoly.monomial(f.spec, diff, q_coeff) * g
    return TriPoly(f.spec, quotient)


def tri_divides(g: TriPoly, f: TriPoly) -> bool:
    try:
        tri_divexact(f, g)
        return True
    except NotDivisible:
        return False


def active_vars(*polys):
    out = []
    for vi in range(3):
        if any(any(e[vi] for e in p.terms) for p in polys):
            out.append(vi)
    return out


def _as_univariate(p: TriPoly, vi: int):
    """Coefficient list (FieldElem) of a TriPoly using only variable vi."""
    d = max((e[vi] for e in p.terms), default=-1)
    coeffs = [p.spec.zero() for _ in range(d + 1)]
    for expo, c in p.terms.items():
        coeffs[expo[vi]] = coeffs[expo[vi]] + c
    return coeffs


def _from_univariate(spec, coeffs, vi: int):
    terms = {}
    for e, c in enumerate(coeffs):
        if not c.is_zero():
            expo = [0, 0, 0]
            expo[vi] = e
            terms[tuple(expo)] = c
    return TriPoly(spec, terms)


def _uni_trim(coeffs):
    i = len(coeffs)
    while i > 0 and coeffs[i - 1].is_zero():
        i -= 1
    return coeffs[:i]


def _uni_divmod(u, v, spec):
    u = list(_uni_trim(u))
    v = _uni_trim(v)
    if not v:
        raise DivisionByZero("univariate division by zero")
    dv = len(v) - 1
    lead_inv = v[-1].inverse()
    q = [spec.zero()] * max(0, len(u) - dv)
    while len(_uni_trim(u)) - 1 >= dv:
        u = list(_uni_trim(u))
        du = len(u) - 1
        c = u[-1] * lead_inv
        q[du - dv] = c
        for i in range(dv + 1):
            u[du - dv + i] = u[du - dv + i] - c * v[i]
    return q, _uni_trim(u)


def _uni_gcd_monic(u, v, spec):
    u, v = _uni_trim(list(u)), _uni_trim(list(v))
    while v:
        u, v = v, _uni_divmod(u, v, spec)[1]
    if u:
        inv = u[-1].inverse()
        u = [c * inv for c in u]
    return u


def _coeffs_in_var(p: TriPoly, vi: int):
    """Map exponent-of-vi -> TriPoly in the remaining variables."""
    buckets = {}
    for expo, c in p.terms.items():
        e = expo[vi]
        rest = list(expo)
        rest[vi] = 0
        buckets.setdefault(e, {})[tuple(rest)] = c
    return {e: TriPoly(p.spec, t) for e, t in buckets.items()}


def _eval_var(p: TriPoly, vi: int, value) -> TriPoly:
    """Substitute a rational value for one variable."""
    spec = p.spec
    val = spec.scalar(value)
    out = {}
    pow_cache = {0: spec.one()}

    def power(e):
        if e not in pow_cache:
            pow_cache[e] = pow_cache[e - 1] * val if e - 1 in pow_cache else val ** e
        return pow_cache[e]

    for expo, c in p.terms.items():
        e = expo[vi]
        ne = list(expo)
        ne[vi] = 0
        ne = tuple(ne)
        v = c * power(e) if e else c
        if ne in out:
            s = out[ne] + v
            if s.is_zero():
                del out[ne]
            else:
                out[ne] = s
        else:
            if not v.is_zero():
                out[ne] = v
    q = TriPoly.__new__(TriPoly)
    q.spec = spec
    q.terms = out
    return q


def _lagrange_interpolate(spec, samples, vi):
    """TriPoly through (node, TriPoly-value) pairs, polynomial in variable vi."""
    result = TriPoly.zero(spec)
    var = TriPoly.variable(spec, VARS[vi])
    for i, (xi, yi) in enumerate(samples):
        if yi.is_zero():
            continue
        numer = TriPoly.constant(spec, 1)
        denom = ONE
        for j, (xj, _) in enumerate(samples):
            if i == j:
                continue
            numer = numer * (var - TriPoly.constant(spec, xj))
            denom = denom * (xi - xj)
        result = result + numer * yi.scaled(QQ(1) / denom)
    return result


def tri_gcd(f: TriPoly, g: TriPoly) -> TriPoly:
    """GCD via evaluation-interpolation, primitive and sign-normalized.

    The result is defined up to a scalar; this routine fixes it by making the
    coefficients coprime integers with a positive leading sign.
    """
    spec = f.spec
    if f.is_zero():
        return g.primitive().sign_normalized()
    if g.is_zero():
        return f.primitive().sign_normalized()
    mono_f = f.monomial_content()
    mono_g = g.monomial_content()
    common_mono = tuple(min(a, b) for a, b in zip(mono_f, mono_g))
    f1 = f.shift_down(mono_f)
    g1 = g.shift_down(mono_g)
    core = _gcd_core(f1, g1)
    result = core
    if common_mono != (0, 0, 0):
        result = result * TriPoly.monomial(spec, common_mono, 1)
    return result.primitive().sign_normalized()


def _gcd_core(f: TriPoly, g: TriPoly) -> TriPoly:
    spec = f.spec
    vs = active_vars(f, g)
    if not vs:
        return TriPoly.constant(spec, 1)
    if len(vs) == 1:
        vi = vs[0]
        coeffs = _uni_gcd_monic(_as_univariate(f, vi), _as_univariate(g, vi), spec)
        return _from_univariate(spec, coeffs, vi)

    # choose the main variable with lowest max degree, eliminate another one
    main = min(vs, key=lambda v: max(f.degree_in(VARS[v]), g.degree_in(VARS[v])))
    others = [v for v in vs if v != main]
    sub = others[-1]

    fc = _coeffs_in_var(f, main)
    gc = _coeffs_in_var(g, main)
    cont_f = _content_in(fc)
    cont_g = _content_in(gc)
    cont = _gcd_core(cont_f, cont_g)
    fp = _divexact_coeffwise(f, cont_f, main)
    gp = _divexact_coeffwise(g, cont_g, main)

    lf = fc[max(fc)]
    lg = gc[max(gc)]
    gamma = _gcd_core(lf, lg)

    deg_bound = min(fp.degree_in(VARS[sub]), gp.degree_in(VARS[sub])) + gamma.degree_in(VARS[sub]) + 1
    node = 0
    for attempt in range(6):
        samples = []
        min_main_deg = None
        want = deg_bound + 1 + attempt * 2
        guard = 0
        while len(samples) < want and guard < 50 * want + 100:
            guard += 1
            node += 1
            t = QQ(node)
            lf_t = _eval_var(lf, sub, t)
            lg_t = _eval_var(lg, sub, t)
            if lf_t.is_zero() or lg_t.is_zero():
                continue
            f_t = _eval_var(fp, sub, t)
            g_t = _eval_var(gp, sub, t)
            h_t = _gcd_core(f_t, g_t)
            dmain = h_t.degree_in(VARS[main])
            if min_main_deg is None or dmain < min_main_deg:
                min_main_deg = dmain
                samples = []
            if dmain == min_main_deg:
                # scale so the sample's main-leading coefficient equals gamma(t)
                ht_coeffs = _coeffs_in_var(h_t, main)
                lead = ht_coeffs[max(ht_coeffs)]
                gamma_t = _eval_var(gamma, sub, t)
                scale_num = gamma_t
                try:
                    scale = _ratio_constant(scale_num, lead)
                except ValueError:
                    continue
                samples.append((t, h_t.scaled(scale)))
        if min_main_deg == 0:
            return cont
        if len(samples) < want:
            continue
        cand = _lagrange_interpolate(spec, samples, sub)
        cc = _coeffs_in_var(cand, main)
        ccont = _content_in(cc)
        if ccont.is_zero():
            continue
        try:
            cand_pp = _divexact_coeffwise(cand, ccont, main)
        except NotDivisible:
            continue
        if not cand_pp.is_zero() and tri_divides(cand_pp, fp) and tri_divides(cand_pp, gp):
            return cont * cand_pp
    raise GcdFailure("evaluation-interpolation gcd did not stabilize")


def _content_in(coeff_map):
    spec = next(iter(coeff_map.values())).spec
    acc = TriPoly.zero(spec)
    for p in coeff_map.values():
        acc = _gcd_core(acc, p) if not acc.is_zero() else p
        if acc.is_constant():
            return TriPoly.constant(spec, 1)
    return acc


def _divexact_coeffwise(p: TriPoly, d: TriPoly, main: int) -> TriPoly:
    if d.is_constant():
        c = d.constant_value()
        if c == d.spec.one():
            return p
        return p.scaled(c.inverse())
    result = TriPoly.zero(p.spec)
    for e, coeff_poly in _coeffs_in_var(p, main).items():
        q = tri_divexact(coeff_poly, d)
        expo = [0, 0, 0]
        expo[main] = e
        result = result + q * TriPoly.monomial(p.spec, tuple(expo), 1)
    return result


def _ratio_constant(a: TriPoly, b: TriPoly):
    """FieldElem c with a = c * b, defined when a/b is constant."""
    if b.is_zero():
        raise ValueError("zero denominator in constant ratio")
    b_expo, b_coeff = b.leading()
    if b_expo not in a.terms:
        raise ValueError("not a constant multiple")
    c = a.terms[b_expo] * b_coeff.inverse()
    if a != b.scaled(c):
        raise ValueError("not a constant multiple")
    return c


# ---------------------------------------------------------------------------
# resultants

def resultant(f: TriPoly, g: TriPoly, var: str) -> TriPoly:
    """Sylvester resultant eliminating ``var``; entries stay polynomial."""
    vi = VAR_INDEX[var]
    fc = _coeffs_in_var(f, vi)
    gc = _coeffs_in_var(g, vi)
    m = max(fc, default=-1)
    n = max(gc, default=-1)
    if m < 0 or n < 0:
        raise ValueError("resultant of a zero polynomial")
    spec = f.spec
    if m == 0 and n == 0:
        return TriPoly.constant(spec, 1)
    size = m + n
    zero = TriPoly.zero(spec)
    rows = []
    for r in range(n):
        row = [zero] * size
        for e, c in fc.items():
            row[r + (m - e)] = c
        rows.append(row)
    for r in range(m):
        row = [zero] * size
        for e, c in gc.items():
            row[r + (n - e)] = c
        rows.append(row)
    return _bareiss_det(rows, spec)


def _bareiss_det(rows, spec):
    n = len(rows)
    if n == 0:
        return TriPoly.constant(spec, 1)
    m = [list(r) for r in rows]
    sign = 1
    prev = None
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot_row = None
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    pivot_row = r
                    break
            if pivot_row is None:
                return TriPoly.zero(spec)
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num if prev is None else tri_divexact(num, prev)
            m[i][k] = TriPoly.zero(spec)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


# ---------------------------------------------------------------------------
# rational functions in the chart z = 1

class RatFunc:
    """Quotient of two TriPoly in x, y (z-exponent forced to zero)."""

    __slots__ = ("num", "den")

    def __init__(self, num: TriPoly, den: TriPoly = None, normalize=True):
        if den is None:
            den = TriPoly.constant(num.spec, 1)
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if any(e[2] for e in num.terms) or any(e[2] for e in den.terms):
            raise ValueError("RatFunc lives in the chart z=1; no z allowed")
        if num.spec != den.spec:
            raise IncompatibleField("numerator and denominator over different towers")
        self.num = num
        self.den = den
        if normalize:
            self._strip()

    @property
    def spec(self):
        return self.num.spec

    @staticmethod
    def from_const(spec, c):
        return RatFunc(TriPoly.constant(spec, c))

    @staticmethod
    def from_poly(p: TriPoly):
        return RatFunc(p)

    def is_zero(self):
        return self.num.is_zero()

    def is_poly(self):
        return self.den.is_constant()

    def as_poly(self):
        if not self.is_poly():
            raise ValueError("not a polynomial")
        return self.num.scaled(self.den.constant_value().inverse())

    # -- normalization ---------------------------------------------------------

    def _strip(self):
        if self.num.is_zero():
            self.den = TriPoly.constant(self.spec, 1)
            return
        mono = tuple(min(a, b) for a, b in zip(self.num.monomial_content(), self.den.monomial_content()))
        if mono != (0, 0, 0):
            self.num = self.num.shift_down(mono)
            self.den = self.den.shift_down(mono)
        cn = self.num.rational_content()
        cd = self.den.rational_content()
        from math import gcd, lcm

        common = QQ(gcd(int(cn.numerator), int(cd.numerator)), lcm(int(cn.denominator), int(cd.denominator)))
        if common != 1:
            inv = QQ(common.denominator, common.numerator)
            self.num = self.num.scaled(inv)
            self.den = self.den.scaled(inv)
        # deterministic sign: denominator leading coefficient starts positive
        _, lead = self.den.leading()
        for layer in lead.coords:
            for r in layer:
                if r != 0:
                    if r < 0:
                        self.num = self.num.scaled(-1)
                        self.den = self.den.scaled(-1)
                    return

    def normalized(self, policy: ReductionPolicy = None, force=False):
        """Content-stripped copy; runs full GCD reduction past the size policy."""
        policy = policy or DEFAULT_POLICY
        r = RatFunc(self.num, self.den)
        if r.den.is_constant():
            return r
        if force or policy.always or r.num.num_terms() > policy.threshold or r.den.num_terms() > policy.threshold:
            try:
                g = tri_gcd(r.num, r.den)
            except GcdFailure:
                return r
            if not g.is_constant():
                r = RatFunc(tri_divexact(r.num, g), tri_divexact(r.den, g))
        return r

    # -- arithmetic --------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.spec != self.spec:
                raise IncompatibleField("rational functions over different towers")
            return other
        if isinstance(other, TriPoly):
            return RatFunc(other)
        return RatFunc(TriPoly.constant(self.spec, other))

    def __add__(self, other):
        other = self._coerce(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.num.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, e):
        if e < 0:
            if self.num.is_zero():
                raise DivisionByZero("negative power of zero")
            return RatFunc(self.den ** (-e), self.num ** (-e))
        return RatFunc(self.num ** e, self.den ** e)

    def __eq__(self, other):
        if isinstance(other, (RatFunc, TriPoly, int, FieldElem)) or isinstance(other, type(ONE)):
            other = self._coerce(other)
            return ratfunc_eq(self, other)
        return NotImplemented

    def __hash__(self):
        raise TypeError("RatFunc equality is by cross-multiplication; not hashable")

    def __repr__(self):
        if self.den.is_constant() and self.den.constant_value() == self.spec.one():
            return "RatFunc(%s)" % format_tripoly(self.num)
        return "RatFunc((%s)/(%s))" % (format_tripoly(self.num), format_tripoly(self.den))


def ratfunc_eq(r: RatFunc, s: RatFunc) -> bool:
    return (r.num * s.den) == (s.num * r.den)
