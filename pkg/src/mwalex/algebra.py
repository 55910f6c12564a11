"""Exact scalar arithmetic: rationals, a cyclotomic-plus-radical field tower,
univariate rational polynomials, and Alexander polynomials in factored form.

The field tower has two layers: Q[a]/(Phi_n(a)) with a a primitive n-th root
of unity, optionally extended by Q[b]/(b^k - r) for r in the first layer.
Every coefficient in the package is a ``FieldElem`` over some ``FieldSpec``.
"""

from __future__ import annotations

from functools import lru_cache

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ


class AlgebraError(Exception):
    pass


class DivisionByZero(AlgebraError):
    pass


class IncompatibleField(AlgebraError):
    pass


class FieldLacksRoot(AlgebraError):
    pass


class ReducibleRadical(AlgebraError):
    pass


class NotDivisible(AlgebraError):
    pass


class ZeroPolynomial(AlgebraError):
    pass


def qq(x):
    """Coerce ints, strings like '3/4', Fractions and mpqs to the rational type."""
    if isinstance(x, QQ):
        return x
    if isinstance(x, str):
        if "/" in x:
            num, den = x.split("/")
            return QQ(int(num), int(den))
        return QQ(int(x))
    return QQ(x)


ZERO = qq(0)
ONE = qq(1)


# ---------------------------------------------------------------------------
# rational polynomial helpers (coefficient lists, lowest degree first)

def _trim(coeffs):
    i = len(coeffs)
    while i > 0 and coeffs[i - 1] == 0:
        i -= 1
    return tuple(coeffs[:i])


def _poly_add(u, v):
    if len(u) < len(v):
        u, v = v, u
    out = list(u)
    for i, c in enumerate(v):
        out[i] += c
    return _trim(out)


def _poly_neg(u):
    return tuple(-c for c in u)


def _poly_mul(u, v):
    if not u or not v:
        return ()
    out = [ZERO] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a == 0:
            continue
        for j, b in enumerate(v):
            if b != 0:
                out[i + j] += a * b
    return _trim(out)


def _poly_divmod(u, v):
    """Division over Q; v must be nonzero."""
    if not v:
        raise DivisionByZero("polynomial division by zero")
    u = list(u)
    dv = len(v) - 1
    lead = v[-1]
    q = [ZERO] * max(0, len(u) - dv)
    while len(_trim(u)) - 1 >= dv:
        u = list(_trim(u))
        du = len(u) - 1
        c = u[-1] / lead
        q[du - dv] = c
        for i in range(dv + 1):
            u[du - dv + i] -= c * v[i]
        u[du] = ZERO
    return _trim(q), _trim(u)


def _poly_gcd(u, v):
    """Monic gcd over Q."""
    u, v = _trim(u), _trim(v)
    while v:
        u, v = v, _poly_divmod(u, v)[1]
    if u:
        lead = u[-1]
        u = tuple(c / lead for c in u)
    return u


def _poly_xgcd(u, v):
    """Extended gcd over Q: returns (g, s, t) with s*u + t*v = g, g monic."""
    r0, r1 = _trim(u), _trim(v)
    s0, s1 = (ONE,), ()
    t0, t1 = (), (ONE,)
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_add(s0, _poly_neg(_poly_mul(q, s1)))
        t0, t1 = t1, _poly_add(t0, _poly_neg(_poly_mul(q, t1)))
    if r0:
        lead = r0[-1]
        inv = ONE / lead
        r0 = tuple(c * inv for c in r0)
        s0 = tuple(c * inv for c in s0)
        t0 = tuple(c * inv for c in t0)
    return r0, s0, t0


class UPoly:
    """Univariate polynomial over Q, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim([qq(c) for c in coeffs])

    @staticmethod
    def zero():
        return UPoly(())

    @staticmethod
    def one():
        return UPoly((1,))

    @staticmethod
    def t():
        return UPoly((0, 1))

    @staticmethod
    def constant(c):
        return UPoly((c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        return UPoly(_poly_add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return UPoly(_poly_neg(self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return UPoly(_poly_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = UPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, UPoly):
            return other
        return UPoly((qq(other),))

    def divmod(self, other):
        q, r = _poly_divmod(self.coeffs, other.coeffs)
        return UPoly(q), UPoly(r)

    def __call__(self, x):
        acc = qq(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return UPoly(tuple(qq(i) * c for i, c in enumerate(self.coeffs))[1:])

    def monic(self):
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return UPoly(tuple(c / lead for c in self.coeffs))

    def shifted(self, m):
        """Multiply by t^m."""
        if self.is_zero():
            return self
        return UPoly((ZERO,) * m + self.coeffs)

    def __repr__(self):
        return "UPoly(%s)" % (format_upoly(self),)


def format_upoly(p: UPoly, var="t") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        if i == 0:
            mono = str(c)
        else:
            tpow = var if i == 1 else "%s^%d" % (var, i)
            if c == 1:
                mono = tpow
            elif c == -1:
                mono = "-" + tpow
            else:
                mono = "%s*%s" % (c, tpow)
        if parts and not mono.startswith("-"):
            parts.append("+" + mono)
        else:
            parts.append(mono)
    return "".join(parts)


def upoly_divexact(f: UPoly, g: UPoly) -> UPoly:
    """Exact quotient f/g; raises NotDivisible when the remainder is nonzero."""
    if g.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    q, r = f.divmod(g)
    if not r.is_zero():
        raise NotDivisible("%r does not divide %r" % (g, f))
    return q


def upoly_divides(g: UPoly, f: UPoly) -> bool:
    """True iff g divides f (g nonzero)."""
    if g.is_zero():
        raise DivisionByZero("divisibility by the zero polynomial")
    if f.is_zero():
        return True
    return f.divmod(g)[1].is_zero()


def upoly_gcd(f: UPoly, g: UPoly) -> UPoly:
    return UPoly(_poly_gcd(f.coeffs, g.coeffs))


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> UPoly:
    """The n-th cyclotomic polynomial Phi_n(t), monic with integer coefficients."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    if n == 1:
        return UPoly((-1, 1))
    p = UPoly((-1,) + (0,) * (n - 1) + (1,))  # t^n - 1
    for d in range(1, n):
        if n % d == 0:
            p = upoly_divexact(p, cyclotomic_polynomial(d))
    return p


def euler_phi(n: int) -> int:
    count = 0
    for m in range(1, n + 1):
        a, b = m, n
        while b:
            a, b = b, a % b
        if a == 1:
            count += 1
    return count


# ---------------------------------------------------------------------------
# field tower

class FieldSpec:
    """Two-layer number field Q[a]/(Phi_n(a)) [b]/(b^k - r).

    ``radical`` is None or a pair (k, r) where r is given as layer-one
    coordinates (a tuple of rationals in the power basis of a).  For k in
    {2, 3} irreducibility of b^k - r is verified by k-th power testing in the
    base layer; pass trust=True to skip (required for k >= 4).
    """

    def __init__(self, cyclotomic_order: int, radical=None, trust=False):
        if cyclotomic_order < 1:
            raise ValueError("cyclotomic order must be >= 1")
        self.n = int(cyclotomic_order)
        self.phi = cyclotomic_polynomial(self.n)
        self.deg1 = self.phi.degree
        if radical is not None:
            k, r = radical
            k = int(k)
            if k < 2:
                raise ValueError("radical index must be >= 2")
            r = self._coerce_base(r)
            if all(c == 0 for c in r):
                raise ReducibleRadical("radical base must be nonzero")
            self.rad_k = k
            self.rad_r = r
        else:
            self.rad_k = 1
            self.rad_r = None
        self.dim = self.deg1 * self.rad_k
        self._apow = self._power_table()
        self._omega_cache = {}
        if radical is not None and not trust:
            if self.rad_k in (2, 3):
                root = self._kth_root_in_base(self.rad_r, self.rad_k)
                if root is not None:
                    raise ReducibleRadical(
                        "b^%d - r is reducible: r has the %d-th root %s in the base layer"
                        % (self.rad_k, self.rad_k, root)
                    )
            else:
                raise ReducibleRadical(
                    "irreducibility testing only implemented for radical index 2 or 3; "
                    "construct with trust=True to accept the extension"
                )

    def _coerce_base(self, r):
        if isinstance(r, FieldElem):
            if r.spec.n != self.n or any(
                any(c != 0 for c in layer) for layer in r.coords[1:]
            ):
                raise IncompatibleField("radical base must lie in the cyclotomic layer")
            return r.coords[0]
        if isinstance(r, (int, str)) or isinstance(r, type(ONE)):
            v = [ZERO] * self.deg1
            v[0] = qq(r)
            return tuple(v)
        vals = [qq(c) for c in r]
        if len(vals) > self.deg1:
            raise ValueError("radical base has too many coordinates")
        vals += [ZERO] * (self.deg1 - len(vals))
        return tuple(vals)

    def _power_table(self):
        # a^m mod Phi_n for m = deg1 .. 2*deg1-2
        d = self.deg1
        table = []
        cur = [-c for c in self.phi.coeffs[:-1]]  # a^d
        table.append(tuple(cur))
        for _ in range(d - 2):
            nxt = [ZERO] + cur[:-1]
            top = cur[-1]
            if top != 0:
                for i in range(d):
                    nxt[i] += top * (-self.phi.coeffs[i])
            cur = nxt
            table.append(tuple(cur))
        return table

    # -- layer-one arithmetic (tuples of rationals, length deg1) ------------

    def base_mul(self, u, v):
        d = self.deg1
        out = [ZERO] * (2 * d - 1)
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b != 0:
                    out[i + j] += a * b
        res = list(out[:d])
        for m in range(d, 2 * d - 1):
            c = out[m]
            if c != 0:
                red = self._apow[m - d]
                for i in range(d):
                    if red[i] != 0:
                        res[i] += c * red[i]
        return tuple(res)

    def base_inv(self, u):
        if all(c == 0 for c in u):
            raise DivisionByZero("inverse of zero in the base layer")
        g, s, _ = _poly_xgcd(_trim(u), self.phi.coeffs)
        if len(g) != 1:
            raise AlgebraError("element not invertible modulo Phi_n")
        inv = tuple(c / g[0] for c in s)
        inv = list(inv) + [ZERO] * (self.deg1 - len(inv))
        # s may exceed deg1-1 only transiently; xgcd keeps deg(s) < deg(phi)
        return tuple(inv[: self.deg1])

    # -- constructors --------------------------------------------------------

    def zero(self):
        return FieldElem(self, ((ZERO,) * self.deg1,) * self.rad_k)

    def one(self):
        first = (ONE,) + (ZERO,) * (self.deg1 - 1)
        rest = ((ZERO,) * self.deg1,) * (self.rad_k - 1)
        return FieldElem(self, (first,) + rest)

    def scalar(self, c):
        c = qq(c)
        first = (c,) + (ZERO,) * (self.deg1 - 1)
        rest = ((ZERO,) * self.deg1,) * (self.rad_k - 1)
        return FieldElem(self, (first,) + rest)

    def gen(self):
        """The cyclotomic generator a (a primitive n-th root of unity)."""
        if self.deg1 == 1:
            return self.one()
        v = [ZERO] * self.deg1
        v[1] = ONE
        rest = ((ZERO,) * self.deg1,) * (self.rad_k - 1)
        return FieldElem(self, (tuple(v),) + rest)

    def rad(self):
        """The radical generator b with b^k = r."""
        if self.rad_k == 1:
            raise FieldLacksRoot("field has no radical layer")
        layers = [((ZERO,) * self.deg1) for _ in range(self.rad_k)]
        layers[1] = (ONE,) + (ZERO,) * (self.deg1 - 1)
        return FieldElem(self, tuple(layers))

    def omega(self, m: int):
        """A fixed primitive m-th root of unity, when the field contains one.

        For m | n this is a^(n/m).  For odd n and even m = 2m' with m' | n it
        is -a^((n/m')*(m'+1)/2).  Otherwise FieldLacksRoot is raised.
        """
        m = int(m)
        if m < 1:
            raise ValueError("root order must be positive")
        if m in self._omega_cache:
            return self._omega_cache[m]
        if m == 1:
            w = self.one()
        elif m == 2:
            w = -self.one()
        elif self.n % m == 0:
            w = self.gen() ** (self.n // m)
        elif self.n % 2 == 1 and m % 2 == 0 and self.n % (m // 2) == 0:
            mp = m // 2
            w = -(self.gen() ** ((self.n // mp) * ((mp + 1) // 2)))
        else:
            raise FieldLacksRoot("Q(zeta_%d) tower lacks a primitive %d-th root" % (self.n, m))
        self._omega_cache[m] = w
        return w

    # -- misc ----------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self.n == other.n and self.rad_k == other.rad_k and self.rad_r == other.rad_r

    def __hash__(self):
        return hash((self.n, self.rad_k, self.rad_r))

    def __repr__(self):
        if self.rad_k == 1:
            return "FieldSpec(n=%d)" % self.n
        return "FieldSpec(n=%d, radical=(%d, %s))" % (self.n, self.rad_k, list(self.rad_r))

    def to_dict(self):
        d = {"cyclotomic": self.n}
        if self.rad_k > 1:
            d["radical"] = {
                "index": self.rad_k,
                "base": [str(c) for c in self.rad_r],
            }
        return d

    @staticmethod
    def from_dict(d, trust=False):
        rad = None
        if d.get("radical"):
            rad = (int(d["radical"]["index"]), [qq(c) for c in d["radical"]["base"]])
        return FieldSpec(int(d["cyclotomic"]), radical=rad, trust=trust)

    # -- numeric embedding and k-th power testing ----------------------------

    def embeddings(self, prec_bits=256):
        """Complex embeddings of the Q-basis a^i b^j (principal choices)."""
        import mpmath

        with mpmath.workprec(prec_bits):
            za = mpmath.e ** (2j * mpmath.pi / self.n)
            apows = [za ** i for i in range(self.deg1)]
            if self.rad_k > 1:
                rval = sum(
                    mpmath.mpf(int(c.numerator)) / mpmath.mpf(int(c.denominator)) * apows[i]
                    for i, c in enumerate(self.rad_r)
                )
                zb = rval ** (mpmath.mpf(1) / self.rad_k)
            else:
                zb = mpmath.mpc(1)
            basis = []
            for j in range(self.rad_k):
                for i in range(self.deg1):
                    basis.append(apows[i] * zb ** j)
            return basis

    def embed(self, elem, prec_bits=256):
        import mpmath

        with mpmath.workprec(prec_bits):
            basis = self.embeddings(prec_bits)
            acc = mpmath.mpc(0)
            idx = 0
            for j in range(self.rad_k):
                for i in range(self.deg1):
                    c = elem.coords[j][i]
                    if c != 0:
                        acc += mpmath.mpf(int(c.numerator)) / mpmath.mpf(int(c.denominator)) * basis[idx]
                    idx += 1
            return acc

    def _kth_root_in_base(self, r_coords, k, prec_bits=384):
        """Return coordinates of s with s^k = r in Q(zeta_n), or None."""
        import mpmath

        base_spec = self if self.rad_k == 1 else FieldSpec(self.n)
        r_elem = FieldElem(base_spec, (tuple(r_coords),))
        with mpmath.workprec(prec_bits):
            basis = base_spec.embeddings(prec_bits)
            rval = base_spec.embed(r_elem, prec_bits)
            if rval == 0:
                return None
            principal = rval ** (mpmath.mpf(1) / k)
            for j in range(k):
                cand = principal * mpmath.e ** (2j * mpmath.pi * j / k)
                coords = recognize_linear(cand, basis, prec_bits)
                if coords is None:
                    continue
                s = FieldElem(base_spec, (tuple(coords),))
                if s ** k == r_elem:
                    if base_spec is self:
                        return s
                    return FieldElem(self, (s.coords[0],) + ((ZERO,) * self.deg1,) * (self.rad_k - 1))
        return None

    def kth_root(self, elem, k, prec_bits=384):
        """A k-th root of ``elem`` inside this field, or None.

        Numeric recognition proposes a candidate which is then verified
        exactly; a returned value always satisfies root**k == elem.
        """
        import mpmath

        if elem.is_zero():
            return self.zero()
        with mpmath.workprec(prec_bits):
            basis = self.embeddings(prec_bits)
            val = self.embed(elem, prec_bits)
            principal = val ** (mpmath.mpf(1) / k)
            for j in range(k):
                cand = principal * mpmath.e ** (2j * mpmath.pi * j / k)
                coords = recognize_linear(cand, basis, prec_bits)
                if coords is None:
                    continue
                layers = [
                    tuple(coords[jj * self.deg1: (jj + 1) * self.deg1])
                    for jj in range(self.rad_k)
                ]
                root = FieldElem(self, tuple(layers))
                if root ** k == elem:
                    return root
        return None


def recognize_linear(value, basis, prec_bits=256, max_coeff=10 ** 12):
    """Rational coordinates of ``value`` in the span of ``basis``, or None.

    Runs PSLQ on (basis..., value) with a random real/imaginary mixing so a
    single real relation pins the complex one; callers must verify exactly.
    """
    import mpmath

    with mpmath.workprec(prec_bits):
        if abs(value) < mpmath.mpf(2) ** (-prec_bits // 2):
            return [ZERO] * len(basis)
        lam = mpmath.mpf(3) / 7 + mpmath.sqrt(2)  # fixed irrational mixer
        vec = [mpmath.re(z) + lam * mpmath.im(z) for z in list(basis) + [value]]
        try:
            rel = mpmath.pslq(vec, maxcoeff=max_coeff, maxsteps=20000)
        except Exception:
            return None
        if rel is None or rel[-1] == 0:
            return None
        m = rel[-1]
        coords = [QQ(-rel[i], m) for i in range(len(basis))]
        # cheap numeric double check before the caller's exact verification
        approx = mpmath.mpc(0)
        for c, z in zip(coords, basis):
            if c != 0:
                approx += mpmath.mpf(int(c.numerator)) / mpmath.mpf(int(c.denominator)) * z
        if abs(approx - value) > mpmath.mpf(2) ** (-prec_bits // 3):
            return None
        return coords


class FieldElem:
    """Element of a FieldSpec tower; coords[j][i] is the coefficient of a^i b^j."""

    __slots__ = ("spec", "coords")

    def __init__(self, spec: FieldSpec, coords):
        self.spec = spec
        self.coords = coords

    # -- predicates ----------------------------------------------------------

    def is_zero(self):
        return all(c == 0 for layer in self.coords for c in layer)

    def is_rational(self):
        return all(
            c == 0
            for j, layer in enumerate(self.coords)
            for i, c in enumerate(layer)
            if (i, j) != (0, 0)
        )

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0][0]

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if isinstance(other, FieldElem):
            if other.spec != self.spec:
                raise IncompatibleField("operands live in different field towers")
            return other
        if isinstance(other, (int, str)) or isinstance(other, type(ONE)):
            return self.spec.scalar(other)
        return None

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return FieldElem(
            self.spec,
            tuple(
                tuple(a + b for a, b in zip(la, lb))
                for la, lb in zip(self.coords, other.coords)
            ),
        )

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.spec, tuple(tuple(-c for c in layer) for layer in self.coords))

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        spec = self.spec
        k = spec.rad_k
        if k == 1:
            return FieldElem(spec, (spec.base_mul(self.coords[0], other.coords[0]),))
        conv = [None] * (2 * k - 1)
        zero_layer = (ZERO,) * spec.deg1
        for m in range(2 * k - 1):
            conv[m] = zero_layer
        for i, la in enumerate(self.coords):
            if all(c == 0 for c in la):
                continue
            for j, lb in enumerate(other.coords):
                if all(c == 0 for c in lb):
                    continue
                prod = spec.base_mul(la, lb)
                conv[i + j] = tuple(a + b for a, b in zip(conv[i + j], prod))
        res = list(conv[:k])
        for m in range(k, 2 * k - 1):
            layer = conv[m]
            if any(c != 0 for c in layer):
                red = spec.base_mul(layer, spec.rad_r)
                res[m - k] = tuple(a + b for a, b in zip(res[m - k], red))
        return FieldElem(spec, tuple(res))

    __rmul__ = __mul__

    def inverse(self):
        spec = self.spec
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if spec.rad_k == 1:
            return FieldElem(spec, (spec.base_inv(self.coords[0]),))
        # extended Euclid in K1[b] modulo b^k - r
        modulus = self._rad_modulus()
        g, s, _ = _field_poly_xgcd(spec, list(self.coords), modulus)
        if len(g) != 1:
            raise AlgebraError("element not invertible in the tower")
        ginv = spec.base_inv(g[0])
        layers = [spec.base_mul(ginv, layer) for layer in s]
        layers += [(ZERO,) * spec.deg1] * (spec.rad_k - len(layers))
        return FieldElem(spec, tuple(layers[: spec.rad_k]))

    def _rad_modulus(self):
        spec = self.spec
        zero_layer = (ZERO,) * spec.deg1
        mod = [tuple(-c for c in spec.rad_r)] + [zero_layer] * (spec.rad_k - 1)
        mod.append((ONE,) + (ZERO,) * (spec.deg1 - 1))
        return mod

    def __truediv__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.spec.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            if other.spec != self.spec:
                return False
            return self.coords == other.coords
        if isinstance(other, (int, type(ONE))):
            return self == self.spec.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.coords))

    def __repr__(self):
        return format_field_elem(self)


def _field_poly_trim(layers):
    i = len(layers)
    while i > 0 and all(c == 0 for c in layers[i - 1]):
        i -= 1
    return layers[:i]


def _field_poly_divmod(spec, u, v):
    """Polynomials over the base layer, as lists of coordinate tuples."""
    u = list(_field_poly_trim(u))
    v = _field_poly_trim(v)
    if not v:
        raise DivisionByZero("division by zero polynomial over the base layer")
    dv = len(v) - 1
    lead_inv = spec.base_inv(v[-1])
    q = [(ZERO,) * spec.deg1] * max(0, len(u) - dv)
    while len(_field_poly_trim(u)) - 1 >= dv:
        u = list(_field_poly_trim(u))
        du = len(u) - 1
        c = spec.base_mul(u[-1], lead_inv)
        q[du - dv] = c
        for i in range(dv + 1):
            sub = spec.base_mul(c, v[i])
            u[du - dv + i] = tuple(a - b for a, b in zip(u[du - dv + i], sub))
    return q, _field_poly_trim(u)


def _field_poly_xgcd(spec, u, v):
    zero_layer = (ZERO,) * spec.deg1
    one_layer = (ONE,) + (ZERO,) * (spec.deg1 - 1)
    r0, r1 = _field_poly_trim(u), _field_poly_trim(v)
    s0, s1 = [one_layer], []
    t0, t1 = [], [one_layer]

    def sub_mul(a, q, b):
        # a - q*b over base-layer polynomials
        prod = [zero_layer] * (len(q) + len(b) - 1 if q and b else 0)
        for i, qc in enumerate(q):
            for j, bc in enumerate(b):
                m = spec.base_mul(qc, bc)
                prod[i + j] = tuple(x + y for x, y in zip(prod[i + j], m))
        out = list(a) + [zero_layer] * (max(0, len(prod) - len(a)))
        for i, p in enumerate(prod):
            out[i] = tuple(x - y for x, y in zip(out[i], p))
        return _field_poly_trim(out)

    while r1:
        q, r = _field_poly_divmod(spec, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub_mul(s0, q, s1)
        t0, t1 = t1, sub_mul(t0, q, t1)
    return r0, s0, t0


def format_field_elem(e: FieldElem) -> str:
    """Render in the expression grammar: coordinates against w{n} and rad."""
    spec = e.spec
    var_a = "w%d" % spec.n
    parts = []
    for j in range(spec.rad_k):
        for i in range(spec.deg1):
            c = e.coords[j][i]
            if c == 0:
                continue
            factors = []
            if i == 1:
                factors.append(var_a)
            elif i > 1:
                factors.append("%s^%d" % (var_a, i))
            if j == 1:
                factors.append("rad")
            elif j > 1:
                factors.append("rad^%d" % j)
            if not factors:
                mono = _format_rat(c)
            elif c == 1:
                mono = "*".join(factors)
            elif c == -1:
                mono = "-" + "*".join(factors)
            else:
                mono = "*".join([_format_rat(c)] + factors)
            if parts and not mono.startswith("-"):
                parts.append("+" + mono)
            else:
                parts.append(mono)
    if not parts:
        return "0"
    return "".join(parts)


def _format_rat(c) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return "(%s/%s)" % (c.numerator, c.denominator)


# ---------------------------------------------------------------------------
# Alexander polynomials in factored cyclotomic form

DEFAULT_TRACKED = (1, 2, 3, 4, 6)


class AlexPoly:
    """Product of tracked cyclotomic powers times an extra rational factor.

    The represented polynomial is prod_k Phi_k(t)^{s_k} * extra, normalized so
    the value at t=0 is 1 whenever it is nonzero (else extra is monic).
    """

    __slots__ = ("cyclo_mults", "extra", "tracked")

    def __init__(self, cyclo_mults=None, extra=None, tracked=DEFAULT_TRACKED):
        self.tracked = tuple(sorted(set(tracked)))
        mults = dict(cyclo_mults or {})
        self.cyclo_mults = {k: int(v) for k, v in mults.items() if v}
        self.extra = extra if extra is not None else UPoly.one()
        if self.extra.is_zero():
            raise ZeroPolynomial("AlexPoly cannot represent the zero polynomial")
        self._normalize()

    def _normalize(self):
        at0 = self.expand()(qq(0))
        if at0 != 0:
            if at0 != 1:
                self.extra = self.extra * UPoly.constant(ONE / at0)
        else:
            self.extra = self.extra.monic()

    def s(self, k: int) -> int:
        return self.cyclo_mults.get(k, 0)

    def svec(self, ks=None):
        ks = tuple(ks) if ks is not None else self.tracked
        return tuple(self.s(k) for k in ks)

    @property
    def degree(self) -> int:
        d = sum(v * cyclotomic_polynomial(k).degree for k, v in self.cyclo_mults.items())
        return d + self.extra.degree

    def expand(self) -> UPoly:
        p = self.extra
        for k, v in sorted(self.cyclo_mults.items()):
            p = p * cyclotomic_polynomial(k) ** v
        return p

    def is_one(self):
        return not self.cyclo_mults and self.extra.is_constant()

    def __mul__(self, other):
        if not isinstance(other, AlexPoly):
            return NotImplemented
        mults = dict(self.cyclo_mults)
        for k, v in other.cyclo_mults.items():
            mults[k] = mults.get(k, 0) + v
        tracked = tuple(sorted(set(self.tracked) | set(other.tracked)))
        return AlexPoly(mults, self.extra * other.extra, tracked)

    def divides(self, other: "AlexPoly") -> bool:
        for k, v in self.cyclo_mults.items():
            if other.s(k) < v:
                # the factor might hide in other.extra
                deficit = v - other.s(k)
                if not upoly_divides(cyclotomic_polynomial(k) ** deficit, other.extra):
                    return False
        if self.extra.is_constant():
            return True
        return upoly_divides(self.extra, other.expand())

    def __eq__(self, other):
        if not isinstance(other, AlexPoly):
            return NotImplemented
        return self.cyclo_mults == other.cyclo_mults and self.extra.monic() == other.extra.monic()

    def __hash__(self):
        return hash((tuple(sorted(self.cyclo_mults.items())), self.extra.monic().coeffs))

    def __repr__(self):
        parts = []
        for k, v in sorted(self.cyclo_mults.items()):
            base = format_upoly(cyclotomic_polynomial(k))
            parts.append("(%s)^%d" % (base, v) if v != 1 else "(%s)" % base)
        if not self.extra.is_constant() or not parts or self.extra != UPoly.one():
            parts.append("(%s)" % format_upoly(self.extra))
        return "*".join(parts) if parts else "1"

    def to_dict(self):
        return {
            "s": {str(k): self.s(k) for k in self.tracked},
            "extra": format_upoly(self.extra),
            "degree": self.degree,
        }


def alex_from_upoly(p: UPoly, tracked=DEFAULT_TRACKED) -> AlexPoly:
    """Peel tracked cyclotomic factors off p by repeated exact division."""
    if p.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    mults = {}
    rem = p
    for k in sorted(set(tracked)):
        phi = cyclotomic_polynomial(k)
        count = 0
        while not rem.is_constant() and upoly_divides(phi, rem):
            rem = upoly_divexact(rem, phi)
            count += 1
        if count:
            mults[k] = count
    return AlexPoly(mults, rem, tracked)
