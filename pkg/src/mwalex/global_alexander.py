"""Global Alexander polynomial of irreducible nodal-cuspidal curves via the
superabundance of curves through the cusps, with exact and certified-numeric
rank paths and the degree bounds.
"""

from __future__ import annotations

from mwalex.algebra import QQ, AlexPoly, FieldElem, qq
from mwalex.multipoly import TriPoly


class RankUncertified(Exception):
    pass


class NotCuspidalNodal(Exception):
    pass


class DegreeNotDivisible(Warning):
    pass


def monomial_exponents(m: int):
    """Exponent triples of the degree-m monomials, in a fixed canonical order."""
    return [(i, j, m - i - j) for i in range(m, -1, -1) for j in range(m - i, -1, -1)]


def monomial_count(m: int) -> int:
    return (m + 1) * (m + 2) // 2


class InterpolationProblem:
    """Projective points plus a target degree for the evaluation matrix.

    Points are triples of FieldElem (exact path) or of complex numbers
    (numeric path); they must be pairwise distinct projectively.
    """

    def __init__(self, points, degree: int, numeric=False, bits=256):
        self.points = list(points)
        self.degree = int(degree)
        self.numeric = numeric
        self.bits = bits
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        self._check_distinct()

    def _check_distinct(self):
        if self.numeric:
            import mpmath

            sep = mpmath.mpf(2) ** (-(self.bits // 4))
            with mpmath.workprec(self.bits):
                normed = [_numeric_normalize(p) for p in self.points]
                for i in range(len(normed)):
                    for j in range(i + 1, len(normed)):
                        d = max(abs(a - b) for a, b in zip(normed[i], normed[j]))
                        if d < sep:
                            raise ValueError("points %d and %d coincide numerically" % (i, j))
        else:
            for i, p in enumerate(self.points):
                for j in range(i + 1, len(self.points)):
                    q = self.points[j]
                    if _proj_equal(p, q):
                        raise ValueError("points %d and %d coincide" % (i, j))


def _proj_equal(p, q):
    # cross products of coordinates vanish iff projectively equal
    for a in range(3):
        for b in range(a + 1, 3):
            if not (p[a] * q[b] - p[b] * q[a]).is_zero():
                return False
    return True


def _numeric_normalize(p):
    import mpmath

    vals = [mpmath.mpc(c) for c in p]
    mags = [abs(v) for v in vals]
    k = mags.index(max(mags))
    if mags[k] == 0:
        raise ValueError("zero vector is not a projective point")
    return [v / vals[k] for v in vals]


def interpolation_matrix(prob: InterpolationProblem):
    """One row per point, one column per degree-m monomial."""
    mons = monomial_exponents(prob.degree)
    rows = []
    if prob.numeric:
        import mpmath

        with mpmath.workprec(prob.bits):
            for p in self_points_numeric(prob):
                xp, yp, zp = p
                row = []
                for (i, j, k) in mons:
                    row.append((xp ** i) * (yp ** j) * (zp ** k))
                rows.append(row)
        return rows
    for p in prob.points:
        xp, yp, zp = p
        powers = _powers(p, prob.degree)
        row = [powers[0][i] * powers[1][j] * powers[2][k] for (i, j, k) in mons]
        rows.append(row)
    return rows


def self_points_numeric(prob):
    import mpmath

    return [[mpmath.mpc(c) for c in p] for p in prob.points]


def _powers(p, m):
    out = []
    for c in p:
        lst = [None] * (m + 1)
        spec = c.spec
        lst[0] = spec.one()
        for i in range(1, m + 1):
            lst[i] = lst[i - 1] * c
        out.append(lst)
    return out


class RankCertificate:
    def __init__(self, rank, mode, bits=None, tau=None, max_residual=None):
        self.rank = rank
        self.mode = mode
        self.bits = bits
        self.tau = tau
        self.max_residual = max_residual

    def to_dict(self):
        d = {"rank": self.rank, "mode": self.mode}
        if self.mode == "numeric":
            d["bits"] = self.bits
            d["tau"] = repr(self.tau)
            d["max_residual"] = repr(self.max_residual)
        return d


def matrix_rank_exact(rows) -> RankCertificate:
    """Gaussian elimination over the field tower; exact rank."""
    rows = [list(r) for r in rows]
    if not rows:
        return RankCertificate(0, "exact")
    ncols = len(rows[0])
    rank = 0
    rpos = 0
    for c in range(ncols):
        piv = None
        for r in range(rpos, len(rows)):
            if not rows[r][c].is_zero():
                piv = r
                break
        if piv is None:
            continue
        rows[rpos], rows[piv] = rows[piv], rows[rpos]
        inv = rows[rpos][c].inverse()
        rows[rpos] = [v * inv for v in rows[rpos]]
        for r in range(len(rows)):
            if r != rpos and not rows[r][c].is_zero():
                f = rows[r][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rpos])]
        rpos += 1
        rank += 1
        if rpos == len(rows):
            break
    return RankCertificate(rank, "exact")


def matrix_rank_numeric(rows, bits=256, tau=None) -> RankCertificate:
    """Row reduction in high-precision complex arithmetic.

    Pivots must clear tau by a factor of two in either direction, else
    RankUncertified; discarded rows must lie within 2^(-bits/2) of the pivot
    span, recorded as the certificate residual.
    """
    import mpmath

    if tau is None:
        tau = mpmath.mpf(2) ** -64
    with mpmath.workprec(bits):
        m = [[mpmath.mpc(v) for v in row] for row in rows]
        nrows = len(m)
        ncols = len(m[0]) if m else 0
        rank = 0
        rpos = 0
        for c in range(ncols):
            piv, best = None, mpmath.mpf(0)
            for r in range(rpos, nrows):
                a = abs(m[r][c])
                if a > best:
                    best, piv = a, r
            if piv is None or best <= tau:
                if piv is not None and tau / 2 < best <= 2 * tau:
                    raise RankUncertified(
                        "pivot magnitude %s falls inside the uncertain band around tau" % best
                    )
                continue
            if best <= 2 * tau:
                raise RankUncertified(
                    "pivot magnitude %s falls inside the uncertain band around tau" % best
                )
            m[rpos], m[piv] = m[piv], m[rpos]
            inv = 1 / m[rpos][c]
            m[rpos] = [v * inv for v in m[rpos]]
            for r in range(nrows):
                if r != rpos and m[r][c] != 0:
                    f = m[r][c]
                    m[r] = [a - f * b for a, b in zip(m[r], m[rpos])]
            rpos += 1
            rank += 1
            if rpos == nrows:
                break
        max_residual = mpmath.mpf(0)
        for r in range(rpos, nrows):
            for v in m[r]:
                max_residual = max(max_residual, abs(v))
        if max_residual > mpmath.mpf(2) ** (-(bits // 2)):
            raise RankUncertified(
                "discarded rows are not within tolerance of the pivot span: %s" % max_residual
            )
        return RankCertificate(rank, "numeric", bits=bits, tau=tau, max_residual=max_residual)


def matrix_rank(rows, mode="exact", bits=256, tau=None) -> RankCertificate:
    if mode == "exact":
        return matrix_rank_exact(rows)
    if mode == "numeric":
        return matrix_rank_numeric(rows, bits=bits, tau=tau)
    raise ValueError("mode must be 'exact' or 'numeric'")


def superabundance(points, degree, mode="exact", bits=256, tau=None):
    """h0, chi = chi(J(degree)), and the superabundance h1 = h0 - chi."""
    prob = InterpolationProblem(points, degree, numeric=(mode == "numeric"), bits=bits)
    rows = interpolation_matrix(prob)
    cert = matrix_rank(rows, mode=mode, bits=bits, tau=tau)
    ncols = monomial_count(degree)
    h0 = ncols - cert.rank
    chi = ncols - len(prob.points)
    h1 = h0 - chi
    if h0 < 0 or h1 < 0:
        raise ArithmeticError("negative cohomology dimension; inconsistent rank")
    return {
        "h0": h0,
        "chi": chi,
        "h1": h1,
        "rank": cert.rank,
        "points": len(prob.points),
        "columns": ncols,
        "certificate": cert.to_dict(),
    }


def alexander_cuspidal(C: TriPoly, cusps=None, bits=256, mode="exact", with_report=False):
    """Alexander polynomial (t^2-t+1)^s of an irreducible nodal-cuspidal curve,
    s the superabundance of degree d-3-d/6 curves through the cusps.

    Nodes impose no conditions and are ignored.  For degrees not divisible by
    6 the polynomial is trivial (reported with a warning flag).
    """
    from mwalex.singularities import classify_node_cusp, find_singular_points

    if not C.is_homogeneous():
        raise ValueError("expected a homogeneous curve polynomial")
    d = C.degree
    report = {"degree": d}
    if d % 6 != 0:
        report["warning"] = "degree not divisible by 6; Alexander polynomial is trivial"
        alex = AlexPoly({}, tracked=(1, 2, 3, 4, 6))
        return (alex, report) if with_report else alex
    if cusps is None:
        cusps = []
        for p in find_singular_points(C, bits=bits):
            if not p.exact:
                raise NotCuspidalNodal("singular point not expressible in the tower; supply cusps")
            kind = classify_node_cusp(C, p.coords)
            if kind == "cusp":
                cusps.append(p.coords)
            elif kind == "node":
                continue
            else:
                raise NotCuspidalNodal("curve has a singularity beyond nodes and cusps")
    m = d - 3 - d // 6
    result = superabundance(cusps, m, mode=mode, bits=bits)
    s = result["h1"]
    alex = AlexPoly({6: s}, tracked=(1, 2, 3, 4, 6))
    report.update(result)
    report["s"] = s
    return (alex, report) if with_report else alex


def check_degree_bound(d: int, alex: AlexPoly, delta=None):
    """deg Delta <= 5d/3 - 2, and in delta mode the multiplicity bound 5d/6 - 1."""
    deg = alex.degree
    bound = QQ(5 * d, 3) - 2
    ok = qq(deg) <= bound
    report = {
        "degree_curve": d,
        "degree_alexander": deg,
        "bound": str(bound),
        "pass": bool(ok),
        "slack": str(bound - deg),
    }
    if delta is not None:
        dbound = QQ(5 * d, 6) - 1
        if delta == 3:
            val = alex.s(3)
            label = "s3"
        elif delta == 4:
            val = alex.s(4)
            label = "s4"
        elif delta == 6:
            val = alex.s(3) + alex.s(6)
            label = "s3+s6"
        else:
            raise ValueError("delta mode must be 3, 4 or 6")
        report["delta"] = delta
        report["multiplicity"] = val
        report["multiplicity_label"] = label
        report["multiplicity_bound"] = str(dbound)
        report["multiplicity_pass"] = bool(qq(val) <= dbound)
        report["pass"] = bool(report["pass"] and report["multiplicity_pass"])
    return report
