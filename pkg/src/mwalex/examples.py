"""Built-in registry of worked examples.

Each entry rebuilds its curves, relations and sections from scratch, runs the
library against them, and compares with expected values.  Every expectation
carries a provenance label:

  reported - the value as published in the source material;
  derived  - computed independently by this package's own machinery;
  direct   - immediate definition-level arithmetic.

Where the published formulas do not expand to zero as printed, the registry
keeps the working sign-corrected variant as the primary relation and records
the printed variant's residual; nothing is silently corrected.
"""

from __future__ import annotations

from mwalex.algebra import QQ, AlexPoly, FieldSpec, alex_from_upoly, qq
from mwalex.exprparse import parse_upoly
from mwalex.global_alexander import alexander_cuspidal, check_degree_bound, superabundance
from mwalex.multipoly import RatFunc, TriPoly, format_tripoly, tri_divexact
from mwalex.mw_group import (
    CurveF,
    Section,
    add,
    double,
    mw_rank_from_alexander,
    negate,
    omega_action,
    on_curve,
    unit_matches,
    zomega_scalar,
)
from mwalex.quasitoric import QTRel, kummer_pullback, qt_from_section, qt_verify
from mwalex.singularities import CurveSpec, SingRecord, classify_curve_delta, divisibility_check


def _check(name, ok, expected, got, provenance, expected_failure=False):
    return {
        "name": name,
        "ok": bool(ok),
        "expected": expected,
        "got": got,
        "provenance": provenance,
        "expected_failure": expected_failure,
    }


def _vars(spec):
    return tuple(TriPoly.variable(spec, v) for v in "xyz")


def _status(checks):
    good = all(c["ok"] != c["expected_failure"] for c in checks)
    discrepancies = sum(1 for c in checks if c["expected_failure"])
    return ("pass" if good else "fail"), discrepancies


# ---------------------------------------------------------------------------
# shared curve constructions

def nine_cusp_sextic(spec):
    x, y, z = _vars(spec)
    conic = x ** 2 + y ** 2 + z ** 2 - 2 * (x * y + x * z + y * z)
    return conic, conic.substitute(x ** 3, y ** 3, z ** 3)


def tricuspidal_quartic(spec):
    x, y, z = _vars(spec)
    return x ** 2 * y ** 2 + y ** 2 * z ** 2 + z ** 2 * x ** 2 - 2 * x * y * z * (x + y + z)


def nine_cusp_relations(spec):
    """The four quasi-toric relations of the 9-cusp sextic, sign-coherent with
    the conic x^2+y^2+z^2-2(xy+xz+yz).  The published squares pair with these
    line products; two of the published line products and one square sign do
    not expand to zero and are kept in the discrepancy record."""
    x, y, z = _vars(spec)
    one = TriPoly.constant(spec, 1)
    m4 = TriPoly.constant(spec, -4)
    _, C69 = nine_cusp_sextic(spec)
    q2 = x ** 2 + y ** 2 + z ** 2 + x * z + y * z + x * y
    q3 = x ** 3 + y ** 3 + z ** 3 + 2 * (
        x * z ** 2 + x ** 2 * z + y * z ** 2 + x * y * z + x ** 2 * y + y ** 2 * z + x * y ** 2
    )
    rels = {
        "sigma0": QTRel((2, 3, 6), (one, m4, -C69), (x ** 3 + y ** 3 - z ** 3, x * y, one)),
        "sigma1": QTRel((2, 3, 6), (one, m4, -C69), (x ** 3 + z ** 3 - y ** 3, x * z, one)),
        "sigma2": QTRel((2, 3, 6), (one, m4, -C69), (y ** 3 + z ** 3 - x ** 3, y * z, one)),
        "sigma3": QTRel(
            (2, 3, 6),
            (TriPoly.constant(spec, -3), TriPoly.constant(spec, 4), -C69),
            (q3, q2, one),
        ),
    }
    return rels, C69


def nine_cusp_sections(tower):
    """Sections of u^3+v^2 = C69 over Q(w6)(c), c^3 = 4, fixing the cube-root
    and sign conventions under which sigma0 = -sigma1 - sigma2 + (2w6-1)sigma3
    holds on the nose (unit 1)."""
    x, y, z = _vars(tower)
    c = TriPoly.constant(tower, tower.rad())
    w6 = tower.omega(6)
    _, C69 = nine_cusp_sextic(tower)
    curve = CurveF.from_homogeneous(C69)
    xa, ya = x.dehomogenize("z"), y.dehomogenize("z")
    one = TriPoly.constant(tower, 1)
    q2 = (x ** 2 + y ** 2 + z ** 2 + x * z + y * z + x * y).dehomogenize("z")
    q3 = (
        x ** 3 + y ** 3 + z ** 3
        + 2 * (x * z ** 2 + x ** 2 * z + y * z ** 2 + x * y * z + x ** 2 * y + y ** 2 * z + x * y ** 2)
    ).dehomogenize("z")
    sections = {
        "sigma0": Section.from_polys(-(c * xa * ya).dehomogenize("z"), xa ** 3 + ya ** 3 - one),
        "sigma1": Section.from_polys(-(c * xa), xa ** 3 + one - ya ** 3),
        "sigma2": Section.from_polys(-(c * ya), ya ** 3 + one - xa ** 3),
        "sigma3": Section.from_polys(c * q2, (2 * w6 - 1) * q3),
    }
    return sections, curve


def quartic_generators(spec):
    """Generator relations 4 C2^3 + C3^2 = C43 L0^2 and the (x <-> swap)."""
    x, y, z = _vars(spec)
    w3 = spec.omega(3)
    C43 = tricuspidal_quartic(spec)
    L0 = x + y + z
    C2 = z * x + w3 * y * z - (1 + w3) * x * y
    C3 = (
        x ** 2 * y - x ** 2 * z - y ** 2 * x
        - (3 * (1 + 2 * w3)) * x * y * z
        + y ** 2 * z + z ** 2 * x - y * z ** 2
    )
    C2s = C2.substitute(x, z, y)
    C3s = C3.substitute(x, z, y)
    return C43, L0, (C2, C3), (C2s, C3s)


def kummer_twelve_curve(spec):
    x, y, z = _vars(spec)
    C43 = tricuspidal_quartic(spec)
    lines = (x + y + z, -8 * x + y + z, x - 8 * y + z)
    return kummer_pullback(C43, 3, lines), lines


def twelve_curve_cusps(tower):
    """The 39 cusps of the degree-12 curve over Q(zeta9)(3^(1/3))."""
    w3 = tower.omega(3)
    z9 = tower.gen()
    b = tower.rad()
    one, zero = tower.one(), tower.zero()
    pts = []
    for a in range(3):
        for c in range(3):
            pts.append((one, tower.scalar(-2) * w3 ** a, w3 ** c))
            pts.append((one, w3 ** a, tower.scalar(-2) * w3 ** c))
            pts.append((one, w3 ** a, w3 ** c))
    for j in range(3):
        pts.append((zero, one, z9 * w3 ** j))
        pts.append((zero, one, z9 ** 2 * w3 ** j))
        pts.append((one, zero, -b * w3 ** j))
        pts.append((one, -b * w3 ** j, zero))
    return pts


def two_cubics_curve(spec):
    x, y, z = _vars(spec)
    G1 = y ** 3 - z ** 3 + 3 * x ** 2 * z + 2 * x ** 3
    G2 = y ** 3 - z ** 3 + 3 * x ** 2 * z - 2 * x ** 3
    return G1, G2


# ---------------------------------------------------------------------------
# the entries

def run_ex_6_9(heavy=True):
    checks = []
    notes = []
    Q = FieldSpec(1)
    rels, C69 = nine_cusp_relations(Q)
    for name in ("sigma0", "sigma1", "sigma2", "sigma3"):
        v = qt_verify(rels[name])
        checks.append(_check("relation %s expands to zero" % name, v["verdict"] == "ok",
                             "ok", v["verdict"], "reported"))
    # the relation exactly as published pairs the sigma0 square with +4(xz)^3
    x, y, z = _vars(Q)
    printed = (x ** 3 + y ** 3 - z ** 3) ** 2 + 4 * (x * z) ** 3 - C69
    notes.append(
        "published sigma0 line product +4(xz)^3 leaves residual %s against this "
        "conic; the registry pairs the square with -4(xy)^3" % format_tripoly(printed)
    )

    # superabundance over Q(w3): 9 cusps, degree-2 matrix of rank 6
    K3 = FieldSpec(3)
    _, C69K = nine_cusp_sextic(K3)
    alex, report = alexander_cuspidal(C69K, with_report=True)
    checks.append(_check("superabundance matrix rank", report["rank"] == 6, 6,
                         report["rank"], "derived"))
    checks.append(_check("h0/chi/h1", (report["h0"], report["chi"], report["h1"]) == (0, -3, 3),
                         (0, -3, 3), (report["h0"], report["chi"], report["h1"]), "reported"))
    checks.append(_check("Alexander polynomial (t^2-t+1)^3",
                         alex.svec((1, 2, 3, 4, 6)) == (0, 0, 0, 0, 3),
                         (0, 0, 0, 0, 3), alex.svec((1, 2, 3, 4, 6)), "reported"))
    checks.append(_check("Mordell-Weil rank 6", mw_rank_from_alexander(alex) == 6,
                         6, mw_rank_from_alexander(alex), "reported"))
    bound = check_degree_bound(6, alex, delta=6)
    checks.append(_check("degree bound 6 <= 8", bound["pass"], True, bound["pass"], "reported"))

    # divisibility: phi6^3 divides the product of the nine local phi6's
    cusp_records = [SingRecord("A2", (1,)) for _ in range(9)]
    curve_spec = CurveSpec([(C69K, 1)], cusp_records)
    div = divisibility_check(curve_spec, alex)
    checks.append(_check("local-global divisibility", div["ok"], True, div["ok"], "derived"))

    if heavy:
        tower = FieldSpec(6, radical=(3, 4))
        sections, curve = nine_cusp_sections(tower)
        closure = all(on_curve(s, curve) for s in sections.values())
        checks.append(_check("sections on curve", closure, True, closure, "derived"))
        part = zomega_scalar((-1, 2), sections["sigma3"], curve)
        m12 = add(negate(sections["sigma1"], curve), negate(sections["sigma2"], curve), curve)
        total = add(m12, part, curve)
        inter_ok = all(on_curve(s, curve) for s in (part, m12, total))
        checks.append(_check("group-law intermediates on curve", inter_ok, True,
                             inter_ok, "derived"))
        unit = unit_matches(total.normalized(force=True), sections["sigma0"], curve)
        checks.append(_check("-s1 - s2 + (2w6-1)s3 = unit * s0", unit is not None,
                             "some unit", unit, "reported"))
        notes.append("realized unit in the group relation: %s" % unit)
    return {"checks": checks, "notes": notes}


def run_ex_4_3(heavy=True):
    checks = []
    notes = []
    K3 = FieldSpec(3)
    C43, L0, (C2, C3), (C2s, C3s) = quartic_generators(K3)
    one = TriPoly.constant(K3, 1)
    lhs = C43 * L0 ** 2
    for name, (c2, c3) in (("sigma1", (C2, C3)), ("sigma2", (C2s, C3s))):
        rel = QTRel((2, 3, 6), (one, TriPoly.constant(K3, 4), -lhs), (c3, c2, one))
        v = qt_verify(rel)
        checks.append(_check("generator %s expands to zero" % name, v["verdict"] == "ok",
                             "ok", v["verdict"], "reported"))

    if heavy:
        tower = FieldSpec(3, radical=(3, 4))
        C43t, L0t, (C2t, C3t), (C2st, C3st) = quartic_generators(tower)
        c = TriPoly.constant(tower, tower.rad())
        curve = CurveF.from_homogeneous(C43t * L0t ** 2)
        s1 = Section.from_polys((c * C2t).dehomogenize("z"), C3t.dehomogenize("z"))
        s2 = Section.from_polys((c * C2st).dehomogenize("z"), C3st.dehomogenize("z"))
        checks.append(_check("generator sections on curve",
                             on_curve(s1, curve) and on_curve(s2, curve), True,
                             on_curve(s1, curve) and on_curve(s2, curve), "derived"))
        x, y, z = _vars(tower)
        expected_lines = [x, x - z, z, z - y, y, x - y]
        got_lines = []
        wj = s2
        combos = []
        for j in range(6):
            R = add(wj, s1, curve).normalized(force=True)
            combos.append(R)
            rel = qt_from_section(R, curve)
            h = rel.h[2]
            match = None
            for idx, ln in enumerate(expected_lines):
                try:
                    q = tri_divexact(h, ln)
                    if q.is_constant():
                        match = idx
                        break
                except Exception:
                    continue
            got_lines.append(match)
            wj = omega_action(wj, curve)
        expected_order = list(range(6))
        checks.append(_check("h-lines of the six combinations, in published order",
                             got_lines == expected_order,
                             [format_tripoly(l) for l in expected_lines],
                             [None if m is None else format_tripoly(expected_lines[m]) for m in got_lines],
                             "reported"))

        # the published degree-4 and degree-6 polynomials of the first combination
        w3e = tower.omega(3)
        w6e = tower.omega(6)
        C411 = (x ** 4 + z ** 2 * y ** 2 + x ** 2 * z ** 2 - 2 * x * y * z ** 2
                - 2 * x * y ** 2 * z + x ** 3 * z - 2 * x ** 2 * y * z + x ** 3 * y
                + x ** 2 * y ** 2).scaled(w6e / 3)
        C611 = (x ** 4 + x ** 3 * y + x ** 3 * z - 2 * x ** 2 * z ** 2 + 4 * x ** 2 * y * z
                - 2 * x ** 2 * y ** 2 + 4 * x * y ** 2 * z + 4 * x * y * z ** 2
                - 2 * z ** 2 * y ** 2) * (2 * x ** 2 + x * y - y * z + z * x)
        R0 = combos[0]
        xa = x.dehomogenize("z")
        f_aff = (R0.A * RatFunc(xa ** 2)).normalized(force=True)
        g_aff = (R0.B * RatFunc(xa ** 3)).normalized(force=True)
        from mwalex.multipoly import _ratio_constant
        from mwalex.algebra import format_field_elem

        ratio_f = ratio_g = None
        if f_aff.is_poly():
            try:
                target = (c * C411).dehomogenize("z")
                ratio_f = _ratio_constant(f_aff.as_poly(), target)
            except ValueError:
                ratio_f = None
        if g_aff.is_poly():
            try:
                ratio_g = _ratio_constant(g_aff.as_poly(), C611.dehomogenize("z"))
            except ValueError:
                ratio_g = None
        checks.append(_check("degree-4 part matches published C4[1,1] up to one scalar",
                             ratio_f is not None, "a single scalar",
                             None if ratio_f is None else format_field_elem(ratio_f), "reported"))
        checks.append(_check("degree-6 part matches published C6[1,1] up to one scalar",
                             ratio_g is not None, "a single scalar",
                             None if ratio_g is None else format_field_elem(ratio_g), "reported"))
        if ratio_f is not None and ratio_g is not None:
            notes.append("scalars: f = (%s) * cbrt(4)*C4[1,1], g = (%s) * C6[1,1]"
                         % (format_field_elem(ratio_f), format_field_elem(ratio_g)))

    # the non-reduced sextic C43*L0^2 as a 6-essential curve: divisibility
    global_alex = alex_from_upoly(parse_upoly("(t^2-t+1)^2"))
    records = [SingRecord("A2", (1,)) for _ in range(3)]
    records += [SingRecord("A3", (2, 1)) for _ in range(2)]
    spec_curve = CurveSpec([(C43, 1), (L0, 2)], records)
    div = divisibility_check(spec_curve, global_alex)
    checks.append(_check("tacnodal sextic local-global divisibility", div["ok"], True,
                         div["ok"], "derived"))
    notes.append("witness exponents for the divisibility: %s" % div["witness_exponents"])
    notes.append(
        "the published twisted Alexander polynomial '(t^3-t+1)^2' is used as "
        "(t^2-t+1)^2, the unique cyclotomic reading compatible with a rank-two "
        "group of relations"
    )
    return {"checks": checks, "notes": notes}


def run_ex_12_39(heavy=True):
    checks = []
    notes = []
    Q = FieldSpec(1)
    C12, _ = kummer_twelve_curve(Q)
    checks.append(_check("Kummer pullback has degree 12", C12.degree == 12, 12,
                         C12.degree, "reported"))
    tower = FieldSpec(9, radical=(3, 3))
    C12t, _ = kummer_twelve_curve(tower)
    cusps = twelve_curve_cusps(tower)
    checks.append(_check("39 constructed cusp candidates", len(set(cusps)) == 39, 39,
                         len(set(cusps)), "reported"))
    from mwalex.singularities import classify_node_cusp, _is_singular_at

    all_cusps = all(
        _is_singular_at(C12t, p) and classify_node_cusp(C12t, p) == "cusp" for p in cusps
    )
    checks.append(_check("every candidate is a cusp of the curve", all_cusps, True,
                         all_cusps, "derived"))

    sup = superabundance(cusps, 7, mode="exact")
    checks.append(_check("exact rank of the 39x36 matrix", sup["rank"] == 35, 35,
                         sup["rank"], "derived"))
    checks.append(_check("h0 = 1", sup["h0"] == 1, 1, sup["h0"], "reported"))
    checks.append(_check("h1 = 4", sup["h1"] == 4, 4, sup["h1"], "reported"))

    if heavy:
        emb = [[tower.embed(c, 256) for c in p] for p in cusps]
        sup_num = superabundance(emb, 7, mode="numeric", bits=256)
        checks.append(_check("numeric rank agrees", sup_num["rank"] == 35, 35,
                             sup_num["rank"], "derived"))
        notes.append("numeric certificate: %s" % sup_num["certificate"])

    alex = AlexPoly({6: sup["h1"]})
    checks.append(_check("Alexander polynomial (t^2-t+1)^4",
                         alex.svec((1, 2, 3, 4, 6)) == (0, 0, 0, 0, 4),
                         (0, 0, 0, 0, 4), alex.svec((1, 2, 3, 4, 6)), "reported"))
    bound = check_degree_bound(12, alex, delta=6)
    checks.append(_check("degree bound 8 <= 18", bound["pass"], True, bound["pass"],
                         "reported"))
    checks.append(_check("Mordell-Weil rank 8", mw_rank_from_alexander(alex) == 8, 8,
                         mw_rank_from_alexander(alex), "derived"))
    records = [SingRecord("A2", (1,)) for _ in range(39)]
    spec_curve = CurveSpec([(C12t, 1)], records)
    div = divisibility_check(spec_curve, alex)
    checks.append(_check("local-global divisibility", div["ok"], True, div["ok"], "derived"))
    return {"checks": checks, "notes": notes}


def run_ex_4_4_2(heavy=True):
    checks = []
    notes = []
    Q = FieldSpec(1)
    x, y, z = _vars(Q)
    one = TriPoly.constant(Q, 1)
    C4 = 2 * x * y ** 3 + 3 * x ** 2 * y ** 2 + 108 * y ** 2 * z ** 2 - x ** 4
    C2 = 3 * x ** 2 + 2 * x * y + 108 * z ** 2
    C2_literal = 3 * x ** 2 + 2 * x * y + 108 * x ** 2

    printed = QTRel((2, 4, 4), (C2, one, -C4), (y, x, one))
    v = qt_verify(printed)
    checks.append(_check("published relation C2 h1^2 + h2^4 - C4 h3^4", v["verdict"] == "ok",
                         "residual 2*x^4", "%s (%s)" % (v["verdict"], v.get("residual")),
                         "reported", expected_failure=True))
    checks.append(_check("published relation residual is 2*x^4",
                         v.get("residual") == "2*x^4", "2*x^4", v.get("residual"), "derived"))

    corrected = QTRel((2, 4, 4), (C2, -one, -C4), (y, x, one))
    v2 = qt_verify(corrected)
    checks.append(_check("sign-corrected relation C2 h1^2 - h2^4 - C4 h3^4",
                         v2["verdict"] == "ok", "ok", v2["verdict"], "derived"))

    literal = QTRel((2, 4, 4), (C2_literal, one, -C4), (y, x, one))
    v3 = qt_verify(literal)
    notes.append(
        "with the conic exactly as typeset (repeated x^2 term) the relation "
        "leaves residual %s; the registry reads the repeated x^2 as z^2"
        % v3.get("residual")
    )
    return {"checks": checks, "notes": notes}


def run_ex_3_3_3(heavy=True):
    checks = []
    notes = []
    Q = FieldSpec(1)
    x, y, z = _vars(Q)
    rel1 = QTRel((3, 3, 3), (y ** 3 - z ** 3, z ** 3 - x ** 3, x ** 3 - y ** 3), (x, y, z))
    v1 = qt_verify(rel1)
    checks.append(_check("x^3(y^3-z^3)+y^3(z^3-x^3)+z^3(x^3-y^3) = 0",
                         v1["verdict"] == "ok", "ok", v1["verdict"], "reported"))
    checks.append(_check("kappa = 6, omega = 3", (v1["kappa"], v1["omega"]) == (6, 3),
                         (6, 3), (v1["kappa"], v1["omega"]), "direct"))

    K3 = FieldSpec(3)
    x3, y3, z3 = _vars(K3)
    w = K3.omega(3)

    def F_i(i):
        return (y3 - (w ** i) * z3) * (z3 - (w ** (i + 1)) * x3) * (x3 - (w ** (i + 2)) * y3)

    l1 = (w - w ** 2) * x3 + (w - w ** 2) * y3 + (w ** 2 - 1) * z3
    l2 = (w - w ** 2) * z3 + (w - w ** 2) * x3 + (w ** 2 - 1) * y3
    l3 = (w - w ** 2) * y3 + (w - w ** 2) * z3 + (w ** 2 - 1) * x3
    rel2 = QTRel((3, 3, 3), (F_i(1), F_i(2), F_i(3)), (l1, l2, l3))
    v2 = qt_verify(rel2)
    checks.append(_check("second independent (3,3,3) relation", v2["verdict"] == "ok",
                         "ok", v2["verdict"], "reported"))
    full = (y3 ** 3 - z3 ** 3) * (z3 ** 3 - x3 ** 3) * (x3 ** 3 - y3 ** 3)
    prod = F_i(1) * F_i(2) * F_i(3)
    checks.append(_check("supports agree: F1 F2 F3 equals the nine-line nonic",
                         (prod - full).is_zero(), True, (prod - full).is_zero(), "derived"))
    return {"checks": checks, "notes": notes}


def run_ex_2a2_3a5(heavy=True):
    checks = []
    notes = []
    Q = FieldSpec(1)
    x, y, z = _vars(Q)
    one = TriPoly.constant(Q, 1)
    G1, G2 = two_cubics_curve(Q)
    f2 = y * z + y ** 2 + z ** 2 - x ** 2
    f3 = z ** 3 - x ** 2 * z - 2 * y * x ** 2 + 2 * y * z ** 2 + 2 * y ** 2 * z + y ** 3
    rel1 = QTRel((2, 3, 6),
                 (TriPoly.constant(Q, 3), TriPoly.constant(Q, -4), G1 * G2),
                 (f3, f2, one))
    v1 = qt_verify(rel1)
    checks.append(_check("3 f3^2 - 4 f2^3 + F1 F2 = 0", v1["verdict"] == "ok", "ok",
                         v1["verdict"], "reported"))
    rel2 = QTRel((3, 3, 3), (TriPoly.constant(Q, 4), -G1, G2), (x, one, one))
    v2 = qt_verify(rel2)
    checks.append(_check("4 x^3 - F1 + F2 = 0", v2["verdict"] == "ok", "ok",
                         v2["verdict"], "reported"))

    # classification of the union of the two cuspidal cubics
    K3 = FieldSpec(3)
    G1K, G2K = two_cubics_curve(K3)
    records = [
        SingRecord("A2", (1,)),
        SingRecord("A2", (1,)),
        SingRecord("A5", (1, 1)),
        SingRecord("A5", (1, 1)),
        SingRecord("A5", (1, 1)),
    ]
    curve = CurveSpec([(G1K, 1), (G2K, 1)], records)
    global_alex = alex_from_upoly(parse_upoly("(t^2-t+1)^2*(t^2+t+1)"))
    v6 = classify_curve_delta(curve, global_alex, 6)
    checks.append(_check("curve is 6-total", v6 == "total", "total", v6, "reported"))
    v3 = classify_curve_delta(curve, global_alex, 3)
    checks.append(_check("curve is 3-partial (not 3-total)", v3 == "partial", "partial",
                         v3, "reported"))
    div = divisibility_check(curve, global_alex)
    checks.append(_check("local-global divisibility", div["ok"], True, div["ok"], "derived"))
    notes.append("witness exponents: %s" % div["witness_exponents"])

    # the singular points themselves, located exactly
    from mwalex.singularities import classify_node_cusp, find_singular_points

    pts = find_singular_points(G1K * G2K)
    kinds = sorted(classify_node_cusp(G1K * G2K, p.coords) for p in pts if p.exact)
    checks.append(_check("five singular points: two cusps and three tangential contacts",
                         len(pts) == 5 and kinds.count("cusp") == 2 and kinds.count("other") == 3,
                         "2 cusps + 3 others", "%d points: %s" % (len(pts), kinds), "derived"))
    return {"checks": checks, "notes": notes}


class ExampleEntry:
    def __init__(self, name, description, runner, heavy_parts=False):
        self.name = name
        self.description = description
        self.runner = runner
        self.heavy_parts = heavy_parts

    def run(self, heavy=True):
        result = self.runner(heavy=heavy)
        status, discrepancies = _status(result["checks"])
        return {
            "name": self.name,
            "description": self.description,
            "status": status,
            "documented_discrepancies": discrepancies,
            "checks": result["checks"],
            "notes": result["notes"],
        }


REGISTRY = [
    ExampleEntry(
        "ex-6-9",
        "nine-cusp sextic: four quasi-toric relations, superabundance 3, and the "
        "group relation -s1 - s2 + (2w6-1)s3 against s0 over Q(w6)(4^(1/3))",
        run_ex_6_9,
        heavy_parts=True,
    ),
    ExampleEntry(
        "ex-4-3",
        "tricuspidal quartic with bitangent: generator relations over Q(w3) and the "
        "six combinations w6^j s2 + s1 with line-power cofactors",
        run_ex_4_3,
        heavy_parts=True,
    ),
    ExampleEntry(
        "ex-12-39",
        "degree-12 curve with 39 cusps from a Kummer cover: superabundance 4 via "
        "exact rank 35 over Q(zeta9)(3^(1/3)) and the 256-bit numeric path",
        run_ex_12_39,
        heavy_parts=True,
    ),
    ExampleEntry(
        "ex-4-4-2",
        "sextic with A15+A3+A1 supporting a (2,4,4) relation; the published sign "
        "fails with residual 2*x^4 and the corrected sign passes",
        run_ex_4_4_2,
    ),
    ExampleEntry(
        "ex-3-3-3",
        "nine lines: the classical (3,3,3) relation and the independent one over Q(w3)",
        run_ex_3_3_3,
    ),
    ExampleEntry(
        "ex-2a2-3a5",
        "union of two cuspidal cubics (2A2+3A5): both relation types, 6-total and "
        "3-partial classification",
        run_ex_2a2_3a5,
    ),
]


def examples_registry():
    return list(REGISTRY)


def run_example(name, heavy=True):
    for entry in REGISTRY:
        if entry.name == name:
            return entry.run(heavy=heavy)
    raise KeyError("unknown example %r" % name)


def run_all(heavy=True):
    return [entry.run(heavy=heavy) for entry in REGISTRY]
