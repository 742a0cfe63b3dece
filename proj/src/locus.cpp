#include "cevian/locus.hpp"

#include "cevian/error.hpp"
#include "cevian/polynomial.hpp"

#include <algorithm>

namespace cevian {

namespace {

std::size_t index_of(Vertex v) { return static_cast<std::size_t>(v); }

// Moves the coordinate singled out for A into the slot of v.
template <typename T> std::array<T, 3> permute(Vertex v, const T &a, const T &b, const T &c) {
    switch (v) {
    case Vertex::A: return {a, b, c};
    case Vertex::B: return {c, a, b};
    case Vertex::C: return {b, c, a};
    }
    return {a, b, c};
}

const BaryPoint &pick(bool first, const BaryPoint &a, const BaryPoint &b) { return first ? a : b; }

bool same_side(const BaryLine &l, const BaryPoint &a, const BaryPoint &b) {
    return l.evaluate(a).sign() * l.evaluate(b).sign() > 0;
}

// K_G for a centroid G: the homothety about G with ratio -1/2.
AffineMap centroid_complement(const BaryPoint &g) { return AffineMap::homothety(g, FieldElement::fraction(-1, 2)); }

} // namespace

std::string_view to_string(Vertex v) noexcept {
    switch (v) {
    case Vertex::A: return "A";
    case Vertex::B: return "B";
    case Vertex::C: return "C";
    }
    return "?";
}

BaryPoint vertex_point(Vertex v) {
    Triple t{};
    t[index_of(v)] = 1;
    return BaryPoint(t);
}

VertexLocus vertex_locus(Vertex v) {
    const FieldElement half = FieldElement::fraction(1, 2);
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = i == j ? FieldElement(0) : half;
    }
    const std::size_t k = index_of(v);
    m(k, k) = -1;
    std::vector<BaryPoint> others;
    for (Vertex w : {Vertex::A, Vertex::B, Vertex::C}) {
        if (w != v) others.push_back(vertex_point(w));
    }
    const BaryPoint apex = vertex_point(v);
    return {v, Conic(m), {others[0], others[1], midpoint(apex, others[0]), midpoint(apex, others[1])}};
}

BaryPoint locus_param(Vertex v, const FieldElement &t) {
    for (int bad : {-1, 0, 1}) {
        if (t == FieldElement(bad)) {
            throw Error(ErrorKind::ExcludedParameter, "t = " + std::to_string(bad) + " gives an excluded point");
        }
    }
    const FieldElement one(1);
    const auto c = permute<FieldElement>(v, one + t, one - t, t * (one + t));
    return BaryPoint(c[0], c[1], c[2]);
}

std::optional<Vertex> vertex_orthocenter_check(const BaryPoint &p) {
    const BaryPoint h = derive_configuration(p).H;
    for (Vertex v : {Vertex::A, Vertex::B, Vertex::C}) {
        if (h == vertex_point(v)) return v;
    }
    return std::nullopt;
}

Lemma21 lemma21_check(const BaryPoint &p) {
    const Configuration c = derive_configuration(p);
    const BaryPoint a = ref::A();
    const BaryPoint e0(1, 0, 1), f0(1, 1, 0);
    const Traces &t = c.traces;
    const Traces &t3 = c.traces_prime;
    Lemma21 out{};
    out.a = c.H == a;
    // AFQE is a parallelogram: Q - E = F - A and Q - F = E - A.
    out.b = displacement(t.E, c.Q) == displacement(a, t.F) && displacement(t.F, c.Q) == displacement(a, t.E);
    const std::array<BaryPoint, 4> line_c{t3.F, c.Q, e0, complement(t3.E)};
    const std::array<BaryPoint, 4> line_d{t3.E, c.Q, f0, complement(t3.F)};
    out.c = collinear(line_c);
    out.d = collinear(line_d);
    return out;
}

FieldElement median_trace_ratio(const BaryPoint &p) {
    const BaryPoint d0(0, 1, 1);
    return signed_ratio(d0, cevian_traces(p).D, ref::C());
}

SpecialConfig special_config(Variant variant) {
    const FieldElement r2 = FieldElement::root_of(2);
    const FieldElement s = variant == Variant::plus ? r2 : -r2;
    const FieldElement one(1);
    const BaryPoint p(one, one + s, one - s);
    SpecialConfig out{derive_configuration(p), {}};
    const Configuration &c = out.config;
    const BaryPoint a = ref::A(), d0(0, 1, 1);
    const AffineMap k_inv = AffineMap::anticomplement();
    const BaryLine bc(1, 0, 0);
    const BaryLine l = k_inv(k_inv(bc));
    Report &r = out.checks;
    r.add("P on l_G", BaryLine(-2, 1, 1).contains(p));
    r.add("H = A", c.H == a, c.H.to_string());
    r.add("O = D0", c.O == d0, c.O.to_string());
    r.add("D3 = midpoint(A, P')", c.traces_prime.D == midpoint(a, c.P_prime));
    const FieldElement ratio = vector_ratio(displacement(c.O, c.P_prime), displacement(c.O, p));
    r.add("P' - O = -3 (P - O)", ratio == FieldElement(-3), ratio.to_string());
    r.add("C~_O = iota(K^-2(BC))", c.circumconic_O == circumconic_of_line(l));
    r.add("C~_O contains P", c.circumconic_O.contains(p));
    r.add("P = centroid(O, D, Q)", p == centroid(c.O, c.traces.D, c.Q));
    r.add("A3 = T_P(D3) = midpoint(O, D)", c.T_P(c.traces_prime.D) == midpoint(c.O, c.traces.D));
    const FieldElement od = median_trace_ratio(p);
    r.add("(D - D0)^2 = 2 (C - D0)^2", od * od == FieldElement(2), od.to_string());
    r.add("M is a translation", classify_matrix(c.M).kind == MClassification::Kind::translation);
    return out;
}

Report equilateral_embedding_check() {
    const FieldElement r3 = FieldElement::root_of(3);
    using Cart = std::array<FieldElement, 2>;
    const Cart ca{0, r3}, cb{-1, 0}, cc{1, 0};
    const auto embed = [&](const BaryPoint &p) {
        const Triple n = p.normalized();
        return Cart{n[0] * ca[0] + n[1] * cb[0] + n[2] * cc[0], n[0] * ca[1] + n[1] * cb[1] + n[2] * cc[1]};
    };
    const auto dist2 = [&](const BaryPoint &x, const BaryPoint &y) {
        const Cart a = embed(x), b = embed(y);
        const FieldElement dx = a[0] - b[0], dy = a[1] - b[1];
        return dx * dx + dy * dy;
    };
    const Configuration c = special_config(Variant::minus).config;
    const BaryPoint a = ref::A(), b = ref::B(), cv = ref::C(), d0(0, 1, 1);
    const BaryPoint a_tilde = anticomplement(a);
    Report r;
    const auto expect = [&](const std::string &name, const FieldElement &value, int target) {
        r.add(name, value == FieldElement(target), value.to_string());
    };
    expect("AB^2 = 4", dist2(a, b), 4);
    expect("BC^2 = 4", dist2(b, cv), 4);
    expect("CA^2 = 4", dist2(cv, a), 4);
    expect("D0D^2 = 2", dist2(d0, c.traces.D), 2);
    r.add("D beyond C", (embed(c.traces.D)[0] - 1).sign() > 0);
    expect("AQ^2 = 2", dist2(a, c.Q), 2);
    expect("BF3^2 = 2", dist2(b, c.traces_prime.F), 2);
    expect("P'A~^2 = 8", dist2(c.P_prime, a_tilde), 8);
    return r;
}

Section4Config section4_config_from(const BaryPoint &p) {
    require_valid(p, true);
    if (classify_M(p).kind != MClassification::Kind::translation) {
        throw Error(ErrorKind::NotTranslation, "M is not a translation for " + p.to_string());
    }
    const Configuration c = derive_configuration(p);
    const Conic &conic = *c.cevian_conic;
    const BaryPoint g = ref::G();
    const BaryLine gv = join(g, *c.V);
    const BaryLine through_g = join(g, infinite_point(join(p, c.P_prime)));
    const auto hits = line_conic_intersect(conic, through_g).points;
    if (hits.size() != 2) throw Error(ErrorKind::DegenerateConfiguration, "line through G parallel to PP' is not a secant");
    const bool first_is_e = same_side(gv, hits[0], c.Q_prime);
    const BaryPoint e = pick(first_is_e, hits[0], hits[1]);
    const BaryPoint f = pick(first_is_e, hits[1], hits[0]);
    const BaryPoint e_prime = midpoint(e, g);
    const BaryPoint f_prime = midpoint(g, f);
    const BaryPoint z = *c.Z;
    const BaryLine asym_a = join(z, f_prime);
    const BaryLine asym_b = join(z, e_prime);
    const BaryPoint a_inf = infinite_point(asym_a);
    const BaryPoint b_inf = infinite_point(asym_b);
    if (!conic.contains(a_inf) || !conic.contains(b_inf) || !(tangent_at(conic, a_inf) == asym_a) ||
        !(tangent_at(conic, b_inf) == asym_b)) {
        throw Error(ErrorKind::DegenerateConfiguration, "ZE' and ZF' are not the asymptotes");
    }
    return Section4Config{
        .H = c.H,
        .U = *c.U,
        .P = p,
        .V = *c.V,
        .Z = z,
        .G = g,
        .O = c.O,
        .Q = c.Q,
        .Q_prime = c.Q_prime,
        .O_prime = c.O_prime,
        .P_prime = c.P_prime,
        .C = conic,
        .E = e,
        .F = f,
        .E_prime = e_prime,
        .F_prime = f_prime,
        .A_inf = a_inf,
        .B_inf = b_inf,
        .T_P = c.T_P,
    };
}

Section4Config canonical_section4_config() {
    const FieldElement r2 = FieldElement::root_of(2);
    return section4_config_from(BaryPoint(1, FieldElement(1) + r2, FieldElement(1) - r2));
}

BaryPoint projectivity_pi(const Section4Config &cfg, const BaryPoint &y) {
    const BaryLine gv = join(cfg.G, cfg.V);
    if (!gv.contains(y)) throw Error(ErrorKind::NotCollinear, "point " + y.to_string() + " is not on GV");
    return meet(join(cfg.P, cfg.T_P(y)), gv);
}

Report section4_structure_checks(const Section4Config &cfg) {
    Report r;
    r.add("Z = midpoint(H, P) = midpoint(U, V)", cfg.Z == midpoint(cfg.H, cfg.P) && cfg.Z == midpoint(cfg.U, cfg.V));
    r.add("O = midpoint(U, P)", cfg.O == midpoint(cfg.U, cfg.P));
    r.add("Q' = midpoint(H, U)", cfg.Q_prime == midpoint(cfg.H, cfg.U));
    r.add("Q = midpoint(P, V)", cfg.Q == midpoint(cfg.P, cfg.V));
    r.add("G = UV . HO", cfg.G == meet(join(cfg.U, cfg.V), join(cfg.H, cfg.O)));
    r.add("G = midpoint(E, F)", cfg.G == midpoint(cfg.E, cfg.F));
    r.add("C = PQHQ'P'", cfg.C == conic_through_5(cfg.P, cfg.Q, cfg.H, cfg.Q_prime, cfg.P_prime));
    r.add("C is a hyperbola", classify_affine_type(cfg.C) == AffineType::hyperbola);
    r.add("GV misses C", line_conic_intersect(cfg.C, join(cfg.G, cfg.V)).discriminant_sign < 0);
    r.add("VE, VF tangent to C",
          tangent_at(cfg.C, cfg.E).contains(cfg.V) && tangent_at(cfg.C, cfg.F).contains(cfg.V));
    return r;
}

namespace {

struct Pencil {
    Conic reflected;
    bool degenerate;
};

Pencil reflected_conic(const Section4Config &cfg, const BaryPoint &a1) {
    if (!cfg.C.contains(a1)) throw Error(ErrorKind::PointNotOnConic, "A1 = " + a1.to_string() + " is not on C");
    if (a1.is_infinite()) throw Error(ErrorKind::InfinitePointArgument, "A1 is at infinity");
    const BaryPoint d0 = centroid_complement(cfg.G)(a1);
    Conic reflected = cfg.C.image(AffineMap::point_reflection(d0));
    const bool degenerate = reflected == cfg.C || reflected.contains(a1);
    return {std::move(reflected), degenerate};
}

} // namespace

InscribedTriangle inscribed_triangle(const Section4Config &cfg, const BaryPoint &a1) {
    const Pencil pencil = reflected_conic(cfg, a1);
    InscribedTriangle out;
    if (pencil.degenerate) {
        out.status = InscribedTriangle::Status::degenerate;
        return out;
    }
    const auto pts = conic_conic_intersect_shared_infinity(cfg.C, pencil.reflected);
    if (pts.size() != 2) return out;
    const Triple na = a1.normalized();
    const Mat3 tri = Mat3::from_columns(na, pts[0].normalized(), pts[1].normalized());
    const bool positive = tri.determinant().sign() > 0;
    out.status = InscribedTriangle::Status::ok;
    out.B1 = pick(positive, pts[0], pts[1]);
    out.C1 = pick(positive, pts[1], pts[0]);
    return out;
}

bool admissible(const Section4Config &cfg, const BaryPoint &a1) {
    if (!cfg.C.contains(a1)) throw Error(ErrorKind::PointNotOnConic, "A1 = " + a1.to_string() + " is not on C");
    if (a1.is_infinite()) return false;
    const Pencil pencil = reflected_conic(cfg, a1);
    if (pencil.degenerate) return false;
    const auto line = radical_line(cfg.C, pencil.reflected);
    if (!line) return false;
    const auto hit = line_conic_intersect(cfg.C, *line, Adjoin::never);
    if (hit.discriminant_sign <= 0) return false;
    if (hit.extension) {
        // Both roots exist but are not computed; one is infinite exactly when
        // the line's infinite point is on C.
        return line->is_infinity() ? false : !cfg.C.contains(infinite_point(*line));
    }
    return std::all_of(hit.points.begin(), hit.points.end(), [](const BaryPoint &q) { return q.is_ordinary(); });
}

BaryPoint reconstruct_P(const Section4Config &cfg, const BaryPoint &a1, int orientation) {
    if (orientation != 1 && orientation != 2) throw Error(ErrorKind::BadParameter, "orientation must be 1 or 2");
    const InscribedTriangle tri = inscribed_triangle(cfg, a1);
    if (tri.status != InscribedTriangle::Status::ok) {
        throw Error(ErrorKind::DegenerateConfiguration, "A1 = " + a1.to_string() + " is not admissible");
    }
    const BaryPoint &second = orientation == 1 ? *tri.B1 : *tri.C1;
    const BaryPoint &third = orientation == 1 ? *tri.C1 : *tri.B1;
    const AffineMap to_abc = map_from_triangles({a1, second, third}, {ref::A(), ref::B(), ref::C()});
    return to_abc(cfg.P);
}

std::vector<AdmissibleSample> sample_admissible(const Section4Config &cfg, std::size_t n, std::uint32_t seed) {
    std::vector<AdmissibleSample> out;
    for (const BaryPoint &source : es_sample(n + 4, seed)) {
        if (out.size() == n) break;
        if (source == cfg.P) continue;
        const Configuration c = derive_configuration(source);
        const AffineMap onto = map_from_triangles({c.H, *c.U, source}, {cfg.H, cfg.U, cfg.P});
        out.push_back({onto(ref::A()), source});
    }
    return out;
}

std::vector<CurveLocusPoint> es_locus_intersection(Vertex v) {
    const Polynomial one = Polynomial::constant(1);
    const Polynomial t = Polynomial::x();
    const auto c = permute<Polynomial>(v, one + t, one - t, t * (one + t));
    const Polynomial &x = c[0], &y = c[1], &z = c[2];
    const Polynomial yz = y + z, xz = x + z, xy = x + y;
    const Polynomial cubic = x * yz * yz + y * xz * xz + z * xy * xy;

    std::vector<CurveLocusPoint> out;
    for (const auto &root : real_roots(cubic)) {
        const auto p = permute<FieldElement>(v, FieldElement(1) + root.value, FieldElement(1) - root.value,
                                             root.value * (FieldElement(1) + root.value));
        out.push_back({BaryPoint(p[0], p[1], p[2]), root.multiplicity});
    }
    // The parametrization has degree 2, so the intersection number is 6; the
    // degree drop is the multiplicity at t = infinity.
    const int at_infinity = 6 - cubic.degree();
    if (at_infinity > 0) {
        const auto p = permute<FieldElement>(v, 0, 0, 1);
        out.push_back({BaryPoint(p[0], p[1], p[2]), at_infinity});
    }
    return out;
}

} // namespace cevian
