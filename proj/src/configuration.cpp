#include "cevian/configuration.hpp"

#include "cevian/error.hpp"

namespace cevian {

namespace {

std::optional<BaryPoint> meet_if_distinct(const BaryPoint &a, const BaryPoint &b, const BaryPoint &c,
                                          const BaryPoint &d) {
    if (a == b || c == d) return std::nullopt;
    const BaryLine l1 = join(a, b);
    const BaryLine l2 = join(c, d);
    if (l1 == l2) return std::nullopt;
    return meet(l1, l2);
}

// S as the intersection OQ.GV, then O'Q'.GV, then the closed formula.
BaryPoint locate_S(const Configuration &c) {
    if (c.V) {
        if (auto s = meet_if_distinct(c.O, c.Q, ref::G(), *c.V)) return *s;
        if (auto s = meet_if_distinct(c.O_prime, c.Q_prime, ref::G(), *c.V)) return *s;
    }
    return s_formula(c.P);
}

} // namespace

Configuration derive_configuration(const BaryPoint &p) {
    require_valid(p);
    const BaryPoint p_prime = isotomic(p);
    const BaryPoint q = complement(p_prime);
    const BaryPoint q_prime = complement(p);
    const AffineMap t_p = cevian_map(p);
    const AffineMap t_pp = cevian_map(p_prime);
    const AffineMap k = AffineMap::complement();
    const AffineMap k_inv = AffineMap::anticomplement();

    const BaryPoint h = k_inv(t_pp.inverse()(k(q)));
    Configuration c{
        .P = p,
        .P_prime = p_prime,
        .Q = q,
        .Q_prime = q_prime,
        .H = h,
        .O = complement(h),
        .O_prime = t_p.inverse()(k(q_prime)),
        .traces = cevian_traces(p),
        .traces_prime = cevian_traces(p_prime),
        .T_P = t_p,
        .T_P_prime = t_pp,
        .M = t_p * k_inv * t_pp,
        .circumconic_O = circumconic_O(p),
        .inconic = inconic(p),
        .V = std::nullopt,
        .Z = std::nullopt,
        .U = std::nullopt,
        .cevian_conic = std::nullopt,
        .S = p,
    };
    if (!on_median(p)) {
        c.V = meet(join(p, q), join(p_prime, q_prime));
        c.cevian_conic = cevian_conic(p);
        c.Z = conic_center(*c.cevian_conic);
        c.U = anticomplement(*c.Z);
    }
    c.S = locate_S(c);
    return c;
}

Configuration derive_configuration_off_medians(const BaryPoint &p) {
    require_valid(p, true);
    return derive_configuration(p);
}

AffineMap map_M(const BaryPoint &p) {
    require_valid(p);
    return cevian_map(p) * AffineMap::anticomplement() * cevian_map(isotomic(p));
}

std::string_view to_string(MClassification::Kind kind) noexcept {
    return kind == MClassification::Kind::translation ? "translation" : "homothety";
}

MClassification classify_matrix(const AffineMap &map) {
    const Mat3 &m = map.matrix();
    // Off-diagonal entries of row i all equal v_i; the diagonal is k + v_i.
    Triple v{m(0, 1), m(1, 0), m(2, 0)};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            if (i != j && !(m(i, j) == v[i])) {
                throw Error(ErrorKind::NotHomothetyOrTranslation, "linear part of M is not scalar");
            }
        }
    }
    const FieldElement k = m(0, 0) - v[0];
    if (!(m(1, 1) - v[1] == k) || !(m(2, 2) - v[2] == k)) {
        throw Error(ErrorKind::NotHomothetyOrTranslation, "linear part of M is not scalar");
    }
    if (k.is_zero()) throw Error(ErrorKind::NotHomothetyOrTranslation, "M collapses the plane");
    if (k.is_one()) {
        if (is_zero(v)) throw Error(ErrorKind::NotHomothetyOrTranslation, "M is the identity");
        return {MClassification::Kind::translation, std::nullopt, BaryPoint(v)};
    }
    return {MClassification::Kind::homothety, k, BaryPoint(v)};
}

MClassification classify_M(const BaryPoint &p) { return classify_matrix(map_M(p)); }

BaryPoint s_formula(const BaryPoint &p) {
    const auto &[x, y, z] = p.coords();
    const FieldElement yz = y + z, xz = x + z, xy = x + y;
    const Triple s{x * yz * yz, y * xz * xz, z * xy * xy};
    if (is_zero(s)) throw Error(ErrorKind::DegenerateConfiguration, "S formula vanishes at " + p.to_string());
    return BaryPoint(s);
}

AffineMap eta_reflection(const BaryPoint &p) {
    require_valid(p, true);
    const BaryPoint p_prime = isotomic(p);
    const BaryPoint v = meet(join(p, complement(p_prime)), join(p_prime, complement(p)));
    const BaryPoint g = ref::G();
    if (v == g || v.is_infinite() || p == p_prime) {
        throw Error(ErrorKind::DegenerateAxisOrDirection, "axis GV or direction PP' undefined for " + p.to_string());
    }
    const Triple w = displacement(p, p_prime);
    if (join(g, v).contains(BaryPoint(w))) {
        throw Error(ErrorKind::DegenerateAxisOrDirection, "direction PP' is parallel to GV");
    }
    const FieldElement minus_one(-1);
    return map_from_triangles({g, v, translate(g, w)}, {g, v, translate(g, minus_one * w)});
}

} // namespace cevian
