#include "cevian/verify.hpp"

#include "cevian/error.hpp"
#include "cevian/locus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>

namespace cevian {

namespace {

using Rng = std::mt19937;

// One aggregated check over many cases; keeps the first counterexample.
class Tally {
  public:
    explicit Tally(std::string name) : name_(std::move(name)) {}

    void record(bool ok, const std::string &input) {
        ++cases_;
        if (!ok && failures_++ == 0) detail_ = input;
    }

    // Runs fn, counting an exception as a failure.
    void run(const std::string &input, const std::function<bool()> &fn) {
        try {
            record(fn(), input);
        } catch (const Error &e) {
            record(false, input + " (" + e.what() + ")");
        }
    }

    void commit(Report &r) const {
        std::string detail;
        if (failures_ > 0) detail = std::to_string(failures_) + " of " + std::to_string(cases_) + " failed, first " + detail_;
        if (cases_ == 0) detail = "no cases";
        r.add(name_ + " [" + std::to_string(cases_) + " cases]", failures_ == 0 && cases_ > 0, detail);
    }

  private:
    std::string name_;
    std::size_t cases_ = 0, failures_ = 0;
    std::string detail_;
};

// A single exact check; an exception counts as a failure.
void check(Report &r, const std::string &name, const std::function<bool()> &fn) {
    try {
        r.add(name, fn());
    } catch (const Error &e) {
        r.add(name, false, e.what());
    }
}

int uniform(Rng &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

FieldElement random_rational(Rng &rng, int num_bound, int den_bound) {
    Rational q(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
    q.canonicalize();
    return FieldElement(q);
}

BaryPoint random_valid_point(Rng &rng, bool off_medians) {
    for (;;) {
        const BaryPoint p(uniform(rng, -9, 9), uniform(rng, -9, 9), uniform(rng, -9, 9));
        if (is_valid(p, off_medians)) return p;
    }
}

BaryPoint random_off_curve_point(Rng &rng) {
    for (;;) {
        const BaryPoint p = random_valid_point(rng, true);
        if (!es_contains(p)) return p;
    }
}

FieldElement random_locus_t(Rng &rng) {
    for (;;) {
        const FieldElement t = random_rational(rng, 20, 9);
        if (t != FieldElement(-1) && !t.is_zero() && t != FieldElement(1)) return t;
    }
}

BaryPoint random_locus_point(Rng &rng, Vertex v) { return locus_param(v, random_locus_t(rng)); }

BaryPoint special_point(Variant v) {
    const FieldElement r2 = FieldElement::root_of(2);
    const FieldElement s = v == Variant::plus ? r2 : -r2;
    return {1, FieldElement(1) + s, FieldElement(1) - s};
}

bool same_set(std::vector<BaryPoint> a, std::vector<BaryPoint> b) {
    if (a.size() != b.size()) return false;
    for (const auto &p : a) {
        const auto it = std::find(b.begin(), b.end(), p);
        if (it == b.end()) return false;
        b.erase(it);
    }
    return true;
}

const BaryLine kLG(-2, 1, 1);

Report suite_lemma21(Rng &rng, std::size_t n) {
    Report r;
    Tally agree("statements (a)-(d) agree"), on_locus("(a)-(d) all hold on the A-locus");
    for (std::size_t i = 0; i < n; ++i) {
        const bool from_locus = i % 2 == 0;
        const BaryPoint p = from_locus ? random_locus_point(rng, Vertex::A) : random_valid_point(rng, false);
        agree.run(p.to_string(), [&] { return lemma21_check(p).all_equal(); });
        if (from_locus) {
            on_locus.run(p.to_string(), [&] {
                const Lemma21 l = lemma21_check(p);
                return l.a && l.all_equal();
            });
        }
    }
    agree.commit(r);
    on_locus.commit(r);
    check(r, "(6:3:2) satisfies all four", [] {
        const Lemma21 l = lemma21_check(BaryPoint(6, 3, 2));
        return l.a && l.all_equal();
    });
    check(r, "(1:2:3) satisfies none", [] {
        const Lemma21 l = lemma21_check(BaryPoint(1, 2, 3));
        return !l.a && l.all_equal();
    });
    return r;
}

Report suite_thm22(Rng &rng, std::size_t n) {
    Report r;
    const AffineMap k_inv = AffineMap::anticomplement();
    for (Vertex v : {Vertex::A, Vertex::B, Vertex::C}) {
        const std::string name(to_string(v));
        const VertexLocus locus = vertex_locus(v);
        Tally h("H = " + name + " on the " + name + "-locus");
        for (std::size_t i = 0; i < n; ++i) {
            const BaryPoint p = random_locus_point(rng, v);
            h.run(p.to_string(), [&] {
                return locus.conic.contains(p) && derive_configuration(p).H == vertex_point(v) &&
                       vertex_orthocenter_check(p) == v;
            });
        }
        h.commit(r);
        check(r, "excluded points of the " + name + "-locus lie on it", [&] {
            return std::all_of(locus.excluded.begin(), locus.excluded.end(),
                               [&](const BaryPoint &e) { return locus.conic.contains(e); });
        });
    }

    const Conic ca = vertex_locus(Vertex::A).conic;
    const BaryPoint a = ref::A(), b = ref::B(), c = ref::C(), d0(0, 1, 1);
    check(r, "tangent at B is K^-1(AC)", [&] { return tangent_at(ca, b) == k_inv(join(a, c)); });
    check(r, "tangent at C is K^-1(AB)", [&] { return tangent_at(ca, c) == k_inv(join(a, b)); });
    check(r, "center is (1:3:3)", [&] { return conic_center(ca) == BaryPoint(1, 3, 3); });
    check(r, "center is 6/7 of the way from A to D0",
          [&] { return signed_ratio(a, conic_center(ca), d0) == FieldElement::fraction(6, 7); });
    check(r, "polar of A is l_G", [&] { return polar(ca, a) == kLG; });
    check(r, "conic through B, C, E0, F0, (6:3:2)",
          [&] { return conic_through_5(b, c, BaryPoint(1, 0, 1), BaryPoint(1, 1, 0), BaryPoint(6, 3, 2)) == ca; });

    const Conic steiner = steiner_circumellipse();
    Tally inside("A-locus inside the Steiner circumellipse");
    Tally bound("DD0/D0C squared at most 2, equal only on l_G");
    for (std::size_t i = 0; i < n; ++i) {
        const BaryPoint p = random_locus_point(rng, Vertex::A);
        inside.run(p.to_string(), [&] { return is_interior(steiner, p); });
        bound.run(p.to_string(), [&] {
            const FieldElement r2 = median_trace_ratio(p);
            const FieldElement gap = FieldElement(2) - r2 * r2;
            return gap.sign() >= 0 && gap.is_zero() == kLG.contains(p);
        });
    }
    for (Variant v : {Variant::plus, Variant::minus}) {
        const BaryPoint p = special_point(v);
        bound.run(p.to_string(), [&] {
            const FieldElement ratio = median_trace_ratio(p);
            return ratio * ratio == FieldElement(2);
        });
    }
    inside.commit(r);
    bound.commit(r);

    Tally parallels("HA || QD, HB || QE, HC || QF");
    for (std::size_t i = 0; i < n; ++i) {
        const BaryPoint p = random_valid_point(rng, false);
        parallels.run(p.to_string(), [&] {
            const Configuration cfg = derive_configuration(p);
            const std::array<std::pair<BaryPoint, BaryPoint>, 3> pairs{
                {{a, cfg.traces.D}, {b, cfg.traces.E}, {c, cfg.traces.F}}};
            for (const auto &[vertex, trace] : pairs) {
                if (cfg.H == vertex) continue;
                if (!is_parallel(join(cfg.H, vertex), join(cfg.Q, trace))) return false;
            }
            return true;
        });
    }
    parallels.commit(r);
    return r;
}

Report suite_prop24(Rng &rng, std::size_t n) {
    Report r;
    for (Variant v : {Variant::plus, Variant::minus}) {
        const std::string prefix = v == Variant::plus ? "P+ " : "P- ";
        try {
            const SpecialConfig sc = special_config(v);
            for (const Check &c : sc.checks.checks) r.add(prefix + c.name, c.passed, c.detail);
            const Configuration &cfg = sc.config;
            check(r, prefix + "l_G meets C~_O in P+ and P-", [&] {
                return same_set(line_conic_intersect(cfg.circumconic_O, kLG).points,
                                {special_point(Variant::plus), special_point(Variant::minus)});
            });
            check(r, prefix + "M is a translation",
                  [&] { return classify_matrix(cfg.M).kind == MClassification::Kind::translation; });
            check(r, prefix + "eta swaps P, P'; Q, Q'; O, O'", [&] {
                const AffineMap eta = eta_reflection(cfg.P);
                return eta(cfg.P) == cfg.P_prime && eta(cfg.Q) == cfg.Q_prime && eta(cfg.O) == cfg.O_prime;
            });
            check(r, prefix + "eta is an involution", [&] {
                const AffineMap eta = eta_reflection(cfg.P);
                return eta * eta == AffineMap::identity();
            });
        } catch (const Error &e) {
            r.add(prefix + "special configuration", false, e.what());
        }
    }
    check(r, "eta for (6:3:2)", [] {
        const BaryPoint p(6, 3, 2);
        const Configuration cfg = derive_configuration(p);
        const AffineMap eta = eta_reflection(p);
        return eta(p) == cfg.P_prime && eta(cfg.Q) == cfg.Q_prime;
    });

    Tally nine("N_P' holds the six midpoints, center K(Q)");
    Tally circum("C~_O has center O = K(H)");
    Tally image("M takes C~_O to the inconic");
    Tally symmetric("T_P K^-1 T_P' = T_P' K^-1 T_P");
    const AffineMap k_inv = AffineMap::anticomplement();
    for (std::size_t i = 0; i < n; ++i) {
        const BaryPoint p = random_valid_point(rng, false);
        const std::string in = p.to_string();
        nine.run(in, [&] {
            const Configuration cfg = derive_configuration(p);
            const Conic np = nine_point_conic(cfg.P_prime);
            const std::array<BaryPoint, 4> quad{ref::A(), ref::B(), ref::C(), cfg.P_prime};
            for (std::size_t s = 0; s < 4; ++s) {
                for (std::size_t t = s + 1; t < 4; ++t) {
                    if (!np.contains(midpoint(quad[s], quad[t]))) return false;
                }
            }
            return conic_center(np) == complement(cfg.Q);
        });
        circum.run(in, [&] {
            const Configuration cfg = derive_configuration(p);
            return conic_center(cfg.circumconic_O) == cfg.O && cfg.O == complement(cfg.H);
        });
        image.run(in, [&] {
            const Configuration cfg = derive_configuration(p);
            return cfg.circumconic_O.image(cfg.M) == cfg.inconic;
        });
        symmetric.run(in, [&] {
            const Configuration cfg = derive_configuration(p);
            return cfg.T_P * k_inv * cfg.T_P_prime == cfg.T_P_prime * k_inv * cfg.T_P;
        });
    }
    nine.commit(r);
    circum.commit(r);
    image.commit(r);
    symmetric.commit(r);
    return r;
}

Report suite_cor25(Rng &, std::size_t) {
    Report r;
    for (Variant v : {Variant::plus, Variant::minus}) {
        const std::string prefix = v == Variant::plus ? "P+ " : "P- ";
        const BaryPoint p = special_point(v);
        check(r, prefix + "P = centroid(O, D, Q)", [&] {
            const Configuration c = derive_configuration(p);
            return p == centroid(c.O, c.traces.D, c.Q);
        });
        check(r, prefix + "A3 = midpoint(O, D)", [&] {
            const Configuration c = derive_configuration(p);
            return c.T_P(c.traces_prime.D) == midpoint(c.O, c.traces.D);
        });
        check(r, prefix + "OD/OC squared is 2", [&] {
            const Configuration c = derive_configuration(p);
            const FieldElement ratio = signed_ratio(c.O, c.traces.D, ref::C());
            return ratio * ratio == FieldElement(2);
        });
    }
    const Report metric = equilateral_embedding_check();
    for (const Check &c : metric.checks) r.add("equilateral " + c.name, c.passed, c.detail);
    return r;
}

Report suite_thm31(Rng &rng, std::uint32_t seed, std::size_t n) {
    Report r;
    Tally agree("six conditions agree"), truth("six conditions hold exactly on E_S");
    Tally kind("M is a translation exactly on E_S"), s_law("S = (x(y+z)^2 : y(x+z)^2 : z(x+y)^2)");
    Tally tangent("OQ tangent to C_P at Q on E_S");
    std::vector<std::pair<BaryPoint, bool>> cases;
    for (const BaryPoint &p : es_sample(n, seed)) cases.emplace_back(p, true);
    for (std::size_t i = 0; i < n; ++i) cases.emplace_back(random_off_curve_point(rng), false);
    for (const auto &[p, on_curve] : cases) {
        const std::string in = p.to_string();
        const bool curve = on_curve;
        agree.run(in, [&] { return translation_conditions(derive_configuration_off_medians(p)).all_equal(); });
        truth.run(in, [&] {
            return translation_conditions(derive_configuration_off_medians(p)).all_true() == curve &&
                   es_contains(p) == curve;
        });
        kind.run(in, [&] { return (classify_M(p).kind == MClassification::Kind::translation) == curve; });
        s_law.run(in, [&] { return derive_configuration(p).S == s_formula(p) && classify_M(p).S == s_formula(p); });
        if (curve) {
            tangent.run(in, [&] {
                const Configuration c = derive_configuration_off_medians(p);
                return join(c.O, c.Q) == tangent_at(*c.cevian_conic, c.Q);
            });
        }
    }
    agree.commit(r);
    truth.commit(r);
    kind.commit(r);
    s_law.commit(r);
    tangent.commit(r);
    return r;
}

Report suite_cor32(std::uint32_t seed, std::size_t n) {
    Report r;
    std::vector<std::string> order;
    std::map<std::string, Tally> tallies;
    for (const BaryPoint &p : es_sample(n, seed)) {
        Report one;
        try {
            one = translation_consequences(derive_configuration_off_medians(p));
        } catch (const Error &e) {
            one.add("configuration", false, e.what());
        }
        for (const Check &c : one.checks) {
            if (!tallies.count(c.name)) {
                order.push_back(c.name);
                tallies.emplace(c.name, Tally(c.name));
            }
            tallies.at(c.name).record(c.passed, p.to_string());
        }
    }
    for (const auto &name : order) tallies.at(name).commit(r);
    if (order.empty()) r.add("samples", false, "no samples");
    return r;
}

Report suite_curve(Rng &rng, std::uint32_t seed, std::size_t n) {
    Report r;
    const FieldElement r2 = FieldElement::root_of(2);
    const WPoint pt = p_tilde();
    check(r, "j = 54000", [] { return j_invariant() == 54000; });
    check(r, "discriminant 6912, c4 = 720", [] {
        const CurveInvariants inv = es_invariants();
        return inv.discriminant == 6912 && inv.c4 == 720;
    });
    check(r, "P~ on the curve", [&] { return w_contains(pt); });
    check(r, "[2]P~ = (1/2, sqrt2/4)",
          [&] { return w_multiple(2, pt) == WPoint(FieldElement::fraction(1, 2), r2 / FieldElement(4)); });
    check(r, "[4]P~ = (169/8, -2483 sqrt2/32)", [&] {
        return w_multiple(4, pt) == WPoint(FieldElement::fraction(169, 8), FieldElement(-2483) * r2 / FieldElement(32));
    });

    const std::vector<WPoint> t12 = torsion12();
    check(r, "T12 closed under addition", [&] {
        for (const auto &p : t12) {
            for (const auto &q : t12) {
                if (std::find(t12.begin(), t12.end(), w_add(p, q)) == t12.end()) return false;
            }
        }
        return true;
    });
    check(r, "T12 order census 1:1 2:3 3:2 6:6", [&] {
        std::map<int, int> census;
        for (const auto &p : t12) {
            const auto order = w_order(p);
            if (!order) return false;
            ++census[*order];
        }
        return census == std::map<int, int>{{1, 1}, {2, 3}, {3, 2}, {6, 6}};
    });
    check(r, "[k]P~ outside T12 for k = 1..24", [&] {
        WPoint acc = WPoint::infinity();
        for (int k = 1; k <= 24; ++k) {
            acc = w_add(acc, pt);
            if (std::find(t12.begin(), t12.end(), acc) != t12.end()) return false;
        }
        return true;
    });
    check(r, "T pulls back to the vertices and side directions", [&] {
        std::vector<BaryPoint> images;
        for (const auto &t : rational_torsion()) images.push_back(w_to_bary(t));
        return same_set(images, {ref::A(), ref::B(), ref::C(), BaryPoint(0, 1, -1), BaryPoint(1, 0, -1),
                                 BaryPoint(1, -1, 0)});
    });
    check(r, "T12 - T pulls back to the median points of E_S", [&] {
        const std::vector<WPoint> t = rational_torsion();
        std::vector<BaryPoint> images;
        for (const auto &p : t12) {
            if (std::find(t.begin(), t.end(), p) == t.end()) images.push_back(w_to_bary(p));
        }
        std::vector<BaryPoint> expected;
        const FieldElement r3 = FieldElement::root_of(3);
        for (const FieldElement &m : {FieldElement(-2) + r3, FieldElement(-2) - r3}) {
            expected.emplace_back(m, 1, 1);
            expected.emplace_back(1, m, 1);
            expected.emplace_back(1, 1, m);
        }
        return same_set(images, expected);
    });

    Tally disc("y-discriminant equals (x-1)(3x+1)(3x^2-6x-1)");
    for (std::size_t i = 0; i < n; ++i) {
        const FieldElement x = random_rational(rng, 30, 7);
        disc.run(x.to_string(), [&] { return nf_y_discriminant(x) == nf_discriminant_closed(x); });
    }
    disc.commit(r);

    std::vector<WPoint> pool = t12;
    for (int k = -3; k <= 3; ++k) {
        if (k != 0) pool.push_back(w_multiple(k, pt));
    }
    Tally group("group law: identity, inverse, commutativity, associativity");
    for (std::size_t i = 0; i < 10 * n; ++i) {
        const auto pick = [&] { return pool[static_cast<std::size_t>(uniform(rng, 0, int(pool.size()) - 1))]; };
        const WPoint a = pick(), b = pick(), c = pick();
        group.run(a.to_string() + " " + b.to_string() + " " + c.to_string(), [&] {
            const WPoint o = WPoint::infinity();
            return w_add(a, o) == a && w_add(a, w_neg(a)) == o && w_add(a, b) == w_add(b, a) &&
                   w_add(w_add(a, b), c) == w_add(a, w_add(b, c));
        });
    }
    group.commit(r);

    Tally models("models agree on E_S samples");
    for (const BaryPoint &p : es_sample(n, seed)) {
        models.run(p.to_string(), [&] {
            const NFPoint nf = bary_to_nf(p);
            const WPoint w = nf_to_w(nf);
            return es_contains(p) && nf_contains(nf) && quartic_contains(nf_to_quartic(nf)) && w_contains(w) &&
                   bary_to_w(p) == w && w_to_bary(w) == p && w_to_nf(w) == nf;
        });
    }
    models.commit(r);

    check(r, "E_S meets the A-locus in B, C (twice each) and P+, P-", [] {
        const auto pts = es_locus_intersection(Vertex::A);
        std::map<std::string, int> got;
        for (const auto &q : pts) got[q.point.to_string()] += q.multiplicity;
        const std::map<std::string, int> want{{ref::B().to_string(), 2},
                                              {ref::C().to_string(), 2},
                                              {special_point(Variant::plus).to_string(), 1},
                                              {special_point(Variant::minus).to_string(), 1}};
        return got == want;
    });
    check(r, "E_S and the A-locus share tangents at B and C", [] {
        const Conic ca = vertex_locus(Vertex::A).conic;
        return es_tangent_at(ref::B()) == tangent_at(ca, ref::B()) && es_tangent_at(ref::C()) == tangent_at(ca, ref::C());
    });

    for (int a : {2, 5, -3}) {
        Tally ea("E_a for a = " + std::to_string(a) + ": homothety with k = 4/(a+1)");
        const CurveEa curve(a);
        for (const NFPoint &q : ea_sample(curve, n, seed)) {
            const BaryPoint p = nf_to_bary(q);
            ea.run(p.to_string(), [&] {
                const MClassification m = classify_M(p);
                return ea_contains(curve, q.x, q.y) && m.kind == MClassification::Kind::homothety && m.k &&
                       *m.k == curve.homothety_ratio();
            });
        }
        ea.commit(r);
    }
    check(r, "E_a rejects a = 3", [] {
        try {
            CurveEa bad(3);
        } catch (const Error &e) {
            return e.kind() == ErrorKind::BadParameter;
        }
        return false;
    });
    return r;
}

Report suite_section4(Rng &rng, std::uint32_t seed, std::size_t n) {
    Report r;
    std::optional<Section4Config> built;
    try {
        built = canonical_section4_config();
        r.add("asymptotes are ZF' and ZE'", true);
    } catch (const Error &e) {
        r.add("asymptotes are ZF' and ZE'", false, e.what());
        return r;
    }
    const Section4Config &cfg = *built;
    check(r, "asymptotes of C computed directly", [&] {
        const auto asym = asymptotes(cfg.C);
        const BaryLine za = join(cfg.Z, cfg.F_prime), zb = join(cfg.Z, cfg.E_prime);
        return (asym[0] == za && asym[1] == zb) || (asym[0] == zb && asym[1] == za);
    });
    r.append(section4_structure_checks(cfg));
    check(r, "pi cycles U -> Z -> V -> U", [&] {
        return projectivity_pi(cfg, cfg.U) == cfg.Z && projectivity_pi(cfg, cfg.Z) == cfg.V &&
               projectivity_pi(cfg, cfg.V) == cfg.U;
    });
    Tally cube("pi^3 = id on GV");
    for (std::size_t i = 0; i < n; ++i) {
        const FieldElement s = random_rational(rng, 12, 5);
        const BaryPoint y = translate(cfg.G, s * displacement(cfg.G, cfg.V));
        cube.run(y.to_string(), [&] {
            return projectivity_pi(cfg, projectivity_pi(cfg, projectivity_pi(cfg, y))) == y;
        });
    }
    cube.commit(r);

    check(r, "inscribed triangle of A is B, C", [&] {
        const InscribedTriangle t = inscribed_triangle(cfg, ref::A());
        return t.status == InscribedTriangle::Status::ok && *t.B1 == ref::B() && *t.C1 == ref::C();
    });
    check(r, "A1 = Q is degenerate",
          [&] { return inscribed_triangle(cfg, cfg.Q).status == InscribedTriangle::Status::degenerate; });
    check(r, "A1 = E has no inscribed triangle",
          [&] { return inscribed_triangle(cfg, cfg.E).status == InscribedTriangle::Status::no_intersection; });
    check(r, "admissible at A", [&] { return admissible(cfg, ref::A()); });
    check(r, "not admissible at Q, Q', P', E", [&] {
        return !admissible(cfg, cfg.Q) && !admissible(cfg, cfg.Q_prime) && !admissible(cfg, cfg.P_prime) &&
               !admissible(cfg, cfg.E);
    });
    check(r, "A1 = A, orientation 1 gives P back", [&] { return reconstruct_P(cfg, ref::A(), 1) == cfg.P; });
    check(r, "A1 = A, orientation 2 lands on E_S", [&] {
        const BaryPoint p = reconstruct_P(cfg, ref::A(), 2);
        return es_contains(p) && classify_M(p).kind == MClassification::Kind::translation;
    });

    Tally round("admissible A1 reconstructs onto E_S off T12");
    for (const AdmissibleSample &s : sample_admissible(cfg, n, seed)) {
        round.run(s.A1.to_string(), [&] {
            if (!cfg.C.contains(s.A1) || !admissible(cfg, s.A1)) return false;
            for (int orientation : {1, 2}) {
                const BaryPoint p = reconstruct_P(cfg, s.A1, orientation);
                if (!es_contains(p) || !is_valid(p, true)) return false;
                if (classify_M(p).kind != MClassification::Kind::translation) return false;
            }
            return true;
        });
    }
    round.commit(r);
    return r;
}

void prefixed(Report &out, std::string_view suite, const Report &in) {
    for (const Check &c : in.checks) out.add(std::string(suite) + ": " + c.name, c.passed, c.detail);
}

} // namespace

bool TranslationConditions::all_equal() const {
    const std::array<bool, 6> v{parallelogram, circumconic_has_P, o_on_pp, z_on_qq, gz_zv_third, u_is_kv};
    return std::all_of(v.begin(), v.end(), [&](bool b) { return b == v[0]; });
}

bool TranslationConditions::all_true() const {
    return parallelogram && circumconic_has_P && o_on_pp && z_on_qq && gz_zv_third && u_is_kv;
}

TranslationConditions translation_conditions(const Configuration &c) {
    if (!c.V || !c.Z || !c.U || !c.cevian_conic) {
        throw Error(ErrorKind::OnMedian, "translation conditions need P off the medians");
    }
    const BaryPoint g = ref::G();
    TranslationConditions t{};
    t.parallelogram = midpoint(c.O, c.Q_prime) == midpoint(c.Q, c.O_prime);
    t.circumconic_has_P = c.circumconic_O.contains(c.P);
    const BaryLine pp = join(c.P, c.P_prime);
    t.o_on_pp = pp.contains(c.O) && pp.contains(c.O_prime);
    t.z_on_qq = join(c.Q, c.Q_prime).contains(*c.Z);
    try {
        t.gz_zv_third = vector_ratio(displacement(g, *c.Z), displacement(*c.Z, *c.V)) == FieldElement::fraction(1, 3);
    } catch (const Error &) {
        t.gz_zv_third = false;
    }
    t.u_is_kv = *c.U == complement(*c.V);
    return t;
}

Report translation_consequences(const Configuration &c) {
    Report r;
    if (!c.V || !c.U || !c.cevian_conic) {
        r.add("P off the medians", false, c.P.to_string());
        return r;
    }
    const BaryPoint &h = c.H, &u = *c.U, &p = c.P, &v = *c.V;
    check(r, "HUPV is a parallelogram", [&] { return midpoint(h, p) == midpoint(u, v); });
    check(r, "T_P(P) = midpoint(H, V)", [&] { return c.T_P(p) == midpoint(h, v); });
    check(r, "T_P(P') = O", [&] { return c.T_P(c.P_prime) == c.O; });
    check(r, "P', O', U, O, P equally spaced", [&] {
        return signed_ratio(c.P_prime, c.O_prime, p) == FieldElement::fraction(1, 4) &&
               signed_ratio(c.P_prime, u, p) == FieldElement::fraction(1, 2) &&
               signed_ratio(c.P_prime, c.O, p) == FieldElement::fraction(3, 4);
    });
    check(r, "OH tangent to C_P at H", [&] { return join(c.O, h) == tangent_at(*c.cevian_conic, h); });
    return r;
}

std::vector<std::string_view> suite_names() {
    return {"lemma21", "thm22", "prop24", "cor25", "thm31", "cor32", "curve", "section4"};
}

Report run_suite(std::string_view name, std::uint32_t seed, std::size_t n) {
    if (name == "all") {
        Report out;
        for (std::string_view s : suite_names()) out.append(run_suite(s, seed, n));
        return out;
    }
    Rng rng(seed);
    Report r;
    if (name == "lemma21") {
        r = suite_lemma21(rng, n);
    } else if (name == "thm22") {
        r = suite_thm22(rng, n);
    } else if (name == "prop24") {
        r = suite_prop24(rng, n);
    } else if (name == "cor25") {
        r = suite_cor25(rng, n);
    } else if (name == "thm31") {
        r = suite_thm31(rng, seed, n);
    } else if (name == "cor32") {
        r = suite_cor32(seed, n);
    } else if (name == "curve") {
        r = suite_curve(rng, seed, n);
    } else if (name == "section4") {
        r = suite_section4(rng, seed, n);
    } else {
        throw Error(ErrorKind::BadParameter, "unknown suite " + std::string(name));
    }
    Report out;
    prefixed(out, name, r);
    return out;
}

} // namespace cevian
