// cevian: command-line front end.
//
//   cevian compute POINT [NAME...]
//   cevian verify SUITE [--seed S] [--n N]
//   cevian curve info | multiple K | torsion | sample | map POINT | ea A
//   cevian locus vertex V | intersect V | section4
//   cevian render FIGURE [--placement ax,ay,bx,by,cx,cy] [--point P]
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or input error.

#include "cevian/error.hpp"
#include "cevian/locus.hpp"
#include "cevian/serialize.hpp"
#include "cevian/svg.hpp"
#include "cevian/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <random>

namespace {

using namespace cevian;

constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Options {
    std::uint32_t seed = 1;
    std::size_t n = 20;
    bool json = false;
    std::string out;
};

void emit(const Options &opt, const std::string &text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw Error(ErrorKind::IOError, "cannot open " + opt.out + " for writing");
    file << text;
    file.flush();
    if (!file) throw Error(ErrorKind::IOError, "failed writing " + opt.out);
}

void emit_json(const Options &opt, const Json &j) { emit(opt, (opt.json ? j.dump() : j.dump(2)) + "\n"); }

Vertex parse_vertex(const std::string &s) {
    if (s == "A") return Vertex::A;
    if (s == "B") return Vertex::B;
    if (s == "C") return Vertex::C;
    throw Error(ErrorKind::ParseError, "vertex must be A, B or C, got " + s);
}

Json optional_point(const std::optional<BaryPoint> &p) { return p ? to_json(*p) : Json(nullptr); }

Json classification_json(const MClassification &m) {
    Json out{{"kind", std::string(to_string(m.kind))}, {"S", to_json(m.S)}};
    if (m.k) out["k"] = to_json(*m.k);
    return out;
}

// compute ------------------------------------------------------------------

const std::vector<std::string> kComputeNames{"P'", "Q", "Q'", "H", "O", "O'", "V", "Z", "U", "S", "M", "conics"};

Json compute(const BaryPoint &p, std::vector<std::string> names) {
    if (names.empty()) names = kComputeNames;
    for (const auto &name : names) {
        if (std::find(kComputeNames.begin(), kComputeNames.end(), name) == kComputeNames.end()) {
            throw Error(ErrorKind::ParseError, "unknown name " + name);
        }
    }
    const Configuration c = derive_configuration(p);
    Json out = Json::object();
    for (const auto &name : names) {
        if (name == "P'") out[name] = to_json(c.P_prime);
        if (name == "Q") out[name] = to_json(c.Q);
        if (name == "Q'") out[name] = to_json(c.Q_prime);
        if (name == "H") out[name] = to_json(c.H);
        if (name == "O") out[name] = to_json(c.O);
        if (name == "O'") out[name] = to_json(c.O_prime);
        if (name == "V") out[name] = optional_point(c.V);
        if (name == "Z") out[name] = optional_point(c.Z);
        if (name == "U") out[name] = optional_point(c.U);
        if (name == "S") out[name] = to_json(c.S);
        if (name == "M") out[name] = classification_json(classify_matrix(c.M));
        if (name == "conics") {
            out[name] = Json{{"circumconic_O", to_json(c.circumconic_O)},
                             {"inconic", to_json(c.inconic)},
                             {"nine_point", to_json(nine_point_conic(c.P_prime))},
                             {"cevian", c.cevian_conic ? to_json(*c.cevian_conic) : Json(nullptr)}};
        }
    }
    return out;
}

// verify -------------------------------------------------------------------

int verify(const Options &opt, const std::string &suite) {
    const Report r = run_suite(suite, opt.seed, opt.n);
    if (opt.json) {
        Json j = to_json(r);
        j["suite"] = suite;
        j["seed"] = opt.seed;
        j["n"] = opt.n;
        emit(opt, j.dump() + "\n");
    } else {
        std::string text;
        std::size_t failed = 0;
        for (const Check &c : r.checks) {
            text += (c.passed ? "PASS " : "FAIL ") + c.name;
            if (!c.passed) {
                ++failed;
                if (!c.detail.empty()) text += " :: " + c.detail;
            }
            text += "\n";
        }
        text += std::to_string(r.checks.size() - failed) + "/" + std::to_string(r.checks.size()) + " checks passed\n";
        emit(opt, text);
    }
    return r.all_passed() ? 0 : kVerifyFailed;
}

// curve --------------------------------------------------------------------

Json curve_point_json(const WPoint &w) {
    Json out{{"w", to_json(w)}};
    try {
        out["bary"] = to_json(w_to_bary(w));
    } catch (const Error &) {
        out["bary"] = nullptr;
    }
    return out;
}

Json curve_info() {
    const CurveInvariants inv = es_invariants();
    const auto q = [](const Rational &r) { return to_json(FieldElement(r)); };
    return Json{{"equation", "v^2 = u^3 + 6u^2 - 3u"},
                {"b2", q(inv.b2)},
                {"b4", q(inv.b4)},
                {"b6", q(inv.b6)},
                {"b8", q(inv.b8)},
                {"c4", q(inv.c4)},
                {"c6", q(inv.c6)},
                {"discriminant", q(inv.discriminant)},
                {"j", q(inv.j)},
                {"P~", to_json(p_tilde())}};
}

Json curve_torsion() {
    Json out = Json::array();
    for (const WPoint &t : torsion12()) {
        Json item = curve_point_json(t);
        item["order"] = *w_order(t);
        out.push_back(item);
    }
    return out;
}

Json curve_sample(const Options &opt) {
    Json out = Json::array();
    for (const BaryPoint &p : es_sample(opt.n, opt.seed)) {
        out.push_back(Json{{"bary", to_json(p)}, {"w", to_json(bary_to_w(p))}});
    }
    return out;
}

Json curve_map(const BaryPoint &p) {
    if (!es_contains(p)) throw Error(ErrorKind::OffCurve, p.to_string() + " is not on E_S");
    Json out{{"bary", to_json(p)}, {"w", to_json(bary_to_w(p))}};
    if (p.is_ordinary() && !(p == ref::A())) {
        try {
            const NFPoint nf = bary_to_nf(p);
            const QuarticPoint qp = nf_to_quartic(nf);
            out["normal_form"] = to_json(nf);
            out["quartic"] = Json{{"X", to_json(qp.X)}, {"Y", to_json(qp.Y)}};
        } catch (const Error &) {
        }
    }
    return out;
}

Json curve_ea(const Options &opt, const FieldElement &a) {
    const CurveEa c(a);
    Json points = Json::array();
    for (const NFPoint &q : ea_sample(c, opt.n, opt.seed)) {
        const BaryPoint p = nf_to_bary(q);
        points.push_back(Json{{"point", to_json(p)}, {"M", classification_json(classify_M(p))}});
    }
    return Json{{"a", to_json(a)}, {"k", to_json(c.homothety_ratio())}, {"samples", points}};
}

// locus --------------------------------------------------------------------

Json locus_vertex(const Options &opt, Vertex v) {
    const VertexLocus locus = vertex_locus(v);
    Json excluded = Json::array();
    for (const auto &e : locus.excluded) excluded.push_back(to_json(e));
    Json points = Json::array();
    std::mt19937 rng(opt.seed);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    while (points.size() < opt.n) {
        Rational t(num(rng), den(rng));
        t.canonicalize();
        if (t == 0 || t == 1 || t == -1) continue;
        const BaryPoint p = locus_param(v, FieldElement(t));
        points.push_back(Json{{"t", to_json(FieldElement(t))}, {"P", to_json(p)}, {"H", to_json(derive_configuration(p).H)}});
    }
    return Json{{"vertex", std::string(to_string(v))},
                {"conic", to_json(locus.conic)},
                {"center", to_json(conic_center(locus.conic))},
                {"excluded", excluded},
                {"samples", points}};
}

Json locus_intersect(Vertex v) {
    Json out = Json::array();
    for (const auto &q : es_locus_intersection(v)) {
        out.push_back(Json{{"point", to_json(q.point)}, {"multiplicity", q.multiplicity}});
    }
    return out;
}

Json locus_section4(const Options &opt) {
    const Section4Config cfg = canonical_section4_config();
    const std::map<std::string, const BaryPoint *> named{
        {"H", &cfg.H}, {"U", &cfg.U},       {"P", &cfg.P},         {"V", &cfg.V},     {"Z", &cfg.Z},
        {"G", &cfg.G}, {"O", &cfg.O},       {"Q", &cfg.Q},         {"Q'", &cfg.Q_prime}, {"O'", &cfg.O_prime},
        {"P'", &cfg.P_prime}, {"E", &cfg.E}, {"F", &cfg.F},        {"E'", &cfg.E_prime}, {"F'", &cfg.F_prime}};
    Json points = Json::object();
    for (const auto &[name, p] : named) points[name] = to_json(*p);
    Json samples = Json::array();
    for (const AdmissibleSample &s : sample_admissible(cfg, opt.n, opt.seed)) {
        samples.push_back(Json{{"A1", to_json(s.A1)},
                               {"admissible", admissible(cfg, s.A1)},
                               {"P_orientation_1", to_json(reconstruct_P(cfg, s.A1, 1))},
                               {"P_orientation_2", to_json(reconstruct_P(cfg, s.A1, 2))}});
    }
    return Json{{"conic", to_json(cfg.C)},
                {"points", points},
                {"structure", to_json(section4_structure_checks(cfg))},
                {"samples", samples}};
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact computations with generalized orthocenters and the curve E_S"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--seed", opt.seed, "Random seed for sampled checks")->capture_default_str();
    app.add_option("--n", opt.n, "Number of samples")->capture_default_str()->check(CLI::Range(1, 1000));
    app.add_flag("--json", opt.json, "Compact machine-readable output");
    app.add_option("--out", opt.out, "Write output to this file");

    std::function<int()> action;

    auto *compute_cmd = app.add_subcommand("compute", "Derived points, conics and M for a point P");
    std::string point_text;
    std::vector<std::string> names;
    compute_cmd->add_option("point", point_text, "Point literal, e.g. [6,3,2]")->required();
    compute_cmd->add_option("names", names, "Subset of P' Q Q' H O O' V Z U S M conics");
    compute_cmd->callback([&] { action = [&] { emit_json(opt, compute(parse_point(point_text), names)); return 0; }; });

    auto *verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    std::vector<std::string> suites{"all"};
    for (auto s : suite_names()) suites.emplace_back(s);
    verify_cmd->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));
    verify_cmd->callback([&] { action = [&] { return verify(opt, suite); }; });

    auto *curve_cmd = app.add_subcommand("curve", "Arithmetic on E_S");
    curve_cmd->require_subcommand(1);
    curve_cmd->add_subcommand("info", "Invariants of the Weierstrass model")->callback([&] {
        action = [&] { emit_json(opt, curve_info()); return 0; };
    });
    std::int64_t multiple = 1;
    auto *multiple_cmd = curve_cmd->add_subcommand("multiple", "[k]P~");
    multiple_cmd->add_option("k", multiple)->required();
    multiple_cmd->callback([&] {
        action = [&] { emit_json(opt, curve_point_json(w_multiple(multiple, p_tilde()))); return 0; };
    });
    curve_cmd->add_subcommand("torsion", "The twelve points of T12")->callback([&] {
        action = [&] { emit_json(opt, curve_torsion()); return 0; };
    });
    curve_cmd->add_subcommand("sample", "Points of E_S over Q(sqrt 2)")->callback([&] {
        action = [&] { emit_json(opt, curve_sample(opt)); return 0; };
    });
    std::string map_point;
    auto *map_cmd = curve_cmd->add_subcommand("map", "A point of E_S in every model");
    map_cmd->add_option("point", map_point)->required();
    map_cmd->callback([&] { action = [&] { emit_json(opt, curve_map(parse_point(map_point))); return 0; }; });
    std::string ea_text;
    auto *ea_cmd = curve_cmd->add_subcommand("ea", "Samples of E_a with their homothety ratio");
    ea_cmd->add_option("a", ea_text)->required();
    ea_cmd->callback([&] { action = [&] { emit_json(opt, curve_ea(opt, parse_field(ea_text))); return 0; }; });

    auto *locus_cmd = app.add_subcommand("locus", "Vertex loci and the inscribed-triangle construction");
    locus_cmd->require_subcommand(1);
    std::string vertex_text;
    auto *vertex_cmd = locus_cmd->add_subcommand("vertex", "Conic of points with H at a vertex");
    vertex_cmd->add_option("vertex", vertex_text)->required();
    vertex_cmd->callback([&] {
        action = [&] { emit_json(opt, locus_vertex(opt, parse_vertex(vertex_text))); return 0; };
    });
    std::string intersect_text;
    auto *intersect_cmd = locus_cmd->add_subcommand("intersect", "E_S meet a vertex locus");
    intersect_cmd->add_option("vertex", intersect_text)->required();
    intersect_cmd->callback([&] {
        action = [&] { emit_json(opt, locus_intersect(parse_vertex(intersect_text))); return 0; };
    });
    locus_cmd->add_subcommand("section4", "Canonical hyperbola configuration and admissible samples")->callback([&] {
        action = [&] { emit_json(opt, locus_section4(opt)); return 0; };
    });

    auto *render_cmd = app.add_subcommand("render", "Write an SVG figure");
    std::string figure, placement_text, render_point;
    std::vector<std::string> figures;
    for (auto f : figure_names()) figures.emplace_back(f);
    render_cmd->add_option("figure", figure)->required()->check(CLI::IsMember(figures));
    render_cmd->add_option("--placement", placement_text, "Cartesian ax,ay,bx,by,cx,cy");
    render_cmd->add_option("--point", render_point, "P for the conics figure");
    render_cmd->callback([&] {
        action = [&] {
            const Placement placement = placement_text.empty() ? default_placement() : parse_placement(placement_text);
            std::optional<BaryPoint> p;
            if (!render_point.empty()) p = parse_point(render_point);
            emit(opt, render_figure(figure, placement, p));
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    try {
        return action ? action() : kUsage;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
