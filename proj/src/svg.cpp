#include "cevian/svg.hpp"

#include "cevian/error.hpp"
#include "cevian/locus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace cevian {

namespace {

using Vec2 = std::array<double, 2>;

constexpr int kSamples = 720;
constexpr double kWidth = 800.0;
constexpr double kPad = 24.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
    return buf;
}

// Second point of the conic on the line through `on` with direction r.
Triple second_point(const Conic &c, const Triple &on, const Triple &r) {
    const FieldElement rr = c.form(r);
    const FieldElement kr = dot(on, c.matrix() * r);
    return rr * on - (FieldElement(2) * kr) * r;
}

// Lines through `on` in the directions (s, -c-s, c) with (c, s) = (1-t^2, 2t)
// for rational t in [-1, 1) sweep the whole conic once. Entries are
// unnormalized, so a sign change of x+y+z marks a crossing of l_inf.
std::vector<Triple> conic_samples(const Conic &c, const BaryPoint &on, int count) {
    const Triple k = on.coords();
    std::vector<Triple> out;
    for (int i = 0; i < count; ++i) {
        const FieldElement t(Rational(2 * i - count, count));
        const FieldElement cc = FieldElement(1) - t * t, ss = FieldElement(2) * t;
        Triple x = second_point(c, k, {ss, -cc - ss, cc});
        out.push_back(is_zero(x) ? k : x);
    }
    return out;
}

// Points spanning a bounded conic, so the view can be made to contain it.
std::vector<BaryPoint> ellipse_extent(const Conic &c, const BaryPoint &on) {
    if (classify_affine_type(c) != AffineType::ellipse) return {};
    std::vector<BaryPoint> out;
    for (const Triple &x : conic_samples(c, on, 48)) out.emplace_back(x);
    return out;
}

class Canvas {
  public:
    Canvas(const Placement &placement, const std::vector<BaryPoint> &extent) : placement_(placement) {
        std::vector<Vec2> pts;
        for (std::size_t i = 0; i < 3; ++i) pts.push_back(placement.vertices[i]);
        for (const auto &p : extent) {
            if (p.is_ordinary()) pts.push_back(world(p.normalized()));
        }
        double minx = pts[0][0], maxx = minx, miny = pts[0][1], maxy = miny;
        for (const auto &p : pts) {
            minx = std::min(minx, p[0]);
            maxx = std::max(maxx, p[0]);
            miny = std::min(miny, p[1]);
            maxy = std::max(maxy, p[1]);
        }
        const double margin = 0.12 * std::max(maxx - minx, maxy - miny);
        lo_ = {minx - margin, miny - margin};
        hi_ = {maxx + margin, maxy + margin};
        scale_ = (kWidth - 2 * kPad) / (hi_[0] - lo_[0]);
        height_ = (hi_[1] - lo_[1]) * scale_ + 2 * kPad;

        // Cartesian (x, y, 1) -> barycentrics, for drawing whole lines.
        const auto &v = placement.vertices;
        const double m[3][3] = {{v[0][0], v[1][0], v[2][0]}, {v[0][1], v[1][1], v[2][1]}, {1, 1, 1}};
        const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
                inv_[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / det;
            }
        }
    }

    Vec2 world(const Triple &normalized) const {
        Vec2 out{0, 0};
        for (std::size_t i = 0; i < 3; ++i) {
            const double w = normalized[i].to_double();
            out[0] += w * placement_.vertices[i][0];
            out[1] += w * placement_.vertices[i][1];
        }
        return out;
    }

    std::string sx(double x) const { return num((x - lo_[0]) * scale_ + kPad); }
    std::string sy(double y) const { return num((hi_[1] - y) * scale_ + kPad); }

    void polygon(const std::vector<BaryPoint> &pts, const std::string &stroke, const std::string &fill = "none") {
        body_ << "  <polygon points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Vec2 p = world(pts[i].normalized());
            body_ << (i ? " " : "") << sx(p[0]) << ',' << sy(p[1]);
        }
        body_ << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"1.2\"/>\n";
    }

    void line(const BaryLine &l, const std::string &stroke, bool dashed = false) {
        // a x + b y + c = 0 after substituting barycentrics of (x, y).
        double abc[3] = {0, 0, 0};
        for (int i = 0; i < 3; ++i) {
            const double li = l[static_cast<std::size_t>(i)].to_double();
            for (int j = 0; j < 3; ++j) abc[j] += li * inv_[i][j];
        }
        std::vector<Vec2> hits;
        const auto edge = [&](bool vertical, double at, double from, double to) {
            const double k = vertical ? abc[1] : abc[0];
            if (std::abs(k) < 1e-300) return;
            const double t = -(abc[2] + (vertical ? abc[0] : abc[1]) * at) / k;
            if (t >= from && t <= to) hits.push_back(vertical ? Vec2{at, t} : Vec2{t, at});
        };
        edge(true, lo_[0], lo_[1], hi_[1]);
        edge(true, hi_[0], lo_[1], hi_[1]);
        edge(false, lo_[1], lo_[0], hi_[0]);
        edge(false, hi_[1], lo_[0], hi_[0]);
        if (hits.size() < 2) return;
        std::sort(hits.begin(), hits.end());
        body_ << "  <line x1=\"" << sx(hits.front()[0]) << "\" y1=\"" << sy(hits.front()[1]) << "\" x2=\""
              << sx(hits.back()[0]) << "\" y2=\"" << sy(hits.back()[1]) << "\" stroke=\"" << stroke
              << "\" stroke-width=\"1\"" << (dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
    }

    void conic(const Conic &c, const BaryPoint &on, const std::string &id, const std::string &stroke) {
        std::vector<std::optional<Vec2>> samples;
        std::vector<int> sum_sign;
        for (const Triple &x : conic_samples(c, on, kSamples)) {
            const FieldElement sum = x[0] + x[1] + x[2];
            sum_sign.push_back(sum.sign());
            if (sum.is_zero()) {
                samples.emplace_back();
                continue;
            }
            const Vec2 p = world({x[0] / sum, x[1] / sum, x[2] / sum});
            samples.emplace_back(inside_far(p) ? std::optional<Vec2>(p) : std::nullopt);
        }
        samples.push_back(samples.front());
        sum_sign.push_back(sum_sign.front());

        std::ostringstream d;
        bool open = false;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const bool crossed = i > 0 && sum_sign[i] * sum_sign[i - 1] < 0;
            if (!samples[i] || crossed) open = false;
            if (!samples[i]) continue;
            const Vec2 &p = *samples[i];
            d << (open ? " L" : (d.tellp() > 0 ? " M" : "M")) << sx(p[0]) << ',' << sy(p[1]);
            open = true;
        }
        body_ << "  <path class=\"conic\" id=\"" << id << "\" d=\"" << d.str() << "\" fill=\"none\" stroke=\""
              << stroke << "\" stroke-width=\"1.6\"/>\n";
    }

    void mark(const BaryPoint &p, const std::string &label, const std::string &color = "black") {
        if (p.is_infinite()) return;
        const Vec2 w = world(p.normalized());
        body_ << "  <circle cx=\"" << sx(w[0]) << "\" cy=\"" << sy(w[1]) << "\" r=\"3\" fill=\"" << color
              << "\"/>\n";
        body_ << "  <text x=\"" << num((w[0] - lo_[0]) * scale_ + kPad + 5) << "\" y=\""
              << num((hi_[1] - w[1]) * scale_ + kPad - 5) << "\" font-size=\"13\" font-family=\"serif\">" << label
              << "</text>\n";
    }

    std::string finish(const std::string &title) const {
        std::ostringstream out;
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kWidth) << "\" height=\""
            << num(height_) << "\" viewBox=\"0 0 " << num(kWidth) << ' ' << num(height_) << "\">\n"
            << "  <title>" << title << "</title>\n"
            << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
            << body_.str() << "</svg>\n";
        return out.str();
    }

    bool visible(const BaryPoint &p) const {
        if (p.is_infinite()) return false;
        const Vec2 w = world(p.normalized());
        return w[0] >= lo_[0] && w[0] <= hi_[0] && w[1] >= lo_[1] && w[1] <= hi_[1];
    }

  private:
    // Points far outside the view are dropped so hyperbola branches stay bounded.
    bool inside_far(const Vec2 &p) const {
        const double wx = hi_[0] - lo_[0], wy = hi_[1] - lo_[1];
        return p[0] > lo_[0] - 2 * wx && p[0] < hi_[0] + 2 * wx && p[1] > lo_[1] - 2 * wy && p[1] < hi_[1] + 2 * wy;
    }

    Placement placement_;
    Vec2 lo_{}, hi_{};
    double scale_ = 1, height_ = 0;
    double inv_[3][3] = {};
    std::ostringstream body_;
};

void triangle(Canvas &cv) {
    cv.polygon({ref::A(), ref::B(), ref::C()}, "black");
    cv.mark(ref::A(), "A");
    cv.mark(ref::B(), "B");
    cv.mark(ref::C(), "C");
}

std::string figure_locus(const Placement &placement) {
    const std::vector<BaryPoint> extent{ref::A(), ref::B(), ref::C(), BaryPoint(-1, 1, 1), BaryPoint(1, -1, 1),
                                        BaryPoint(1, 1, -1)};
    Canvas cv(placement, extent);
    cv.conic(vertex_locus(Vertex::A).conic, ref::B(), "locus-A", "red");
    cv.conic(vertex_locus(Vertex::B).conic, ref::C(), "locus-B", "purple");
    cv.conic(vertex_locus(Vertex::C).conic, ref::A(), "locus-C", "green");
    cv.conic(steiner_circumellipse(), ref::A(), "steiner", "blue");
    triangle(cv);
    cv.mark(ref::G(), "G");
    const FieldElement r2 = FieldElement::root_of(2), one(1);
    cv.mark(BaryPoint(one, one + r2, one - r2), "P1");
    cv.mark(BaryPoint(one, one - r2, one + r2), "P2");
    return cv.finish("Vertex-orthocenter loci and the Steiner circumellipse");
}

std::string figure_conics(const Placement &placement, const BaryPoint &p) {
    const Configuration c = derive_configuration(p);
    std::vector<BaryPoint> extent{p, c.Q, c.H, c.O, c.P_prime, c.Q_prime};
    for (const auto &e : ellipse_extent(c.circumconic_O, ref::A())) extent.push_back(e);
    for (const auto &e : ellipse_extent(c.inconic, c.traces.D)) extent.push_back(e);
    Canvas cv(placement, extent);
    cv.conic(c.circumconic_O, ref::A(), "circumconic-O", "#fc5a8d");
    cv.conic(c.inconic, c.traces.D, "inconic", "green");
    if (c.cevian_conic) cv.conic(*c.cevian_conic, ref::A(), "cevian-conic", "#8c564b");
    cv.conic(nine_point_conic(c.P_prime), midpoint(ref::B(), ref::C()), "nine-point-conic", "#1f77b4");
    triangle(cv);
    cv.mark(p, "P", "#d62728");
    cv.mark(c.Q, "Q");
    cv.mark(c.H, "H", "#d62728");
    cv.mark(c.O, "O");
    cv.mark(c.P_prime, "P'");
    cv.mark(c.Q_prime, "Q'");
    cv.mark(c.traces.D, "D");
    cv.mark(c.traces.E, "E");
    cv.mark(c.traces.F, "F");
    return cv.finish("Circumconic, inconic, cevian conic and nine-point conic of P = " + p.to_string());
}

std::string figure_special(const Placement &placement) {
    const SpecialConfig sc = special_config(Variant::plus);
    const Configuration &c = sc.config;
    std::vector<BaryPoint> extent{c.P, c.P_prime, c.O, c.O_prime, *c.U, *c.Z, c.Q, c.traces.D};
    for (const auto &e : ellipse_extent(c.circumconic_O, ref::A())) extent.push_back(e);
    for (const auto &e : ellipse_extent(c.inconic, c.traces.D)) extent.push_back(e);
    Canvas cv(placement, extent);
    cv.conic(c.circumconic_O, ref::A(), "circumconic-O", "#fc5a8d");
    cv.conic(c.inconic, c.traces.D, "inconic", "green");
    triangle(cv);
    cv.line(BaryLine(-2, 1, 1), "gray", true);
    cv.line(join(c.P, c.P_prime), "#555555");
    cv.mark(c.P, "P", "#d62728");
    cv.mark(c.P_prime, "P'");
    cv.mark(c.O, "O");
    cv.mark(c.O_prime, "O'");
    cv.mark(*c.U, "U");
    cv.mark(*c.Z, "Z");
    cv.mark(c.Q, "Q");
    cv.mark(c.traces.D, "D");
    cv.mark(ref::G(), "G");
    return cv.finish("H = A with P on l_G; P', O', U, O, P equally spaced");
}

std::string figure_section4(const Placement &placement) {
    const Section4Config cfg = canonical_section4_config();
    const std::vector<BaryPoint> extent{cfg.H, cfg.U, cfg.P, cfg.V, cfg.E, cfg.F, cfg.P_prime, cfg.Q_prime};
    Canvas cv(placement, extent);
    cv.conic(cfg.C, cfg.P, "hyperbola", "#8c564b");
    cv.line(join(cfg.Z, cfg.F_prime), "gray", true);
    cv.line(join(cfg.Z, cfg.E_prime), "gray", true);
    cv.line(join(cfg.G, cfg.V), "#1f77b4");
    cv.polygon({cfg.H, cfg.U, cfg.P, cfg.V}, "#2ca02c");
    triangle(cv);
    // The first sampled inscribed triangle that fits in the view.
    for (const AdmissibleSample &s : sample_admissible(cfg, 12, 1)) {
        const InscribedTriangle t = inscribed_triangle(cfg, s.A1);
        if (t.status != InscribedTriangle::Status::ok || !cv.visible(s.A1) || !cv.visible(*t.B1) ||
            !cv.visible(*t.C1)) {
            continue;
        }
        cv.polygon({s.A1, *t.B1, *t.C1}, "#ff7f0e");
        cv.mark(s.A1, "A1", "#ff7f0e");
        break;
    }
    cv.mark(cfg.H, "H");
    cv.mark(cfg.U, "U");
    cv.mark(cfg.P, "P1", "#d62728");
    cv.mark(cfg.V, "V");
    cv.mark(cfg.Z, "Z");
    cv.mark(cfg.G, "G");
    cv.mark(cfg.O, "O");
    cv.mark(cfg.Q, "Q1");
    cv.mark(cfg.Q_prime, "Q1'");
    cv.mark(cfg.P_prime, "P1'");
    cv.mark(cfg.E, "E");
    cv.mark(cfg.F, "F");
    return cv.finish("The hyperbola C with its asymptotes and an inscribed triangle of centroid G");
}

} // namespace

Placement default_placement() { return {{{{0.0, std::sqrt(3.0)}, {-1.0, 0.0}, {1.0, 0.0}}}}; }

void require_nondegenerate(const Placement &placement) {
    const auto &v = placement.vertices;
    double extent = 0;
    for (const auto &p : v) {
        for (double c : p) {
            if (!std::isfinite(c)) throw Error(ErrorKind::DegeneratePlacement, "non-finite coordinate");
        }
    }
    for (std::size_t i = 0; i < 3; ++i) {
        const auto &p = v[i], &q = v[(i + 1) % 3];
        extent = std::max(extent, std::hypot(p[0] - q[0], p[1] - q[1]));
    }
    const double area2 = (v[1][0] - v[0][0]) * (v[2][1] - v[0][1]) - (v[1][1] - v[0][1]) * (v[2][0] - v[0][0]);
    if (extent == 0 || std::abs(area2) <= 1e-9 * extent * extent) {
        throw Error(ErrorKind::DegeneratePlacement, "A, B, C are collinear");
    }
}

Placement parse_placement(std::string_view text) {
    std::vector<double> values;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception &) {
            throw Error(ErrorKind::ParseError, "bad placement coordinate \"" + item + "\"");
        }
    }
    if (values.size() != 6) throw Error(ErrorKind::ParseError, "placement needs six numbers ax,ay,bx,by,cx,cy");
    Placement p{{{{values[0], values[1]}, {values[2], values[3]}, {values[4], values[5]}}}};
    require_nondegenerate(p);
    return p;
}

std::vector<std::string_view> figure_names() { return {"locus", "conics", "special", "section4"}; }

std::string render_figure(std::string_view figure, const Placement &placement, const std::optional<BaryPoint> &point) {
    require_nondegenerate(placement);
    if (figure == "locus") return figure_locus(placement);
    if (figure == "conics") return figure_conics(placement, point.value_or(BaryPoint(3, 4, 6)));
    if (figure == "special") return figure_special(placement);
    if (figure == "section4") return figure_section4(placement);
    throw Error(ErrorKind::BadParameter, "unknown figure " + std::string(figure));
}

} // namespace cevian
