#include "cevian/conic.hpp"

#include "cevian/error.hpp"

#include <utility>

namespace cevian {

namespace {

using Row6 = std::array<FieldElement, 6>;

// Position of m(i,j) in the upper-triangle unknown vector.
constexpr std::size_t kIndex[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};

Mat3 from_unknowns(const Row6 &u) {
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = u[kIndex[i][j]];
    }
    return m;
}

// Row expressing x^T m x = 0.
Row6 incidence_row(const Triple &x) {
    Row6 row{};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i; j < 3; ++j) row[kIndex[i][j]] = (i == j ? FieldElement(1) : FieldElement(2)) * x[i] * x[j];
    }
    return row;
}

// Row expressing (m x)_i = 0.
Row6 polar_row(const Triple &x, std::size_t i) {
    Row6 row{};
    for (std::size_t j = 0; j < 3; ++j) row[kIndex[i][j]] += x[j];
    return row;
}

// Null space of a k x 6 system by Gauss-Jordan elimination.
std::vector<Row6> null_space(std::vector<Row6> rows) {
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 6 && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const FieldElement inv = rows[rank][col].inverse();
        for (auto &v : rows[rank]) v *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            const FieldElement factor = rows[r][col];
            for (std::size_t c = 0; c < 6; ++c) rows[r][c] -= factor * rows[rank][c];
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    std::vector<Row6> basis;
    for (std::size_t free = 0; free < 6; ++free) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
        Row6 v{};
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -rows[r][free];
        basis.push_back(v);
    }
    return basis;
}

Conic unique_solution(std::vector<Row6> rows, const char *what) {
    const auto basis = null_space(std::move(rows));
    if (basis.size() != 1) {
        throw Error(ErrorKind::DegenerateConfiguration,
                    std::string(what) + ": solution space has dimension " + std::to_string(basis.size()));
    }
    return Conic(from_unknowns(basis[0]));
}

// Two independent points spanning the line.
std::pair<Triple, Triple> line_basis(const BaryLine &l) {
    std::vector<Triple> candidates;
    for (std::size_t i = 0; i < 3; ++i) {
        Triple axis{};
        axis[i] = 1;
        const Triple p = cross(l.coeffs(), axis);
        if (!is_zero(p)) candidates.push_back(p);
    }
    for (std::size_t j = 1; j < candidates.size(); ++j) {
        if (!proportional(candidates[0], candidates[j])) return {candidates[0], candidates[j]};
    }
    throw Error(ErrorKind::DegenerateConfiguration, "line " + l.to_string() + " has no spanning pair");
}

// Binary quadratic form of the conic restricted to l_inf, on the basis
// (1,-1,0), (0,1,-1): coefficients of s^2, 2st, t^2.
std::array<FieldElement, 3> restrict_to_infinity(const Conic &c) {
    const Triple e{1, -1, 0};
    const Triple f{0, 1, -1};
    const Mat3 &m = c.matrix();
    return {dot(e, m * e), dot(e, m * f), dot(f, m * f)};
}

} // namespace

Conic::Conic(const Mat3 &m) : m_(m) {
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            if (!(m_(i, j) == m_(j, i))) throw Error(ErrorKind::DegenerateConic, "conic matrix is not symmetric");
        }
    }
    if (m_.is_zero()) throw Error(ErrorKind::DegenerateConic, "zero conic matrix");
    for (const auto &entry : upper()) {
        if (entry.is_zero()) continue;
        if (!entry.is_one()) m_ = entry.inverse() * m_;
        break;
    }
}

Conic Conic::from_upper(const std::array<FieldElement, 6> &upper) { return Conic(from_unknowns(upper)); }

std::array<FieldElement, 6> Conic::upper() const { return {m_(0, 0), m_(0, 1), m_(0, 2), m_(1, 1), m_(1, 2), m_(2, 2)}; }

Conic Conic::image(const AffineMap &f) const {
    const Mat3 inv = f.matrix().inverse();
    return Conic(inv.transpose() * m_ * inv);
}

Conic conic_through_5(std::span<const BaryPoint, 5> points) {
    std::vector<Row6> rows;
    for (const auto &p : points) rows.push_back(incidence_row(p.coords()));
    return unique_solution(std::move(rows), "conic through five points");
}

Conic conic_through_5(const BaryPoint &p1, const BaryPoint &p2, const BaryPoint &p3, const BaryPoint &p4,
                      const BaryPoint &p5) {
    const std::array<BaryPoint, 5> pts{p1, p2, p3, p4, p5};
    return conic_through_5(std::span<const BaryPoint, 5>(pts));
}

BaryLine polar(const Conic &c, const BaryPoint &p) {
    const Triple l = c.matrix() * p.coords();
    if (is_zero(l)) throw Error(ErrorKind::DegenerateConic, "point " + p.to_string() + " is a singular point");
    return BaryLine(l);
}

BaryPoint pole(const Conic &c, const BaryLine &l) {
    if (c.is_degenerate()) throw Error(ErrorKind::DegenerateConic, "pole with respect to a degenerate conic");
    return BaryPoint(c.matrix().inverse() * l.coeffs());
}

BaryPoint conic_center(const Conic &c) { return pole(c, BaryLine::infinity()); }

BaryLine tangent_at(const Conic &c, const BaryPoint &p) {
    if (!c.contains(p)) throw Error(ErrorKind::PointNotOnConic, "point " + p.to_string() + " is not on the conic");
    return polar(c, p);
}

LineConicIntersection line_conic_intersect(const Conic &c, const BaryLine &l, Adjoin adjoin) {
    const auto [p1, p2] = line_basis(l);
    const Mat3 &m = c.matrix();
    // Points s p1 + t p2; the form is cc s^2 + 2 b s t + a t^2.
    const FieldElement a = dot(p2, m * p2);
    const FieldElement b = dot(p1, m * p2);
    const FieldElement cc = dot(p1, m * p1);
    if (a.is_zero() && b.is_zero() && cc.is_zero()) {
        throw Error(ErrorKind::DegenerateConic, "line " + l.to_string() + " lies on the conic");
    }
    LineConicIntersection out;
    const FieldElement disc = b * b - a * cc;
    out.discriminant_sign = disc.sign();
    if (out.discriminant_sign < 0) return out;
    if (out.discriminant_sign == 0) {
        out.points.emplace_back(a.is_zero() ? p2 : a * p1 - b * p2);
        return out;
    }
    if (a.is_zero()) {
        out.points.emplace_back(p2);
        out.points.emplace_back(FieldElement(2) * b * p1 - cc * p2);
        return out;
    }
    FieldElement root;
    if (adjoin == Adjoin::automatic) {
        root = sqrt_adjoin(disc, Tower::join(m(0, 0).tower(), l[0].tower()));
    } else {
        auto r = fe_sqrt(disc);
        if (auto *nas = std::get_if<NotASquare>(&r)) {
            out.extension = nas->radicand;
            return out;
        }
        root = std::get<FieldElement>(r);
    }
    out.points.emplace_back(a * p1 + (root - b) * p2);
    out.points.emplace_back(a * p1 - (root + b) * p2);
    return out;
}

std::optional<BaryLine> radical_line(const Conic &c1, const Conic &c2) {
    const auto q1 = restrict_to_infinity(c1);
    const auto q2 = restrict_to_infinity(c2);
    const Triple t1{q1[0], q1[1], q1[2]};
    const Triple t2{q2[0], q2[1], q2[2]};
    if (!proportional(t1, t2)) throw Error(ErrorKind::NotSharedInfinity, "conics meet l_inf in different points");
    const FieldElement scale = vector_ratio(t1, t2);
    const Mat3 residual = c1.matrix() - scale * c2.matrix();
    if (residual.is_zero()) throw Error(ErrorKind::IdenticalConics, "the conics coincide");
    const Triple line{residual(0, 0), residual(1, 1), residual(2, 2)};
    const FieldElement half = FieldElement::fraction(1, 2);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            if (!(residual(i, j) == half * (line[i] + line[j]))) {
                throw Error(ErrorKind::NotSharedInfinity, "pencil member is not l_inf times a line");
            }
        }
    }
    if (is_zero(line) || proportional(line, BaryLine::infinity().coeffs())) return std::nullopt;
    return BaryLine(line);
}

std::vector<BaryPoint> conic_conic_intersect_shared_infinity(const Conic &c1, const Conic &c2, Adjoin adjoin) {
    const auto line = radical_line(c1, c2);
    if (!line) return {};
    std::vector<BaryPoint> out;
    for (auto &p : line_conic_intersect(c1, *line, adjoin).points) {
        if (p.is_ordinary()) out.push_back(std::move(p));
    }
    return out;
}

std::string_view to_string(AffineType t) noexcept {
    switch (t) {
    case AffineType::ellipse: return "ellipse";
    case AffineType::parabola: return "parabola";
    case AffineType::hyperbola: return "hyperbola";
    }
    return "unknown";
}

AffineType classify_affine_type(const Conic &c) {
    const auto q = restrict_to_infinity(c);
    if (q[0].is_zero() && q[1].is_zero() && q[2].is_zero()) {
        throw Error(ErrorKind::DegenerateConic, "conic contains the line at infinity");
    }
    const int s = (q[1] * q[1] - q[0] * q[2]).sign();
    if (s > 0) return AffineType::hyperbola;
    if (s == 0) return AffineType::parabola;
    return AffineType::ellipse;
}

std::vector<BaryPoint> infinite_points(const Conic &c) {
    return line_conic_intersect(c, BaryLine::infinity()).points;
}

std::array<BaryLine, 2> asymptotes(const Conic &c) {
    if (classify_affine_type(c) != AffineType::hyperbola) {
        throw Error(ErrorKind::NotAHyperbola, "asymptotes need two real infinite points");
    }
    const auto pts = infinite_points(c);
    return {tangent_at(c, pts[0]), tangent_at(c, pts[1])};
}

int side(const Conic &c, const BaryPoint &p) {
    const BaryPoint center = conic_center(c);
    if (center.is_infinite()) throw Error(ErrorKind::DegenerateConic, "side test needs a central conic");
    const int at_center = c.form(center.normalized()).sign();
    if (at_center == 0) throw Error(ErrorKind::DegenerateConic, "center lies on the conic");
    return -at_center * c.form(p.normalized()).sign();
}

bool is_interior(const Conic &c, const BaryPoint &p) {
    const int s = side(c, p);
    return classify_affine_type(c) == AffineType::ellipse ? s < 0 : s > 0;
}

Conic circumconic_of_line(const BaryLine &l) {
    const FieldElement h = FieldElement::fraction(1, 2);
    const auto &[p, q, r] = l.coeffs();
    return Conic(Mat3({Triple{0, h * r, h * q}, Triple{h * r, 0, h * p}, Triple{h * q, h * p, 0}}));
}

Conic steiner_circumellipse() { return circumconic_of_line(BaryLine::infinity()); }

Conic cevian_conic(const BaryPoint &p) {
    return conic_through_5(ref::A(), ref::B(), ref::C(), p, isotom_complement(p));
}

Conic inconic(const BaryPoint &p) {
    require_valid(p);
    const Traces t = cevian_traces(p);
    std::vector<Row6> rows{
        polar_row(t.D.coords(), 1), polar_row(t.D.coords(), 2), // tangent at D is BC
        polar_row(t.E.coords(), 0), polar_row(t.E.coords(), 2), // tangent at E is CA
        incidence_row(t.F.coords()),
    };
    Conic c = unique_solution(std::move(rows), "inconic");
    if (!(polar(c, t.F) == BaryLine(0, 0, 1)) || !(conic_center(c) == isotom_complement(p))) {
        throw Error(ErrorKind::DegenerateConfiguration, "inconic tangency or center check failed");
    }
    return c;
}

Conic nine_point_conic(const BaryPoint &p_prime) {
    if (p_prime.is_infinite()) throw Error(ErrorKind::InfinitePointArgument, "P' is at infinity");
    const BaryPoint a = ref::A(), b = ref::B(), c = ref::C();
    Conic n = conic_through_5(midpoint(b, c), midpoint(c, a), midpoint(a, b), midpoint(a, p_prime),
                              midpoint(b, p_prime));
    if (!n.contains(midpoint(c, p_prime))) {
        throw Error(ErrorKind::DegenerateConfiguration, "sixth midpoint is off the nine-point conic");
    }
    return n;
}

Conic circumconic_O(const BaryPoint &p) {
    require_valid(p);
    const BaryPoint p_prime = isotomic(p);
    return nine_point_conic(p_prime).image(cevian_map(p_prime).inverse());
}

} // namespace cevian
