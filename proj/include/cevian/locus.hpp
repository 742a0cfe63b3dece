#pragma once

// Vertex-orthocenter loci, the special configuration on l_G, and the
// inscribed-triangle construction of E_S on the hyperbola C_P.

#include "cevian/configuration.hpp"
#include "cevian/curve.hpp"
#include "cevian/report.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace cevian {

enum class Vertex { A, B, C };
std::string_view to_string(Vertex v) noexcept;
BaryPoint vertex_point(Vertex v);

/// The conic of points P with H = vertex; for A it is xy + xz + yz = x^2.
struct VertexLocus {
    Vertex vertex;
    Conic conic;
    std::array<BaryPoint, 4> excluded; ///< the other two vertices and two side midpoints
};

VertexLocus vertex_locus(Vertex v);

/// For A: (1+t : 1-t : t(1+t)); B and C permute the coordinates so the
/// singled-out variable moves. t = -1, 0, 1 hit excluded points (infinity is
/// the fourth) and throw ExcludedParameter.
BaryPoint locus_param(Vertex v, const FieldElement &t);

/// The vertex equal to H(P), if any.
std::optional<Vertex> vertex_orthocenter_check(const BaryPoint &p);

struct Lemma21 {
    bool a; ///< H = A
    bool b; ///< AFQE is a parallelogram
    bool c; ///< F3, Q, E0, K(E3) collinear
    bool d; ///< E3, Q, F0, K(F3) collinear
    bool all_equal() const { return a == b && b == c && c == d; }
};

Lemma21 lemma21_check(const BaryPoint &p);

enum class Variant { plus, minus };

/// P = (1 : 1+-sqrt2 : 1-+sqrt2) on l_G, with the checks made on it.
struct SpecialConfig {
    Configuration config;
    Report checks;
};

SpecialConfig special_config(Variant variant);

/// Metric checks in the Cartesian placement A=(0,sqrt3), B=(-1,0), C=(1,0)
/// for the variant whose trace D lies beyond C.
Report equilateral_embedding_check();

/// Ratio DD0/D0C for P on the A-locus, as signed_ratio(D0, D, C).
FieldElement median_trace_ratio(const BaryPoint &p);

struct Section4Config {
    BaryPoint H, U, P, V, Z, G, O, Q, Q_prime, O_prime, P_prime;
    Conic C; ///< C_P = PQHQ'P'
    BaryPoint E, F, E_prime, F_prime;
    BaryPoint A_inf, B_inf; ///< infinite points of the asymptotes ZF' and ZE'
    AffineMap T_P;
};

/// Throws NotTranslation or OnMedian; DegenerateConfiguration when the
/// asymptote identity fails.
Section4Config section4_config_from(const BaryPoint &p);
/// The canonical configuration from P = (1 : 1+sqrt2 : 1-sqrt2).
Section4Config canonical_section4_config();

/// Y -> PT_P(Y) . GV for Y on GV.
BaryPoint projectivity_pi(const Section4Config &cfg, const BaryPoint &y);

/// Parallelogram and midpoint relations of the configuration.
Report section4_structure_checks(const Section4Config &cfg);

struct InscribedTriangle {
    enum class Status { ok, no_intersection, degenerate };
    Status status = Status::no_intersection;
    /// Ordered so that (A1, B1, C1) is positively oriented.
    std::optional<BaryPoint> B1, C1;
};

/// Throws PointNotOnConic or InfinitePointArgument.
InscribedTriangle inscribed_triangle(const Section4Config &cfg, const BaryPoint &a1);

/// Whether A1 has an inscribed triangle with centroid G; decided by the sign
/// of the radical-line discriminant. Throws PointNotOnConic.
bool admissible(const Section4Config &cfg, const BaryPoint &a1);

/// A(P1) with A taking (A1,B1,C1) (orientation 1) or (A1,C1,B1) (orientation 2)
/// to ABC. Throws DegenerateConfiguration when A1 is not admissible.
BaryPoint reconstruct_P(const Section4Config &cfg, const BaryPoint &a1, int orientation);

struct AdmissibleSample {
    BaryPoint A1;
    BaryPoint source; ///< the point of E_S whose parallelogram was mapped onto cfg
};

/// Admissible A1 obtained as images of A under the affine maps taking the
/// parallelogram of a sampled point of E_S onto that of cfg.
std::vector<AdmissibleSample> sample_admissible(const Section4Config &cfg, std::size_t n, std::uint32_t seed);

struct CurveLocusPoint {
    BaryPoint point;
    int multiplicity;
};

/// E_S meet the vertex locus conic, by substituting the parametrization.
std::vector<CurveLocusPoint> es_locus_intersection(Vertex v);

} // namespace cevian
