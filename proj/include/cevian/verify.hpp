#pragma once

// Named verification suites. Each returns a Report with one entry per
// invariant; failures carry the offending input in `detail`.

#include "cevian/configuration.hpp"
#include "cevian/report.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace cevian {

/// The six statements that characterize M being a translation.
struct TranslationConditions {
    bool parallelogram;     ///< OQQ'O' is a parallelogram
    bool circumconic_has_P; ///< C~_O passes through P
    bool o_on_pp;           ///< O and O' lie on PP'
    bool z_on_qq;           ///< Z lies on QQ'
    bool gz_zv_third;       ///< GZ/ZV = 1/3
    bool u_is_kv;           ///< U = K(V)

    bool all_equal() const;
    bool all_true() const;
};

/// Needs a configuration off the medians.
TranslationConditions translation_conditions(const Configuration &c);

/// The consequences that hold when M is a translation.
Report translation_consequences(const Configuration &c);

std::vector<std::string_view> suite_names();

/// Throws BadParameter for an unknown suite; "all" runs every suite.
Report run_suite(std::string_view name, std::uint32_t seed, std::size_t n);

} // namespace cevian
