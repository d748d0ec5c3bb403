#pragma once

#include "gaussmap/report.hpp"

namespace gaussmap {

struct AnalyzeOptions {
  bool with_timings = false;
};

/// Full pipeline for one superelliptic model: canonical system, I2, mu1 on
/// K and on K - F, mu2 with its rank and g-3 lower bound, the exact
/// factorization identity over every psi quadric, and the base locus of
/// mu2(I2). The pencil-dependent fields are skipped with a caveat when
/// f(0) = 0; everything else is still exact. Deterministic for a fixed
/// spec and flag set (timings, when requested, are the one exception).
RankReport run_analyze(const CurveSpec& spec, const AnalyzeOptions& opts = {});

/// Model given only by a monic-in-y equation plus a hand-picked family of
/// differentials sum_k c_k(x) y^k dx, each coefficient a polynomial
/// quotient. Runs the linear-algebra pipeline alone: holomorphy, genus,
/// the pencil, and the base locus are not certified, and the report says
/// so. The echoed genus is just the family size.
struct GeneralSpec {
  struct Coefficient {
    std::string num;
    std::string den = "1";
  };
  std::vector<std::string> equation;  // y-coefficients, ascending; monic
  std::vector<std::vector<Coefficient>> basis;
  std::string label;
};

RankReport run_analyze_general(const GeneralSpec& spec,
                               const AnalyzeOptions& opts = {});

GeneralSpec general_spec_from_json(const nlohmann::json& j);

}  // namespace gaussmap
