#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaussmap/base_locus.hpp"

namespace gaussmap {

/// One curve job: y^n = f(x), f given as an expression in x.
struct CurveSpec {
  long n = 2;
  std::string f_source;
  std::string label;                    // optional; empty means unset
  std::vector<std::string> ram_moduli;  // optional extra ram classes to report
};

struct StageTiming {
  std::string stage;
  long milliseconds = 0;
};

/// Everything the analyze pipeline measures on one curve. The fields tied
/// to the pencil of fibers over x = 0 (rank_mu1_l, the factorization
/// count) are absent when f(0) = 0; caveats then says what was skipped
/// and which shift x -> x + t would enable them.
struct RankReport {
  std::string label;
  long n = 0;
  std::string f;  // rendered polynomial; parses back to the model's f
  long m = 0;
  long d = 0;
  long genus = 0;

  long dim_i2 = 0;
  long rank_mu1_k = 0;
  std::optional<long> rank_mu1_l;
  long rank_mu2 = 0;
  bool lower_bound_g_minus_3 = false;
  std::optional<long> factorization_checks_passed;
  std::optional<BaseLocusVerdict> base_locus;  // absent when I2 = 0 or the
                                               // model is not certified

  std::vector<std::string> caveats;
  std::vector<StageTiming> timings;  // filled only on request
};

/// JSON conventions used across the artifact: objects with snake_case
/// keys (emitted sorted), integers as JSON numbers, polynomials as
/// expression strings that parse_poly accepts, infinite vanishing order
/// as null. to_json/from_json round-trip losslessly.
nlohmann::json to_json(const BaseLocusVerdict& verdict);
BaseLocusVerdict base_locus_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RankReport& report);
RankReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CurveSpec& spec);
CurveSpec curve_spec_from_json(const nlohmann::json& j);

/// Stable bytes: two-space indent, sorted keys, trailing newline.
std::string dump_json(const nlohmann::json& j);

/// Terminal rendering of one report.
std::string render_text(const RankReport& report);

}  // namespace gaussmap
