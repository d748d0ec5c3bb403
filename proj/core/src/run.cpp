#include "gaussmap/run.hpp"

#include <chrono>
#include <sstream>

#include "gaussmap/errors.hpp"
#include "gaussmap/parse.hpp"
#include "gaussmap/quadrics.hpp"

namespace gaussmap {

namespace {

class StageClock {
public:
  explicit StageClock(bool enabled) : enabled_(enabled) {}

  template <class F>
  auto run(const char* stage, F&& fn) {
    if (!enabled_) return fn();
    auto start = std::chrono::steady_clock::now();
    auto result = fn();
    auto stop = std::chrono::steady_clock::now();
    timings_.push_back(
        {stage, std::chrono::duration_cast<std::chrono::milliseconds>(
                    stop - start)
                    .count()});
    return result;
  }

  std::vector<StageTiming> take() { return std::move(timings_); }

private:
  bool enabled_;
  std::vector<StageTiming> timings_;
};

/// Minimum vanishing order of the family along a user-supplied class.
long family_min_ord(const std::vector<KForm>& images,
                    const RamPlaceClass& cls) {
  long best = kOrderInfinite;
  for (const KForm& img : images) {
    if (img.elt.is_zero()) continue;
    best = std::min(best, ord_at_ram(img, cls));
  }
  return best;
}

std::string render_equation(const BiPoly& equation) {
  std::ostringstream out;
  bool first = true;
  for (long k = equation.y_degree(); k >= 0; --k) {
    const UniPoly& c = equation.coeff(k);
    if (c.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    if (k == 0) {
      out << "(" << c.to_string("x") << ")";
      continue;
    }
    if (!(c.degree() == 0 && c.coeff(0) == 1)) {
      out << "(" << c.to_string("x") << ")*";
    }
    out << "y";
    if (k > 1) out << "^" << k;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace

RankReport run_analyze(const CurveSpec& spec, const AnalyzeOptions& opts) {
  RankReport r;
  r.label = spec.label;
  UniPoly f = parse_poly(spec.f_source);
  CurvePtr curve = CurveModel::superelliptic(spec.n, f);
  r.n = curve->n();
  r.f = curve->f().to_string("x");
  r.m = curve->m();
  r.d = curve->d();
  r.genus = curve->genus();

  StageClock clock(opts.with_timings);
  CanonicalBasis basis =
      clock.run("canonical", [&] { return canonical_basis(curve); });
  std::vector<QuadricForm> i2 =
      clock.run("i2", [&] { return i2_from_forms(basis.forms); });
  r.dim_i2 = static_cast<long>(i2.size());

  r.rank_mu1_k =
      clock.run("mu1_k", [&] { return mu1(basis.forms, "mu1(K)").rank; });

  bool pencil_ok = true;
  try {
    std::vector<KForm> sub = subsystem_K_minus_F(basis);
    r.rank_mu1_l = clock.run("mu1_l", [&] {
      return sub.size() < 2 ? 0L : mu1(sub, "mu1(K-F)").rank;
    });
  } catch (const NeedsShiftError& e) {
    pencil_ok = false;
    r.caveats.push_back(std::string(e.what()) +
                        "; rank_mu1_l and the factorization checks were "
                        "skipped");
  }

  GaussMapImage m2 =
      clock.run("mu2", [&] { return mu2_image(i2, basis.forms); });
  r.rank_mu2 = m2.rank;
  r.lower_bound_g_minus_3 = m2.rank >= r.genus - 3;

  if (pencil_ok) {
    r.factorization_checks_passed = clock.run("factorization", [&] {
      auto [u0, u1] = pencil_F(curve);
      std::vector<KForm> sub = subsystem_K_minus_F(basis);
      long passed = 0;
      long failed = 0;
      for (std::size_t i = 0; i < sub.size(); ++i) {
        for (std::size_t j = i + 1; j < sub.size(); ++j) {
          AdjointPair pair = make_adjoint_pair(basis, u0, u1, sub[i], sub[j]);
          (factorization_check(pair) ? passed : failed) += 1;
        }
      }
      if (failed > 0) {
        r.caveats.push_back(std::to_string(failed) +
                            " factorization checks FAILED");
      }
      return passed;
    });
  }

  if (r.dim_i2 == 0) {
    r.caveats.push_back("I2 is zero; there is no base-point report");
  } else {
    r.base_locus =
        clock.run("base_locus", [&] { return base_locus(m2.images); });
    for (const std::string& text : spec.ram_moduli) {
      RamPlaceClass cls{parse_poly(text).monic()};
      r.base_locus->ram.push_back({cls, family_min_ord(m2.images, cls)});
    }
  }

  r.timings = clock.take();
  return r;
}

RankReport run_analyze_general(const GeneralSpec& spec,
                               const AnalyzeOptions& opts) {
  std::vector<UniPoly> eq_coeffs;
  eq_coeffs.reserve(spec.equation.size());
  for (const std::string& text : spec.equation) {
    eq_coeffs.push_back(parse_poly(text));
  }
  BiPoly equation(std::move(eq_coeffs));
  CurvePtr curve = CurveModel::general(equation);
  const std::size_t n = static_cast<std::size_t>(curve->n());

  std::vector<KForm> forms;
  forms.reserve(spec.basis.size());
  for (const auto& row : spec.basis) {
    if (row.size() != n) {
      throw CurveError("each basis element needs exactly n coefficients");
    }
    std::vector<RatFunc> coeffs;
    coeffs.reserve(n);
    for (const auto& c : row) {
      UniPoly den = parse_poly(c.den);
      if (den.is_zero()) throw CurveError("zero denominator in a basis coefficient");
      coeffs.emplace_back(parse_poly(c.num), std::move(den));
    }
    forms.push_back({FFElement(curve, std::move(coeffs)), 1});
  }
  if (forms.empty()) throw CurveError("a general model needs a basis");

  RankReport r;
  r.label = spec.label;
  r.n = curve->n();
  r.f = render_equation(equation);
  r.m = 0;
  r.d = 0;
  r.genus = static_cast<long>(forms.size());
  r.caveats.push_back(
      "general model: holomorphy, genus, pencil, and base locus are not "
      "certified; the echoed genus is the family size");

  StageClock clock(opts.with_timings);
  std::vector<QuadricForm> i2 =
      clock.run("i2", [&] { return i2_from_forms(forms); });
  r.dim_i2 = static_cast<long>(i2.size());
  r.rank_mu1_k =
      clock.run("mu1_k", [&] { return mu1(forms, "mu1(K)").rank; });
  GaussMapImage m2 = clock.run("mu2", [&] { return mu2_image(i2, forms); });
  r.rank_mu2 = m2.rank;
  r.lower_bound_g_minus_3 = m2.rank >= r.genus - 3;
  r.timings = clock.take();
  return r;
}

GeneralSpec general_spec_from_json(const nlohmann::json& j) {
  GeneralSpec spec;
  spec.equation = j.at("equation").get<std::vector<std::string>>();
  for (const auto& row : j.at("basis")) {
    std::vector<GeneralSpec::Coefficient> coeffs;
    for (const auto& entry : row) {
      GeneralSpec::Coefficient c;
      if (entry.is_string()) {
        c.num = entry.get<std::string>();
      } else {
        c.num = entry.at("num").get<std::string>();
        if (entry.contains("den")) c.den = entry.at("den").get<std::string>();
      }
      coeffs.push_back(std::move(c));
    }
    spec.basis.push_back(std::move(coeffs));
  }
  if (j.contains("label")) spec.label = j.at("label").get<std::string>();
  return spec;
}

}  // namespace gaussmap
