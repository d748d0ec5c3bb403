#include "gaussmap/report.hpp"

#include <sstream>

#include "gaussmap/errors.hpp"
#include "gaussmap/parse.hpp"

namespace gaussmap {

namespace {

nlohmann::json ord_to_json(long ord) {
  if (ord == kOrderInfinite) return nullptr;
  return ord;
}

long ord_from_json(const nlohmann::json& j) {
  if (j.is_null()) return kOrderInfinite;
  return j.get<long>();
}

nlohmann::json bipoly_to_json(const BiPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (long k = 0; k <= p.y_degree(); ++k) {
    arr.push_back(p.coeff(k).to_string("x"));
  }
  return arr;
}

BiPoly bipoly_from_json(const nlohmann::json& arr) {
  std::vector<UniPoly> coeffs;
  for (const auto& entry : arr) {
    coeffs.push_back(parse_poly(entry.get<std::string>()));
  }
  return BiPoly(std::move(coeffs));
}

}  // namespace

nlohmann::json to_json(const BaseLocusVerdict& verdict) {
  nlohmann::json j;
  j["is_free"] = verdict.is_free;
  j["ram"] = nlohmann::json::array();
  for (const auto& [cls, ord] : verdict.ram) {
    j["ram"].push_back(
        {{"modulus", cls.p.to_string("x")}, {"min_ord", ord_to_json(ord)}});
  }
  if (verdict.affine) {
    j["affine"] = {{"modulus", verdict.affine->modulus.to_string("x")},
                   {"y_gcd", bipoly_to_json(verdict.affine->y_gcd)}};
  } else {
    j["affine"] = nullptr;
  }
  j["infinity"] = nlohmann::json::array();
  for (const auto& [cls, ord] : verdict.infinity) {
    nlohmann::json entry;
    entry["totally_ramified"] = cls.totally_ramified;
    entry["min_ord"] = ord_to_json(ord);
    if (!cls.totally_ramified) entry["modulus"] = cls.q.to_string("w");
    j["infinity"].push_back(entry);
  }
  return j;
}

BaseLocusVerdict base_locus_from_json(const nlohmann::json& j) {
  BaseLocusVerdict verdict;
  verdict.is_free = j.at("is_free").get<bool>();
  for (const auto& entry : j.at("ram")) {
    verdict.ram.push_back(
        {RamPlaceClass{parse_poly(entry.at("modulus").get<std::string>())},
         ord_from_json(entry.at("min_ord"))});
  }
  if (!j.at("affine").is_null()) {
    const auto& a = j.at("affine");
    verdict.affine = AffineCertificate{
        parse_poly(a.at("modulus").get<std::string>()),
        bipoly_from_json(a.at("y_gcd"))};
  }
  for (const auto& entry : j.at("infinity")) {
    InfPlaceClass cls;
    cls.totally_ramified = entry.at("totally_ramified").get<bool>();
    if (!cls.totally_ramified) {
      cls.q = parse_poly(entry.at("modulus").get<std::string>(), "w");
    }
    verdict.infinity.push_back({cls, ord_from_json(entry.at("min_ord"))});
  }
  return verdict;
}

nlohmann::json to_json(const RankReport& report) {
  nlohmann::json j;
  j["curve"] = {{"label", report.label}, {"n", report.n},  {"f", report.f},
                {"m", report.m},         {"d", report.d},  {"genus", report.genus}};
  j["dim_i2"] = report.dim_i2;
  j["rank_mu1_k"] = report.rank_mu1_k;
  j["rank_mu1_l"] =
      report.rank_mu1_l ? nlohmann::json(*report.rank_mu1_l) : nullptr;
  j["rank_mu2"] = report.rank_mu2;
  j["lower_bound_g_minus_3"] = report.lower_bound_g_minus_3;
  j["factorization_checks_passed"] =
      report.factorization_checks_passed
          ? nlohmann::json(*report.factorization_checks_passed)
          : nullptr;
  j["base_locus"] =
      report.base_locus ? to_json(*report.base_locus) : nullptr;
  j["caveats"] = report.caveats;
  if (!report.timings.empty()) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : report.timings) {
      arr.push_back({{"stage", t.stage}, {"milliseconds", t.milliseconds}});
    }
    j["timings"] = arr;
  }
  return j;
}

RankReport report_from_json(const nlohmann::json& j) {
  RankReport r;
  const auto& c = j.at("curve");
  r.label = c.at("label").get<std::string>();
  r.n = c.at("n").get<long>();
  r.f = c.at("f").get<std::string>();
  r.m = c.at("m").get<long>();
  r.d = c.at("d").get<long>();
  r.genus = c.at("genus").get<long>();
  r.dim_i2 = j.at("dim_i2").get<long>();
  r.rank_mu1_k = j.at("rank_mu1_k").get<long>();
  if (!j.at("rank_mu1_l").is_null()) {
    r.rank_mu1_l = j.at("rank_mu1_l").get<long>();
  }
  r.rank_mu2 = j.at("rank_mu2").get<long>();
  r.lower_bound_g_minus_3 = j.at("lower_bound_g_minus_3").get<bool>();
  if (!j.at("factorization_checks_passed").is_null()) {
    r.factorization_checks_passed =
        j.at("factorization_checks_passed").get<long>();
  }
  if (!j.at("base_locus").is_null()) {
    r.base_locus = base_locus_from_json(j.at("base_locus"));
  }
  r.caveats = j.at("caveats").get<std::vector<std::string>>();
  if (j.contains("timings")) {
    for (const auto& t : j.at("timings")) {
      r.timings.push_back({t.at("stage").get<std::string>(),
                           t.at("milliseconds").get<long>()});
    }
  }
  return r;
}

nlohmann::json to_json(const CurveSpec& spec) {
  nlohmann::json j;
  j["n"] = spec.n;
  j["f"] = spec.f_source;
  if (!spec.label.empty()) j["label"] = spec.label;
  if (!spec.ram_moduli.empty()) j["ram_moduli"] = spec.ram_moduli;
  return j;
}

CurveSpec curve_spec_from_json(const nlohmann::json& j) {
  CurveSpec spec;
  spec.n = j.at("n").get<long>();
  spec.f_source = j.at("f").get<std::string>();
  if (j.contains("label")) spec.label = j.at("label").get<std::string>();
  if (j.contains("ram_moduli")) {
    spec.ram_moduli = j.at("ram_moduli").get<std::vector<std::string>>();
  }
  return spec;
}

std::string dump_json(const nlohmann::json& j) {
  return j.dump(2) + "\n";
}

namespace {

std::string ord_text(long ord) {
  if (ord == kOrderInfinite) return "infinite";
  return std::to_string(ord);
}

}  // namespace

std::string render_text(const RankReport& report) {
  std::ostringstream out;
  if (!report.label.empty()) out << "curve       " << report.label << "\n";
  out << "model       y^" << report.n << " = " << report.f << "\n";
  out << "genus       " << report.genus << "   (m = " << report.m
      << ", gcd(n, m) = " << report.d << ")\n";
  out << "dim I2      " << report.dim_i2 << "\n";
  out << "rank mu1,K  " << report.rank_mu1_k << "\n";
  out << "rank mu1,L  "
      << (report.rank_mu1_l ? std::to_string(*report.rank_mu1_l)
                            : std::string("(skipped)"))
      << "\n";
  out << "rank mu2    " << report.rank_mu2 << "\n";
  out << "mu2 >= g-3  " << (report.lower_bound_g_minus_3 ? "yes" : "NO")
      << "\n";
  if (report.factorization_checks_passed) {
    out << "psi splits  " << *report.factorization_checks_passed
        << " checked\n";
  }
  if (report.base_locus) {
    const BaseLocusVerdict& bl = *report.base_locus;
    out << "base locus  " << (bl.is_free ? "free" : "NOT free") << "\n";
    for (const auto& [cls, ord] : bl.ram) {
      out << "  ram " << cls.p.to_string("x") << ": min ord "
          << ord_text(ord) << "\n";
    }
    if (bl.affine) {
      out << "  affine common zero over "
          << bl.affine->modulus.to_string("x") << "\n";
    }
    for (const auto& [cls, ord] : bl.infinity) {
      out << "  infinity"
          << (cls.totally_ramified ? std::string(" (one place)")
                                   : " " + cls.q.to_string("w"))
          << ": min ord " << ord_text(ord) << "\n";
    }
  } else {
    out << "base locus  (not computed)\n";
  }
  for (const std::string& caveat : report.caveats) {
    out << "caveat      " << caveat << "\n";
  }
  for (const auto& t : report.timings) {
    out << "time        " << t.stage << " " << t.milliseconds << " ms\n";
  }
  return out.str();
}

}  // namespace gaussmap
