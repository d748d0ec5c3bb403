// Command-line front end: analyze one curve, sweep a family, evaluate the
// counting predicates, replicate the whole result table, or certify a base
// locus. Exit codes: 0 success, 1 failed verification, 3 domain error,
// 4 unexpected error. All numeric output is exact.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gaussmap/errors.hpp"
#include "gaussmap/gaussian.hpp"
#include "gaussmap/numerology.hpp"
#include "gaussmap/parallel.hpp"
#include "gaussmap/parse.hpp"
#include "gaussmap/report.hpp"
#include "gaussmap/run.hpp"
#include "gaussmap/verify.hpp"

using namespace gaussmap;

namespace {

void print_error(bool json, const std::string& kind,
                 const std::string& message, const nlohmann::json& extra) {
  if (json) {
    nlohmann::json j;
    j["error"] = {{"kind", kind}, {"message", message}};
    for (auto it = extra.begin(); it != extra.end(); ++it) {
      j["error"][it.key()] = it.value();
    }
    std::cout << dump_json(j);
  } else {
    std::cerr << "error (" << kind << "): " << message << "\n";
  }
}

template <class Fn>
int guarded(bool json, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    print_error(json, "parse", e.what(), {});
  } catch (const NeedsShiftError& e) {
    print_error(json, "needs_shift", e.what(), {{"shift", e.shift()}});
  } catch (const NotInI2Error& e) {
    print_error(json, "not_in_i2", e.what(), {});
  } catch (const NotAdjointError& e) {
    print_error(json, "not_adjoint", e.what(), {});
  } catch (const DependentSectionsError& e) {
    print_error(json, "dependent_sections", e.what(), {});
  } catch (const BadPrimeError& e) {
    print_error(json, "bad_prime", e.what(), {});
  } catch (const CurveError& e) {
    print_error(json, "curve", e.what(), {});
  } catch (const InternalError& e) {
    print_error(json, "internal", e.what(), {});
  } catch (const Error& e) {
    print_error(json, "domain", e.what(), {});
  } catch (const std::exception& e) {
    print_error(json, "unexpected", e.what(), {});
    return 4;
  }
  return 3;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

std::string csv_field(const std::string& s) { return "\"" + s + "\""; }

std::string report_csv_header() {
  return "label,n,f,genus,m,d,dim_i2,rank_mu1_k,rank_mu1_l,rank_mu2,"
         "mu2_rank_ge_g_minus_3,factorization_checks_passed,base_free\n";
}

std::string report_csv_row(const RankReport& r) {
  std::ostringstream out;
  out << csv_field(r.label) << ',' << r.n << ',' << csv_field(r.f) << ','
      << r.genus << ',' << r.m << ',' << r.d << ',' << r.dim_i2 << ','
      << r.rank_mu1_k << ',';
  if (r.rank_mu1_l) out << *r.rank_mu1_l;
  out << ',' << r.rank_mu2 << ','
      << (r.lower_bound_g_minus_3 ? "true" : "false") << ',';
  if (r.factorization_checks_passed) out << *r.factorization_checks_passed;
  out << ',';
  if (r.base_locus) out << (r.base_locus->is_free ? "true" : "false");
  out << '\n';
  return out.str();
}

void print_report(const RankReport& r, bool json) {
  if (json) {
    std::cout << dump_json(to_json(r));
  } else {
    std::cout << render_text(r);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Gaussian-map calculator for superelliptic curves y^n = f(x)"};
  app.require_subcommand(1);

  // ---- analyze ----
  auto* analyze = app.add_subcommand(
      "analyze", "Rank and base-locus report for one curve");
  CurveSpec spec;
  std::string general_file;
  bool an_json = false, an_timings = false;
  analyze->add_option("--n", spec.n, "Covering degree n (y^n = f)")
      ->default_val(2);
  auto* f_opt =
      analyze->add_option("--f", spec.f_source, "Right-hand side f(x)");
  analyze->add_option("--label", spec.label, "Label echoed in the report");
  analyze->add_option("--ram", spec.ram_moduli,
                      "Extra squarefree divisor of f to report orders on");
  analyze->add_option("--general", general_file,
                      "JSON file with a monic-in-y equation and an explicit "
                      "differential basis; linear algebra only");
  analyze->add_flag("--json", an_json, "Machine-readable output");
  analyze->add_flag("--timings", an_timings,
                    "Include per-stage wall times (breaks byte stability)");

  // ---- sweep ----
  auto* sweep = app.add_subcommand(
      "sweep", "Analyze a JSON array of curve specs, in input order");
  std::string sweep_file;
  unsigned sweep_threads = 0;
  bool sw_json = false, sw_csv = false, sw_timings = false;
  sweep->add_option("config", sweep_file, "JSON config file")->required();
  sweep->add_option("--threads", sweep_threads, "Worker count (0 = auto)");
  sweep->add_flag("--json", sw_json, "Machine-readable output");
  sweep->add_flag("--csv", sw_csv, "CSV rank table");
  sweep->add_flag("--timings", sw_timings, "Include per-stage wall times");

  // ---- numerology ----
  auto* numer = app.add_subcommand(
      "numerology", "Counting predicates: product-curve genus, expected "
                    "dim I2, surjectivity threshold");
  std::vector<long> nm_product, nm_h0, nm_bel, nm_maroni;
  long nm_dim_g = 0;
  bool nm_hyper = false, nm_json = false;
  numer->add_option("--product", nm_product,
                    "g1 g2 d1 d2: genus of a product-surface curve class "
                    "plus the hypothesis predicate")
      ->expected(4);
  numer->add_option("--dim-i2", nm_dim_g, "Expected dim I2 at genus g");
  numer->add_flag("--hyperelliptic", nm_hyper,
                  "Use the hyperelliptic count for --dim-i2");
  numer->add_option("--h0", nm_h0, "g k: dimension of the k-canonical system")
      ->expected(2);
  numer->add_option("--bel", nm_bel, "g l: very-ampleness criterion 2l >= 8g+5")
      ->expected(2);
  numer->add_option("--maroni", nm_maroni,
                    "g k: trigonal Maroni-range admissibility")
      ->expected(2);
  numer->add_flag("--json", nm_json, "Machine-readable output");

  // ---- verify-paper ----
  auto* verify = app.add_subcommand(
      "verify-paper", "Replicate the full result table; exit 0 iff every "
                      "criterion passes");
  VerifyOptions vopts;
  bool vp_json = false, vp_no_replay = false;
  verify->add_option("--threads", vopts.threads, "Worker count (0 = auto)");
  verify->add_option("--rows", vopts.rows, "Restrict to these corpus rows");
  verify->add_option("--mutate", vopts.mutate_criterion,
                     "Corrupt one criterion's expectation (harness sanity)");
  verify->add_flag("--no-thread-replay", vp_no_replay,
                   "Skip the second pass on another thread count");
  verify->add_flag("--json", vp_json, "Machine-readable output");

  // ---- baselocus ----
  auto* locus = app.add_subcommand(
      "baselocus", "Base-locus certification of mu2(I2) for one curve");
  long bl_n = 2;
  std::string bl_f;
  bool bl_json = false;
  locus->add_option("--n", bl_n, "Covering degree n")->default_val(2);
  locus->add_option("--f", bl_f, "Right-hand side f(x)")->required();
  locus->add_flag("--json", bl_json, "Machine-readable output");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    return guarded(an_json, [&] {
      AnalyzeOptions opts{an_timings};
      RankReport r;
      if (!general_file.empty()) {
        r = run_analyze_general(general_spec_from_json(load_json_file(general_file)),
                                opts);
      } else {
        if (f_opt->count() == 0) throw Error("--f is required without --general");
        r = run_analyze(spec, opts);
      }
      print_report(r, an_json);
      return 0;
    });
  }

  if (sweep->parsed()) {
    return guarded(sw_json, [&] {
      nlohmann::json config = load_json_file(sweep_file);
      if (!config.is_array()) throw Error("config must be a JSON array");
      std::vector<CurveSpec> specs;
      for (const auto& entry : config) {
        specs.push_back(curve_spec_from_json(entry));
      }
      AnalyzeOptions opts{sw_timings};
      std::vector<RankReport> reports = parallel_map(
          specs.size(),
          [&](std::size_t i) { return run_analyze(specs[i], opts); },
          sweep_threads);
      if (sw_csv) {
        std::cout << report_csv_header();
        for (const RankReport& r : reports) std::cout << report_csv_row(r);
      } else if (sw_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const RankReport& r : reports) arr.push_back(to_json(r));
        std::cout << dump_json(arr);
      } else {
        for (const RankReport& r : reports) {
          std::cout << render_text(r) << "\n";
        }
      }
      return 0;
    });
  }

  if (numer->parsed()) {
    return guarded(nm_json, [&] {
      nlohmann::json j;
      std::ostringstream text;
      j["surjectivity_threshold"] = surjectivity_threshold();
      text << "surjectivity threshold: genus " << surjectivity_threshold()
           << "\n";
      if (!nm_product.empty()) {
        ProductCurveSpec p{nm_product[0], nm_product[1], nm_product[2],
                           nm_product[3]};
        j["product"] = {{"genus", genus_product(p)},
                        {"hypotheses_hold", wahl_product_hypotheses(p)}};
        text << "product class genus: " << genus_product(p)
             << (wahl_product_hypotheses(p) ? " (hypotheses hold)"
                                            : " (hypotheses fail)")
             << "\n";
      }
      if (numer->count("--dim-i2") > 0) {
        j["dim_i2_expected"] = dim_i2_expected(nm_dim_g, nm_hyper);
        text << "expected dim I2 at genus " << nm_dim_g << ": "
             << dim_i2_expected(nm_dim_g, nm_hyper) << "\n";
      }
      if (!nm_h0.empty()) {
        j["h0_kk"] = h0_kK(nm_h0[0], nm_h0[1]);
        text << "h0(" << nm_h0[1] << "K) at genus " << nm_h0[0] << ": "
             << h0_kK(nm_h0[0], nm_h0[1]) << "\n";
      }
      if (!nm_bel.empty()) {
        j["bel_criterion"] = bel_criterion(nm_bel[0], nm_bel[1]);
        text << "2l >= 8g+5 at (g, l) = (" << nm_bel[0] << ", " << nm_bel[1]
             << "): " << (bel_criterion(nm_bel[0], nm_bel[1]) ? "yes" : "no")
             << "\n";
      }
      if (!nm_maroni.empty()) {
        j["maroni_admissible"] = maroni_admissible(nm_maroni[0], nm_maroni[1]);
        text << "Maroni-admissible (g, k) = (" << nm_maroni[0] << ", "
             << nm_maroni[1] << "): "
             << (maroni_admissible(nm_maroni[0], nm_maroni[1]) ? "yes" : "no")
             << "\n";
      }
      if (nm_json) {
        std::cout << dump_json(j);
      } else {
        std::cout << text.str();
      }
      return 0;
    });
  }

  if (verify->parsed()) {
    return guarded(vp_json, [&] {
      vopts.thread_replay = !vp_no_replay;
      VerifyOutcome outcome = run_verify_paper(vopts);
      if (vp_json) {
        std::cout << dump_json(outcome.json);
      } else {
        std::cout << render_criteria(outcome.criteria);
      }
      return outcome.all_pass ? 0 : 1;
    });
  }

  // baselocus
  return guarded(bl_json, [&] {
    CurvePtr curve = CurveModel::superelliptic(bl_n, parse_poly(bl_f));
    CanonicalBasis basis = canonical_basis(curve);
    std::vector<QuadricForm> i2 = i2_from_forms(basis.forms);
    if (i2.empty()) throw CurveError("I2 is zero; nothing to certify");
    GaussMapImage m2 = mu2_image(i2, basis.forms);
    BaseLocusVerdict verdict = base_locus(m2.images);
    if (bl_json) {
      std::cout << dump_json(to_json(verdict));
    } else {
      std::cout << "model       y^" << curve->n() << " = "
                << curve->f().to_string("x") << "\n"
                << "genus       " << curve->genus() << "\n"
                << "family      " << m2.images.size()
                << " forms spanning mu2(I2), rank " << m2.rank << "\n"
                << "base locus  " << (verdict.is_free ? "free" : "NOT free")
                << "\n";
      for (const auto& [cls, ord] : verdict.ram) {
        std::cout << "  ram " << cls.p.to_string("x") << ": min ord " << ord
                  << "\n";
      }
      if (verdict.affine) {
        std::cout << "  affine common zero over "
                  << verdict.affine->modulus.to_string("x") << "\n";
      }
      for (const auto& [cls, ord] : verdict.infinity) {
        std::cout << "  infinity"
                  << (cls.totally_ramified ? std::string(" (one place)")
                                           : " " + cls.q.to_string("w"))
                  << ": min ord " << ord << "\n";
      }
    }
    return 0;
  });
}
