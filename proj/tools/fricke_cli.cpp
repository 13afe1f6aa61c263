// fricke: word growth, character-variety dynamics and p-adic
// certificates for free-group automorphisms, from JSON automorphism
// definition files. Reports are deterministic for a fixed config; all
// randomness flows from --seed.

#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fricke/fricke.hpp"
#include "fricke/io.hpp"

using nlohmann::ordered_json;
using namespace fricke;

namespace {

constexpr int kSchemaVersion = 1;

struct CommonOpts {
  std::string aut_path;
  std::string format = "json";
  long n_max = 0;
  std::size_t budget = 0;
  std::size_t term_budget = kDefaultTermBudget;
  long prime = 101;
  std::uint64_t seed = 1;
  double tol = 0.05;
};

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void flatten_csv(const ordered_json& j, const std::string& prefix,
                 std::string& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      flatten_csv(v, prefix.empty() ? k : prefix + "." + k, out);
    }
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& v : j) {
      flatten_csv(v, prefix + "." + std::to_string(i++), out);
    }
    if (j.empty()) out += prefix + ",\n";
  } else if (j.is_number_float()) {
    out += prefix + "," + fmt_double(j.get<double>()) + "\n";
  } else if (j.is_string()) {
    out += prefix + "," + j.get<std::string>() + "\n";
  } else {
    out += prefix + "," + j.dump() + "\n";
  }
}

void render_text(const ordered_json& j, const std::string& prefix,
                 std::string& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      render_text(v, prefix.empty() ? k : prefix + "." + k, out);
    }
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& v : j) {
      render_text(v, prefix + "[" + std::to_string(i++) + "]", out);
    }
    if (j.empty()) out += prefix + " = []\n";
  } else if (j.is_number_float()) {
    out += prefix + " = " + fmt_double(j.get<double>()) + "\n";
  } else if (j.is_string()) {
    out += prefix + " = " + j.get<std::string>() + "\n";
  } else {
    out += prefix + " = " + j.dump() + "\n";
  }
}

void emit(const ordered_json& report, const std::string& format,
          const std::string& text_override = "") {
  if (format == "json") {
    std::cout << report.dump(2) << "\n";
  } else if (format == "csv") {
    std::string out = "key,value\n";
    flatten_csv(report, "", out);
    std::cout << out;
  } else {
    if (!text_override.empty()) {
      std::cout << text_override << "\n";
    } else {
      std::string out;
      render_text(report, "", out);
      std::cout << out;
    }
  }
}

ordered_json rho_report(const Automorphism& f, const CommonOpts& opts,
                        const std::vector<Word>& seeds) {
  const GrowthEstimate est = estimate_rho(f, seeds, static_cast<int>(opts.n_max),
                                          opts.budget);
  ordered_json seeds_json = ordered_json::object();
  for (const auto& [seed, rate] : est.per_seed_rates) seeds_json[seed] = rate;
  return ordered_json{{"schema_version", kSchemaVersion},
                      {"command", "rho"},
                      {"rho", est.rho_estimate},
                      {"seeds", seeds_json},
                      {"n_used", est.iterations_used},
                      {"budget_hit", est.budget_hit},
                      {"abelian_lower_bound", est.lower_bound_abelian}};
}

ordered_json ealg_report(const Automorphism& f, const CommonOpts& opts) {
  const DegreeSequence seq = degree_sequence(f, static_cast<int>(opts.n_max),
                                             opts.term_budget);
  return ordered_json{{"schema_version", kSchemaVersion},
                      {"command", "ealg"},
                      {"ealg", seq.ealg_estimate},
                      {"degrees", seq.degrees},
                      {"n_used", seq.iterations_used},
                      {"budget_hit", seq.budget_hit}};
}

RepresentationSpec default_representation(long prime) {
  return build_representation(2, prime, QMat2{2, 1, 1, 1});
}

ordered_json lower_bound_report(const Automorphism& f, const CommonOpts& opts) {
  const RepresentationSpec rep = default_representation(opts.prime);
  const double rate = lower_bound_rate(f, rep, static_cast<int>(opts.n_max),
                                       opts.budget);
  return ordered_json{{"schema_version", kSchemaVersion},
                      {"command", "lower-bound"},
                      {"p", opts.prime},
                      {"rate", rate}};
}

std::vector<Word> parse_seed_words(const std::string& list, int rank) {
  std::vector<Word> seeds;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) seeds.push_back(Word::parse(item, rank));
  }
  return seeds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word growth and character variety dynamics of free-group automorphisms"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string seeds_list;
  std::string trace_word;
  long cert_max_len = 5;
  long cert_random_words = 50;
  long cert_random_max_len = 8;

  auto add_common = [&](CLI::App* cmd, long n_max_default, std::size_t budget_default) {
    opts.n_max = 0;
    cmd->add_option("--format", opts.format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--n-max", opts.n_max, "iteration cap")->capture_default_str();
    cmd->add_option("--budget", opts.budget, "total-letter budget for word orbits");
    cmd->add_option("--seed", opts.seed, "RNG seed for randomized checks");
    // per-command defaults applied after parsing
    cmd->parse_complete_callback([&, n_max_default, budget_default] {
      if (opts.n_max == 0) opts.n_max = n_max_default;
      if (opts.budget == 0) opts.budget = budget_default;
    });
  };

  CLI::App* rho = app.add_subcommand("rho", "word-growth spectral radius estimate");
  rho->add_option("--aut", opts.aut_path, "automorphism JSON file")->required();
  rho->add_option("--seeds", seeds_list, "comma-separated seed words (default: generators)");
  add_common(rho, kDefaultGrowthNMax, kDefaultGrowthBudget);

  CLI::App* ealg = app.add_subcommand("ealg", "algebraic entropy from degree growth");
  ealg->add_option("--aut", opts.aut_path, "automorphism JSON file")->required();
  ealg->add_option("--term-budget", opts.term_budget, "stored-monomial budget");
  add_common(ealg, kDefaultDegreeNMax, kDefaultGrowthBudget);

  CLI::App* trace = app.add_subcommand("trace", "Fricke trace polynomial of a rank-2 word");
  trace->add_option("word", trace_word, "word over a,b,A,B")->required();
  trace->add_option("--format", opts.format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  trace->parse_complete_callback([&] {
    if (!trace->count("--format")) opts.format = "text";
  });

  CLI::App* induce = app.add_subcommand("induce", "induced trace map of an automorphism");
  induce->add_option("--aut", opts.aut_path, "automorphism JSON file")->required();
  induce->add_option("--format", opts.format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  induce->parse_complete_callback([&] {
    if (!induce->count("--format")) opts.format = "text";
  });

  CLI::App* certify = app.add_subcommand(
      "certify", "translation-length certification of the p-adic representation");
  certify->add_option("--prime", opts.prime, "rational prime")->capture_default_str();
  certify->add_option("--max-len", cert_max_len, "exhaustive word length cap")
      ->capture_default_str();
  certify->add_option("--random-words", cert_random_words, "number of random words")
      ->capture_default_str();
  certify->add_option("--random-max-len", cert_random_max_len,
                      "random word length cap")->capture_default_str();
  add_common(certify, kDefaultGrowthNMax, kDefaultGrowthBudget);

  CLI::App* lower = app.add_subcommand("lower-bound", "certified entropy lower bound");
  lower->add_option("--aut", opts.aut_path, "automorphism JSON file")->required();
  lower->add_option("--prime", opts.prime, "rational prime")->capture_default_str();
  add_common(lower, kDefaultGrowthNMax, kDefaultGrowthBudget);

  CLI::App* compare = app.add_subcommand(
      "compare", "run rho, ealg and lower-bound and verify they agree");
  compare->add_option("--aut", opts.aut_path, "automorphism JSON file")->required();
  compare->add_option("--prime", opts.prime, "rational prime")->capture_default_str();
  compare->add_option("--term-budget", opts.term_budget, "stored-monomial budget");
  compare->add_option("--tol", opts.tol, "absolute agreement tolerance")
      ->capture_default_str();
  add_common(compare, kDefaultGrowthNMax, kDefaultGrowthBudget);

  try {
    app.parse(argc, argv);

    if (rho->parsed()) {
      const Automorphism f = load_automorphism(opts.aut_path);
      emit(rho_report(f, opts, parse_seed_words(seeds_list, f.rank())), opts.format);
      return 0;
    }

    if (ealg->parsed()) {
      const Automorphism f = load_automorphism(opts.aut_path);
      emit(ealg_report(f, opts), opts.format);
      return 0;
    }

    if (trace->parsed()) {
      const Word w = Word::parse(trace_word, 2);
      const Polynomial p = trace_polynomial(w);
      ordered_json report{{"schema_version", kSchemaVersion},
                          {"command", "trace"},
                          {"word", trace_word},
                          {"polynomial", p.to_string()},
                          {"terms", polynomial_terms_json(p)}};
      emit(report, opts.format, p.to_string());
      return 0;
    }

    if (induce->parsed()) {
      const Automorphism f = load_automorphism(opts.aut_path);
      const TraceMap map = induced_trace_map(f);
      ordered_json components = ordered_json::array();
      ordered_json terms = ordered_json::array();
      for (const Polynomial& c : map.components) {
        components.push_back(c.to_string());
        terms.push_back(polynomial_terms_json(c));
      }
      ordered_json report{{"schema_version", kSchemaVersion},
                          {"command", "induce"},
                          {"components", components},
                          {"terms", terms}};
      emit(report, opts.format, map.to_string());
      return 0;
    }

    if (certify->parsed()) {
      const RepresentationSpec rep = default_representation(opts.prime);
      std::vector<Word> words =
          cyclically_reduced_words(rep.rank, static_cast<int>(cert_max_len));
      Rng rng(opts.seed);
      for (long t = 0; t < cert_random_words; ++t) {
        words.push_back(random_cyclically_reduced_word(
            rng, rep.rank,
            rng.below(static_cast<std::uint64_t>(cert_random_max_len)) + 1));
      }
      const CertifyReport result = certify_length_formula(rep, words);
      ordered_json failures = ordered_json::array();
      for (const auto& f : result.failures) {
        failures.push_back({{"word", f.word.str()},
                            {"expected", f.expected},
                            {"actual", f.actual}});
      }
      ordered_json report{
          {"schema_version", kSchemaVersion},
          {"command", "certify"},
          {"p", opts.prime},
          {"S", {{2, 1}, {1, 1}}},
          {"rank", rep.rank},
          {"words_checked", result.words_checked},
          {"failures", failures},
          {"verdict", result.passed() ? "pass" : "fail"}};
      emit(report, opts.format);
      return result.passed() ? 0 : 1;
    }

    if (lower->parsed()) {
      const Automorphism f = load_automorphism(opts.aut_path);
      emit(lower_bound_report(f, opts), opts.format);
      return 0;
    }

    if (compare->parsed()) {
      if (opts.tol <= 0.0 || opts.tol >= 1.0) {
        throw validation_error("tolerance must lie in (0, 1)");
      }
      const Automorphism f = load_automorphism(opts.aut_path);
      if (f.rank() != 2) {
        throw validation_error("character dynamics implemented for rank 2 only");
      }
      CommonOpts ealg_opts = opts;
      ealg_opts.n_max = kDefaultDegreeNMax;
      const ordered_json rho_j = rho_report(f, opts, {});
      const ordered_json ealg_j = ealg_report(f, ealg_opts);
      const ordered_json lower_j = lower_bound_report(f, opts);
      const double r = rho_j.at("rho").get<double>();
      const double e = ealg_j.at("ealg").get<double>();
      const double l = lower_j.at("rate").get<double>();
      auto agree = [&](double x, double y) {
        return std::abs(x - y) <=
               std::max(opts.tol, 0.10 * std::max(std::abs(x), std::abs(y)));
      };
      const bool pass = agree(r, e) && agree(r, l) && agree(e, l);
      ordered_json report{
          {"schema_version", kSchemaVersion},
          {"command", "compare"},
          {"rho", r},
          {"ealg", e},
          {"lower_bound", l},
          {"gaps",
           {{"rho_ealg", std::abs(r - e)},
            {"rho_lower", std::abs(r - l)},
            {"ealg_lower", std::abs(e - l)}}},
          {"tolerance", {{"absolute", opts.tol}, {"relative", 0.10}}},
          {"verdict", pass ? "pass" : "fail"},
          {"details", {{"rho", rho_j}, {"ealg", ealg_j}, {"lower_bound", lower_j}}}};
      emit(report, opts.format);
      return pass ? 0 : 1;
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const fricke::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
