// Command-line front end: spectra, radicals, ideals, homomorphism analysis,
// the built-in examples, randomized cross-checking and file validation.
//
// Exit codes: 0 success (and, for analyze/check-3-15, lambda is left adjoint
// to rho); 1 lambda is not left adjoint to rho; 2 an internal inconsistency,
// a fuzz failure or an example mismatch; 3 invalid input; 4 a computation
// outside the supported range (uncertified rank, non-split center, caps).

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ncspec/io.hpp"

namespace fs = std::filesystem;
using namespace ncspec;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_not_adjoint = 1;
constexpr int exit_inconsistent = 2;
constexpr int exit_invalid = 3;
constexpr int exit_unsupported = 4;

struct Options {
  bool json = false;
  std::string field;
  std::uint64_t seed = 1;
  int max_dim = 6;
  bool quiet = false;
  int count = 500;
  unsigned threads = 0;
  bool canonicalize = false;
  std::string file;
  std::string example_action;
  std::string example_name;
};

std::optional<FieldSpec> field_override(const Options& opt) {
  if (opt.field.empty()) return std::nullopt;
  return parse_field(opt.field);
}

std::string names(PointSet s, const char* prefix) {
  if (s == 0) return "∅";
  std::string out = "{";
  bool first = true;
  for (int k = 0; k < 32; ++k)
    if (contains_point(s, k)) {
      out += (first ? "" : ", ") + std::string(prefix) + std::to_string(k + 1);
      first = false;
    }
  return out + "}";
}

// A set of primes written out as the ideals themselves, e.g. "{0}".
template <ExactScalar Scalar>
std::string ideals_text(PointSet s, const SpecSet<Scalar>& sp) {
  if (s == 0) return "∅";
  std::string out = "{";
  bool first = true;
  for (int k = 0; k < sp.size(); ++k)
    if (contains_point(s, k)) {
      out += (first ? "" : ", ") + sp.prime(k).ideal.describe();
      first = false;
    }
  return out + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string t_text(const std::optional<int>& t) { return t ? std::to_string(*t) : "none"; }

void print_json(const Json& j) { std::cout << dump_document(j); }

// ---------------------------------------------------------------------------
// spec, radical, ideals
// ---------------------------------------------------------------------------

template <ExactScalar Scalar>
int run_spec(const Options& opt, const Json& doc) {
  auto a = algebra_from_json<Scalar>(doc, field_override(opt));
  const auto s = spec(a);
  const auto closed = all_closed_sets(s);
  std::optional<std::vector<GoldieRank>> ranks;
  std::string rank_error;
  try {
    ranks = goldie_ranks(s);
  } catch (const RankUncertified& e) {
    rank_error = e.what();
  }
  if (opt.json) {
    Json out{{"report", "spec"}};
    out.update(spec_to_json(s, ranks, closed.closed_count()));
    print_json(out);
  } else {
    std::ostringstream summary;
    summary << s.size() << (s.size() == 1 ? " prime" : " primes") << "; ";
    if (!s.radical().is_zero()) summary << "rad = " << s.radical().describe() << "; ";
    if (ranks) {
      summary << (s.size() == 1 ? "rank " : "ranks ");
      for (int k = 0; k < s.size(); ++k) summary << (k ? "," : "") << (*ranks)[static_cast<std::size_t>(k)].rank;
    } else {
      summary << "ranks uncertified";
    }
    std::cout << summary.str() << "\n";
    if (!opt.quiet) {
      std::cout << "field " << to_string(a->field()) << ", dim " << a->dim() << "\n";
      for (int k = 0; k < s.size(); ++k) {
        std::cout << "  P" << k + 1 << " = " << s.prime(k).ideal.describe() << "   dim A/P = " << s.prime(k).quotient_dim;
        if (ranks) std::cout << "   rank " << (*ranks)[static_cast<std::size_t>(k)].rank;
        std::cout << "\n";
      }
      std::cout << "closed sets: " << closed.closed_count() << "\n";
      for (PointSet u : closed.closed_sets()) std::cout << "  " << names(u, "P") << "\n";
      if (!rank_error.empty()) std::cerr << "warning: " << rank_error << "\n";
    }
  }
  return exit_ok;
}

template <ExactScalar Scalar>
int run_radical(const Options& opt, const Json& doc) {
  auto a = algebra_from_json<Scalar>(doc, field_override(opt));
  const auto rad = jacobson_radical(a);
  const auto index = nilpotency_index(rad, Ideal<Scalar>::zero(a));
  if (opt.json) {
    Json out{{"field", to_string(a->field())},
             {"dim", a->dim()},
             {"radical", subspace_to_json(a->field(), rad.carrier())},
             {"radical_dim", rad.dim()},
             {"nilpotency_index", index ? Json(*index) : Json(nullptr)}};
    print_json(out);
  } else {
    std::cout << "rad = " << rad.describe() << "\n";
    if (!opt.quiet)
      std::cout << "dim rad = " << rad.dim() << ", dim A/rad = " << a->dim() - rad.dim()
                << ", nilpotency index " << t_text(index) << "\n";
  }
  return exit_ok;
}

template <ExactScalar Scalar>
int run_ideals(const Options& opt, const Json& doc) {
  auto a = algebra_from_json<Scalar>(doc, field_override(opt));
  const bool exhaustive = enumerable(a->field(), a->dim());
  std::vector<Ideal<Scalar>> list;
  if (exhaustive) {
    list = exhaustive_ideal_enumeration(a);
  } else {
    const auto s = spec(a);
    const auto closed = all_closed_sets(s);
    for (PointSet u : closed.closed_sets()) list.push_back(i_of(s, u));
    std::sort(list.begin(), list.end());
  }
  if (opt.json) {
    Json out{{"field", to_string(a->field())}, {"dim", a->dim()}, {"complete", exhaustive}};
    Json items = Json::array();
    for (const auto& i : list)
      items.push_back(Json{{"ideal", subspace_to_json(a->field(), i.carrier())}, {"text", i.describe()}, {"prime", is_prime(i)}});
    out["ideals"] = std::move(items);
    print_json(out);
  } else {
    std::cout << list.size() << (exhaustive ? " two-sided ideals" : " semiprime ideals (the full lattice is not enumerable here)")
              << "\n";
    if (!opt.quiet)
      for (const auto& i : list) std::cout << "  " << i.describe() << (is_prime(i) ? "   prime" : "") << "\n";
  }
  return exit_ok;
}

// ---------------------------------------------------------------------------
// analyze, check-3-15
// ---------------------------------------------------------------------------

template <ExactScalar Scalar>
void print_analysis(const HomContext<Scalar>& ctx, const HomAnalysis<Scalar>& a, bool quiet) {
  const auto& sr = ctx.spec_r();
  const auto& ss = ctx.spec_s();
  if (!quiet) {
    std::cout << "Spec R (" << sr.size() << "):\n";
    for (int k = 0; k < sr.size(); ++k) std::cout << "  Q" << k + 1 << " = " << sr.prime(k).ideal.describe() << "\n";
    std::cout << "Spec S (" << ss.size() << "):\n";
    for (int k = 0; k < ss.size(); ++k)
      std::cout << "  P" << k + 1 << " = " << ss.prime(k).ideal.describe() << "   r(P" << k + 1
                << ") = " << names(ctx.r().at(k), "Q") << "\n";
  }
  if (a.single_valued_witness)
    std::cout << "r not single-valued at P = " << ss.prime(*a.single_valued_witness).ideal.describe() << " (P"
              << *a.single_valued_witness + 1 << ")\n";
  else
    std::cout << "r single-valued\n";
  if (a.continuity_witness)
    std::cout << "r not continuous: preimage of closed " << names(*a.continuity_witness, "Q") << " is not closed\n";
  else
    std::cout << "r continuous\n";
  if (a.condition_2prime_witness) {
    const PointSet u = *a.condition_2prime_witness;
    std::cout << "(2') fails at I = " << ctx.ideal_of_r(u).describe() << ": r^[-1]V_R(I) = "
              << names(ctx.r().strong_preimage(u), "P") << ", V_S(I^S) = "
              << names(v_of(ss, extension_annihilator(ctx.hom(), ctx.ideal_of_r(u))), "P") << "\n";
  } else {
    std::cout << "(2') holds\n";
  }
  if (a.adjoint_witness)
    std::cout << "lambda not left adjoint to rho: V = " << names(a.adjoint_witness->u, "P")
              << ", U = " << names(a.adjoint_witness->v, "Q") << "\n";
  else
    std::cout << "lambda left adjoint to rho\n";
  if (a.criterion_3_13_witness)
    std::cout << "prime criterion fails at (P" << a.criterion_3_13_witness->p + 1 << ", Q"
              << a.criterion_3_13_witness->q + 1 << ")\n";
  else
    std::cout << "prime criterion holds\n";
  if (a.nearly_centralizing_primes && a.nearly_centralizing_ideals) {
    int t = 0;
    for (const auto& x : a.prime_t) t = std::max(t, x.value_or(0));
    std::cout << "nearly centralizing, t = " << t << "\n";
  } else {
    std::cout << "not nearly centralizing";
    if (a.nearly_centralizing_prime_witness) std::cout << " (at Q" << *a.nearly_centralizing_prime_witness + 1 << ")";
    std::cout << "\n";
  }
  if (!quiet) {
    std::cout << "t per prime:";
    for (std::size_t k = 0; k < a.prime_t.size(); ++k) std::cout << " Q" << k + 1 << "=" << t_text(a.prime_t[k]);
    std::cout << "\n";
  }
  std::cout << (a.centralizing ? "centralizing" : "not centralizing") << "\n";
  if (a.consistent()) {
    std::cout << "consistent\n";
  } else {
    std::cout << "INCONSISTENT\n";
    for (const auto& m : a.inconsistencies) std::cout << "  " << m << "\n";
  }
}

template <ExactScalar Scalar>
int analysis_exit(const HomAnalysis<Scalar>& a) {
  if (!a.consistent()) return exit_inconsistent;
  return a.adjoint ? exit_ok : exit_not_adjoint;
}

template <ExactScalar Scalar>
int run_analyze(const Options& opt, const Json& doc, const fs::path& base, bool verdict_only) {
  const HomContext<Scalar> ctx(hom_from_json<Scalar>(doc, base, field_override(opt)));
  const auto a = theorem_3_15_verify(ctx);
  if (opt.json) {
    print_json(analysis_to_json(ctx, a));
  } else if (verdict_only) {
    std::cout << "(i) adjoint: " << yes_no(a.adjoint) << "; (ii): " << yes_no(a.condition_ii())
              << "; prime criterion: " << yes_no(a.criterion_3_13) << "; nearly centralizing: "
              << yes_no(a.nearly_centralizing_primes && a.nearly_centralizing_ideals) << "; "
              << (a.consistent() ? "consistent" : "INCONSISTENT") << "\n";
    if (!opt.quiet)
      for (const auto& m : a.inconsistencies) std::cout << "  " << m << "\n";
  } else {
    print_analysis(ctx, a, opt.quiet);
  }
  return analysis_exit(a);
}

// ---------------------------------------------------------------------------
// examples
// ---------------------------------------------------------------------------

int run_one_example(const Options& opt, const Fixture& fx) {
  const HomContext<Rational> ctx(fx.hom);
  const auto a = theorem_3_15_verify(ctx);
  const auto diff = compare_fixture(fx, a);
  if (opt.json) {
    Json out = analysis_to_json(ctx, a);
    out["example"] = fx.name;
    out["matches_expected"] = diff.empty();
    out["differences"] = diff;
    print_json(out);
    return diff.empty() ? exit_ok : exit_inconsistent;
  }
  std::cout << "== " << fx.name << ": " << fx.description << "\n";
  print_analysis(ctx, a, opt.quiet);
  // Both sides of r^[-1]V_R(I) versus V_S(<f(I)>) for every semiprime I.
  const auto& us = ctx.closed_r().closed_sets();
  for (PointSet u : us) {
    const auto& i = ctx.ideal_of_r(u);
    const PointSet lhs = ctx.r().strong_preimage(u);
    const PointSet rhs = v_of(ctx.spec_s(), extended_ideal(ctx.hom(), i));
    if (lhs != rhs || !opt.quiet)
      std::cout << "I = " << i.describe() << ": r^[-1]V_R(I) = " << ideals_text(lhs, ctx.spec_s())
                << (lhs == rhs ? " = " : " ≠ ") << ideals_text(rhs, ctx.spec_s()) << " = V_S(<f(I)>)\n";
  }
  if (diff.empty()) {
    std::cout << "PASS " << fx.name << "\n";
    return exit_ok;
  }
  std::cout << "FAIL " << fx.name << "\n";
  for (const auto& d : diff) std::cout << "  " << d << "\n";
  return exit_inconsistent;
}

int run_examples(const Options& opt) {
  if (opt.example_action == "list") {
    for (const auto& fx : all_fixtures()) std::cout << fx.name << "  " << fx.description << "\n";
    return exit_ok;
  }
  if (opt.example_action == "all" || (opt.example_action == "run" && opt.example_name == "all")) {
    const auto fixtures = all_fixtures();
    int passed = 0;
    for (const auto& fx : fixtures) passed += run_one_example(opt, fx) == exit_ok ? 1 : 0;
    if (!opt.json) std::cout << passed << "/" << fixtures.size() << " PASS\n";
    return passed == static_cast<int>(fixtures.size()) ? exit_ok : exit_inconsistent;
  }
  if (opt.example_action == "run") {
    auto fx = find_fixture(opt.example_name);
    if (!fx) {
      std::cerr << "error: no example named \"" << opt.example_name << "\"; try `ncspec examples list`\n";
      return exit_invalid;
    }
    return run_one_example(opt, *fx);
  }
  std::cerr << "error: examples expects list, run <name> or all\n";
  return exit_invalid;
}

// ---------------------------------------------------------------------------
// fuzz
// ---------------------------------------------------------------------------

struct FuzzOutcome {
  Json line;
  bool ok = false;
  bool adjoint = false;
};

FuzzOutcome fuzz_instance(const Options& opt, int i) {
  const InstanceSpec spec = fuzz_instance_spec(opt.seed, i, field_override(opt), opt.max_dim);
  const auto start = std::chrono::steady_clock::now();
  FuzzOutcome out;
  Json line{{"report", "fuzz"}, {"seed", spec.seed}, {"field", to_string(spec.field)}};
  visit_field(spec.field, [&]<class Scalar>(std::type_identity<Scalar>) {
    const auto inst = generate_instance<Scalar>(spec);
    const auto rep = oracle_cross_check(inst.hom, inst.matrix_size, spec.seed);
    line["kind"] = to_string(inst.kind);
    line["description"] = inst.description;
    line["dims"] = Json::array({inst.hom.source()->dim(), inst.hom.target()->dim()});
    if (rep.analysis) {
      const auto& a = *rep.analysis;
      line["flags"] = Json{{"single_valued", a.single_valued},
                           {"continuous", a.continuous},
                           {"condition_2prime", a.condition_2prime},
                           {"adjoint_3_2", a.adjoint},
                           {"criterion_3_13", a.criterion_3_13},
                           {"nearly_centralizing_primes", a.nearly_centralizing_primes},
                           {"nearly_centralizing_ideals", a.nearly_centralizing_ideals},
                           {"centralizing", a.centralizing},
                           {"lemma_3_14", a.lemma_3_14}};
      line["consistency"] = a.consistent();
      out.adjoint = a.adjoint;
    } else {
      line["consistency"] = false;
    }
    if (rep.error) line["error"] = *rep.error;
    line["failures"] = rep.failures;
    line["checks"] = rep.checks;
    out.ok = rep.ok();
  });
  line["timing"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out.line = std::move(line);
  return out;
}

int run_fuzz(const Options& opt) {
  if (opt.count < 0) throw ValidationError("--count must be non-negative");
  validate_instance_spec(InstanceSpec{opt.seed, opt.field.empty() ? FieldSpec::rationals() : parse_field(opt.field),
                                      std::nullopt, opt.max_dim});
  std::vector<FuzzOutcome> results(static_cast<std::size_t>(opt.count));
  std::atomic<int> next{0};
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<unsigned>(opt.threads ? opt.threads : hw, static_cast<unsigned>(std::max(1, opt.count)));
  const auto start = std::chrono::steady_clock::now();
  auto work = [&] {
    for (int i = next++; i < opt.count; i = next++) results[static_cast<std::size_t>(i)] = fuzz_instance(opt, i);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  int failures = 0;
  int adjoint = 0;
  for (const auto& r : results) {
    failures += r.ok ? 0 : 1;
    adjoint += r.adjoint ? 1 : 0;
    if (opt.json) {
      std::cout << r.line.dump() << "\n";
    } else if (!opt.quiet || !r.ok) {
      const auto& l = r.line;
      std::cout << "seed " << l["seed"].get<std::uint64_t>() << " " << l["field"].get<std::string>() << " "
                << l["description"].get<std::string>() << ": "
                << (l.contains("flags") ? (l["flags"]["adjoint_3_2"].get<bool>() ? "adjoint" : "not adjoint") : "no analysis")
                << (r.ok ? "" : " FAILED") << "\n";
      if (l.contains("error")) std::cout << "  error: " << l["error"].get<std::string>() << "\n";
      for (const auto& f : l["failures"]) std::cout << "  " << f.get<std::string>() << "\n";
    }
  }
  std::ostringstream summary;
  summary << opt.count << " instances, " << failures << " failures, " << adjoint << " adjoint, "
          << opt.count - adjoint << " not adjoint, " << std::fixed << std::setprecision(1) << seconds << " s";
  (opt.json ? std::cerr : std::cout) << summary.str() << "\n";
  return failures == 0 ? exit_ok : exit_inconsistent;
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

// Reports from `fuzz --json` come one per line.
int validate_report_lines(const Options& opt, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int count = 0;
  int bad = 0;
  for (int number = 1; std::getline(in, line); ++number) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++count;
    const Json doc = parse_json_text(line, opt.file + ":" + std::to_string(number));
    for (const auto& v : report_schema_violations(doc)) {
      std::cerr << opt.file << ":" << number << ": " << v << "\n";
      ++bad;
    }
  }
  if (bad == 0) std::cout << "ok: " << count << " reports\n";
  return bad == 0 ? exit_ok : exit_invalid;
}

int run_validate(const Options& opt, const Json& doc, const fs::path& base) {
  if (doc.is_object() && doc.contains("report")) {
    const auto violations = report_schema_violations(doc);
    for (const auto& v : violations) std::cerr << opt.file << ": " << v << "\n";
    if (violations.empty()) std::cout << "ok: " << doc["report"].get<std::string>() << " report\n";
    return violations.empty() ? exit_ok : exit_invalid;
  }
  if (doc.is_object() && doc.contains("matrix")) {
    const FieldSpec field = field_override(opt).value_or(hom_field(doc, base));
    return visit_field(field, [&]<class Scalar>(std::type_identity<Scalar>) {
      const auto f = hom_from_json<Scalar>(doc, base, field_override(opt));
      if (opt.canonicalize) {
        auto ref = [&](const char* key, const Algebra<Scalar>& a) {
          return doc[key].is_string() ? doc[key] : algebra_to_json(a);
        };
        print_json(hom_to_json(f, ref("source", *f.source()), ref("target", *f.target())));
      } else {
        std::cout << "ok: homomorphism over " << to_string(field) << ", dim " << f.source()->dim() << " -> dim "
                  << f.target()->dim() << "\n";
      }
      return exit_ok;
    });
  }
  const FieldSpec field = field_override(opt).value_or(algebra_field(doc));
  return visit_field(field, [&]<class Scalar>(std::type_identity<Scalar>) {
    const auto a = algebra_from_json<Scalar>(doc, field_override(opt));
    if (opt.canonicalize)
      print_json(algebra_to_json(*a));
    else
      std::cout << "ok: algebra over " << to_string(field) << ", dim " << a->dim() << "\n";
    return exit_ok;
  });
}

void report_error(const Options& opt, const std::exception& e) {
  const std::string message = e.what();
  const bool located = opt.file.empty() || message.rfind(opt.file, 0) == 0;
  std::cerr << "error: " << (located ? "" : opt.file + ": ") << message << "\n";
}

template <class Run>
int on_algebra_file(const Options& opt, Run run) {
  const Json doc = read_json_file(opt.file);
  const FieldSpec field = field_override(opt).value_or(algebra_field(doc));
  return visit_field(field, [&]<class Scalar>(std::type_identity<Scalar> tag) { return run(tag, doc); });
}

int on_hom_file(const Options& opt, bool verdict_only) {
  const Json doc = read_json_file(opt.file);
  const fs::path base = fs::path(opt.file).parent_path();
  const FieldSpec field = field_override(opt).value_or(hom_field(doc, base));
  return visit_field(field, [&]<class Scalar>(std::type_identity<Scalar>) {
    return run_analyze<Scalar>(opt, doc, base, verdict_only);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime spectra of finite-dimensional algebras and the correspondences induced by homomorphisms"};
  app.require_subcommand(1, 1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", opt.json, "Emit a JSON report");
    cmd->add_flag("--quiet", opt.quiet, "Print only the summary");
    cmd->add_option("--field", opt.field, "Reinterpret coordinates over Q or Fp:<p>");
  };

  auto* spec_cmd = app.add_subcommand("spec", "Prime spectrum, Goldie ranks and closed sets of an algebra");
  spec_cmd->add_option("file", opt.file, "Algebra JSON file")->required();
  add_common(spec_cmd);
  auto* radical_cmd = app.add_subcommand("radical", "Jacobson radical of an algebra");
  radical_cmd->add_option("file", opt.file, "Algebra JSON file")->required();
  add_common(radical_cmd);
  auto* ideals_cmd = app.add_subcommand("ideals", "Two-sided ideals with primality");
  ideals_cmd->add_option("file", opt.file, "Algebra JSON file")->required();
  add_common(ideals_cmd);
  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis of a homomorphism with witnesses");
  analyze_cmd->add_option("file", opt.file, "Homomorphism JSON file")->required();
  add_common(analyze_cmd);
  auto* check_cmd = app.add_subcommand("check-3-15", "Verdicts of the four equivalent conditions");
  check_cmd->add_option("file", opt.file, "Homomorphism JSON file")->required();
  add_common(check_cmd);
  auto* examples_cmd = app.add_subcommand("examples", "Built-in worked examples: list, run <name>, all");
  examples_cmd->add_option("action", opt.example_action, "list | run | all")->required()->check(CLI::IsMember({"list", "run", "all"}));
  examples_cmd->add_option("name", opt.example_name, "Example name for run, or all");
  examples_cmd->add_flag("--json", opt.json, "Emit JSON reports");
  examples_cmd->add_flag("--quiet", opt.quiet, "Print only verdicts");
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Random homomorphisms cross-checked against independent oracles");
  fuzz_cmd->add_option("--count", opt.count, "Number of instances")->capture_default_str();
  fuzz_cmd->add_option("--seed", opt.seed, "Seed of the first instance")->capture_default_str();
  fuzz_cmd->add_option("--max-dim", opt.max_dim, "Largest algebra dimension")->capture_default_str();
  fuzz_cmd->add_option("--field", opt.field, "Fix the field (default cycles F5, F7, Q)");
  fuzz_cmd->add_option("--threads", opt.threads, "Worker threads (default: hardware concurrency)");
  fuzz_cmd->add_flag("--json", opt.json, "One JSON line per instance");
  fuzz_cmd->add_flag("--quiet", opt.quiet, "Print failures and the summary only");
  auto* validate_cmd = app.add_subcommand("validate", "Validate an algebra, homomorphism or report file");
  validate_cmd->add_option("file", opt.file, "JSON file")->required();
  validate_cmd->add_option("--field", opt.field, "Reinterpret coordinates over Q or Fp:<p>");
  validate_cmd->add_flag("--canonicalize", opt.canonicalize, "Print the canonical form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_invalid;
  }

  try {
    if (*spec_cmd)
      return on_algebra_file(opt, [&]<class Scalar>(std::type_identity<Scalar>, const Json& doc) { return run_spec<Scalar>(opt, doc); });
    if (*radical_cmd)
      return on_algebra_file(opt, [&]<class Scalar>(std::type_identity<Scalar>, const Json& doc) { return run_radical<Scalar>(opt, doc); });
    if (*ideals_cmd)
      return on_algebra_file(opt, [&]<class Scalar>(std::type_identity<Scalar>, const Json& doc) { return run_ideals<Scalar>(opt, doc); });
    if (*analyze_cmd) return on_hom_file(opt, false);
    if (*check_cmd) return on_hom_file(opt, true);
    if (*examples_cmd) return run_examples(opt);
    if (*fuzz_cmd) return run_fuzz(opt);
    if (*validate_cmd) {
      const fs::path base = fs::path(opt.file).parent_path();
      std::ifstream in(opt.file);
      if (!in) throw ValidationError(opt.file + ": cannot open file");
      std::ostringstream buffer;
      buffer << in.rdbuf();
      const std::string text = buffer.str();
      if (text.find_first_of('{') != std::string::npos && !Json::accept(text)) return validate_report_lines(opt, text);
      return run_validate(opt, parse_json_text(text, opt.file), base);
    }
  } catch (const ValidationError& e) {
    report_error(opt, e);
    return exit_invalid;
  } catch (const ShapeMismatch& e) {
    report_error(opt, e);
    return exit_invalid;
  } catch (const Error& e) {
    report_error(opt, e);
    return exit_unsupported;
  }
  return exit_ok;
}
