// Command-line front end: local reduction data, twists, CM tables, genus-2
// tables, torsion bounds and corpus runs.

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <thread>

#include "cmred/corpus.hpp"
#include "cmred/error.hpp"
#include "cmred/json_io.hpp"

namespace {

using namespace cmred;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CurveArgs {
  std::string field = "Q";
  long p = 0;
  int place_index = 0;
  std::string ainvs;
  std::optional<std::string> max_residue;
  bool table = false;

  QuadraticField parsed_field() const {
    if (field == "Q" || field == "q") return QuadraticField::rational();
    long d = 0;
    try {
      std::size_t used = 0;
      d = std::stol(field, &used);
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "--field expects Q or an integer D, got '" + field + "'");
    }
    return QuadraticField(d);
  }

  ResidueLimits limits() const {
    ResidueLimits l;
    if (max_residue) {
      mpz_class cap;
      if (cap.set_str(*max_residue, 10) != 0 || cap < 2) {
        throw Error(ErrorKind::ParseError, "--max-residue expects an integer >= 2, got '" + *max_residue + "'");
      }
      l.max_cardinality = cap;
    }
    return l;
  }
};

void add_curve_options(CLI::App* cmd, CurveArgs& args, bool with_place) {
  cmd->add_option("--field", args.field, "Q, or D for Q(sqrt(D))")->capture_default_str();
  cmd->add_option("--ainvs", args.ainvs, "a1,a2,a3,a4,a6; coefficients as a, a/c or a/b/c")->required();
  if (with_place) {
    cmd->add_option("--p", args.p, "rational prime below the place")->required();
    cmd->add_option("--place-index", args.place_index, "which place above p (split primes have two)")
        ->capture_default_str();
    cmd->add_option("--max-residue", args.max_residue, "largest residue field size to enumerate");
  }
  auto* json_flag = cmd->add_flag("--json", "JSON output (default)");
  cmd->add_flag("--table", args.table, "plain-text table output")->excludes(json_flag);
}

void print_rows(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) std::cout << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
}

std::string group_string(const AbelianGroupDescriptor& g) { return g.to_string(); }

int run_reduce(const CurveArgs& args) {
  QuadraticField field = args.parsed_field();
  WeierstrassModel model(field, parse_ainvs(args.ainvs, field));
  LocalPlace place = place_at(field, args.p, args.place_index);
  LocalData data = tate_algorithm(model, place, args.limits());
  if (!args.table) {
    std::cout << to_json(data).dump() << "\n";
    return 0;
  }
  print_rows({{"place", place.to_string()},
              {"kodaira", data.kodaira.to_string()},
              {"v_delta_min", std::to_string(data.v_delta_min)},
              {"c_local", std::to_string(data.local_component_order)},
              {"phi_geom", group_string(data.geometric_component_group)},
              {"conductor", data.conductor_exponent ? std::to_string(*data.conductor_exponent) : "unavailable"},
              {"minimal_model", data.minimal_model.to_string()}});
  return 0;
}

int run_twist(const CurveArgs& args, const std::string& d_text) {
  QuadraticField field = args.parsed_field();
  WeierstrassModel model(field, parse_ainvs(args.ainvs, field));
  WeierstrassModel twisted = quadratic_twist(model, parse_coefficient(d_text, field));
  if (args.table) {
    print_rows({{"model", twisted.to_string()}, {"j", twisted.derived().j.to_string()}});
  } else {
    json out = to_json(twisted);
    out["j"] = to_json(twisted.derived().j);
    std::cout << out.dump() << "\n";
  }
  return 0;
}

JClass parse_jclass(const std::string& text) {
  if (text == "0" || text == "zero") return JClass::Zero;
  if (text == "1728" || text == "j1728") return JClass::J1728;
  if (text == "generic") return JClass::Generic;
  throw Error(ErrorKind::ParseError, "--j expects 0, 1728 or generic, got '" + text + "'");
}

int run_classify(long p, long vp, const std::string& j, bool potential, bool table) {
  auto allowed = potential ? allowed_types_potential_cm(p, vp, parse_jclass(j)) : allowed_types_cm(p, vp, parse_jclass(j));
  if (!allowed) {
    std::cout << (table ? "NOT_COVERED" : R"({"allowed":null,"verdict":"NOT_COVERED"})") << "\n";
    return 0;
  }
  std::vector<std::string> names;
  for (const auto& k : *allowed) names.push_back(k.to_string());
  std::sort(names.begin(), names.end());
  if (table) {
    for (const auto& n : names) std::cout << n << "\n";
  } else {
    std::cout << json{{"allowed", names}}.dump() << "\n";
  }
  return 0;
}

struct Genus2Args {
  int mu = 2;
  bool potentially_good = false;
  bool not_potentially_good = false;
  bool restricted = false;
  std::optional<long> d;
  std::optional<long> r;
  bool table = false;
};

int run_genus2(const Genus2Args& a) {
  Genus2Context ctx;
  ctx.spec.mu = a.mu;
  ctx.potentially_good = !a.not_potentially_good;
  ctx.special_fiber_excluded_C0_C1 = a.restricted;
  ctx.d = a.d;
  ctx.r = a.r;
  std::vector<std::string> names;
  for (const auto& t : allowed_types(ctx)) names.push_back(t.symbol());
  std::sort(names.begin(), names.end());
  if (a.table) {
    for (const auto& n : names) std::cout << n << "\n";
  } else {
    std::cout << json(names).dump() << "\n";
  }
  return 0;
}

int run_torsion(const TorsionInput& in, bool table) {
  TorsionBound b = torsion_bound(in);
  if (table) {
    print_rows({{"bound", b.bound.get_str()}, {"bad_reduction", b.branches[0].get_str()}, {"hasse", b.branches[1].get_str()}});
  } else {
    std::cout << to_json(b).dump() << "\n";
  }
  return 0;
}

int run_corpus_cmd(const std::string& path, unsigned jobs, const CurveArgs& limits_args, bool table) {
  CorpusSummary summary = run_corpus(path, jobs, limits_args.limits());
  for (const auto& r : summary.results) {
    if (table) {
      std::cout << std::left << std::setw(12) << to_string(r.verdict) << r.label;
      if (r.report) std::cout << "  " << r.report->local.kodaira.to_string();
      for (const auto& m : r.mismatches) std::cout << "  [" << m << "]";
      if (!r.error.empty()) std::cout << "  [" << r.error << "]";
      std::cout << "\n";
    } else {
      std::cout << to_json(r).dump() << "\n";
    }
  }
  json total = summary_json(summary);
  std::cout << (table ? "pass " + std::to_string(summary.pass) + ", fail " + std::to_string(summary.fail) +
                            ", not covered " + std::to_string(summary.not_covered)
                      : json{{"summary", total}}.dump())
            << "\n";
  return summary.fail > 0 ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local reduction data and CM reduction-type tables"};
  app.require_subcommand(1);

  CurveArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "Tate's algorithm at a place");
  add_curve_options(reduce, reduce_args, true);

  CurveArgs twist_args;
  std::string twist_d;
  auto* twist = app.add_subcommand("twist", "quadratic twist of a model");
  add_curve_options(twist, twist_args, false);
  twist->add_option("--d", twist_d, "twisting element (a, a/c or a/b/c)")->required();

  long cls_p = 0;
  long cls_vp = 1;
  std::string cls_j = "generic";
  bool cls_potential = false;
  bool cls_table = false;
  auto* classify = app.add_subcommand("classify-cm", "allowed Kodaira types for CM elliptic curves");
  classify->add_option("--p", cls_p, "residue characteristic")->required();
  classify->add_option("--vp", cls_vp, "v(p) at the place")->capture_default_str();
  classify->add_option("--j", cls_j, "0, 1728 or generic")->capture_default_str();
  classify->add_flag("--potential", cls_potential, "CM only over an extension");
  auto* cls_json = classify->add_flag("--json", "JSON output (default)");
  classify->add_flag("--table", cls_table, "one type per line")->excludes(cls_json);

  Genus2Args g2;
  auto* genus2 = app.add_subcommand("genus2-types", "allowed reduction types for genus-2 CM curves");
  genus2->add_option("--mu", g2.mu, "roots of unity in the quartic CM field")->required();
  auto* pg = genus2->add_flag("--potentially-good", g2.potentially_good, "potentially good reduction (default)");
  genus2->add_flag("--not-potentially-good", g2.not_potentially_good, "no potentially good reduction")->excludes(pg);
  genus2->add_flag("--restricted", g2.restricted, "stable fibre is neither y^2=x^5-1 nor y^2=x^5-x");
  genus2->add_option("--d", g2.d, "degree of singularity");
  genus2->add_option("--r", g2.r, "r-invariant");
  auto* g2_json = genus2->add_flag("--json", "JSON output (default)");
  genus2->add_flag("--table", g2.table, "one type per line")->excludes(g2_json);

  TorsionInput tin;
  std::string tq;
  bool t_table = false;
  auto* torsion = app.add_subcommand("torsion-bound", "local torsion bound for CM abelian varieties");
  torsion->add_option("--g", tin.g, "dimension")->required();
  torsion->add_option("--p", tin.p, "residue characteristic")->required();
  torsion->add_option("--q", tq, "residue field size")->required();
  torsion->add_option("--e", tin.e, "absolute ramification index")->required();
  torsion->add_option("--mu", tin.mu, "roots of unity in the CM field")->required();
  auto* t_json = torsion->add_flag("--json", "JSON output (default)");
  torsion->add_flag("--table", t_table, "plain-text output")->excludes(t_json);

  std::string corpus_path;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  CurveArgs corpus_args;
  bool corpus_table = false;
  auto* corpus = app.add_subcommand("corpus", "check a JSON-lines corpus of CM curves");
  corpus->add_option("path", corpus_path, "corpus file")->required()->check(CLI::ExistingFile);
  corpus->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  corpus->add_option("--max-residue", corpus_args.max_residue, "largest residue field size to enumerate");
  auto* c_json = corpus->add_flag("--json", "JSON lines (default)");
  corpus->add_flag("--table", corpus_table, "one line per entry")->excludes(c_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*reduce) return run_reduce(reduce_args);
    if (*twist) return run_twist(twist_args, twist_d);
    if (*classify) return run_classify(cls_p, cls_vp, cls_j, cls_potential, cls_table);
    if (*genus2) return run_genus2(g2);
    if (*torsion) {
      if (tin.q.set_str(tq, 10) != 0) throw Error(ErrorKind::ParseError, "--q expects an integer, got '" + tq + "'");
      return run_torsion(tin, t_table);
    }
    if (*corpus) return run_corpus_cmd(corpus_path, jobs, corpus_args, corpus_table);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
