#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pdef/corpus.hpp"
#include "pdef/error.hpp"
#include "report.hpp"

using namespace pdef;
using report::Json;

namespace {

struct Common {
  std::string pres_file;
  std::vector<std::uint64_t> primes;
  std::string tail_sigma;
  bool tail_p_powers = false;
};

struct Run {
  Json results = Json::object();
  std::vector<std::string> warnings;
  std::string input;  // file bytes folded into the digest
};

Error input_error(const std::string& what) {
  return Error(ErrorCode::InvalidArgument, what);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Presentation load(const Common& c, Run& run) {
  if (c.pres_file.empty()) throw input_error("--pres is required");
  run.input = read_file(c.pres_file);
  Presentation p = parse_presentation(run.input);
  if (!c.tail_sigma.empty()) {
    if (c.primes.empty()) throw input_error("a tail needs -p");
    p = p.with_tail(TailBudget{c.primes.front(), parse_rational(c.tail_sigma),
                               c.tail_p_powers});
    run.warnings.push_back("presentation carries a tail of sigma " +
                           to_string(p.tail()->sigma) +
                           "; def_p values are lower bounds");
  }
  return p;
}

std::uint64_t single_prime(const Common& c) {
  if (c.primes.size() != 1) throw input_error("exactly one prime expected");
  return c.primes.front();
}

// "x=0,t=1"
std::vector<std::pair<std::string, std::int64_t>> parse_assignments(
    const std::string& text) {
  std::vector<std::pair<std::string, std::int64_t>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw input_error("expected name=value in '" + item + "'");
    std::string name = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    try {
      std::size_t used = 0;
      const long long v = std::stoll(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      out.emplace_back(name, v);
    } catch (const std::logic_error&) {
      throw input_error("bad value '" + value + "' for " + name);
    }
  }
  return out;
}

std::vector<std::int64_t> assignment_values(const std::string& text,
                                            const Alphabet& a) {
  std::vector<std::int64_t> values(a.size(), 0);
  for (const auto& [name, v] : parse_assignments(text)) values[a.index(name)] = v;
  return values;
}

CpHom parse_theta(const std::string& text, const Presentation& p,
                  std::uint64_t prime) {
  CpHom theta{prime, {}};
  for (std::int64_t v : assignment_values(text, p.alphabet())) {
    theta.values.push_back(mod_reduce(v, prime));
  }
  return theta;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write " + path);
  out << text;
}

Json analyses(const Presentation& p, const std::vector<std::uint64_t>& primes) {
  Json out = Json::array();
  for (std::uint64_t prime : primes) {
    Json a = report::analysis(p, analyze(p, prime));
    const auto d = p_deficiency(p, prime);
    if (d.is_finite()) {
      const auto rg = rank_gradient_bound(p, prime);
      a["rank_gradient_lower_bound"] = report::rational(rg.bound);
      a["rank_gradient_positive"] = rg.positive;
    }
    out.push_back(std::move(a));
  }
  return out;
}

// analyze

struct AnalyzeOpts {
  Common c;
};

void run_analyze(const AnalyzeOpts& o, Run& run) {
  Presentation p = load(o.c, run);
  if (o.c.primes.empty()) throw input_error("-p is required");
  run.results["presentation"] = report::presentation(p);
  run.results["analyses"] = analyses(p, o.c.primes);
}

// rewrite

struct RewriteOpts {
  Common c;
  std::string theta;
  std::string method = "puchta";
  std::string out_file;
  std::string sidecar;
};

void run_rewrite(const RewriteOpts& o, Run& run) {
  Presentation p = load(o.c, run);
  const std::uint64_t prime = single_prime(o.c);
  CpHom theta;
  if (o.theta.empty()) {
    auto basis = hom_to_Cp_basis(p, prime);
    if (basis.empty()) throw Error(ErrorCode::ThetaZero, "no map onto C_p");
    theta = basis.front();
  } else {
    theta = parse_theta(o.theta, p, prime);
  }
  Json t = Json::object();
  for (std::size_t i = 0; i < p.rank(); ++i) t[p.alphabet().name(i)] = theta.values[i];
  run.results["theta"] = t;
  run.results["method"] = o.method;
  KernelPresentation k = o.method == "rs" ? reidemeister_schreier_cyclic(p, theta)
                                          : puchta_rewrite(p, theta);
  run.results["source_def_p"] = report::rational(p_deficiency(p, prime));
  run.results["source_def"] = report::rational(deficiency(p));
  run.results["def"] = report::rational(deficiency(k.presentation));
  Json kj = report::kernel(k);
  if (!o.out_file.empty()) write_file(o.out_file, format_presentation(k.presentation) + "\n");
  if (!o.sidecar.empty()) write_file(o.sidecar, kj["provenance"].dump(2) + "\n");
  run.results["kernel"] = std::move(kj);
}

// descend

struct DescendOpts {
  Common c;
  std::size_t steps = 3;
  bool symbolic = false;
  std::string def_p;
  std::size_t budget_letters = DescentBudget{}.max_letters;
  std::size_t budget_relators = DescentBudget{}.max_relators;
  std::string theta;
};

void run_descend(const DescendOpts& o, Run& run) {
  const std::uint64_t prime = single_prime(o.c);
  if (o.symbolic) {
    Rational start;
    if (!o.def_p.empty()) {
      start = parse_rational(o.def_p);
    } else {
      Presentation p = load(o.c, run);
      const auto d = p_deficiency(p, prime);
      if (!d.is_finite()) throw Error(ErrorCode::NotPuchta, "def_p is -inf");
      start = d.value();
    }
    auto cert = build_descent_symbolic(start, prime, o.steps);
    if (cert.truncated) run.warnings.push_back("descent truncated: " + cert.truncation_reason);
    run.results["certificate"] = report::descent(cert);
    return;
  }
  Presentation p = load(o.c, run);
  DescentBudget budget{o.budget_letters, o.budget_relators};
  std::optional<CpHom> theta;
  if (!o.theta.empty()) theta = parse_theta(o.theta, p, prime);
  auto cert = build_descent_explicit(p, prime, o.steps, budget, theta);
  if (cert.truncated) run.warnings.push_back("descent truncated: " + cert.truncation_reason);
  const auto rg = rank_gradient_bound(p, prime);
  run.results["certificate"] = report::descent(cert);
  run.results["rank_gradient_lower_bound"] = report::rational(rg.bound);
  run.results["rank_gradient_positive"] = rg.positive;
}

// coxeter

struct CoxeterOpts {
  Common c;
  std::string labels;
  std::string family;
  std::size_t n = 3;
  bool subgroup = false;
  std::string surjection;
};

void run_coxeter(const CoxeterOpts& o, Run& run) {
  if (o.labels.empty() == o.family.empty()) {
    throw input_error("give exactly one of --labels and --family");
  }
  run.input = o.labels + "|" + o.family;
  if (!o.labels.empty()) {
    CoxeterMatrix m = CoxeterMatrix::parse(o.labels);
    Json labels = Json::array();
    for (const auto& l : m.labels()) labels.push_back(to_string(l));
    run.results["n"] = m.size();
    run.results["labels"] = labels;
    run.results["coxeter"] = report::presentation(coxeter_presentation(m));
    if (o.subgroup) {
      const std::uint64_t prime = single_prime(o.c);
      Presentation h = p_coxeter_subgroup(m, prime);
      run.results["subgroup"] = report::presentation(h);
      run.results["analyses"] = analyses(h, o.c.primes);
    }
    if (o.surjection == "reduce-labels") {
      run.results["surjection"] =
          report::surjection(reduce_labels_surjection(m, single_prime(o.c)));
    } else if (!o.surjection.empty()) {
      throw input_error("--labels supports --surjection reduce-labels");
    }
    return;
  }
  const std::uint64_t prime = single_prime(o.c);
  Presentation g;
  if (o.family == "sn") {
    g = s_n_p(o.n, prime);
  } else if (o.family == "gupta-sidki") {
    g = gupta_sidki_approx(prime);
  } else if (o.family == "problem") {
    g = problem_group(prime);
  } else {
    throw input_error("unknown family '" + o.family + "'");
  }
  run.results["family"] = o.family;
  run.results["presentation"] = report::presentation(g);
  run.results["analyses"] = analyses(g, o.c.primes);
  if (o.surjection == "drop-generator") {
    if (o.family != "sn") throw input_error("drop-generator needs --family sn");
    run.results["surjection"] = report::surjection(drop_generator_surjection(o.n - 1, prime));
  } else if (!o.surjection.empty()) {
    throw input_error("--family supports --surjection drop-generator");
  }
}

// gs

struct GsOpts {
  Common c;
  std::size_t max_degree = 32;
  std::size_t term_cap = SeriesLimits{}.max_terms;
  std::string route = "both";
};

void run_gs(const GsOpts& o, Run& run) {
  Presentation p = load(o.c, run);
  if (o.c.primes.empty()) throw input_error("-p is required");
  run.results["primes"] = Json::array();
  for (std::uint64_t prime : o.c.primes) {
    Json& block = run.results["primes"].emplace_back(Json::object());
    block["prime"] = prime;
    if (o.route == "gs" || o.route == "both") {
      if (!p.is_finite()) {
        if (o.route == "gs") throw Error(ErrorCode::InfinitePresentation, "gs route needs a finite presentation");
        run.warnings.push_back("gs route skipped for an infinite presentation");
      } else {
        GSFunction f = gs_function(p, prime, o.max_degree, SeriesLimits{o.term_cap});
        auto v = decide_negativity(f);
        Json r = report::gs_function(f);
        r["result"] = report::verdict(v);
        r["verified"] = verify_verdict(f, v);
        if (f.has_bounded_terms()) {
          run.warnings.push_back("p=" + std::to_string(prime) +
                                 ": some relator degrees exceed D=" +
                                 std::to_string(o.max_degree) +
                                 " and are lower bounds; nonnegative answers become inconclusive");
        }
        if (std::holds_alternative<Inconclusive>(v)) {
          run.warnings.push_back("p=" + std::to_string(prime) + ": gs route inconclusive: " +
                                 std::get<Inconclusive>(v).reason);
        }
        block["gs"] = std::move(r);
      }
    }
    if (o.route == "puchta" || o.route == "both") {
      GSFunction f = puchta_function(p, prime);
      auto v = puchta_route(p, prime);
      Json r = report::gs_function(f);
      r["result"] = report::verdict(v);
      r["verified"] = verify_verdict(f, v);
      block["puchta"] = std::move(r);
    }
    if (o.route != "gs" && o.route != "puchta" && o.route != "both") {
      throw input_error("unknown route '" + o.route + "'");
    }
    if (p.is_finite()) {
      try {
        block["strongly_gs_margin"] = report::rational(strongly_gs_margin(p, prime));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::PRankTooSmall) throw;
        block["strongly_gs_margin"] = nullptr;
      }
    }
  }
}

// exceptional

struct ExceptionalOpts {
  std::uint64_t pmax = 13;
};

void run_exceptional(const ExceptionalOpts& o, Run& run) {
  run.input = std::to_string(o.pmax);
  Json blocks = Json::array();
  for (const auto& b : enumerate_exceptional(o.pmax)) {
    blocks.push_back(report::exceptional_block(b));
    if (!b.warning.empty()) run.warnings.push_back(b.warning);
  }
  run.results["blocks"] = blocks;
}

// alexander

struct AlexanderOpts {
  Common c;
  std::string chi;
};

void run_alexander(const AlexanderOpts& o, Run& run) {
  Presentation p = load(o.c, run);
  const std::uint64_t prime = single_prime(o.c);
  if (o.chi.empty()) throw input_error("--chi is required");
  ZHom chi{assignment_values(o.chi, p.alphabet())};
  auto m = alexander_matrix_mod_p(p, chi, prime);
  auto a = alexander_poly_mod_p(p, chi, prime);
  run.results = report::alexander(p, m, a);
  run.results["prime"] = prime;
  if (a.vanishes) {
    run.warnings.push_back("all (d-1)-minors vanish mod " + std::to_string(prime));
  }
}

// quotient

struct QuotientOpts {
  Common c;
  std::string kill;
};

void run_quotient(const QuotientOpts& o, Run& run) {
  Presentation p = load(o.c, run);
  auto q = quotient_by_generators(p, split_names(o.kill));
  run.results["presentation"] = report::presentation(q.presentation);
  run.results["visibly_free"] = q.visibly_free;
  run.results["rank"] = q.presentation.rank();
  run.results["dropped_relators"] = q.dropped_relators;
  if (!o.c.primes.empty()) run.results["analyses"] = analyses(q.presentation, o.c.primes);
}

// schedule

struct ScheduleOpts {
  Common c;
  std::size_t rank = 2;
  std::string slack = "0";
  std::size_t count = 8;
};

void run_schedule(const ScheduleOpts& o, Run& run) {
  const std::uint64_t prime = single_prime(o.c);
  run.input = std::to_string(o.rank) + "/" + o.slack + "/" + std::to_string(o.count);
  auto s = torsion_schedule(o.rank, prime, parse_rational(o.slack), o.count);
  run.results = report::schedule(s);
}

// corpus

struct CorpusOpts {
  Common c;
  CorpusOptions corpus;
};

void run_corpus(const CorpusOpts& o, Run& run) {
  CorpusOptions opts = o.corpus;
  if (!o.c.primes.empty()) opts.prime = single_prime(o.c);
  Json list = Json::array();
  for (const auto& p : random_corpus(opts)) list.push_back(format_presentation(p));
  run.results["seed"] = opts.seed;
  run.results["presentations"] = list;
}

void add_pres(CLI::App* app, Common& c) {
  app->add_option("--pres", c.pres_file, "Presentation file");
  app->add_option("-p,--prime", c.primes, "Prime(s)")->delimiter(',');
  app->add_option("--tail-sigma", c.tail_sigma, "Tail budget sum p^-nu_p(r)");
  app->add_flag("--tail-p-powers", c.tail_p_powers, "Tail relators are proper p-th powers");
}

std::string digest(int argc, char** argv, const std::string& input) {
  std::uint64_t h = report::fnv1a64("");
  for (int i = 1; i < argc; ++i) {
    std::string_view a = argv[i];
    if (a == "--json" || a == "--plain") continue;
    if (a == "--pres") {
      ++i;
      continue;
    }
    if (a.rfind("--pres=", 0) == 0) continue;
    h = report::fnv1a64(a, h);
    h = report::fnv1a64(std::string_view("\0", 1), h);
  }
  h = report::fnv1a64(input, h);
  return report::hex64(h);
}

int exit_code(ErrorCode code) { return code == ErrorCode::ResourceLimit ? 3 : 2; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact p-deficiency and Golod-Shafarevich toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool plain = false;
  auto* json_flag = app.add_flag("--json", "JSON report (default)");
  app.add_flag("--plain", plain, "key: value report")->excludes(json_flag);

  AnalyzeOpts analyze_o;
  auto* analyze_cmd = app.add_subcommand("analyze", "Deficiency, p-deficiency, p-rank");
  add_pres(analyze_cmd, analyze_o.c);

  RewriteOpts rewrite_o;
  auto* rewrite_cmd = app.add_subcommand("rewrite", "Index-p kernel presentation");
  add_pres(rewrite_cmd, rewrite_o.c);
  rewrite_cmd->add_option("--theta", rewrite_o.theta, "Map onto C_p, e.g. x=0,t=1");
  rewrite_cmd->add_option("--method", rewrite_o.method, "puchta or rs")
      ->check(CLI::IsMember({"puchta", "rs"}));
  rewrite_cmd->add_option("--out", rewrite_o.out_file, "Write the kernel presentation");
  rewrite_cmd->add_option("--sidecar", rewrite_o.sidecar, "Write the provenance JSON");

  DescendOpts descend_o;
  auto* descend_cmd = app.add_subcommand("descend", "Abelian p-series descent certificate");
  add_pres(descend_cmd, descend_o.c);
  descend_cmd->add_option("--steps", descend_o.steps, "Steps (rapid levels when symbolic)");
  descend_cmd->add_flag("--symbolic", descend_o.symbolic, "Track by formula");
  descend_cmd->add_option("--def-p", descend_o.def_p, "Starting def_p for --symbolic");
  descend_cmd->add_option("--budget-letters", descend_o.budget_letters);
  descend_cmd->add_option("--budget-relators", descend_o.budget_relators);
  descend_cmd->add_option("--theta", descend_o.theta, "First map onto C_p");

  CoxeterOpts coxeter_o;
  auto* coxeter_cmd = app.add_subcommand("coxeter", "Coxeter and p-Coxeter presentations");
  add_pres(coxeter_cmd, coxeter_o.c);
  coxeter_cmd->add_option("--labels", coxeter_o.labels, "Row-major upper triangle, e.g. 3,3,inf");
  coxeter_cmd->add_option("--family", coxeter_o.family)
      ->check(CLI::IsMember({"sn", "gupta-sidki", "problem"}));
  coxeter_cmd->add_option("--n", coxeter_o.n, "Generators for --family sn");
  coxeter_cmd->add_flag("--subgroup", coxeter_o.subgroup, "Index-2 p-Coxeter subgroup");
  coxeter_cmd->add_option("--surjection", coxeter_o.surjection, "reduce-labels or drop-generator");

  GsOpts gs_o;
  auto* gs_cmd = app.add_subcommand("gs", "Golod-Shafarevich negativity");
  add_pres(gs_cmd, gs_o.c);
  gs_cmd->add_option("--max-degree", gs_o.max_degree, "Zassenhaus degree bound D");
  gs_cmd->add_option("--term-cap", gs_o.term_cap, "Monomial cap");
  gs_cmd->add_option("--route", gs_o.route, "gs, puchta or both")
      ->check(CLI::IsMember({"gs", "puchta", "both"}));

  ExceptionalOpts exceptional_o;
  auto* exceptional_cmd = app.add_subcommand("exceptional", "Exceptional (k, l) table");
  exceptional_cmd->add_option("--pmax", exceptional_o.pmax, "Largest prime");

  AlexanderOpts alexander_o;
  auto* alexander_cmd = app.add_subcommand("alexander", "Alexander polynomial mod p");
  add_pres(alexander_cmd, alexander_o.c);
  alexander_cmd->add_option("--chi", alexander_o.chi, "Map onto Z, e.g. x=1,y=0");

  QuotientOpts quotient_o;
  auto* quotient_cmd = app.add_subcommand("quotient", "Kill generators");
  add_pres(quotient_cmd, quotient_o.c);
  quotient_cmd->add_option("--kill", quotient_o.kill, "Comma-separated names")->required();

  ScheduleOpts schedule_o;
  auto* schedule_cmd = app.add_subcommand("schedule", "Torsion schedule with a tail budget");
  add_pres(schedule_cmd, schedule_o.c);
  schedule_cmd->add_option("--rank", schedule_o.rank);
  schedule_cmd->add_option("--slack", schedule_o.slack);
  schedule_cmd->add_option("--count", schedule_o.count);

  CorpusOpts corpus_o;
  auto* corpus_cmd = app.add_subcommand("corpus", "Seeded random presentations");
  add_pres(corpus_cmd, corpus_o.c);
  corpus_cmd->add_option("--seed", corpus_o.corpus.seed);
  corpus_cmd->add_option("--count", corpus_o.corpus.count);
  corpus_cmd->add_option("--max-rank", corpus_o.corpus.max_rank);
  corpus_cmd->add_option("--max-relators", corpus_o.corpus.max_relators);
  corpus_cmd->add_option("--max-length", corpus_o.corpus.max_length);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto* sub = app.get_subcommands().front();
  Run run;
  int rc = 0;
  std::optional<Error> failure;
  try {
    if (sub == analyze_cmd) run_analyze(analyze_o, run);
    else if (sub == rewrite_cmd) run_rewrite(rewrite_o, run);
    else if (sub == descend_cmd) run_descend(descend_o, run);
    else if (sub == coxeter_cmd) run_coxeter(coxeter_o, run);
    else if (sub == gs_cmd) run_gs(gs_o, run);
    else if (sub == exceptional_cmd) run_exceptional(exceptional_o, run);
    else if (sub == alexander_cmd) run_alexander(alexander_o, run);
    else if (sub == quotient_cmd) run_quotient(quotient_o, run);
    else if (sub == schedule_cmd) run_schedule(schedule_o, run);
    else if (sub == corpus_cmd) run_corpus(corpus_o, run);
  } catch (const Error& e) {
    rc = exit_code(e.code());
    failure = e;
  } catch (const std::exception& e) {
    std::cerr << "pdef: internal error: " << e.what() << "\n";
    return 1;
  }

  if (failure) {
    std::cerr << "pdef: " << to_string(failure->code()) << ": " << failure->what() << "\n";
    if (rc != 3) return rc;
  }

  Json r;
  r["subcommand"] = sub->get_name();
  r["input_digest"] = digest(argc, argv, run.input);
  r["results"] = std::move(run.results);
  r["warnings"] = run.warnings;
  if (failure) {
    r["error"] = Json{{"code", std::string(to_string(failure->code()))},
                      {"message", failure->what()}};
  }
  std::cout << (plain ? report::plain(r) : r.dump(2) + "\n");
  return rc;
}
