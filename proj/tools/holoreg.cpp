// holoreg: realizability of (C_n, N) from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "holoreg/cgroup.hpp"
#include "holoreg/corpus.hpp"
#include "holoreg/group_spec.hpp"
#include "holoreg/holomorph.hpp"
#include "holoreg/realizability.hpp"
#include "holoreg/report.hpp"

using namespace holoreg;

namespace {

struct Options {
  std::string spec;
  std::string table;
  std::size_t hol_bound = kDefaultHolBound;
  int workers = 0;
  std::string out;
};

struct Outcome {
  std::string text;
  int code = 0;
};

std::pair<std::string, FiniteGroup> load_group(const Options& o) {
  if (o.spec.empty() == o.table.empty()) throw GroupError("give exactly one of --spec or --table");
  if (!o.spec.empty()) {
    FiniteGroup g = parse_group_spec(o.spec);
    return {g.name(), g};
  }
  return {o.table, read_table_file(o.table)};
}

std::size_t check_order(const FiniteGroup& g) {
  if (g.order() > kDefaultClassifyBound)
    throw BoundExceeded("group order " + std::to_string(g.order()) + " exceeds " +
                        std::to_string(kDefaultClassifyBound));
  return g.order();
}

Outcome run_classify(const Options& o) {
  const auto [spec, n] = load_group(o);
  const Verdict v = classify(n, check_order(n));
  return {verdict_report(spec, n, v).str(), v.realizable ? 0 : 1};
}

Outcome run_oracle(const Options& o) {
  const auto [spec, n] = load_group(o);
  const Holomorph hol(n, o.hol_bound);
  const auto gens = cyclic_regular_oracle_indices(hol);
  const auto subs = cyclic_subgroups_of(hol, gens);
  Report r;
  r.add("group", spec).add("order", n.order()).add("hol_order", hol.order());
  r.add("generators", gens.size()).add("subgroups", subs.size()).add("realizable", !gens.empty());
  r.add("first_generator", gens.empty() ? std::string("none") : format_hol_element(n, hol.element(gens.front())));
  return {r.str(), gens.empty() ? 1 : 0};
}

Outcome run_construct(const Options& o) {
  const auto [spec, n] = load_group(o);
  const Verdict v = classify(n, check_order(n));
  Report r;
  r.add("group", spec).add("order", n.order()).add("realizable", v.realizable).add("reason", to_string(v.reason));
  if (v.normalized) {
    const auto& dec = v.normalized->dec;
    const Construction c = construct(dec);
    r.add("alpha_r", format_cgroup_aut(dec.alpha_r)).add("alpha_s", format_cgroup_aut(dec.alpha_s));
    r.add("eta0", n.label_string(c.eta0)).add("xi_order", c.xi_order);
    r.add("xi_is_automorphism", c.xi_is_automorphism).add("closed_form_matches", c.closed_form_matches);
    r.add("product_n_is_identity", c.product_n_is_identity).add("regular", c.regular);
  }
  r.add("witness", v.witness ? format_hol_element(n, *v.witness) : std::string("none"));
  return {r.str(), v.realizable ? 0 : 1};
}

Outcome run_brace(const Options& o) {
  const auto [spec, n] = load_group(o);
  const Verdict v = classify(n, check_order(n));
  Report r;
  r.add("group", spec).add("order", n.order()).add("realizable", v.realizable);
  if (!v.witness) return {r.add("brace", std::string("none")).str(), 1};
  std::vector<HolElement> sub;
  HolElement h = hol_identity(n);
  for (std::size_t i = 0; i < n.order(); ++i) {
    sub.push_back(h);
    h = hol_compose(n, h, *v.witness);
  }
  const SkewBrace brace = skew_brace_from_regular(n, sub);
  const FiniteGroup circle = brace.circle_group();
  bool cyclic = false;
  for (std::size_t a = 0; a < circle.order(); ++a) cyclic = cyclic || circle.element_order(static_cast<Elem>(a)) == n.order();
  r.add("brace_axiom", brace.satisfies_brace_axiom()).add("circle_group_cyclic", cyclic);
  return {r.str(), 0};
}

Outcome run_rump(const Options& o) {
  const auto [spec, g] = load_group(o);
  check_order(g);
  const bool ok = classify_rump(g);
  Report r;
  r.add("group", spec).add("order", g.order()).add("realizable_with_cyclic_N", ok);
  return {r.str(), ok ? 0 : 1};
}

Outcome run_aut(const Options& o) {
  const auto [spec, g] = load_group(o);
  const auto auts = automorphism_perms(g, std::max(g.order(), kDefaultAutBound));
  Report r;
  r.add("group", spec).add("order", g.order()).add("aut_order", auts.size());
  if (const auto rec = recognize_cgroup(g)) {
    r.add("presentation", rec->presentation.to_string());
    r.add("formula_order", aut_group_order(rec->presentation));
  }
  return {r.str(), 0};
}

Outcome run_sweep(const Options& o) {
  const auto corpus = default_corpus();
  std::vector<std::string> lines(corpus.size());
  std::vector<int> status(corpus.size(), 0);  // 0 agree, 1 disagree, 2 skipped
  const auto count = static_cast<long long>(corpus.size());
#pragma omp parallel for schedule(dynamic) num_threads(o.workers > 0 ? o.workers : omp_get_max_threads())
  for (long long i = 0; i < count; ++i) {
    const auto& entry = corpus[static_cast<std::size_t>(i)];
    std::ostringstream line;
    try {
      const Verdict v = classify(entry.group);
      line << "group: " << entry.spec << " | order: " << entry.group.order()
           << " | classify: " << (v.realizable ? "true" : "false") << " | reason: " << to_string(v.reason);
      try {
        const Holomorph hol(entry.group, o.hol_bound);
        const bool oracle = find_cyclic_regular(hol).has_value();
        line << " | oracle: " << (oracle ? "true" : "false");
        status[static_cast<std::size_t>(i)] = oracle == v.realizable ? 0 : 1;
        if (oracle != v.realizable) line << " | DISAGREE";
      } catch (const BoundExceeded&) {
        line << " | oracle: skipped";
        status[static_cast<std::size_t>(i)] = 2;
      }
    } catch (const std::exception& e) {
      line << " | error: " << e.what();
      status[static_cast<std::size_t>(i)] = 1;
    }
    lines[static_cast<std::size_t>(i)] = line.str();
  }
  std::string text;
  std::size_t agree = 0, disagree = 0, skipped = 0, realizable = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    text += lines[i] + "\n";
    agree += status[i] == 0;
    disagree += status[i] == 1;
    skipped += status[i] == 2;
  }
  for (const auto& line : lines) realizable += line.find("classify: true") != std::string::npos;
  Report r;
  r.add("groups", corpus.size()).add("classified_realizable", realizable);
  r.add("oracle_agree", agree).add("oracle_disagree", disagree).add("oracle_skipped", skipped);
  return {text + r.str(), disagree == 0 ? 0 : 1};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realizability of (C_n, N): classifier, brute-force oracle and explicit construction"};
  app.require_subcommand(1);
  Options o;
  if (const char* env = std::getenv("HOLOREG_BOUND")) {
    try {
      o.hol_bound = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: HOLOREG_BOUND is not a number\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::string>> commands{
      {"classify", "decide realizability with the structural classifier"},
      {"oracle", "search Hol(N) for cyclic regular subgroups"},
      {"construct", "build the explicit cyclic regular subgroup"},
      {"brace", "skew brace with cyclic multiplicative group"},
      {"rump", "realizability of (G, C_n)"},
      {"aut", "automorphism group order"},
      {"sweep", "classifier against oracle over the built-in corpus"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    if (name != "sweep") {
      sub->add_option("--spec", o.spec, "group spec");
      sub->add_option("--table", o.table, "Cayley table file");
    }
    sub->add_option("--hol-bound", o.hol_bound, "largest |Hol(N)| to enumerate")->check(CLI::PositiveNumber);
    sub->add_option("--workers", o.workers, "worker threads for sweep")->check(CLI::NonNegativeNumber);
    sub->add_option("--out", o.out, "write the report to FILE");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  Outcome result;
  try {
    if (cmd == "classify") result = run_classify(o);
    else if (cmd == "oracle") result = run_oracle(o);
    else if (cmd == "construct") result = run_construct(o);
    else if (cmd == "brace") result = run_brace(o);
    else if (cmd == "rump") result = run_rump(o);
    else if (cmd == "aut") result = run_aut(o);
    else result = run_sweep(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (o.out.empty()) {
    std::cout << result.text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 2;
    }
    f << result.text;
  }
  return result.code;
}
