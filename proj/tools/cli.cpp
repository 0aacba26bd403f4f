#include "cli.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "monoprop/algebra.hpp"
#include "monoprop/axioms.hpp"
#include "monoprop/closed_forms.hpp"
#include "monoprop/congruence.hpp"
#include "monoprop/io.hpp"
#include "monoprop/just_set.hpp"
#include "monoprop/proportion.hpp"

namespace monoprop::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Element resolve(const MonounaryAlgebra& a, const std::string& token) {
  auto e = a.element_by_name(token);
  if (!e) throw UsageError("unknown element: " + token);
  return *e;
}

// The decisions over the naturals materialize one rect per justification
// pair, so the CLI keeps inputs at desk scale.
constexpr std::uint64_t kNaturalCap = 2000;

std::uint64_t parse_natural(const std::string& token) {
  if (token.empty()) throw UsageError("expected a natural number");
  std::uint64_t v = 0;
  for (char c : token) {
    if (c < '0' || c > '9') {
      throw UsageError("expected a natural number, got: " + token);
    }
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (v > kNaturalCap) {
      throw UsageError("natural inputs are capped at " +
                       std::to_string(kNaturalCap));
    }
  }
  return v;
}

json index_set_json(const IndexSet& s) {
  switch (s.kind()) {
    case IndexSet::Kind::empty:
      return {{"kind", "empty"}};
    case IndexSet::Kind::single:
      return {{"kind", "single"}, {"value", s.value()}};
    case IndexSet::Kind::progression:
      return {{"kind", "progression"},
              {"offset", s.offset()},
              {"period", s.period()}};
  }
  return {};
}

json just_set_json(const JustSet& js) {
  json rects = json::array();
  for (const Rect& r : js.rects()) {
    rects.push_back({{"k", index_set_json(r.kset)}, {"l", index_set_json(r.lset)}});
  }
  return {{"empty", js.empty()}, {"text", render(js)}, {"rects", rects}};
}

std::string reason_text(const ArrowVerdict& v, const MonounaryAlgebra& right) {
  switch (v.reason) {
    case ArrowReason::empty_union:
      return "both justification sets empty";
    case ArrowReason::maximal:
      return "maximal; Jus = " + render(v.intersection);
    case ArrowReason::empty_intersection:
      return "empty intersection";
    case ArrowReason::dominated:
      return "dominated by " + right.name(*v.dominator) + ": " +
             render(v.intersection) + " strictly inside " +
             render(v.dominator_intersection);
  }
  return "";
}

const char* reason_tag(ArrowReason r) {
  switch (r) {
    case ArrowReason::empty_union: return "empty-union";
    case ArrowReason::maximal: return "maximal";
    case ArrowReason::empty_intersection: return "empty-intersection";
    case ArrowReason::dominated: return "dominated";
  }
  return "";
}

json arrow_json(const ArrowVerdict& v, const std::string& label,
                const MonounaryAlgebra& right) {
  json j = {{"arrow", label},
            {"holds", v.holds},
            {"reason", reason_tag(v.reason)},
            {"intersection", just_set_json(v.intersection)}};
  if (v.dominator) {
    j["dominator"] = right.name(*v.dominator);
    j["dominator_intersection"] = just_set_json(v.dominator_intersection);
  } else {
    j["dominator"] = nullptr;
  }
  return j;
}

struct DirectionLabels {
  std::array<std::string, 4> text;
  std::array<const MonounaryAlgebra*, 4> right;
};

DirectionLabels direction_labels(const MonounaryAlgebra& left,
                                 const MonounaryAlgebra& right,
                                 const std::string& a, const std::string& b,
                                 const std::string& c, const std::string& d) {
  DirectionLabels out;
  out.text = {a + "->" + b + " |> " + c + "->" + d,
              b + "->" + a + " |> " + d + "->" + c,
              c + "->" + d + " |> " + a + "->" + b,
              d + "->" + c + " |> " + b + "->" + a};
  out.right = {&right, &right, &left, &left};
  return out;
}

void print_proportion(std::ostream& out, const ProportionVerdict& p,
                      const DirectionLabels& labels) {
  for (std::size_t i = 0; i < 4; ++i) {
    const ArrowVerdict& v = p.directions[i];
    out << "  " << labels.text[i] << ": " << (v.holds ? "holds" : "fails")
        << " (" << reason_text(v, *labels.right[i]) << ")\n";
  }
}

json proportion_json(const ProportionVerdict& p, const DirectionLabels& labels) {
  json dirs = json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    dirs.push_back(arrow_json(p.directions[i], labels.text[i], *labels.right[i]));
  }
  return dirs;
}

struct Options {
  std::string algebra_path;
  std::string right_path;
  std::string theta;
  std::string axiom;
  std::string format = "text";
  std::vector<std::string> quad;
  std::vector<std::string> triple;
  std::vector<std::string> pair;
  std::size_t size = 0;
  std::size_t max_size = 0;
  std::size_t limit = 10;
  bool canonical = false;
  bool arrow_only = false;
};

constexpr std::size_t kEnumerationCap = 8;
constexpr std::size_t kCongruenceCap = 10;

int cmd_decide(const Options& opt, std::ostream& out) {
  const MonounaryAlgebra left = load_algebra(opt.algebra_path);
  const MonounaryAlgebra right =
      opt.right_path.empty() ? left : load_algebra(opt.right_path);
  const Element a = resolve(left, opt.quad[0]);
  const Element b = resolve(left, opt.quad[1]);
  const Element c = resolve(right, opt.quad[2]);
  const Element d = resolve(right, opt.quad[3]);
  const ProportionVerdict p = proportion_holds(left, right, a, b, c, d);
  const DirectionLabels labels = direction_labels(
      left, right, left.name(a), left.name(b), right.name(c), right.name(d));
  if (opt.format == "json") {
    json doc = {{"query",
                 {{"a", left.name(a)},
                  {"b", left.name(b)},
                  {"c", right.name(c)},
                  {"d", right.name(d)}}},
                {"holds", p.holds},
                {"directions", proportion_json(p, labels)}};
    out << doc.dump() << "\n";
  } else {
    out << left.name(a) << " : " << left.name(b) << " :: " << right.name(c)
        << " : " << right.name(d) << "  " << (p.holds ? "holds" : "fails")
        << "\n";
    print_proportion(out, p, labels);
  }
  return p.holds ? 0 : 1;
}

int cmd_solve(const Options& opt, std::ostream& out) {
  const MonounaryAlgebra left = load_algebra(opt.algebra_path);
  const MonounaryAlgebra right =
      opt.right_path.empty() ? left : load_algebra(opt.right_path);
  const Element a = resolve(left, opt.triple[0]);
  const Element b = resolve(left, opt.triple[1]);
  const Element c = resolve(right, opt.triple[2]);
  const std::vector<Element> solutions =
      opt.arrow_only ? solve_arrow(left, right, a, b, c)
                     : solve_proportion(left, right, a, b, c);
  if (opt.format == "json") {
    json names = json::array();
    for (Element d : solutions) names.push_back(right.name(d));
    out << json{{"solutions", names}}.dump() << "\n";
  } else {
    if (solutions.empty()) {
      out << "no solutions\n";
    } else {
      for (Element d : solutions) out << right.name(d) << "\n";
    }
  }
  return 0;
}

int cmd_jus(const Options& opt, std::ostream& out) {
  const MonounaryAlgebra alg = load_algebra(opt.algebra_path);
  const Element a = resolve(alg, opt.pair[0]);
  const Element b = resolve(alg, opt.pair[1]);
  const JustSet js = just_set(alg, a, b);
  if (opt.format == "json") {
    json doc = just_set_json(js);
    doc["from"] = alg.name(a);
    doc["to"] = alg.name(b);
    out << doc.dump() << "\n";
  } else {
    out << "Jus(" << alg.name(a) << " -> " << alg.name(b) << ") = " << render(js)
        << "\n";
  }
  return 0;
}

void warn_expensive_axiom(const MonounaryAlgebra& alg, Axiom x,
                          std::ostream& err) {
  if (alg.size() > 6 && axiom_arity(x) == 6) {
    err << "warning: " << axiom_name(x) << " scans |A|^6 tuples; size "
        << alg.size() << " may take a while\n";
  }
}

void warn_expensive_table(const MonounaryAlgebra& alg, std::ostream& err) {
  if (alg.size() > 10) {
    err << "warning: axiom checking precomputes all |A|^4 arrow decisions; "
           "size "
        << alg.size() << " may take minutes\n";
  }
}

json report_json(const MonounaryAlgebra& alg, const AxiomReport& r) {
  json ce = json::array();
  for (Element e : r.counterexample) ce.push_back(alg.name(e));
  return {{"axiom", std::string(axiom_name(r.axiom))},
          {"holds", r.holds},
          {"counterexample", r.holds ? json(nullptr) : json(ce)},
          {"detail", r.detail}};
}

int cmd_axioms(const Options& opt, std::ostream& out, std::ostream& err) {
  const MonounaryAlgebra alg = load_algebra(opt.algebra_path);
  std::vector<Axiom> to_check;
  if (opt.axiom.empty()) {
    to_check.assign(kAllAxioms.begin(), kAllAxioms.end());
  } else {
    auto x = axiom_from_name(opt.axiom);
    if (!x) throw UsageError("unknown axiom: " + opt.axiom);
    to_check.push_back(*x);
  }
  for (Axiom x : to_check) warn_expensive_axiom(alg, x, err);
  warn_expensive_table(alg, err);
  const ProportionTable table(alg);
  json docs = json::array();
  for (Axiom x : to_check) {
    const AxiomReport r = check_axiom(table, x);
    if (opt.format == "json") {
      docs.push_back(report_json(alg, r));
    } else {
      out << axiom_name(x) << ": " << (r.holds ? "holds" : "fails");
      if (!r.holds) out << "  [" << r.detail << "]";
      out << "\n";
    }
  }
  if (opt.format == "json") out << docs.dump() << "\n";
  return 0;
}

int cmd_search(const Options& opt, std::ostream& out, std::ostream& err) {
  auto x = axiom_from_name(opt.axiom);
  if (!x) throw UsageError("unknown axiom: " + opt.axiom);
  if (opt.max_size == 0 || opt.max_size > kEnumerationCap) {
    throw UsageError("--max-size must be between 1 and " +
                     std::to_string(kEnumerationCap));
  }
  if (opt.max_size > 6 && axiom_arity(*x) == 6) {
    err << "warning: six-variable schema over all algebras of size "
        << opt.max_size << " is expensive\n";
  }
  const auto hits =
      search_counterexamples(opt.max_size, *x, opt.canonical, opt.limit);
  for (const SearchHit& hit : hits) {
    if (opt.format == "json") {
      out << json{{"size", hit.size}, {"succ", hit.succ}, {"tuple", hit.tuple}}
                 .dump()
          << "\n";
    } else {
      out << "size=" << hit.size << " succ=[";
      for (std::size_t i = 0; i < hit.succ.size(); ++i) {
        if (i) out << ",";
        out << hit.succ[i];
      }
      out << "] tuple=(";
      for (std::size_t i = 0; i < hit.tuple.size(); ++i) {
        if (i) out << ",";
        out << hit.tuple[i];
      }
      out << ")\n";
    }
  }
  if (hits.empty() && opt.format != "json") {
    out << "no counterexamples up to size " << opt.max_size << "\n";
  }
  return 0;
}

json classify_json(const ClassifyReport& r) {
  json sat = json::array();
  for (const auto& succ : r.satisfying_examples) sat.push_back(succ);
  json vio = json::array();
  for (const SearchHit& hit : r.violating_examples) {
    vio.push_back({{"succ", hit.succ}, {"tuple", hit.tuple}});
  }
  return {{"size", r.size},          {"canonical", r.canonical},
          {"total", r.total},        {"satisfying", r.satisfying},
          {"violating", r.violating}, {"satisfying_examples", sat},
          {"violating_examples", vio}};
}

std::string succ_text(const std::vector<Element>& succ, char sep = ' ') {
  std::string out;
  for (std::size_t i = 0; i < succ.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(succ[i]);
  }
  return out;
}

int cmd_classify(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.size == 0 || opt.size > kEnumerationCap) {
    throw UsageError("--size must be between 1 and " +
                     std::to_string(kEnumerationCap));
  }
  if (opt.size > 6) {
    err << "warning: transitivity scans |A|^6 tuples per algebra\n";
  }
  const ClassifyReport r =
      classify_transitivity(opt.size, opt.canonical, opt.limit);
  if (opt.format == "json") {
    out << classify_json(r).dump() << "\n";
  } else if (opt.format == "csv") {
    out << "size,succ,transitivity,witness\n";
    for (const auto& succ : r.satisfying_examples) {
      out << r.size << "," << succ_text(succ) << ",holds,\n";
    }
    for (const SearchHit& hit : r.violating_examples) {
      std::string tuple;
      for (std::size_t i = 0; i < hit.tuple.size(); ++i) {
        if (i) tuple += ' ';
        tuple += std::to_string(hit.tuple[i]);
      }
      out << r.size << "," << succ_text(hit.succ) << ",fails," << tuple << "\n";
    }
  } else {
    out << "size " << r.size << (r.canonical ? " (up to isomorphism)" : "")
        << ": " << r.total << " algebras, " << r.satisfying
        << " satisfy transitivity, " << r.violating << " violate\n";
    for (const auto& succ : r.satisfying_examples) {
      out << "  holds: [" << succ_text(succ, ',') << "]\n";
    }
    for (const SearchHit& hit : r.violating_examples) {
      out << "  fails: [" << succ_text(hit.succ, ',') << "] tuple=(";
      for (std::size_t i = 0; i < hit.tuple.size(); ++i) {
        if (i) out << ",";
        out << hit.tuple[i];
      }
      out << ")\n";
    }
  }
  return 0;
}

int cmd_congruences(const Options& opt, std::ostream& out) {
  const MonounaryAlgebra alg = load_algebra(opt.algebra_path);
  if (alg.size() > kCongruenceCap) {
    throw UsageError("congruence enumeration capped at size " +
                     std::to_string(kCongruenceCap));
  }
  const auto congruences = all_congruences(alg);
  if (opt.format == "json") {
    json list = json::array();
    for (const Partition& p : congruences) {
      json blocks = json::array();
      for (const auto& block : p.blocks()) {
        json names = json::array();
        for (Element e : block) names.push_back(alg.name(e));
        blocks.push_back(names);
      }
      list.push_back(blocks);
    }
    out << json{{"count", congruences.size()}, {"congruences", list}}.dump()
        << "\n";
  } else {
    for (const Partition& p : congruences) {
      out << partition_to_string(alg, p) << "\n";
    }
  }
  return 0;
}

int cmd_factor(const Options& opt, std::ostream& out) {
  const MonounaryAlgebra alg = load_algebra(opt.algebra_path);
  const Partition theta = parse_partition(alg, opt.theta);
  const FactorAlgebra f = factor(alg, theta);
  out << algebra_to_json(f.algebra) << "\n";
  return 0;
}

int cmd_quotient_check(const Options& opt, std::ostream& out) {
  const MonounaryAlgebra alg = load_algebra(opt.algebra_path);
  const Partition theta = parse_partition(alg, opt.theta);
  const Element a = resolve(alg, opt.quad[0]);
  const Element b = resolve(alg, opt.quad[1]);
  const Element c = resolve(alg, opt.quad[2]);
  const Element d = resolve(alg, opt.quad[3]);
  const QuotientCheck q = quotient_compat_experiment(alg, theta, a, b, c, d);
  const FactorAlgebra f = factor(alg, theta);
  if (opt.format == "json") {
    out << json{{"in_algebra", q.in_algebra.holds},
                {"in_quotient", q.in_quotient.holds},
                {"cross", q.cross.holds}}
               .dump()
        << "\n";
  } else {
    auto line = [&](const char* tag, const std::string& query, bool holds) {
      out << tag << query << "  " << (holds ? "holds" : "fails") << "\n";
    };
    line("in algebra:  ",
         alg.name(a) + " : " + alg.name(b) + " :: " + alg.name(c) + " : " +
             alg.name(d),
         q.in_algebra.holds);
    line("in quotient: ",
         f.algebra.name(f.projection[a]) + " : " +
             f.algebra.name(f.projection[b]) + " :: " +
             f.algebra.name(f.projection[c]) + " : " +
             f.algebra.name(f.projection[d]),
         q.in_quotient.holds);
    line("cross pair:  ",
         alg.name(a) + " : " + alg.name(b) + " :: " +
             f.algebra.name(f.projection[a]) + " : " +
             f.algebra.name(f.projection[b]),
         q.cross.holds);
  }
  return 0;
}

int cmd_nat(const Options& opt, std::ostream& out) {
  const std::uint64_t a = parse_natural(opt.quad[0]);
  const std::uint64_t b = parse_natural(opt.quad[1]);
  const std::uint64_t c = parse_natural(opt.quad[2]);
  const std::uint64_t d = parse_natural(opt.quad[3]);
  const ProportionVerdict p = nat_proportion_holds(a, b, c, d);
  const std::int64_t lhs =
      static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b);
  const std::int64_t rhs =
      static_cast<std::int64_t>(c) - static_cast<std::int64_t>(d);
  if (opt.format == "json") {
    out << json{{"holds", p.holds}, {"lhs", lhs}, {"rhs", rhs}}.dump() << "\n";
  } else {
    out << (p.holds ? "holds" : "fails") << " (difference " << lhs
        << (p.holds ? " = " : " != ") << rhs << ")\n";
  }
  return p.holds ? 0 : 1;
}

int cmd_parity(const Options& opt, std::ostream& out) {
  const std::uint64_t a = parse_natural(opt.quad[0]);
  const std::uint64_t b = parse_natural(opt.quad[1]);
  const std::uint64_t c = parse_natural(opt.quad[2]);
  const std::uint64_t d = parse_natural(opt.quad[3]);
  if (c > 1 || d > 1) throw UsageError("c and d must be 0 or 1");
  const ProportionVerdict p = parity_proportion_holds(a, b, c, d);
  const bool even_gap = (a % 2) == (b % 2);
  if (opt.format == "json") {
    out << json{{"holds", p.holds},
                {"c_equals_d", c == d},
                {"gap_even", even_gap}}
               .dump()
        << "\n";
  } else {
    out << (p.holds ? "holds" : "fails") << " (c " << (c == d ? "=" : "!=")
        << " d and b - a is " << (even_gap ? "even" : "odd") << ")\n";
  }
  return p.holds ? 0 : 1;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  if (opt.size == 0 || opt.size > kEnumerationCap) {
    throw UsageError("--size must be between 1 and " +
                     std::to_string(kEnumerationCap));
  }
  AlgebraEnumerator en(opt.size, opt.canonical);
  while (auto a = en.next()) {
    out << algebra_to_json(*a) << "\n";
  }
  return 0;
}

int cmd_dot(const Options& opt, std::ostream& out) {
  out << to_dot(load_algebra(opt.algebra_path));
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"decision engine for analogical proportions in monounary algebras"};
  app.name("monoprop");
  app.require_subcommand(1);

  Options opt;

  auto add_format = [&](CLI::App* cmd, bool with_csv = false) {
    auto values = with_csv ? std::vector<std::string>{"text", "json", "csv"}
                           : std::vector<std::string>{"text", "json"};
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember(values));
  };

  CLI::App* decide = app.add_subcommand(
      "decide", "decide an analogical proportion a : b :: c : d");
  decide->add_option("--algebra", opt.algebra_path, "algebra file")->required();
  decide->add_option("--right", opt.right_path,
                     "second algebra housing c and d");
  decide->add_option("--quad", opt.quad, "elements a b c d")
      ->expected(4)
      ->required();
  add_format(decide);

  CLI::App* solve = app.add_subcommand(
      "solve", "list all d with a : b :: c : d (or a->b |> c->d)");
  solve->add_option("--algebra", opt.algebra_path, "algebra file")->required();
  solve->add_option("--right", opt.right_path, "second algebra housing c");
  solve->add_option("--triple", opt.triple, "elements a b c")
      ->expected(3)
      ->required();
  solve->add_flag("--arrow", opt.arrow_only,
                  "solve the directed arrow proportion only");
  add_format(solve);

  CLI::App* jus = app.add_subcommand(
      "jus", "print the justification set of a -> b");
  jus->add_option("--algebra", opt.algebra_path, "algebra file")->required();
  jus->add_option("--pair", opt.pair, "elements a b")->expected(2)->required();
  add_format(jus);

  CLI::App* axioms = app.add_subcommand(
      "axioms", "check proportion axioms on one algebra");
  axioms->add_option("--algebra", opt.algebra_path, "algebra file")->required();
  axioms->add_option("--axiom", opt.axiom, "check one axiom only");
  add_format(axioms);

  CLI::App* search = app.add_subcommand(
      "search", "search small algebras for axiom counterexamples");
  search->add_option("--max-size", opt.max_size, "largest universe to scan")
      ->required();
  search->add_option("--axiom", opt.axiom, "axiom to refute")->required();
  search->add_flag("--canonical", opt.canonical,
                   "scan canonical representatives only");
  search->add_option("--limit", opt.limit,
                     "stop after this many hits (0 = all)");
  add_format(search);

  CLI::App* classify = app.add_subcommand(
      "classify-transitivity",
      "partition the algebras of one size by the transitivity axiom");
  classify->add_option("--size", opt.size, "universe size")->required();
  classify->add_flag("--canonical", opt.canonical,
                     "classify canonical representatives only");
  classify->add_option("--examples", opt.limit, "exemplars kept per class");
  add_format(classify, /*with_csv=*/true);

  CLI::App* congruences = app.add_subcommand(
      "congruences", "list every congruence of the algebra");
  congruences->add_option("--algebra", opt.algebra_path, "algebra file")
      ->required();
  add_format(congruences);

  CLI::App* factor_cmd = app.add_subcommand(
      "factor", "emit the quotient algebra by a congruence");
  factor_cmd->add_option("--algebra", opt.algebra_path, "algebra file")
      ->required();
  factor_cmd
      ->add_option("--theta", opt.theta,
                   "congruence as blocks, e.g. \"a,a'|b,b'|c|d\"")
      ->required();

  CLI::App* quotient = app.add_subcommand(
      "quotient-check",
      "compare a proportion inside the algebra, its quotient, and across");
  quotient->add_option("--algebra", opt.algebra_path, "algebra file")
      ->required();
  quotient->add_option("--theta", opt.theta, "congruence blocks")->required();
  quotient->add_option("--quad", opt.quad, "elements a b c d")
      ->expected(4)
      ->required();
  add_format(quotient);

  CLI::App* nat = app.add_subcommand(
      "nat", "decide a : b :: c : d over the naturals with successor");
  nat->add_option("--quad", opt.quad, "naturals a b c d")
      ->expected(4)
      ->required();
  add_format(nat);

  CLI::App* parity = app.add_subcommand(
      "parity",
      "decide a : b :: c : d across (naturals, booleans); c, d in {0, 1}");
  parity->add_option("--quad", opt.quad, "a b c d with c, d in {0, 1}")
      ->expected(4)
      ->required();
  add_format(parity);

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "stream all successor tables of one size as JSON lines");
  enumerate->add_option("--size", opt.size, "universe size")->required();
  enumerate->add_flag("--canonical", opt.canonical,
                      "canonical representatives only");

  CLI::App* dot = app.add_subcommand("dot", "emit the algebra as a DOT digraph");
  dot->add_option("--algebra", opt.algebra_path, "algebra file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (decide->parsed()) return cmd_decide(opt, out);
    if (solve->parsed()) return cmd_solve(opt, out);
    if (jus->parsed()) return cmd_jus(opt, out);
    if (axioms->parsed()) return cmd_axioms(opt, out, err);
    if (search->parsed()) return cmd_search(opt, out, err);
    if (classify->parsed()) return cmd_classify(opt, out, err);
    if (congruences->parsed()) return cmd_congruences(opt, out);
    if (factor_cmd->parsed()) return cmd_factor(opt, out);
    if (quotient->parsed()) return cmd_quotient_check(opt, out);
    if (nat->parsed()) return cmd_nat(opt, out);
    if (parity->parsed()) return cmd_parity(opt, out);
    if (enumerate->parsed()) return cmd_enumerate(opt, out);
    if (dot->parsed()) return cmd_dot(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace monoprop::cli
