// gt — command-line front end for the cgt library.

#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cgt/abelian.hpp"
#include "cgt/action.hpp"
#include "cgt/constructions.hpp"
#include "cgt/error.hpp"
#include "cgt/fingroup.hpp"
#include "cgt/groupspec.hpp"
#include "cgt/matgrp.hpp"
#include "cgt/morphisms.hpp"
#include "cgt/perm.hpp"
#include "cgt/schreier.hpp"
#include "cgt/series.hpp"
#include "cgt/subgroups.hpp"
#include "cgt/word.hpp"
#include "json.hpp"

namespace {

using cgt::FinGroup;
using cgt::Subgroup;
using json = nlohmann::ordered_json;

struct Options {
  bool as_json = false;
  std::size_t max_order = cgt::kDefaultClosureBound;
  unsigned seed = 0;
  bool seed_set = false;
};

// ---------------------------------------------------------------- helpers

cgt::IntMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<long long>> rows;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c)
      throw cgt::ParseError(std::string("expected '") + c + "' at position " +
                            std::to_string(i) + " in matrix literal");
    ++i;
  };
  expect('[');
  while (true) {
    expect('[');
    std::vector<long long> row;
    while (true) {
      skip_ws();
      std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (i == start)
        throw cgt::ParseError("expected an integer at position " +
                              std::to_string(i) + " in matrix literal");
      row.push_back(std::stoll(text.substr(start, i - start)));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    expect(']');
    if (!rows.empty() && row.size() != rows.front().size())
      throw cgt::ParseError("ragged matrix literal");
    rows.push_back(std::move(row));
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  expect(']');
  skip_ws();
  if (i != text.size())
    throw cgt::ParseError("trailing characters after matrix literal");
  cgt::IntMatrix m(static_cast<int>(rows.size()),
                   static_cast<int>(rows.front().size()));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

bool is_cyclic(const FinGroup& g) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return true;
  return false;
}

json subgroup_json(const FinGroup& g, const Subgroup& s) {
  json labels = json::array();
  for (int x : s.elements) labels.push_back(g.label(x));
  return json{{"order", s.order()}, {"elements", labels}};
}

void emit(const Options& opt, const json& report,
          const std::string& human_text) {
  if (opt.as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << human_text;
}

void require_verified(const json& verification) {
  for (const auto& [key, value] : verification.items())
    if (value.is_boolean() && !value.get<bool>())
      throw cgt::VerifyError("self-verification failed: " + key);
}

std::vector<json> sylow_table(const FinGroup& g,
                              std::vector<bool>* checks = nullptr) {
  std::vector<json> out;
  for (const auto& [p, e] : cgt::factorize(g.order())) {
    auto syl = cgt::sylow_subgroups(g, p);
    const long long count = static_cast<long long>(syl.size());
    const bool congruent = count % p == 1;
    const bool divides = g.order() % count == 0;
    if (checks) {
      checks->push_back(congruent);
      checks->push_back(divides);
    }
    out.push_back(json{{"p", p},
                       {"subgroup_order", syl.front().order()},
                       {"count", count},
                       {"count_mod_p", count % p},
                       {"count_divides_order", divides}});
  }
  return out;
}

// ------------------------------------------------------------- commands

int cmd_analyze(const Options& opt, const std::string& spec) {
  FinGroup g = cgt::build_group(spec, opt.max_order);
  const auto ce = cgt::class_equation(g);
  const auto derived = cgt::derived_series(g);
  const bool solvable = cgt::is_solvable(g);
  const bool nilpotent = cgt::is_nilpotent(g);
  const auto comp = cgt::composition_series(g);

  json class_sizes = json::array();
  for (const auto& [rep, size] : ce.classes) class_sizes.push_back(size);
  json factors = json::array();
  for (const auto& f : comp.factors) factors.push_back(f.order);
  std::vector<bool> sylow_checks;
  json sylow = sylow_table(g, &sylow_checks);

  json verification{{"table_is_group", true}};
  bool syl_ok = true;
  for (bool b : sylow_checks) syl_ok = syl_ok && b;
  verification["sylow_congruences"] = syl_ok;
  int factor_product = 1;
  for (const auto& f : comp.factors) factor_product *= f.order;
  verification["composition_factors_multiply_to_order"] =
      factor_product == g.order();

  json report{{"command", "analyze"},
              {"input", spec},
              {"result",
               {{"order", g.order()},
                {"abelian", g.is_abelian()},
                {"cyclic", is_cyclic(g)},
                {"simple", cgt::is_simple(g)},
                {"solvable", solvable},
                {"nilpotent", nilpotent},
                {"center_size", ce.center_size},
                {"class_equation",
                 {{"center", ce.center_size}, {"class_sizes", class_sizes}}},
                {"derived_length", derived.length()},
                {"sylow", sylow},
                {"composition_factor_orders", factors}}},
              {"verification", verification}};
  require_verified(verification);

  std::ostringstream os;
  os << spec << ": order " << g.order() << (g.is_abelian() ? ", abelian" : "")
     << (is_cyclic(g) ? ", cyclic" : "")
     << (cgt::is_simple(g) ? ", simple" : "")
     << (solvable ? ", solvable" : ", not solvable")
     << (nilpotent ? ", nilpotent" : ", not nilpotent") << "\n";
  os << "  class equation: " << g.order() << " = " << ce.center_size;
  for (const auto& [rep, size] : ce.classes) os << " + " << size;
  os << "\n  derived length: " << derived.length() << "\n";
  for (const auto& row : sylow)
    os << "  Sylow " << row["p"] << ": count " << row["count"] << ", order "
       << row["subgroup_order"] << "\n";
  os << "  composition factor orders:";
  for (const auto& f : comp.factors) os << " " << f.order;
  os << "\n";
  emit(opt, report, os.str());
  return 0;
}

int cmd_subgroups(const Options& opt, const std::string& spec) {
  FinGroup g = cgt::build_group(spec, opt.max_order);
  auto subs = cgt::all_subgroups(g);
  json list = json::array();
  bool lagrange = true;
  for (const auto& s : subs) {
    lagrange = lagrange && g.order() % s.order() == 0;
    list.push_back(subgroup_json(g, s));
  }
  json verification{{"lagrange", lagrange},
                    {"contains_trivial_and_full",
                     subs.front().order() == 1 &&
                         subs.back().order() == g.order()}};
  json report{{"command", "subgroups"},
              {"input", spec},
              {"result", {{"count", subs.size()}, {"subgroups", list}}},
              {"verification", verification}};
  require_verified(verification);

  std::ostringstream os;
  os << spec << ": " << subs.size() << " subgroups\n";
  for (const auto& s : subs) {
    os << "  order " << s.order() << ": {";
    for (std::size_t i = 0; i < s.elements.size(); ++i)
      os << (i ? ", " : " ") << g.label(s.elements[i]);
    os << " }\n";
  }
  emit(opt, report, os.str());
  return 0;
}

json series_json(const cgt::SeriesReport& sr) {
  json orders = json::array();
  for (const auto& s : sr.chain) orders.push_back(s.order());
  json factors = json::array();
  for (const auto& f : sr.factors)
    factors.push_back(json{{"order", f.order}, {"simple", f.simple}});
  return json{{"chain_orders", orders},
              {"length", sr.length()},
              {"factors", factors}};
}

int cmd_series(const Options& opt, const std::string& spec) {
  FinGroup g = cgt::build_group(spec, opt.max_order);
  const auto derived = cgt::derived_series(g);
  const auto lower = cgt::lower_central_series(g);
  const auto upper = cgt::upper_central_series(g);
  const auto comp = cgt::composition_series(g);

  bool comp_simple = true;
  for (const auto& f : comp.factors) comp_simple = comp_simple && f.simple;
  json verification{
      {"composition_factors_simple", comp_simple},
      {"central_lengths_agree_when_nilpotent",
       !cgt::is_nilpotent(g) || lower.length() == upper.length()}};

  json result{{"derived", series_json(derived)},
              {"lower_central", series_json(lower)},
              {"upper_central", series_json(upper)},
              {"composition", series_json(comp)},
              {"solvable", cgt::is_solvable(g)},
              {"nilpotent", cgt::is_nilpotent(g)}};
  if (opt.seed_set) {
    std::mt19937 rng(opt.seed);
    result["composition_randomized"] =
        series_json(cgt::composition_series_randomized(g, rng));
  }
  json report{{"command", "series"},
              {"input", spec},
              {"result", result},
              {"verification", verification}};
  require_verified(verification);

  std::ostringstream os;
  auto line = [&os](const char* name, const cgt::SeriesReport& sr) {
    os << "  " << name << " orders:";
    for (const auto& s : sr.chain) os << " " << s.order();
    os << "\n";
  };
  os << spec << ": solvable=" << (cgt::is_solvable(g) ? "yes" : "no")
     << ", nilpotent=" << (cgt::is_nilpotent(g) ? "yes" : "no") << "\n";
  line("derived", derived);
  line("lower central", lower);
  line("upper central", upper);
  line("composition", comp);
  os << "  composition factor orders:";
  for (const auto& f : comp.factors) os << " " << f.order;
  os << "\n";
  emit(opt, report, os.str());
  return 0;
}

int cmd_sylow(const Options& opt, const std::string& spec) {
  FinGroup g = cgt::build_group(spec, opt.max_order);
  std::vector<bool> checks;
  json table = sylow_table(g, &checks);

  // Conjugacy of each family, verified directly.
  bool all_conjugate = true;
  for (const auto& [p, e] : cgt::factorize(g.order())) {
    auto syl = cgt::sylow_subgroups(g, p);
    for (std::size_t i = 1; i < syl.size(); ++i) {
      bool found = false;
      for (int c = 0; c < g.order() && !found; ++c) {
        std::vector<int> conj;
        conj.reserve(syl[0].elements.size());
        for (int x : syl[0].elements) conj.push_back(g.conj(c, x));
        std::sort(conj.begin(), conj.end());
        found = conj == syl[i].elements;
      }
      all_conjugate = all_conjugate && found;
    }
  }
  bool congruences = true;
  for (bool b : checks) congruences = congruences && b;
  json verification{{"counts_congruent_1_mod_p", congruences},
                    {"counts_divide_group_order", congruences},
                    {"families_conjugate", all_conjugate}};
  json report{{"command", "sylow"},
              {"input", spec},
              {"result", {{"order", g.order()}, {"sylow", table}}},
              {"verification", verification}};
  require_verified(verification);

  std::ostringstream os;
  os << spec << ": order " << g.order() << "\n";
  for (const auto& row : table)
    os << "  p=" << row["p"] << ": " << row["count"]
       << " Sylow subgroup(s) of order " << row["subgroup_order"] << "\n";
  emit(opt, report, os.str());
  return 0;
}

int cmd_burnside(const Options& opt, const std::string& kind, long long n,
                 int parts) {
  if (kind != "factorizations")
    throw cgt::ParseError("unknown burnside domain '" + kind +
                          "' (expected: factorizations)");
  cgt::Action a = cgt::factorization_action(n, parts, opt.max_order);
  cgt::BurnsideReport br = cgt::burnside_count(a);

  json chi = json::array();
  long long sum = 0;
  for (int gidx = 0; gidx < a.group().order(); ++gidx) {
    chi.push_back(json{{"element", a.group().label(gidx)},
                       {"fixed", br.fixed_counts[gidx]}});
    sum += br.fixed_counts[gidx];
  }
  json verification{
      {"chi_sum_divisible", sum % a.group().order() == 0},
      {"average_matches_orbit_partition",
       sum / a.group().order() == static_cast<long long>(br.orbits.size())}};
  json report{{"command", "burnside"},
              {"input",
               {{"domain", kind}, {"n", n}, {"parts", parts}}},
              {"result",
               {{"group_order", a.group().order()},
                {"domain_size", a.domain_size()},
                {"chi", chi},
                {"chi_sum", sum},
                {"orbit_count", br.orbit_count}}},
              {"verification", verification}};
  require_verified(verification);

  std::ostringstream os;
  os << "orderings of " << n << " into " << parts << " factors: "
     << a.domain_size() << "\n";
  for (const auto& row : chi)
    os << "  chi(" << row["element"].get<std::string>()
       << ") = " << row["fixed"] << "\n";
  os << "distinct factorizations (orbits): " << br.orbit_count << " = " << sum
     << "/" << a.group().order() << "\n";
  emit(opt, report, os.str());
  return 0;
}

int cmd_smith(const Options& opt, const std::string& matrix_text) {
  cgt::IntMatrix m = parse_matrix(matrix_text);
  bool zero = true;
  for (const auto& x : m.a) zero = zero && x == 0;

  json diag = json::array();
  json verification = json::object();
  if (!zero) {
    cgt::StackedBasis sb = cgt::stacked_basis(m);  // verifies internally
    for (const auto& d : sb.diagonal) diag.push_back(d.str());
    verification["unimodular_transforms"] = true;
    verification["diagonal_divisibility_chain"] = true;
  }
  cgt::InvariantFactors inv = cgt::invariant_factors(m);
  json torsion = json::array();
  for (const auto& t : inv.torsion) torsion.push_back(t.str());

  json report{{"command", "smith"},
              {"input", matrix_text},
              {"result",
               {{"diagonal", diag},
                {"torsion_invariants", torsion},
                {"free_rank", inv.rank}}},
              {"verification", verification}};
  require_verified(verification);

  std::ostringstream os;
  os << "diagonal:";
  for (const auto& d : diag) os << " " << d.get<std::string>();
  os << "\ninvariants:";
  for (const auto& t : torsion) os << " " << t.get<std::string>();
  os << "\nfree rank: " << inv.rank << "\n";
  emit(opt, report, os.str());
  return 0;
}

int cmd_abelian_invariants(const Options& opt, const std::string& spec) {
  FinGroup g = cgt::build_group(spec, opt.max_order);
  cgt::InvariantFactors inv = cgt::decompose_finite_abelian(g);
  cgt::BigInt prod = 1;
  bool chain = true;
  for (std::size_t i = 0; i < inv.torsion.size(); ++i) {
    prod *= inv.torsion[i];
    if (i) chain = chain && inv.torsion[i] % inv.torsion[i - 1] == 0;
  }
  json torsion = json::array();
  for (const auto& t : inv.torsion) torsion.push_back(t.str());
  json verification{{"product_equals_order", prod == g.order()},
                    {"divisibility_chain", chain}};
  json report{{"command", "abelian-invariants"},
              {"input", spec},
              {"result", {{"torsion", torsion}, {"order", g.order()}}},
              {"verification", verification}};
  require_verified(verification);

  std::ostringstream os;
  os << spec << " = ";
  for (std::size_t i = 0; i < inv.torsion.size(); ++i)
    os << (i ? " x " : "") << "C" << inv.torsion[i].str();
  os << "\n";
  emit(opt, report, os.str());
  return 0;
}

int cmd_free_subgroup(const Options& opt, int rank,
                      const std::vector<std::string>& image_texts) {
  if (rank < 1) throw cgt::ParseError("rank must be at least 1");
  if (static_cast<int>(image_texts.size()) != rank)
    throw cgt::ParseError("expected exactly " + std::to_string(rank) +
                          " images, one per free generator");
  int degree = 0;
  for (const auto& t : image_texts)
    degree = std::max(degree, cgt::parse_permutation(t).degree());
  std::vector<cgt::Permutation> images;
  for (const auto& t : image_texts)
    images.push_back(cgt::parse_permutation(t, degree));

  cgt::CosetTable ct = cgt::coset_table(rank, images, {}, opt.max_order);
  auto gens = cgt::schreier_generators(ct);
  auto names = cgt::default_alphabet(rank);

  const long long expected =
      static_cast<long long>(ct.coset_count) * (rank - 1) + 1;
  json gen_list = json::array();
  for (const auto& w : gens) gen_list.push_back(w.str(names));
  json transversal = json::array();
  for (const auto& t : ct.transversal) transversal.push_back(t.str(names));
  json verification{
      {"rank_formula", static_cast<long long>(gens.size()) == expected},
      {"generators_in_kernel", [&] {
         for (const auto& w : gens)
           if (!ct.in_subgroup(w)) return false;
         return true;
       }()}};
  json report{{"command", "free-subgroup"},
              {"input", {{"rank", rank}, {"images", image_texts}}},
              {"result",
               {{"index", ct.coset_count},
                {"subgroup_rank", gens.size()},
                {"transversal", transversal},
                {"generators", gen_list}}},
              {"verification", verification}};
  require_verified(verification);

  std::ostringstream os;
  os << "kernel of F_" << rank << " -> <images>: index " << ct.coset_count
     << ", rank " << gens.size() << " = " << ct.coset_count << "*(" << rank
     << "-1)+1\n";
  for (const auto& w : gens) os << "  " << w.str(names) << "\n";
  emit(opt, report, os.str());
  return 0;
}

int cmd_reduce_word(const Options& opt, const std::string& text,
                    int alphabet) {
  auto names = cgt::default_alphabet(alphabet);
  cgt::Word w = cgt::parse_word(text, names);
  json verification{{"reduced_fixed_point",
                     cgt::reduce(alphabet, w.syllables()) == w}};
  json report{{"command", "reduce-word"},
              {"input", text},
              {"result",
               {{"reduced", w.str(names)},
                {"length", w.length()},
                {"empty", w.empty()}}},
              {"verification", verification}};
  require_verified(verification);
  emit(opt, report, w.str(names) + "\n");
  return 0;
}

int cmd_sl2_decompose(const Options& opt, const std::string& matrix_text) {
  cgt::IntMatrix m = parse_matrix(matrix_text);
  if (m.rows != 2 || m.cols != 2)
    throw cgt::ParseError("sl2-decompose expects a 2x2 matrix");
  cgt::SquareIntMatrix sm(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) sm.at(i, j) = m.at(i, j);
  cgt::ABWord word = cgt::sl2_to_ab(sm);  // verifies reconstruction

  std::ostringstream text;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) text << " ";
    text << word[i].letter;
    if (word[i].exp != 1) text << "^" << word[i].exp;
  }
  if (word.empty()) text << "1";
  json verification{{"reconstructs_input", true}};
  json report{{"command", "sl2-decompose"},
              {"input", matrix_text},
              {"result", {{"word", text.str()}, {"factors", word.size()}}},
              {"verification", verification}};
  emit(opt, report, text.str() + "\n");
  return 0;
}

int cmd_aut(const Options& opt, const std::string& spec) {
  FinGroup g = cgt::build_group(spec, opt.max_order);
  FinGroup aut = cgt::aut_group(g);
  json verification{{"aut_order_positive", aut.order() >= 1}};
  if (is_cyclic(g))
    verification["cyclic_aut_order_is_phi"] =
        aut.order() == cgt::euler_phi(g.order());
  json report{{"command", "aut"},
              {"input", spec},
              {"result",
               {{"group_order", g.order()},
                {"aut_order", aut.order()},
                {"aut_abelian", aut.is_abelian()}}},
              {"verification", verification}};
  require_verified(verification);

  std::ostringstream os;
  os << "|Aut(" << spec << ")| = " << aut.order()
     << (aut.is_abelian() ? " (abelian)" : "") << "\n";
  emit(opt, report, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite and free group computations"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.as_json, "emit a JSON report");
  app.add_option("--max-order", opt.max_order,
                 "override the element-count bound");
  auto* seed_opt =
      app.add_option("--seed", opt.seed, "seed for randomized checks");

  std::string spec, matrix_text, word_text, burnside_kind;
  long long burnside_n = 0;
  int burnside_parts = 0, fs_rank = 0, alphabet = 4;
  std::vector<std::string> images;

  auto* analyze = app.add_subcommand("analyze", "group facts summary");
  analyze->add_option("spec", spec, "group spec, e.g. S4 or sd(C3,C2,inv)")
      ->required();
  auto* subgroups = app.add_subcommand("subgroups", "full subgroup census");
  subgroups->add_option("spec", spec)->required();
  auto* series = app.add_subcommand("series", "derived/central/composition");
  series->add_option("spec", spec)->required();
  auto* sylow = app.add_subcommand("sylow", "Sylow subgroup families");
  sylow->add_option("spec", spec)->required();

  auto* burnside = app.add_subcommand("burnside", "orbit counting");
  burnside->add_option("domain", burnside_kind, "factorizations")->required();
  burnside->add_option("n", burnside_n)->required();
  burnside->add_option("parts", burnside_parts)->required();

  auto* smith = app.add_subcommand("smith", "integer matrix invariants");
  smith->add_option("matrix", matrix_text, "e.g. [[2,0],[0,3]]")->required();

  auto* abinv =
      app.add_subcommand("abelian-invariants", "invariant factor decomposition");
  abinv->add_option("spec", spec)->required();

  auto* freesub =
      app.add_subcommand("free-subgroup", "Schreier generators of a kernel");
  freesub->add_option("-n,--rank", fs_rank, "free group rank")->required();
  freesub
      ->add_option("--images", images,
                   "one permutation per generator, e.g. \"(1 2)\"")
      ->required();

  auto* redw = app.add_subcommand("reduce-word", "free reduction");
  redw->add_option("word", word_text, "e.g. \"x y y^-1 x\"")->required();
  redw->add_option("--alphabet", alphabet, "number of letters (default 4)");

  auto* sl2 = app.add_subcommand("sl2-decompose", "A/B word for an SL2(Z) matrix");
  sl2->add_option("matrix", matrix_text)->required();

  auto* aut = app.add_subcommand("aut", "automorphism group order");
  aut->add_option("spec", spec)->required();

  try {
    app.parse(argc, argv);
    opt.seed_set = seed_opt->count() > 0;
    if (analyze->parsed()) return cmd_analyze(opt, spec);
    if (subgroups->parsed()) return cmd_subgroups(opt, spec);
    if (series->parsed()) return cmd_series(opt, spec);
    if (sylow->parsed()) return cmd_sylow(opt, spec);
    if (burnside->parsed())
      return cmd_burnside(opt, burnside_kind, burnside_n, burnside_parts);
    if (smith->parsed()) return cmd_smith(opt, matrix_text);
    if (abinv->parsed()) return cmd_abelian_invariants(opt, spec);
    if (freesub->parsed()) return cmd_free_subgroup(opt, fs_rank, images);
    if (redw->parsed()) return cmd_reduce_word(opt, word_text, alphabet);
    if (sl2->parsed()) return cmd_sl2_decompose(opt, matrix_text);
    if (aut->parsed()) return cmd_aut(opt, spec);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const cgt::BoundError& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 3;
  } catch (const cgt::VerifyError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 3;
  } catch (const cgt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
