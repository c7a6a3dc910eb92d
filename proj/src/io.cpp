#include "schurlab/io.hpp"

#include <algorithm>
#include <sstream>

namespace schurlab {

json word_to_json(const Word& w) { return json{{"n", w.n}, {"mask", w.mask}}; }

Word word_from_json(const json& j) {
  return make_word(j.at("n").get<int>(), j.at("mask").get<std::uint64_t>());
}

json partition_to_json(const SPartition& part) {
  std::vector<std::size_t> order(part.orbits.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& oa = part.orbits[a];
    const auto& ob = part.orbits[b];
    if (oa.size() != ob.size()) return oa.size() < ob.size();
    return oa.front().mask < ob.front().mask;
  });
  json orbits = json::array();
  for (std::size_t i : order) {
    json orb = json::array();
    for (const Word& w : part.orbits[i]) orb.push_back(render_word(w));
    orbits.push_back(std::move(orb));
  }
  return json{{"n", part.n}, {"group", part.spec.name()}, {"orbits", std::move(orbits)}};
}

json algebra_to_json(const GroupAlgebraElement& e) {
  json terms = json::array();
  for (const auto& [mask, c] : e.coeffs)
    terms.push_back(json{{"word", render_word(Word{e.n, mask})}, {"coeff", c}});
  return json{{"n", e.n}, {"terms", std::move(terms)}};
}

json code_to_json(const CodeSet& c) {
  json words = json::array();
  for (const Word& w : c.words) words.push_back(render_word(w));
  return json{{"n", c.n}, {"words", std::move(words)}};
}

CodeSet code_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<Word> words;
  for (const auto& s : j.at("words")) words.push_back(parse_word(s.get<std::string>()));
  return make_code_set(n, std::move(words));
}

json code_check_to_json(const CodeSet& c, const CodeCheckResult& r) {
  json out{{"n", c.n}, {"is_code", r.code}};
  json words = json::array();
  for (const Word& w : c.words) words.push_back(render_word(w));
  out["words"] = std::move(words);
  if (r.witness) {
    out["witness"] = json{{"word", render_word(r.witness->word)},
                          {"factorization_a", r.witness->factors_a},
                          {"factorization_b", r.witness->factors_b}};
  }
  return out;
}

json lattice_to_json(const DivisorLattice& lat) {
  json edges = json::array();
  for (auto [d, e] : lat.edges) edges.push_back(json::array({d, e}));
  return json{{"n", lat.n}, {"divisors", lat.divisors}, {"edges", std::move(edges)}};
}

std::string lattice_to_dot(const DivisorLattice& lat) {
  std::ostringstream os;
  os << "digraph period_subgroups {\n";
  os << "  rankdir=BT;\n";
  for (long long d : lat.divisors)
    os << "  d" << d << " [label=\"G_" << d << "(" << lat.n << ")\"];\n";
  for (auto [d, e] : lat.edges) os << "  d" << d << " -> d" << e << ";\n";
  os << "}\n";
  return os.str();
}

json theorem_report_to_json(const TheoremReport& report, std::uint64_t seed) {
  json results = json::array();
  for (const auto& r : report.results) {
    json item{{"theorem_id", r.id}, {"n", r.n}, {"status", r.pass ? "pass" : "fail"}};
    item["witness"] = r.witness ? json(*r.witness) : json(nullptr);
    results.push_back(std::move(item));
  }
  return json{{"n", report.n},
              {"seed", seed},
              {"all_pass", report.all_pass()},
              {"results", std::move(results)}};
}

json search_report_to_json(int n, const std::vector<TwoLevelClass>& classes,
                           std::uint64_t seed) {
  json rows = json::array();
  for (const auto& c : classes)
    rows.push_back(json{{"representative", render_word(c.representative)},
                        {"weight", c.weight},
                        {"offpeak", c.offpeak},
                        {"orbit_size", c.orbit_size}});
  return json{{"n", n}, {"seed", seed}, {"classes", std::move(rows)}};
}

std::string search_report_to_csv(int n, const std::vector<TwoLevelClass>& classes) {
  std::ostringstream os;
  os << "n,representative,weight,offpeak,orbit_size\n";
  for (const auto& c : classes)
    os << n << ',' << render_word(c.representative) << ',' << c.weight << ','
       << c.offpeak << ',' << c.orbit_size << '\n';
  return os.str();
}

}  // namespace schurlab
