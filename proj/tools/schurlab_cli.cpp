// Command-line surface over the schurlab library: orbit partitions, code
// checks, subgroup constructions, autocorrelation reports, and the theorem
// verification suite.
//
// Exit codes: 0 success, 1 domain/usage error, 2 verification failure.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schurlab/autocorr.hpp"
#include "schurlab/caps.hpp"
#include "schurlab/codes.hpp"
#include "schurlab/constructions.hpp"
#include "schurlab/io.hpp"
#include "schurlab/perm_group.hpp"
#include "schurlab/schur_ring.hpp"
#include "schurlab/word.hpp"

namespace {

using namespace schurlab;

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;
  int max_n = 0;  // 0 = keep default / env
};

Caps effective_caps(const Options& opt) {
  Caps caps = caps_from_env();
  if (opt.max_n > 0) caps.max_enum_n = opt.max_n;
  return caps;
}

std::vector<Word> parse_word_list(const std::string& csv) {
  std::vector<Word> words;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) words.push_back(parse_word(item));
  }
  if (words.empty()) throw std::invalid_argument("no words given");
  return words;
}

void emit_words_text(const std::vector<Word>& words) {
  for (std::size_t i = 0; i < words.size(); ++i)
    std::cout << render_word(words[i]) << (i + 1 == words.size() ? "\n" : " ");
}

json words_to_json_array(const std::vector<Word>& words) {
  json arr = json::array();
  for (const Word& w : words) arr.push_back(render_word(w));
  return arr;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"Schur rings over Z_2^n: codes, subgroup constructions, autocorrelation"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed recorded in reports")->capture_default_str();
  app.add_option("--max-n", opt.max_n, "override the enumeration cap");

  int n = 0, a = 0, b = 0, d = 0, i = 0, j = 0, k = 0;
  std::string group = "cn", word_str, words_csv;
  bool list_flag = false;

  auto* partition_cmd = app.add_subcommand("partition", "orbit partition of all words");
  partition_cmd->add_option("--n", n)->required();
  partition_cmd->add_option("--group", group)
      ->check(CLI::IsMember({"sn", "cn", "dn", "hn", "hc", "dc", "hdc"}));

  auto* orbit_cmd = app.add_subcommand("orbit", "orbit of one word");
  orbit_cmd->add_option("--word", word_str)->required();
  orbit_cmd->add_option("--group", group)
      ->check(CLI::IsMember({"sn", "cn", "dn", "hn", "hc", "dc", "hdc"}));

  auto* code_cmd = app.add_subcommand("code-check", "unique-factorization check");
  code_cmd->add_option("--words", words_csv, "comma-separated words")->required();

  auto* gen_cmd = app.add_subcommand("generate", "subgroup generated by words");
  gen_cmd->add_option("--words", words_csv, "comma-separated words")->required();

  auto* construct_cmd = app.add_subcommand("construct", "named subgroup families");
  construct_cmd->require_subcommand(1);
  auto* gd_cmd = construct_cmd->add_subcommand("gd", "arithmetic-progression subgroup");
  gd_cmd->add_option("--n", n)->required();
  gd_cmd->add_option("--d", d)->required();
  auto* inv_cmd = construct_cmd->add_subcommand("inv", "decimation-invariant subgroup");
  inv_cmd->add_option("--n", n)->required();
  inv_cmd->add_option("--a", a)->required();
  auto* sym_cmd = construct_cmd->add_subcommand("sym", "palindromic subgroup");
  sym_cmd->add_option("--n", n)->required();

  auto* lattice_cmd = app.add_subcommand("lattice", "divisor lattice of period subgroups");
  lattice_cmd->add_option("--n", n)->required();

  auto* lambda_cmd = app.add_subcommand("lambda", "structure constant");
  lambda_cmd->add_option("--n", n)->required();
  lambda_cmd->add_option("--i", i)->required();
  lambda_cmd->add_option("--j", j)->required();
  lambda_cmd->add_option("--k", k)->required();

  auto* product_cmd = app.add_subcommand("product", "weight-class product support");
  product_cmd->add_option("--n", n)->required();
  product_cmd->add_option("--a", a)->required();
  product_cmd->add_option("--b", b)->required();

  auto* autocorr_cmd = app.add_subcommand("autocorr", "autocorrelation vector");
  autocorr_cmd->add_option("--word", word_str)->required();

  auto* search_cmd = app.add_subcommand("search-2level", "two-level autocorrelation scan");
  search_cmd->add_option("--n", n)->required();

  auto* verify_cmd = app.add_subcommand("verify", "theorem verification suite");
  verify_cmd->add_option("--n", n)->required();

  auto* census_cmd = app.add_subcommand("census", "partition-code subgroup census");
  census_cmd->add_option("--n", n)->required();
  census_cmd->add_flag("--list", list_flag, "include the explicit list");

  CLI11_PARSE(app, argc, argv);
  const Caps caps = effective_caps(opt);
  const bool as_json = opt.format == "json";

  if (partition_cmd->parsed()) {
    auto g = build_group(PermGroupSpec::named(n, group), caps);
    auto part = make_partition(n, g, caps);
    if (as_json) {
      emit(partition_to_json(part));
    } else {
      auto pj = partition_to_json(part);
      for (const auto& orb : pj["orbits"]) {
        for (std::size_t t = 0; t < orb.size(); ++t)
          std::cout << orb[t].get<std::string>() << (t + 1 == orb.size() ? "\n" : " ");
      }
    }
    return 0;
  }
  if (orbit_cmd->parsed()) {
    Word w = parse_word(word_str);
    auto g = build_group(PermGroupSpec::named(w.n, group), caps);
    auto orb = orbit(w, g);
    if (as_json)
      emit(json{{"n", w.n},
                {"group", group},
                {"word", render_word(w)},
                {"orbit", words_to_json_array(orb)}});
    else
      emit_words_text(orb);
    return 0;
  }
  if (code_cmd->parsed()) {
    auto words = parse_word_list(words_csv);
    auto code = make_code_set(words.front().n, words);
    auto res = is_code(code);
    if (as_json) {
      emit(code_check_to_json(code, res));
    } else if (res.code) {
      std::cout << "code\n";
    } else {
      std::cout << "not a code\n";
      std::cout << "word " << render_word(res.witness->word) << " factors as {";
      for (std::size_t t = 0; t < res.witness->factors_a.size(); ++t)
        std::cout << (t ? "," : "") << res.witness->factors_a[t];
      std::cout << "} and {";
      for (std::size_t t = 0; t < res.witness->factors_b.size(); ++t)
        std::cout << (t ? "," : "") << res.witness->factors_b[t];
      std::cout << "}\n";
    }
    return 0;
  }
  if (gen_cmd->parsed()) {
    auto words = parse_word_list(words_csv);
    auto sub = generated_subgroup(make_code_set(words.front().n, words), caps);
    if (as_json)
      emit(json{{"n", words.front().n},
                {"order", sub.size()},
                {"elements", words_to_json_array(sub)}});
    else
      emit_words_text(sub);
    return 0;
  }
  if (construct_cmd->parsed()) {
    CodeSet code;
    std::vector<Word> sub;
    json extra;
    std::string kind;
    if (gd_cmd->parsed()) {
      kind = "gd";
      code = xfd_code(n, d);
      sub = g_subgroup(n, d);
      extra["d"] = d;
    } else if (inv_cmd->parsed()) {
      kind = "inv";
      code = invariant_code(n, a);
      sub = invariant_subgroup(n, a, caps);
      extra["a"] = a;
    } else {
      kind = "sym";
      code = sym_code(n);
      sub = sym_subgroup(n, caps);
    }
    if (as_json) {
      json out{{"n", n},
               {"kind", kind},
               {"code", words_to_json_array(code.words)},
               {"order", sub.size()},
               {"subgroup", words_to_json_array(sub)}};
      out.update(extra);
      emit(out);
    } else {
      std::cout << "code:";
      for (const Word& w : code.words) std::cout << ' ' << render_word(w);
      std::cout << "\norder: " << sub.size() << "\n";
      emit_words_text(sub);
    }
    return 0;
  }
  if (lattice_cmd->parsed()) {
    auto lat = g_lattice(n);
    if (opt.format == "dot")
      std::cout << lattice_to_dot(lat);
    else if (as_json)
      emit(lattice_to_json(lat));
    else
      for (auto [dd, ee] : lat.edges) std::cout << dd << " -> " << ee << "\n";
    return 0;
  }
  if (lambda_cmd->parsed()) {
    long long formula = lambda_formula(n, i, j, k);
    json out{{"n", n}, {"i", i}, {"j", j}, {"k", k}, {"formula", formula}};
    if (n <= 16) out["bruteforce"] = lambda_bruteforce(n, i, j, k);
    if (as_json)
      emit(out);
    else
      std::cout << formula << "\n";
    return 0;
  }
  if (product_cmd->parsed()) {
    auto weights = gset_product_weights(n, a, b);
    if (as_json)
      emit(json{{"n", n}, {"a", a}, {"b", b}, {"weights", weights}});
    else {
      bool first = true;
      for (int w : weights) {
        std::cout << (first ? "" : " ") << w;
        first = false;
      }
      std::cout << "\n";
    }
    return 0;
  }
  if (autocorr_cmd->parsed()) {
    Word w = parse_word(word_str);
    auto v = autocorr_vector(w);
    auto off = two_level_offpeak(w);
    if (as_json) {
      json out{{"n", w.n},
               {"word", render_word(w)},
               {"vector", v.values},
               {"two_level", off.has_value()}};
      out["offpeak"] = off ? json(*off) : json(nullptr);
      emit(out);
    } else {
      for (std::size_t t = 0; t < v.values.size(); ++t)
        std::cout << v.values[t] << (t + 1 == v.values.size() ? "\n" : " ");
    }
    return 0;
  }
  if (search_cmd->parsed()) {
    auto classes = search_two_level(n, caps);
    if (opt.format == "csv")
      std::cout << search_report_to_csv(n, classes);
    else if (as_json)
      emit(search_report_to_json(n, classes, opt.seed));
    else
      for (const auto& c : classes)
        std::cout << render_word(c.representative) << " weight=" << c.weight
                  << " offpeak=" << c.offpeak << " orbit=" << c.orbit_size << "\n";
    return 0;
  }
  if (verify_cmd->parsed()) {
    auto report = theorem_suite(n, caps);
    if (as_json) {
      emit(theorem_report_to_json(report, opt.seed));
    } else {
      for (const auto& r : report.results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << " (n=" << r.n << ")";
        if (r.witness) std::cout << " witness: " << *r.witness;
        std::cout << "\n";
      }
      std::cout << (report.all_pass() ? "ALL PASS\n" : "FAILURES PRESENT\n");
    }
    return report.all_pass() ? 0 : 2;
  }
  if (census_cmd->parsed()) {
    const bool enumerate = n <= 10;
    auto census = count_pt_free_subgroups(n, enumerate);
    if (as_json) {
      json out{{"n", n}, {"formula", census.formula}};
      if (enumerate) {
        out["constructions"] = census.constructions;
        out["distinct_subgroups"] = census.distinct_subgroups;
      }
      if (list_flag && enumerate) {
        json items = json::array();
        for (const auto& entry : enumerate_pt_free_subgroups(n))
          items.push_back(json{{"code", words_to_json_array(entry.code.words)},
                               {"order", entry.subgroup.size()}});
        out["list"] = std::move(items);
      }
      emit(out);
    } else {
      std::cout << "formula: " << census.formula << "\n";
      if (enumerate)
        std::cout << "constructions: " << census.constructions
                  << "\ndistinct_subgroups: " << census.distinct_subgroups << "\n";
    }
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  } catch (const std::length_error& ex) {
    std::cerr << "error: cap exceeded: " << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
