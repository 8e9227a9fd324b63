#pragma once

// Text and JSON renderings shared by the command-line tool and the
// acceptance runner. JSON output never contains timings.

#include <iomanip>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "burau.hpp"
#include "disc.hpp"
#include "kernel.hpp"
#include "search.hpp"

namespace burau::report {

using nlohmann::json;

/// {"<exponent>": "<coefficient>"}
inline json poly_map(const LaurentPoly& p) {
  json m = json::object();
  for (const auto& [e, c] : p.terms()) m[std::to_string(e)] = c.str();
  return m;
}

inline json poly_json(const LaurentPoly& p) {
  return {{"text", p.to_string()}, {"terms", poly_map(p)}};
}

inline json matrix_json(const BurauMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(poly_map(m(i, j)));
    rows.push_back(row);
  }
  return {{"variant", to_string(m.variant())},
          {"size", m.size()},
          {"identity", m.is_identity()},
          {"entries", rows}};
}

inline json permutation_json(const Permutation& p) { return p.images(); }

inline json kernel_json(const KernelReport& r) {
  json artin = {{"trivial", r.artin.trivial}, {"method", to_string(r.artin.method)}};
  if (!r.artin.trivial) artin["witness_generator"] = "x" + std::to_string(r.artin.witness_generator);
  if (r.artin.method == TrivialityVerdict::Method::modular) {
    artin["witness_prime"] = std::to_string(r.artin.witness_prime);
  } else {
    artin["max_image_length"] = r.artin.max_image_length;
  }
  return {{"word", r.word.to_string()},
          {"strands", r.word.strands()},
          {"letter_count", r.letter_count},
          {"burau_trivial", r.burau_trivial},
          {"artin_trivial", r.artin_trivial},
          {"certified_kernel_element", r.certified()},
          {"permutation", permutation_json(r.permutation)},
          {"exponent_sum", r.exponent_sum},
          {"artin", artin}};
}

inline std::string kernel_text(const KernelReport& r) {
  std::ostringstream os;
  auto row = [&](const std::string& k, const std::string& v) {
    os << std::left << std::setw(18) << k << v << '\n';
  };
  row("strands", std::to_string(r.word.strands()));
  row("letter_count", std::to_string(r.letter_count));
  row("burau_trivial", r.burau_trivial ? "true" : "false");
  std::string artin = r.artin_trivial ? "true" : "false";
  if (!r.artin_trivial) {
    artin += "  (x" + std::to_string(r.artin.witness_generator) + " moved, " +
             to_string(r.artin.method);
    if (r.artin.method == TrivialityVerdict::Method::modular) {
      artin += " mod " + std::to_string(r.artin.witness_prime);
    }
    artin += ")";
  }
  row("artin_trivial", artin);
  row("permutation", r.permutation.to_string());
  row("exponent_sum", std::to_string(r.exponent_sum));
  row("certified", r.certified() ? "yes" : "no");
  row("word", r.word.empty() ? "(empty)" : r.word.to_string());
  return os.str();
}

inline json crossings_json(const CrossingList& list) {
  json items = json::array();
  for (const auto& c : list.items) {
    items.push_back({{"x", format_rational(c.point.x)},
                     {"y", format_rational(c.point.y)},
                     {"sign", c.sign},
                     {"exponent", c.exponent}});
  }
  return {{"count", list.size()},
          {"global_sign", list.global_sign},
          {"shift", list.shift},
          {"items", items}};
}

inline json remark_json(const RemarkReport& r) {
  return {{"ok", r.ok}, {"checked", r.checked}, {"skipped", r.skipped}};
}

inline json search_json(const SearchConfig& cfg, const SearchResult& r) {
  json certified = json::array();
  for (const auto& c : r.certified) {
    json k = kernel_json(c.report);
    k["conjugator"] = c.conjugator.to_string();
    k["seeded"] = c.seeded;
    certified.push_back(k);
  }
  json undecided = json::array();
  for (const auto& u : r.undecided) {
    undecided.push_back({{"conjugator", u.conjugator.to_string()}, {"reason", u.reason}});
  }
  return {{"n", cfg.n},
          {"max_conjugator_length", cfg.max_conjugator_length},
          {"core_a", cfg.resolved_core_a().to_string()},
          {"core_b", cfg.resolved_core_b().to_string()},
          {"filter_requested", to_string(cfg.filter)},
          {"filter_used", to_string(r.filter_used)},
          {"pairing_calibrated", r.pairing_calibrated},
          {"prune_commuting", cfg.prune_commuting},
          {"examined", r.examined},
          {"survivors", r.survivors},
          {"trivial_words", r.trivial_words},
          {"duplicates", r.duplicates},
          {"certified", certified},
          {"undecided", undecided}};
}

inline std::string search_text(const SearchConfig& cfg, const SearchResult& r) {
  std::ostringstream os;
  os << "n=" << cfg.n << " max_len=" << cfg.max_conjugator_length
     << " filter=" << to_string(r.filter_used);
  if (r.filter_used != cfg.filter) os << " (requested " << to_string(cfg.filter) << ")";
  os << '\n'
     << "examined   " << r.examined << '\n'
     << "survivors  " << r.survivors << '\n'
     << "certified  " << r.certified.size() << '\n'
     << "duplicates " << r.duplicates << '\n'
     << "undecided  " << r.undecided.size() << '\n'
     << "seconds    " << std::fixed << std::setprecision(3) << r.seconds << '\n';
  for (const auto& c : r.certified) {
    os << "\nconjugator " << (c.conjugator.empty() ? "(empty)" : c.conjugator.to_string())
       << (c.seeded ? "  [seed]" : "") << '\n'
       << kernel_text(c.report);
  }
  for (const auto& u : r.undecided) {
    os << "undecided: " << u.conjugator.to_string() << ": " << u.reason << '\n';
  }
  return os.str();
}

}  // namespace burau::report
