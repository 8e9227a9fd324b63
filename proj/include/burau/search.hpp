#pragma once

// Enumerative search for Burau-kernel commutators.
//
// A conjugator psi yields the twist tau = psi^-1 core_a psi; the candidate
// is the commutator [tau, core_b]. The commute filter keeps psi when the
// reduced Burau images of tau and core_b commute, which is exactly the
// condition for the candidate to be Burau-trivial.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "artin.hpp"
#include "burau.hpp"
#include "disc.hpp"
#include "kernel.hpp"

namespace burau {

enum class Filter { commute, pairing, none };

inline const char* to_string(Filter f) {
  switch (f) {
    case Filter::commute: return "commute";
    case Filter::pairing: return "pairing";
    case Filter::none: return "none";
  }
  return "?";
}

inline Filter parse_filter(std::string_view s) {
  if (s == "commute") return Filter::commute;
  if (s == "pairing") return Filter::pairing;
  if (s == "none") return Filter::none;
  throw ParseError("unknown filter '" + std::string(s) + "' (commute | pairing | none)");
}

// ---------------------------------------------------------------------------
// Enumeration.

/// Letter alphabet order: s1, s1^-1, s2, s2^-1, ...
inline Letter alphabet_letter(int k) { return {k / 2 + 1, (k % 2) ? -1 : 1}; }
inline int alphabet_size(int n) { return 2 * (n - 1); }

/// Whether `next` may follow `prev` in an enumerated word.
inline bool may_follow(const Letter& prev, const Letter& next, bool prune_commuting) {
  if (next == prev.inverse()) return false;
  if (prune_commuting && std::abs(prev.gen - next.gen) >= 2 && prev.gen > next.gen) return false;
  return true;
}

/// Depth-first preorder over freely reduced words of length <= maxlen that
/// extend `prefix`. The visitor returns false to skip a subtree.
inline void for_each_conjugator(int n, int maxlen, bool prune_commuting, const BraidWord& prefix,
                                const std::function<bool(const BraidWord&)>& visit) {
  BraidWord w = prefix;
  std::function<void()> rec = [&] {
    if (!visit(w)) return;
    if (static_cast<int>(w.size()) >= maxlen) return;
    for (int k = 0; k < alphabet_size(n); ++k) {
      const Letter l = alphabet_letter(k);
      if (!w.empty() && !may_follow(w.letters().back(), l, prune_commuting)) continue;
      BraidWord next(n, w.letters());
      next.push_back(l);
      std::swap(w, next);
      rec();
      std::swap(w, next);
    }
  };
  rec();
}

inline std::vector<BraidWord> enumerate_conjugators(int n, int maxlen,
                                                    bool prune_commuting = false) {
  std::vector<BraidWord> out;
  for_each_conjugator(n, maxlen, prune_commuting, BraidWord(n), [&](const BraidWord& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Pairing functional.

/// Pairing of psi(E_i), with E_i the straight arc q_i -> q_{i+1}, against the
/// straight arc p0 -> q_j, read from the unreduced Burau matrix of psi.
/// Empty when q_j is an endpoint of psi(E_i).
inline std::optional<LaurentPoly> pairing_functional_entry(const BurauMatrix& unreduced,
                                                           const Permutation& perm, int i,
                                                           int j) {
  if (j == perm(i) || j == perm(i + 1)) return std::nullopt;
  const LaurentPoly diff = unreduced(j - 1, i - 1) - unreduced(j - 1, i);
  return diff.divided_by(LaurentPoly::one() - LaurentPoly::t());
}

struct CalibrationEntry {
  std::string word;
  int j = 0;
  LaurentPoly geometric;
  LaurentPoly algebraic;
  bool agree = false;
};

struct CalibrationReport {
  bool ok = true;
  std::vector<CalibrationEntry> entries;
};

/// Compares the functional with the geometric pairing on hand-drawn images of
/// E_1 in the standard 4-punctured disc. In these drawings s_i moves its left
/// puncture below the right one.
inline CalibrationReport run_pairing_calibration() {
  struct Case {
    const char* word;
    const char* vertices;
  };
  static constexpr Case cases[] = {
      {"s2", "3/2 -1/2\n5/2 -1/2\n"},
      {"s2^-1", "3/2 1/2\n5/2 1/2\n"},
      {"s3 s2", "3/2 -1/2\n7/2 -1/2\n"},
      {"s3^-1 s2", "3/2 -1/2\n5/2 -1/2\n5/2 1/2\n7/2 1/2\n"},
      {"s2^2", "3/2 -1/2\n7/2 -1/2\n7/2 1/2\n7/4 1/2\n"},
      {"s1", "1/2 1/2\n"},
  };
  constexpr int n = 4;
  CalibrationReport report;
  for (const auto& c : cases) {
    const BraidWord w = parse_word(c.word, n);
    const Permutation p = w.permutation();
    const std::string text = "disc n=4\narc image from q" + std::to_string(p(1)) + " to q" +
                             std::to_string(p(2)) + "\n" + c.vertices;
    const ArcFixture fx = parse_arcs(text);
    const BurauMatrix m = burau_image(w, Variant::unreduced);
    for (int j = 1; j <= n; ++j) {
      const auto alg = pairing_functional_entry(m, p, 1, j);
      if (!alg) continue;
      const PolylineArc noodle{"noodle", EndpointTag::basepoint(), EndpointTag::puncture(j), {}};
      CalibrationEntry e;
      e.word = c.word;
      e.j = j;
      e.geometric = pairing(fx.model, fx.arcs.front(), noodle).value;
      e.algebraic = *alg;
      e.agree = unit_equivalent(e.geometric, e.algebraic);
      report.ok = report.ok && e.agree;
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

inline const CalibrationReport& pairing_calibration() {
  static const CalibrationReport report = run_pairing_calibration();
  return report;
}

class UncalibratedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Pairing of psi(E_i) against the straight arc p0 -> q_j. Throws
/// UncalibratedError if the calibration fixtures disagree, and
/// std::domain_error when q_j is an endpoint of psi(E_i).
inline LaurentPoly pairing_functional(const BraidWord& psi, int j, int i = 1) {
  if (!pairing_calibration().ok) {
    throw UncalibratedError("pairing functional failed calibration against geometric fixtures");
  }
  const int n = psi.strands();
  if (i < 1 || i > n - 1 || j < 1 || j > n) {
    throw std::out_of_range("pairing_functional: index out of range");
  }
  const auto v = pairing_functional_entry(burau_image(psi, Variant::unreduced),
                                          psi.permutation(), i, j);
  if (!v) throw std::domain_error("pairing_functional: q_j is an endpoint of the moved arc");
  return *v;
}

// ---------------------------------------------------------------------------
// Search.

/// Conjugator psi with [psi^-1 s1 psi, boundary_twist_word(5)] conjugate to
/// the built-in five-strand element: psi = d^-3 psi1 psi2^-1 with
/// d = s1 s2 s3 s4, since d^3 s1 d^-3 = s4.
inline BraidWord search_seed_for_paper_element() {
  const BraidWord d = parse_word("s1 s2 s3 s4", 5);
  return (d.power(-3) * parse_word(fixtures::kPsi1Strand5, 5) *
          parse_word(fixtures::kPsi2Strand5, 5).inverse())
      .free_reduced();
}

struct SearchConfig {
  int n = 4;
  int max_conjugator_length = 4;
  /// Empty means the defaults: s1 and boundary_twist_word(n).
  std::optional<BraidWord> core_a;
  std::optional<BraidWord> core_b;
  Filter filter = Filter::commute;
  int jobs = 1;
  bool prune_commuting = false;
  /// Extra conjugators examined after the enumeration.
  std::vector<BraidWord> seeds;
  std::string checkpoint_path;
  std::size_t artin_length_bound = ArtinAutomorphism::default_length_bound;
  std::function<void(std::size_t done, std::size_t total)> progress;

  BraidWord resolved_core_a() const { return core_a.value_or(BraidWord::generator(n, 1)); }
  BraidWord resolved_core_b() const { return core_b.value_or(boundary_twist_word(n)); }
  bool default_cores() const {
    return resolved_core_a() == BraidWord::generator(n, 1) &&
           resolved_core_b() == boundary_twist_word(n);
  }
};

struct CertifiedElement {
  BraidWord conjugator;
  bool seeded = false;
  KernelReport report;
};

struct UndecidedCandidate {
  BraidWord conjugator;
  std::string reason;
};

struct SearchResult {
  std::size_t examined = 0;
  std::size_t survivors = 0;
  std::size_t trivial_words = 0;
  std::size_t duplicates = 0;
  std::vector<CertifiedElement> certified;
  std::vector<UndecidedCandidate> undecided;
  Filter filter_used = Filter::commute;
  bool pairing_calibrated = false;
  std::size_t tasks = 0;
  std::size_t resumed_tasks = 0;
  double seconds = 0;
};

namespace detail {

struct Task {
  BraidWord prefix;
  bool subtree = false;
  bool seed = false;
};

struct TaskOutcome {
  std::size_t examined = 0;
  std::size_t survivors = 0;
  std::size_t trivial_words = 0;
  /// Conjugators whose commutator was certified, in enumeration order.
  std::vector<BraidWord> certified;
  std::vector<UndecidedCandidate> undecided;
};

/// Prefix partition in preorder: nodes shallower than `depth` are single-word
/// tasks, nodes at `depth` own their subtree.
inline std::vector<Task> make_tasks(const SearchConfig& cfg) {
  const int depth = std::min(2, cfg.max_conjugator_length);
  std::vector<Task> tasks;
  for_each_conjugator(cfg.n, depth, cfg.prune_commuting, BraidWord(cfg.n),
                      [&](const BraidWord& w) {
                        tasks.push_back({w, static_cast<int>(w.size()) == depth, false});
                        return true;
                      });
  for (const auto& s : cfg.seeds) tasks.push_back({s, false, true});
  return tasks;
}

class Evaluator {
 public:
  explicit Evaluator(const SearchConfig& cfg)
      : cfg_(cfg),
        table_(cfg.n, Variant::reduced),
        core_a_(cfg.resolved_core_a()),
        core_b_(cfg.resolved_core_b()),
        a_(burau_image(core_a_, table_)),
        b_(burau_image(core_b_, table_)) {}

  /// Filter decision with known reduced images of psi and psi^-1.
  bool keep(const BraidWord& psi, const BurauMatrix& m, const BurauMatrix& minv) const {
    switch (cfg_.filter) {
      case Filter::none: return true;
      case Filter::commute: return matrices_commute(minv * a_ * m, b_);
      case Filter::pairing: {
        // the twist psi^-1 s1 psi is about psi^-1(E_1)
        const BraidWord inv = psi.inverse();
        const auto v = pairing_functional_entry(burau_image(inv, Variant::unreduced),
                                                inv.permutation(), 1, cfg_.n);
        return v && v->is_zero();
      }
    }
    return false;
  }

  void evaluate(const BraidWord& psi, TaskOutcome& out) const {
    const BraidWord cand = commutator(conjugated_twist({psi, core_a_}), core_b_);
    if (cand.empty()) {
      ++out.trivial_words;
      return;
    }
    try {
      if (!burau_image(cand, table_).is_identity()) return;
      const auto verdict = decide_triviality(cand, cfg_.artin_length_bound);
      if (!verdict.trivial) out.certified.push_back(psi);
    } catch (const ArtinUndecided& e) {
      out.undecided.push_back({psi, e.what()});
    }
  }

  TaskOutcome run(const Task& task) const {
    TaskOutcome out;
    if (!task.subtree) {
      const BurauMatrix m = burau_image(task.prefix, table_);
      const BurauMatrix minv = burau_image(task.prefix.inverse(), table_);
      ++out.examined;
      if (keep(task.prefix, m, minv)) {
        ++out.survivors;
        evaluate(task.prefix, out);
      }
      return out;
    }
    // incremental images of psi and psi^-1 along the DFS stack
    std::vector<BurauMatrix> ms{burau_image(task.prefix, table_)};
    std::vector<BurauMatrix> minvs{burau_image(task.prefix.inverse(), table_)};
    BraidWord w = task.prefix;
    std::function<void()> rec = [&] {
      ++out.examined;
      if (keep(w, ms.back(), minvs.back())) {
        ++out.survivors;
        evaluate(w, out);
      }
      if (static_cast<int>(w.size()) >= cfg_.max_conjugator_length) return;
      for (int k = 0; k < alphabet_size(cfg_.n); ++k) {
        const Letter l = alphabet_letter(k);
        if (!w.empty() && !may_follow(w.letters().back(), l, cfg_.prune_commuting)) continue;
        w.push_back(l);
        ms.push_back(ms.back() * table_(l));
        minvs.push_back(table_(l.inverse()) * minvs.back());
        rec();
        ms.pop_back();
        minvs.pop_back();
        w.pop_back();
      }
    };
    rec();
    return out;
  }

 private:
  const SearchConfig& cfg_;
  GeneratorTable table_;
  BraidWord core_a_;
  BraidWord core_b_;
  BurauMatrix a_;
  BurauMatrix b_;
};

inline nlohmann::json config_fingerprint(const SearchConfig& cfg, Filter used) {
  nlohmann::json seeds = nlohmann::json::array();
  for (const auto& s : cfg.seeds) seeds.push_back(s.to_string());
  return {{"n", cfg.n},
          {"max_conjugator_length", cfg.max_conjugator_length},
          {"core_a", cfg.resolved_core_a().to_string()},
          {"core_b", cfg.resolved_core_b().to_string()},
          {"filter", to_string(used)},
          {"prune_commuting", cfg.prune_commuting},
          {"seeds", seeds}};
}

inline nlohmann::json outcome_to_json(const TaskOutcome& o) {
  nlohmann::json certified = nlohmann::json::array();
  for (const auto& w : o.certified) certified.push_back(w.to_string());
  nlohmann::json undecided = nlohmann::json::array();
  for (const auto& u : o.undecided) {
    undecided.push_back({{"conjugator", u.conjugator.to_string()}, {"reason", u.reason}});
  }
  return {{"examined", o.examined},       {"survivors", o.survivors},
          {"trivial_words", o.trivial_words}, {"certified", certified},
          {"undecided", undecided}};
}

inline TaskOutcome outcome_from_json(const nlohmann::json& j, int n) {
  TaskOutcome o;
  o.examined = j.at("examined").get<std::size_t>();
  o.survivors = j.at("survivors").get<std::size_t>();
  o.trivial_words = j.at("trivial_words").get<std::size_t>();
  for (const auto& w : j.at("certified")) o.certified.push_back(parse_word(w.get<std::string>(), n));
  for (const auto& u : j.at("undecided")) {
    o.undecided.push_back(
        {parse_word(u.at("conjugator").get<std::string>(), n), u.at("reason").get<std::string>()});
  }
  return o;
}

/// Writes the completed tasks atomically (temporary file, then rename).
inline void write_checkpoint(const std::string& path, const nlohmann::json& fingerprint,
                             const std::vector<std::optional<TaskOutcome>>& outcomes) {
  nlohmann::json done = nlohmann::json::object();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i]) done[std::to_string(i)] = outcome_to_json(*outcomes[i]);
  }
  const nlohmann::json doc{{"config", fingerprint}, {"completed", done}};
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write checkpoint '" + tmp + "'");
    out << doc.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace detail

/// Runs the search. Output is identical for any `jobs` value.
inline SearchResult run_search(const SearchConfig& cfg) {
  if (cfg.max_conjugator_length < 0) {
    throw std::invalid_argument("max_conjugator_length must be non-negative");
  }
  if (cfg.n < 3) throw std::invalid_argument("search needs n >= 3");
  const auto start = std::chrono::steady_clock::now();
  SearchResult result;
  result.pairing_calibrated = pairing_calibration().ok;
  result.filter_used = cfg.filter;
  if (cfg.filter == Filter::pairing && (!result.pairing_calibrated || !cfg.default_cores())) {
    result.filter_used = Filter::commute;
  }
  SearchConfig effective = cfg;
  effective.filter = result.filter_used;

  const auto tasks = detail::make_tasks(effective);
  result.tasks = tasks.size();
  std::vector<std::optional<detail::TaskOutcome>> outcomes(tasks.size());
  const auto fingerprint = detail::config_fingerprint(effective, result.filter_used);

  if (!cfg.checkpoint_path.empty() && std::filesystem::exists(cfg.checkpoint_path)) {
    std::ifstream in(cfg.checkpoint_path);
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("unreadable checkpoint '" + cfg.checkpoint_path + "': " + e.what());
    }
    if (doc.at("config") != fingerprint) {
      throw std::runtime_error("checkpoint '" + cfg.checkpoint_path +
                               "' was written for a different configuration");
    }
    for (const auto& [key, value] : doc.at("completed").items()) {
      const std::size_t idx = std::stoul(key);
      if (idx >= outcomes.size()) throw std::runtime_error("checkpoint task index out of range");
      outcomes[idx] = detail::outcome_from_json(value, cfg.n);
      ++result.resumed_tasks;
    }
  }

  const detail::Evaluator evaluator(effective);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> finished{result.resumed_tasks};
  std::mutex sink;
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= tasks.size()) return;
      if (outcomes[idx]) continue;
      try {
        auto out = evaluator.run(tasks[idx]);
        std::lock_guard<std::mutex> lock(sink);
        outcomes[idx] = std::move(out);
        const std::size_t done = ++finished;
        if (!cfg.checkpoint_path.empty()) {
          detail::write_checkpoint(cfg.checkpoint_path, fingerprint, outcomes);
        }
        if (cfg.progress) cfg.progress(done, tasks.size());
      } catch (...) {
        std::lock_guard<std::mutex> lock(sink);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
        return;
      }
    }
  };
  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  // merge in enumeration order, then drop repeats of the same twist
  std::vector<FreeWord> seen_boundaries;
  std::vector<BraidWord> seen_words;
  const bool by_boundary = effective.resolved_core_a() == BraidWord::generator(cfg.n, 1);
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& o = *outcomes[i];
    result.examined += o.examined;
    result.survivors += o.survivors;
    result.trivial_words += o.trivial_words;
    for (const auto& u : o.undecided) result.undecided.push_back(u);
    for (const auto& psi : o.certified) {
      const BraidWord word = commutator(conjugated_twist({psi, effective.resolved_core_a()}),
                                        effective.resolved_core_b());
      bool duplicate = false;
      if (by_boundary) {
        const FreeWord boundary = act(psi.inverse(), FreeWord::boundary(2));
        for (const auto& b : seen_boundaries) duplicate = duplicate || conjugate_equal(b, boundary);
        if (!duplicate) seen_boundaries.push_back(boundary);
      } else {
        for (const auto& s : seen_words) duplicate = duplicate || s == word;
        if (!duplicate) seen_words.push_back(word);
      }
      if (duplicate) {
        ++result.duplicates;
        continue;
      }
      result.certified.push_back({psi, tasks[i].seed, verify_kernel(word)});
    }
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace burau
