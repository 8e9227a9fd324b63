#pragma once

// Twist words, commutator candidates and kernel certification.

#include <string>
#include <utility>
#include <vector>

#include "artin.hpp"
#include "braid.hpp"
#include "burau.hpp"
#include "fixtures.hpp"

namespace burau {

/// The twist conjugator^-1 * core * conjugator.
struct TwistSpec {
  BraidWord conjugator;
  BraidWord core;
};

inline BraidWord conjugated_twist(const TwistSpec& spec) {
  if (spec.conjugator.strands() != spec.core.strands()) {
    throw std::invalid_argument("conjugated_twist: strand count mismatch");
  }
  return (spec.conjugator.inverse() * spec.core * spec.conjugator).free_reduced();
}

/// s_{n-1} ... s_2 s_1^2 s_2 ... s_{n-1}
inline BraidWord boundary_twist_word(int n) {
  if (n < 3) throw std::invalid_argument("boundary_twist_word: n must be at least 3");
  BraidWord w(n);
  for (int i = n - 1; i >= 1; --i) w.push_back({i, 1});
  for (int i = 1; i <= n - 1; ++i) w.push_back({i, 1});
  return w;
}

/// The two twist words whose commutator is the built-in kernel element.
struct TwistPair {
  BraidWord a;
  BraidWord b;
};

/// Conjugators and cores of the built-in constructions (n = 5 or 6).
inline std::pair<TwistSpec, TwistSpec> paper_twist_specs(int n) {
  if (n == 5) {
    return {{parse_word(fixtures::kPsi1Strand5, 5), BraidWord::generator(5, 4)},
            {parse_word(fixtures::kPsi2Strand5, 5), boundary_twist_word(5)}};
  }
  if (n == 6) {
    return {{parse_word(fixtures::kPsi1Strand6, 6), BraidWord::generator(6, 3)},
            {parse_word(fixtures::kPsi2Strand6, 6), BraidWord::generator(6, 3)}};
  }
  throw std::invalid_argument("built-in kernel elements exist for n = 5 and n = 6 only");
}

inline TwistPair paper_twists(int n) {
  const auto [a, b] = paper_twist_specs(n);
  return {conjugated_twist(a), conjugated_twist(b)};
}

inline BraidWord paper_kernel_element(int n) {
  const auto tw = paper_twists(n);
  return commutator(tw.a, tw.b);
}

/// Letter count of a^-1 b^-1 a b without any cancellation.
inline std::size_t paper_kernel_naive_length(int n) {
  const auto [a, b] = paper_twist_specs(n);
  auto raw = [](const TwistSpec& t) { return 2 * t.conjugator.size() + t.core.size(); };
  return 2 * (raw(a) + raw(b));
}

struct KernelReport {
  BraidWord word;
  std::size_t letter_count = 0;
  bool burau_trivial = false;
  bool artin_trivial = false;
  Permutation permutation;
  int exponent_sum = 0;
  TrivialityVerdict artin;

  bool certified() const noexcept { return burau_trivial && !artin_trivial; }
};

inline KernelReport verify_kernel(
    const BraidWord& w, std::size_t artin_length_bound = ArtinAutomorphism::default_length_bound) {
  KernelReport r;
  r.word = w;
  r.letter_count = w.size();
  r.burau_trivial = burau_image(w, Variant::reduced).is_identity();
  r.artin = decide_triviality(w, artin_length_bound);
  r.artin_trivial = r.artin.trivial;
  r.permutation = w.permutation();
  r.exponent_sum = w.exponent_sum();
  return r;
}

inline bool matrices_commute(const BurauMatrix& a, const BurauMatrix& b) {
  return a * b == b * a;
}

inline bool commuting_check(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("commuting_check: strand mismatch");
  const GeneratorTable table(a.strands(), Variant::reduced);
  return matrices_commute(burau_image(a, table), burau_image(b, table));
}

}  // namespace burau
