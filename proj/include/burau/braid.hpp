#pragma once

// Braid words over B_n and their permutation / exponent-sum images.
//
// Words act on the left: in the product u * v the factor v is applied first.

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "laurent.hpp"

namespace burau {

/// sigma_gen^sign
struct Letter {
  int gen = 1;
  int sign = 1;

  Letter inverse() const noexcept { return {gen, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n) {
    Permutation p;
    p.images_.resize(static_cast<std::size_t>(n));
    std::iota(p.images_.begin(), p.images_.end(), 1);
    return p;
  }

  /// Transposition (i i+1) on {1..n}.
  static Permutation adjacent_swap(int n, int i) {
    Permutation p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(i - 1)],
              p.images_[static_cast<std::size_t>(i)]);
    return p;
  }

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("Permutation: not a bijection on 1..n");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const {
    for (int i = 1; i <= size(); ++i) {
      if ((*this)(i) != i) return false;
    }
    return true;
  }

  /// (a * b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Permutation size mismatch");
    Permutation p;
    p.images_.resize(a.images_.size());
    for (int i = 1; i <= a.size(); ++i) {
      p.images_[static_cast<std::size_t>(i - 1)] = a(b(i));
    }
    return p;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      os << (i ? " " : "") << images_[i];
    }
    os << "]";
    return os.str();
  }

 private:
  std::vector<int> images_;
};

class BraidWord {
 public:
  BraidWord() = default;

  explicit BraidWord(int strands, std::vector<Letter> letters = {})
      : n_(strands), letters_(std::move(letters)) {
    if (n_ < 2) throw std::invalid_argument("BraidWord: strand count must be >= 2");
    for (const auto& l : letters_) check_letter(l);
  }

  static BraidWord generator(int strands, int gen, int sign = 1) {
    return BraidWord(strands, {Letter{gen, sign}});
  }

  int strands() const noexcept { return n_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  void push_back(Letter l) {
    check_letter(l);
    letters_.push_back(l);
  }

  void pop_back() { letters_.pop_back(); }

  BraidWord inverse() const {
    BraidWord w(n_);
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      w.letters_.push_back(it->inverse());
    }
    return w;
  }

  /// Cancels adjacent sigma_i sigma_i^-1 pairs until none remain.
  BraidWord free_reduced() const {
    BraidWord w(n_);
    w.letters_.reserve(letters_.size());
    for (const auto& l : letters_) {
      if (!w.letters_.empty() && w.letters_.back() == l.inverse()) {
        w.letters_.pop_back();
      } else {
        w.letters_.push_back(l);
      }
    }
    return w;
  }

  BraidWord power(int k) const {
    const BraidWord base = k < 0 ? inverse() : *this;
    BraidWord w(n_);
    for (int i = 0; i < (k < 0 ? -k : k); ++i) {
      w.letters_.insert(w.letters_.end(), base.letters_.begin(), base.letters_.end());
    }
    return w;
  }

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("BraidWord: strand count mismatch");
    BraidWord w = a;
    w.letters_.insert(w.letters_.end(), b.letters_.begin(), b.letters_.end());
    return w;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  int exponent_sum() const {
    int s = 0;
    for (const auto& l : letters_) s += l.sign;
    return s;
  }

  /// Induced permutation of puncture positions; sigma_i swaps i and i+1.
  Permutation permutation() const {
    Permutation p = Permutation::identity(n_);
    for (const auto& l : letters_) p = p * Permutation::adjacent_swap(n_, l.gen);
    return p;
  }

  /// Emits the `s<i>^<k>` form, merging runs of equal letters.
  std::string to_string() const {
    if (letters_.empty()) return "";
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < letters_.size()) {
      std::size_t j = i;
      while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
      const int k = static_cast<int>(j - i) * letters_[i].sign;
      os << (first ? "" : " ") << 's' << letters_[i].gen;
      if (k != 1) os << '^' << k;
      first = false;
      i = j;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const BraidWord& w) {
    return os << w.to_string();
  }

 private:
  int n_ = 2;
  std::vector<Letter> letters_;

  void check_letter(const Letter& l) const {
    if (l.gen < 1 || l.gen > n_ - 1) {
      throw std::out_of_range("generator index " + std::to_string(l.gen) +
                              " outside 1.." + std::to_string(n_ - 1));
    }
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +-1");
  }
};

/// a^-1 b^-1 a b, freely reduced.
inline BraidWord commutator(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw std::invalid_argument("commutator: strand count mismatch");
  }
  return (a.inverse() * b.inverse() * a * b).free_reduced();
}

/// Parses whitespace-separated `s<i>` / `s<i>^<k>` tokens, or the signed
/// integer list form (`-3 2 1 1`), expanding powers into single letters.
inline BraidWord parse_word(std::string_view text, int n) {
  BraidWord w(n);
  std::istringstream in{std::string(text)};
  std::string tok;
  auto parse_int = [](const std::string& s, const std::string& whole) {
    if (s.empty()) throw ParseError("malformed token '" + whole + "'");
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
      throw ParseError("malformed token '" + whole + "'");
    }
    if (pos != s.size()) throw ParseError("malformed token '" + whole + "'");
    return v;
  };
  while (in >> tok) {
    int gen = 0;
    int power = 1;
    if (tok[0] == 's' || tok[0] == 'S') {
      const auto caret = tok.find('^');
      gen = parse_int(tok.substr(1, caret == std::string::npos ? std::string::npos
                                                                : caret - 1),
                      tok);
      if (caret != std::string::npos) power = parse_int(tok.substr(caret + 1), tok);
      if (power == 0) throw ParseError("zero power in token '" + tok + "'");
      if (gen < 1) throw ParseError("malformed token '" + tok + "'");
    } else {
      const int v = parse_int(tok, tok);
      if (v == 0) throw ParseError("zero is not a generator");
      gen = v < 0 ? -v : v;
      power = v < 0 ? -1 : 1;
    }
    if (gen > n - 1) {
      throw std::out_of_range("generator index " + std::to_string(gen) +
                              " outside 1.." + std::to_string(n - 1));
    }
    const int sign = power < 0 ? -1 : 1;
    for (int k = 0; k < (power < 0 ? -power : power); ++k) w.push_back({gen, sign});
  }
  return w;
}

}  // namespace burau
