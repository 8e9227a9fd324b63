#pragma once

// The Artin action of B_n on the free group F_n = <x_1, ..., x_n>.
//
//   sigma_i    : x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i
//   sigma_i^-1 : x_i -> x_{i+1},              x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
//
// The action is faithful, so a braid is trivial iff it fixes every x_j.
// Generator images of long braids are astronomically long as words, so
// triviality is decided through quotients first (see decide_triviality).

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "braid.hpp"
#include "burau.hpp"
#include "laurent.hpp"

namespace burau {

struct FreeLetter {
  int gen = 1;
  int sign = 1;

  FreeLetter inverse() const noexcept { return {gen, -sign}; }
  friend bool operator==(const FreeLetter&, const FreeLetter&) = default;
};

/// Freely reduced word in x_1..x_n. Every mutation keeps it reduced.
class FreeWord {
 public:
  FreeWord() = default;

  static FreeWord generator(int gen, int sign = 1) {
    FreeWord w;
    w.letters_.push_back({gen, sign});
    return w;
  }

  static FreeWord from_letters(const std::vector<FreeLetter>& letters) {
    FreeWord w;
    for (const auto& l : letters) w.push_back(l);
    return w;
  }

  /// x_1 x_2 ... x_n, the loop parallel to the boundary.
  static FreeWord boundary(int n) {
    FreeWord w;
    for (int i = 1; i <= n; ++i) w.push_back({i, 1});
    return w;
  }

  const std::vector<FreeLetter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  void push_back(FreeLetter l) {
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  FreeWord& operator*=(const FreeWord& other) {
    for (const auto& l : other.letters_) push_back(l);
    return *this;
  }

  friend FreeWord operator*(FreeWord a, const FreeWord& b) {
    a *= b;
    return a;
  }

  FreeWord inverse() const {
    FreeWord w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      w.letters_.push_back(it->inverse());
    }
    return w;
  }

  /// Sum of exponents (the map x_i -> 1).
  int exponent_sum() const {
    int s = 0;
    for (const auto& l : letters_) s += l.sign;
    return s;
  }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

  std::string to_string() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      os << (i ? " " : "") << 'x' << letters_[i].gen;
      if (letters_[i].sign < 0) os << "^-1";
    }
    return os.str();
  }

  static FreeWord parse(std::string_view text) {
    FreeWord w;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
      if (tok == "1") continue;
      if (tok.size() < 2 || tok[0] != 'x') throw ParseError("bad free-group token '" + tok + "'");
      const auto caret = tok.find('^');
      int gen = 0;
      int power = 1;
      try {
        gen = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos
                                                                 : caret - 1));
        if (caret != std::string::npos) power = std::stoi(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw ParseError("bad free-group token '" + tok + "'");
      }
      if (gen < 1 || power == 0) throw ParseError("bad free-group token '" + tok + "'");
      for (int k = 0; k < (power < 0 ? -power : power); ++k) {
        w.push_back({gen, power < 0 ? -1 : 1});
      }
    }
    return w;
  }

 private:
  std::vector<FreeLetter> letters_;
};

/// Removes matching inverse letters from both ends.
inline FreeWord cyclically_reduced(const FreeWord& w) {
  const auto& l = w.letters();
  std::size_t lo = 0;
  std::size_t hi = l.size();
  while (hi - lo >= 2 && l[lo] == l[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return FreeWord::from_letters(std::vector<FreeLetter>(l.begin() + static_cast<long>(lo),
                                                        l.begin() + static_cast<long>(hi)));
}

/// True iff u and v are conjugate in the free group.
inline bool conjugate_equal(const FreeWord& u, const FreeWord& v) {
  const FreeWord a = cyclically_reduced(u);
  const FreeWord b = cyclically_reduced(v);
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const auto& la = a.letters();
  const auto& lb = b.letters();
  const std::size_t n = la.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool match = true;
    for (std::size_t k = 0; k < n && match; ++k) match = la[(k + shift) % n] == lb[k];
    if (match) return true;
  }
  return false;
}

/// Substitutes `images[g-1]` for x_g (and its inverse for x_g^-1).
inline FreeWord substitute(const FreeWord& u, const std::vector<FreeWord>& images) {
  FreeWord out;
  for (const auto& l : u.letters()) {
    const auto& img = images.at(static_cast<std::size_t>(l.gen - 1));
    if (l.sign > 0) {
      out *= img;
    } else {
      out *= img.inverse();
    }
  }
  return out;
}

class WordLengthExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An automorphism of F_n stored by the images of the generators.
class ArtinAutomorphism {
 public:
  static constexpr std::size_t default_length_bound = 4'000'000;

  explicit ArtinAutomorphism(int n, std::size_t length_bound = default_length_bound)
      : n_(n), bound_(length_bound) {
    for (int i = 1; i <= n; ++i) images_.push_back(FreeWord::generator(i));
  }

  /// The automorphism induced by a braid word (left action).
  static ArtinAutomorphism of(const BraidWord& w,
                              std::size_t length_bound = default_length_bound) {
    ArtinAutomorphism a(w.strands(), length_bound);
    for (const auto& l : w.letters()) a.compose_right(l);
    return a;
  }

  int rank() const noexcept { return n_; }
  const std::vector<FreeWord>& images() const noexcept { return images_; }
  const FreeWord& image(int gen) const { return images_.at(static_cast<std::size_t>(gen - 1)); }

  /// this := this o sigma_l
  void compose_right(const Letter& l) {
    if (l.gen < 1 || l.gen > n_ - 1) throw std::out_of_range("Artin: generator index out of range");
    auto& xi = images_[static_cast<std::size_t>(l.gen - 1)];
    auto& xj = images_[static_cast<std::size_t>(l.gen)];
    FreeWord new_i;
    FreeWord new_j;
    if (l.sign > 0) {
      new_i = xi * xj * xi.inverse();
      new_j = xi;
    } else {
      new_i = xj;
      new_j = xj.inverse() * xi * xj;
    }
    xi = std::move(new_i);
    xj = std::move(new_j);
    if (xi.size() > bound_ || xj.size() > bound_) {
      throw WordLengthExceeded("Artin image exceeds length bound " + std::to_string(bound_));
    }
  }

  FreeWord operator()(const FreeWord& u) const { return substitute(u, images_); }

  bool is_identity() const {
    for (int i = 1; i <= n_; ++i) {
      const auto& img = image(i);
      if (img.size() != 1 || !(img.letters()[0] == FreeLetter{i, 1})) return false;
    }
    return true;
  }

  std::size_t max_image_length() const {
    std::size_t m = 0;
    for (const auto& img : images_) m = std::max(m, img.size());
    return m;
  }

 private:
  int n_;
  std::size_t bound_;
  std::vector<FreeWord> images_;
};

inline FreeWord act_generator(int i, int sign, const FreeWord& u, int n) {
  ArtinAutomorphism a(n);
  a.compose_right({i, sign});
  return a(u);
}

inline FreeWord act(const BraidWord& w, const FreeWord& u) {
  return ArtinAutomorphism::of(w)(u);
}

/// 2x2 matrix over Z/p.
struct ModMatrix {
  std::uint64_t a = 1, b = 0, c = 0, d = 1;
  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;
};

inline std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p);
}

inline ModMatrix mul(const ModMatrix& x, const ModMatrix& y, std::uint64_t p) {
  return {(mulmod(x.a, y.a, p) + mulmod(x.b, y.c, p)) % p,
          (mulmod(x.a, y.b, p) + mulmod(x.b, y.d, p)) % p,
          (mulmod(x.c, y.a, p) + mulmod(x.d, y.c, p)) % p,
          (mulmod(x.c, y.b, p) + mulmod(x.d, y.d, p)) % p};
}

/// Inverse of a determinant-one matrix.
inline ModMatrix inv_sl2(const ModMatrix& x, std::uint64_t p) {
  return {x.d, (p - x.b) % p, (p - x.c) % p, x.a};
}

/// The homomorphism F_n -> SL(2, Z/p) given by x_i -> A^i B A^-i with
/// A = [[1,2],[0,1]], B = [[1,0],[2,1]]. Over Z this map is injective.
inline std::vector<ModMatrix> free_generator_images(int n, std::uint64_t p) {
  std::vector<ModMatrix> out;
  const ModMatrix B{1, 0, 2 % p, 1};
  for (int i = 1; i <= n; ++i) {
    const ModMatrix Ai{1, mulmod(2, static_cast<std::uint64_t>(i), p), 0, 1};
    out.push_back(mul(mul(Ai, B, p), inv_sl2(Ai, p), p));
  }
  return out;
}

/// Images h(phi_w(x_j)) for the Artin automorphism phi_w, evaluated without
/// ever expanding phi_w(x_j) as a word.
inline std::vector<ModMatrix> artin_images_mod(const BraidWord& w, std::uint64_t p) {
  std::vector<ModMatrix> g = free_generator_images(w.strands(), p);
  for (const auto& l : w.letters()) {
    auto& gi = g[static_cast<std::size_t>(l.gen - 1)];
    auto& gj = g[static_cast<std::size_t>(l.gen)];
    ModMatrix ni, nj;
    if (l.sign > 0) {
      ni = mul(mul(gi, gj, p), inv_sl2(gi, p), p);
      nj = gi;
    } else {
      ni = gj;
      nj = mul(mul(inv_sl2(gj, p), gi, p), gj, p);
    }
    gi = ni;
    gj = nj;
  }
  return g;
}

inline constexpr std::uint64_t kWitnessPrimes[] = {
    2305843009213693951ULL,  // 2^61 - 1
    1000000007ULL, 998244353ULL, 2147483647ULL};

class ArtinUndecided : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TrivialityVerdict {
  enum class Method { exact, modular };
  bool trivial = true;
  Method method = Method::exact;
  /// First generator x_j with phi(x_j) != x_j (0 when trivial).
  int witness_generator = 0;
  /// Prime of the witnessing quotient (modular method only).
  std::uint64_t witness_prime = 0;
  /// Longest generator image (exact method only).
  std::size_t max_image_length = 0;
};

inline const char* to_string(TrivialityVerdict::Method m) {
  return m == TrivialityVerdict::Method::exact ? "exact" : "modular";
}

/// Decides whether w is the trivial braid through the Artin action.
///
/// A moved generator is first searched for in the SL(2, Z/p) images, which
/// certifies nontriviality at no cost. Otherwise the automorphism is expanded
/// exactly; this throws ArtinUndecided if an image exceeds `length_bound`.
inline TrivialityVerdict decide_triviality(
    const BraidWord& word,
    std::size_t length_bound = ArtinAutomorphism::default_length_bound) {
  const BraidWord w = word.free_reduced();
  TrivialityVerdict v;
  if (w.empty()) return v;
  for (const std::uint64_t p : kWitnessPrimes) {
    const auto moved = artin_images_mod(w, p);
    const auto fixed = free_generator_images(w.strands(), p);
    for (std::size_t j = 0; j < moved.size(); ++j) {
      if (!(moved[j] == fixed[j])) {
        v.trivial = false;
        v.method = TrivialityVerdict::Method::modular;
        v.witness_generator = static_cast<int>(j + 1);
        v.witness_prime = p;
        return v;
      }
    }
  }
  try {
    const auto phi = ArtinAutomorphism::of(w, length_bound);
    v.max_image_length = phi.max_image_length();
    for (int j = 1; j <= phi.rank(); ++j) {
      const auto& img = phi.image(j);
      if (img.size() != 1 || !(img.letters()[0] == FreeLetter{j, 1})) {
        v.trivial = false;
        v.witness_generator = j;
        break;
      }
    }
  } catch (const WordLengthExceeded& e) {
    throw ArtinUndecided(std::string("no quotient witness and ") + e.what());
  }
  return v;
}

inline bool is_trivial_braid(const BraidWord& w) { return decide_triviality(w).trivial; }

/// Fox derivative d(u)/d(x_j) pushed forward along x_i -> t.
inline LaurentPoly fox_derivative(const FreeWord& u, int j) {
  std::vector<LaurentPoly::Term> terms;
  int prefix = 0;
  for (const auto& l : u.letters()) {
    if (l.sign > 0) {
      if (l.gen == j) terms.emplace_back(prefix, 1);
      prefix += 1;
    } else {
      prefix -= 1;
      if (l.gen == j) terms.emplace_back(prefix, -1);
    }
  }
  return LaurentPoly::from_terms(std::move(terms));
}

/// Matrix of Fox derivatives: entry (i, j) = d(phi(x_i))/d(x_j).
inline BurauMatrix fox_matrix(const ArtinAutomorphism& phi) {
  const int n = phi.rank();
  BurauMatrix m(n, Variant::unreduced);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m(i - 1, j - 1) = fox_derivative(phi.image(i), j);
  return m;
}

}  // namespace burau
