#pragma once

// Unreduced and reduced Burau representations over Z[t, t^-1].
//
// Unreduced convention (images of basis vectors, column form):
//   sigma_i : v_i     -> (1 - t) v_i + t v_{i+1}
//             v_{i+1} -> v_i
// The reduced representation is the restriction to the invariant submodule
// spanned by u_j = v_j - v_{j+1}, j = 1..n-1.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "braid.hpp"
#include "laurent.hpp"

namespace burau {

enum class Variant { unreduced, reduced };

inline const char* to_string(Variant v) {
  return v == Variant::reduced ? "reduced" : "unreduced";
}

/// Product order of generator matrices. Only `left_action` is used outside
/// of debugging.
enum class ProductOrder { left_action, reversed };

class BurauMatrix {
 public:
  BurauMatrix() = default;

  BurauMatrix(int size, Variant variant)
      : size_(size), variant_(variant),
        entries_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {}

  static BurauMatrix identity(int size, Variant variant) {
    BurauMatrix m(size, variant);
    for (int i = 0; i < size; ++i) m(i, i) = LaurentPoly::one();
    return m;
  }

  int size() const noexcept { return size_; }
  Variant variant() const noexcept { return variant_; }

  /// Zero-based entry access.
  LaurentPoly& operator()(int row, int col) {
    return entries_[static_cast<std::size_t>(row * size_ + col)];
  }
  const LaurentPoly& operator()(int row, int col) const {
    return entries_[static_cast<std::size_t>(row * size_ + col)];
  }

  friend BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b) {
    if (a.size_ != b.size_) throw std::invalid_argument("BurauMatrix size mismatch");
    BurauMatrix m(a.size_, a.variant_);
    for (int i = 0; i < a.size_; ++i) {
      for (int k = 0; k < a.size_; ++k) {
        const LaurentPoly& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < a.size_; ++j) {
          const LaurentPoly& bkj = b(k, j);
          if (!bkj.is_zero()) m(i, j) += aik * bkj;
        }
      }
    }
    return m;
  }

  friend bool operator==(const BurauMatrix& a, const BurauMatrix& b) {
    return a.size_ == b.size_ && a.entries_ == b.entries_;
  }

  BurauMatrix transposed() const {
    BurauMatrix m(size_, variant_);
    for (int i = 0; i < size_; ++i)
      for (int j = 0; j < size_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  BurauMatrix scaled(const LaurentPoly& c) const {
    BurauMatrix m = *this;
    for (auto& e : m.entries_) e = e * c;
    return m;
  }

  bool is_identity() const {
    for (int i = 0; i < size_; ++i) {
      for (int j = 0; j < size_; ++j) {
        const LaurentPoly& e = (*this)(i, j);
        if (i == j ? !e.is_one() : !e.is_zero()) return false;
      }
    }
    return true;
  }

  /// Fraction-free determinant by expansion over column subsets.
  LaurentPoly determinant() const {
    const std::size_t full = (std::size_t{1} << size_) - 1;
    std::vector<LaurentPoly> dp(full + 1);
    std::vector<bool> reached(full + 1, false);
    dp[0] = LaurentPoly::one();
    reached[0] = true;
    for (std::size_t mask = 0; mask < full; ++mask) {
      if (!reached[mask] || dp[mask].is_zero()) continue;
      const int row = __builtin_popcountll(mask);
      for (int c = 0; c < size_; ++c) {
        if (mask & (std::size_t{1} << c)) continue;
        const LaurentPoly& e = (*this)(row, c);
        if (e.is_zero()) continue;
        const int above = __builtin_popcountll(mask >> (c + 1));
        LaurentPoly term = dp[mask] * e;
        if (above % 2) term = -term;
        const std::size_t next = mask | (std::size_t{1} << c);
        dp[next] += term;
        reached[next] = true;
      }
    }
    return dp[full];
  }

  /// Entry-wise evaluation at t = 1.
  std::vector<std::vector<BigInt>> specialize_t1() const {
    std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(size_),
                                       std::vector<BigInt>(static_cast<std::size_t>(size_)));
    for (int i = 0; i < size_; ++i)
      for (int j = 0; j < size_; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (*this)(i, j).at_one();
    return m;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (int i = 0; i < size_; ++i) {
      for (int j = 0; j < size_; ++j) {
        os << (j ? " | " : "") << (*this)(i, j).to_string();
      }
      os << '\n';
    }
    return os.str();
  }

 private:
  int size_ = 0;
  Variant variant_ = Variant::reduced;
  std::vector<LaurentPoly> entries_;
};

/// Restriction of an unreduced matrix to span{v_j - v_{j+1}}.
inline BurauMatrix reduce(const BurauMatrix& unreduced) {
  const int n = unreduced.size();
  BurauMatrix r(n - 1, Variant::reduced);
  for (int j = 0; j < n - 1; ++j) {
    // coordinates of U u_j in the v basis
    LaurentPoly running;
    for (int k = 0; k < n; ++k) {
      running += unreduced(k, j) - unreduced(k, j + 1);
      if (k < n - 1) {
        r(k, j) = running;
      } else if (!running.is_zero()) {
        throw std::logic_error("reduce: submodule is not invariant");
      }
    }
  }
  return r;
}

inline BurauMatrix generator_matrix(int i, int sign, int n, Variant variant) {
  if (n < 2 || i < 1 || i > n - 1) {
    throw std::out_of_range("generator_matrix: index " + std::to_string(i) +
                            " outside 1.." + std::to_string(n - 1));
  }
  BurauMatrix u = BurauMatrix::identity(n, Variant::unreduced);
  const int a = i - 1;
  const int b = i;
  if (sign > 0) {
    u(a, a) = LaurentPoly::one() - LaurentPoly::t();
    u(a, b) = LaurentPoly::one();
    u(b, a) = LaurentPoly::t();
    u(b, b) = LaurentPoly();
  } else {
    // inverse of [[1-t, 1], [t, 0]]
    u(a, a) = LaurentPoly();
    u(a, b) = LaurentPoly::t(-1);
    u(b, a) = LaurentPoly::one();
    u(b, b) = LaurentPoly::one() - LaurentPoly::t(-1);
  }
  return variant == Variant::unreduced ? u : reduce(u);
}

/// Precomputed generator matrices for one (n, variant).
class GeneratorTable {
 public:
  GeneratorTable(int n, Variant variant) : n_(n), variant_(variant) {
    for (int i = 1; i < n; ++i) {
      positive_.push_back(generator_matrix(i, 1, n, variant));
      negative_.push_back(generator_matrix(i, -1, n, variant));
    }
  }
  const BurauMatrix& operator()(const Letter& l) const {
    const auto idx = static_cast<std::size_t>(l.gen - 1);
    return l.sign > 0 ? positive_.at(idx) : negative_.at(idx);
  }
  int strands() const noexcept { return n_; }
  Variant variant() const noexcept { return variant_; }
  int matrix_size() const noexcept {
    return variant_ == Variant::reduced ? n_ - 1 : n_;
  }

 private:
  int n_;
  Variant variant_;
  std::vector<BurauMatrix> positive_;
  std::vector<BurauMatrix> negative_;
};

inline BurauMatrix burau_image(const BraidWord& w, const GeneratorTable& table,
                         ProductOrder order = ProductOrder::left_action) {
  BurauMatrix m = BurauMatrix::identity(table.matrix_size(), table.variant());
  if (order == ProductOrder::left_action) {
    for (const auto& l : w.letters()) m = m * table(l);
  } else {
    for (const auto& l : w.letters()) m = table(l) * m;
  }
  return m;
}

inline BurauMatrix burau_image(const BraidWord& w, Variant variant,
                         ProductOrder order = ProductOrder::left_action) {
  return burau_image(w, GeneratorTable(w.strands(), variant), order);
}

inline bool is_identity(const BurauMatrix& m) { return m.is_identity(); }

inline std::vector<std::vector<BigInt>> specialize_t1(const BurauMatrix& m) {
  return m.specialize_t1();
}

/// Column convention: column j has its 1 in row p(j).
inline std::vector<std::vector<BigInt>> permutation_matrix(const Permutation& p) {
  const auto n = static_cast<std::size_t>(p.size());
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (int j = 1; j <= p.size(); ++j) {
    m[static_cast<std::size_t>(p(j) - 1)][static_cast<std::size_t>(j - 1)] = 1;
  }
  return m;
}

}  // namespace burau
