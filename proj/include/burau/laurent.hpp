#pragma once

// Exact arithmetic in Z[t, t^-1] with arbitrary-precision coefficients.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace burau {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct UnitNormal;

/// A Laurent polynomial sum c_k t^k, stored as (exponent, coefficient)
/// pairs sorted by ascending exponent with no zero coefficients.
class LaurentPoly {
 public:
  using Term = std::pair<int, BigInt>;

  LaurentPoly() = default;

  explicit LaurentPoly(BigInt constant) {
    if (constant != 0) terms_.emplace_back(0, std::move(constant));
  }

  static LaurentPoly monomial(BigInt coefficient, int exponent) {
    LaurentPoly p;
    if (coefficient != 0) p.terms_.emplace_back(exponent, std::move(coefficient));
    return p;
  }

  /// t^k
  static LaurentPoly t(int k = 1) { return monomial(1, k); }

  static LaurentPoly one() { return monomial(1, 0); }

  /// Builds from arbitrary (exponent, coefficient) pairs; duplicates are summed.
  static LaurentPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& [e, c] : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == e) {
        p.terms_.back().second += c;
      } else {
        p.terms_.emplace_back(e, std::move(c));
      }
    }
    p.drop_zeros();
    return p;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  int min_exponent() const {
    if (is_zero()) throw std::domain_error("min_exponent of zero polynomial");
    return terms_.front().first;
  }
  int max_exponent() const {
    if (is_zero()) throw std::domain_error("max_exponent of zero polynomial");
    return terms_.back().first;
  }

  BigInt coefficient(int exponent) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), exponent,
        [](const Term& term, int e) { return term.first < e; });
    if (it != terms_.end() && it->first == exponent) return it->second;
    return 0;
  }

  bool is_one() const noexcept {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
  }

  /// Multiplication by t^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly p = *this;
    for (auto& term : p.terms_) term.first += k;
    return p;
  }

  /// The substitution t -> t^-1.
  LaurentPoly mirrored() const {
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      p.terms_.emplace_back(-it->first, it->second);
    }
    return p;
  }

  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& term : p.terms_) term.second = -term.second;
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& other) {
    *this = merge(*this, other, false);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& other) {
    *this = merge(*this, other, true);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& other) {
    *this = *this * other;
    return *this;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    return merge(a, b, false);
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return merge(a, b, true);
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1 && a.terms_[0].second == 1) {
      return b.shifted(a.terms_[0].first);
    }
    if (b.terms_.size() == 1 && b.terms_[0].second == 1) {
      return a.shifted(b.terms_[0].first);
    }
    const long lo = static_cast<long>(a.min_exponent()) + b.min_exponent();
    const long hi = static_cast<long>(a.max_exponent()) + b.max_exponent();
    const long span = hi - lo + 1;
    const long work = static_cast<long>(a.terms_.size() * b.terms_.size());
    LaurentPoly p;
    if (span <= 4 * work + 64) {
      std::vector<BigInt> dense(static_cast<std::size_t>(span));
      for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
          dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
        }
      }
      for (long i = 0; i < span; ++i) {
        if (dense[static_cast<std::size_t>(i)] != 0) {
          p.terms_.emplace_back(static_cast<int>(lo + i),
                                std::move(dense[static_cast<std::size_t>(i)]));
        }
      }
    } else {
      std::map<int, BigInt> acc;
      for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
      }
      for (auto& [e, c] : acc) {
        if (c != 0) p.terms_.emplace_back(e, std::move(c));
      }
    }
    return p;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  /// Exact evaluation at a nonzero integer.
  Rational evaluate(const BigInt& v) const {
    if (v == 0) throw std::domain_error("evaluate: t = 0 is not allowed");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      BigInt power = boost::multiprecision::pow(
          boost::multiprecision::abs(v),
          static_cast<unsigned>(e < 0 ? -e : e));
      if (v < 0 && (e % 2 != 0)) power = -power;
      if (e >= 0) {
        sum += Rational(c * power);
      } else {
        sum += Rational(c) / Rational(power);
      }
    }
    return sum;
  }

  /// Evaluation at t = 1 (sum of coefficients).
  BigInt at_one() const {
    BigInt s = 0;
    for (const auto& term : terms_) s += term.second;
    return s;
  }

  /// Exact division; throws std::domain_error when the divisor does not
  /// divide this polynomial in Z[t, t^-1].
  LaurentPoly divided_by(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return {};
    const auto& lead = divisor.terms_.front();  // lowest term of the divisor
    LaurentPoly rem = *this;
    std::vector<Term> quotient;
    // Quotient exponents lie in [min - divisor.min, max - divisor.max].
    const int qmax = max_exponent() - divisor.max_exponent();
    while (!rem.is_zero()) {
      const auto& low = rem.terms_.front();
      const int e = low.first - lead.first;
      if (e > qmax) throw std::domain_error("divided_by: not an exact divisor");
      BigInt q, r;
      boost::multiprecision::divide_qr(low.second, lead.second, q, r);
      if (r != 0) throw std::domain_error("divided_by: not an exact divisor");
      quotient.emplace_back(e, q);
      rem -= divisor * monomial(q, e);
    }
    return from_terms(std::move(quotient));
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first) {
        os << c;
      } else if (c < 0) {
        os << " - " << BigInt(-c);
      } else {
        os << " + " << c;
      }
      os << "*t^" << e;
      first = false;
    }
    return os.str();
  }

  /// Parses the textual form produced by to_string(). Also accepts bare
  /// integers and "t" / "t^k" with an implicit coefficient of 1.
  static LaurentPoly parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.to_string();
  }

 private:
  std::vector<Term> terms_;

  void drop_zeros() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const Term& t) { return t.second == 0; }),
                 terms_.end());
  }

  static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b,
                           bool subtract) {
    LaurentPoly p;
    p.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() ||
          (ia != a.terms_.end() && ia->first < ib->first)) {
        p.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        p.terms_.emplace_back(ib->first, subtract ? BigInt(-ib->second)
                                                  : ib->second);
        ++ib;
      } else {
        BigInt c = subtract ? BigInt(ia->second - ib->second)
                            : BigInt(ia->second + ib->second);
        if (c != 0) p.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return p;
  }
};

/// Representative of p modulo units +-t^k.
struct UnitNormal {
  LaurentPoly poly;
  int shift = 0;
  int sign = 1;
};

/// Returns (q, k, s) with p = s * t^k * q, where q has minimum exponent 0 and
/// a positive constant term. Zero maps to (0, 0, +1).
inline UnitNormal unit_normalize(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  const auto& low = p.terms().front();
  const int k = low.first;
  const int s = low.second < 0 ? -1 : 1;
  LaurentPoly q = p.shifted(-k);
  if (s < 0) q = -q;
  return {std::move(q), k, s};
}

inline bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b) {
  return unit_normalize(a).poly == unit_normalize(b).poly;
}

namespace detail {

inline void skip_space(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline bool read_int(std::string_view s, std::size_t& i, BigInt& out) {
  std::size_t j = i;
  if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
  const std::size_t digits = j;
  while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
  if (j == digits) return false;
  std::string token(s.substr(i, j - i));
  if (token[0] == '+') token.erase(0, 1);
  out = BigInt(token);
  i = j;
  return true;
}

}  // namespace detail

inline LaurentPoly LaurentPoly::parse(std::string_view s) {
  std::vector<Term> terms;
  std::size_t i = 0;
  detail::skip_space(s, i);
  if (i == s.size()) throw ParseError("empty polynomial");
  bool first = true;
  while (true) {
    detail::skip_space(s, i);
    if (i == s.size()) break;
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      const bool attached = i + 1 < s.size() &&
                            std::isdigit(static_cast<unsigned char>(s[i + 1]));
      if (!(first && attached)) {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
        detail::skip_space(s, i);
      }
    } else if (!first) {
      throw ParseError("expected '+' or '-' at offset " + std::to_string(i));
    }
    BigInt coeff = 1;
    bool have_coeff = detail::read_int(s, i, coeff);
    detail::skip_space(s, i);
    int exponent = 0;
    bool have_t = false;
    if (have_coeff && i < s.size() && s[i] == '*') {
      ++i;
      detail::skip_space(s, i);
      if (i >= s.size() || s[i] != 't') throw ParseError("expected 't' after '*'");
    }
    if (i < s.size() && s[i] == 't') {
      have_t = true;
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        BigInt e;
        if (!detail::read_int(s, i, e)) throw ParseError("bad exponent");
        if (e > 1'000'000'000 || e < -1'000'000'000) {
          throw ParseError("exponent out of range");
        }
        exponent = static_cast<int>(e);
      }
    }
    if (!have_coeff && !have_t) {
      throw ParseError("expected a term at offset " + std::to_string(i));
    }
    terms.emplace_back(exponent, sign * coeff);
    first = false;
  }
  return from_terms(std::move(terms));
}

}  // namespace burau
