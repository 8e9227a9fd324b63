#pragma once

// Polyline arcs on the punctured disc and the lifted intersection pairing.
//
// The infinite cyclic cover is encoded by branch cuts: one vertical ray
// straight down from every puncture. The exponent of a path is its signed
// count of cut crossings, +1 for each crossing made while moving in the +x
// direction, so a counterclockwise loop around one puncture has exponent +1.
//
// All geometry is exact rational arithmetic. Degenerate configurations
// (tangencies, crossings at vertices, points on cuts) are rejected.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "laurent.hpp"

namespace burau {

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

inline Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline int orientation(const Point& o, const Point& a, const Point& b) {
  const Rational c = cross(o, a, b);
  return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

/// p lies on the closed segment [a, b].
inline bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

inline bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) ||
         on_segment(b, c, d);
}

/// Interior crossing of two segments at a single point, away from all four
/// endpoints.
inline bool segments_cross_properly(const Point& a, const Point& b, const Point& c,
                                    const Point& d) {
  return orientation(a, b, c) * orientation(a, b, d) < 0 &&
         orientation(c, d, a) * orientation(c, d, b) < 0;
}

/// Parameter s in (0,1) with a + s (b - a) on line cd.
inline Rational crossing_parameter(const Point& a, const Point& b, const Point& c,
                                   const Point& d) {
  const Rational dx = b.x - a.x, dy = b.y - a.y;
  const Rational ex = d.x - c.x, ey = d.y - c.y;
  const Rational denom = dx * ey - dy * ex;
  return ((c.x - a.x) * ey - (c.y - a.y) * ex) / denom;
}

inline Point lerp(const Point& a, const Point& b, const Rational& s) {
  return {a.x + (b.x - a.x) * s, a.y + (b.y - a.y) * s};
}

inline Rational parse_rational(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw ParseError("bad rational '" + s + "'");
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw ParseError("bad rational '" + s + "'");
    for (std::size_t k = i; k < part.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(part[k]))) {
        throw ParseError("bad rational '" + s + "'");
      }
    }
    return BigInt(part[0] == '+' ? part.substr(1) : part);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  const BigInt num = parse_int(s.substr(0, slash));
  const BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  return Rational(num, den);
}

inline std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) {
    os << '/' << boost::multiprecision::denominator(r);
  }
  return os.str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Arc endpoint: a puncture q_i or the boundary basepoint p0.
struct EndpointTag {
  enum class Kind { puncture, basepoint };
  Kind kind = Kind::basepoint;
  int index = 0;

  static EndpointTag puncture(int i) { return {Kind::puncture, i}; }
  static EndpointTag basepoint() { return {Kind::basepoint, 0}; }

  bool is_puncture() const noexcept { return kind == Kind::puncture; }

  std::string to_string() const {
    return is_puncture() ? "q" + std::to_string(index) : std::string("p0");
  }

  static EndpointTag parse(std::string_view text) {
    if (text == "p0") return basepoint();
    if (text.size() >= 2 && text[0] == 'q') {
      try {
        std::size_t pos = 0;
        const int i = std::stoi(std::string(text.substr(1)), &pos);
        if (pos == text.size() - 1 && i >= 1) return puncture(i);
      } catch (const std::exception&) {
      }
    }
    throw ParseError("bad endpoint '" + std::string(text) + "' (expected q<i> or p0)");
  }

  friend bool operator==(const EndpointTag&, const EndpointTag&) = default;
};

/// The disc D with punctures q_1..q_n and basepoint p0 on its boundary.
class DiscModel {
 public:
  DiscModel() = default;

  /// Punctures at (i, 0), basepoint (0, -(n+1)), boundary radius n+1 about 0.
  static DiscModel standard(int n) {
    if (n < 1) throw std::invalid_argument("DiscModel: n must be positive");
    DiscModel m;
    m.n_ = n;
    for (int i = 1; i <= n; ++i) m.punctures_.push_back({Rational(i), Rational(0)});
    m.basepoint_ = {Rational(0), Rational(-(n + 1))};
    m.center_ = {Rational(0), Rational(0)};
    m.radius_ = Rational(n + 1);
    return m;
  }

  static DiscModel custom(std::vector<Point> punctures, Point basepoint, Point center,
                          Rational radius) {
    DiscModel m;
    m.n_ = static_cast<int>(punctures.size());
    m.punctures_ = std::move(punctures);
    m.basepoint_ = std::move(basepoint);
    m.center_ = std::move(center);
    m.radius_ = std::move(radius);
    m.validate();
    return m;
  }

  int n() const noexcept { return n_; }
  const std::vector<Point>& punctures() const noexcept { return punctures_; }
  const Point& puncture(int i) const { return punctures_.at(static_cast<std::size_t>(i - 1)); }
  const Point& basepoint() const noexcept { return basepoint_; }
  const Point& center() const noexcept { return center_; }
  const Rational& radius() const noexcept { return radius_; }

  bool is_standard() const { return *this == standard(n_); }

  Point endpoint(const EndpointTag& tag) const {
    if (!tag.is_puncture()) return basepoint_;
    if (tag.index < 1 || tag.index > n_) {
      throw GeometryError("endpoint " + tag.to_string() + " outside q1..q" + std::to_string(n_));
    }
    return puncture(tag.index);
  }

  Rational distance_sq(const Point& p) const {
    return (p.x - center_.x) * (p.x - center_.x) + (p.y - center_.y) * (p.y - center_.y);
  }
  bool in_closed_disc(const Point& p) const { return distance_sq(p) <= radius_ * radius_; }
  bool in_open_disc(const Point& p) const { return distance_sq(p) < radius_ * radius_; }
  bool on_boundary(const Point& p) const { return distance_sq(p) == radius_ * radius_; }

  /// p lies on the cut below puncture i (the puncture itself excluded).
  bool on_cut(const Point& p, int i) const {
    const Point& q = puncture(i);
    return p.x == q.x && p.y < q.y;
  }

  std::optional<int> cut_containing(const Point& p) const {
    for (int i = 1; i <= n_; ++i) {
      if (on_cut(p, i)) return i;
    }
    return std::nullopt;
  }

  std::optional<int> puncture_at(const Point& p) const {
    for (int i = 1; i <= n_; ++i) {
      if (puncture(i) == p) return i;
    }
    return std::nullopt;
  }

  void validate() const {
    if (n_ < 1) throw GeometryError("disc needs at least one puncture");
    if (radius_ <= 0) throw GeometryError("disc radius must be positive");
    if (!on_boundary(basepoint_)) throw GeometryError("basepoint is not on the boundary circle");
    for (int i = 1; i <= n_; ++i) {
      if (!in_open_disc(puncture(i))) {
        throw GeometryError("puncture q" + std::to_string(i) + " is not inside the disc");
      }
      for (int j = 1; j <= n_; ++j) {
        if (i != j && (puncture(i) == puncture(j) || on_cut(puncture(j), i))) {
          throw GeometryError("puncture q" + std::to_string(j) + " lies on the cut of q" +
                              std::to_string(i));
        }
      }
    }
    if (auto c = cut_containing(basepoint_)) {
      throw GeometryError("basepoint lies on the cut of q" + std::to_string(*c));
    }
  }

  friend bool operator==(const DiscModel&, const DiscModel&) = default;

 private:
  int n_ = 0;
  std::vector<Point> punctures_;
  Point basepoint_;
  Point center_;
  Rational radius_;
};

/// Signed count of cut crossings along the directed segment a -> b.
inline int winding_increment(const DiscModel& model, const Point& a, const Point& b) {
  int total = 0;
  for (int i = 1; i <= model.n(); ++i) {
    const Point& q = model.puncture(i);
    if (model.on_cut(a, i) || model.on_cut(b, i)) {
      throw GeometryError("segment endpoint lies on the cut of q" + std::to_string(i));
    }
    if (a.x == q.x && b.x == q.x) {
      if (a.y < q.y || b.y < q.y) {
        throw GeometryError("segment runs along the cut of q" + std::to_string(i));
      }
      continue;
    }
    const Rational da = a.x - q.x;
    const Rational db = b.x - q.x;
    if ((da < 0 && db > 0) || (da > 0 && db < 0)) {
      const Rational y = a.y + (b.y - a.y) * (q.x - a.x) / (b.x - a.x);
      if (y == q.y) throw GeometryError("segment passes through q" + std::to_string(i));
      if (y < q.y) total += db > 0 ? 1 : -1;
    }
  }
  return total;
}

struct PolylineArc {
  std::string name;
  EndpointTag start;
  EndpointTag end;
  /// Interior vertices; the endpoints are implied by the tags.
  std::vector<Point> vertices;

  std::vector<Point> points(const DiscModel& model) const {
    std::vector<Point> pts;
    pts.reserve(vertices.size() + 2);
    pts.push_back(model.endpoint(start));
    pts.insert(pts.end(), vertices.begin(), vertices.end());
    pts.push_back(model.endpoint(end));
    return pts;
  }

  std::size_t segment_count() const noexcept { return vertices.size() + 1; }

  PolylineArc reversed() const {
    PolylineArc r{name, end, start, vertices};
    std::reverse(r.vertices.begin(), r.vertices.end());
    return r;
  }
};

/// Checks every arc invariant; throws GeometryError naming the offending
/// segment.
inline void validate_arc(const DiscModel& model, const PolylineArc& arc) {
  const auto where = [&](std::size_t seg) {
    return "arc '" + arc.name + "' segment " + std::to_string(seg);
  };
  if (arc.start.is_puncture() && (arc.start.index < 1 || arc.start.index > model.n())) {
    throw GeometryError("arc '" + arc.name + "': start " + arc.start.to_string() +
                        " is not a puncture of the disc");
  }
  if (arc.end.is_puncture() && (arc.end.index < 1 || arc.end.index > model.n())) {
    throw GeometryError("arc '" + arc.name + "': end " + arc.end.to_string() +
                        " is not a puncture of the disc");
  }
  if (arc.start == arc.end) {
    throw GeometryError("arc '" + arc.name + "' starts and ends at the same point");
  }
  const auto pts = arc.points(model);
  for (std::size_t k = 1; k + 1 < pts.size(); ++k) {
    if (!model.in_closed_disc(pts[k])) {
      throw GeometryError("arc '" + arc.name + "' vertex " + std::to_string(k) +
                          " lies outside the disc");
    }
    if (model.puncture_at(pts[k])) {
      throw GeometryError("arc '" + arc.name + "' vertex " + std::to_string(k) +
                          " lies on a puncture");
    }
  }
  const std::size_t segs = pts.size() - 1;
  for (std::size_t s = 0; s < segs; ++s) {
    const Point& a = pts[s];
    const Point& b = pts[s + 1];
    if (a == b) throw GeometryError(where(s) + " has zero length");
    for (int i = 1; i <= model.n(); ++i) {
      const Point& q = model.puncture(i);
      const bool endpoint_here = (s == 0 && a == q) || (s + 1 == segs && b == q);
      if (!endpoint_here && on_segment(q, a, b)) {
        throw GeometryError(where(s) + " passes through puncture q" + std::to_string(i));
      }
    }
    try {
      (void)winding_increment(model, a, b);
    } catch (const GeometryError& e) {
      throw GeometryError(where(s) + ": " + e.what());
    }
  }
  for (std::size_t s = 0; s < segs; ++s) {
    for (std::size_t r = s + 1; r < segs; ++r) {
      const Point &a = pts[s], &b = pts[s + 1], &c = pts[r], &d = pts[r + 1];
      if (r == s + 1) {
        // consecutive segments share b == c and must not fold back
        if (orientation(a, b, d) == 0 &&
            (d.x - b.x) * (b.x - a.x) + (d.y - b.y) * (b.y - a.y) < 0) {
          throw GeometryError(where(s) + " folds back onto segment " + std::to_string(r));
        }
        continue;
      }
      if (segments_touch(a, b, c, d)) {
        throw GeometryError("arc '" + arc.name + "' is not simple: segments " +
                            std::to_string(s) + " and " + std::to_string(r) + " meet");
      }
    }
  }
}

struct ArcFixture {
  DiscModel model;
  std::vector<PolylineArc> arcs;

  const PolylineArc& arc(std::string_view name) const {
    for (const auto& a : arcs) {
      if (a.name == name) return a;
    }
    throw std::out_of_range("no arc named '" + std::string(name) + "'");
  }
};

/// Parses the text fixture format:
///
///   disc n=<n>
///   puncture <i> <x> <y>          (optional, all or none)
///   basepoint <x> <y>             (optional)
///   boundary <cx> <cy> <radius>   (optional)
///   arc <name> from <q<i>|p0> to <q<j>|p0>
///   <x> <y>                       (interior vertices, exact rationals)
///
/// `#` starts a comment. Without puncture lines the standard model is used.
inline ArcFixture parse_arcs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = 0;
  std::map<int, Point> punctures;
  std::optional<Point> basepoint;
  std::optional<std::pair<Point, Rational>> boundary;
  std::vector<PolylineArc> arcs;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    try {
      if (tok[0] == "disc") {
        if (tok.size() != 2 || tok[1].rfind("n=", 0) != 0) fail("expected 'disc n=<n>'");
        n = std::stoi(tok[1].substr(2));
        if (n < 1) fail("n must be positive");
      } else if (tok[0] == "puncture") {
        if (tok.size() != 4) fail("expected 'puncture <i> <x> <y>'");
        punctures[std::stoi(tok[1])] = {parse_rational(tok[2]), parse_rational(tok[3])};
      } else if (tok[0] == "basepoint") {
        if (tok.size() != 3) fail("expected 'basepoint <x> <y>'");
        basepoint = Point{parse_rational(tok[1]), parse_rational(tok[2])};
      } else if (tok[0] == "boundary") {
        if (tok.size() != 4) fail("expected 'boundary <cx> <cy> <radius>'");
        boundary = std::make_pair(Point{parse_rational(tok[1]), parse_rational(tok[2])},
                                  parse_rational(tok[3]));
      } else if (tok[0] == "arc") {
        if (tok.size() != 6 || tok[2] != "from" || tok[4] != "to") {
          fail("expected 'arc <name> from <endpoint> to <endpoint>'");
        }
        arcs.push_back({tok[1], EndpointTag::parse(tok[3]), EndpointTag::parse(tok[5]), {}});
      } else if (tok.size() == 2) {
        if (arcs.empty()) fail("vertex before any 'arc' header");
        arcs.back().vertices.push_back({parse_rational(tok[0]), parse_rational(tok[1])});
      } else {
        fail("unrecognized line");
      }
    } catch (const ParseError& e) {
      if (std::string(e.what()).rfind("line ", 0) == 0) throw;
      fail(e.what());
    } catch (const std::logic_error&) {
      fail("malformed number");
    }
  }
  if (n == 0) throw ParseError("missing 'disc n=<n>' header");
  ArcFixture fx;
  if (punctures.empty() && !basepoint && !boundary) {
    fx.model = DiscModel::standard(n);
  } else {
    DiscModel std_model = DiscModel::standard(n);
    std::vector<Point> pts;
    if (punctures.empty()) {
      pts = std_model.punctures();
    } else {
      for (int i = 1; i <= n; ++i) {
        auto it = punctures.find(i);
        if (it == punctures.end()) {
          throw ParseError("puncture " + std::to_string(i) + " has no position");
        }
        pts.push_back(it->second);
      }
      if (static_cast<int>(punctures.size()) != n) {
        throw ParseError("puncture indices must be exactly 1.." + std::to_string(n));
      }
    }
    const Point bp = basepoint.value_or(std_model.basepoint());
    const auto bd = boundary.value_or(std::make_pair(std_model.center(), std_model.radius()));
    try {
      fx.model = DiscModel::custom(std::move(pts), bp, bd.first, bd.second);
    } catch (const GeometryError& e) {
      throw GeometryError(std::string("invalid disc: ") + e.what());
    }
  }
  for (const auto& a : arcs) {
    for (const auto& b : arcs) {
      if (&a != &b && a.name == b.name) throw ParseError("duplicate arc name '" + a.name + "'");
    }
    validate_arc(fx.model, a);
  }
  fx.arcs = std::move(arcs);
  return fx;
}

inline ArcFixture load_arcs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_arcs(ss.str());
}

inline std::string format_arcs(const ArcFixture& fx) {
  std::ostringstream os;
  os << "disc n=" << fx.model.n() << '\n';
  if (!fx.model.is_standard()) {
    for (int i = 1; i <= fx.model.n(); ++i) {
      os << "puncture " << i << ' ' << format_rational(fx.model.puncture(i).x) << ' '
         << format_rational(fx.model.puncture(i).y) << '\n';
    }
    os << "basepoint " << format_rational(fx.model.basepoint().x) << ' '
       << format_rational(fx.model.basepoint().y) << '\n';
    os << "boundary " << format_rational(fx.model.center().x) << ' '
       << format_rational(fx.model.center().y) << ' ' << format_rational(fx.model.radius())
       << '\n';
  }
  for (const auto& a : fx.arcs) {
    os << "\narc " << a.name << " from " << a.start.to_string() << " to " << a.end.to_string()
       << '\n';
    for (const auto& v : a.vertices) {
      os << format_rational(v.x) << ' ' << format_rational(v.y) << '\n';
    }
  }
  return os.str();
}

/// Position along a polyline: segment index plus fraction in (0, 1).
struct ArcPosition {
  std::size_t segment = 0;
  Rational fraction;

  friend bool operator<(const ArcPosition& a, const ArcPosition& b) {
    return a.segment != b.segment ? a.segment < b.segment : a.fraction < b.fraction;
  }
  friend bool operator==(const ArcPosition&, const ArcPosition&) = default;
};

struct Crossing {
  Point point;
  ArcPosition on_alpha;
  ArcPosition on_beta;
  /// Orientation of the frame (direction of alpha, direction of beta).
  int raw_sign = 1;
  /// exponent(beta up to p) - exponent(alpha up to p)
  int raw_exponent = 0;
  /// Normalized so that the first crossing along beta is +t^0.
  int sign = 1;
  int exponent = 0;
};

struct CrossingList {
  std::vector<Crossing> items;
  /// sign = global_sign * raw_sign, exponent = raw_exponent - shift
  int global_sign = 1;
  int shift = 0;

  std::size_t size() const noexcept { return items.size(); }
  bool empty() const noexcept { return items.empty(); }
};

namespace detail {

/// Running exponent at the start of every segment.
inline std::vector<int> exponent_prefix(const DiscModel& model, const std::vector<Point>& pts) {
  std::vector<int> prefix(pts.size(), 0);
  for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
    prefix[s + 1] = prefix[s] + winding_increment(model, pts[s], pts[s + 1]);
  }
  return prefix;
}

}  // namespace detail

/// All crossings of alpha and beta, ordered along beta.
inline CrossingList crossings(const DiscModel& model, const PolylineArc& alpha,
                              const PolylineArc& beta) {
  const auto pa = alpha.points(model);
  const auto pb = beta.points(model);
  const auto ea = detail::exponent_prefix(model, pa);
  const auto eb = detail::exponent_prefix(model, pb);
  CrossingList list;
  for (std::size_t j = 0; j + 1 < pb.size(); ++j) {
    for (std::size_t i = 0; i + 1 < pa.size(); ++i) {
      const Point &a0 = pa[i], &a1 = pa[i + 1], &b0 = pb[j], &b1 = pb[j + 1];
      if (!segments_touch(a0, a1, b0, b1)) continue;
      if (!segments_cross_properly(a0, a1, b0, b1)) {
        throw GeometryError("non-transverse intersection between '" + alpha.name +
                            "' segment " + std::to_string(i) + " and '" + beta.name +
                            "' segment " + std::to_string(j));
      }
      Crossing c;
      c.on_alpha = {i, crossing_parameter(a0, a1, b0, b1)};
      c.on_beta = {j, crossing_parameter(b0, b1, a0, a1)};
      c.point = lerp(b0, b1, c.on_beta.fraction);
      if (auto cut = model.cut_containing(c.point)) {
        throw GeometryError("crossing of '" + alpha.name + "' and '" + beta.name +
                            "' lies on the cut of q" + std::to_string(*cut));
      }
      const Point da{a1.x - a0.x, a1.y - a0.y};
      const Point db{b1.x - b0.x, b1.y - b0.y};
      c.raw_sign = orientation({0, 0}, da, db);
      c.raw_exponent = (eb[j] + winding_increment(model, b0, c.point)) -
                       (ea[i] + winding_increment(model, a0, c.point));
      list.items.push_back(std::move(c));
    }
  }
  std::sort(list.items.begin(), list.items.end(),
            [](const Crossing& x, const Crossing& y) { return x.on_beta < y.on_beta; });
  if (!list.items.empty()) {
    list.global_sign = list.items.front().raw_sign;
    list.shift = list.items.front().raw_exponent;
  }
  for (auto& c : list.items) {
    c.sign = list.global_sign * c.raw_sign;
    c.exponent = c.raw_exponent - list.shift;
  }
  return list;
}

struct PairingPolynomial {
  LaurentPoly value;
  std::size_t crossing_count = 0;
};

inline LaurentPoly crossing_sum(const CrossingList& list) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& c : list.items) terms.emplace_back(c.exponent, c.sign);
  return LaurentPoly::from_terms(std::move(terms));
}

/// The lifted pairing of alpha against beta, normalized so that the first
/// crossing along beta contributes +t^0.
inline PairingPolynomial pairing(const DiscModel& model, const PolylineArc& alpha,
                                 const PolylineArc& beta) {
  const auto list = crossings(model, alpha, beta);
  return {crossing_sum(list), list.size()};
}

// ---------------------------------------------------------------------------
// Exponent rule between consecutive crossings.

struct RemarkPair {
  std::size_t first = 0;  // index into the crossing list; the pair is (first, first+1)
  bool applicable = true;
  int enclosed = 0;        // punctures inside the loop
  bool counterclockwise = true;
  int exponent_change = 0;  // k2 - k1
  bool passed = true;
};

struct RemarkReport {
  bool ok = true;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<RemarkPair> pairs;
};

namespace detail {

/// Points of the polyline strictly between two positions, in travel order
/// from `from` to `to` (either direction).
inline std::vector<Point> between(const std::vector<Point>& pts, const ArcPosition& from,
                                  const ArcPosition& to) {
  std::vector<Point> out;
  if (from < to) {
    for (std::size_t v = from.segment + 1; v <= to.segment; ++v) out.push_back(pts[v]);
  } else {
    for (std::size_t v = from.segment; v > to.segment; --v) out.push_back(pts[v]);
  }
  return out;
}

/// Even-odd test with a horizontal ray towards +x.
inline bool inside_polygon(const Point& p, const std::vector<Point>& poly) {
  bool inside = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Point& a = poly[i];
    const Point& b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const Rational x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

inline Rational signed_area2(const std::vector<Point>& poly) {
  Rational s = 0;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    s += poly[j].x * poly[i].y - poly[i].x * poly[j].y;
  }
  return s;
}

}  // namespace detail

/// For every pair of crossings consecutive along beta whose connecting
/// subarcs meet only at their ends, checks that the exponent change equals
/// the number of punctures enclosed by the two subarcs, increasing when the
/// beta subarc runs counterclockwise around them.
///
/// Enclosure and orientation come from an even-odd point-in-polygon test and
/// the shoelace area, independently of the cuts used to assign exponents.
inline RemarkReport remark_check(const DiscModel& model, const PolylineArc& alpha,
                                 const PolylineArc& beta, const CrossingList& list) {
  RemarkReport report;
  const auto pa = alpha.points(model);
  const auto pb = beta.points(model);
  for (std::size_t k = 0; k + 1 < list.items.size(); ++k) {
    const Crossing& c1 = list.items[k];
    const Crossing& c2 = list.items[k + 1];
    RemarkPair pair;
    pair.first = k;
    const ArcPosition& alo = std::min(c1.on_alpha, c2.on_alpha);
    const ArcPosition& ahi = std::max(c1.on_alpha, c2.on_alpha);
    for (const auto& other : list.items) {
      if (&other == &c1 || &other == &c2) continue;
      const bool inside_beta = c1.on_beta < other.on_beta && other.on_beta < c2.on_beta;
      const bool inside_alpha = alo < other.on_alpha && other.on_alpha < ahi;
      if (inside_beta && inside_alpha) pair.applicable = false;
    }
    if (!pair.applicable) {
      ++report.skipped;
      report.pairs.push_back(pair);
      continue;
    }
    std::vector<Point> loop{c1.point};
    for (auto& p : detail::between(pb, c1.on_beta, c2.on_beta)) loop.push_back(p);
    loop.push_back(c2.point);
    for (auto& p : detail::between(pa, c2.on_alpha, c1.on_alpha)) loop.push_back(p);
    for (const auto& q : model.punctures()) {
      if (detail::inside_polygon(q, loop)) ++pair.enclosed;
    }
    pair.counterclockwise = detail::signed_area2(loop) > 0;
    pair.exponent_change = c2.exponent - c1.exponent;
    const int expected = pair.counterclockwise ? pair.enclosed : -pair.enclosed;
    pair.passed = pair.exponent_change == expected;
    report.ok = report.ok && pair.passed;
    ++report.checked;
    report.pairs.push_back(pair);
  }
  return report;
}

// ---------------------------------------------------------------------------
// SVG rendering.

struct SvgAnnotation {
  Point at;
  std::string label;
  int sign = 1;
};

inline std::vector<SvgAnnotation> annotate(const CrossingList& list) {
  std::vector<SvgAnnotation> out;
  for (const auto& c : list.items) {
    std::string label = (c.sign > 0 ? "+t" : "-t");
    label += c.exponent == 1 ? std::string() : "^" + std::to_string(c.exponent);
    out.push_back({c.point, label, c.sign});
  }
  return out;
}

inline std::string render_svg(const DiscModel& model, const std::vector<PolylineArc>& arcs,
                              const std::vector<SvgAnnotation>& notes = {},
                              std::string_view emphasized = "alpha") {
  double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
  auto extend = [&](const Point& p) {
    const double x = to_double(p.x), y = to_double(p.y);
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  };
  for (const auto& q : model.punctures()) extend(q);
  extend(model.basepoint());
  for (const auto& a : arcs) {
    for (const auto& p : a.points(model)) extend(p);
  }
  if (model.is_standard()) {
    const double r = to_double(model.radius());
    extend({Rational(-model.radius()), Rational(-model.radius())});
    extend({model.radius(), model.radius()});
    (void)r;
  }
  const double span = std::max({maxx - minx, maxy - miny, 1e-9});
  const double scale = 760.0 / span;
  const double margin = 20.0;
  const double width = (maxx - minx) * scale + 2 * margin;
  const double height = (maxy - miny) * scale + 2 * margin;
  auto sx = [&](const Rational& x) { return (to_double(x) - minx) * scale + margin; };
  auto sy = [&](const Rational& y) { return (maxy - to_double(y)) * scale + margin; };

  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<circle cx=\"" << sx(model.center().x) << "\" cy=\"" << sy(model.center().y)
     << "\" r=\"" << to_double(model.radius()) * scale
     << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  for (const auto& a : arcs) {
    const bool thick = a.name == emphasized;
    os << "<polyline fill=\"none\" stroke=\"" << (thick ? "black" : "#1f5fbf")
       << "\" stroke-width=\"" << (thick ? 2.5 : 1.2) << "\" points=\"";
    bool first = true;
    for (const auto& p : a.points(model)) {
      os << (first ? "" : " ") << sx(p.x) << ',' << sy(p.y);
      first = false;
    }
    os << "\"><title>" << a.name << "</title></polyline>\n";
  }
  for (int i = 1; i <= model.n(); ++i) {
    const Point& q = model.puncture(i);
    os << "<circle cx=\"" << sx(q.x) << "\" cy=\"" << sy(q.y)
       << "\" r=\"4\" fill=\"black\"/>\n";
    os << "<text x=\"" << sx(q.x) + 5 << "\" y=\"" << sy(q.y) - 5
       << "\" font-size=\"11\" font-family=\"sans-serif\">q" << i << "</text>\n";
  }
  os << "<circle cx=\"" << sx(model.basepoint().x) << "\" cy=\"" << sy(model.basepoint().y)
     << "\" r=\"3\" fill=\"none\" stroke=\"black\"/>\n";
  os << "<text x=\"" << sx(model.basepoint().x) + 5 << "\" y=\"" << sy(model.basepoint().y) - 5
     << "\" font-size=\"11\" font-family=\"sans-serif\">p0</text>\n";
  for (const auto& note : notes) {
    os << "<circle cx=\"" << sx(note.at.x) << "\" cy=\"" << sy(note.at.y) << "\" r=\"2\" fill=\""
       << (note.sign > 0 ? "#c00" : "#070") << "\"/>\n";
    os << "<text x=\"" << sx(note.at.x) + 2 << "\" y=\"" << sy(note.at.y) - 2
       << "\" font-size=\"7\" font-family=\"sans-serif\" fill=\""
       << (note.sign > 0 ? "#c00" : "#070") << "\">" << note.label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

inline void export_svg(const DiscModel& model, const std::vector<PolylineArc>& arcs,
                       const std::vector<SvgAnnotation>& notes, const std::string& path,
                       std::string_view emphasized = "alpha") {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << render_svg(model, arcs, notes, emphasized);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace burau
