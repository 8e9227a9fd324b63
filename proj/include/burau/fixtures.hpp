#pragma once

// Built-in arc fixtures and named braid words.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "braid.hpp"
#include "disc.hpp"

namespace burau::fixtures {

/// Five punctures in picture coordinates; alpha joins q4 to q2 and beta
/// winds from the basepoint into q3.
inline constexpr std::string_view kFig3 = R"(# five-puncture spiral, 50 crossings
disc n=5
puncture 1 54 120
puncture 2 96 144
puncture 3 108 120
puncture 4 228 120
puncture 5 252 144
basepoint 324 0
boundary 324 2000 2000

arc alpha from q4 to q2
312 120
312 28
4 28
4 128
344 128
344 236
4 236
4 136
336 136
336 228
12 228
12 144

arc beta from p0 to q3
324 204
180 204
180 72
288 72
288 180
204 180
204 96
264 96
264 156
240 156
240 108
216 108
216 168
276 168
276 84
192 84
192 192
300 192
300 60
168 60
168 204
36 204
36 60
156 60
156 192
48 192
48 114
60 114
60 180
144 180
144 96
72 96
72 168
132 168
132 108
84 108
84 156
108 156
)";

/// Six punctures; alpha is the straight arc q1 -> q6 and beta runs q2 -> q5
/// around it. Four crossings that cancel.
inline constexpr std::string_view kFig5 = R"(# six punctures, zero pairing
disc n=6
puncture 1 30 45
puncture 2 60 30
puncture 3 120 60
puncture 4 150 60
puncture 5 210 30
puncture 6 240 45
basepoint 135 -155
boundary 135 45 200

arc alpha from q1 to q6

arc beta from q2 to q5
60 75
0 75
0 0
90 0
90 90
180 90
180 0
270 0
270 75
210 75
)";

/// Signed monomials (sign, exponent) expected at the crossings of kFig3, up
/// to one global unit.
inline constexpr std::array<std::pair<int, int>, 50> kFig3Monomials = {{
    {-1, -3}, {-1, 0},  {1, 1},   {1, -1},  {1, -3},  {-1, -1}, {-1, 2},  {1, 3},   {1, 1},
    {1, -1},  {-1, -2}, {-1, 0},  {-1, 2},  {1, 1},   {1, -2},  {-1, -1}, {1, 0},   {-1, 1},
    {1, 2},   {-1, 3},  {1, 2},   {-1, 1},  {1, 0},   {-1, -1}, {1, -2},  {-1, 1},  {-1, 4},
    {1, 5},   {1, 3},   {1, 1},   {-1, 0},  {-1, 2},  {-1, 4},  {1, 3},   {1, 0},   {-1, 1},
    {1, 2},   {-1, 3},  {1, 4},   {-1, 5},  {1, 4},   {-1, 3},  {1, 2},   {-1, 1},  {1, 0},
    {-1, 2},  {1, 1},   {-1, 0},  {1, -1},  {-1, -2},
}};

/// True when the crossings carry exactly `listed`, up to one unit +-t^k.
template <class Listed>
bool matches_up_to_unit(const CrossingList& list, const Listed& listed) {
  std::map<std::pair<int, int>, int> have;
  for (const auto& c : list.items) ++have[{c.exponent, c.sign}];
  for (int sign : {1, -1}) {
    for (int shift = -64; shift <= 64; ++shift) {
      std::map<std::pair<int, int>, int> want;
      for (const auto& [s, e] : listed) ++want[{e + shift, s * sign}];
      if (want == have) return true;
    }
  }
  return false;
}

inline std::optional<std::string_view> builtin(std::string_view name) {
  if (name == "fig3" || name == "fig3.arcs") return kFig3;
  if (name == "fig5" || name == "fig5.arcs") return kFig5;
  return std::nullopt;
}

/// Conjugators used for the five-strand kernel element.
inline constexpr std::string_view kPsi1Strand5 = "s3^-1 s2 s1^2 s2 s4^3 s3 s2";
inline constexpr std::string_view kPsi2Strand5 = "s4^-1 s3 s2 s1^-2 s2 s1^2 s2^2 s1 s4^5";
/// Conjugators used for the six-strand kernel element.
inline constexpr std::string_view kPsi1Strand6 = "s4 s5^-1 s2^-1 s1";
inline constexpr std::string_view kPsi2Strand6 = "s4^-1 s5^2 s2 s1^-2";

}  // namespace burau::fixtures
