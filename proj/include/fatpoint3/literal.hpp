#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "fatpoint3/system.hpp"

namespace fatpoint3 {

/// Raised on malformed system or curve literals; `token()` is the offending
/// piece of input.
class LiteralError : public std::invalid_argument {
 public:
  LiteralError(const std::string& message, std::string token)
      : std::invalid_argument(message), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

enum class LiteralStyle { compact, expanded };

// System literal: "d m1 m2 ..." where a multiplicity token may be "m^k"
// (k copies of m). Commas count as whitespace, so "12,7^6" also parses.
LinearSystem parse_system(std::string_view text);
std::string format_system(const LinearSystem& system, LiteralStyle style = LiteralStyle::compact);

// Curve literal: "[curve] delta mu1 mu2 ... [b i j v]..." with 1-based
// i, j <= 4 naming the line through points i and j.
CurveClass parse_curve(std::string_view text);
std::string format_curve(const CurveClass& curve, LiteralStyle style = LiteralStyle::compact);

}  // namespace fatpoint3
