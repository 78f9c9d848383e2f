#include "fatpoint3/literal.hpp"

#include <charconv>
#include <limits>
#include <vector>

namespace fatpoint3 {

namespace {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
      if (!current.empty()) {
        out.push_back(std::move(current));
        current.clear();
      }
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) {
    out.push_back(std::move(current));
  }
  return out;
}

int parse_int(std::string_view piece, const std::string& token) {
  int value = 0;
  const char* first = piece.data();
  const char* last = piece.data() + piece.size();
  if (!piece.empty() && piece.front() == '+') {
    ++first;
  }
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw LiteralError("bad integer in token '" + token + "'", token);
  }
  return value;
}

// Appends the multiplicities denoted by one token ("m" or "m^k").
void expand_token(const std::string& token, std::vector<int>& out) {
  auto caret = token.find('^');
  if (caret == std::string::npos) {
    out.push_back(parse_int(token, token));
    return;
  }
  int value = parse_int(std::string_view(token).substr(0, caret), token);
  int count = parse_int(std::string_view(token).substr(caret + 1), token);
  if (count < 0 || count > 100000) {
    throw LiteralError("bad repeat count in token '" + token + "'", token);
  }
  out.insert(out.end(), static_cast<std::size_t>(count), value);
}

std::string format_mults(const std::vector<int>& mults, LiteralStyle style) {
  std::string out;
  std::size_t i = 0;
  while (i < mults.size()) {
    std::size_t run = 1;
    if (style == LiteralStyle::compact) {
      while (i + run < mults.size() && mults[i + run] == mults[i]) {
        ++run;
      }
    }
    out += ' ';
    out += std::to_string(mults[i]);
    if (run > 1) {
      out += '^';
      out += std::to_string(run);
    }
    i += run;
  }
  return out;
}

}  // namespace

LinearSystem parse_system(std::string_view text) {
  auto tokens = tokenize(text);
  if (tokens.empty()) {
    throw LiteralError("empty system literal", "");
  }
  if (tokens.front().find('^') != std::string::npos) {
    throw LiteralError("degree token '" + tokens.front() + "' cannot carry an exponent",
                       tokens.front());
  }
  LinearSystem out;
  out.degree = parse_int(tokens.front(), tokens.front());
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    expand_token(tokens[i], out.mults);
  }
  return out;
}

std::string format_system(const LinearSystem& system, LiteralStyle style) {
  return std::to_string(system.degree) + format_mults(system.mults, style);
}

CurveClass parse_curve(std::string_view text) {
  auto tokens = tokenize(text);
  std::size_t pos = 0;
  if (pos < tokens.size() && tokens[pos] == "curve") {
    ++pos;
  }
  if (pos >= tokens.size()) {
    throw LiteralError("curve literal has no degree", "");
  }
  if (tokens[pos].find('^') != std::string::npos) {
    throw LiteralError("degree token '" + tokens[pos] + "' cannot carry an exponent",
                       tokens[pos]);
  }
  CurveClass out;
  out.degree = parse_int(tokens[pos], tokens[pos]);
  ++pos;
  while (pos < tokens.size() && tokens[pos] != "b") {
    expand_token(tokens[pos], out.mults);
    ++pos;
  }
  while (pos < tokens.size()) {
    if (tokens[pos] != "b") {
      throw LiteralError("expected 'b' to start an incidence triple, got '" + tokens[pos] + "'",
                         tokens[pos]);
    }
    if (pos + 3 >= tokens.size()) {
      throw LiteralError("incomplete incidence triple", tokens[pos]);
    }
    int i = parse_int(tokens[pos + 1], tokens[pos + 1]);
    int j = parse_int(tokens[pos + 2], tokens[pos + 2]);
    int v = parse_int(tokens[pos + 3], tokens[pos + 3]);
    if (i < 1 || i > 4 || j < 1 || j > 4 || i == j) {
      const std::string& bad = (i < 1 || i > 4) ? tokens[pos + 1] : tokens[pos + 2];
      throw LiteralError("incidence pair must be two distinct points among 1..4, got '" + bad + "'",
                         bad);
    }
    out.incidences[make_pair_key(i - 1, j - 1)] = v;
    pos += 4;
  }
  return out;
}

std::string format_curve(const CurveClass& curve, LiteralStyle style) {
  std::string out = "curve " + std::to_string(curve.degree) + format_mults(curve.mults, style);
  for (const auto& [pair, value] : curve.incidences) {
    if (value == 0) {
      continue;
    }
    out += " b " + std::to_string(pair.first + 1) + ' ' + std::to_string(pair.second + 1) + ' ' +
           std::to_string(value);
  }
  return out;
}

}  // namespace fatpoint3
