#include "rotkit/rational.hpp"

#include <charconv>

namespace rotkit {

namespace {

std::optional<long long> parse_ll(std::string_view s) {
  if (s.empty()) return std::nullopt;
  long long out = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return out;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_ll(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto num = parse_ll(text.substr(0, slash));
  auto den = parse_ll(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return Rational(*num, *den);
}

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace rotkit
