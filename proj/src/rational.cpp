#include "ncg/rational.hpp"

#include <charconv>

namespace ncg {

std::string to_string(const Rat& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) {
    s += '/';
    s += std::to_string(r.denominator());
  }
  return s;
}

namespace {

long long parse_ll(std::string_view text) {
  long long out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("bad integer: '" + std::string(text) + "'");
  return out;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_ll(text));
  long long num = parse_ll(text.substr(0, slash));
  long long den = parse_ll(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in rational");
  return Rat(num, den);
}

std::string Cost::str() const {
  switch (kind_) {
    case Kind::PosInf: return "inf";
    case Kind::NegInf: return "-inf";
    default: return to_string(value_);
  }
}

}  // namespace ncg
