#include "tflab/rational.hpp"

#include <cctype>
#include <charconv>

namespace tflab {

std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) {
    s += '/';
    s += std::to_string(r.denominator());
  }
  return s;
}

std::optional<Rational> parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view& sv) -> std::optional<long long> {
    long long value = 0;
    auto [ptr, ec] =
        std::from_chars(sv.data(), sv.data() + sv.size(), value, 10);
    if (ec != std::errc() || ptr == sv.data()) return std::nullopt;
    sv.remove_prefix(size_t(ptr - sv.data()));
    return value;
  };
  std::string_view sv = text;
  auto num = parse_int(sv);
  if (!num) return std::nullopt;
  if (sv.empty()) return Rational(*num);
  if (sv.front() != '/') return std::nullopt;
  sv.remove_prefix(1);
  if (!sv.empty() && sv.front() == '-') return std::nullopt;
  auto den = parse_int(sv);
  if (!den || !sv.empty() || *den == 0) return std::nullopt;
  return Rational(*num, *den);
}

}  // namespace tflab
