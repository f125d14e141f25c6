#include "fuzzcover/membership.hpp"

#include <charconv>

namespace fuzzcover {

  namespace {
    std::optional<std::int64_t> parse_integer(std::string_view text) {
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        return std::nullopt;
      }
      return value;
    }
  }  // namespace

  std::optional<Rational> parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      auto p = parse_integer(text);
      if (!p) {
        return std::nullopt;
      }
      return Rational(*p);
    }
    auto p = parse_integer(text.substr(0, slash));
    auto q = parse_integer(text.substr(slash + 1));
    if (!p || !q || *q == 0) {
      return std::nullopt;
    }
    return Rational(*p, *q);
  }

  std::string to_string(Rational const& value) {
    if (value.denominator() == 1) {
      return std::to_string(value.numerator());
    }
    return std::to_string(value.numerator()) + "/"
           + std::to_string(value.denominator());
  }

}  // namespace fuzzcover
