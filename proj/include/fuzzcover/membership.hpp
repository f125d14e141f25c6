#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace fuzzcover {

  using Rational = boost::rational<std::int64_t>;

  // Parses "p/q" or an integer "p". Returns nullopt on malformed input or a
  // zero denominator.
  std::optional<Rational> parse_rational(std::string_view text);

  std::string to_string(Rational const& value);

  // An exact membership degree in [0, 1], always in lowest terms.
  class MembershipValue {
   public:
    // nullopt when `value` lies outside [0, 1].
    static std::optional<MembershipValue> make(Rational value) {
      if (value < 0 || value > 1) {
        return std::nullopt;
      }
      return MembershipValue(value);
    }

    static MembershipValue one() {
      return MembershipValue(Rational(1));
    }

    Rational const& value() const noexcept {
      return _value;
    }

    std::int64_t numerator() const noexcept {
      return _value.numerator();
    }

    std::int64_t denominator() const noexcept {
      return _value.denominator();
    }

    std::string to_string() const {
      return fuzzcover::to_string(_value);
    }

    bool operator==(MembershipValue const&) const = default;

    std::strong_ordering operator<=>(MembershipValue const& that) const {
      if (_value < that._value) {
        return std::strong_ordering::less;
      }
      if (that._value < _value) {
        return std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
    }

   private:
    explicit MembershipValue(Rational value) : _value(value) {}

    Rational _value;
  };

}  // namespace fuzzcover
