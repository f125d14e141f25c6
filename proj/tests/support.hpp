#pragma once

#include <algorithm>
#include <array>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "fuzzcover/embedding.hpp"
#include "fuzzcover/fuzzy_subgroup.hpp"
#include "fuzzcover/group.hpp"
#include "oracles.hpp"

namespace support {

  using namespace fuzzcover;

  inline Rational q(std::string const& text) {
    return *parse_rational(text);
  }

  inline std::vector<Rational> qs(std::initializer_list<char const*> texts) {
    std::vector<Rational> out;
    for (char const* t : texts) {
      out.push_back(q(t));
    }
    return out;
  }

  inline FuzzySubgroup fuzzy(FiniteGroup const& g, std::initializer_list<char const*> values) {
    return validate_fuzzy(g, qs(values));
  }

  inline FuzzyRef ref(FuzzySubgroup f) {
    return std::make_shared<FuzzySubgroup const>(std::move(f));
  }

  // mu(e) = 1, mu(a) = 1/2
  inline FuzzySubgroup z2_example() {
    return fuzzy(groups::cyclic(2), {"1", "1/2"});
  }

  // mu(e) = 1, mu(a) = 1/2, mu(b) = mu(c) = 1/4
  inline FuzzySubgroup v4_example() {
    return fuzzy(groups::klein_four(), {"1", "1/2", "1/4", "1/4"});
  }

  inline std::vector<oracle::Q> oracle_values(std::vector<Rational> const& values) {
    std::vector<oracle::Q> out;
    for (auto const& v : values) {
      out.emplace_back(v.numerator(), v.denominator());
    }
    return out;
  }

  inline std::vector<Rational> default_levels() {
    return qs({"1/4", "1/2", "3/4", "1"});
  }

  // Small groups used across suites.
  inline std::vector<FiniteGroup> small_groups() {
    return {groups::cyclic(2),
            groups::cyclic(3),
            groups::cyclic(4),
            groups::klein_four(),
            groups::symmetric3()};
  }

  // Partial injections of {0, 1}; -1 marks an undefined point. x*y applies x
  // first.
  inline FiniteInverseMonoid symmetric_inverse_monoid_2() {
    std::vector<std::array<int, 2>> maps;
    for (int a = -1; a < 2; ++a) {
      for (int b = -1; b < 2; ++b) {
        if (a < 0 || b < 0 || a != b) {
          maps.push_back({a, b});
        }
      }
    }
    auto index = [&](std::array<int, 2> m) {
      return static_cast<Element>(std::find(maps.begin(), maps.end(), m) - maps.begin());
    };
    std::vector<std::string> names;
    Table                    table;
    for (auto const& x : maps) {
      names.push_back(std::to_string(x[0]) + std::to_string(x[1]));
      std::vector<Element> row;
      for (auto const& y : maps) {
        std::array<int, 2> xy{};
        for (int p = 0; p < 2; ++p) {
          xy[p] = x[p] < 0 ? -1 : y[x[p]];
        }
        row.push_back(index(xy));
      }
      table.push_back(row);
    }
    return validate_inverse_monoid(names, table, index({0, 1}));
  }

}  // namespace support
