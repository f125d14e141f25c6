#include <doctest.h>

#include <numeric>

#include "fuzzcover/cover.hpp"
#include "fuzzcover/inverse_monoid.hpp"
#include "support.hpp"

using namespace fuzzcover;
using support::qs;

namespace {

  // a, b left zeros, 1 adjoined unit
  Table left_zero_with_unit() {
    return {{0, 0, 0}, {1, 1, 1}, {0, 1, 2}};
  }

  bool same_partition(Partition const& p, oracle::Map const& labels) {
    for (std::size_t x = 0; x < labels.size(); ++x) {
      for (std::size_t y = 0; y < labels.size(); ++y) {
        if ((p.class_of[x] == p.class_of[y]) != (labels[x] == labels[y])) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<FiniteInverseMonoid> corpus() {
    std::vector<FiniteInverseMonoid> out;
    auto                             levels = support::default_levels();
    for (std::size_t n = 1; n <= 4; ++n) {
      out.push_back(chain_monoid(std::span<Rational const>(levels).last(n)));
    }
    for (FiniteGroup const& g : groups::all_up_to_order_8()) {
      out.push_back(as_inverse_monoid(g));
    }
    out.push_back(support::symmetric_inverse_monoid_2());
    out.push_back(build_cover(support::z2_example()).monoid());
    out.push_back(build_cover(support::v4_example()).monoid());
    out.push_back(build_cover(support::fuzzy(groups::symmetric3(), {"1", "1/2", "1/2", "1/4", "1/4", "1/4"}))
                      .monoid());
    return out;
  }

  // Restricted growth strings: every partition of {0..n-1}.
  template <typename Visit>
  void all_partitions(std::size_t n, Visit visit) {
    std::vector<std::size_t> label(n, 0);
    auto                     extend = [&](auto& self, std::size_t i, std::size_t used) -> void {
      if (i == n) {
        visit(label);
        return;
      }
      for (std::size_t c = 0; c <= used && c < n; ++c) {
        label[i] = c;
        self(self, i + 1, std::max(used, c + 1));
      }
    };
    label[0] = 0;
    extend(extend, 1, 1);
  }

}  // namespace

TEST_CASE("chain monoid on {1/2, 1}") {
  auto                levels = qs({"1/2", "1"});
  FiniteInverseMonoid m      = chain_monoid(std::span<Rational const>(levels));
  CHECK(m.size() == 2);
  CHECK(m.unit() == 1);
  CHECK(m.name(0) == "1/2");
  for (Element x = 0; x < 2; ++x) {
    CHECK(m.inverse(x) == x);
    CHECK(m.is_idempotent(x));
  }
  CHECK(m.product(0, 1) == 0);
}

TEST_CASE("chain monoid construction errors") {
  auto check_kind = [](std::vector<Rational> values, MonoidErrorKind kind) {
    try {
      chain_monoid(std::span<Rational const>(values));
      FAIL("accepted");
    } catch (MonoidError const& e) {
      CHECK(e.kind() == kind);
    }
  };
  check_kind({}, MonoidErrorKind::empty_chain);
  check_kind(qs({"1/2", "3/2"}), MonoidErrorKind::out_of_range);
  check_kind(qs({"1", "1/2"}), MonoidErrorKind::unsorted);
}

TEST_CASE("chains: trivial, two and three elements") {
  auto one = qs({"1"});
  CHECK(chain_monoid(std::span<Rational const>(one)).size() == 1);
  auto                three = qs({"1/4", "1/2", "1"});
  FiniteInverseMonoid m     = chain_monoid(std::span<Rational const>(three));
  for (Element x = 0; x < 3; ++x) {
    for (Element y = 0; y < 3; ++y) {
      CHECK(m.leq(x, y) == (three[x] <= three[y]));
    }
  }
}

TEST_CASE("groups are inverse monoids with the group inverse") {
  for (FiniteGroup const& g : groups::all_up_to_order_8()) {
    FiniteInverseMonoid m = as_inverse_monoid(g);
    for (Element x = 0; x < g.size(); ++x) {
      CHECK(m.inverse(x) == g.inverse(x));
    }
    CHECK(m.unit() == g.identity());
    CHECK(is_f_inverse(m).is_f_inverse);
    CHECK(is_clifford(m));
  }
}

TEST_CASE("left zeros with a unit have two inverses") {
  try {
    validate_inverse_monoid({"a", "b", "1"}, left_zero_with_unit(), 2);
    FAIL("accepted");
  } catch (MonoidError const& e) {
    CHECK(e.kind() == MonoidErrorKind::non_unique_inverse);
    CHECK(e.witness() == Subset{0, 0, 1});
    CHECK(e.exit_code() == 2);
  }
  CHECK(oracle::inverses_of(left_zero_with_unit(), 0) == oracle::Map{0, 1});
}

TEST_CASE("monoid validation errors") {
  SUBCASE("wrong unit") {
    auto levels = qs({"1/2", "1"});
    Table t     = chain_monoid(std::span<Rational const>(levels)).table();
    try {
      validate_inverse_monoid({"1/2", "1"}, t, 0);
      FAIL("accepted");
    } catch (MonoidError const& e) {
      CHECK(e.kind() == MonoidErrorKind::not_unital);
    }
  }
  SUBCASE("no inverse") {
    // a is nilpotent: a*a = 0, so a*y*a = 0 for every y
    try {
      validate_inverse_monoid({"1", "a", "0"}, {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, 0);
      FAIL("accepted");
    } catch (MonoidError const& e) {
      CHECK(e.kind() == MonoidErrorKind::no_inverse);
      CHECK(e.witness() == Subset{1});
    }
  }
  SUBCASE("not closed") {
    CHECK_THROWS_AS(validate_inverse_monoid({"u", "x"}, {{0, 1}, {1, 7}}, 0), MonoidError);
  }
}

TEST_CASE("F-inverse and Clifford on reference monoids") {
  auto levels = qs({"1/4", "1/2", "1"});
  auto chain  = chain_monoid(std::span<Rational const>(levels));
  auto fi     = is_f_inverse(chain);
  CHECK(fi.is_f_inverse);
  REQUIRE(fi.maxima.size() == 1);
  CHECK(fi.maxima[0] == chain.unit());
  CHECK(is_clifford(chain));

  FiniteInverseMonoid i2 = support::symmetric_inverse_monoid_2();
  CHECK(i2.size() == 7);
  CHECK_FALSE(is_clifford(i2));
  // the empty map collapses sigma to one class with two maximal elements
  CHECK_FALSE(is_f_inverse(i2).is_f_inverse);
}

TEST_CASE("homomorphism predicates on chain maps") {
  auto                levels = qs({"1/2", "1"});
  FiniteInverseMonoid m      = chain_monoid(std::span<Rational const>(levels));
  ElementMap          to_unit{1, 1};
  CHECK(is_monoid_homomorphism(to_unit, m, m));
  CHECK_FALSE(is_idempotent_separating(to_unit, m, m));
  CHECK_FALSE(is_surjective(to_unit, m, m));
  ElementMap id{0, 1};
  CHECK(is_monoid_homomorphism(id, m, m));
  CHECK(is_idempotent_separating(id, m, m));
  CHECK(is_surjective(id, m, m));
}

TEST_CASE("homomorphisms between chains") {
  auto half  = qs({"1/2", "1"});
  auto top   = qs({"1"});
  auto other = qs({"1/4", "1"});
  auto a     = chain_monoid(std::span<Rational const>(half));
  CHECK(enumerate_monoid_homomorphisms(a, chain_monoid(std::span<Rational const>(top))).size() == 1);
  CHECK(enumerate_monoid_homomorphisms(a, chain_monoid(std::span<Rational const>(other)))
        == std::vector<ElementMap>{{0, 1}, {1, 1}});
}

TEST_CASE("derived structure agrees with the brute-force oracles") {
  for (FiniteInverseMonoid const& m : corpus()) {
    Table const t = m.table();
    CAPTURE(m.names());
    for (Element x = 0; x < m.size(); ++x) {
      CHECK(oracle::inverses_of(t, x) == oracle::Map{m.inverse(x)});
    }
    CHECK(natural_order(m) == oracle::natural_order(t));
    CHECK(same_partition(sigma(m).classes, oracle::sigma(t)));
    CHECK(same_partition(green_relations(m).R, oracle::green_r(t)));
    CHECK(same_partition(green_relations(m).L, oracle::green_l(t)));
    CHECK(same_partition(green_relations(m).H, oracle::green_h(t)));
    CHECK(oracle::is_group(sigma(m).quotient.table()));
    for (Element x = 0; x < m.size(); ++x) {
      CHECK(sigma(m).projection[x] == sigma(m).classes.class_of[x]);
    }
  }
}

TEST_CASE("natural order on idempotents is ef = e") {
  for (FiniteInverseMonoid const& m : corpus()) {
    for (Element e : m.derived().idempotents) {
      for (Element f : m.derived().idempotents) {
        CHECK(m.leq(e, f) == (m.product(e, f) == e));
      }
    }
  }
}

TEST_CASE("Clifford monoids have H = R") {
  for (FiniteInverseMonoid const& m : corpus()) {
    if (is_clifford(m)) {
      CHECK(same_partition(green_relations(m).H, green_relations(m).R.class_of));
    }
  }
}

TEST_CASE("F-inverse maxima are greatest in their class") {
  for (FiniteInverseMonoid const& m : corpus()) {
    auto result = is_f_inverse(m);
    auto const& classes = sigma(m).classes.classes;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      std::size_t greatest = 0;
      for (Element x : classes[c]) {
        greatest += std::all_of(classes[c].begin(), classes[c].end(), [&](Element y) { return m.leq(y, x); });
      }
      CHECK(result.maxima[c].has_value() == (greatest == 1));
    }
  }
}

TEST_CASE("sigma is the smallest group congruence") {
  for (FiniteInverseMonoid const& m : corpus()) {
    if (m.size() > 6) {
      continue;
    }
    Table const t = m.table();
    CAPTURE(m.names());
    std::size_t group_congruences = 0;
    all_partitions(m.size(), [&](std::vector<std::size_t> const& label) {
      for (Element x = 0; x < m.size(); ++x) {
        for (Element y = 0; y < m.size(); ++y) {
          if (label[x] != label[y]) {
            continue;
          }
          for (Element z = 0; z < m.size(); ++z) {
            if (label[t[x][z]] != label[t[y][z]] || label[t[z][x]] != label[t[z][y]]) {
              return;
            }
          }
        }
      }
      std::size_t k = *std::max_element(label.begin(), label.end()) + 1;
      oracle::Table quotient(k, std::vector<std::size_t>(k));
      for (Element x = 0; x < m.size(); ++x) {
        for (Element y = 0; y < m.size(); ++y) {
          quotient[label[x]][label[y]] = label[t[x][y]];
        }
      }
      if (!oracle::is_group(quotient)) {
        return;
      }
      ++group_congruences;
      for (Element x = 0; x < m.size(); ++x) {
        for (Element y = 0; y < m.size(); ++y) {
          if (sigma(m).classes.class_of[x] == sigma(m).classes.class_of[y]) {
            CHECK(label[x] == label[y]);
          }
        }
      }
    });
    CHECK(group_congruences >= 1);
  }
}

TEST_CASE("monoid homomorphisms agree with brute force and preserve inverses") {
  auto ms = corpus();
  for (FiniteInverseMonoid const& s : ms) {
    for (FiniteInverseMonoid const& t : ms) {
      if (s.size() > 5 || t.size() > 7) {
        continue;
      }
      auto found = enumerate_monoid_homomorphisms(s, t);
      CHECK(found == oracle::homomorphisms(s.table(), t.table(), true));
      for (ElementMap const& f : found) {
        for (Element x = 0; x < s.size(); ++x) {
          CHECK(f[s.inverse(x)] == t.inverse(f[x]));
        }
      }
    }
  }
}

TEST_CASE("homomorphism filters") {
  FiniteInverseMonoid cover = build_cover(support::v4_example()).monoid();
  auto                levels = qs({"1/4", "1/2", "1"});
  FiniteInverseMonoid chain  = chain_monoid(std::span<Rational const>(levels));
  auto                all    = enumerate_monoid_homomorphisms(cover, chain);

  HomomorphismFilter filter;
  filter.idempotent_separating = true;
  filter.surjective            = true;
  filter.preserve_sigma_maxima = true;
  auto filtered = enumerate_monoid_homomorphisms(cover, chain, filter);
  std::vector<ElementMap> expected;
  for (ElementMap const& f : all) {
    if (is_idempotent_separating(f, cover, chain) && is_surjective(f, cover, chain)
        && preserves_sigma_maxima(f, cover, chain)) {
      expected.push_back(f);
    }
  }
  CHECK(filtered == expected);
  // the projection sends (1/4, b), a sigma maximum, below the top
  ElementMap const phi = build_cover(support::v4_example()).projection();
  CHECK(std::find(filtered.begin(), filtered.end(), phi) == filtered.end());
  filter.preserve_sigma_maxima = false;
  auto onto = enumerate_monoid_homomorphisms(cover, chain, filter);
  CHECK(std::find(onto.begin(), onto.end(), phi) != onto.end());
}

TEST_CASE("chain maps: order and top preserving iff monoid homomorphism") {
  auto levels = support::default_levels();
  for (std::size_t a = 1; a <= 4; ++a) {
    for (std::size_t b = 1; b <= 4; ++b) {
      auto from = chain_monoid(std::span<Rational const>(levels).last(a));
      auto to   = chain_monoid(std::span<Rational const>(levels).last(b));
      std::size_t agreeing = 0;
      oracle::all_maps(a, b, [&](oracle::Map const& f) {
        bool monotone = f[a - 1] == b - 1;
        for (std::size_t i = 0; i + 1 < a; ++i) {
          monotone = monotone && f[i] <= f[i + 1];
        }
        CHECK(monotone == is_monoid_homomorphism(f, from, to));
        agreeing += monotone;
      });
      CHECK(agreeing == oracle::chain_maps(a, b).size());
    }
  }
}
