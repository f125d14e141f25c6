#include <doctest.h>

#include <numeric>

#include "fuzzcover/cover.hpp"
#include "fuzzcover/enumeration.hpp"
#include "support.hpp"

using namespace fuzzcover;
using support::fuzzy;
using support::qs;

namespace {

  FiniteInverseMonoid permuted(FiniteInverseMonoid const& m, ElementMap const& perm) {
    std::vector<std::string> names(m.size());
    Table                    table(m.size(), std::vector<Element>(m.size()));
    for (Element x = 0; x < m.size(); ++x) {
      names[perm[x]] = m.name(x);
      for (Element y = 0; y < m.size(); ++y) {
        table[perm[x]][perm[y]] = perm[m.product(x, y)];
      }
    }
    return validate_inverse_monoid(names, table, perm[m.unit()]);
  }

  FiniteInverseMonoid chain_of(std::initializer_list<char const*> values) {
    auto levels = qs(values);
    return chain_monoid(std::span<Rational const>(levels));
  }

  std::vector<FuzzySubgroup> instances() {
    std::vector<FuzzySubgroup> out;
    for (FiniteGroup const& g : support::small_groups()) {
      for (FuzzySubgroup& f : enumerate_fuzzy_subgroups_filter(g, ValueGrid::default_grid())) {
        out.push_back(std::move(f));
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("cover of the Z2 example") {
  CoverMonoid c = build_cover(support::z2_example());
  CHECK(c.size() == 3);
  CHECK(c.monoid().names() == std::vector<std::string>{"(1/2,e)", "(1,e)", "(1/2,a)"});
  CHECK(c.monoid().unit() == 1);
  CHECK(c.pairs() == std::vector<CoverPair>{{0, 0}, {1, 0}, {0, 1}});
  CHECK(c.projection() == ElementMap{0, 1, 0});
  CHECK(c.index_of(1, 1) == std::nullopt);
  CHECK(c.index_of(0, 1) == 2);
  CHECK(c.monoid().table() == oracle::cover(groups::cyclic(2).table(), support::oracle_values(qs({"1", "1/2"}))).table);
}

TEST_CASE("cover of the V4 example") {
  CoverMonoid c = build_cover(support::v4_example());
  CHECK(c.size() == 7);
  std::vector<std::size_t> over(4, 0);
  for (CoverPair const& p : c.pairs()) {
    ++over[p.element];
  }
  CHECK(over == std::vector<std::size_t>{3, 2, 1, 1});
}

TEST_CASE("constant one gives the group back") {
  for (FiniteGroup const& g : support::small_groups()) {
    std::vector<Rational> ones(g.size(), Rational(1));
    CoverMonoid           c = build_cover(validate_fuzzy(g, ones));
    CHECK(c.size() == g.size());
    CHECK(monoid_isomorphic(c.monoid(), as_inverse_monoid(g)));
  }
}

TEST_CASE("cover reports") {
  CoverReport z2 = cover_report(build_cover(support::z2_example()));
  CHECK(z2.consistent());
  CHECK(z2.idempotents == Subset{0, 1});
  CHECK(z2.unit == 1);
  CHECK(z2.sigma_maxima == std::vector<Element>{1, 2});
  CHECK(z2.strict_order == std::vector<std::pair<Element, Element>>{{0, 1}});
  CHECK(z2.f_inverse);
  CHECK(z2.clifford);

  CoverReport trivial = cover_report(build_cover(fuzzy(groups::trivial(), {"1"})));
  CHECK(trivial.consistent());
  CHECK(trivial.idempotents == Subset{0});
  CHECK(trivial.sigma.classes.size() == 1);

  // a nontrivial group under a constant value: sigma is the equality relation
  CoverReport constant = cover_report(build_cover(fuzzy(groups::cyclic(3), {"1", "1", "1"})));
  CHECK(constant.idempotents == Subset{0});
  CHECK(constant.sigma.classes.size() == 3);
}

TEST_CASE("closed forms and certification on every enumerated instance") {
  for (FuzzySubgroup const& f : instances()) {
    CAPTURE(f.values());
    CoverMonoid const c = build_cover(f);
    FiniteGroup const& g = f.group();

    auto oracle_cover = oracle::cover(g.table(), support::oracle_values(f.values()));
    CHECK(c.monoid().table() == oracle_cover.table);

    std::size_t expected_size = 0;
    for (Element x = 0; x < g.size(); ++x) {
      expected_size += f.level(x) + 1;
    }
    CHECK(c.size() == expected_size);

    CoverReport r = cover_report(c);
    CHECK(r.consistent());
    CHECK(r.f_inverse);
    CHECK(r.clifford);
    CHECK(r.green_H == r.green_R);
    CHECK(r.unit == *c.index_of(f.level(g.identity()), g.identity()));

    FiniteInverseMonoid const& m = c.monoid();
    for (Element i = 0; i < m.size(); ++i) {
      CoverPair p = c.pairs()[i];
      CHECK(m.is_idempotent(i) == (p.element == g.identity()));
      CHECK(r.sigma_maxima[r.sigma.class_of[i]] == *c.index_of(f.level(p.element), p.element));
      for (Element j = 0; j < m.size(); ++j) {
        CoverPair s = c.pairs()[j];
        CHECK(m.leq(i, j) == (p.element == s.element && p.level <= s.level));
        CHECK((r.sigma.class_of[i] == r.sigma.class_of[j]) == (p.element == s.element));
      }
    }
    CHECK(is_monoid_homomorphism(c.projection(), m, c.chain()));
    CHECK(is_surjective(c.projection(), m, c.chain()));
    CHECK(is_idempotent_separating(c.projection(), m, c.chain()));
    CHECK(monoid_isomorphic(as_inverse_monoid(sigma(m).quotient), as_inverse_monoid(g)));
  }
}

TEST_CASE("H-classes of idempotents are the level subsets") {
  CoverMonoid c    = build_cover(support::z2_example());
  auto        half = c.source().chain()[0];
  auto        top  = c.source().chain()[1];

  HClassIsomorphism low = hclass_level_isomorphism(c, half);
  CHECK(low.idempotent == 0);
  CHECK(low.h_class == Subset{0, 2});
  CHECK(low.level_subset == Subset{0, 1});
  CHECK(low.to_group == ElementMap{0, 1});

  HClassIsomorphism high = hclass_level_isomorphism(c, top);
  CHECK(high.h_class == Subset{1});
  CHECK(high.level_subset == Subset{0});

  for (FuzzySubgroup const& f : instances()) {
    CoverMonoid const c2 = build_cover(f);
    for (auto const& u : f.chain()) {
      HClassIsomorphism iso = hclass_level_isomorphism(c2, u);
      CHECK(iso.h_class.size() == iso.level_subset.size());
      CHECK(is_subgroup(f.group(), iso.level_subset));
      CHECK(iso.level_subset == level_subset(f, u));
    }
  }
}

TEST_CASE("construction from a dual premorphism") {
  SUBCASE("the Z2 example reproduces the cover table") {
    DualPremorphism      d = as_dual_premorphism(support::z2_example());
    DualPremorphismCover t = theorem_r1_construct(d.psi, groups::cyclic(2), d.chain);
    CHECK(t.monoid.table() == build_cover(support::z2_example()).monoid().table());
    CHECK(t.monoid.unit() == build_cover(support::z2_example()).monoid().unit());
  }
  SUBCASE("trivial group into the trivial monoid") {
    DualPremorphismCover t = theorem_r1_construct(ElementMap{0}, groups::trivial(), chain_of({"1"}));
    CHECK(t.monoid.size() == 1);
  }
  SUBCASE("constant top map covers everything below it") {
    DualPremorphismCover t = theorem_r1_construct(ElementMap{1, 1}, groups::cyclic(2), chain_of({"1/2", "1"}));
    CHECK(t.monoid.size() == 4);
  }
  SUBCASE("coverage failure") {
    try {
      theorem_r1_construct(ElementMap{0, 0}, groups::cyclic(2), as_inverse_monoid(groups::cyclic(2)));
      FAIL("accepted");
    } catch (CoverError const& e) {
      CHECK(e.kind() == CoverErrorKind::coverage_failure);
      CHECK(e.witness() == Subset{1});
    }
  }
  SUBCASE("not a dual premorphism") {
    try {
      theorem_r1_construct(ElementMap{0, 1}, groups::cyclic(2), chain_of({"1/2", "1"}));
      FAIL("accepted");
    } catch (CoverError const& e) {
      CHECK(e.kind() == CoverErrorKind::not_dual_premorphism);
    }
  }
  SUBCASE("a non-chain monoid: sigma maxima of the V4 cover") {
    CoverMonoid c = build_cover(support::v4_example());
    ElementMap  psi;
    for (Element x = 0; x < 4; ++x) {
      psi.push_back(*c.index_of(c.source().level(x), x));
    }
    DualPremorphismCover t = theorem_r1_construct(psi, groups::klein_four(), c.monoid());
    CHECK(t.monoid.size() == 7);
    CHECK(monoid_isomorphic(t.monoid, c.monoid()));
  }
}

TEST_CASE("recovering the dual premorphism from a cover") {
  SUBCASE("exact recovery on every enumerated instance") {
    for (FuzzySubgroup const& f : instances()) {
      CoverMonoid const    c   = build_cover(f);
      RecoveredPremorphism rec = cover_to_dual_premorphism(c.monoid(), c.chain(), c.projection());
      Partition const&     cls = sigma(c.monoid()).classes;
      for (Element x = 0; x < f.group().size(); ++x) {
        CHECK(rec.psi[cls.class_of[*c.index_of(0, x)]] == f.level(x));
      }
      CHECK(rec.rebuilt.monoid.size() == c.size());
    }
  }
  SUBCASE("a group over the trivial monoid") {
    FiniteInverseMonoid  s3 = as_inverse_monoid(groups::symmetric3());
    RecoveredPremorphism rec =
        cover_to_dual_premorphism(s3, chain_of({"1"}), ElementMap(6, 0));
    CHECK(rec.psi == ElementMap(6, 0));
    CHECK(monoid_isomorphic(rec.rebuilt.monoid, s3));
  }
  SUBCASE("V4 round trip") {
    CoverMonoid          c   = build_cover(support::v4_example());
    RecoveredPremorphism rec = cover_to_dual_premorphism(c.monoid(), c.chain(), c.projection());
    CHECK(is_monoid_homomorphism(rec.isomorphism, rec.rebuilt.monoid, c.monoid()));
    CHECK(oracle::isomorphism_count(rec.rebuilt.monoid.table(), c.monoid().table()) > 0);
  }
  SUBCASE("rejected inputs") {
    auto kind_of = [](auto&& run) {
      try {
        run();
      } catch (CoverError const& e) {
        return e.kind();
      }
      FAIL("accepted");
      return CoverErrorKind::coverage_failure;
    };
    auto z2_cover = [] {
      CoverMonoid c = build_cover(support::z2_example());
      return c.monoid();
    };
    CHECK(kind_of([] {
            // sigma has one class in which i and t are both maximal
            FiniteInverseMonoid m = support::symmetric_inverse_monoid_2();
            cover_to_dual_premorphism(m, chain_of({"1"}), ElementMap(7, 0));
          })
          == CoverErrorKind::not_f_inverse);
    CHECK(kind_of([&] {
            cover_to_dual_premorphism(z2_cover(), chain_of({"1/2", "1"}), ElementMap{1, 0, 1});
          })
          == CoverErrorKind::not_homomorphism);
    CHECK(kind_of([] {
            cover_to_dual_premorphism(chain_of({"1/2", "1"}), chain_of({"1"}), ElementMap{0, 0});
          })
          == CoverErrorKind::not_idempotent_separating);
    CHECK(kind_of([] {
            cover_to_dual_premorphism(as_inverse_monoid(groups::cyclic(2)), chain_of({"1/2", "1"}),
                                      ElementMap{1, 1});
          })
          == CoverErrorKind::not_surjective);
  }
}

TEST_CASE("monoid isomorphism search") {
  CoverMonoid c = build_cover(support::z2_example());
  auto        same = monoid_isomorphic(c.monoid(), c.monoid());
  REQUIRE(same);
  CHECK(*same == ElementMap{0, 1, 2});

  CHECK_FALSE(monoid_isomorphic(chain_of({"1/2", "1"}), as_inverse_monoid(groups::cyclic(2))));

  ElementMap perm{2, 0, 1};
  auto       found = monoid_isomorphic(c.monoid(), permuted(c.monoid(), perm));
  REQUIRE(found);
  CHECK(*found == perm);

  CHECK_FALSE(monoid_isomorphic(as_inverse_monoid(groups::cyclic(4)), as_inverse_monoid(groups::klein_four())));
}

TEST_CASE("isomorphism search agrees with the permutation oracle") {
  std::vector<FiniteInverseMonoid> ms;
  for (FuzzySubgroup const& f : instances()) {
    if (f.group().size() <= 4) {
      ms.push_back(build_cover(f).monoid());
    }
  }
  std::size_t compared = 0;
  for (std::size_t i = 0; i < ms.size(); i += 3) {
    for (std::size_t j = 0; j < ms.size(); j += 5) {
      if (ms[i].size() != ms[j].size() || ms[i].size() > 8) {
        continue;
      }
      ++compared;
      CHECK(monoid_isomorphic(ms[i], ms[j]).has_value()
            == (oracle::isomorphism_count(ms[i].table(), ms[j].table()) > 0));
    }
  }
  CHECK(compared > 20);
}

TEST_CASE("isomorphism search respects its budget") {
  FiniteInverseMonoid q8 = as_inverse_monoid(groups::quaternion8());
  ElementMap          perm{0, 2, 3, 1, 4, 6, 7, 5};
  CHECK_THROWS_AS(monoid_isomorphic(q8, permuted(q8, perm), 2), BudgetExceeded);
  CHECK(monoid_isomorphic(q8, permuted(q8, perm)));
}
