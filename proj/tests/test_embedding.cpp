#include <doctest.h>

#include <algorithm>

#include "fuzzcover/embedding.hpp"
#include "fuzzcover/enumeration.hpp"
#include "support.hpp"

using namespace fuzzcover;
using support::fuzzy;
using support::ref;

namespace {

  MorphismErrorKind fg_error(FuzzyRef s, FuzzyRef t, ElementMap f, ElementMap lambda) {
    try {
      validate_fg_morphism(s, t, f, lambda);
    } catch (MorphismError const& e) {
      return e.kind();
    }
    FAIL("accepted");
    return MorphismErrorKind::shape;
  }

  MorphismErrorKind fc_error(FCRef s, FCRef t, ElementMap fstar, ElementMap lambda, Subset* witness = nullptr) {
    try {
      validate_fc_morphism(s, t, fstar, lambda);
    } catch (MorphismError const& e) {
      if (witness) {
        *witness = e.witness();
      }
      return e.kind();
    }
    FAIL("accepted");
    return MorphismErrorKind::shape;
  }

}  // namespace

TEST_CASE("FG morphisms") {
  FuzzyRef z2  = ref(support::z2_example());
  FuzzyRef one = ref(fuzzy(groups::cyclic(2), {"1", "1"}));

  FGMorphism id = identity_fg(z2);
  CHECK(id.f == ElementMap{0, 1});
  CHECK(id.lambda == ElementMap{0, 1});

  FGMorphism collapse = validate_fg_morphism(z2, one, {0, 0}, {0, 0});
  CHECK(collapse.lambda == ElementMap{0, 0});

  SUBCASE("commutation failure names the element") {
    FuzzyRef quarter = ref(fuzzy(groups::cyclic(2), {"1", "1/4"}));
    try {
      validate_fg_morphism(z2, quarter, {0, 1}, {1, 1});
      FAIL("accepted");
    } catch (MorphismError const& e) {
      CHECK(e.kind() == MorphismErrorKind::commutation_failure);
      CHECK(e.witness() == Subset{1});
      CHECK(std::string(e.what()).find("commutation fails at a") != std::string::npos);
    }
    CHECK_NOTHROW(validate_fg_morphism(z2, quarter, {0, 1}, {0, 1}));
  }
  SUBCASE("other defects") {
    FuzzyRef v4 = ref(support::v4_example());
    CHECK(fg_error(z2, z2, {1, 0}, {0, 1}) == MorphismErrorKind::not_group_hom);
    CHECK(fg_error(v4, v4, {0, 1, 2, 3}, {1, 0, 2}) == MorphismErrorKind::not_order_preserving);
    CHECK(fg_error(v4, v4, {0, 1, 2, 3}, {0, 0, 0}) == MorphismErrorKind::top_not_preserved);
    CHECK(fg_error(z2, z2, {0}, {0, 1}) == MorphismErrorKind::shape);
    CHECK(fg_error(z2, z2, {0, 1}, {0, 2}) == MorphismErrorKind::shape);
  }
  SUBCASE("composition") {
    CHECK(compose_fg(collapse, id) == collapse);
    CHECK(compose_fg(identity_fg(one), collapse) == collapse);
    try {
      compose_fg(collapse, collapse);
      FAIL("accepted");
    } catch (MorphismError const& e) {
      CHECK(e.kind() == MorphismErrorKind::not_composable);
    }
  }
}

TEST_CASE("omega on objects") {
  FCRef z2 = omega_object(ref(support::z2_example()));
  CHECK(z2->cover.size() == 3);
  CHECK(z2->base.size() == 2);

  FCRef one = omega_object(ref(fuzzy(groups::cyclic(2), {"1", "1"})));
  CHECK(one->base.size() == 1);
  CHECK(monoid_isomorphic(one->cover, as_inverse_monoid(groups::cyclic(2))));

  FCRef v4 = omega_object(ref(support::v4_example()));
  CHECK(v4->cover.size() == 7);
  CHECK(v4->base.size() == 3);

  CHECK_NOTHROW(make_fc_object(z2->cover, z2->base, z2->phi));
  CHECK_THROWS_AS(make_fc_object(z2->cover, z2->base, ElementMap{1, 1, 1}), CoverError);
}

TEST_CASE("FC morphisms") {
  FCRef z2 = omega_object(ref(support::z2_example()));
  FCRef v4 = omega_object(ref(support::v4_example()));

  FCMorphism id = identity_fc(z2);
  CHECK(id.fstar == ElementMap{0, 1, 2});

  SUBCASE("commutation failure") {
    Subset witness;
    CHECK(fc_error(z2, z2, {0, 1, 2}, {1, 1}, &witness) == MorphismErrorKind::commutation_failure);
    CHECK(witness == Subset{0});
  }
  SUBCASE("a class maximum sent below its class maximum") {
    // (1/2,e) -> (1/4,e), (1,e) -> (1,e), (1/2,a) -> (1/4,a)
    ElementMap fstar{0, 2, 3};
    CHECK(is_monoid_homomorphism(fstar, z2->cover, v4->cover));
    Subset witness;
    CHECK(fc_error(z2, v4, fstar, {0, 2}, &witness) == MorphismErrorKind::maximum_not_preserved);
    CHECK(witness == Subset{2});
  }
  SUBCASE("not a homomorphism") {
    CHECK(fc_error(z2, z2, {2, 1, 2}, {0, 1}) == MorphismErrorKind::not_monoid_hom);
    CHECK(fc_error(z2, z2, {0, 1, 2}, {1, 0}) == MorphismErrorKind::not_monoid_hom);
  }
  SUBCASE("composition") {
    CHECK(compose_fc(id, id) == id);
    CHECK_THROWS_AS(compose_fc(identity_fc(v4), id), MorphismError);
  }
}

TEST_CASE("omega on morphisms") {
  FuzzyRef   z2  = ref(support::z2_example());
  FuzzyRef   one = ref(fuzzy(groups::cyclic(2), {"1", "1"}));
  FGMorphism collapse = validate_fg_morphism(z2, one, {0, 0}, {0, 0});

  FCMorphism image = omega_morphism(collapse);
  // every pair goes to (1, e)
  CHECK(image.fstar == ElementMap{0, 0, 0});
  CHECK(image.lambda == collapse.lambda);
  CHECK(image.target->cover.name(0) == "(1,e)");

  CHECK(omega_morphism(identity_fg(z2)) == identity_fc(omega_object(z2)));

  FCRef s = omega_object(z2), t = omega_object(one);
  try {
    omega_morphism(collapse, t, s);
    FAIL("accepted");
  } catch (MorphismError const& e) {
    CHECK(e.kind() == MorphismErrorKind::not_omega_image);
  }
}

TEST_CASE("reconstruction inverts omega") {
  FuzzyRef z2 = ref(support::z2_example());
  FCRef    s  = omega_object(z2);
  CHECK(reconstruct_fullness(identity_fc(s)) == identity_fg(z2));

  std::vector<FuzzyRef> objects;
  for (FiniteGroup const& g : {groups::cyclic(2), groups::cyclic(4), groups::klein_four()}) {
    for (FuzzySubgroup& f : enumerate_fuzzy_subgroups_filter(g, ValueGrid::make(support::qs({"1/3", "2/3", "1"})))) {
      objects.push_back(ref(std::move(f)));
    }
  }
  std::size_t round_trips = 0;
  for (std::size_t i = 0; i < objects.size(); i += 2) {
    for (std::size_t j = 1; j < objects.size(); j += 3) {
      FCRef a = omega_object(objects[i]);
      FCRef b = omega_object(objects[j]);
      for (FGMorphism const& m : enumerate_fg_morphisms(objects[i], objects[j])) {
        CHECK(reconstruct_fullness(omega_morphism(m, a, b)) == m);
        ++round_trips;
      }
      for (FCMorphism const& c : enumerate_fc_morphisms(a, b)) {
        CHECK(omega_morphism(reconstruct_fullness(c), a, b) == c);
      }
    }
  }
  CHECK(round_trips > 100);

  FCRef plain = make_fc_object(s->cover, s->base, s->phi);
  CHECK_THROWS_AS(reconstruct_fullness(identity_fc(plain)), MorphismError);
}

TEST_CASE("embedding certificates") {
  FuzzyRef z2      = ref(support::z2_example());
  FuzzyRef v4      = ref(support::v4_example());
  FuzzyRef trivial = ref(fuzzy(groups::trivial(), {"1"}));

  EmbeddingCertificate self = verify_embedding(z2, z2);
  CHECK(self.ok());
  CHECK(self.fg_hom_count == 2);
  CHECK(self.fc_hom_count == 2);
  CHECK(self.composition_checks > 0);

  EmbeddingCertificate to_trivial = verify_embedding(v4, trivial);
  CHECK(to_trivial.ok());
  CHECK(to_trivial.fg_hom_count == 1);
  CHECK(to_trivial.fc_hom_count == 1);

  EmbeddingCertificate across = verify_embedding(z2, v4);
  CHECK(across.ok());
  CHECK(across.fg_hom_count == 4);
  std::vector<std::size_t> positions = across.omega_index;
  std::sort(positions.begin(), positions.end());
  CHECK(positions == std::vector<std::size_t>{0, 1, 2, 3});
  for (std::size_t j = 0; j < across.fullness_index.size(); ++j) {
    CHECK(across.omega_index[across.fullness_index[j]] == j);
  }

  EmbeddingCertificate back = verify_embedding(v4, z2);
  CHECK(back.ok());
}

TEST_CASE("omega on chains sends top to top") {
  FuzzyRef v4 = ref(support::v4_example());
  FCRef    a  = omega_object(v4);
  for (FGMorphism const& m : enumerate_fg_morphisms(v4, v4)) {
    FCMorphism c = omega_morphism(m, a, a);
    CHECK(c.lambda.back() == a->base.unit());
    CHECK(c.lambda == m.lambda);
  }
}

TEST_CASE("describe writes maps out by name") {
  FuzzyRef   z2  = ref(support::z2_example());
  FuzzyRef   one = ref(fuzzy(groups::cyclic(2), {"1", "1"}));
  FGMorphism collapse = validate_fg_morphism(z2, one, {0, 0}, {0, 0});
  CHECK(describe(collapse) == "f=[e->e,a->e] lambda=[1/2->1,1->1]");
  CHECK(describe(omega_morphism(collapse))
        == "f*=[(1/2,e)->(1,e),(1,e)->(1,e),(1/2,a)->(1,e)] lambda=[1/2->1,1->1]");
}
