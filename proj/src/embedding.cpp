#include "fuzzcover/embedding.hpp"

#include <algorithm>

#include "fuzzcover/enumeration.hpp"

namespace fuzzcover {

  namespace {

    bool same_object(FuzzyRef const& a, FuzzyRef const& b) {
      return a == b || (a && b && *a == *b);
    }

    bool same_object(FCRef const& a, FCRef const& b) {
      return a == b
             || (a && b && a->cover == b->cover && a->base == b->base
                 && a->phi == b->phi);
    }

    bool in_range(ElementMap const& map, std::size_t from, std::size_t to) {
      return map.size() == from
             && std::all_of(map.begin(), map.end(), [&](Element y) { return y < to; });
    }

    std::string map_table(ElementMap const&               map,
                          std::vector<std::string> const& from,
                          std::vector<std::string> const& to) {
      std::string out = "[";
      for (Element x = 0; x < map.size(); ++x) {
        out += (x ? "," : "") + from[x] + "->" + to[map[x]];
      }
      return out + "]";
    }

    std::vector<std::string> chain_names(FuzzySubgroup const& fuzzy) {
      std::vector<std::string> names;
      for (auto const& u : fuzzy.chain()) {
        names.push_back(u.to_string());
      }
      return names;
    }

    bool is_class_maximum(FiniteInverseMonoid const& m, Element x) {
      auto const& top = m.derived().sigma_maxima[m.derived().sigma.projection[x]];
      return top && *top == x;
    }

    void certify_fc_object(FCObject const& object) {
      if (!is_f_inverse(object.cover).is_f_inverse) {
        throw CoverError(CoverErrorKind::not_f_inverse, {}, "T is not F-inverse");
      }
      if (!is_monoid_homomorphism(object.phi, object.cover, object.base)) {
        throw CoverError(CoverErrorKind::not_homomorphism,
                         {},
                         "phi is not a monoid homomorphism");
      }
      if (!is_surjective(object.phi, object.cover, object.base)) {
        throw CoverError(CoverErrorKind::not_surjective, {}, "phi is not surjective");
      }
      if (!is_idempotent_separating(object.phi, object.cover, object.base)) {
        throw CoverError(CoverErrorKind::not_idempotent_separating,
                         {},
                         "phi is not idempotent separating");
      }
    }

  }  // namespace

  bool FGMorphism::operator==(FGMorphism const& that) const {
    return f == that.f && lambda == that.lambda
           && same_object(source, that.source) && same_object(target, that.target);
  }

  bool FCMorphism::operator==(FCMorphism const& that) const {
    return fstar == that.fstar && lambda == that.lambda
           && same_object(source, that.source) && same_object(target, that.target);
  }

  FGMorphism validate_fg_morphism(FuzzyRef   source,
                                  FuzzyRef   target,
                                  ElementMap f,
                                  ElementMap lambda) {
    FuzzySubgroup const& s = *source;
    FuzzySubgroup const& t = *target;
    if (!in_range(f, s.group().size(), t.group().size())
        || !in_range(lambda, s.chain().size(), t.chain().size())) {
      throw MorphismError(MorphismErrorKind::shape,
                          {},
                          "morphism maps are not total between the objects");
    }
    if (!is_group_homomorphism(f, s.group(), t.group())) {
      throw MorphismError(MorphismErrorKind::not_group_hom,
                          {},
                          "f is not a group homomorphism");
    }
    // chains are stored ascending, so order on indices is order on values
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i) {
      if (lambda[i] > lambda[i + 1]) {
        throw MorphismError(MorphismErrorKind::not_order_preserving,
                            {i, i + 1},
                            "lambda is not order preserving: "
                                + s.chain()[i].to_string() + " <= "
                                + s.chain()[i + 1].to_string() + " but "
                                + t.chain()[lambda[i]].to_string() + " > "
                                + t.chain()[lambda[i + 1]].to_string());
      }
    }
    if (lambda.back() != t.chain().size() - 1) {
      throw MorphismError(MorphismErrorKind::top_not_preserved,
                          {},
                          "lambda(" + s.top().to_string() + ") = "
                              + t.chain()[lambda.back()].to_string() + " != "
                              + t.top().to_string());
    }
    for (Element x = 0; x < s.group().size(); ++x) {
      if (t.level(f[x]) != lambda[s.level(x)]) {
        throw MorphismError(
            MorphismErrorKind::commutation_failure,
            {x},
            "commutation fails at " + s.group().name(x) + ": mu2(f("
                + s.group().name(x) + ")) = " + t.mu(f[x]).to_string()
                + " but lambda(mu1(" + s.group().name(x)
                + ")) = " + t.chain()[lambda[s.level(x)]].to_string());
      }
    }
    return FGMorphism{std::move(source), std::move(target), std::move(f), std::move(lambda)};
  }

  FGMorphism identity_fg(FuzzyRef const& object) {
    ElementMap f(object->group().size()), lambda(object->chain().size());
    for (Element x = 0; x < f.size(); ++x) {
      f[x] = x;
    }
    for (Element u = 0; u < lambda.size(); ++u) {
      lambda[u] = u;
    }
    return validate_fg_morphism(object, object, std::move(f), std::move(lambda));
  }

  FGMorphism compose_fg(FGMorphism const& m2, FGMorphism const& m1) {
    if (!same_object(m1.target, m2.source)) {
      throw MorphismError(MorphismErrorKind::not_composable,
                          {},
                          "target of the first morphism is not the source of "
                          "the second");
    }
    ElementMap f, lambda;
    for (Element x : m1.f) {
      f.push_back(m2.f[x]);
    }
    for (Element u : m1.lambda) {
      lambda.push_back(m2.lambda[u]);
    }
    return validate_fg_morphism(m1.source, m2.target, std::move(f), std::move(lambda));
  }

  FCRef make_fc_object(FiniteInverseMonoid cover,
                       FiniteInverseMonoid base,
                       ElementMap          phi) {
    auto object = std::make_shared<FCObject>(
        FCObject{std::move(cover), std::move(base), std::move(phi), nullptr, nullptr});
    certify_fc_object(*object);
    return object;
  }

  FCMorphism validate_fc_morphism(FCRef      source,
                                  FCRef      target,
                                  ElementMap fstar,
                                  ElementMap lambda) {
    FCObject const& s = *source;
    FCObject const& t = *target;
    if (!in_range(fstar, s.cover.size(), t.cover.size())
        || !in_range(lambda, s.base.size(), t.base.size())) {
      throw MorphismError(MorphismErrorKind::shape,
                          {},
                          "morphism maps are not total between the objects");
    }
    if (!is_monoid_homomorphism(fstar, s.cover, t.cover)) {
      throw MorphismError(MorphismErrorKind::not_monoid_hom,
                          {},
                          "f* is not a monoid homomorphism");
    }
    if (!is_monoid_homomorphism(lambda, s.base, t.base)) {
      throw MorphismError(MorphismErrorKind::not_monoid_hom,
                          {},
                          "lambda is not a monoid homomorphism");
    }
    for (auto const& [map, from, to, label] :
         {std::tuple{&fstar, &s.cover, &t.cover, "f*"},
          std::tuple{&lambda, &s.base, &t.base, "lambda"}}) {
      for (auto const& top : from->derived().sigma_maxima) {
        if (top && !is_class_maximum(*to, (*map)[*top])) {
          throw MorphismError(MorphismErrorKind::maximum_not_preserved,
                              {*top},
                              std::string(label) + " sends the sigma maximum "
                                  + from->name(*top) + " to "
                                  + to->name((*map)[*top])
                                  + ", which is not a sigma maximum");
        }
      }
    }
    for (Element x = 0; x < s.cover.size(); ++x) {
      if (t.phi[fstar[x]] != lambda[s.phi[x]]) {
        throw MorphismError(MorphismErrorKind::commutation_failure,
                            {x},
                            "phi'(f*(" + s.cover.name(x) + ")) = "
                                + t.base.name(t.phi[fstar[x]])
                                + " but lambda(phi(" + s.cover.name(x)
                                + ")) = " + t.base.name(lambda[s.phi[x]]));
      }
    }
    return FCMorphism{std::move(source), std::move(target), std::move(fstar), std::move(lambda)};
  }

  FCMorphism identity_fc(FCRef const& object) {
    ElementMap fstar(object->cover.size()), lambda(object->base.size());
    for (Element x = 0; x < fstar.size(); ++x) {
      fstar[x] = x;
    }
    for (Element u = 0; u < lambda.size(); ++u) {
      lambda[u] = u;
    }
    return validate_fc_morphism(object, object, std::move(fstar), std::move(lambda));
  }

  FCMorphism compose_fc(FCMorphism const& c2, FCMorphism const& c1) {
    if (!same_object(c1.target, c2.source)) {
      throw MorphismError(MorphismErrorKind::not_composable,
                          {},
                          "target of the first morphism is not the source of "
                          "the second");
    }
    ElementMap fstar, lambda;
    for (Element x : c1.fstar) {
      fstar.push_back(c2.fstar[x]);
    }
    for (Element u : c1.lambda) {
      lambda.push_back(c2.lambda[u]);
    }
    return validate_fc_morphism(c1.source, c2.target, std::move(fstar), std::move(lambda));
  }

  FCRef omega_object(FuzzyRef const& fuzzy) {
    auto cover  = std::make_shared<CoverMonoid const>(build_cover(*fuzzy));
    auto object = std::make_shared<FCObject>(
        FCObject{cover->monoid(), cover->chain(), cover->projection(), fuzzy, cover});
    certify_fc_object(*object);
    return object;
  }

  FCMorphism omega_morphism(FGMorphism const& m,
                            FCRef const&      source_image,
                            FCRef const&      target_image) {
    if (!source_image->omega_cover || !target_image->omega_cover
        || !same_object(source_image->omega_source, m.source)
        || !same_object(target_image->omega_source, m.target)) {
      throw MorphismError(MorphismErrorKind::not_omega_image,
                          {},
                          "objects are not the images of the morphism's "
                          "endpoints");
    }
    CoverMonoid const&   s  = *source_image->omega_cover;
    CoverMonoid const&   t  = *target_image->omega_cover;
    FuzzySubgroup const& f1 = s.source();
    FuzzySubgroup const& f2 = t.source();

    ElementMap fstar;
    for (CoverPair const& p : s.pairs()) {
      // lambda(u) <= mu2(f(x)) makes (lambda(u), f(x)) a pair of the target
      auto image = t.index_of(m.lambda[p.level], m.f[p.element]);
      if (!image) {
        throw TheoremCheckFailure("f* is not well defined at "
                                  + s.monoid().name(fstar.size()));
      }
      fstar.push_back(*image);
    }
    if (fstar[s.monoid().unit()] != t.monoid().unit()) {
      throw TheoremCheckFailure("f* does not preserve the unit: " + describe(m));
    }
    if (!is_monoid_homomorphism(fstar, s.monoid(), t.monoid())) {
      throw TheoremCheckFailure("f* is not a homomorphism: " + describe(m));
    }
    for (Element x = 0; x < f1.group().size(); ++x) {
      Element top   = *s.index_of(f1.level(x), x);
      auto    image = t.index_of(f2.level(m.f[x]), m.f[x]);
      if (fstar[top] != image) {
        throw TheoremCheckFailure("f* does not send (mu1(x),x) to "
                                  "(mu2(f(x)),f(x)) at "
                                  + f1.group().name(x));
      }
    }
    for (Element i = 0; i < fstar.size(); ++i) {
      if (t.projection()[fstar[i]] != m.lambda[s.projection()[i]]) {
        throw TheoremCheckFailure("phi2 f* != lambda phi1 at "
                                  + s.monoid().name(i));
      }
    }
    return validate_fc_morphism(source_image, target_image, std::move(fstar), m.lambda);
  }

  FCMorphism omega_morphism(FGMorphism const& m) {
    FCRef s = omega_object(m.source);
    FCRef t = same_object(m.source, m.target) ? s : omega_object(m.target);
    return omega_morphism(m, s, t);
  }

  FGMorphism reconstruct_fullness(FCMorphism const& c) {
    if (!c.source->omega_cover || !c.target->omega_cover) {
      throw MorphismError(MorphismErrorKind::not_omega_image,
                          {},
                          "reconstruction needs both endpoints to be omega "
                          "images");
    }
    CoverMonoid const&   s  = *c.source->omega_cover;
    CoverMonoid const&   t  = *c.target->omega_cover;
    FuzzySubgroup const& f1 = s.source();
    FuzzySubgroup const& f2 = t.source();

    auto mismatch = [&](std::string const& what) {
      return MorphismError(MorphismErrorKind::reconstruction_mismatch,
                           {},
                           what + " for " + describe(c));
    };

    ElementMap f;
    for (Element x = 0; x < f1.group().size(); ++x) {
      CoverPair const& image = t.pairs()[c.fstar[*s.index_of(f1.level(x), x)]];
      if (image.level != f2.level(image.element)) {
        throw mismatch("image of (mu1(" + f1.group().name(x)
                       + ")," + f1.group().name(x) + ") is not a sigma maximum");
      }
      f.push_back(image.element);
    }
    if (!is_group_homomorphism(f, f1.group(), f2.group())) {
      throw mismatch("induced f is not a group homomorphism");
    }
    for (Element x = 0; x < f1.group().size(); ++x) {
      if (f2.level(f[x]) != c.lambda[f1.level(x)]) {
        throw mismatch("mu2 f != lambda mu1 at " + f1.group().name(x));
      }
    }
    FGMorphism m = [&] {
      try {
        return validate_fg_morphism(c.source->omega_source,
                                    c.target->omega_source,
                                    f,
                                    c.lambda);
      } catch (MorphismError const& e) {
        throw mismatch(std::string("reconstructed pair is not a morphism: ")
                       + e.what());
      }
    }();
    if (omega_morphism(m, c.source, c.target) != c) {
      throw mismatch("omega(f, lambda) differs from the given morphism");
    }
    return m;
  }

  EmbeddingCertificate verify_embedding(FuzzyRef const& source,
                                        FuzzyRef const& target,
                                        std::uint64_t   budget) {
    EmbeddingCertificate cert;
    bool const           loop = same_object(source, target);
    FCRef const          s    = omega_object(source);
    FCRef const          t    = loop ? s : omega_object(target);

    auto fg = enumerate_fg_morphisms(source, target, budget);
    auto fc = enumerate_fc_morphisms(s, t, budget);
    cert.fg_hom_count = fg.size();
    cert.fc_hom_count = fc.size();

    auto position = [](auto const& list, auto const& item) {
      return static_cast<std::size_t>(std::find(list.begin(), list.end(), item)
                                      - list.begin());
    };

    // faithful: omega is injective on the FG hom-set
    cert.faithful = true;
    for (FGMorphism const& m : fg) {
      FCMorphism  image = omega_morphism(m, s, t);
      std::size_t j     = position(fc, image);
      if (j == fc.size()) {
        cert.counterexamples.push_back("omega image missing from FC hom-set: "
                                       + describe(m));
        cert.faithful = false;
      }
      if (image.lambda != m.lambda) {
        cert.counterexamples.push_back("omega changed lambda: " + describe(m));
      }
      cert.omega_index.push_back(j);
    }
    auto sorted = cert.omega_index;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      cert.faithful = false;
      cert.counterexamples.push_back("omega identifies two FG morphisms");
    }

    // full: every FC morphism is omega of its reconstruction
    cert.full = true;
    for (FCMorphism const& c : fc) {
      try {
        FGMorphism  m = reconstruct_fullness(c);
        std::size_t i = position(fg, m);
        if (i == fg.size()) {
          cert.full = false;
          cert.counterexamples.push_back("reconstruction is not enumerated: "
                                         + describe(m));
        }
        cert.fullness_index.push_back(i);
      } catch (MorphismError const& e) {
        cert.full = false;
        cert.fullness_index.push_back(fg.size());
        cert.counterexamples.push_back(e.what());
      }
    }

    // functoriality: identities and composites through endomorphisms
    cert.identity_preserved = omega_morphism(identity_fg(source), s, s) == identity_fc(s)
                              && omega_morphism(identity_fg(target), t, t)
                                     == identity_fc(t);
    if (!cert.identity_preserved) {
      cert.counterexamples.push_back("omega(id) != id");
    }
    cert.composition_preserved = true;
    auto check_composite       = [&](FGMorphism const& m2,
                               FGMorphism const& m1,
                               FCRef const&      a,
                               FCRef const&      b,
                               FCRef const&      c) {
      ++cert.composition_checks;
      if (omega_morphism(compose_fg(m2, m1), a, c)
          != compose_fc(omega_morphism(m2, b, c), omega_morphism(m1, a, b))) {
        cert.composition_preserved = false;
        cert.counterexamples.push_back("omega(m2 m1) != omega(m2) omega(m1) for m1 = "
                                       + describe(m1) + ", m2 = " + describe(m2));
      }
    };
    for (FGMorphism const& e : enumerate_fg_morphisms(source, source, budget)) {
      for (FGMorphism const& m : fg) {
        check_composite(m, e, s, s, t);
      }
    }
    for (FGMorphism const& e : enumerate_fg_morphisms(target, target, budget)) {
      for (FGMorphism const& m : fg) {
        check_composite(e, m, s, t, t);
      }
    }
    if (cert.fg_hom_count != cert.fc_hom_count) {
      cert.counterexamples.push_back("hom-set sizes differ: FG "
                                     + std::to_string(cert.fg_hom_count) + ", FC "
                                     + std::to_string(cert.fc_hom_count));
    }
    return cert;
  }

  std::string describe(FGMorphism const& m) {
    return "f=" + map_table(m.f, m.source->group().names(), m.target->group().names())
           + " lambda="
           + map_table(m.lambda, chain_names(*m.source), chain_names(*m.target));
  }

  std::string describe(FCMorphism const& c) {
    return "f*=" + map_table(c.fstar, c.source->cover.names(), c.target->cover.names())
           + " lambda="
           + map_table(c.lambda, c.source->base.names(), c.target->base.names());
  }

}  // namespace fuzzcover
