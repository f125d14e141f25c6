#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fuzzcover/cover.hpp"
#include "fuzzcover/fuzzy_subgroup.hpp"
#include "fuzzcover/inverse_monoid.hpp"

namespace fuzzcover {

  enum class MorphismErrorKind {
    shape,
    not_group_hom,
    not_order_preserving,
    top_not_preserved,
    commutation_failure,
    not_composable,
    not_monoid_hom,
    maximum_not_preserved,
    not_omega_image,
    reconstruction_mismatch,
  };

  class MorphismError : public Error {
   public:
    MorphismError(MorphismErrorKind kind, Subset witness, std::string const& what)
        : Error(kind == MorphismErrorKind::reconstruction_mismatch
                    ? ErrorCategory::theorem_check
                    : ErrorCategory::validation,
                what),
          _kind(kind),
          _witness(std::move(witness)) {}

    MorphismErrorKind kind() const noexcept {
      return _kind;
    }

    Subset const& witness() const noexcept {
      return _witness;
    }

   private:
    MorphismErrorKind _kind;
    Subset            _witness;
  };

  using FuzzyRef = std::shared_ptr<FuzzySubgroup const>;

  // A morphism (f, lambda) of fuzzy subgroups. lambda maps chain indices of
  // the source to chain indices of the target.
  struct FGMorphism {
    FuzzyRef   source;
    FuzzyRef   target;
    ElementMap f;
    ElementMap lambda;

    bool operator==(FGMorphism const& that) const;
  };

  FGMorphism validate_fg_morphism(FuzzyRef   source,
                                  FuzzyRef   target,
                                  ElementMap f,
                                  ElementMap lambda);

  FGMorphism identity_fg(FuzzyRef const& object);

  // m2 after m1.
  FGMorphism compose_fg(FGMorphism const& m2, FGMorphism const& m1);

  // An F-inverse cover (T, M, phi). Objects built by omega_object also keep
  // the fuzzy subgroup and cover they came from.
  struct FCObject {
    FiniteInverseMonoid cover;
    FiniteInverseMonoid base;
    ElementMap          phi;

    FuzzyRef                           omega_source;
    std::shared_ptr<CoverMonoid const> omega_cover;
  };

  using FCRef = std::shared_ptr<FCObject const>;

  // Certifies that `cover` is F-inverse and phi a surjective, idempotent
  // separating monoid homomorphism onto `base`.
  FCRef make_fc_object(FiniteInverseMonoid cover,
                       FiniteInverseMonoid base,
                       ElementMap          phi);

  struct FCMorphism {
    FCRef      source;
    FCRef      target;
    ElementMap fstar;
    ElementMap lambda;

    bool operator==(FCMorphism const& that) const;
  };

  FCMorphism validate_fc_morphism(FCRef      source,
                                  FCRef      target,
                                  ElementMap fstar,
                                  ElementMap lambda);

  FCMorphism identity_fc(FCRef const& object);

  FCMorphism compose_fc(FCMorphism const& c2, FCMorphism const& c1);

  FCRef omega_object(FuzzyRef const& fuzzy);

  // f*(u, x) = (lambda(u), f(x)). Each property the image needs is checked
  // separately before the result is validated as an FC morphism.
  FCMorphism omega_morphism(FGMorphism const& m,
                            FCRef const&      source_image,
                            FCRef const&      target_image);

  FCMorphism omega_morphism(FGMorphism const& m);

  // The unique (f, lambda) with omega(f, lambda) == c, where
  // f(x) = second coordinate of c.fstar(mu1(x), x).
  FGMorphism reconstruct_fullness(FCMorphism const& c);

  struct EmbeddingCertificate {
    std::size_t fg_hom_count = 0;
    std::size_t fc_hom_count = 0;
    // omega_index[i]: position of omega(fg[i]) among the FC morphisms
    std::vector<std::size_t> omega_index;
    // fullness_index[j]: position of reconstruct_fullness(fc[j]) among the
    // FG morphisms
    std::vector<std::size_t> fullness_index;
    bool                     identity_preserved    = false;
    bool                     composition_preserved = false;
    std::size_t              composition_checks    = 0;
    bool                     faithful              = false;
    bool                     full                  = false;
    std::vector<std::string> counterexamples;

    bool ok() const noexcept {
      return faithful && full && identity_preserved && composition_preserved
             && counterexamples.empty() && fg_hom_count == fc_hom_count;
    }
  };

  // Enumerates both hom-sets between the two objects and their images and
  // checks that omega is a bijection between them, that reconstruct_fullness
  // inverts it, and that omega preserves identities and composites of
  // endomorphisms with the F1 -> F2 morphisms.
  EmbeddingCertificate verify_embedding(FuzzyRef const& source,
                                        FuzzyRef const& target,
                                        std::uint64_t   budget = default_budget);

  std::string describe(FGMorphism const& m);
  std::string describe(FCMorphism const& c);

}  // namespace fuzzcover
