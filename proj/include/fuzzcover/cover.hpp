#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzcover/fuzzy_subgroup.hpp"
#include "fuzzcover/group.hpp"
#include "fuzzcover/inverse_monoid.hpp"

namespace fuzzcover {

  enum class CoverErrorKind {
    not_dual_premorphism,
    coverage_failure,
    not_homomorphism,
    not_f_inverse,
    not_idempotent_separating,
    not_surjective,
  };

  class CoverError : public Error {
   public:
    CoverError(CoverErrorKind kind, Subset witness, std::string const& what)
        : Error(ErrorCategory::validation, what),
          _kind(kind),
          _witness(std::move(witness)) {}

    CoverErrorKind kind() const noexcept {
      return _kind;
    }

    Subset const& witness() const noexcept {
      return _witness;
    }

   private:
    CoverErrorKind _kind;
    Subset         _witness;
  };

  // (u, x) with u = chain()[level] and u <= mu(x).
  struct CoverPair {
    std::size_t level;
    Element     element;

    bool operator==(CoverPair const&) const = default;
  };

  // The F-inverse cover {(u, x) in U x G : u <= mu(x)} with componentwise
  // product (min, group product). Pairs are ordered by group element, then by
  // chain value ascending.
  class CoverMonoid {
   public:
    FuzzySubgroup const& source() const noexcept {
      return _source;
    }

    std::vector<CoverPair> const& pairs() const noexcept {
      return _pairs;
    }

    FiniteInverseMonoid const& monoid() const noexcept {
      return _monoid;
    }

    // (U, min), the target of the projection.
    FiniteInverseMonoid const& chain() const noexcept {
      return _chain;
    }

    // (u, x) -> u, as indices into chain().
    ElementMap const& projection() const noexcept {
      return _projection;
    }

    std::optional<Element> index_of(std::size_t level, Element x) const {
      if (level > _source.level(x)) {
        return std::nullopt;
      }
      return _offset[x] + level;
    }

    std::size_t size() const noexcept {
      return _pairs.size();
    }

   private:
    friend CoverMonoid build_cover(FuzzySubgroup const&);

    CoverMonoid(FuzzySubgroup         source,
                std::vector<CoverPair> pairs,
                std::vector<Element>   offset,
                FiniteInverseMonoid    monoid,
                FiniteInverseMonoid    chain,
                ElementMap             projection)
        : _source(std::move(source)),
          _pairs(std::move(pairs)),
          _offset(std::move(offset)),
          _monoid(std::move(monoid)),
          _chain(std::move(chain)),
          _projection(std::move(projection)) {}

    FuzzySubgroup          _source;
    std::vector<CoverPair> _pairs;
    std::vector<Element>   _offset;  // index of (chain()[0], x)
    FiniteInverseMonoid    _monoid;
    FiniteInverseMonoid    _chain;
    ElementMap             _projection;
  };

  // Builds the cover and certifies it: inverse, F-inverse, Clifford, unit
  // (top, e), product law, size formula, and the projection surjective,
  // idempotent separating and a homomorphism. A failed certification throws
  // TheoremCheckFailure.
  CoverMonoid build_cover(FuzzySubgroup const& fuzzy);

  // Closed-form descriptions of the cover next to the generic inverse monoid
  // computations; every disagreement is recorded in `discrepancies`.
  struct CoverReport {
    Subset                       idempotents;
    Element                      unit;
    std::vector<std::pair<Element, Element>> strict_order;  // x < y
    Partition                    sigma;
    std::vector<Element>         sigma_maxima;
    Partition                    green_H;
    Partition                    green_R;
    Partition                    green_L;
    bool                         f_inverse;
    bool                         clifford;
    std::vector<std::string>     discrepancies;

    bool consistent() const noexcept {
      return discrepancies.empty();
    }
  };

  CoverReport cover_report(CoverMonoid const& cover);

  struct HClassIsomorphism {
    std::size_t level;
    Element     idempotent;  // (u, e)
    Subset      h_class;     // members of H_(u,e), ascending
    Subset      level_subset;
    ElementMap  to_group;    // h_class[i] -> its group coordinate
  };

  // H_(u,e) = {(u, h) : u <= mu(h)} and (u, h) -> h is an isomorphism onto
  // mu_u. Throws TheoremCheckFailure if either claim fails.
  HClassIsomorphism hclass_level_isomorphism(CoverMonoid const&     cover,
                                             MembershipValue const& u);

  struct DualPremorphismCover {
    FiniteInverseMonoid                      monoid;
    std::vector<std::pair<Element, Element>> pairs;       // (u, h)
    ElementMap                               projection;  // (u, h) -> u
  };

  // {(u, h) in M x H : u <= psi(h)} with product (uv, hk), for a dual
  // premorphism psi: H -> M whose image dominates M. Pairs are ordered by h,
  // then u.
  DualPremorphismCover theorem_r1_construct(std::span<Element const>   psi,
                                            FiniteGroup const&         group,
                                            FiniteInverseMonoid const& monoid);

  struct RecoveredPremorphism {
    FiniteGroup          group;  // T / sigma
    ElementMap           psi;    // class -> phi(max of class)
    DualPremorphismCover rebuilt;
    ElementMap           isomorphism;  // rebuilt -> T
  };

  // The converse direction: recovers psi: T/sigma -> M from an F-inverse
  // cover and checks that rebuilding from psi gives a monoid isomorphic to T.
  RecoveredPremorphism
  cover_to_dual_premorphism(FiniteInverseMonoid const& cover,
                            FiniteInverseMonoid const& monoid,
                            std::span<Element const>   phi,
                            std::uint64_t              budget = default_budget);

  // A unit and product preserving bijection lhs -> rhs, if there is one.
  // Candidates are pruned by per-element invariants before backtracking.
  std::optional<ElementMap>
  monoid_isomorphic(FiniteInverseMonoid const& lhs,
                    FiniteInverseMonoid const& rhs,
                    std::uint64_t              budget = default_budget);

}  // namespace fuzzcover
