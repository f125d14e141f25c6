#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzcover/group.hpp"
#include "fuzzcover/inverse_monoid.hpp"
#include "fuzzcover/membership.hpp"

namespace fuzzcover {

  enum class FuzzyErrorKind {
    size_mismatch,
    value_out_of_range,
    axiom1_violation,  // mu(xy) < min(mu(x), mu(y)); witness (x, y)
    axiom2_violation,  // mu(x^-1) != mu(x); witness (x)
    value_not_in_chain,
  };

  class FuzzyError : public Error {
   public:
    FuzzyError(FuzzyErrorKind kind, Subset witness, std::string const& what)
        : Error(ErrorCategory::validation, what),
          _kind(kind),
          _witness(std::move(witness)) {}

    FuzzyErrorKind kind() const noexcept {
      return _kind;
    }

    Subset const& witness() const noexcept {
      return _witness;
    }

   private:
    FuzzyErrorKind _kind;
    Subset         _witness;
  };

  struct FuzzyViolation {
    FuzzyErrorKind kind;
    Subset         witness;
  };

  // First violation of the two fuzzy subgroup axioms, scanning pairs (x, y)
  // lexicographically. Only the order of the values matters, so `Value` may be
  // a rational or a rank.
  template <typename Value>
  std::optional<FuzzyViolation> check_fuzzy_axioms(FiniteGroup const&     group,
                                                   std::span<Value const> mu) {
    for (Element x = 0; x < group.size(); ++x) {
      for (Element y = 0; y < group.size(); ++y) {
        if (mu[group.product(x, y)] < std::min(mu[x], mu[y])) {
          return FuzzyViolation{FuzzyErrorKind::axiom1_violation, {x, y}};
        }
      }
    }
    for (Element x = 0; x < group.size(); ++x) {
      if (!(mu[group.inverse(x)] == mu[x])) {
        return FuzzyViolation{FuzzyErrorKind::axiom2_violation, {x}};
      }
    }
    return std::nullopt;
  }

  // The triple (G, mu, U) where U is the image of mu, stored ascending.
  class FuzzySubgroup {
   public:
    FiniteGroup const& group() const noexcept {
      return _group;
    }

    MembershipValue const& mu(Element x) const {
      return _chain[_level[x]];
    }

    // Index of mu(x) in chain().
    std::size_t level(Element x) const {
      return _level[x];
    }

    std::vector<std::size_t> const& levels() const noexcept {
      return _level;
    }

    std::vector<MembershipValue> const& chain() const noexcept {
      return _chain;
    }

    MembershipValue const& top() const {
      return _chain.back();
    }

    std::optional<std::size_t> chain_index(MembershipValue const& u) const {
      auto it = std::lower_bound(_chain.begin(), _chain.end(), u);
      if (it == _chain.end() || *it != u) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - _chain.begin());
    }

    std::vector<Rational> values() const;

    bool operator==(FuzzySubgroup const&) const = default;

   private:
    friend FuzzySubgroup validate_fuzzy(FiniteGroup, std::span<Rational const>);

    FuzzySubgroup(FiniteGroup group) : _group(std::move(group)) {}

    FiniteGroup                  _group;
    std::vector<MembershipValue> _chain;
    std::vector<std::size_t>     _level;
  };

  FuzzySubgroup validate_fuzzy(FiniteGroup group, std::span<Rational const> mu);

  // {h : mu(h) >= u}; u must be a value of mu.
  Subset level_subset(FuzzySubgroup const& fuzzy, MembershipValue const& u);

  enum class PremorphismDefect {
    none,
    shape,
    inverse,   // psi(h^-1) != psi(h)^-1
    product,   // psi(hk) not >= psi(h) psi(k)
    coverage,  // some u lies below no psi(h)
  };

  struct PremorphismCheck {
    PremorphismDefect defect = PremorphismDefect::none;
    Subset            witness;
    std::string       message;

    bool ok() const noexcept {
      return defect == PremorphismDefect::none;
    }
  };

  // Checks that psi: H -> M is a dual premorphism whose image dominates every
  // element of M in the natural order.
  PremorphismCheck check_dual_premorphism(std::span<Element const>   psi,
                                          FiniteGroup const&         group,
                                          FiniteInverseMonoid const& monoid);

  struct DualPremorphism {
    FiniteInverseMonoid chain;  // (U, min)
    ElementMap          psi;    // x -> index of mu(x) in the chain
    // coverage_witness[u] is the first h with psi(h) = u, so u <= psi(h)
    std::vector<Element> coverage_witness;
  };

  // mu viewed as a map G -> (U, min), certified.
  DualPremorphism as_dual_premorphism(FuzzySubgroup const& fuzzy);

  struct DerivedFacts {
    Element             identity;
    MembershipValue     identity_value;
    std::vector<Subset> level_subsets;  // one per chain value, ascending
  };

  // Certifies mu(e) = max mu, mu(x^-1) = mu(x), and that the level subsets
  // are nested subgroups which determine mu.
  DerivedFacts derived_facts(FuzzySubgroup const& fuzzy);

}  // namespace fuzzcover
