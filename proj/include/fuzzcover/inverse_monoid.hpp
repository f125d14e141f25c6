#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzcover/group.hpp"
#include "fuzzcover/membership.hpp"

namespace fuzzcover {

  enum class MonoidErrorKind {
    not_closed,
    not_associative,
    not_unital,
    no_inverse,
    non_unique_inverse,
    quotient_not_group,
    empty_chain,
    out_of_range,
    unsorted,
  };

  class MonoidError : public Error {
   public:
    MonoidError(MonoidErrorKind kind, Subset witness, std::string const& what)
        : Error(kind == MonoidErrorKind::quotient_not_group
                    ? ErrorCategory::theorem_check
                    : ErrorCategory::validation,
                what),
          _kind(kind),
          _witness(std::move(witness)) {}

    MonoidErrorKind kind() const noexcept {
      return _kind;
    }

    // non_unique_inverse: (x, y1, y2); no_inverse: (x);
    // not_associative: (x, y, z).
    Subset const& witness() const noexcept {
      return _witness;
    }

   private:
    MonoidErrorKind _kind;
    Subset          _witness;
  };

  // A partition of 0..n-1. Classes are sorted internally and ordered by their
  // smallest member.
  struct Partition {
    std::vector<std::size_t> class_of;
    std::vector<Subset>      classes;

    static Partition from_relation(std::size_t                            n,
                                   std::function<bool(Element, Element)> const& related);

    bool operator==(Partition const&) const = default;
  };

  // The smallest group congruence: x ~ y iff xe = ye for some idempotent e.
  struct Sigma {
    Partition   classes;
    FiniteGroup quotient;    // element i is the class classes.classes[i]
    ElementMap  projection;  // element -> its class
  };

  struct GreenRelations {
    Partition H;
    Partition R;
    Partition L;
  };

  struct DerivedStructure {
    Subset                              idempotents;
    std::vector<std::vector<bool>>      natural_order;  // [x][y] iff x <= y
    Sigma                               sigma;
    GreenRelations                      green;
    std::vector<std::optional<Element>> sigma_maxima;  // per sigma class
  };

  // Finite inverse monoid given by its multiplication table. Only obtainable
  // through validate_inverse_monoid (or chain_monoid / as_inverse_monoid);
  // all derived structure is computed once at construction.
  class FiniteInverseMonoid {
   public:
    std::size_t size() const noexcept {
      return _names.size();
    }

    Element product(Element x, Element y) const noexcept {
      return _table[x * size() + y];
    }

    Element unit() const noexcept {
      return _unit;
    }

    Element inverse(Element x) const noexcept {
      return _inverses[x];
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::string const& name(Element x) const {
      return _names[x];
    }

    bool is_idempotent(Element x) const noexcept {
      return product(x, x) == x;
    }

    bool leq(Element x, Element y) const {
      return _derived->natural_order[x][y];
    }

    DerivedStructure const& derived() const noexcept {
      return *_derived;
    }

    Table table() const;

    // Structural equality: same labels, table and unit.
    bool operator==(FiniteInverseMonoid const& that) const {
      return _names == that._names && _table == that._table
             && _unit == that._unit;
    }

   private:
    friend FiniteInverseMonoid validate_inverse_monoid(std::vector<std::string>,
                                                       Table const&,
                                                       Element);

    FiniteInverseMonoid() = default;

    std::vector<std::string> _names;
    std::vector<Element>     _table;
    Element                  _unit = 0;
    std::vector<Element>     _inverses;
    // shared between copies; never mutated after construction
    std::shared_ptr<DerivedStructure const> _derived;
  };

  FiniteInverseMonoid validate_inverse_monoid(std::vector<std::string> names,
                                              Table const&             table,
                                              Element                  unit);

  // Groups are inverse monoids with the group inverse.
  FiniteInverseMonoid as_inverse_monoid(FiniteGroup const& group);

  std::vector<std::vector<bool>> const& natural_order(FiniteInverseMonoid const& m);

  Sigma const& sigma(FiniteInverseMonoid const& m);

  GreenRelations const& green_relations(FiniteInverseMonoid const& m);

  struct FInverseResult {
    bool                                is_f_inverse;
    std::vector<std::optional<Element>> maxima;  // per sigma class
  };

  FInverseResult is_f_inverse(FiniteInverseMonoid const& m);

  bool is_clifford(FiniteInverseMonoid const& m);

  bool is_monoid_homomorphism(std::span<Element const>   f,
                              FiniteInverseMonoid const& source,
                              FiniteInverseMonoid const& target);

  bool is_idempotent_separating(std::span<Element const>   f,
                                FiniteInverseMonoid const& source,
                                FiniteInverseMonoid const& target);

  bool is_surjective(std::span<Element const>   f,
                     FiniteInverseMonoid const& source,
                     FiniteInverseMonoid const& target);

  // True iff f maps every sigma-class maximum of `source` to the maximum of
  // the sigma class of its image in `target`.
  bool preserves_sigma_maxima(std::span<Element const>   f,
                              FiniteInverseMonoid const& source,
                              FiniteInverseMonoid const& target);

  struct HomomorphismFilter {
    bool idempotent_separating = false;
    bool surjective            = false;
    bool preserve_sigma_maxima = false;
    // Per-element constraint on the image, applied during the search.
    std::function<bool(Element, Element)> allowed;
  };

  std::vector<ElementMap>
  enumerate_monoid_homomorphisms(FiniteInverseMonoid const& source,
                                 FiniteInverseMonoid const& target,
                                 HomomorphismFilter const&  filter = {},
                                 std::uint64_t budget = default_budget);

  // The chain (values, min) with unit max(values). Element i is values[i].
  FiniteInverseMonoid chain_monoid(std::span<Rational const> values);

  FiniteInverseMonoid chain_monoid(std::span<MembershipValue const> values);

}  // namespace fuzzcover
