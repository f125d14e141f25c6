#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fuzzcover/error.hpp"

namespace fuzzcover {

  // Elements of every finite structure are dense indices 0..n-1; labels are
  // only used for input and output.
  using Element    = std::size_t;
  using ElementMap = std::vector<Element>;
  using Subset     = std::vector<Element>;  // sorted ascending, no repeats
  using Table      = std::vector<std::vector<Element>>;

  enum class GroupErrorKind {
    not_closed,
    not_associative,
    no_identity,
    missing_inverse,
  };

  class GroupError : public Error {
   public:
    GroupError(GroupErrorKind kind, Subset witness, std::string const& what)
        : Error(ErrorCategory::validation, what),
          _kind(kind),
          _witness(std::move(witness)) {}

    GroupErrorKind kind() const noexcept {
      return _kind;
    }

    // not_associative: (x, y, z); missing_inverse: (x); otherwise empty or
    // the offending cell.
    Subset const& witness() const noexcept {
      return _witness;
    }

   private:
    GroupErrorKind _kind;
    Subset         _witness;
  };

  // A finite group given by its Cayley table. Only obtainable through
  // validate_group, so the group axioms always hold.
  class FiniteGroup {
   public:
    std::size_t size() const noexcept {
      return _names.size();
    }

    Element product(Element x, Element y) const noexcept {
      return _table[x * size() + y];
    }

    Element identity() const noexcept {
      return _identity;
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

    Table table() const;

    bool operator==(FiniteGroup const&) const = default;

   private:
    friend FiniteGroup validate_group(std::vector<std::string>, Table const&);

    FiniteGroup() = default;

    std::vector<std::string> _names;
    std::vector<Element>     _table;
    Element                  _identity = 0;
    std::vector<Element>     _inverses;
  };

  // Checks closure, associativity (full triple loop), identity and inverses;
  // identity and inverses are computed from the table.
  FiniteGroup validate_group(std::vector<std::string> names,
                             Table const&             table);

  bool is_subgroup(FiniteGroup const& group, std::span<Element const> subset);

  bool is_group_homomorphism(std::span<Element const> f,
                             FiniteGroup const&       source,
                             FiniteGroup const&       target);

  // All homomorphisms source -> target in lexicographic order of their image
  // tables.
  std::vector<ElementMap>
  enumerate_group_homomorphisms(FiniteGroup const& source,
                                FiniteGroup const& target,
                                std::uint64_t      budget = default_budget);

  // Every subgroup of `group`, ordered by size and then lexicographically.
  std::vector<Subset> all_subgroups(FiniteGroup const& group);

  // The isomorphic copy in which element x of `group` gets index perm[x].
  // `perm` must be a permutation.
  FiniteGroup relabel(FiniteGroup const& group, std::span<Element const> perm);

  namespace groups {
    FiniteGroup trivial();
    FiniteGroup cyclic(std::size_t n);
    FiniteGroup klein_four();
    FiniteGroup symmetric3();
    FiniteGroup dihedral4();
    FiniteGroup quaternion8();
    FiniteGroup direct_product(FiniteGroup const& lhs, FiniteGroup const& rhs);

    // One representative of every isomorphism class of order <= 8.
    std::vector<FiniteGroup> all_up_to_order_8();
  }  // namespace groups

}  // namespace fuzzcover
