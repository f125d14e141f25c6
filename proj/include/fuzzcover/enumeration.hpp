#pragma once

#include <cstdint>
#include <vector>

#include "fuzzcover/embedding.hpp"
#include "fuzzcover/fuzzy_subgroup.hpp"
#include "fuzzcover/group.hpp"

namespace fuzzcover {

  // Finite set of admissible membership values: sorted, distinct, in (0, 1],
  // containing 1.
  class ValueGrid {
   public:
    static ValueGrid make(std::vector<Rational> levels);

    // {1/4, 1/2, 3/4, 1}
    static ValueGrid default_grid();

    // {1/k, 2/k, ..., 1}
    static ValueGrid uniform(std::size_t k);

    std::vector<Rational> const& levels() const noexcept {
      return _levels;
    }

    std::size_t size() const noexcept {
      return _levels.size();
    }

   private:
    explicit ValueGrid(std::vector<Rational> levels) : _levels(std::move(levels)) {}

    std::vector<Rational> _levels;
  };

  // Every map G -> grid satisfying the fuzzy subgroup axioms, in
  // lexicographic order of the tables of grid indices.
  std::vector<FuzzySubgroup>
  enumerate_fuzzy_subgroups_filter(FiniteGroup const& group,
                                   ValueGrid const&   grid,
                                   std::uint64_t      budget = default_budget);

  // Same set, built from strictly descending subgroup chains G = H1 > ... > Hk
  // and strictly increasing value assignments; returned in the same order as
  // the filter enumeration.
  std::vector<FuzzySubgroup>
  enumerate_fuzzy_subgroups_chain(FiniteGroup const& group,
                                  ValueGrid const&   grid,
                                  std::uint64_t      budget = default_budget);

  // Strictly descending chains of subgroups starting at G, depth first.
  std::vector<std::vector<Subset>>
  enumerate_subgroup_chains(FiniteGroup const& group,
                            std::uint64_t      budget = default_budget);

  // Order and top preserving maps between chains of the given lengths, as
  // index maps, in lexicographic order.
  std::vector<ElementMap> enumerate_chain_maps(std::size_t source_length,
                                               std::size_t target_length);

  std::vector<FGMorphism> enumerate_fg_morphisms(FuzzyRef const& source,
                                                 FuzzyRef const& target,
                                                 std::uint64_t budget
                                                 = default_budget);

  std::vector<FCMorphism> enumerate_fc_morphisms(FCRef const&  source,
                                                 FCRef const&  target,
                                                 std::uint64_t budget
                                                 = default_budget);

}  // namespace fuzzcover
