#include "fuzzcover/enumeration.hpp"

#include <algorithm>

namespace fuzzcover {

  ValueGrid ValueGrid::make(std::vector<Rational> levels) {
    std::sort(levels.begin(), levels.end());
    if (levels.empty() || levels.back() != Rational(1) || levels.front() <= 0
        || std::adjacent_find(levels.begin(), levels.end()) != levels.end()) {
      throw Error(ErrorCategory::validation,
                  "a value grid must be distinct values in (0, 1] including 1");
    }
    return ValueGrid(std::move(levels));
  }

  ValueGrid ValueGrid::default_grid() {
    return uniform(4);
  }

  ValueGrid ValueGrid::uniform(std::size_t k) {
    if (k == 0) {
      throw Error(ErrorCategory::validation, "a value grid needs at least one level");
    }
    std::vector<Rational> levels;
    for (std::size_t i = 1; i <= k; ++i) {
      levels.emplace_back(static_cast<std::int64_t>(i), static_cast<std::int64_t>(k));
    }
    return ValueGrid(std::move(levels));
  }

  namespace {

    FuzzySubgroup from_indices(FiniteGroup const&           group,
                               ValueGrid const&             grid,
                               std::vector<std::size_t> const& index) {
      std::vector<Rational> mu;
      for (std::size_t i : index) {
        mu.push_back(grid.levels()[i]);
      }
      return validate_fuzzy(group, mu);
    }

  }  // namespace

  std::vector<FuzzySubgroup> enumerate_fuzzy_subgroups_filter(FiniteGroup const& group,
                                                              ValueGrid const&   grid,
                                                              std::uint64_t budget) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (total > budget / grid.size()) {
        throw BudgetExceeded("enumerate_fuzzy_subgroups_filter", budget);
      }
      total *= grid.size();
    }
    Budget spent("enumerate_fuzzy_subgroups_filter", budget);

    std::vector<FuzzySubgroup> found;
    std::vector<std::size_t>   index(group.size(), 0);
    for (std::uint64_t n = 0; n < total; ++n) {
      spent.spend();
      if (!check_fuzzy_axioms<std::size_t>(group, index)) {
        found.push_back(from_indices(group, grid, index));
      }
      // odometer, last element least significant
      for (std::size_t pos = group.size(); pos-- > 0;) {
        if (++index[pos] < grid.size()) {
          break;
        }
        index[pos] = 0;
      }
    }
    return found;
  }

  std::vector<std::vector<Subset>> enumerate_subgroup_chains(FiniteGroup const& group,
                                                             std::uint64_t budget) {
    Budget                           spent("enumerate_subgroup_chains", budget);
    std::vector<Subset> const        subgroups = all_subgroups(group);
    std::vector<std::vector<Subset>> chains;
    std::vector<Subset>              current;

    auto extend = [&](auto& self, Subset const& last) -> void {
      spent.spend();
      current.push_back(last);
      chains.push_back(current);
      for (Subset const& h : subgroups) {
        if (h.size() < last.size() && std::includes(last.begin(), last.end(), h.begin(), h.end())) {
          self(self, h);
        }
      }
      current.pop_back();
    };
    Subset everything(group.size());
    for (Element x = 0; x < group.size(); ++x) {
      everything[x] = x;
    }
    extend(extend, everything);
    return chains;
  }

  std::vector<FuzzySubgroup> enumerate_fuzzy_subgroups_chain(FiniteGroup const& group,
                                                             ValueGrid const&   grid,
                                                             std::uint64_t budget) {
    Budget spent("enumerate_fuzzy_subgroups_chain", budget);
    std::vector<std::vector<std::size_t>> tables;
    for (auto const& chain : enumerate_subgroup_chains(group, budget)) {
      std::size_t const k = chain.size();
      if (k > grid.size()) {
        continue;
      }
      // strictly increasing grid indices v[0] < ... < v[k-1]; H_i gets v[i]
      std::vector<std::size_t> v(k);
      for (std::size_t i = 0; i < k; ++i) {
        v[i] = i;
      }
      while (true) {
        spent.spend();
        std::vector<std::size_t> table(group.size(), 0);
        for (std::size_t i = 0; i < k; ++i) {
          for (Element x : chain[i]) {
            table[x] = v[i];
          }
        }
        tables.push_back(std::move(table));

        std::size_t i = k;
        while (i > 0 && v[i - 1] == grid.size() - k + i - 1) {
          --i;
        }
        if (i == 0) {
          break;
        }
        ++v[i - 1];
        for (std::size_t j = i; j < k; ++j) {
          v[j] = v[j - 1] + 1;
        }
      }
    }
    std::sort(tables.begin(), tables.end());
    std::vector<FuzzySubgroup> found;
    for (auto const& table : tables) {
      found.push_back(from_indices(group, grid, table));
    }
    return found;
  }

  std::vector<ElementMap> enumerate_chain_maps(std::size_t source_length,
                                               std::size_t target_length) {
    std::vector<ElementMap> maps;
    if (source_length == 0 || target_length == 0) {
      return maps;
    }
    ElementMap current;
    auto       extend = [&](auto& self, Element low) -> void {
      if (current.size() + 1 == source_length) {
        current.push_back(target_length - 1);
        maps.push_back(current);
        current.pop_back();
        return;
      }
      for (Element y = low; y < target_length; ++y) {
        current.push_back(y);
        self(self, y);
        current.pop_back();
      }
    };
    extend(extend, 0);
    return maps;
  }

  std::vector<FGMorphism> enumerate_fg_morphisms(FuzzyRef const& source,
                                                 FuzzyRef const& target,
                                                 std::uint64_t   budget) {
    std::vector<FGMorphism> found;
    auto const lambdas = enumerate_chain_maps(source->chain().size(), target->chain().size());
    for (ElementMap const& f :
         enumerate_group_homomorphisms(source->group(), target->group(), budget)) {
      for (ElementMap const& lambda : lambdas) {
        bool commutes = true;
        for (Element x = 0; x < f.size() && commutes; ++x) {
          commutes = target->level(f[x]) == lambda[source->level(x)];
        }
        if (commutes) {
          found.push_back(validate_fg_morphism(source, target, f, lambda));
        }
      }
    }
    return found;
  }

  std::vector<FCMorphism> enumerate_fc_morphisms(FCRef const&  source,
                                                 FCRef const&  target,
                                                 std::uint64_t budget) {
    std::vector<FCMorphism> found;
    HomomorphismFilter      on_base;
    on_base.preserve_sigma_maxima = true;
    for (ElementMap const& lambda :
         enumerate_monoid_homomorphisms(source->base, target->base, on_base, budget)) {
      HomomorphismFilter on_cover;
      on_cover.preserve_sigma_maxima = true;
      on_cover.allowed               = [&](Element x, Element y) {
        return target->phi[y] == lambda[source->phi[x]];
      };
      for (ElementMap const& fstar :
           enumerate_monoid_homomorphisms(source->cover, target->cover, on_cover, budget)) {
        found.push_back(validate_fc_morphism(source, target, fstar, lambda));
      }
    }
    return found;
  }

}  // namespace fuzzcover
