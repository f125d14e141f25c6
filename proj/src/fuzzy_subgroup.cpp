#include "fuzzcover/fuzzy_subgroup.hpp"

namespace fuzzcover {

  std::vector<Rational> FuzzySubgroup::values() const {
    std::vector<Rational> result;
    for (std::size_t l : _level) {
      result.push_back(_chain[l].value());
    }
    return result;
  }

  FuzzySubgroup validate_fuzzy(FiniteGroup group, std::span<Rational const> mu) {
    if (mu.size() != group.size()) {
      throw FuzzyError(FuzzyErrorKind::size_mismatch,
                       {},
                       "membership map has " + std::to_string(mu.size())
                           + " values for a group of order "
                           + std::to_string(group.size()));
    }
    std::vector<MembershipValue> values;
    for (Element x = 0; x < mu.size(); ++x) {
      auto v = MembershipValue::make(mu[x]);
      if (!v) {
        throw FuzzyError(FuzzyErrorKind::value_out_of_range,
                         {x},
                         "mu(" + group.name(x) + ") = " + to_string(mu[x])
                             + " is outside [0,1]");
      }
      values.push_back(*v);
    }
    if (auto bad = check_fuzzy_axioms(group, std::span<MembershipValue const>(values))) {
      if (bad->kind == FuzzyErrorKind::axiom1_violation) {
        Element x = bad->witness[0], y = bad->witness[1];
        Element xy = group.product(x, y);
        throw FuzzyError(bad->kind,
                         bad->witness,
                         "axiom 1 fails at (" + group.name(x) + ", "
                             + group.name(y) + "): mu(" + group.name(xy)
                             + ") = " + values[xy].to_string() + " < min("
                             + values[x].to_string() + ", "
                             + values[y].to_string() + ")");
      }
      Element x = bad->witness[0];
      throw FuzzyError(bad->kind,
                       bad->witness,
                       "axiom 2 fails at " + group.name(x) + ": mu("
                           + group.name(group.inverse(x)) + ") = "
                           + values[group.inverse(x)].to_string() + " != "
                           + values[x].to_string());
    }

    FuzzySubgroup result(std::move(group));
    result._chain = values;
    std::sort(result._chain.begin(), result._chain.end());
    result._chain.erase(std::unique(result._chain.begin(), result._chain.end()),
                        result._chain.end());
    for (auto const& v : values) {
      result._level.push_back(*result.chain_index(v));
    }
    if (result.mu(result.group().identity()) != result.top()) {
      throw TheoremCheckFailure("mu(e) is not the top of the chain");
    }
    return result;
  }

  Subset level_subset(FuzzySubgroup const& fuzzy, MembershipValue const& u) {
    if (!fuzzy.chain_index(u)) {
      throw FuzzyError(FuzzyErrorKind::value_not_in_chain,
                       {},
                       u.to_string() + " is not a value of mu");
    }
    Subset result;
    for (Element h = 0; h < fuzzy.group().size(); ++h) {
      if (fuzzy.mu(h) >= u) {
        result.push_back(h);
      }
    }
    if (!is_subgroup(fuzzy.group(), result)) {
      throw TheoremCheckFailure("level subset at " + u.to_string()
                                + " is not a subgroup");
    }
    return result;
  }

  PremorphismCheck check_dual_premorphism(std::span<Element const>   psi,
                                          FiniteGroup const&         group,
                                          FiniteInverseMonoid const& monoid) {
    PremorphismCheck check;
    if (psi.size() != group.size()
        || std::any_of(psi.begin(), psi.end(), [&](Element u) {
             return u >= monoid.size();
           })) {
      check.defect  = PremorphismDefect::shape;
      check.message = "map is not total from the group into the monoid";
      return check;
    }
    for (Element h = 0; h < group.size(); ++h) {
      if (psi[group.inverse(h)] != monoid.inverse(psi[h])) {
        check.defect  = PremorphismDefect::inverse;
        check.witness = {h};
        check.message = "psi(" + group.name(h) + "^-1) != psi("
                        + group.name(h) + ")^-1";
        return check;
      }
    }
    for (Element h = 0; h < group.size(); ++h) {
      for (Element k = 0; k < group.size(); ++k) {
        if (!monoid.leq(monoid.product(psi[h], psi[k]),
                        psi[group.product(h, k)])) {
          check.defect  = PremorphismDefect::product;
          check.witness = {h, k};
          check.message = "psi(" + group.name(h) + group.name(k)
                          + ") is not above psi(" + group.name(h) + ")psi("
                          + group.name(k) + ")";
          return check;
        }
      }
    }
    for (Element u = 0; u < monoid.size(); ++u) {
      bool covered = false;
      for (Element h = 0; h < group.size() && !covered; ++h) {
        covered = monoid.leq(u, psi[h]);
      }
      if (!covered) {
        check.defect  = PremorphismDefect::coverage;
        check.witness = {u};
        check.message = monoid.name(u) + " lies below no value of psi";
        return check;
      }
    }
    return check;
  }

  DualPremorphism as_dual_premorphism(FuzzySubgroup const& fuzzy) {
    DualPremorphism result{chain_monoid(fuzzy.chain()), fuzzy.levels(), {}};
    PremorphismCheck check
        = check_dual_premorphism(result.psi, fuzzy.group(), result.chain);
    if (!check.ok()) {
      throw TheoremCheckFailure("fuzzy subgroup is not a dual premorphism: "
                                + check.message);
    }
    for (Element u = 0; u < result.chain.size(); ++u) {
      Element h = 0;
      while (result.psi[h] != u) {
        ++h;
      }
      result.coverage_witness.push_back(h);
    }
    return result;
  }

  DerivedFacts derived_facts(FuzzySubgroup const& fuzzy) {
    FiniteGroup const& g = fuzzy.group();
    DerivedFacts       facts{g.identity(), fuzzy.mu(g.identity()), {}};
    for (Element x = 0; x < g.size(); ++x) {
      if (fuzzy.mu(x) > facts.identity_value) {
        throw TheoremCheckFailure("mu(" + g.name(x) + ") exceeds mu(e)");
      }
      if (fuzzy.mu(g.inverse(x)) != fuzzy.mu(x)) {
        throw TheoremCheckFailure("mu is not symmetric under inversion at "
                                  + g.name(x));
      }
    }
    for (auto const& u : fuzzy.chain()) {
      facts.level_subsets.push_back(level_subset(fuzzy, u));
    }
    for (std::size_t i = 1; i < facts.level_subsets.size(); ++i) {
      if (!std::includes(facts.level_subsets[i - 1].begin(),
                         facts.level_subsets[i - 1].end(),
                         facts.level_subsets[i].begin(),
                         facts.level_subsets[i].end())) {
        throw TheoremCheckFailure("level subsets are not nested");
      }
    }
    // mu(x) = max{u : x in mu_u}
    for (Element x = 0; x < g.size(); ++x) {
      std::size_t best = 0;
      for (std::size_t i = 0; i < facts.level_subsets.size(); ++i) {
        if (std::binary_search(facts.level_subsets[i].begin(),
                               facts.level_subsets[i].end(),
                               x)) {
          best = i;
        }
      }
      if (best != fuzzy.level(x)) {
        throw TheoremCheckFailure("level subsets do not determine mu at "
                                  + g.name(x));
      }
    }
    return facts;
  }

}  // namespace fuzzcover
