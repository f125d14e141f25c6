#include "fuzzcover/cover.hpp"

#include <algorithm>
#include <array>

namespace fuzzcover {

  namespace {

    std::string pair_name(std::string const& u, std::string const& x) {
      return "(" + u + "," + x + ")";
    }

    void certify_projection(FiniteInverseMonoid const& cover,
                            FiniteInverseMonoid const& monoid,
                            ElementMap const&          phi,
                            std::string const&         what) {
      if (!is_monoid_homomorphism(phi, cover, monoid)) {
        throw TheoremCheckFailure(what + ": projection is not a homomorphism");
      }
      if (!is_surjective(phi, cover, monoid)) {
        throw TheoremCheckFailure(what + ": projection is not surjective");
      }
      if (!is_idempotent_separating(phi, cover, monoid)) {
        throw TheoremCheckFailure(what
                                  + ": projection is not idempotent separating");
      }
    }

    bool is_group_isomorphism(std::span<Element const> f,
                              FiniteGroup const&       source,
                              FiniteGroup const&       target) {
      if (source.size() != target.size()
          || !is_group_homomorphism(f, source, target)) {
        return false;
      }
      std::vector<bool> hit(target.size(), false);
      for (Element y : f) {
        if (hit[y]) {
          return false;
        }
        hit[y] = true;
      }
      return true;
    }

  }  // namespace

  CoverMonoid build_cover(FuzzySubgroup const& fuzzy) {
    FiniteGroup const&     g = fuzzy.group();
    std::vector<CoverPair> pairs;
    std::vector<Element>   offset;
    std::size_t            expected_size = 0;
    for (Element x = 0; x < g.size(); ++x) {
      offset.push_back(pairs.size());
      for (std::size_t l = 0; l <= fuzzy.level(x); ++l) {
        pairs.push_back({l, x});
      }
      // |{u in U : u <= mu(x)}|, counted on values rather than indices
      expected_size += static_cast<std::size_t>(
          std::count_if(fuzzy.chain().begin(), fuzzy.chain().end(), [&](auto const& u) {
            return u <= fuzzy.mu(x);
          }));
    }
    if (pairs.size() != expected_size) {
      throw TheoremCheckFailure("cover size differs from sum over x of "
                                "|{u <= mu(x)}|");
    }

    std::size_t const        n = pairs.size();
    std::vector<std::string> names;
    Table                    table(n, std::vector<Element>(n));
    for (Element i = 0; i < n; ++i) {
      names.push_back(pair_name(fuzzy.chain()[pairs[i].level].to_string(),
                                g.name(pairs[i].element)));
      for (Element j = 0; j < n; ++j) {
        std::size_t level = std::min(pairs[i].level, pairs[j].level);
        Element     xy    = g.product(pairs[i].element, pairs[j].element);
        if (level > fuzzy.level(xy)) {
          throw TheoremCheckFailure("cover is not closed: " + names.back()
                                    + " times element " + std::to_string(j));
        }
        table[i][j] = offset[xy] + level;
      }
    }

    std::size_t const top  = fuzzy.chain().size() - 1;
    Element const     unit = offset[g.identity()] + top;
    FiniteInverseMonoid monoid = [&] {
      try {
        return validate_inverse_monoid(names, table, unit);
      } catch (MonoidError const& e) {
        throw TheoremCheckFailure(std::string("cover is not an inverse monoid: ")
                                  + e.what());
      }
    }();
    FiniteInverseMonoid chain = chain_monoid(fuzzy.chain());
    ElementMap          projection;
    for (CoverPair const& p : pairs) {
      projection.push_back(p.level);
    }

    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        CoverPair const& lhs = pairs[i];
        CoverPair const& rhs = pairs[j];
        CoverPair const& got = pairs[monoid.product(i, j)];
        CoverPair const  want{std::min(lhs.level, rhs.level),
                             g.product(lhs.element, rhs.element)};
        if (got != want) {
          throw TheoremCheckFailure("product law fails at " + names[i] + ", "
                                    + names[j]);
        }
      }
    }
    if (!is_f_inverse(monoid).is_f_inverse) {
      throw TheoremCheckFailure("cover is not F-inverse");
    }
    if (!is_clifford(monoid)) {
      throw TheoremCheckFailure("cover is not Clifford");
    }
    certify_projection(monoid, chain, projection, "cover");
    return CoverMonoid(fuzzy,
                       std::move(pairs),
                       std::move(offset),
                       std::move(monoid),
                       std::move(chain),
                       std::move(projection));
  }

  CoverReport cover_report(CoverMonoid const& cover) {
    FiniteInverseMonoid const& t     = cover.monoid();
    FuzzySubgroup const&       fuzzy = cover.source();
    FiniteGroup const&         g     = fuzzy.group();
    auto const&                pairs = cover.pairs();
    std::size_t const          n     = t.size();
    DerivedStructure const&    d     = t.derived();

    CoverReport report;
    report.idempotents = d.idempotents;
    report.unit        = t.unit();
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (x != y && t.leq(x, y)) {
          report.strict_order.emplace_back(x, y);
        }
      }
    }
    report.sigma = d.sigma.classes;
    for (auto const& m : d.sigma_maxima) {
      report.sigma_maxima.push_back(m.value_or(n));
    }
    report.green_H   = d.green.H;
    report.green_R   = d.green.R;
    report.green_L   = d.green.L;
    report.f_inverse = is_f_inverse(t).is_f_inverse;
    report.clifford  = is_clifford(t);

    auto fail = [&](std::string msg) {
      report.discrepancies.push_back(std::move(msg));
    };

    // idempotents are exactly the pairs (u, e)
    Subset closed_idempotents;
    for (Element i = 0; i < n; ++i) {
      if (pairs[i].element == g.identity()) {
        closed_idempotents.push_back(i);
      }
    }
    if (closed_idempotents != report.idempotents) {
      fail("idempotents differ from {(u,e)}");
    }

    // unit is (mu(e), e)
    if (cover.index_of(fuzzy.level(g.identity()), g.identity()) != t.unit()) {
      fail("unit differs from (mu(e),e)");
    }

    // (u,x) <= (v,y) iff x = y and u <= v
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        bool closed = pairs[i].element == pairs[j].element
                      && fuzzy.chain()[pairs[i].level] <= fuzzy.chain()[pairs[j].level];
        if (closed != t.leq(i, j)) {
          fail("natural order differs at " + t.name(i) + ", " + t.name(j));
        }
      }
    }

    // sigma class of (u,x) is {(v,x) : v <= mu(x)}, maximum (mu(x), x)
    Partition closed_sigma = Partition::from_relation(n, [&](Element i, Element j) {
      return pairs[i].element == pairs[j].element;
    });
    if (closed_sigma != report.sigma) {
      fail("sigma classes differ from the fibres over G");
    }
    for (std::size_t c = 0; c < report.sigma.classes.size(); ++c) {
      Element x        = pairs[report.sigma.classes[c].front()].element;
      auto    expected = cover.index_of(fuzzy.level(x), x);
      if (!d.sigma_maxima[c] || d.sigma_maxima[c] != expected) {
        fail("sigma maximum over " + g.name(x) + " differs from (mu(x),x)");
      }
    }

    // C/sigma -> G, [(mu(x),x)] -> x, is an isomorphism
    ElementMap gamma_inverse;
    for (Subset const& c : report.sigma.classes) {
      gamma_inverse.push_back(pairs[c.front()].element);
    }
    if (!is_group_isomorphism(gamma_inverse, d.sigma.quotient, g)) {
      fail("C/sigma is not isomorphic to G via the sigma maxima");
    }

    if (!report.f_inverse) {
      fail("cover is not F-inverse");
    }
    if (!report.clifford) {
      fail("cover is not Clifford");
    }
    if (report.clifford && report.green_H != report.green_R) {
      fail("H and R differ in a Clifford monoid");
    }
    return report;
  }

  HClassIsomorphism hclass_level_isomorphism(CoverMonoid const&     cover,
                                             MembershipValue const& u) {
    FuzzySubgroup const&       fuzzy = cover.source();
    FiniteGroup const&         g     = fuzzy.group();
    FiniteInverseMonoid const& t     = cover.monoid();
    auto                       level = fuzzy.chain_index(u);
    if (!level) {
      throw FuzzyError(FuzzyErrorKind::value_not_in_chain,
                       {},
                       u.to_string() + " is not a value of mu");
    }
    HClassIsomorphism result;
    result.level        = *level;
    result.idempotent   = *cover.index_of(*level, g.identity());
    result.level_subset = level_subset(fuzzy, u);
    Partition const& h  = t.derived().green.H;
    result.h_class      = h.classes[h.class_of[result.idempotent]];

    Subset expected;
    for (Element x = 0; x < g.size(); ++x) {
      if (auto i = cover.index_of(*level, x)) {
        expected.push_back(*i);
      }
    }
    if (expected != result.h_class) {
      throw TheoremCheckFailure("H-class of " + t.name(result.idempotent)
                                + " differs from {(u,h) : u <= mu(h)}");
    }
    for (Element i : result.h_class) {
      result.to_group.push_back(cover.pairs()[i].element);
    }
    Subset image = result.to_group;
    std::sort(image.begin(), image.end());
    if (image != result.level_subset
        || std::adjacent_find(image.begin(), image.end()) != image.end()) {
      throw TheoremCheckFailure("(u,h) -> h is not a bijection onto the level "
                                "subset at "
                                + u.to_string());
    }
    for (std::size_t a = 0; a < result.h_class.size(); ++a) {
      for (std::size_t b = 0; b < result.h_class.size(); ++b) {
        Element prod = t.product(result.h_class[a], result.h_class[b]);
        if (cover.pairs()[prod].element
            != g.product(result.to_group[a], result.to_group[b])) {
          throw TheoremCheckFailure("(u,h) -> h is not a homomorphism at "
                                    + t.name(result.h_class[a]) + ", "
                                    + t.name(result.h_class[b]));
        }
      }
    }
    return result;
  }

  DualPremorphismCover theorem_r1_construct(std::span<Element const>   psi,
                                            FiniteGroup const&         group,
                                            FiniteInverseMonoid const& monoid) {
    PremorphismCheck check = check_dual_premorphism(psi, group, monoid);
    if (check.defect == PremorphismDefect::coverage) {
      throw CoverError(CoverErrorKind::coverage_failure,
                       check.witness,
                       "coverage fails: " + check.message);
    }
    if (!check.ok()) {
      throw CoverError(CoverErrorKind::not_dual_premorphism,
                       check.witness,
                       "not a dual premorphism: " + check.message);
    }

    std::vector<std::pair<Element, Element>>         pairs;
    ElementMap                                       projection;
    std::vector<std::string>                         names;
    std::vector<std::vector<std::optional<Element>>> index(
        group.size(), std::vector<std::optional<Element>>(monoid.size()));
    for (Element h = 0; h < group.size(); ++h) {
      for (Element u = 0; u < monoid.size(); ++u) {
        if (monoid.leq(u, psi[h])) {
          index[h][u] = pairs.size();
          pairs.emplace_back(u, h);
          projection.push_back(u);
          names.push_back(pair_name(monoid.name(u), group.name(h)));
        }
      }
    }
    std::size_t const n = pairs.size();
    Table             table(n, std::vector<Element>(n));
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        auto [u, h]  = pairs[i];
        auto [v, k]  = pairs[j];
        auto product = index[group.product(h, k)][monoid.product(u, v)];
        if (!product) {
          throw TheoremCheckFailure("construction is not closed at " + names[i]
                                    + ", " + names[j]);
        }
        table[i][j] = *product;
      }
    }
    auto unit = index[group.identity()][monoid.unit()];
    if (!unit) {
      throw TheoremCheckFailure("(1, e) is not in the construction");
    }
    DualPremorphismCover result = [&] {
      try {
        return DualPremorphismCover{
            validate_inverse_monoid(std::move(names), table, *unit),
            std::move(pairs),
            std::move(projection)};
      } catch (MonoidError const& e) {
        throw TheoremCheckFailure(std::string("construction is not an inverse "
                                              "monoid: ")
                                  + e.what());
      }
    }();
    if (!is_f_inverse(result.monoid).is_f_inverse) {
      throw TheoremCheckFailure("construction is not F-inverse");
    }
    certify_projection(result.monoid, monoid, result.projection, "construction");
    if (!monoid_isomorphic(as_inverse_monoid(sigma(result.monoid).quotient),
                           as_inverse_monoid(group))) {
      throw TheoremCheckFailure("construction modulo sigma is not isomorphic "
                                "to the group");
    }
    return result;
  }

  RecoveredPremorphism
  cover_to_dual_premorphism(FiniteInverseMonoid const& cover,
                            FiniteInverseMonoid const& monoid,
                            std::span<Element const>   phi,
                            std::uint64_t              budget) {
    FInverseResult f_inverse = is_f_inverse(cover);
    if (!f_inverse.is_f_inverse) {
      throw CoverError(CoverErrorKind::not_f_inverse, {}, "cover is not F-inverse");
    }
    if (!is_monoid_homomorphism(phi, cover, monoid)) {
      throw CoverError(CoverErrorKind::not_homomorphism,
                       {},
                       "projection is not a monoid homomorphism");
    }
    if (!is_idempotent_separating(phi, cover, monoid)) {
      throw CoverError(CoverErrorKind::not_idempotent_separating,
                       {},
                       "projection is not idempotent separating");
    }
    if (!is_surjective(phi, cover, monoid)) {
      throw CoverError(CoverErrorKind::not_surjective,
                       {},
                       "projection is not surjective");
    }
    FiniteGroup const& group = sigma(cover).quotient;
    ElementMap         psi;
    for (auto const& top : f_inverse.maxima) {
      psi.push_back(phi[*top]);
    }
    PremorphismCheck check = check_dual_premorphism(psi, group, monoid);
    if (!check.ok()) {
      throw TheoremCheckFailure("recovered map is not a dual premorphism with "
                                "coverage: "
                                + check.message);
    }
    DualPremorphismCover rebuilt = theorem_r1_construct(psi, group, monoid);
    auto                 iso     = monoid_isomorphic(rebuilt.monoid, cover, budget);
    if (!iso) {
      throw TheoremCheckFailure("rebuilt cover is not isomorphic to the "
                                "original");
    }
    return RecoveredPremorphism{group, std::move(psi), std::move(rebuilt), std::move(*iso)};
  }

  namespace {

    // Isomorphism invariants of a single element.
    using Signature = std::array<std::size_t, 7>;

    std::vector<Signature> signatures(FiniteInverseMonoid const& m) {
      DerivedStructure const& d = m.derived();
      std::vector<Signature>  result;
      for (Element x = 0; x < m.size(); ++x) {
        std::size_t below = 0, above = 0;
        for (Element y = 0; y < m.size(); ++y) {
          below += m.leq(y, x);
          above += m.leq(x, y);
        }
        // index of the first repeated power of x
        std::vector<Element> powers{x};
        while (std::find(powers.begin(), powers.end(), m.product(powers.back(), x))
               == powers.end()) {
          powers.push_back(m.product(powers.back(), x));
        }
        result.push_back({m.is_idempotent(x) ? 1u : 0u,
                          d.sigma.classes.classes[d.sigma.projection[x]].size(),
                          d.green.H.classes[d.green.H.class_of[x]].size(),
                          d.green.R.classes[d.green.R.class_of[x]].size(),
                          d.green.L.classes[d.green.L.class_of[x]].size(),
                          below * 1000 + above,
                          powers.size()});
      }
      return result;
    }

    class IsomorphismSearch {
     public:
      IsomorphismSearch(FiniteInverseMonoid const& lhs,
                        FiniteInverseMonoid const& rhs,
                        std::uint64_t              budget)
          : _lhs(lhs),
            _rhs(rhs),
            _lhs_sig(signatures(lhs)),
            _rhs_sig(signatures(rhs)),
            _budget("monoid_isomorphic", budget) {}

      std::optional<ElementMap> run() {
        std::size_t const n = _lhs.size();
        if (n != _rhs.size()) {
          return std::nullopt;
        }
        auto sorted = [](std::vector<Signature> s) {
          std::sort(s.begin(), s.end());
          return s;
        };
        if (sorted(_lhs_sig) != sorted(_rhs_sig)) {
          return std::nullopt;
        }
        State state{ElementMap(n, unset), std::vector<bool>(n, false)};
        if (!bind(state, _lhs.unit(), _rhs.unit())) {
          return std::nullopt;
        }
        return search(std::move(state));
      }

     private:
      static constexpr Element unset = static_cast<Element>(-1);

      struct State {
        ElementMap        map;
        std::vector<bool> used;
      };

      bool bind(State& s, Element x, Element y) {
        if (s.map[x] != unset) {
          return s.map[x] == y;
        }
        if (s.used[y] || _lhs_sig[x] != _rhs_sig[y]) {
          return false;
        }
        s.map[x]  = y;
        s.used[y] = true;
        return true;
      }

      // Forces every product of bound elements until nothing changes.
      bool propagate(State& s) {
        bool changed = true;
        while (changed) {
          changed = false;
          for (Element a = 0; a < _lhs.size(); ++a) {
            if (s.map[a] == unset) {
              continue;
            }
            for (Element b = 0; b < _lhs.size(); ++b) {
              if (s.map[b] == unset) {
                continue;
              }
              Element c    = _lhs.product(a, b);
              Element want = _rhs.product(s.map[a], s.map[b]);
              if (s.map[c] == unset) {
                if (!bind(s, c, want)) {
                  return false;
                }
                changed = true;
              } else if (s.map[c] != want) {
                return false;
              }
            }
          }
        }
        return true;
      }

      std::optional<ElementMap> search(State state) {
        if (!propagate(state)) {
          return std::nullopt;
        }
        auto next = std::find(state.map.begin(), state.map.end(), unset);
        if (next == state.map.end()) {
          return state.map;
        }
        Element x = static_cast<Element>(next - state.map.begin());
        for (Element y = 0; y < _rhs.size(); ++y) {
          _budget.spend();
          State attempt = state;
          if (bind(attempt, x, y)) {
            if (auto found = search(std::move(attempt))) {
              return found;
            }
          }
        }
        return std::nullopt;
      }

      FiniteInverseMonoid const& _lhs;
      FiniteInverseMonoid const& _rhs;
      std::vector<Signature>     _lhs_sig;
      std::vector<Signature>     _rhs_sig;
      Budget                     _budget;
    };

  }  // namespace

  std::optional<ElementMap> monoid_isomorphic(FiniteInverseMonoid const& lhs,
                                              FiniteInverseMonoid const& rhs,
                                              std::uint64_t              budget) {
    return IsomorphismSearch(lhs, rhs, budget).run();
  }

}  // namespace fuzzcover
