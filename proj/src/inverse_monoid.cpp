#include "fuzzcover/inverse_monoid.hpp"

#include <algorithm>

#include "fuzzcover/detail/homomorphism_search.hpp"

namespace fuzzcover {

  Partition Partition::from_relation(
      std::size_t                                  n,
      std::function<bool(Element, Element)> const& related) {
    Partition result;
    result.class_of.assign(n, 0);
    for (Element x = 0; x < n; ++x) {
      auto it = std::find_if(
          result.classes.begin(), result.classes.end(), [&](Subset const& c) {
            return related(c.front(), x);
          });
      if (it == result.classes.end()) {
        result.class_of[x] = result.classes.size();
        result.classes.push_back({x});
      } else {
        result.class_of[x] = static_cast<std::size_t>(it - result.classes.begin());
        it->push_back(x);
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (related(x, y) != (result.class_of[x] == result.class_of[y])) {
          throw TheoremCheckFailure("relation is not an equivalence at ("
                                    + std::to_string(x) + ", "
                                    + std::to_string(y) + ")");
        }
      }
    }
    return result;
  }

  Table FiniteInverseMonoid::table() const {
    Table result(size(), std::vector<Element>(size()));
    for (Element x = 0; x < size(); ++x) {
      for (Element y = 0; y < size(); ++y) {
        result[x][y] = product(x, y);
      }
    }
    return result;
  }

  namespace {

    std::vector<std::vector<bool>>
    compute_natural_order(FiniteInverseMonoid const& m, Subset const& idempotents) {
      std::size_t const              n = m.size();
      std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
      for (Element y = 0; y < n; ++y) {
        for (Element e : idempotents) {
          rel[m.product(y, e)][y] = true;
        }
      }
      for (Element x = 0; x < n; ++x) {
        if (!rel[x][x]) {
          throw TheoremCheckFailure("natural order is not reflexive at "
                                    + m.name(x));
        }
        for (Element y = 0; y < n; ++y) {
          if (x != y && rel[x][y] && rel[y][x]) {
            throw TheoremCheckFailure("natural order is not antisymmetric at ("
                                      + m.name(x) + ", " + m.name(y) + ")");
          }
          for (Element z = 0; z < n; ++z) {
            if (rel[x][y] && rel[y][z] && !rel[x][z]) {
              throw TheoremCheckFailure(
                  "natural order is not transitive at (" + m.name(x) + ", "
                  + m.name(y) + ", " + m.name(z) + ")");
            }
          }
        }
      }
      return rel;
    }

    Sigma compute_sigma(FiniteInverseMonoid const& m, Subset const& idempotents) {
      std::size_t const n       = m.size();
      auto              related = [&](Element x, Element y) {
        return std::any_of(idempotents.begin(), idempotents.end(), [&](Element e) {
          return m.product(x, e) == m.product(y, e);
        });
      };
      Partition         classes = Partition::from_relation(n, related);
      std::size_t const k       = classes.classes.size();
      Table             quotient(k, std::vector<Element>(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          quotient[i][j] = classes.class_of[m.product(classes.classes[i].front(),
                                                      classes.classes[j].front())];
        }
      }
      // congruence: the class of a product depends only on the classes
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          if (classes.class_of[m.product(x, y)]
              != quotient[classes.class_of[x]][classes.class_of[y]]) {
            throw MonoidError(MonoidErrorKind::quotient_not_group,
                              {x, y},
                              "sigma is not a congruence at (" + m.name(x)
                                  + ", " + m.name(y) + ")");
          }
        }
      }
      std::vector<std::string> names;
      for (Subset const& c : classes.classes) {
        names.push_back("[" + m.name(c.front()) + "]");
      }
      try {
        FiniteGroup group = validate_group(std::move(names), quotient);
        ElementMap  projection = classes.class_of;
        return Sigma{std::move(classes), std::move(group), std::move(projection)};
      } catch (GroupError const& e) {
        throw MonoidError(MonoidErrorKind::quotient_not_group,
                          {},
                          std::string("sigma quotient is not a group: ")
                              + e.what());
      }
    }

    GreenRelations compute_green(FiniteInverseMonoid const& m) {
      std::size_t const              n = m.size();
      std::vector<std::vector<bool>> right(n, std::vector<bool>(n, false));
      std::vector<std::vector<bool>> left(n, std::vector<bool>(n, false));
      for (Element a = 0; a < n; ++a) {
        for (Element s = 0; s < n; ++s) {
          right[a][m.product(a, s)] = true;
          left[a][m.product(s, a)]  = true;
        }
      }
      GreenRelations green{
          Partition::from_relation(n,
                                   [&](Element a, Element b) {
                                     return right[a] == right[b]
                                            && left[a] == left[b];
                                   }),
          Partition::from_relation(
              n, [&](Element a, Element b) { return right[a] == right[b]; }),
          Partition::from_relation(
              n, [&](Element a, Element b) { return left[a] == left[b]; })};
      return green;
    }

    std::vector<std::optional<Element>>
    compute_sigma_maxima(Partition const&                      classes,
                         std::vector<std::vector<bool>> const& order) {
      std::vector<std::optional<Element>> maxima;
      for (Subset const& c : classes.classes) {
        std::optional<Element> top;
        for (Element candidate : c) {
          if (std::all_of(c.begin(), c.end(), [&](Element x) {
                return order[x][candidate];
              })) {
            top = candidate;
            break;
          }
        }
        maxima.push_back(top);
      }
      return maxima;
    }

  }  // namespace

  FiniteInverseMonoid validate_inverse_monoid(std::vector<std::string> names,
                                              Table const&             table,
                                              Element                  unit) {
    std::size_t const n = table.size();
    if (n == 0 || names.size() != n) {
      throw MonoidError(MonoidErrorKind::not_closed,
                        {},
                        "monoid table must be non-empty and have one row per "
                        "element");
    }
    FiniteInverseMonoid m;
    m._names = std::move(names);
    for (Element x = 0; x < n; ++x) {
      if (table[x].size() != n) {
        throw MonoidError(MonoidErrorKind::not_closed,
                          {x},
                          "row " + m._names[x] + " has wrong length");
      }
      for (Element y = 0; y < n; ++y) {
        if (table[x][y] >= n) {
          throw MonoidError(MonoidErrorKind::not_closed,
                            {x, y},
                            "product " + m._names[x] + "*" + m._names[y]
                                + " is not an element");
        }
        m._table.push_back(table[x][y]);
      }
    }
    m._inverses.assign(n, 0);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          if (m.product(m.product(x, y), z) != m.product(x, m.product(y, z))) {
            throw MonoidError(MonoidErrorKind::not_associative,
                              {x, y, z},
                              "not associative at (" + m._names[x] + ", "
                                  + m._names[y] + ", " + m._names[z] + ")");
          }
        }
      }
    }
    if (unit >= n) {
      throw MonoidError(MonoidErrorKind::not_unital, {}, "unit is not an element");
    }
    m._unit = unit;
    for (Element x = 0; x < n; ++x) {
      if (m.product(unit, x) != x || m.product(x, unit) != x) {
        throw MonoidError(MonoidErrorKind::not_unital,
                          {x},
                          m._names[unit] + " is not a unit: fails at "
                              + m._names[x]);
      }
    }
    for (Element x = 0; x < n; ++x) {
      Subset candidates;
      for (Element y = 0; y < n; ++y) {
        if (m.product(m.product(x, y), x) == x
            && m.product(m.product(y, x), y) == y) {
          candidates.push_back(y);
        }
      }
      if (candidates.empty()) {
        throw MonoidError(MonoidErrorKind::no_inverse,
                          {x},
                          "element " + m._names[x] + " has no inverse");
      }
      if (candidates.size() > 1) {
        throw MonoidError(MonoidErrorKind::non_unique_inverse,
                          {x, candidates[0], candidates[1]},
                          "element " + m._names[x] + " has inverses "
                              + m._names[candidates[0]] + " and "
                              + m._names[candidates[1]]);
      }
      m._inverses[x] = candidates.front();
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (m.inverse(m.product(x, y)) != m.product(m.inverse(y), m.inverse(x))) {
          throw TheoremCheckFailure("(xy)^-1 != y^-1 x^-1 at (" + m._names[x]
                                    + ", " + m._names[y] + ")");
        }
      }
      if (m.inverse(m.inverse(x)) != x) {
        throw TheoremCheckFailure("inverse is not an involution at "
                                  + m._names[x]);
      }
    }

    Subset idempotents;
    for (Element x = 0; x < n; ++x) {
      if (m.is_idempotent(x)) {
        idempotents.push_back(x);
      }
    }
    auto  order   = compute_natural_order(m, idempotents);
    Sigma classes = compute_sigma(m, idempotents);
    auto  maxima  = compute_sigma_maxima(classes.classes, order);
    m._derived    = std::make_shared<DerivedStructure const>(
        DerivedStructure{std::move(idempotents),
                         std::move(order),
                         std::move(classes),
                         compute_green(m),
                         std::move(maxima)});
    return m;
  }

  FiniteInverseMonoid as_inverse_monoid(FiniteGroup const& group) {
    return validate_inverse_monoid(group.names(), group.table(), group.identity());
  }

  std::vector<std::vector<bool>> const& natural_order(FiniteInverseMonoid const& m) {
    return m.derived().natural_order;
  }

  Sigma const& sigma(FiniteInverseMonoid const& m) {
    return m.derived().sigma;
  }

  GreenRelations const& green_relations(FiniteInverseMonoid const& m) {
    return m.derived().green;
  }

  FInverseResult is_f_inverse(FiniteInverseMonoid const& m) {
    auto const& maxima = m.derived().sigma_maxima;
    bool        all    = std::all_of(maxima.begin(), maxima.end(), [](auto const& x) {
      return x.has_value();
    });
    return FInverseResult{all, maxima};
  }

  bool is_clifford(FiniteInverseMonoid const& m) {
    for (Element e : m.derived().idempotents) {
      for (Element x = 0; x < m.size(); ++x) {
        if (m.product(e, x) != m.product(x, e)) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    bool is_total_map(std::span<Element const>   f,
                      FiniteInverseMonoid const& source,
                      FiniteInverseMonoid const& target) {
      return f.size() == source.size()
             && std::all_of(f.begin(), f.end(), [&](Element y) {
                  return y < target.size();
                });
    }
  }  // namespace

  bool is_monoid_homomorphism(std::span<Element const>   f,
                              FiniteInverseMonoid const& source,
                              FiniteInverseMonoid const& target) {
    if (!is_total_map(f, source, target) || f[source.unit()] != target.unit()) {
      return false;
    }
    for (Element x = 0; x < source.size(); ++x) {
      for (Element y = 0; y < source.size(); ++y) {
        if (f[source.product(x, y)] != target.product(f[x], f[y])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_idempotent_separating(std::span<Element const>   f,
                                FiniteInverseMonoid const& source,
                                FiniteInverseMonoid const& target) {
    if (!is_total_map(f, source, target)) {
      return false;
    }
    Subset const& idem = source.derived().idempotents;
    for (std::size_t i = 0; i < idem.size(); ++i) {
      for (std::size_t j = i + 1; j < idem.size(); ++j) {
        if (f[idem[i]] == f[idem[j]]) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_surjective(std::span<Element const>   f,
                     FiniteInverseMonoid const& source,
                     FiniteInverseMonoid const& target) {
    if (!is_total_map(f, source, target)) {
      return false;
    }
    std::vector<bool> hit(target.size(), false);
    for (Element y : f) {
      hit[y] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  namespace {
    bool is_class_maximum(FiniteInverseMonoid const& m, Element x) {
      auto const& top = m.derived().sigma_maxima[m.derived().sigma.projection[x]];
      return top.has_value() && *top == x;
    }
  }  // namespace

  bool preserves_sigma_maxima(std::span<Element const>   f,
                              FiniteInverseMonoid const& source,
                              FiniteInverseMonoid const& target) {
    if (!is_total_map(f, source, target)) {
      return false;
    }
    for (auto const& top : source.derived().sigma_maxima) {
      if (top.has_value() && !is_class_maximum(target, f[*top])) {
        return false;
      }
    }
    return true;
  }

  std::vector<ElementMap>
  enumerate_monoid_homomorphisms(FiniteInverseMonoid const& source,
                                 FiniteInverseMonoid const& target,
                                 HomomorphismFilter const&  filter,
                                 std::uint64_t              budget) {
    Budget                  spent("enumerate_monoid_homomorphisms", budget);
    std::vector<ElementMap> result;
    detail::search_homomorphisms(
        source.size(),
        target.size(),
        [&](Element a, Element b) { return source.product(a, b); },
        [&](Element a, Element b) { return target.product(a, b); },
        [&](Element x, Element y) {
          if (x == source.unit() && y != target.unit()) {
            return false;
          }
          if (filter.preserve_sigma_maxima && is_class_maximum(source, x)
              && !is_class_maximum(target, y)) {
            return false;
          }
          return !filter.allowed || filter.allowed(x, y);
        },
        [&](ElementMap const& f) {
          if (filter.idempotent_separating
              && !is_idempotent_separating(f, source, target)) {
            return;
          }
          if (filter.surjective && !is_surjective(f, source, target)) {
            return;
          }
          result.push_back(f);
        },
        spent);
    return result;
  }

  FiniteInverseMonoid chain_monoid(std::span<Rational const> values) {
    if (values.empty()) {
      throw MonoidError(MonoidErrorKind::empty_chain, {}, "chain is empty");
    }
    std::vector<std::string> names;
    for (Element i = 0; i < values.size(); ++i) {
      if (values[i] < 0 || values[i] > 1) {
        throw MonoidError(MonoidErrorKind::out_of_range,
                          {i},
                          "chain value " + to_string(values[i])
                              + " is outside [0,1]");
      }
      if (i > 0 && !(values[i - 1] < values[i])) {
        throw MonoidError(MonoidErrorKind::unsorted,
                          {i - 1, i},
                          "chain values must be strictly increasing: "
                              + to_string(values[i - 1]) + " then "
                              + to_string(values[i]));
      }
      names.push_back(to_string(values[i]));
    }
    std::size_t const n = values.size();
    Table             table(n, std::vector<Element>(n));
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        table[i][j] = std::min(i, j);
      }
    }
    return validate_inverse_monoid(std::move(names), table, n - 1);
  }

  FiniteInverseMonoid chain_monoid(std::span<MembershipValue const> values) {
    std::vector<Rational> raw;
    for (auto const& v : values) {
      raw.push_back(v.value());
    }
    return chain_monoid(std::span<Rational const>(raw));
  }

}  // namespace fuzzcover
