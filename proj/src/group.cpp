#include "fuzzcover/group.hpp"

#include <algorithm>

#include "fuzzcover/detail/homomorphism_search.hpp"

namespace fuzzcover {

  Table FiniteGroup::table() const {
    Table result(size(), std::vector<Element>(size()));
    for (Element x = 0; x < size(); ++x) {
      for (Element y = 0; y < size(); ++y) {
        result[x][y] = product(x, y);
      }
    }
    return result;
  }

  FiniteGroup validate_group(std::vector<std::string> names,
                             Table const&             table) {
    std::size_t const n = table.size();
    if (n == 0 || names.size() != n) {
      throw GroupError(GroupErrorKind::not_closed,
                       {},
                       "group table must be non-empty and have one row per "
                       "element");
    }
    FiniteGroup group;
    group._names = std::move(names);
    group._table.reserve(n * n);
    for (Element x = 0; x < n; ++x) {
      if (table[x].size() != n) {
        throw GroupError(GroupErrorKind::not_closed,
                         {x},
                         "row " + group._names[x] + " has "
                             + std::to_string(table[x].size())
                             + " entries, expected " + std::to_string(n));
      }
      for (Element y = 0; y < n; ++y) {
        if (table[x][y] >= n) {
          throw GroupError(GroupErrorKind::not_closed,
                           {x, y},
                           "product " + group._names[x] + "*"
                               + group._names[y] + " is not an element");
        }
        group._table.push_back(table[x][y]);
      }
    }

    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          if (group.product(group.product(x, y), z)
              != group.product(x, group.product(y, z))) {
            throw GroupError(GroupErrorKind::not_associative,
                             {x, y, z},
                             "not associative at (" + group._names[x] + ", "
                                 + group._names[y] + ", " + group._names[z]
                                 + ")");
          }
        }
      }
    }

    auto is_identity = [&](Element e) {
      for (Element x = 0; x < n; ++x) {
        if (group.product(e, x) != x || group.product(x, e) != x) {
          return false;
        }
      }
      return true;
    };
    Element e = 0;
    while (e < n && !is_identity(e)) {
      ++e;
    }
    if (e == n) {
      throw GroupError(GroupErrorKind::no_identity, {}, "no identity element");
    }
    group._identity = e;

    group._inverses.resize(n);
    for (Element x = 0; x < n; ++x) {
      Element y = 0;
      while (y < n
             && !(group.product(x, y) == e && group.product(y, x) == e)) {
        ++y;
      }
      if (y == n) {
        throw GroupError(GroupErrorKind::missing_inverse,
                         {x},
                         "element " + group._names[x] + " has no inverse");
      }
      group._inverses[x] = y;
    }
    return group;
  }

  bool is_subgroup(FiniteGroup const& group, std::span<Element const> subset) {
    std::vector<bool> member(group.size(), false);
    for (Element x : subset) {
      if (x >= group.size()) {
        return false;
      }
      member[x] = true;
    }
    if (!member[group.identity()]) {
      return false;
    }
    for (Element x : subset) {
      if (!member[group.inverse(x)]) {
        return false;
      }
      for (Element y : subset) {
        if (!member[group.product(x, y)]) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_group_homomorphism(std::span<Element const> f,
                             FiniteGroup const&       source,
                             FiniteGroup const&       target) {
    if (f.size() != source.size()) {
      return false;
    }
    if (std::any_of(f.begin(), f.end(), [&](Element y) {
          return y >= target.size();
        })) {
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

  std::vector<ElementMap>
  enumerate_group_homomorphisms(FiniteGroup const& source,
                                FiniteGroup const& target,
                                std::uint64_t      budget) {
    Budget                  spent("enumerate_group_homomorphisms", budget);
    std::vector<ElementMap> result;
    detail::search_homomorphisms(
        source.size(),
        target.size(),
        [&](Element a, Element b) { return source.product(a, b); },
        [&](Element a, Element b) { return target.product(a, b); },
        [&](Element x, Element y) {
          return x != source.identity() || y == target.identity();
        },
        [&](ElementMap const& f) { result.push_back(f); },
        spent);
    return result;
  }

  std::vector<Subset> all_subgroups(FiniteGroup const& group) {
    std::size_t const n = group.size();
    // Grow from the identity by closure under one extra generator at a time;
    // this reaches every subgroup without scanning all 2^n subsets.
    std::vector<Subset> found;
    auto                closure = [&](Subset gens) {
      std::vector<bool> member(n, false);
      Subset            elems{group.identity()};
      member[group.identity()] = true;
      for (Element g : gens) {
        if (!member[g]) {
          member[g] = true;
          elems.push_back(g);
        }
      }
      for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
          for (Element p : {group.product(elems[i], elems[j]),
                            group.product(elems[j], elems[i])}) {
            if (!member[p]) {
              member[p] = true;
              elems.push_back(p);
            }
          }
        }
      }
      std::sort(elems.begin(), elems.end());
      return elems;
    };
    std::vector<Subset> frontier{closure({})};
    found.push_back(frontier.front());
    while (!frontier.empty()) {
      std::vector<Subset> next;
      for (Subset const& h : frontier) {
        for (Element g = 0; g < n; ++g) {
          if (std::binary_search(h.begin(), h.end(), g)) {
            continue;
          }
          Subset gens = h;
          gens.push_back(g);
          Subset k = closure(gens);
          if (std::find(found.begin(), found.end(), k) == found.end()) {
            found.push_back(k);
            next.push_back(k);
          }
        }
      }
      frontier = std::move(next);
    }
    std::sort(found.begin(), found.end(), [](Subset const& a, Subset const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return found;
  }

  FiniteGroup relabel(FiniteGroup const& group, std::span<Element const> perm) {
    std::size_t const        n = group.size();
    std::vector<std::string> names(n);
    Table                    table(n, std::vector<Element>(n));
    for (Element x = 0; x < n; ++x) {
      names[perm[x]] = group.name(x);
      for (Element y = 0; y < n; ++y) {
        table[perm[x]][perm[y]] = perm[group.product(x, y)];
      }
    }
    return validate_group(std::move(names), table);
  }

  namespace groups {

    FiniteGroup trivial() {
      return cyclic(1);
    }

    FiniteGroup cyclic(std::size_t n) {
      std::vector<std::string> names;
      Table                    table(n, std::vector<Element>(n));
      for (Element x = 0; x < n; ++x) {
        names.push_back(x == 0 ? "e" : "g" + std::to_string(x));
        for (Element y = 0; y < n; ++y) {
          table[x][y] = (x + y) % n;
        }
      }
      if (n == 2) {
        names[1] = "a";
      }
      return validate_group(std::move(names), table);
    }

    FiniteGroup klein_four() {
      // e, a, b, c with bitwise xor on 0, 1, 2, 3
      Table table(4, std::vector<Element>(4));
      for (Element x = 0; x < 4; ++x) {
        for (Element y = 0; y < 4; ++y) {
          table[x][y] = x ^ y;
        }
      }
      return validate_group({"e", "a", "b", "c"}, table);
    }

    namespace {
      // Group of permutations given as images of 0..k-1, closed under
      // composition (p*q)(i) = p(q(i)).
      FiniteGroup
      permutation_group(std::vector<std::vector<std::size_t>> const& perms,
                        std::vector<std::string>                     names) {
        std::size_t const n = perms.size();
        Table             table(n, std::vector<Element>(n));
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) {
            std::vector<std::size_t> composed(perms[x].size());
            for (std::size_t i = 0; i < composed.size(); ++i) {
              composed[i] = perms[x][perms[y][i]];
            }
            auto it = std::find(perms.begin(), perms.end(), composed);
            table[x][y] = static_cast<Element>(it - perms.begin());
          }
        }
        return validate_group(std::move(names), table);
      }
    }  // namespace

    FiniteGroup symmetric3() {
      return permutation_group({{0, 1, 2},
                                {1, 2, 0},
                                {2, 0, 1},
                                {1, 0, 2},
                                {0, 2, 1},
                                {2, 1, 0}},
                               {"id", "r", "r2", "s01", "s12", "s02"});
    }

    FiniteGroup dihedral4() {
      // symmetries of the square with vertices 0..3 in cyclic order
      return permutation_group({{0, 1, 2, 3},
                                {1, 2, 3, 0},
                                {2, 3, 0, 1},
                                {3, 0, 1, 2},
                                {0, 3, 2, 1},
                                {1, 0, 3, 2},
                                {2, 1, 0, 3},
                                {3, 2, 1, 0}},
                               {"id", "r", "r2", "r3", "s0", "s1", "s2", "s3"});
    }

    FiniteGroup quaternion8() {
      // Elements (sign, unit) with unit in {1, i, j, k}; index = 4*sign + unit.
      // Unit products: i*j = k, j*k = i, k*i = j, i*i = j*j = k*k = -1.
      static constexpr int sign[4][4]
          = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
      static constexpr int unit[4][4]
          = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
      Table table(8, std::vector<Element>(8));
      for (Element x = 0; x < 8; ++x) {
        for (Element y = 0; y < 8; ++y) {
          std::size_t const ux = x % 4, uy = y % 4;
          std::size_t const s
              = (x / 4 + y / 4 + static_cast<std::size_t>(sign[ux][uy])) % 2;
          table[x][y] = 4 * s + static_cast<std::size_t>(unit[ux][uy]);
        }
      }
      return validate_group({"1", "i", "j", "k", "-1", "-i", "-j", "-k"},
                            table);
    }

    FiniteGroup direct_product(FiniteGroup const& lhs, FiniteGroup const& rhs) {
      std::size_t const        m = rhs.size();
      std::size_t const        n = lhs.size() * m;
      std::vector<std::string> names;
      Table                    table(n, std::vector<Element>(n));
      for (Element x = 0; x < n; ++x) {
        names.push_back("(" + lhs.name(x / m) + "," + rhs.name(x % m) + ")");
        for (Element y = 0; y < n; ++y) {
          table[x][y] = lhs.product(x / m, y / m) * m
                        + rhs.product(x % m, y % m);
        }
      }
      return validate_group(std::move(names), table);
    }

    std::vector<FiniteGroup> all_up_to_order_8() {
      std::vector<FiniteGroup> result;
      for (std::size_t n = 1; n <= 8; ++n) {
        result.push_back(cyclic(n));
      }
      result.push_back(klein_four());
      result.push_back(symmetric3());
      result.push_back(direct_product(cyclic(2), cyclic(4)));
      result.push_back(
          direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)));
      result.push_back(dihedral4());
      result.push_back(quaternion8());
      return result;
    }

  }  // namespace groups

}  // namespace fuzzcover
