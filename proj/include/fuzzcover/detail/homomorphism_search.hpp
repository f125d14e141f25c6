#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "fuzzcover/error.hpp"

namespace fuzzcover::detail {

  // Backtracking search for every map f: [0, n) -> [0, m) satisfying
  // f(src(a, b)) == dst(f(a), f(b)). Images are assigned in increasing source
  // order and tried in increasing target order, so maps are emitted in
  // lexicographic order. `allowed(x, y)` prunes the candidate image y of x.
  // Each candidate image examined costs one unit of budget.
  template <typename SourceProduct,
            typename TargetProduct,
            typename Allowed,
            typename Emit>
  class HomomorphismSearch {
   public:
    HomomorphismSearch(std::size_t   n,
                       std::size_t   m,
                       SourceProduct src,
                       TargetProduct dst,
                       Allowed       allowed,
                       Emit          emit,
                       Budget&       budget)
        : _n(n),
          _m(m),
          _src(src),
          _dst(dst),
          _allowed(allowed),
          _emit(emit),
          _budget(budget),
          _map(n, unassigned) {}

    void run() {
      if (_n == 0) {
        _emit(_map);
        return;
      }
      assign(0);
    }

   private:
    static constexpr std::size_t unassigned
        = std::numeric_limits<std::size_t>::max();

    void assign(std::size_t x) {
      if (x == _n) {
        _emit(_map);
        return;
      }
      for (std::size_t y = 0; y < _m; ++y) {
        _budget.spend();
        if (!_allowed(x, y)) {
          continue;
        }
        _map[x] = y;
        if (consistent(x)) {
          assign(x + 1);
        }
      }
      _map[x] = unassigned;
    }

    // Checks every product a*b = c with a, b, c <= x and x among them, i.e.
    // exactly the equations that became decidable when x was assigned.
    bool consistent(std::size_t x) const {
      for (std::size_t a = 0; a <= x; ++a) {
        for (std::size_t b = 0; b <= x; ++b) {
          std::size_t c = _src(a, b);
          if (c > x || (a != x && b != x && c != x)) {
            continue;
          }
          if (_map[c] != _dst(_map[a], _map[b])) {
            return false;
          }
        }
      }
      return true;
    }

    std::size_t              _n;
    std::size_t              _m;
    SourceProduct            _src;
    TargetProduct            _dst;
    Allowed                  _allowed;
    Emit                     _emit;
    Budget&                  _budget;
    std::vector<std::size_t> _map;
  };

  template <typename SourceProduct,
            typename TargetProduct,
            typename Allowed,
            typename Emit>
  void search_homomorphisms(std::size_t   n,
                            std::size_t   m,
                            SourceProduct src,
                            TargetProduct dst,
                            Allowed       allowed,
                            Emit          emit,
                            Budget&       budget) {
    HomomorphismSearch<SourceProduct, TargetProduct, Allowed, Emit> search(
        n, m, src, dst, allowed, emit, budget);
    search.run();
  }

}  // namespace fuzzcover::detail
