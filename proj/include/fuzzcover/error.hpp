#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fuzzcover {

  // Every failure raised by the library belongs to exactly one category. The
  // CLI exit code is derived from it.
  enum class ErrorCategory {
    parse = 1,
    validation = 2,
    budget = 3,
    theorem_check = 4,
  };

  class Error : public std::runtime_error {
   public:
    Error(ErrorCategory category, std::string const& what)
        : std::runtime_error(what), _category(category) {}

    ErrorCategory category() const noexcept {
      return _category;
    }

    int exit_code() const noexcept {
      return static_cast<int>(_category);
    }

   private:
    ErrorCategory _category;
  };

  class BudgetExceeded : public Error {
   public:
    BudgetExceeded(std::string const& where, std::uint64_t limit)
        : Error(ErrorCategory::budget,
                where + ": enumeration budget of " + std::to_string(limit)
                    + " candidates exceeded"),
          _limit(limit) {}

    std::uint64_t limit() const noexcept {
      return _limit;
    }

   private:
    std::uint64_t _limit;
  };

  // Raised when a claim that should hold for every valid input fails on a
  // concrete instance. Carries the witness in its message.
  class TheoremCheckFailure : public Error {
   public:
    explicit TheoremCheckFailure(std::string const& what)
        : Error(ErrorCategory::theorem_check, what) {}
  };

  inline constexpr std::uint64_t default_budget = 50'000'000;

  // Counts candidates examined by an enumerator and throws once the limit is
  // passed. Not thread-safe; one per enumeration.
  class Budget {
   public:
    Budget(std::string where, std::uint64_t limit)
        : _where(std::move(where)), _limit(limit) {}

    void spend(std::uint64_t n = 1) {
      _used += n;
      if (_used > _limit) {
        throw BudgetExceeded(_where, _limit);
      }
    }

    std::uint64_t used() const noexcept {
      return _used;
    }

    std::uint64_t limit() const noexcept {
      return _limit;
    }

   private:
    std::string   _where;
    std::uint64_t _limit;
    std::uint64_t _used = 0;
  };

}  // namespace fuzzcover
