#pragma once

#include <exception>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzcover/embedding.hpp"
#include "fuzzcover/error.hpp"
#include "fuzzcover/fuzzy_subgroup.hpp"
#include "fuzzcover/group.hpp"
#include "fuzzcover/inverse_monoid.hpp"

namespace fuzzcover {

  // Positions are 1-based.
  class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t line, std::size_t column, std::string const& what)
        : Error(ErrorCategory::parse,
                std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }

    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  class UnknownReference : public Error {
   public:
    UnknownReference(std::size_t line, std::size_t column, std::string name)
        : Error(ErrorCategory::parse,
                std::to_string(line) + ":" + std::to_string(column)
                    + ": unknown name '" + name + "'"),
          _name(std::move(name)) {}

    std::string const& name() const noexcept {
      return _name;
    }

   private:
    std::string _name;
  };

  // A block parsed fine but the object it describes is rejected. The
  // original error is kept in cause() and decides the category.
  class ValidationError : public Error {
   public:
    ValidationError(std::size_t line, std::string const& block, Error const& cause)
        : Error(cause.category(),
                std::to_string(line) + ": " + block + ": " + cause.what()),
          _line(line),
          _cause(std::current_exception()) {}

    std::size_t line() const noexcept {
      return _line;
    }

    std::exception_ptr cause() const noexcept {
      return _cause;
    }

   private:
    std::size_t        _line;
    std::exception_ptr _cause;
  };

  struct NamedGroup {
    std::string name;
    FiniteGroup group;
  };

  struct NamedFuzzy {
    std::string name;
    std::string group;
    FuzzyRef    fuzzy;
  };

  struct NamedMonoid {
    std::string         name;
    FiniteInverseMonoid monoid;
  };

  struct NamedMorphism {
    std::string name;
    std::string source;
    std::string target;
    FGMorphism  morphism;
  };

  // Objects in declaration order. Blocks:
  //
  //   group <name>            fuzzy <name> on <group>
  //   elements a b ...        values a=p/q b=1 ...
  //   table                   end
  //   <n rows of n labels>
  //   end
  //
  //   monoid <name>           morphism <name> from <fuzzy> to <fuzzy>
  //   elements a b ...        map a=b ...
  //   unit <label>            lambda p/q=r/s ...
  //   table                   end
  //   <n rows of n labels>
  //   end
  //
  // '#' starts a comment. Names must be declared before they are used.
  struct WorkspaceFile {
    std::vector<NamedGroup>    groups;
    std::vector<NamedFuzzy>    fuzzies;
    std::vector<NamedMonoid>   monoids;
    std::vector<NamedMorphism> morphisms;

    NamedGroup const*    find_group(std::string_view name) const;
    NamedFuzzy const*    find_fuzzy(std::string_view name) const;
    NamedMonoid const*   find_monoid(std::string_view name) const;
    NamedMorphism const* find_morphism(std::string_view name) const;
  };

  WorkspaceFile parse_workspace(std::string_view text);

}  // namespace fuzzcover
