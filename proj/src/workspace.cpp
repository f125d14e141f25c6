#include "fuzzcover/workspace.hpp"

#include <algorithm>
#include <optional>

namespace fuzzcover {

  namespace {

    struct Token {
      std::string_view text;
      std::size_t      column;
    };

    struct Line {
      std::size_t        number;
      std::vector<Token> tokens;
    };

    std::vector<Line> tokenize(std::string_view text) {
      std::vector<Line> lines;
      std::size_t       number = 0;
      while (!text.empty() || number == 0) {
        ++number;
        auto             end = text.find('\n');
        std::string_view raw = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
          raw = raw.substr(0, hash);
        }
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
          if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
            ++i;
            continue;
          }
          std::size_t j = i;
          while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') {
            ++j;
          }
          line.tokens.push_back({raw.substr(i, j - i), i + 1});
          i = j;
        }
        if (!line.tokens.empty()) {
          lines.push_back(std::move(line));
        }
        if (end == std::string_view::npos) {
          break;
        }
      }
      return lines;
    }

    // key=value with both sides non-empty
    struct Binding {
      std::string_view key;
      std::string_view value;
      std::size_t      key_column;
      std::size_t      value_column;
    };

    class Parser {
     public:
      explicit Parser(std::string_view text) : _lines(tokenize(text)) {}

      WorkspaceFile run() {
        while (_pos < _lines.size()) {
          Line const&      header  = _lines[_pos++];
          std::string_view keyword = header.tokens[0].text;
          if (keyword == "group") {
            parse_group(header);
          } else if (keyword == "fuzzy") {
            parse_fuzzy(header);
          } else if (keyword == "monoid") {
            parse_monoid(header);
          } else if (keyword == "morphism") {
            parse_morphism(header);
          } else {
            throw SyntaxError(header.number,
                              header.tokens[0].column,
                              "expected 'group', 'fuzzy', 'monoid' or "
                              "'morphism', found '"
                                  + std::string(keyword) + "'");
          }
        }
        return std::move(_result);
      }

     private:
      std::vector<Line> _lines;
      std::size_t       _pos = 0;
      WorkspaceFile     _result;

      [[noreturn]] static void fail(Line const& line, std::size_t token, std::string const& what) {
        std::size_t column = token < line.tokens.size()
                                 ? line.tokens[token].column
                                 : line.tokens.back().column + line.tokens.back().text.size();
        throw SyntaxError(line.number, column, what);
      }

      static void expect_shape(Line const&                          line,
                               std::vector<std::string_view> const& fixed,
                               std::string const&                   usage) {
        // fixed[i] empty means "any name"
        if (line.tokens.size() != fixed.size()) {
          fail(line, std::min(line.tokens.size(), fixed.size()), "expected '" + usage + "'");
        }
        for (std::size_t i = 0; i < fixed.size(); ++i) {
          if (!fixed[i].empty() && line.tokens[i].text != fixed[i]) {
            fail(line, i, "expected '" + usage + "'");
          }
          if (fixed[i].empty() && line.tokens[i].text.find('=') != std::string_view::npos) {
            fail(line, i, "names may not contain '='");
          }
        }
      }

      // Lines of the block body up to, not including, its `end`.
      std::vector<Line const*> body(Line const& header) {
        std::vector<Line const*> lines;
        while (true) {
          if (_pos == _lines.size()) {
            Line const& last = _lines.back();
            throw SyntaxError(last.number + 1,
                              1,
                              "missing 'end' for the " + std::string(header.tokens[0].text)
                                  + " block opened on line "
                                  + std::to_string(header.number));
          }
          Line const& line = _lines[_pos++];
          if (line.tokens[0].text == "end") {
            if (line.tokens.size() != 1) {
              fail(line, 1, "unexpected text after 'end'");
            }
            return lines;
          }
          lines.push_back(&line);
        }
      }

      static Binding binding(Line const& line, std::size_t i) {
        Token const& token = line.tokens[i];
        auto         eq    = token.text.find('=');
        if (eq == std::string_view::npos || eq == 0 || eq + 1 == token.text.size()
            || token.text.find('=', eq + 1) != std::string_view::npos) {
          fail(line, i, "expected 'name=value', found '" + std::string(token.text) + "'");
        }
        return {token.text.substr(0, eq),
                token.text.substr(eq + 1),
                token.column,
                token.column + eq + 1};
      }

      static Rational rational(Line const& line, std::string_view text, std::size_t column) {
        auto value = parse_rational(text);
        if (!value) {
          throw SyntaxError(line.number,
                            column,
                            "expected a rational 'p/q' or integer, found '"
                                + std::string(text) + "'");
        }
        return *value;
      }

      static Element element(Line const&                     line,
                             std::vector<std::string> const& names,
                             std::string_view                label,
                             std::size_t                     column) {
        auto it = std::find(names.begin(), names.end(), label);
        if (it == names.end()) {
          throw UnknownReference(line.number, column, std::string(label));
        }
        return static_cast<Element>(it - names.begin());
      }

      template <typename Named>
      void check_unique(std::vector<Named> const& existing, Line const& header) {
        std::string_view name = header.tokens[1].text;
        for (auto const& item : existing) {
          if (item.name == name) {
            fail(header,
                 1,
                 "duplicate " + std::string(header.tokens[0].text) + " name '"
                     + std::string(name) + "'");
          }
        }
      }

      struct TableBlock {
        std::vector<std::string> names;
        Table                    table;
        std::optional<Element>   unit;
      };

      TableBlock parse_table_block(Line const& header, bool with_unit) {
        TableBlock               block;
        bool                     have_elements = false;
        bool                     have_table    = false;
        std::vector<Line const*> lines         = body(header);
        for (std::size_t k = 0; k < lines.size(); ++k) {
          Line const&      line    = *lines[k];
          std::string_view keyword = line.tokens[0].text;
          if (keyword == "elements" && !have_elements) {
            if (line.tokens.size() < 2) {
              fail(line, 1, "'elements' needs at least one label");
            }
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
              std::string label(line.tokens[i].text);
              if (label.find('=') != std::string::npos) {
                fail(line, i, "labels may not contain '='");
              }
              if (std::find(block.names.begin(), block.names.end(), label)
                  != block.names.end()) {
                fail(line, i, "duplicate element '" + label + "'");
              }
              block.names.push_back(std::move(label));
            }
            have_elements = true;
          } else if (keyword == "unit" && with_unit && have_elements && !block.unit) {
            expect_shape(line, {"unit", ""}, "unit <label>");
            block.unit = element(line, block.names, line.tokens[1].text, line.tokens[1].column);
          } else if (keyword == "table" && have_elements && !have_table) {
            expect_shape(line, {"table"}, "table");
            std::size_t const n = block.names.size();
            if (lines.size() - k - 1 < n) {
              fail(*lines.back(),
                   lines.back()->tokens.size(),
                   "table needs " + std::to_string(n) + " rows");
            }
            for (std::size_t r = 0; r < n; ++r) {
              Line const& row = *lines[++k];
              if (row.tokens.size() != n) {
                fail(row,
                     std::min(row.tokens.size(), n),
                     "table row needs " + std::to_string(n) + " entries");
              }
              std::vector<Element> entries;
              for (Token const& t : row.tokens) {
                entries.push_back(element(row, block.names, t.text, t.column));
              }
              block.table.push_back(std::move(entries));
            }
            have_table = true;
          } else {
            fail(line, 0, "unexpected '" + std::string(keyword) + "' in " +
                              std::string(header.tokens[0].text) + " block");
          }
        }
        if (!have_table || (with_unit && !block.unit)) {
          std::string missing = !have_elements ? "elements" : !have_table ? "table" : "unit";
          throw SyntaxError(header.number,
                            1,
                            std::string(header.tokens[0].text) + " block '"
                                + std::string(header.tokens[1].text) + "' has no "
                                + missing);
        }
        return block;
      }

      void parse_group(Line const& header) {
        expect_shape(header, {"group", ""}, "group <name>");
        check_unique(_result.groups, header);
        TableBlock  block = parse_table_block(header, false);
        std::string name(header.tokens[1].text);
        try {
          _result.groups.push_back({name, validate_group(std::move(block.names), block.table)});
        } catch (Error const& e) {
          throw ValidationError(header.number, "group " + name, e);
        }
      }

      void parse_monoid(Line const& header) {
        expect_shape(header, {"monoid", ""}, "monoid <name>");
        check_unique(_result.monoids, header);
        TableBlock  block = parse_table_block(header, true);
        std::string name(header.tokens[1].text);
        try {
          _result.monoids.push_back(
              {name, validate_inverse_monoid(std::move(block.names), block.table, *block.unit)});
        } catch (Error const& e) {
          throw ValidationError(header.number, "monoid " + name, e);
        }
      }

      void parse_fuzzy(Line const& header) {
        expect_shape(header, {"fuzzy", "", "on", ""}, "fuzzy <name> on <group>");
        check_unique(_result.fuzzies, header);
        std::string const name(header.tokens[1].text);
        NamedGroup const* group = _result.find_group(header.tokens[3].text);
        if (!group) {
          throw UnknownReference(header.number,
                                 header.tokens[3].column,
                                 std::string(header.tokens[3].text));
        }
        auto const&                          names = group->group.names();
        std::vector<std::optional<Rational>> mu(names.size());
        bool                                 have_values = false;
        for (Line const* line : body(header)) {
          if (line->tokens[0].text != "values" || have_values) {
            fail(*line, 0, "unexpected '" + std::string(line->tokens[0].text) + "' in fuzzy block");
          }
          have_values = true;
          for (std::size_t i = 1; i < line->tokens.size(); ++i) {
            Binding b = binding(*line, i);
            Element x = element(*line, names, b.key, b.key_column);
            if (mu[x]) {
              fail(*line, i, "second value for '" + std::string(b.key) + "'");
            }
            mu[x] = rational(*line, b.value, b.value_column);
          }
        }
        try {
          std::vector<Rational> values;
          for (Element x = 0; x < names.size(); ++x) {
            if (!mu[x]) {
              throw FuzzyError(FuzzyErrorKind::size_mismatch,
                               {x},
                               "no value given for " + names[x]);
            }
            values.push_back(*mu[x]);
          }
          auto fuzzy = std::make_shared<FuzzySubgroup const>(validate_fuzzy(group->group, values));
          derived_facts(*fuzzy);
          _result.fuzzies.push_back({name, group->name, std::move(fuzzy)});
        } catch (Error const& e) {
          throw ValidationError(header.number, "fuzzy " + name, e);
        }
      }

      NamedFuzzy const& fuzzy_reference(Line const& line, std::size_t i) {
        NamedFuzzy const* fuzzy = _result.find_fuzzy(line.tokens[i].text);
        if (!fuzzy) {
          throw UnknownReference(line.number, line.tokens[i].column, std::string(line.tokens[i].text));
        }
        return *fuzzy;
      }

      void parse_morphism(Line const& header) {
        expect_shape(header,
                     {"morphism", "", "from", "", "to", ""},
                     "morphism <name> from <fuzzy> to <fuzzy>");
        check_unique(_result.morphisms, header);
        std::string const name(header.tokens[1].text);
        NamedFuzzy const& source = fuzzy_reference(header, 3);
        NamedFuzzy const& target = fuzzy_reference(header, 5);

        auto const& from_names = source.fuzzy->group().names();
        auto const& to_names   = target.fuzzy->group().names();
        std::size_t const unset = static_cast<std::size_t>(-1);
        ElementMap  f(from_names.size(), unset);
        ElementMap  lambda(source.fuzzy->chain().size(), unset);
        bool        have_map = false, have_lambda = false;

        auto level = [](Line const& line, FuzzySubgroup const& fuzzy, Rational value,
                        std::size_t column) {
          auto u     = MembershipValue::make(value);
          auto index = u ? fuzzy.chain_index(*u) : std::nullopt;
          if (!index) {
            throw UnknownReference(line.number, column, to_string(value));
          }
          return *index;
        };

        for (Line const* line : body(header)) {
          std::string_view keyword = line->tokens[0].text;
          bool&            seen    = keyword == "map" ? have_map : have_lambda;
          if ((keyword != "map" && keyword != "lambda") || seen) {
            fail(*line, 0, "unexpected '" + std::string(keyword) + "' in morphism block");
          }
          seen = true;
          for (std::size_t i = 1; i < line->tokens.size(); ++i) {
            Binding b = binding(*line, i);
            if (keyword == "map") {
              Element x = element(*line, from_names, b.key, b.key_column);
              if (f[x] != unset) {
                fail(*line, i, "second image for '" + std::string(b.key) + "'");
              }
              f[x] = element(*line, to_names, b.value, b.value_column);
            } else {
              std::size_t u = level(*line, *source.fuzzy,
                                    rational(*line, b.key, b.key_column), b.key_column);
              if (lambda[u] != unset) {
                fail(*line, i, "second image for '" + std::string(b.key) + "'");
              }
              lambda[u] = level(*line, *target.fuzzy,
                                rational(*line, b.value, b.value_column), b.value_column);
            }
          }
        }
        try {
          auto missing = [](ElementMap const& map, std::size_t unset_value) {
            return std::find(map.begin(), map.end(), unset_value) != map.end();
          };
          if (missing(f, unset) || missing(lambda, unset)) {
            throw MorphismError(MorphismErrorKind::shape,
                                {},
                                missing(f, unset) ? "map does not assign every element"
                                                  : "lambda does not assign every value");
          }
          _result.morphisms.push_back(
              {name,
               source.name,
               target.name,
               validate_fg_morphism(source.fuzzy, target.fuzzy, f, lambda)});
        } catch (Error const& e) {
          throw ValidationError(header.number, "morphism " + name, e);
        }
      }
    };

    template <typename Named>
    Named const* find_named(std::vector<Named> const& items, std::string_view name) {
      for (auto const& item : items) {
        if (item.name == name) {
          return &item;
        }
      }
      return nullptr;
    }

  }  // namespace

  NamedGroup const* WorkspaceFile::find_group(std::string_view name) const {
    return find_named(groups, name);
  }

  NamedFuzzy const* WorkspaceFile::find_fuzzy(std::string_view name) const {
    return find_named(fuzzies, name);
  }

  NamedMonoid const* WorkspaceFile::find_monoid(std::string_view name) const {
    return find_named(monoids, name);
  }

  NamedMorphism const* WorkspaceFile::find_morphism(std::string_view name) const {
    return find_named(morphisms, name);
  }

  WorkspaceFile parse_workspace(std::string_view text) {
    return Parser(text).run();
  }

}  // namespace fuzzcover
