#include "fuzzcover/commands.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "fuzzcover/cover.hpp"
#include "fuzzcover/embedding.hpp"
#include "fuzzcover/enumeration.hpp"
#include "fuzzcover/workspace.hpp"

namespace fuzzcover {

  namespace {

    using Json = nlohmann::ordered_json;

    class UsageError : public Error {
     public:
      explicit UsageError(std::string const& what) : Error(ErrorCategory::parse, what) {}
    };

    // An error tied to one input file, for diagnostics.
    class FileError : public Error {
     public:
      FileError(std::string const& file, Error const& cause)
          : Error(cause.category(), file + ":" + cause.what()) {}
    };

    char const* category_name(ErrorCategory category) {
      switch (category) {
        case ErrorCategory::parse: return "parse";
        case ErrorCategory::validation: return "validation";
        case ErrorCategory::budget: return "budget";
        case ErrorCategory::theorem_check: return "theorem_check";
      }
      return "unknown";
    }

    struct Report {
      std::ostringstream text;
      Json               results = Json::array();
      // checks that ran and failed; each one names its witness
      std::vector<std::string> failures;
    };

    struct Loaded {
      std::string   file;
      WorkspaceFile workspace;
    };

    std::string join(std::vector<std::string> const& items, std::string const& sep) {
      std::string out;
      for (std::size_t i = 0; i < items.size(); ++i) {
        out += (i ? sep : "") + items[i];
      }
      return out;
    }

    std::vector<std::string> labels(Subset const& subset, std::vector<std::string> const& names) {
      std::vector<std::string> out;
      for (Element x : subset) {
        out.push_back(names[x]);
      }
      return out;
    }

    std::string set_text(Subset const& subset, std::vector<std::string> const& names) {
      return "{" + join(labels(subset, names), ", ") + "}";
    }

    std::vector<std::string> chain_labels(FuzzySubgroup const& fuzzy) {
      std::vector<std::string> out;
      for (auto const& u : fuzzy.chain()) {
        out.push_back(u.to_string());
      }
      return out;
    }

    std::string values_text(FuzzySubgroup const& fuzzy) {
      std::vector<std::string> parts;
      for (Element x = 0; x < fuzzy.group().size(); ++x) {
        parts.push_back(fuzzy.group().name(x) + "=" + fuzzy.mu(x).to_string());
      }
      return join(parts, " ");
    }

    Json values_json(FuzzySubgroup const& fuzzy) {
      Json values = Json::object();
      for (Element x = 0; x < fuzzy.group().size(); ++x) {
        values[fuzzy.group().name(x)] = fuzzy.mu(x).to_string();
      }
      return values;
    }

    std::vector<Loaded> load(std::vector<SourceFile> const& files) {
      std::vector<Loaded> loaded;
      for (SourceFile const& file : files) {
        try {
          loaded.push_back({file.name, parse_workspace(file.text)});
        } catch (Error const& e) {
          throw FileError(file.name, e);
        }
      }
      return loaded;
    }

    std::vector<NamedFuzzy const*> selected_fuzzies(Loaded const& file, CommandFlags const& flags) {
      std::vector<NamedFuzzy const*> out;
      for (NamedFuzzy const& f : file.workspace.fuzzies) {
        if (!flags.fuzzy || *flags.fuzzy == f.name) {
          out.push_back(&f);
        }
      }
      return out;
    }

    // check

    void run_check(std::vector<Loaded> const& files, Report& report) {
      for (Loaded const& file : files) {
        WorkspaceFile const& ws = file.workspace;
        for (NamedGroup const& g : ws.groups) {
          report.text << "group " << g.name << ": OK (order " << g.group.size() << ")\n";
          report.results.push_back(
              {{"kind", "group"}, {"name", g.name}, {"status", "ok"}, {"order", g.group.size()}});
        }
        for (NamedMonoid const& m : ws.monoids) {
          bool f_inverse = is_f_inverse(m.monoid).is_f_inverse;
          bool clifford  = is_clifford(m.monoid);
          report.text << "monoid " << m.name << ": OK (inverse monoid of order "
                      << m.monoid.size() << ", F-inverse: " << (f_inverse ? "yes" : "no")
                      << ", Clifford: " << (clifford ? "yes" : "no") << ")\n";
          report.results.push_back({{"kind", "monoid"},
                                    {"name", m.name},
                                    {"status", "ok"},
                                    {"order", m.monoid.size()},
                                    {"f_inverse", f_inverse},
                                    {"clifford", clifford}});
        }
        for (NamedFuzzy const& f : ws.fuzzies) {
          derived_facts(*f.fuzzy);
          report.text << "fuzzy " << f.name << ": OK (axioms, derived facts)\n";
          report.results.push_back({{"kind", "fuzzy"},
                                    {"name", f.name},
                                    {"status", "ok"},
                                    {"group", f.group},
                                    {"chain", chain_labels(*f.fuzzy)}});
        }
        for (NamedMorphism const& m : ws.morphisms) {
          report.text << "morphism " << m.name << ": OK (" << describe(m.morphism) << ")\n";
          report.results.push_back({{"kind", "morphism"},
                                    {"name", m.name},
                                    {"status", "ok"},
                                    {"from", m.source},
                                    {"to", m.target}});
        }
      }
    }

    // cover

    std::vector<std::string> text_table(FiniteInverseMonoid const& m) {
      std::size_t width = 0;
      for (auto const& name : m.names()) {
        width = std::max(width, name.size());
      }
      auto pad = [&](std::string s) {
        s.resize(width, ' ');
        return s;
      };
      std::vector<std::string> rows;
      std::string              head = std::string(width, ' ') + " |";
      for (Element y = 0; y < m.size(); ++y) {
        head += " " + pad(m.name(y));
      }
      rows.push_back(head);
      for (Element x = 0; x < m.size(); ++x) {
        std::string row = pad(m.name(x)) + " |";
        for (Element y = 0; y < m.size(); ++y) {
          row += " " + pad(m.name(m.product(x, y)));
        }
        while (row.back() == ' ') {
          row.pop_back();
        }
        rows.push_back(row);
      }
      while (rows.front().back() == ' ') {
        rows.front().pop_back();
      }
      return rows;
    }

    Json partition_json(Partition const& p, std::vector<std::string> const& names) {
      Json classes = Json::array();
      for (Subset const& c : p.classes) {
        classes.push_back(labels(c, names));
      }
      return classes;
    }

    std::string partition_text(Partition const& p, std::vector<std::string> const& names) {
      std::vector<std::string> parts;
      for (Subset const& c : p.classes) {
        parts.push_back(set_text(c, names));
      }
      return join(parts, " ");
    }

    void run_cover(std::vector<Loaded> const& files, CommandFlags const& flags, Report& report) {
      std::vector<std::string> const sections = flags.report.empty() ? cover_sections() : flags.report;
      auto wants = [&](std::string const& s) {
        return std::find(sections.begin(), sections.end(), s) != sections.end();
      };
      bool first = true;
      for (Loaded const& file : files) {
        for (NamedFuzzy const* f : selected_fuzzies(file, flags)) {
          CoverMonoid const          cover  = build_cover(*f->fuzzy);
          CoverReport const          cr     = cover_report(cover);
          FiniteInverseMonoid const& m      = cover.monoid();
          auto const&                names  = m.names();
          std::ostream&              out    = report.text;
          Json                       result = {{"fuzzy", f->name},
                                               {"group", f->group},
                                               {"chain", chain_labels(*f->fuzzy)},
                                               {"elements", names},
                                               {"unit", names[cr.unit]},
                                               {"f_inverse", cr.f_inverse},
                                               {"clifford", cr.clifford},
                                               {"closed_forms_consistent", cr.consistent()}};
          if (!first) {
            out << "\n";
          }
          first = false;
          out << "cover of " << f->name << " on " << f->group << ", U = {"
              << join(chain_labels(*f->fuzzy), ", ") << "}: " << m.size() << " elements\n";
          out << "unit " << names[cr.unit] << ", F-inverse: " << (cr.f_inverse ? "yes" : "no")
              << ", Clifford: " << (cr.clifford ? "yes" : "no") << ", closed forms: "
              << (cr.consistent() ? "consistent" : "INCONSISTENT") << "\n";
          for (auto const& d : cr.discrepancies) {
            report.failures.push_back("cover of " + f->name + ": " + d);
          }
          result["discrepancies"] = cr.discrepancies;

          if (wants("table")) {
            out << "[table]\n";
            for (auto const& row : text_table(m)) {
              out << "  " << row << "\n";
            }
            Json table = Json::array();
            for (Element x = 0; x < m.size(); ++x) {
              Json row = Json::array();
              for (Element y = 0; y < m.size(); ++y) {
                row.push_back(names[m.product(x, y)]);
              }
              table.push_back(row);
            }
            result["table"] = table;
          }
          if (wants("idempotents")) {
            out << "[idempotents]\n  " << join(labels(cr.idempotents, names), " ") << "\n";
            result["idempotents"] = labels(cr.idempotents, names);
          }
          if (wants("order")) {
            out << "[order]\n";
            Json order = Json::array();
            for (auto const& [x, y] : cr.strict_order) {
              out << "  " << names[x] << " < " << names[y] << "\n";
              order.push_back({names[x], names[y]});
            }
            result["order"] = order;
          }
          if (wants("sigma")) {
            out << "[sigma]\n";
            Json sigma = Json::array();
            for (std::size_t c = 0; c < cr.sigma.classes.size(); ++c) {
              Subset const& cls = cr.sigma.classes[c];
              out << "  " << set_text(cls, names) << " max " << names[cr.sigma_maxima[c]] << "\n";
              sigma.push_back({{"class", labels(cls, names)}, {"max", names[cr.sigma_maxima[c]]}});
            }
            result["sigma"] = sigma;
          }
          if (wants("green")) {
            out << "[green]\n";
            out << "  H: " << partition_text(cr.green_H, names) << "\n";
            out << "  R: " << partition_text(cr.green_R, names) << "\n";
            out << "  L: " << partition_text(cr.green_L, names) << "\n";
            result["green"] = {{"H", partition_json(cr.green_H, names)},
                               {"R", partition_json(cr.green_R, names)},
                               {"L", partition_json(cr.green_L, names)}};
          }
          if (wants("levels")) {
            out << "[levels]\n";
            Json levels = Json::array();
            for (auto const& u : f->fuzzy->chain()) {
              HClassIsomorphism iso = hclass_level_isomorphism(cover, u);
              out << "  " << u.to_string() << ": H of " << names[iso.idempotent] << " = "
                  << set_text(iso.h_class, names) << " ~ level subset "
                  << set_text(iso.level_subset, f->fuzzy->group().names()) << "\n";
              levels.push_back({{"u", u.to_string()},
                                {"idempotent", names[iso.idempotent]},
                                {"h_class", labels(iso.h_class, names)},
                                {"level_subset", labels(iso.level_subset, f->fuzzy->group().names())}});
            }
            result["levels"] = levels;
          }
          report.results.push_back(std::move(result));
        }
      }
    }

    // levels

    void run_levels(std::vector<Loaded> const& files, CommandFlags const& flags, Report& report) {
      for (Loaded const& file : files) {
        for (NamedFuzzy const* f : selected_fuzzies(file, flags)) {
          FuzzySubgroup const& fuzzy = *f->fuzzy;
          DerivedFacts const   facts = derived_facts(fuzzy);
          CoverMonoid const    cover = build_cover(fuzzy);
          auto const&          names = fuzzy.group().names();
          report.text << "fuzzy " << f->name << " on " << f->group << ": " << values_text(fuzzy)
                      << "\n";
          Json levels = Json::array();
          for (std::size_t i = 0; i < fuzzy.chain().size(); ++i) {
            Subset const& level    = facts.level_subsets[i];
            bool const    subgroup = is_subgroup(fuzzy.group(), level);
            if (!subgroup) {
              report.failures.push_back("level subset of " + f->name + " at "
                                        + fuzzy.chain()[i].to_string() + " is not a subgroup");
            }
            HClassIsomorphism iso = hclass_level_isomorphism(cover, fuzzy.chain()[i]);
            report.text << "  " << fuzzy.chain()[i].to_string() << ": " << set_text(level, names)
                        << (subgroup ? " subgroup" : " NOT a subgroup") << ", order "
                        << level.size() << ", H-class of " << cover.monoid().name(iso.idempotent)
                        << " isomorphic\n";
            levels.push_back({{"u", fuzzy.chain()[i].to_string()},
                              {"level_subset", labels(level, names)},
                              {"subgroup", subgroup},
                              {"h_class", labels(iso.h_class, cover.monoid().names())}});
          }
          report.results.push_back({{"fuzzy", f->name},
                                    {"group", f->group},
                                    {"values", values_json(fuzzy)},
                                    {"levels", levels}});
        }
      }
    }

    // embed

    struct Object {
      std::string name;
      FuzzyRef    fuzzy;
    };

    std::vector<Object> embed_objects(Loaded const& file, CommandFlags const& flags) {
      std::vector<Object> objects;
      for (NamedFuzzy const& f : file.workspace.fuzzies) {
        objects.push_back({f.name, f.fuzzy});
      }
      if (flags.grid) {
        ValueGrid grid = ValueGrid::uniform(*flags.grid);
        for (NamedGroup const& g : file.workspace.groups) {
          std::size_t i = 0;
          for (FuzzySubgroup& f : enumerate_fuzzy_subgroups_filter(g.group, grid, flags.budget)) {
            ++i;
            bool declared = std::any_of(objects.begin(), objects.end(), [&](Object const& o) {
              return *o.fuzzy == f;
            });
            if (!declared) {
              objects.push_back({g.name + "#" + std::to_string(i),
                                 std::make_shared<FuzzySubgroup const>(std::move(f))});
            }
          }
        }
      }
      return objects;
    }

    void run_embed(std::vector<Loaded> const& files, CommandFlags const& flags, Report& report) {
      std::vector<Object> const sources = embed_objects(files.front(), flags);
      std::vector<Object> const targets =
          files.size() > 1 ? embed_objects(files.back(), flags) : sources;

      std::size_t fg_total = 0, fc_total = 0, pairs = 0;
      bool        faithful = true, full = true, functorial = true;
      for (Object const& s : sources) {
        for (Object const& t : targets) {
          EmbeddingCertificate cert = verify_embedding(s.fuzzy, t.fuzzy, flags.budget);
          ++pairs;
          fg_total += cert.fg_hom_count;
          fc_total += cert.fc_hom_count;
          faithful   = faithful && cert.faithful;
          full       = full && cert.full;
          functorial = functorial && cert.identity_preserved && cert.composition_preserved;
          report.text << s.name << " -> " << t.name << ": FG " << cert.fg_hom_count << ", FC "
                      << cert.fc_hom_count << ", faithful " << (cert.faithful ? "OK" : "FAIL")
                      << ", full " << (cert.full ? "OK" : "FAIL") << ", identities "
                      << (cert.identity_preserved ? "OK" : "FAIL") << ", composites "
                      << (cert.composition_preserved ? "OK" : "FAIL") << " ("
                      << cert.composition_checks << " checked)\n";
          for (auto const& c : cert.counterexamples) {
            report.text << "  counterexample: " << c << "\n";
            report.failures.push_back(s.name + " -> " + t.name + ": " + c);
          }
          report.results.push_back({{"source", s.name},
                                    {"target", t.name},
                                    {"fg_homs", cert.fg_hom_count},
                                    {"fc_homs", cert.fc_hom_count},
                                    {"omega_index", cert.omega_index},
                                    {"fullness_index", cert.fullness_index},
                                    {"faithful", cert.faithful},
                                    {"full", cert.full},
                                    {"identity_preserved", cert.identity_preserved},
                                    {"composition_preserved", cert.composition_preserved},
                                    {"composition_checks", cert.composition_checks},
                                    {"counterexamples", cert.counterexamples}});
        }
      }
      for (Loaded const& file : files) {
        for (NamedMorphism const& m : file.workspace.morphisms) {
          FCMorphism image         = omega_morphism(m.morphism);
          bool       reconstructed = reconstruct_fullness(image) == m.morphism;
          if (!reconstructed) {
            report.failures.push_back("morphism " + m.name + " is not recovered from its image");
          }
          report.text << "morphism " << m.name << ": omega " << describe(image)
                      << ", reconstruction " << (reconstructed ? "OK" : "FAIL") << "\n";
          report.results.push_back({{"morphism", m.name},
                                    {"omega", describe(image)},
                                    {"reconstructed", reconstructed}});
        }
      }
      report.text << "faithful: " << (faithful ? "OK" : "FAIL") << ", full: "
                  << (full ? "OK" : "FAIL") << ", functorial: " << (functorial ? "OK" : "FAIL")
                  << ", ";
      if (fg_total == fc_total) {
        report.text << "hom-sets FG=FC=" << fg_total;
      } else {
        report.text << "hom-sets FG=" << fg_total << " FC=" << fc_total;
      }
      report.text << " over " << pairs << " pairs\n";
    }

    // enumerate

    void run_enumerate(std::vector<Loaded> const& files, CommandFlags const& flags, Report& report) {
      if (flags.method != "filter" && flags.method != "chain" && flags.method != "both") {
        throw UsageError("unknown method '" + flags.method + "', expected filter, chain or both");
      }
      ValueGrid const grid = flags.grid ? ValueGrid::uniform(*flags.grid) : ValueGrid::default_grid();
      std::vector<std::string> grid_labels;
      for (auto const& u : grid.levels()) {
        grid_labels.push_back(to_string(u));
      }
      for (Loaded const& file : files) {
        for (NamedGroup const& g : file.workspace.groups) {
          std::vector<FuzzySubgroup> filter, chain;
          if (flags.method != "chain") {
            filter = enumerate_fuzzy_subgroups_filter(g.group, grid, flags.budget);
          }
          if (flags.method != "filter") {
            chain = enumerate_fuzzy_subgroups_chain(g.group, grid, flags.budget);
          }
          bool const                        both   = flags.method == "both";
          bool const                        agree  = !both || filter == chain;
          std::vector<FuzzySubgroup> const& listed = flags.method == "chain" ? chain : filter;

          report.text << "group " << g.name << ", grid {" << join(grid_labels, ", ")
                      << "}: " << listed.size() << " fuzzy subgroups";
          if (both) {
            report.text << " (filter " << filter.size() << ", chain " << chain.size() << ", "
                        << (agree ? "agree" : "DISAGREE") << ")";
          }
          report.text << "\n";
          Json found = Json::array();
          for (FuzzySubgroup const& f : listed) {
            report.text << "  " << values_text(f) << "\n";
            found.push_back(values_json(f));
          }
          if (!agree) {
            report.failures.push_back("filter and chain enumerations of " + g.name + " differ");
          }
          Json result = {{"group", g.name}, {"grid", grid_labels}, {"method", flags.method}};
          if (flags.method != "chain") {
            result["filter_count"] = filter.size();
          }
          if (flags.method != "filter") {
            result["chain_count"] = chain.size();
          }
          result["agree"]           = agree;
          result["fuzzy_subgroups"] = found;
          report.results.push_back(std::move(result));
        }
      }
    }

  }  // namespace

  std::vector<std::string> const& cover_sections() {
    static std::vector<std::string> const sections = {
        "table", "idempotents", "order", "sigma", "green", "levels"};
    return sections;
  }

  CommandResult run_command(std::string const&             command,
                            std::vector<SourceFile> const& files,
                            CommandFlags const&            flags) {
    CommandResult result;
    Report        report;
    Json          doc = {{"schema_version", machine_schema_version}, {"command", command}};
    try {
      std::size_t const max_files = command == "embed" ? 2 : 1;
      if (command != "check" && command != "cover" && command != "levels" && command != "embed"
          && command != "enumerate") {
        throw UsageError("unknown command '" + command + "'");
      }
      if (files.empty() || files.size() > max_files) {
        throw UsageError(command + " takes " + (max_files == 1 ? "one workspace file" : "one or two workspace files"));
      }
      for (auto const& section : flags.report) {
        auto const& known = cover_sections();
        if (std::find(known.begin(), known.end(), section) == known.end()) {
          throw UsageError("unknown report section '" + section + "'");
        }
      }
      if (flags.grid && *flags.grid == 0) {
        throw UsageError("--grid needs at least one level");
      }
      std::vector<Loaded> const loaded = load(files);
      if (flags.fuzzy && !loaded.front().workspace.find_fuzzy(*flags.fuzzy)) {
        throw UsageError("no fuzzy subgroup named '" + *flags.fuzzy + "'");
      }

      if (command == "check") {
        run_check(loaded, report);
      } else if (command == "cover") {
        run_cover(loaded, flags, report);
      } else if (command == "levels") {
        run_levels(loaded, flags, report);
      } else if (command == "embed") {
        run_embed(loaded, flags, report);
      } else {
        run_enumerate(loaded, flags, report);
      }

      for (auto const& f : report.failures) {
        result.diagnostics += "fuzzcover: check failed: " + f + "\n";
      }
      result.exit_code = report.failures.empty() ? 0 : static_cast<int>(ErrorCategory::theorem_check);
      doc["status"]    = report.failures.empty() ? "ok" : "failed";
      doc["exit_code"] = result.exit_code;
      doc["results"]   = std::move(report.results);
      doc["failures"]  = report.failures;
      result.output    = flags.format == OutputFormat::text ? report.text.str() : doc.dump(2) + "\n";
    } catch (Error const& e) {
      result.exit_code   = e.exit_code();
      result.diagnostics = std::string("fuzzcover: ") + category_name(e.category()) + " error: " + e.what() + "\n";
      if (flags.format == OutputFormat::machine) {
        doc["status"]    = "error";
        doc["exit_code"] = result.exit_code;
        doc["error"]     = {{"category", category_name(e.category())}, {"message", e.what()}};
        result.output    = doc.dump(2) + "\n";
      }
    }
    return result;
  }

}  // namespace fuzzcover
