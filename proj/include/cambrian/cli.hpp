#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cambrian/selftest.hpp"

namespace cambrian {
namespace cli {

using json = nlohmann::ordered_json;

namespace detail {

// A -q value is a preset name, an inline description, or a path to a file
// holding one of the textual quiver formats.
inline Quiver load_quiver(const std::string& source) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(source, ec)) {
        std::ifstream in(source);
        if (!in) throw ParseError("could not read quiver file: " + source);
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_quiver(buf.str());
    }
    return parse_quiver(source);
}

inline std::string word_of(const CoxeterEngine& eng, const GroupElement& w) {
    return word_to_string(leftmost_word(eng, w).letters);
}

inline json roots_json(const std::vector<IntVec>& roots) {
    json arr = json::array();
    for (const IntVec& beta : roots) arr.push_back(root_to_string(beta));
    return arr;
}

inline json roots_json(const IndecSet& roots) {
    json arr = json::array();
    for (const IntVec& beta : roots) arr.push_back(root_to_string(beta));
    return arr;
}

inline json sorting_word_json(const SortingWord& sw) {
    json obj;
    obj["word"] = word_to_string(sw.letters);
    obj["positions"] = sw.positions;
    json blocks = json::array();
    for (const Word& block : sw.blocks) blocks.push_back(word_to_string(block));
    obj["blocks"] = blocks;
    json supports = json::array();
    for (const std::set<int>& sup : sw.supports)
        supports.push_back(std::vector<int>(sup.begin(), sup.end()));
    obj["supports"] = supports;
    return obj;
}

} // namespace detail

// Front end shared by the binary and the tests. `args` excludes the program
// name. Exit codes: 0 success, 1 domain error (JSON on out), 2 usage error
// (message on err).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coxeter group and quiver module combinatorics"};
    app.require_subcommand(1);

    std::string quiver_src;
    std::string word_text;
    std::optional<int> len_bound;
    std::optional<long> horizon;
    std::string format = "dot";
    std::string only;

    auto add_quiver = [&](CLI::App* sub) {
        sub->add_option("-q,--quiver", quiver_src,
                        "Quiver preset name, file path, or inline description")
            ->required();
    };
    auto add_word = [&](CLI::App* sub) {
        sub->add_option("-w,--word", word_text,
                        "Word in the generators, in evaluation order, e.g. \"2 1\"")
            ->required();
    };

    CLI::App* pi_c_cmd =
        app.add_subcommand("pi-c", "Maximal sortable element weakly below a word");
    add_quiver(pi_c_cmd);
    add_word(pi_c_cmd);

    CLI::App* sortable_cmd =
        app.add_subcommand("sortable", "Test whether a word is sortable");
    add_quiver(sortable_cmd);
    add_word(sortable_cmd);

    CLI::App* leftmost_cmd =
        app.add_subcommand("leftmost", "Leftmost word with positions and blocks");
    add_quiver(leftmost_cmd);
    add_word(leftmost_cmd);

    CLI::App* layers_cmd =
        app.add_subcommand("layers", "Layer roots of a reduced word");
    add_quiver(layers_cmd);
    add_word(layers_cmd);

    CLI::App* bounded_cmd =
        app.add_subcommand("bounded", "Boundedness of a sortable element");
    add_quiver(bounded_cmd);
    add_word(bounded_cmd);
    bounded_cmd->add_option("--horizon", horizon, "Iteration cap for orbit classification");

    CLI::App* antisortable_cmd =
        app.add_subcommand("antisortable", "Maximum of the projection fiber");
    add_quiver(antisortable_cmd);
    add_word(antisortable_cmd);
    antisortable_cmd->add_option("--horizon", horizon, "Step cap for the ascent climb");

    CLI::App* fiber_cmd =
        app.add_subcommand("fiber", "All elements projecting to a sortable element");
    add_quiver(fiber_cmd);
    add_word(fiber_cmd);
    fiber_cmd->add_option("--len-bound", len_bound, "Length bound for the fiber search");

    CLI::App* cone_cmd =
        app.add_subcommand("cone", "Cone basis and extreme rays of a sortable element");
    add_quiver(cone_cmd);
    add_word(cone_cmd);

    CLI::App* removed_cmd =
        app.add_subcommand("removed", "Modules named by leftmost-word positions");
    add_quiver(removed_cmd);
    add_word(removed_cmd);

    CLI::App* torsion_cmd =
        app.add_subcommand("torsion-pair", "Torsion pair of a sortable element");
    add_quiver(torsion_cmd);
    add_word(torsion_cmd);

    CLI::App* ar_cmd =
        app.add_subcommand("ar-quiver", "Preprojective component as DOT or JSON");
    add_quiver(ar_cmd);
    ar_cmd->add_option("-w,--word", word_text, "Mark the modules removed by this word");
    ar_cmd->add_option("--len-bound", len_bound,
                       "Copies of the translation orbit to draw outside Dynkin type");
    ar_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "dot"}));

    CLI::App* selftest_cmd =
        app.add_subcommand("selftest", "Run the acceptance criteria");
    selftest_cmd->add_option("--only", only, "Run a single named criterion");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("cambrian");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    auto emit = [&](const json& doc) {
        out << doc.dump() << "\n";
        return 0;
    };

    try {
        if (pi_c_cmd->parsed()) {
            CoxeterEngine eng(detail::load_quiver(quiver_src));
            GroupElement w = eng.from_word(parse_word(word_text));
            return emit(json{{"result", detail::word_of(eng, pi_c(eng, w))}});
        }
        if (sortable_cmd->parsed()) {
            CoxeterEngine eng(detail::load_quiver(quiver_src));
            GroupElement w = eng.from_word(parse_word(word_text));
            SortingWord sw = leftmost_word(eng, w);
            json obj;
            obj["verdict"] = is_c_sortable(eng, w).has_value();
            obj.update(detail::sorting_word_json(sw));
            if (!obj["verdict"].get<bool>()) {
                for (std::size_t m = 1; m < sw.supports.size(); ++m) {
                    const std::set<int>& outer = sw.supports[m - 1];
                    const std::set<int>& inner = sw.supports[m];
                    std::vector<int> extra;
                    std::set_difference(inner.begin(), inner.end(), outer.begin(),
                                        outer.end(), std::back_inserter(extra));
                    if (!extra.empty()) {
                        obj["witness"] = json{{"block", m + 1}, {"letter", extra.front()}};
                        break;
                    }
                }
            }
            return emit(obj);
        }
        if (leftmost_cmd->parsed()) {
            CoxeterEngine eng(detail::load_quiver(quiver_src));
            GroupElement w = eng.from_word(parse_word(word_text));
            return emit(detail::sorting_word_json(leftmost_word(eng, w)));
        }
        if (layers_cmd->parsed()) {
            CoxeterEngine eng(detail::load_quiver(quiver_src));
            Word word = parse_word(word_text);
            return emit(json{{"result", detail::roots_json(layer_roots(eng, word))}});
        }
        if (bounded_cmd->parsed()) {
            CoxeterEngine eng(detail::load_quiver(quiver_src));
            GroupElement x = eng.from_word(parse_word(word_text));
            BoundednessReport rep = is_bounded(eng, x, horizon);
            json obj{{"verdict", to_string(rep.verdict)}};
            if (rep.verdict == Boundedness::Unbounded) {
                obj["witness"] = root_to_string(*rep.witness);
            } else if (rep.verdict == Boundedness::UnknownAtHorizon) {
                obj["horizon"] = rep.horizon;
            } else {
                json certs = json::array();
                for (const RootCertificate& c : rep.certificates)
                    certs.push_back(json{{"root", root_to_string(c.root)},
                                         {"class", to_string(c.report.cls)},
                                         {"steps", c.report.steps}});
                obj["certificates"] = certs;
            }
            return emit(obj);
        }
        if (antisortable_cmd->parsed()) {
            CoxeterEngine eng(detail::load_quiver(quiver_src));
            GroupElement x = eng.from_word(parse_word(word_text));
            AntisortableResult res =
                horizon ? antisortable(eng, x, *horizon) : antisortable(eng, x);
            if (res.status == AntisortableResult::Status::Found)
                return emit(json{{"result", detail::word_of(eng, *res.element)}});
            if (res.status == AntisortableResult::Status::DoesNotExist)
                return emit(json{{"verdict", "DoesNotExist"}});
            return emit(json{{"verdict", "Horizon"}, {"horizon", res.steps}});
        }
        if (fiber_cmd->parsed()) {
            CoxeterEngine eng(detail::load_quiver(quiver_src));
            GroupElement x = eng.from_word(parse_word(word_text));
            FiberResult res = fiber(eng, x, len_bound);
            json words = json::array();
            for (const GroupElement& w : res.elements)
                words.push_back(detail::word_of(eng, w));
            json obj{{"result", words}, {"len_bound", res.len_bound}};
            if (!res.complete) obj["horizon"] = res.len_bound;
            return emit(obj);
        }
        if (cone_cmd->parsed()) {
            CoxeterEngine eng(detail::load_quiver(quiver_src));
            CambrianFan fan(eng);
            GroupElement x = eng.from_word(parse_word(word_text));
            ConeBasis basis = fan.cambrian_basis(x);
            return emit(json{{"basis", detail::roots_json(basis)},
                             {"rays", detail::roots_json(cone_rays(basis))}});
        }
        if (removed_cmd->parsed()) {
            CoxeterEngine eng(detail::load_quiver(quiver_src));
            GroupElement w = eng.from_word(parse_word(word_text));
            std::vector<PreprojectiveIndex> slots = removed_modules(eng, w);
            long max_copy = 0;
            for (const PreprojectiveIndex& idx : slots)
                max_copy = std::max(max_copy, idx.copy);
            std::optional<long> total = preprojective_total(eng);
            long count = total ? *total : (max_copy + 1) * eng.rank();
            std::map<PreprojectiveIndex, IntVec> table;
            for (const auto& [idx, root] : preprojective_dims(eng, count))
                table[idx] = root;
            json arr = json::array();
            for (const PreprojectiveIndex& idx : slots) {
                json entry{{"module", module_name(idx)},
                           {"position", idx.position(eng.rank())}};
                auto it = table.find(idx);
                if (it != table.end()) entry["root"] = root_to_string(it->second);
                else entry["root"] = nullptr;
                arr.push_back(entry);
            }
            return emit(json{{"result", arr}});
        }
        if (torsion_cmd->parsed()) {
            CoxeterEngine eng(detail::load_quiver(quiver_src));
            ModuleCategory mc(eng);
            GroupElement x = eng.from_word(parse_word(word_text));
            TorsionPairReport rep = torsion_pair_for_sortable(mc, x);
            json obj;
            obj["sortable"] = detail::word_of(eng, rep.sortable);
            obj["antisortable"] = detail::word_of(eng, rep.antisortable);
            obj["torsion"] = detail::roots_json(rep.torsion);
            obj["torsion_free"] = detail::roots_json(rep.torsion_free);
            obj["checks"] =
                json{{"torsion_eq_perp_left", rep.torsion_eq_perp_left},
                     {"torsion_free_eq_perp_right", rep.torsion_free_eq_perp_right},
                     {"torsion_is_torsion_class", rep.torsion_is_torsion_class},
                     {"torsion_free_is_torsion_free_class",
                      rep.torsion_free_is_torsion_free_class},
                     {"hom_vanishes", rep.hom_vanishes}};
            obj["pass"] = rep.all_pass();
            return emit(obj);
        }
        if (ar_cmd->parsed()) {
            CoxeterEngine eng(detail::load_quiver(quiver_src));
            std::optional<GroupElement> remove_for;
            if (!word_text.empty()) remove_for = eng.from_word(parse_word(word_text));
            std::optional<long> copies;
            if (len_bound) copies = *len_bound;
            if (format == "dot") {
                out << ar_quiver_dot(eng, remove_for, copies);
                return 0;
            }
            ArQuiverData data = ar_quiver_data(eng, remove_for, copies);
            json nodes = json::array();
            for (const auto& [idx, root] : data.entries)
                nodes.push_back(json{{"id", ar_node_id(idx)},
                                     {"module", module_name(idx)},
                                     {"root", root_to_string(root)},
                                     {"removed", data.removed.count(idx) > 0}});
            json edges = json::array();
            for (const auto& [a, b] : data.edges)
                edges.push_back(json{{"from", ar_node_id(a)}, {"to", ar_node_id(b)}});
            return emit(json{{"nodes", nodes}, {"edges", edges}});
        }
        if (selftest_cmd->parsed()) {
            std::vector<CriterionResult> results = run_criteria(only);
            bool all = true;
            json arr = json::array();
            for (const CriterionResult& r : results) {
                all = all && r.pass;
                arr.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            }
            out << json{{"pass", all}, {"results", arr}}.dump() << "\n";
            return all ? 0 : 1;
        }
        err << "no subcommand selected\n";
        return 2;
    } catch (const Error& e) {
        out << json{{"error", json{{"type", e.type()}, {"message", e.what()}}}}.dump()
            << "\n";
        return 1;
    }
}

} // namespace cli
} // namespace cambrian
