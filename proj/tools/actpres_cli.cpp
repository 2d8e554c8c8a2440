// actpres: derive and check group presentations from actions on graphs.

#include <actpres/actpres.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace actpres;

namespace {

enum Exit { kOk = 0, kInput = 2, kVerify = 3, kLimit = 4 };

struct Source {
    std::string builtin;
    std::string action;
    bool no_loops = false;

    void add_to(CLI::App* cmd) {
        auto* b = cmd->add_option("--builtin", builtin, "built-in action (see list-builtins)");
        auto* a = cmd->add_option("--action", action, "action description JSON file");
        b->excludes(a);
    }

    DerivationInput load() const {
        if (!builtin.empty()) {
            auto in = builtins::make_builtin(builtin);
            if (no_loops) {
                in.loops.clear();
                in = complete_input(std::move(in), false);
            }
            return in;
        }
        if (action.empty()) throw InputError("one of --builtin or --action is required");
        return derivation_input_from_json(parse_json_text(read_file(action)), !no_loops);
    }

    static std::string read_file(const std::string& path) {
        std::ifstream f(path);
        if (!f) throw InputError("cannot read " + path);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    f << text;
}

// Generator images for p, looked up by name among the derivation's generators.
std::vector<ElementId> images_by_name(const Presentation& p, const DerivationInput& in) {
    WordTranslator tr(in);
    std::vector<ElementId> out;
    for (const auto& name : p.generators) {
        auto it = std::find(tr.generator_names().begin(), tr.generator_names().end(), name);
        if (it == tr.generator_names().end()) throw InputError("unknown generator '" + name + "' for this action");
        out.push_back(tr.generator_images()[it - tr.generator_names().begin()]);
    }
    return out;
}

struct VerifyOutcome {
    OrderReport order;
    std::optional<CoveringReport> covering;
    bool ok() const { return order.ok && covering && covering->ok; }
    // a hit enumeration limit is a resource failure, not a refutation
    int exit_code() const { return ok() ? kOk : order.limit_hit ? kLimit : kVerify; }
};

VerifyOutcome run_verification(const Presentation& p, const DerivationInput& in, std::size_t limit) {
    VerifyOutcome v;
    v.order = presentation_order_check(p, images_by_name(p, in), in.ag.group, limit);
    if (v.order.enumerated_order) {
        auto model = build_kozsul_model(p, in, limit);
        v.covering = check_covering_isomorphism(model, in.ag);
    }
    return v;
}

void print_verification(const VerifyOutcome& v) {
    std::cout << "order: ";
    if (v.order.enumerated_order)
        std::cout << *v.order.enumerated_order;
    else
        std::cout << "unknown (limit hit)";
    std::cout << " (expected " << v.order.group_order << ")\n";
    if (!v.order.message.empty()) std::cout << "order check: " << v.order.message << "\n";
    if (v.covering) {
        std::cout << "kozsul model: " << v.covering->model_vertices << " vertices, " << v.covering->model_edges
                  << " edges\n";
        std::cout << "covering: " << (v.covering->ok ? "ok" : v.covering->defect + " (" + v.covering->message + ")")
                  << "\n";
    }
    std::cout << "verification: " << (v.ok() ? "passed" : "FAILED") << "\n";
}

ordered_json verification_json(const VerifyOutcome& v) {
    ordered_json j;
    j["ok"] = v.ok();
    j["order"] = order_report_to_json(v.order);
    if (v.covering) j["covering"] = covering_report_to_json(*v.covering);
    return j;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (item.find_first_not_of(' ') != std::string::npos) out.push_back(item);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Presentations of groups acting on graphs"};
    app.require_subcommand(1);
    std::size_t limit = 1000000;
    app.add_option("--limit", limit, "coset enumeration limit")->capture_default_str();

    Source src;
    std::string out_path;
    bool ascii = false, verify = false, as_json = false;

    auto* derive = app.add_subcommand("derive", "derive a presentation from an action");
    src.add_to(derive);
    derive->add_option("--out", out_path, "write the presentation JSON here");
    derive->add_flag("--ascii", ascii, "print relators only, one per line");
    derive->add_flag("--verify", verify, "check order and Kozsul model");
    derive->add_flag("--no-loops", src.no_loops, "use no loop relations");
    derive->add_flag("--json", as_json, "print the full result as JSON");

    std::string pres_path;
    auto* verify_cmd = app.add_subcommand("verify", "verify a presentation against an action");
    verify_cmd->add_option("--presentation", pres_path, "presentation JSON")->required();
    src.add_to(verify_cmd);
    verify_cmd->add_flag("--json", as_json, "print the report as JSON");

    auto* cox = app.add_subcommand("coxeter-check", "check Coxeter's implication z^2 = 1");
    cox->add_flag("--json", as_json, "print the report as JSON");

    std::string gens_text;
    auto* cay = app.add_subcommand("export-cayley", "write the Cayley diagram of an action's group as DOT");
    src.add_to(cay);
    cay->add_option("--gens", gens_text, "comma-separated words over the action's generators")->required();
    cay->add_option("--out", out_path, "output path (default stdout)");

    std::string format = "dot";
    auto* eg = app.add_subcommand("export-graph", "write an action's graph (dot) or description (json)");
    src.add_to(eg);
    eg->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    eg->add_option("--out", out_path, "output path (default stdout)");

    auto* lb = app.add_subcommand("list-builtins", "list built-in actions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }

    try {
        if (derive->parsed()) {
            auto in = src.load();
            auto res = derive_presentation(in);
            const auto& p = res.presentation;
            auto j = derivation_to_json(res);
            if (!out_path.empty()) write_output(out_path, j.dump(2) + "\n");
            std::optional<VerifyOutcome> v;
            if (verify) v = run_verification(p, in, limit);
            if (as_json) {
                if (v) j["verification"] = verification_json(*v);
                std::cout << j.dump(2) << "\n";
            } else if (ascii) {
                for (const auto& r : p.relators) std::cout << format_word(r, p.generators) << "\n";
            } else {
                std::cout << "action: " << in.name << "\n";
                std::cout << "group order: " << in.ag.group.order() << "\n";
                std::cout << "generators:";
                for (const auto& g : p.generators) std::cout << " " << g;
                std::cout << "\n";
                for (const auto& [name, e] : res.renaming) std::cout << "  " << name << " = edge " << e.str() << "\n";
                std::cout << "relators (" << p.relators.size() << "):\n";
                for (std::size_t i = 0; i < p.relators.size(); ++i)
                    std::cout << "  [" << family_name(res.families[i]) << "] " << format_word(p.relators[i], p.generators)
                              << "\n";
                if (v) print_verification(*v);
            }
            return v ? v->exit_code() : kOk;
        }
        if (verify_cmd->parsed()) {
            auto p = presentation_from_json(parse_json_text(Source::read_file(pres_path)));
            auto in = src.load();
            auto v = run_verification(p, in, limit);
            if (as_json)
                std::cout << verification_json(v).dump(2) << "\n";
            else
                print_verification(v);
            return v.exit_code();
        }
        if (cox->parsed()) {
            auto r = coxeter_implication_check(limit);
            if (as_json) {
                ordered_json j;
                j["ok"] = r.ok;
                j["group_order"] = r.group_order;
                j["z_order"] = r.z_order;
                j["z_central"] = r.z_central;
                j["quotient_order"] = r.quotient_order;
                j["st_group_order"] = r.st_group_order;
                for (const auto& c : r.identities) j["identities"][c.name] = c.holds;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "group_order: " << r.group_order << "\n";
                std::cout << "z_order: " << r.z_order << "\n";
                std::cout << "z_central: " << (r.z_central ? "true" : "false") << "\n";
                std::cout << "quotient_order: " << r.quotient_order << "\n";
                for (const auto& c : r.identities) std::cout << (c.holds ? "holds: " : "FAILS: ") << c.name << "\n";
            }
            return r.ok ? kOk : kVerify;
        }
        if (cay->parsed()) {
            auto in = src.load();
            const auto& G = in.ag.group;
            std::vector<ElementId> S;
            std::vector<std::string> names;
            for (const auto& w : split_commas(gens_text)) {
                auto word = parse_word(w, in.ag.generator_labels);
                S.push_back(evaluate_word(G, word, G.generators(), FiniteGroupTable::identity()));
                names.push_back(w.substr(w.find_first_not_of(' ')));
            }
            if (S.empty()) throw InputError("--gens is empty");
            auto d = cayley_diagram(G, S, names);
            if (!d.generates)
                std::cerr << "warning: the given elements do not generate the group; exporting the subgroup they generate\n";
            write_output(out_path, cayley_to_dot(d));
            return kOk;
        }
        if (eg->parsed()) {
            auto in = src.load();
            if (format == "json")
                write_output(out_path, derivation_input_to_json(in).dump(2) + "\n");
            else
                write_output(out_path, graph_to_dot(in.ag.graph));
            return kOk;
        }
        if (lb->parsed()) {
            for (const auto& b : builtins::list_builtins()) std::cout << b.name << "\t" << b.description << "\n";
            return kOk;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const LimitExceeded& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return kLimit;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kVerify;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kOk;
}
