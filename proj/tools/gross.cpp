// Command-line front end: expression evaluation, set counting, sequence
// algebra, machine execution, and tree simulation. Single-value commands
// print the bare canonical value; report commands print one `key: value`
// line per field (`key=value` with --format kv); verdict lines are always
// `name=true|false`. Exit 0 on success, 1 on domain errors (the message
// starts with the error name), 2 on usage errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gross/grossnum.hpp"
#include "gross/machine.hpp"
#include "gross/numeral_system.hpp"
#include "gross/observability.hpp"
#include "gross/parse.hpp"
#include "gross/sequence.hpp"
#include "gross/set_family.hpp"
#include "gross/simulate.hpp"

namespace {

struct usage_error {
    std::string msg;
};

struct Reporter {
    const std::string* format = nullptr;  // evaluated lazily: set before parsing flags
    std::ostringstream out;

    bool kv() const { return format && *format == "kv"; }
    void bare(const std::string& v) { out << v << "\n"; }
    void line(const std::string& key, const std::string& value) {
        out << key << (kv() ? "=" : ": ") << value << "\n";
    }
    void line(const std::string& key, const gross::GrossNumber& v) { line(key, to_string(v)); }
    void line(const std::string& key, long long v) { line(key, std::to_string(v)); }
    void line(const std::string& key, bool v) { line(key, std::string(v ? "true" : "false")); }
    void verdicts(const std::map<std::string, bool>& v) {
        for (const auto& [name, ok] : v) bare(name + (ok ? "=true" : "=false"));
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gross::invalid_argument("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Input words: comma-separated symbols, or one symbol per character when no
// comma appears.
std::vector<std::string> split_input(const std::string& s) {
    if (s.empty()) return {};
    if (s.find(',') != std::string::npos) return gross::detail::split_commas(s);
    std::vector<std::string> out;
    for (char c : s) out.emplace_back(1, c);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using gross::GrossNumber;
    CLI::App app{"exact grossone arithmetic, observable sequences, machines, and simulation"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "human";
    std::string out_path;
    long long cap = gross::kDefaultDeskCap;
    app.add_option("--format", format, "report style: human or kv")
        ->check(CLI::IsMember({"human", "kv"}));
    app.add_option("--out", out_path, "write the report to this file instead of stdout");
    app.add_option("--cap", cap, "desk execution cap (steps/nodes)")
        ->envname("GROSS_DESK_CAP")
        ->check(CLI::PositiveNumber);

    Reporter rep;
    rep.format = &format;

    // ---- eval ----------------------------------------------------------
    std::string expr;
    auto* eval = app.add_subcommand("eval", "evaluate an expression to canonical form");
    eval->add_option("expr", expr, "expression over integers and g")->required();
    eval->callback([&] { rep.bare(to_string(gross::parse(expr))); });

    // ---- compare -------------------------------------------------------
    std::string lhs, rhs;
    auto* cmp = app.add_subcommand("compare", "order two expressions: prints <, =, or >");
    cmp->add_option("a", lhs)->required();
    cmp->add_option("b", rhs)->required();
    cmp->callback([&] {
        int s = (gross::parse(lhs) - gross::parse(rhs)).sign();
        rep.bare(s < 0 ? "<" : s > 0 ? ">" : "=");
    });

    // ---- count ---------------------------------------------------------
    std::string family;
    long long radix = 0, removed = 0, arity = 0;
    auto* count = app.add_subcommand("count", "cardinality of a set family");
    count
        ->add_option("family", family,
                     "naturals | evens | odds | integers | extended-naturals | naturals-minus | "
                     "naturals-plus | tuples | fractional-numerals | integer-numerals | "
                     "open-unit-interval")
        ->required()
        ->check(CLI::IsMember({"naturals", "evens", "odds", "integers", "extended-naturals",
                               "naturals-minus", "naturals-plus", "tuples", "fractional-numerals",
                               "integer-numerals", "open-unit-interval"}));
    auto* radix_opt = count->add_option("--radix", radix, "numeral radix b >= 2");
    auto* m_opt = count->add_option("--m", removed, "element count to remove/add");
    auto* arity_opt = count->add_option("--arity", arity, "tuple arity");
    count->callback([&] {
        auto need = [&](const CLI::Option* o, const char* flag) {
            if (o->count() == 0) throw usage_error{"count " + family + " requires " + flag};
        };
        gross::SetFamily f = gross::SetFamily::naturals();
        if (family == "naturals") {
            f = gross::SetFamily::naturals();
        } else if (family == "evens") {
            f = gross::SetFamily::evens();
        } else if (family == "odds") {
            f = gross::SetFamily::odds();
        } else if (family == "integers") {
            f = gross::SetFamily::integers();
        } else if (family == "extended-naturals") {
            f = gross::SetFamily::extended_naturals();
        } else if (family == "naturals-minus") {
            need(m_opt, "--m");
            f = gross::SetFamily::naturals_minus(removed);
        } else if (family == "naturals-plus") {
            need(m_opt, "--m");
            f = gross::SetFamily::naturals_plus(removed);
        } else if (family == "tuples") {
            need(arity_opt, "--arity");
            f = gross::SetFamily::tuples(arity);
        } else if (family == "fractional-numerals") {
            need(radix_opt, "--radix");
            f = gross::SetFamily::fractional_numerals(radix);
        } else if (family == "integer-numerals") {
            need(radix_opt, "--radix");
            f = gross::SetFamily::integer_numerals(radix);
        } else {
            need(radix_opt, "--radix");
            f = gross::SetFamily::open_unit_interval(radix);
        }
        rep.bare(to_string(cardinality(f)));
    });

    // ---- seq -----------------------------------------------------------
    auto* seq = app.add_subcommand("seq", "observable-sequence algebra");
    seq->require_subcommand(1);

    std::string first = "1", step = "1", length;
    auto* last = seq->add_subcommand("last", "last element of an arithmetic sequence");
    last->add_option("--first", first, "first element (default 1)");
    last->add_option("--step", step, "step (default 1)");
    last->add_option("--length", length, "length, up to g")->required();
    last->callback([&] {
        rep.bare(to_string(gross::make_arithmetic(gross::parse(first), gross::parse(step),
                                                  gross::parse(length))
                               .last()));
    });

    std::string triple_a, triple_b;
    auto* cat = seq->add_subcommand("concat", "concatenate two arithmetic sequences");
    cat->add_option("--a", triple_a, "first sequence as first,step,length")->required();
    cat->add_option("--b", triple_b, "second sequence as first,step,length")->required();
    cat->callback([&] {
        auto mk = [](const std::string& t) {
            auto parts = gross::detail::split_commas(t);
            if (parts.size() != 3) throw usage_error{"sequence triple must be first,step,length"};
            return gross::make_arithmetic(gross::parse(parts[0]), gross::parse(parts[1]),
                                          gross::parse(parts[2]));
        };
        auto [merged, remainder] = gross::concat(mk(triple_a), mk(triple_b));
        rep.line("length", merged.length());
        rep.line("last", merged.last());
        if (remainder) {
            rep.line("remainder-length", remainder->length());
            rep.line("remainder-last", remainder->last());
        }
    });

    std::string numerals_path;
    auto* obs = seq->add_subcommand("observe", "elements expressible in a numeral system");
    obs->add_option("--first", first, "first element (default 1)");
    obs->add_option("--step", step, "step (default 1)");
    obs->add_option("--length", length, "length, up to g")->required();
    obs->add_option("--numerals", numerals_path, "numeral-system file")->required();
    obs->callback([&] {
        gross::NumeralSystem ns = gross::parse_numeral_system(read_file(numerals_path));
        auto s = gross::make_arithmetic(gross::parse(first), gross::parse(step),
                                        gross::parse(length));
        for (const auto& [index, value] : gross::observable_elements(s, ns))
            rep.line(to_string(index), value);
    });

    // ---- run -----------------------------------------------------------
    std::string machine_path, input, budget = "g";
    auto* run_cmd = app.add_subcommand("run", "execute a deterministic machine");
    run_cmd->add_option("file", machine_path, "machine file")->required();
    run_cmd->add_option("--input", input, "input word (chars, or comma-separated symbols)");
    run_cmd->add_option("--budget", budget, "step budget: positive integer or g (default g)");
    run_cmd->callback([&] {
        gross::MachineSpec m = gross::parse_machine(read_file(machine_path));
        gross::RunResult r = gross::run(m, split_input(input), gross::parse(budget), cap);
        rep.line("status", std::string(r.status == gross::RunStatus::halted ? "halted"
                                                                            : "budget_exhausted"));
        rep.line("steps", r.steps_executed);
        std::string joined;
        for (const auto& s : r.output) joined += (joined.empty() ? "" : ",") + s;
        rep.line("output", joined);
        rep.line("final-state", r.final_config.state);
        rep.line("head", r.final_config.head);
    });

    // ---- tree ----------------------------------------------------------
    int depth = 1;
    auto* tree_cmd = app.add_subcommand("tree", "enumerate a computational tree");
    tree_cmd->add_option("file", machine_path, "machine file")->required();
    tree_cmd->add_option("--input", input, "input word");
    tree_cmd->add_option("--depth", depth, "tree depth k >= 1")->required();
    tree_cmd->callback([&] {
        gross::MachineSpec m = gross::parse_machine(read_file(machine_path));
        gross::ComputationTree t = gross::build_tree(m, split_input(input), depth, cap);
        rep.line("degree", gross::nondet_degree(m));
        rep.line("depth", static_cast<long long>(t.depth));
        std::string sizes;
        for (const auto& level : t.levels)
            sizes += (sizes.empty() ? "" : ",") + std::to_string(level.size());
        rep.line("levels", sizes);
        rep.line("leaves", t.leaf_count);
        rep.line("nodes", t.node_count);
        rep.line("halting", static_cast<long long>(t.halting_configurations.size()));
    });

    // ---- simulate ------------------------------------------------------
    std::string model = "reexec";
    auto* sim_cmd = app.add_subcommand("simulate", "breadth-first deterministic simulation");
    sim_cmd->add_option("file", machine_path, "machine file")->required();
    sim_cmd->add_option("--input", input, "input word");
    sim_cmd->add_option("--depth", depth, "simulation depth k >= 1")->required();
    sim_cmd->add_option("--model", model, "cost model: reexec (reference) or cached")
        ->check(CLI::IsMember({"reexec", "cached"}));
    sim_cmd->callback([&] {
        gross::MachineSpec m = gross::parse_machine(read_file(machine_path));
        gross::SimulationReport r = gross::bfs_simulate(
            m, split_input(input), depth,
            model == "cached" ? gross::CostModel::cached : gross::CostModel::reexecution, cap);
        rep.line("degree", r.degree);
        rep.line("depth", r.depth);
        rep.line("cost", r.cost);
        rep.line("bound", r.complete_tree_bound);
        rep.line("measured-steps", r.measured_steps);
        rep.line("conforming", r.conforming_cost);
        rep.line("final-configurations",
                 static_cast<long long>(r.final_configurations.size()));
        rep.verdicts(r.verdicts);
    });

    // ---- cost / check --------------------------------------------------
    long long degree = 0;
    std::string depth_expr;
    auto* cost_cmd = app.add_subcommand("cost", "exact simulation cost of a complete tree");
    cost_cmd->add_option("--degree", degree, "branching degree d >= 1")->required();
    cost_cmd->add_option("--depth", depth_expr, "depth: expression, may be infinite")->required();
    cost_cmd->callback(
        [&] { rep.bare(to_string(gross::simulation_cost(degree, gross::parse(depth_expr)))); });

    auto* check_cmd = app.add_subcommand("check", "observability verdicts for (degree, depth)");
    check_cmd->add_option("--degree", degree, "branching degree d >= 1")->required();
    check_cmd->add_option("--depth", depth_expr, "depth: expression, may be infinite")
        ->required();
    check_cmd->callback(
        [&] { rep.verdicts(gross::observability(degree, gross::parse(depth_expr))); });

    // ---- recode --------------------------------------------------------
    std::string length_expr;
    long long from_radix = 0, to_radix = 0;
    auto* rec = app.add_subcommand("recode", "output length after alphabet recoding");
    rec->add_option("--length", length_expr, "output length expression")->required();
    rec->add_option("--from", from_radix, "source radix b >= 2")->required();
    rec->add_option("--to", to_radix, "target radix b' >= 2")->required();
    rec->callback([&] {
        gross::RecodeResult r =
            gross::recode_length(gross::parse(length_expr), from_radix, to_radix);
        rep.line("new-length", r.new_length);
        rep.line("observable", r.observable);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.msg << "\n";
        return 2;
    } catch (const gross::error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "usage error: cannot write " << out_path << "\n";
            return 2;
        }
        f << rep.out.str();
    } else {
        std::cout << rep.out.str();
    }
    return 0;
}
