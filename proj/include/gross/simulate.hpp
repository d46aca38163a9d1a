#pragma once

// Computational trees of non-deterministic machines and their deterministic
// breadth-first simulation. The reference cost model re-executes every path
// of every length j = 1..k from the initial configuration, so a path of
// length j costs exactly j steps and a complete d-ary tree costs
// sum_{j=1..k} j*d^j — the closed form of which is also evaluated here,
// symbolically when k is infinite.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gross/errors.hpp"
#include "gross/grossnum.hpp"
#include "gross/machine.hpp"
#include "gross/observability.hpp"

namespace gross {

// Largest branch set in the transition table: 1 for a deterministic machine,
// 0 when no transitions are defined at all.
inline long long nondet_degree(const MachineSpec& m) {
    std::size_t d = 0;
    for (const auto& [key, branches] : m.transitions) d = std::max(d, branches.size());
    return static_cast<long long>(d);
}

struct TreeNode {
    Configuration config;
    std::size_t parent;  // index into the previous level (ignored at level 1)
    std::size_t choice;
};

struct ComputationTree {
    Configuration root;                       // level 0, not counted
    std::vector<std::vector<TreeNode>> levels;  // levels[j-1] holds level j
    int depth = 0;                            // requested k
    long long leaf_count = 0;                 // nodes with no children (S)
    long long node_count = 0;                 // all nodes at levels 1..k (N)
    std::set<Configuration> halting_configurations;
};

inline ComputationTree build_tree(const MachineSpec& m, const std::vector<std::string>& input,
                                  int k, long long node_cap = kDefaultDeskCap) {
    validate(m);
    if (k < 1) throw invalid_argument("tree depth must be >= 1");
    ComputationTree tree;
    tree.depth = k;
    tree.root = initial_configuration(m, input);
    if (branches_at(m, tree.root)->empty()) tree.halting_configurations.insert(tree.root);
    for (int level = 1; level <= k; ++level) {
        std::vector<TreeNode> next;
        std::size_t parent_count =
            level == 1 ? 1 : tree.levels.back().size();
        for (std::size_t pi = 0; pi < parent_count; ++pi) {
            const Configuration& parent =
                level == 1 ? tree.root : tree.levels.back()[pi].config;
            const auto* br = branches_at(m, parent);
            for (std::size_t c = 0; c < br->size(); ++c) {
                if (tree.node_count >= node_cap)
                    throw desk_cap_exceeded("computational tree exceeds " +
                                            std::to_string(node_cap) + " nodes");
                Configuration child = step(m, parent, c);
                if (branches_at(m, child)->empty()) tree.halting_configurations.insert(child);
                next.push_back(TreeNode{std::move(child), pi, c});
                ++tree.node_count;
            }
        }
        if (next.empty()) break;  // every branch halted above level k
        tree.levels.push_back(std::move(next));
    }
    // Leaves: nodes without children — halted early or sitting at depth k.
    for (std::size_t li = 0; li < tree.levels.size(); ++li) {
        const auto& level = tree.levels[li];
        if (li + 1 == tree.levels.size()) {
            tree.leaf_count += static_cast<long long>(level.size());
        } else {
            std::set<std::size_t> with_children;
            for (const auto& node : tree.levels[li + 1]) with_children.insert(node.parent);
            tree.leaf_count += static_cast<long long>(level.size() - with_children.size());
        }
    }
    return tree;
}

enum class CostModel {
    reexecution,  // the reference model: a path of length j costs j
    cached,       // frontier stepping: each node costs 1 — cheaper, not conforming
};

struct SimulationReport {
    long long degree = 0;
    GrossNumber depth;
    GrossNumber cost;                 // executed cost as a gross-number
    GrossNumber complete_tree_bound;  // closed form at the same (d, k)
    long long measured_steps = 0;
    bool conforming_cost = true;
    std::set<Configuration> final_configurations;
    std::map<std::string, bool> verdicts;
};

namespace detail {
// Depths must be at least 1 and their purely finite part an integer;
// infinite parts are constrained only by what pow can take.
inline void check_depth(const GrossNumber& k) {
    if (k < GrossNumber(1)) throw invalid_argument("depth must be >= 1");
    for (const auto& t : k.terms())
        if (t.exp_factors.empty() && t.gross_power == 0 && !is_integer(t.coefficient))
            throw invalid_argument("depth's finite part must be an integer");
}
}  // namespace detail

// Exact cost of the deterministic breadth-first simulation of a complete
// d-ary computational tree of depth k; k may be infinite.
inline GrossNumber simulation_cost(long long d, const GrossNumber& k) {
    if (d < 1) throw invalid_argument("degree must be >= 1");
    detail::check_depth(k);
    if (d == 1) return divide(k * (k + GrossNumber(1)), GrossNumber(2));
    GrossNumber D(d);
    GrossNumber dk = pow(D, k);
    GrossNumber numerator =
        D * (k * dk * D - (k + GrossNumber(1)) * dk + GrossNumber(1));
    return divide(numerator, GrossNumber((d - 1) * (d - 1)));
}

// The four observability verdicts for simulating degree d to depth k.
inline std::map<std::string, bool> observability(long long d, const GrossNumber& k) {
    if (d < 1) throw invalid_argument("degree must be >= 1");
    detail::check_depth(k);
    const GrossNumber g = grossone();
    std::map<std::string, bool> v;
    v["depth_ok"] = k <= g;
    v["steps_ok"] = simulation_cost(d, k) <= g;
    if (d == 1) {
        v["leaves_ok"] = true;   // a single path ends in one leaf
        v["nodes_ok"] = k <= g;  // the path has k nodes
    } else {
        GrossNumber D(d);
        v["leaves_ok"] = pow(D, k) <= g;
        v["nodes_ok"] = divide(pow(D, k + GrossNumber(1)) - D, GrossNumber(d - 1)) <= g;
    }
    return v;
}

inline SimulationReport bfs_simulate(const MachineSpec& m, const std::vector<std::string>& input,
                                     int k, CostModel model = CostModel::reexecution,
                                     long long step_cap = kDefaultDeskCap) {
    validate(m);
    if (k < 1) throw invalid_argument("simulation depth must be >= 1");
    SimulationReport report;
    report.degree = nondet_degree(m);
    report.depth = GrossNumber(static_cast<long long>(k));
    report.conforming_cost = model == CostModel::reexecution;

    Configuration root = initial_configuration(m, input);
    struct Path {
        std::vector<std::size_t> choices;
        Configuration end;
    };
    std::vector<Path> level = {{{}, root}};
    if (branches_at(m, root)->empty()) report.final_configurations.insert(root);

    for (int j = 1; j <= k && !level.empty(); ++j) {
        std::vector<Path> next;
        for (const Path& p : level) {
            const auto* br = branches_at(m, p.end);
            for (std::size_t c = 0; c < br->size(); ++c) {
                Configuration cfg;
                if (model == CostModel::reexecution) {
                    // the path is re-run from the very beginning: j steps
                    cfg = root;
                    for (std::size_t prior : p.choices) cfg = step(m, cfg, prior);
                    cfg = step(m, cfg, c);
                    report.measured_steps += j;
                } else {
                    cfg = step(m, p.end, c);
                    report.measured_steps += 1;
                }
                if (report.measured_steps > step_cap)
                    throw desk_cap_exceeded("simulation exceeds " + std::to_string(step_cap) +
                                            " steps");
                if (branches_at(m, cfg)->empty()) report.final_configurations.insert(cfg);
                Path ext{p.choices, std::move(cfg)};
                ext.choices.push_back(c);
                next.push_back(std::move(ext));
            }
        }
        level = std::move(next);
    }

    long long d_for_bound = std::max<long long>(report.degree, 1);
    report.cost = GrossNumber(report.measured_steps);
    report.complete_tree_bound = simulation_cost(d_for_bound, report.depth);
    report.verdicts = observability(d_for_bound, report.depth);
    return report;
}

struct PolyDepthResult {
    Int depth;         // k = n^l
    GrossNumber cost;  // simulation cost at that depth
    bool observable;
};

// Depth polynomial in the input length: k = n^l. The cost is exponential in
// k yet finite, hence always observable; the value of the check is the exact
// K it reports.
inline PolyDepthResult poly_depth_check(long long d, long long n, long long l,
                                        long long exponent_cap = 100000) {
    if (d < 2) throw invalid_argument("degree must be >= 2");
    if (n < 1 || l < 1) throw invalid_argument("length and exponent must be positive");
    Int k = ipow(Int(n), Int(l));
    if (k > exponent_cap)
        throw desk_cap_exceeded("depth n^l = " + k.str() + " exceeds the desk exponent cap");
    GrossNumber cost = simulation_cost(d, GrossNumber(Rat(k)));
    return {k, cost, output_observable(cost)};
}

}  // namespace gross
