#pragma once

// Turing machines as 7-tuples with a sparse bi-infinite tape. Transition
// sets may hold several triplets per (state, symbol) — that is the whole
// difference between the deterministic and non-deterministic kinds.
//
// Machine file format (line-based, '#' comments):
//
//   states: q0,q1,qf
//   blank: _
//   tape_alphabet: _,0,1
//   io_alphabet: 0,1
//   initial: q0
//   final: qf                     (may be empty or list several)
//   q0,1 -> 1,R,q0                transitions; repeated (q,symbol) lines
//   q0,_ -> 1,N,qf                form non-deterministic branch sets

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gross/errors.hpp"
#include "gross/grossnum.hpp"
#include "gross/sequence.hpp"
#include "gross/text.hpp"

namespace gross {

enum class Move { L, R, N };

struct Transition {
    std::string write;
    Move move;
    std::string next;
    auto operator<=>(const Transition&) const = default;
};

struct MachineSpec {
    std::vector<std::string> states;
    std::vector<std::string> tape_alphabet;
    std::string blank;
    std::vector<std::string> io_alphabet;
    std::string initial;
    std::set<std::string> finals;
    std::map<std::pair<std::string, std::string>, std::vector<Transition>> transitions;
};

struct Configuration {
    std::string state;
    std::map<long long, std::string> tape;  // only non-blank cells
    long long head = 0;
    auto operator<=>(const Configuration&) const = default;

    std::string symbol_at(long long cell, const std::string& blank) const {
        auto it = tape.find(cell);
        return it == tape.end() ? blank : it->second;
    }
};

enum class MachineKind { deterministic, nondeterministic };

namespace detail {
template <class C, class V>
bool contains(const C& c, const V& v) {
    return std::find(c.begin(), c.end(), v) != c.end();
}
}  // namespace detail

inline MachineKind validate(const MachineSpec& m) {
    if (m.states.empty()) throw invalid_spec("no states declared");
    if (std::set<std::string>(m.states.begin(), m.states.end()).size() != m.states.size())
        throw invalid_spec("duplicate state names");
    if (m.tape_alphabet.empty()) throw invalid_spec("empty tape alphabet");
    if (std::set<std::string>(m.tape_alphabet.begin(), m.tape_alphabet.end()).size() !=
        m.tape_alphabet.size())
        throw invalid_spec("duplicate tape symbols");
    if (!detail::contains(m.tape_alphabet, m.blank))
        throw invalid_spec("blank symbol not in the tape alphabet");
    for (const auto& s : m.io_alphabet) {
        if (!detail::contains(m.tape_alphabet, s))
            throw invalid_spec("io symbol '" + s + "' not in the tape alphabet");
        if (s == m.blank) throw invalid_spec("blank cannot be an io symbol");
    }
    if (!detail::contains(m.states, m.initial))
        throw invalid_spec("initial state '" + m.initial + "' not declared");
    for (const auto& f : m.finals)
        if (!detail::contains(m.states, f))
            throw invalid_spec("final state '" + f + "' not declared");
    bool deterministic = true;
    for (const auto& [key, branches] : m.transitions) {
        const auto& [q, sym] = key;
        if (!detail::contains(m.states, q))
            throw invalid_spec("transition from undeclared state '" + q + "'");
        if (m.finals.count(q))
            throw invalid_spec("transition from final state '" + q + "'");
        if (!detail::contains(m.tape_alphabet, sym))
            throw invalid_spec("transition reads undeclared symbol '" + sym + "'");
        if (branches.empty()) throw invalid_spec("empty transition set at (" + q + "," + sym + ")");
        for (const auto& t : branches) {
            if (!detail::contains(m.tape_alphabet, t.write))
                throw invalid_spec("transition writes undeclared symbol '" + t.write + "'");
            if (!detail::contains(m.states, t.next))
                throw invalid_spec("transition targets undeclared state '" + t.next + "'");
        }
        if (branches.size() > 1) deterministic = false;
    }
    return deterministic ? MachineKind::deterministic : MachineKind::nondeterministic;
}

// Branch set at a configuration; empty when the machine halts there.
inline const std::vector<Transition>* branches_at(const MachineSpec& m, const Configuration& c) {
    static const std::vector<Transition> none;
    if (m.finals.count(c.state)) return &none;
    auto it = m.transitions.find({c.state, c.symbol_at(c.head, m.blank)});
    return it == m.transitions.end() ? &none : &it->second;
}

inline Configuration step(const MachineSpec& m, const Configuration& c, std::size_t choice) {
    const auto* br = branches_at(m, c);
    if (br->empty())
        throw no_transition("machine halts in state " + c.state + " reading '" +
                            c.symbol_at(c.head, m.blank) + "'");
    if (choice >= br->size())
        throw bad_choice("choice " + std::to_string(choice) + " of " +
                         std::to_string(br->size()));
    const Transition& t = (*br)[choice];
    Configuration out = c;
    if (t.write == m.blank)
        out.tape.erase(out.head);
    else
        out.tape[out.head] = t.write;
    if (t.move == Move::L) --out.head;
    if (t.move == Move::R) ++out.head;
    out.state = t.next;
    return out;
}

enum class RunStatus { halted, budget_exhausted };

struct RunResult {
    RunStatus status = RunStatus::halted;
    long long steps_executed = 0;
    Configuration final_config;
    std::vector<std::string> output;  // io-alphabet symbols in write order

    // The output as a sequence of 1-based io-alphabet indices.
    ObservableSequence output_sequence(const MachineSpec& m) const {
        if (output.empty()) throw empty_sequence("the machine printed nothing");
        std::vector<GrossNumber> vals;
        vals.reserve(output.size());
        for (const auto& s : output) {
            auto it = std::find(m.io_alphabet.begin(), m.io_alphabet.end(), s);
            vals.emplace_back(static_cast<long long>(it - m.io_alphabet.begin()) + 1);
        }
        return ObservableSequence::literal(std::move(vals));
    }
};

inline Configuration initial_configuration(const MachineSpec& m,
                                           const std::vector<std::string>& input) {
    for (const auto& s : input)
        if (!detail::contains(m.io_alphabet, s))
            throw input_not_in_alphabet("input symbol '" + s + "'");
    Configuration c;
    c.state = m.initial;
    c.head = 0;
    for (std::size_t i = 0; i < input.size(); ++i) c.tape[static_cast<long long>(i)] = input[i];
    return c;
}

inline constexpr long long kDefaultDeskCap = 1000000;

// Executes a deterministic machine. A finite budget bounds the step count
// directly; the symbolic budget g means "no finite bound intended" and the
// desk cap stands in for it during actual execution.
inline RunResult run(const MachineSpec& m, const std::vector<std::string>& input,
                     const GrossNumber& budget, long long desk_cap = kDefaultDeskCap) {
    if (validate(m) != MachineKind::deterministic)
        throw invalid_spec("run requires a deterministic machine");
    long long limit;
    if (auto n = budget.as_integer()) {
        if (*n < 1) throw invalid_argument("budget must be at least 1");
        limit = static_cast<long long>(*n);
    } else if (classify(budget) == number_class::infinite) {
        if (desk_cap < 1) throw invalid_argument("symbolic budget needs a positive desk cap");
        limit = desk_cap;
    } else {
        throw invalid_argument("budget must be a positive integer or infinite");
    }
    RunResult r;
    r.final_config = initial_configuration(m, input);
    r.steps_executed = 0;
    for (;;) {
        const auto* br = branches_at(m, r.final_config);
        if (br->empty()) {
            r.status = RunStatus::halted;
            return r;
        }
        if (r.steps_executed == limit) {
            r.status = RunStatus::budget_exhausted;
            return r;
        }
        const std::string& w = (*br)[0].write;
        if (detail::contains(m.io_alphabet, w)) r.output.push_back(w);
        r.final_config = step(m, r.final_config, 0);
        ++r.steps_executed;
    }
}

// ---------------------------------------------------------------------------
// Machine file parsing
// ---------------------------------------------------------------------------
inline MachineSpec parse_machine(const std::string& text) {
    MachineSpec m;
    bool saw_states = false, saw_blank = false, saw_tape = false, saw_io = false,
         saw_initial = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        auto fail = [&](const std::string& why) {
            throw invalid_spec("line " + std::to_string(lineno) + ": " + why);
        };
        std::size_t arrow = line.find("->");
        if (arrow != std::string::npos) {
            auto lhs = detail::split_commas(line.substr(0, arrow));
            auto rhs = detail::split_commas(line.substr(arrow + 2));
            if (lhs.size() != 2) fail("transition left side must be 'state,symbol'");
            if (rhs.size() != 3) fail("transition right side must be 'symbol,move,state'");
            Move mv = Move::N;
            if (rhs[1] == "L")
                mv = Move::L;
            else if (rhs[1] == "R")
                mv = Move::R;
            else if (rhs[1] != "N")
                fail("move must be L, R, or N");
            m.transitions[{lhs[0], lhs[1]}].push_back(Transition{rhs[0], mv, rhs[2]});
            continue;
        }
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) fail("expected 'key: value' or a transition");
        std::string key = detail::trim(line.substr(0, colon));
        std::string value = detail::trim(line.substr(colon + 1));
        if (key == "states") {
            m.states = detail::split_commas(value);
            saw_states = true;
        } else if (key == "blank") {
            m.blank = value;
            saw_blank = true;
        } else if (key == "tape_alphabet") {
            m.tape_alphabet = detail::split_commas(value);
            saw_tape = true;
        } else if (key == "io_alphabet") {
            m.io_alphabet = detail::split_commas(value);
            saw_io = true;
        } else if (key == "initial") {
            m.initial = value;
            saw_initial = true;
        } else if (key == "final") {
            for (const auto& f : detail::split_commas(value)) m.finals.insert(f);
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    if (!saw_states) throw invalid_spec("missing 'states:' line");
    if (!saw_blank) throw invalid_spec("missing 'blank:' line");
    if (!saw_tape) throw invalid_spec("missing 'tape_alphabet:' line");
    if (!saw_io) throw invalid_spec("missing 'io_alphabet:' line");
    if (!saw_initial) throw invalid_spec("missing 'initial:' line");
    validate(m);
    return m;
}

}  // namespace gross
