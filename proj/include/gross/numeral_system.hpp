#pragma once

// Extensional numeral systems: a finite set of finite numerals plus
// anchor±offset templates for infinite values. Expressibility is decided by
// enumerating the finitely many candidates, never by closing under
// operations — a system that can say 1 and 2 cannot necessarily say 3.
//
// Config file format (one entry per line, '#' comments):
//
//   name: p_hat
//   finite: 1, 2
//   template: g/2 +- {0, 1, 2}     each offset taken with both signs
//   template: g + {0, -1, -2}      offsets taken exactly as written
//
// Anchors are gross-expressions and must be infinite; offsets are finite
// rationals.

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gross/errors.hpp"
#include "gross/grossnum.hpp"
#include "gross/parse.hpp"
#include "gross/sequence.hpp"
#include "gross/text.hpp"

namespace gross {

struct NumeralSystem {
    struct Template {
        GrossNumber anchor;
        std::vector<Rat> offsets;
    };

    std::string name;
    std::vector<Rat> finite_numerals;
    std::vector<Template> templates;

    bool expressible(const GrossNumber& v) const {
        if (auto r = v.as_rational())
            return std::find(finite_numerals.begin(), finite_numerals.end(), *r) !=
                   finite_numerals.end();
        for (const auto& t : templates)
            for (const Rat& o : t.offsets)
                if (v == t.anchor + GrossNumber(o)) return true;
        return false;
    }

    // Every value the system can express, ascending, without duplicates.
    std::vector<GrossNumber> numerals() const {
        std::vector<GrossNumber> out;
        for (const Rat& r : finite_numerals) out.emplace_back(r);
        for (const auto& t : templates)
            for (const Rat& o : t.offsets) out.push_back(t.anchor + GrossNumber(o));
        std::sort(out.begin(), out.end(),
                  [](const GrossNumber& a, const GrossNumber& b) { return a < b; });
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
};

namespace detail {

inline Rat parse_finite_rational(const std::string& text) {
    GrossNumber v;
    try {
        v = parse(text);
    } catch (const error& e) {
        throw invalid_spec("bad numeral '" + text + "': " + e.what());
    }
    auto r = v.as_rational();
    if (!r) throw invalid_spec("numeral '" + text + "' is not a finite rational");
    return *r;
}

}  // namespace detail

// Parses the config format described above.
inline NumeralSystem parse_numeral_system(const std::string& text) {
    NumeralSystem ns;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw invalid_spec("line " + std::to_string(lineno) + ": expected 'key: value'");
        std::string key = detail::trim(line.substr(0, colon));
        std::string value = detail::trim(line.substr(colon + 1));
        if (key == "name") {
            ns.name = value;
        } else if (key == "finite") {
            for (const auto& item : detail::split_commas(value))
                ns.finite_numerals.push_back(detail::parse_finite_rational(item));
        } else if (key == "template") {
            std::size_t open = value.find('{');
            std::size_t close = value.find('}');
            if (open == std::string::npos || close == std::string::npos || close < open)
                throw invalid_spec("line " + std::to_string(lineno) +
                                   ": template needs an offset list in {...}");
            std::string head = detail::trim(value.substr(0, open));
            bool symmetric = false;
            if (head.size() >= 2 && head.substr(head.size() - 2) == "+-") {
                symmetric = true;
                head = detail::trim(head.substr(0, head.size() - 2));
            } else if (!head.empty() && head.back() == '+') {
                head = detail::trim(head.substr(0, head.size() - 1));
            } else {
                throw invalid_spec("line " + std::to_string(lineno) +
                                   ": template needs '+- {...}' or '+ {...}' after the anchor");
            }
            NumeralSystem::Template t;
            try {
                t.anchor = parse(head);
            } catch (const error& e) {
                throw invalid_spec("line " + std::to_string(lineno) + ": bad anchor '" + head +
                                   "': " + std::string(e.what()));
            }
            if (classify(t.anchor) != number_class::infinite)
                throw invalid_spec("line " + std::to_string(lineno) +
                                   ": template anchor must be infinite");
            std::set<Rat> offsets;
            for (const auto& item :
                 detail::split_commas(value.substr(open + 1, close - open - 1))) {
                Rat o = detail::parse_finite_rational(item);
                offsets.insert(o);
                if (symmetric) offsets.insert(Rat(-o));
            }
            if (offsets.empty())
                throw invalid_spec("line " + std::to_string(lineno) + ": empty offset list");
            t.offsets.assign(offsets.begin(), offsets.end());
            ns.templates.push_back(std::move(t));
        } else {
            throw invalid_spec("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    return ns;
}

// All (index, value) pairs of the sequence whose value the numeral system
// can express, found by solving element(i) = candidate for each of the
// finitely many candidates; ascending by index.
inline std::vector<std::pair<GrossNumber, GrossNumber>> observable_elements(
    const ObservableSequence& s, const NumeralSystem& ns) {
    std::vector<std::pair<GrossNumber, GrossNumber>> out;
    for (const GrossNumber& v : ns.numerals())
        for (const GrossNumber& i : s.indices_of(v)) out.emplace_back(i, v);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              out.end());
    return out;
}

}  // namespace gross
