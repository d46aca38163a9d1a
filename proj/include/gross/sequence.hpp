#pragma once

// Observable sequences {a_n : k}: a generating rule plus an explicit
// gross-number length k with 1 <= k <= g. Sequences are intensional — only
// finitely many elements are ever materialized, so complete sequences of g
// elements are ordinary values.

#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "gross/errors.hpp"
#include "gross/grossnum.hpp"

namespace gross {

class ObservableSequence {
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    struct Arithmetic {
        GrossNumber first, step;
    };
    struct Literal {
        std::vector<GrossNumber> values;
    };
    struct Suffix {
        NodePtr parent;
        GrossNumber start;  // 1-based position in the parent
    };
    struct Chain {
        NodePtr left;
        GrossNumber left_length;
        NodePtr right;
    };
    struct Node {
        std::variant<Arithmetic, Literal, Suffix, Chain> rule;
    };

public:
    static ObservableSequence arithmetic(const GrossNumber& first, const GrossNumber& step,
                                         const GrossNumber& length) {
        check_length(length);
        if (step.is_zero()) throw invalid_argument("arithmetic sequence needs a nonzero step");
        return ObservableSequence(make_node(Arithmetic{first, step}), length);
    }

    static ObservableSequence literal(std::vector<GrossNumber> values) {
        if (values.empty()) throw empty_sequence("a sequence has at least one element");
        GrossNumber len(static_cast<long long>(values.size()));
        return ObservableSequence(make_node(Literal{std::move(values)}), len);
    }

    const GrossNumber& length() const { return length_; }

    bool is_complete() const { return length_ == grossone(); }

    // i is 1-based and must be an integral gross-number within [1, length].
    GrossNumber element(const GrossNumber& i) const {
        if (!is_gross_integer(i) || i < GrossNumber(1) || i > length_)
            throw invalid_argument("sequence index out of range: " + to_string(i));
        return element_at(*node_, i);
    }

    GrossNumber last() const { return element_at(*node_, length_); }

    // All indices i within [1, length] with element(i) == v, ascending.
    std::vector<GrossNumber> indices_of(const GrossNumber& v) const {
        std::vector<GrossNumber> out;
        collect_indices(*node_, length_, v, GrossNumber(0), out);
        std::sort(out.begin(), out.end(),
                  [](const GrossNumber& a, const GrossNumber& b) { return a < b; });
        return out;
    }

    // First n elements as the same kind of sequence.
    ObservableSequence prefix(const GrossNumber& n) const {
        check_length(n);
        if (n > length_) throw invalid_argument("prefix longer than the sequence");
        if (const auto* lit = std::get_if<Literal>(&node_->rule)) {
            auto m = n.as_integer();
            std::vector<GrossNumber> vals(lit->values.begin(),
                                          lit->values.begin() + static_cast<long>(*m));
            return ObservableSequence(make_node(Literal{std::move(vals)}), n);
        }
        return ObservableSequence(node_, n);
    }

    // Elements from 1-based position `start` to the end.
    ObservableSequence suffix(const GrossNumber& start) const {
        if (!is_gross_integer(start) || start < GrossNumber(1) || start > length_)
            throw invalid_argument("suffix start out of range");
        GrossNumber len = length_ - start + GrossNumber(1);
        if (const auto* ar = std::get_if<Arithmetic>(&node_->rule))
            return ObservableSequence(
                make_node(Arithmetic{ar->first + ar->step * (start - GrossNumber(1)), ar->step}),
                len);
        if (const auto* lit = std::get_if<Literal>(&node_->rule)) {
            auto s = start.as_integer();
            std::vector<GrossNumber> vals(lit->values.begin() + static_cast<long>(*s) - 1,
                                          lit->values.end());
            return ObservableSequence(make_node(Literal{std::move(vals)}), len);
        }
        return ObservableSequence(make_node(Suffix{node_, start}), len);
    }

    friend std::pair<ObservableSequence, std::optional<ObservableSequence>> concat(
        const ObservableSequence& a, const ObservableSequence& b);

private:
    ObservableSequence(NodePtr node, GrossNumber length)
        : node_(std::move(node)), length_(std::move(length)) {}

    template <class Rule>
    static NodePtr make_node(Rule&& rule) {
        return std::make_shared<const Node>(Node{std::forward<Rule>(rule)});
    }

    static void check_length(const GrossNumber& length) {
        if (!is_gross_integer(length))
            throw invalid_argument("sequence length must be integral: " + to_string(length));
        if (length < GrossNumber(1)) throw empty_sequence("a sequence has at least one element");
        if (length > grossone())
            throw length_exceeds_grossone("no sequence has more than g elements");
    }

    static GrossNumber element_at(const Node& node, const GrossNumber& i) {
        if (const auto* ar = std::get_if<Arithmetic>(&node.rule))
            return ar->first + ar->step * (i - GrossNumber(1));
        if (const auto* lit = std::get_if<Literal>(&node.rule)) {
            auto idx = i.as_integer();
            return lit->values[static_cast<std::size_t>(static_cast<long>(*idx)) - 1];
        }
        if (const auto* suf = std::get_if<Suffix>(&node.rule))
            return element_at(*suf->parent, suf->start + i - GrossNumber(1));
        const auto& ch = std::get<Chain>(node.rule);
        if (i <= ch.left_length) return element_at(*ch.left, i);
        return element_at(*ch.right, i - ch.left_length);
    }

    // Appends base+i for every i in [1, limit] of this node with value v.
    static void collect_indices(const Node& node, const GrossNumber& limit, const GrossNumber& v,
                                const GrossNumber& base, std::vector<GrossNumber>& out) {
        if (const auto* ar = std::get_if<Arithmetic>(&node.rule)) {
            GrossNumber i;
            try {
                i = divide(v - ar->first, ar->step) + GrossNumber(1);
            } catch (const inexact_division&) {
                return;
            }
            if (is_gross_integer(i) && i >= GrossNumber(1) && i <= limit) out.push_back(base + i);
            return;
        }
        if (const auto* lit = std::get_if<Literal>(&node.rule)) {
            for (std::size_t j = 0; j < lit->values.size(); ++j) {
                GrossNumber idx(static_cast<long long>(j + 1));
                if (idx > limit) break;
                if (lit->values[j] == v) out.push_back(base + idx);
            }
            return;
        }
        if (const auto* suf = std::get_if<Suffix>(&node.rule)) {
            std::vector<GrossNumber> parent_hits;
            collect_indices(*suf->parent, suf->start + limit - GrossNumber(1), v, GrossNumber(0),
                            parent_hits);
            for (const auto& ip : parent_hits)
                if (ip >= suf->start) out.push_back(base + ip - suf->start + GrossNumber(1));
            return;
        }
        const auto& ch = std::get<Chain>(node.rule);
        GrossNumber left_limit = limit < ch.left_length ? limit : ch.left_length;
        collect_indices(*ch.left, left_limit, v, base, out);
        if (limit > ch.left_length)
            collect_indices(*ch.right, limit - ch.left_length, v, base + ch.left_length, out);
    }

    static ObservableSequence fuse_or_chain(const ObservableSequence& a,
                                            const ObservableSequence& b,
                                            const GrossNumber& total) {
        const auto* ar_a = std::get_if<Arithmetic>(&a.node_->rule);
        const auto* ar_b = std::get_if<Arithmetic>(&b.node_->rule);
        if (ar_a && ar_b && ar_a->step == ar_b->step &&
            ar_b->first == a.last() + ar_a->step)
            return ObservableSequence(a.node_, total);
        return ObservableSequence(make_node(Chain{a.node_, a.length_, b.node_}), total);
    }

    NodePtr node_;
    GrossNumber length_;
};

inline ObservableSequence make_arithmetic(const GrossNumber& first, const GrossNumber& step,
                                          const GrossNumber& length) {
    return ObservableSequence::arithmetic(first, step, length);
}

inline GrossNumber last_element(const ObservableSequence& s) { return s.last(); }

inline bool is_complete(const ObservableSequence& s) { return s.is_complete(); }

// Joins two sequences. When the combined length would exceed g, the merged
// sequence takes all of a plus the leading g - len(a) elements of b, and the
// overflow returns as a second sequence: len(merged) + len(remainder) is
// always exactly len(a) + len(b).
inline std::pair<ObservableSequence, std::optional<ObservableSequence>> concat(
    const ObservableSequence& a, const ObservableSequence& b) {
    GrossNumber total = a.length() + b.length();
    if (total <= grossone())
        return {ObservableSequence::fuse_or_chain(a, b, total), std::nullopt};
    GrossNumber take = grossone() - a.length();
    if (take.is_zero()) return {a, b};
    return {ObservableSequence::fuse_or_chain(a, b.prefix(take), grossone()),
            b.suffix(take + GrossNumber(1))};
}

// Shortens a sequence by a count of removed elements (which elements were
// removed is immaterial to the length bookkeeping; the canonical result keeps
// the leading length - m).
inline ObservableSequence remove_elements(const ObservableSequence& s, const GrossNumber& m) {
    if (!is_gross_integer(m) || m < GrossNumber(0))
        throw invalid_argument("removal count must be a non-negative integer");
    if (m >= s.length())
        throw remove_too_many("cannot remove " + to_string(m) + " of " + to_string(s.length()) +
                              " elements");
    return s.prefix(s.length() - m);
}

}  // namespace gross
