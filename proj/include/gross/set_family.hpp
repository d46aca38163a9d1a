#pragma once

// The canonical counting table: exact element counts for the standard set
// families, as gross-numbers.

#include <string>

#include "gross/errors.hpp"
#include "gross/grossnum.hpp"

namespace gross {

struct SetFamily {
    enum class Tag {
        naturals,
        evens,
        odds,
        integers,
        naturals_minus,      // naturals with m elements removed
        naturals_plus,       // naturals with m extra elements
        tuples,              // j-tuples of naturals
        fractional_numerals, // radix-b positional fractions x = 0.a1 a2 ...
        open_unit_interval,  // (0,1) in radix b
        integer_numerals,    // radix-b positional integers
        extended_naturals,
    };

    Tag tag;
    Int param;  // m, j, or b depending on the tag; unused otherwise

    static SetFamily naturals() { return {Tag::naturals, 0}; }
    static SetFamily evens() { return {Tag::evens, 0}; }
    static SetFamily odds() { return {Tag::odds, 0}; }
    static SetFamily integers() { return {Tag::integers, 0}; }
    static SetFamily extended_naturals() { return {Tag::extended_naturals, 0}; }

    static SetFamily naturals_minus(const Int& m) {
        if (m < 0) throw invalid_argument("removed-element count must be >= 0");
        return {Tag::naturals_minus, m};
    }
    static SetFamily naturals_plus(const Int& m) {
        if (m < 0) throw invalid_argument("added-element count must be >= 0");
        return {Tag::naturals_plus, m};
    }
    static SetFamily tuples(const Int& j) {
        if (j < 1) throw invalid_argument("tuple arity must be >= 1");
        return {Tag::tuples, j};
    }
    static SetFamily fractional_numerals(const Int& b) {
        if (b < 2) throw invalid_argument("radix must be >= 2");
        return {Tag::fractional_numerals, b};
    }
    static SetFamily open_unit_interval(const Int& b) {
        if (b < 2) throw invalid_argument("radix must be >= 2");
        return {Tag::open_unit_interval, b};
    }
    static SetFamily integer_numerals(const Int& b) {
        if (b < 2) throw invalid_argument("radix must be >= 2");
        return {Tag::integer_numerals, b};
    }
};

inline GrossNumber cardinality(const SetFamily& f) {
    const GrossNumber g = grossone();
    switch (f.tag) {
        case SetFamily::Tag::naturals:
            return g;
        case SetFamily::Tag::evens:
        case SetFamily::Tag::odds:
            return divide(g, GrossNumber(2));
        case SetFamily::Tag::integers:
            return GrossNumber(2) * g + GrossNumber(1);
        case SetFamily::Tag::naturals_minus:
            return g - GrossNumber(Rat(f.param));
        case SetFamily::Tag::naturals_plus:
            return g + GrossNumber(Rat(f.param));
        case SetFamily::Tag::tuples:
            return pow(g, GrossNumber(Rat(f.param)));
        case SetFamily::Tag::fractional_numerals:
        case SetFamily::Tag::integer_numerals:
            return pow(GrossNumber(Rat(f.param)), g);
        case SetFamily::Tag::open_unit_interval:
            return pow(GrossNumber(Rat(f.param)), g) - GrossNumber(1);
        case SetFamily::Tag::extended_naturals:
            throw not_expressible(
                "the count of extended naturals needs numerals beyond the infinite unit");
    }
    throw invalid_argument("unknown set family");
}

}  // namespace gross
