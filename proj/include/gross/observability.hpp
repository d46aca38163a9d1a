#pragma once

// Observability of machine outputs: how long an output can get before no
// sequence can hold it, what recoding into a smaller alphabet does to that
// bound, and the counting bounds on computable sequences.

#include <algorithm>

#include "gross/errors.hpp"
#include "gross/grossnum.hpp"
#include "gross/rational.hpp"

namespace gross {

// What a concrete machine/user pair can produce and read.
struct PhysicalProfile {
    long long K_TP;       // machine's maximal output length
    long long K_U;        // user's maximal readable length
    long long user_radix;

    PhysicalProfile(long long k_tp, long long k_u, long long radix)
        : K_TP(k_tp), K_U(k_u), user_radix(radix) {
        if (k_tp < 1 || k_u < 1) throw invalid_argument("output bounds must be positive");
        if (radix < 2) throw invalid_argument("radix must be >= 2");
    }
};

// The practically relevant output bound: computed and then also read.
inline long long kstar(const PhysicalProfile& p) { return std::min(p.K_TP, p.K_U); }

// An output fits in a sequence iff its length stays within g.
inline bool output_observable(const GrossNumber& length) {
    if (length.sign() < 0) throw invalid_argument("output length cannot be negative");
    return length <= grossone();
}

struct RecodeResult {
    GrossNumber new_length;
    bool observable;
};

// Recoding radix-b symbols into radix-b' words multiplies the length by the
// per-symbol code width m = ceil(log_{b'} b), computed exactly on integers.
inline RecodeResult recode_length(const GrossNumber& length, const Int& b, const Int& b_prime) {
    if (b < 2 || b_prime < 2) throw invalid_argument("radixes must be >= 2");
    if (length.sign() < 0) throw invalid_argument("length cannot be negative");
    Int m = ceil_log(b, b_prime);
    GrossNumber new_length = GrossNumber(Rat(m)) * length;
    return {new_length, output_observable(new_length)};
}

// At most b^g distinct complete computable sequences over a radix-b alphabet.
inline GrossNumber sequence_count_bound(const Int& b) {
    if (b < 2) throw invalid_argument("radix must be >= 2");
    return pow(GrossNumber(Rat(b)), grossone());
}

// No enumeration, machine-driven or otherwise, can list more than g of them.
inline GrossNumber enumeration_bound() { return grossone(); }

}  // namespace gross
