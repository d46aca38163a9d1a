#pragma once

// Exact arithmetic on gross-numbers: finite sums of terms
//
//     r * prod_i p_i^(E_i) * g^q
//
// where r is a nonzero rational, the p_i are distinct primes, each E_i is a
// nonzero polynomial in g with positive rational powers and rational
// coefficients, q is a rational, and g denotes the infinite unit (the number
// of elements of the set of natural numbers, spelled `g` throughout).
//
// Terms are kept in strictly decreasing dominance order. The dominance key
// of a term is its formal logarithm  sum_i E_i*ln(p_i) + q*ln(g);  keys are
// compared by walking g-powers downwards, and tied rational combinations of
// prime logarithms are decided exactly by clearing denominators and
// comparing the resulting integer powers. ln(g) is larger than every finite
// real and smaller than every positive power of g. Because the logarithms
// of distinct primes are linearly independent over the rationals, equality
// of keys is syntactic, and the leading term of a nonzero gross-number
// always dominates the remaining terms in magnitude.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gross/errors.hpp"
#include "gross/rational.hpp"

namespace gross {

// ---------------------------------------------------------------------------
// ExponentPoly: the exponent of one prime base, e.g. the `2g` in 2^(2g).
// Monomial powers of g are strictly positive; coefficients are nonzero.
// ---------------------------------------------------------------------------
struct ExponentPoly {
    std::map<Rat, Rat> monomials;  // g-power -> coefficient

    bool empty() const { return monomials.empty(); }

    Rat coeff(const Rat& power) const {
        auto it = monomials.find(power);
        return it == monomials.end() ? Rat(0) : it->second;
    }

    void add_monomial(const Rat& power, const Rat& c) {
        if (c == 0) return;
        if (power <= 0) throw invalid_argument("exponent monomial power must be positive");
        auto it = monomials.find(power);
        if (it == monomials.end()) {
            monomials.emplace(power, c);
        } else {
            it->second += c;
            if (it->second == 0) monomials.erase(it);
        }
    }

    ExponentPoly& operator+=(const ExponentPoly& other) {
        for (const auto& [p, c] : other.monomials) add_monomial(p, c);
        return *this;
    }

    ExponentPoly& operator-=(const ExponentPoly& other) {
        for (const auto& [p, c] : other.monomials) add_monomial(p, -c);
        return *this;
    }

    ExponentPoly scaled(const Rat& f) const {
        ExponentPoly out;
        if (f == 0) return out;
        for (const auto& [p, c] : monomials) out.monomials.emplace(p, c * f);
        return out;
    }

    bool operator==(const ExponentPoly& other) const { return monomials == other.monomials; }
};

// ---------------------------------------------------------------------------
// GrossTerm
// ---------------------------------------------------------------------------
struct GrossTerm {
    Rat coefficient;                     // nonzero
    std::map<Int, ExponentPoly> exp_factors;  // prime base -> exponent, polys nonempty
    Rat gross_power;                     // exponent of g

    bool operator==(const GrossTerm& other) const {
        return coefficient == other.coefficient && gross_power == other.gross_power &&
               exp_factors == other.exp_factors;
    }

    bool same_key(const GrossTerm& other) const {
        return gross_power == other.gross_power && exp_factors == other.exp_factors;
    }
};

enum class ordering { less, equal, greater };

enum class number_class { zero, finite, infinite, infinitesimal, mixed };

namespace detail {

// Sign of sum_p c_p*ln(p) with rational c_p, decided exactly: clear
// denominators, then compare the integer products prod p^(n_p) on each side.
inline int sign_of_prime_log_combo(const std::map<Int, Rat>& combo) {
    Int lcm = 1;
    for (const auto& [p, c] : combo) {
        if (c == 0) continue;
        Int d = den(c);
        lcm = boost::multiprecision::lcm(lcm, d);
    }
    Int above = 1, below = 1;
    for (const auto& [p, c] : combo) {
        if (c == 0) continue;
        Int n = num(c) * (lcm / den(c));
        if (n > 0)
            above *= ipow(p, n);
        else
            below *= ipow(p, -n);
    }
    if (above > below) return 1;
    if (above < below) return -1;
    return 0;
}

// Three-way comparison of dominance keys; coefficients are ignored.
inline int compare_keys(const GrossTerm& a, const GrossTerm& b) {
    std::set<Rat, std::greater<Rat>> powers;
    for (const auto& [p, poly] : a.exp_factors)
        for (const auto& [q, c] : poly.monomials) powers.insert(q);
    for (const auto& [p, poly] : b.exp_factors)
        for (const auto& [q, c] : poly.monomials) powers.insert(q);
    for (const Rat& q : powers) {
        std::map<Int, Rat> combo;
        for (const auto& [p, poly] : a.exp_factors) {
            Rat c = poly.coeff(q);
            if (c != 0) combo[p] += c;
        }
        for (const auto& [p, poly] : b.exp_factors) {
            Rat c = poly.coeff(q);
            if (c != 0) combo[p] -= c;
        }
        bool nonzero = false;
        for (const auto& [p, c] : combo)
            if (c != 0) nonzero = true;
        if (nonzero) return sign_of_prime_log_combo(combo);
    }
    if (a.gross_power > b.gross_power) return 1;
    if (a.gross_power < b.gross_power) return -1;
    return 0;
}

// Class of a single term: sign of its formal logarithm at g -> infinity.
inline number_class term_class(const GrossTerm& t) {
    std::set<Rat, std::greater<Rat>> powers;
    for (const auto& [p, poly] : t.exp_factors)
        for (const auto& [q, c] : poly.monomials) powers.insert(q);
    for (const Rat& q : powers) {
        std::map<Int, Rat> combo;
        for (const auto& [p, poly] : t.exp_factors) {
            Rat c = poly.coeff(q);
            if (c != 0) combo[p] += c;
        }
        int s = sign_of_prime_log_combo(combo);
        if (s > 0) return number_class::infinite;
        if (s < 0) return number_class::infinitesimal;
    }
    if (t.gross_power > 0) return number_class::infinite;
    if (t.gross_power < 0) return number_class::infinitesimal;
    return number_class::finite;
}

inline GrossTerm mul_terms(const GrossTerm& a, const GrossTerm& b) {
    GrossTerm out;
    out.coefficient = a.coefficient * b.coefficient;
    out.exp_factors = a.exp_factors;
    for (const auto& [p, poly] : b.exp_factors) {
        auto it = out.exp_factors.find(p);
        if (it == out.exp_factors.end()) {
            out.exp_factors.emplace(p, poly);
        } else {
            it->second += poly;
            if (it->second.empty()) out.exp_factors.erase(it);
        }
    }
    out.gross_power = a.gross_power + b.gross_power;
    return out;
}

inline GrossTerm div_terms(const GrossTerm& a, const GrossTerm& b) {
    GrossTerm out;
    out.coefficient = a.coefficient / b.coefficient;
    out.exp_factors = a.exp_factors;
    for (const auto& [p, poly] : b.exp_factors) {
        auto it = out.exp_factors.find(p);
        if (it == out.exp_factors.end()) {
            ExponentPoly neg;
            for (const auto& [q, c] : poly.monomials) neg.monomials.emplace(q, -c);
            out.exp_factors.emplace(p, std::move(neg));
        } else {
            it->second -= poly;
            if (it->second.empty()) out.exp_factors.erase(it);
        }
    }
    out.gross_power = a.gross_power - b.gross_power;
    return out;
}

inline std::map<Int, Int> factorize(Int n) {
    std::map<Int, Int> out;
    for (Int p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// GrossNumber
// ---------------------------------------------------------------------------
class GrossNumber {
public:
    GrossNumber() = default;  // zero

    explicit GrossNumber(const Rat& r) {
        if (r != 0) terms_.push_back(GrossTerm{r, {}, Rat(0)});
    }
    explicit GrossNumber(long long n) : GrossNumber(Rat(n)) {}

    static GrossNumber from_terms(std::vector<GrossTerm> terms) {
        GrossNumber out;
        out.terms_ = std::move(terms);
        out.normalize();
        return out;
    }

    const std::vector<GrossTerm>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    // Sign of the number: the leading term dominates the remainder exactly.
    int sign() const { return terms_.empty() ? 0 : terms_.front().coefficient.sign(); }

    GrossNumber operator-() const {
        GrossNumber out = *this;
        for (auto& t : out.terms_) t.coefficient = -t.coefficient;
        return out;
    }

    GrossNumber operator+(const GrossNumber& other) const {
        std::vector<GrossTerm> all = terms_;
        all.insert(all.end(), other.terms_.begin(), other.terms_.end());
        return from_terms(std::move(all));
    }

    GrossNumber operator-(const GrossNumber& other) const { return *this + (-other); }

    GrossNumber operator*(const GrossNumber& other) const {
        std::vector<GrossTerm> prods;
        prods.reserve(terms_.size() * other.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : other.terms_) prods.push_back(detail::mul_terms(a, b));
        return from_terms(std::move(prods));
    }

    GrossNumber& operator+=(const GrossNumber& o) { return *this = *this + o; }
    GrossNumber& operator-=(const GrossNumber& o) { return *this = *this - o; }
    GrossNumber& operator*=(const GrossNumber& o) { return *this = *this * o; }

    bool operator==(const GrossNumber& other) const { return terms_ == other.terms_; }

    // The finite rational value, if the number is exactly a rational.
    std::optional<Rat> as_rational() const {
        if (terms_.empty()) return Rat(0);
        if (terms_.size() == 1 && terms_[0].exp_factors.empty() && terms_[0].gross_power == 0)
            return terms_[0].coefficient;
        return std::nullopt;
    }

    std::optional<Int> as_integer() const {
        auto r = as_rational();
        if (r && is_integer(*r)) return num(*r);
        return std::nullopt;
    }

private:
    void normalize() {
        std::vector<GrossTerm> kept;
        kept.reserve(terms_.size());
        for (auto& t : terms_) {
            if (t.coefficient == 0) continue;
            for (auto it = t.exp_factors.begin(); it != t.exp_factors.end();) {
                if (it->second.empty())
                    it = t.exp_factors.erase(it);
                else
                    ++it;
            }
            kept.push_back(std::move(t));
        }
        std::stable_sort(kept.begin(), kept.end(), [](const GrossTerm& a, const GrossTerm& b) {
            return detail::compare_keys(a, b) > 0;
        });
        terms_.clear();
        for (auto& t : kept) {
            if (!terms_.empty() && terms_.back().same_key(t)) {
                terms_.back().coefficient += t.coefficient;
                if (terms_.back().coefficient == 0) terms_.pop_back();
            } else {
                terms_.push_back(std::move(t));
            }
        }
    }

    std::vector<GrossTerm> terms_;
};

inline GrossNumber grossone() {
    return GrossNumber::from_terms({GrossTerm{Rat(1), {}, Rat(1)}});
}

// ---------------------------------------------------------------------------
// compare / classify
// ---------------------------------------------------------------------------
inline ordering compare(const GrossNumber& a, const GrossNumber& b) {
    int s = (a - b).sign();
    if (s < 0) return ordering::less;
    if (s > 0) return ordering::greater;
    return ordering::equal;
}

inline bool operator<(const GrossNumber& a, const GrossNumber& b) {
    return compare(a, b) == ordering::less;
}
inline bool operator>(const GrossNumber& a, const GrossNumber& b) {
    return compare(a, b) == ordering::greater;
}
inline bool operator<=(const GrossNumber& a, const GrossNumber& b) { return !(a > b); }
inline bool operator>=(const GrossNumber& a, const GrossNumber& b) { return !(a < b); }

// Classification by the leading term. An infinite leading term settles the
// class outright (g - 2 is an infinite number); a finite leading term with
// an infinitesimal tail is reported as mixed.
inline number_class classify(const GrossNumber& v) {
    if (v.is_zero()) return number_class::zero;
    number_class lead = detail::term_class(v.terms().front());
    if (lead == number_class::infinite) return lead;
    for (std::size_t i = 1; i < v.terms().size(); ++i)
        if (detail::term_class(v.terms()[i]) != lead) return number_class::mixed;
    return lead;
}

inline const char* to_string(number_class c) {
    switch (c) {
        case number_class::zero: return "zero";
        case number_class::finite: return "finite";
        case number_class::infinite: return "infinite";
        case number_class::infinitesimal: return "infinitesimal";
        case number_class::mixed: return "mixed";
    }
    return "?";
}

inline const char* to_string(ordering o) {
    switch (o) {
        case ordering::less: return "<";
        case ordering::equal: return "=";
        case ordering::greater: return ">";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// divide: exact or error
// ---------------------------------------------------------------------------
inline GrossNumber divide(const GrossNumber& a, const GrossNumber& b) {
    if (b.is_zero()) throw division_by_zero("division by zero gross-number");
    if (a.is_zero()) return GrossNumber();
    if (b.terms().size() == 1) {
        std::vector<GrossTerm> out;
        out.reserve(a.terms().size());
        for (const auto& t : a.terms()) out.push_back(detail::div_terms(t, b.terms()[0]));
        return GrossNumber::from_terms(std::move(out));
    }
    // Leading-term long division. If an exact quotient exists, its trailing
    // term is trail(a)/trail(b), so any candidate quotient term whose key
    // falls below that bound proves inexactness. An iteration cap backstops
    // divisors whose expansion stays above the bound without terminating.
    const GrossTerm& trail_a = a.terms().back();
    const GrossTerm& trail_b = b.terms().back();
    constexpr int kMaxQuotientTerms = 10000;
    std::vector<GrossTerm> quotient;  // produced in strictly decreasing key order
    GrossNumber remainder = a;
    int iterations = 0;
    while (!remainder.is_zero()) {
        if (++iterations > kMaxQuotientTerms)
            throw inexact_division("quotient does not terminate");
        GrossTerm t = detail::div_terms(remainder.terms().front(), b.terms().front());
        if (detail::compare_keys(detail::mul_terms(t, trail_b), trail_a) < 0)
            throw inexact_division("no exact quotient in the representable form");
        quotient.push_back(t);
        remainder -= GrossNumber::from_terms({t}) * b;
    }
    return GrossNumber::from_terms(std::move(quotient));
}

// ---------------------------------------------------------------------------
// pow
// ---------------------------------------------------------------------------
namespace detail {

inline GrossNumber pow_nonneg_int(const GrossNumber& base, const Int& n) {
    if (n == 0) {
        if (base.is_zero()) throw zero_to_nonpositive("0^0");
        return GrossNumber(Rat(1));
    }
    if (base.is_zero()) return GrossNumber();
    if (base.terms().size() == 1) {
        const GrossTerm& t = base.terms()[0];
        GrossTerm out;
        out.coefficient = rpow(t.coefficient, n);
        for (const auto& [p, poly] : t.exp_factors) out.exp_factors.emplace(p, poly.scaled(Rat(n)));
        out.gross_power = t.gross_power * Rat(n);
        return GrossNumber::from_terms({out});
    }
    GrossNumber result(Rat(1));
    GrossNumber b = base;
    Int e = n;
    while (e > 0) {
        if ((e & 1) != 0) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

// Splits an exponent into (integer constant, purely infinite part), or
// reports why it is not an acceptable exponent form.
struct ExponentParts {
    Int constant;
    ExponentPoly infinite;  // monomials c*g^q with q > 0
};

inline ExponentParts split_exponent(const GrossNumber& e) {
    ExponentParts out{0, {}};
    for (const auto& t : e.terms()) {
        if (!t.exp_factors.empty())
            throw unsupported_form("exponential term inside an exponent");
        if (t.gross_power > 0) {
            out.infinite.add_monomial(t.gross_power, t.coefficient);
        } else if (t.gross_power == 0) {
            if (!is_integer(t.coefficient))
                throw unsupported_form("non-integer finite part in exponent");
            out.constant = num(t.coefficient);
        } else {
            throw unsupported_form("infinitesimal part in exponent");
        }
    }
    return out;
}

}  // namespace detail

inline GrossNumber pow(const GrossNumber& base, const GrossNumber& exponent) {
    // Finite integer exponents: repeated multiplication / termwise inversion.
    if (auto n = exponent.as_integer()) {
        if (*n >= 0) return detail::pow_nonneg_int(base, *n);
        if (base.is_zero()) throw zero_to_nonpositive("0 raised to a negative power");
        if (base.terms().size() != 1)
            throw unsupported_form("negative exponent requires a single-term base");
        GrossTerm inv;
        inv.coefficient = Rat(1) / base.terms()[0].coefficient;
        for (const auto& [p, poly] : base.terms()[0].exp_factors)
            inv.exp_factors.emplace(p, poly.scaled(Rat(-1)));
        inv.gross_power = -base.terms()[0].gross_power;
        return detail::pow_nonneg_int(GrossNumber::from_terms({inv}), -*n);
    }
    if (exponent.as_rational())
        throw unsupported_form("non-integer finite exponent");

    // Infinite exponent: base must be a finite integer >= 0, and the exponent
    // must split into an integer constant plus a purely infinite part.
    detail::ExponentParts parts = detail::split_exponent(exponent);
    auto b = base.as_integer();
    if (!b || *b < 0)
        throw unsupported_form("infinite exponent requires a finite integer base >= 0");
    if (*b == 0) {
        if (exponent.sign() > 0) return GrossNumber();
        throw zero_to_nonpositive("0 raised to a non-positive infinite exponent");
    }
    if (*b == 1) return GrossNumber(Rat(1));
    GrossTerm out;
    out.coefficient = rpow(Rat(*b), parts.constant);
    out.gross_power = Rat(0);
    for (const auto& [p, mult] : detail::factorize(*b)) {
        ExponentPoly poly = parts.infinite.scaled(Rat(mult));
        if (!poly.empty()) out.exp_factors.emplace(p, std::move(poly));
    }
    return GrossNumber::from_terms({out});
}

inline GrossNumber pow(long long base, const GrossNumber& exponent) {
    return pow(GrossNumber(base), exponent);
}

// ---------------------------------------------------------------------------
// Canonical printing. Decreasing dominance order; within a term the pieces
// are coefficient, prime exponentials in increasing base order, then the
// g-power, joined with '*', e.g.  2*2^g*g - 2*2^g + 2.
// ---------------------------------------------------------------------------
namespace detail {

inline std::string power_suffix(const Rat& q) {
    if (q == 1) return "g";
    if (is_integer(q)) return "g^" + num(q).str();
    return "g^(" + gross::to_string(q) + ")";
}

inline std::string poly_string(const ExponentPoly& poly) {
    std::string out;
    bool first = true;
    for (auto it = poly.monomials.rbegin(); it != poly.monomials.rend(); ++it) {
        const Rat& q = it->first;
        const Rat& c = it->second;
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) out += gross::to_string(mag) + "*";
        out += power_suffix(q);
    }
    return out;
}

inline std::string term_body(const GrossTerm& t) {
    std::vector<std::string> pieces;
    for (const auto& [p, poly] : t.exp_factors) {
        const auto& m = poly.monomials;
        if (m.size() == 1 && m.begin()->first == 1 && m.begin()->second == 1)
            pieces.push_back(p.str() + "^g");
        else
            pieces.push_back(p.str() + "^(" + poly_string(poly) + ")");
    }
    if (t.gross_power != 0) pieces.push_back(power_suffix(t.gross_power));
    Rat mag = t.coefficient < 0 ? Rat(-t.coefficient) : t.coefficient;
    std::string out;
    if (pieces.empty() || mag != 1) out = gross::to_string(mag);
    for (const auto& p : pieces) {
        if (!out.empty()) out += "*";
        out += p;
    }
    return out;
}

}  // namespace detail

inline std::string to_string(const GrossNumber& v) {
    if (v.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : v.terms()) {
        if (first) {
            if (t.coefficient < 0) out += "-";
            first = false;
        } else {
            out += t.coefficient < 0 ? " - " : " + ";
        }
        out += detail::term_body(t);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const GrossNumber& v) {
    return os << to_string(v);
}
inline std::ostream& operator<<(std::ostream& os, number_class c) { return os << to_string(c); }
inline std::ostream& operator<<(std::ostream& os, ordering o) { return os << to_string(o); }

// ---------------------------------------------------------------------------
// Index integrality. Values like g/2 - 1 or 3g/4 count as integers: the
// infinite unit is divisible by every finite natural, so any rational
// multiple of a positive integer power of g is an integer; the finite part
// must be an integer outright. Exponential factors and negative or
// fractional g-powers disqualify.
// ---------------------------------------------------------------------------
inline bool is_gross_integer(const GrossNumber& v) {
    for (const auto& t : v.terms()) {
        if (!t.exp_factors.empty()) return false;
        if (t.gross_power == 0) {
            if (!is_integer(t.coefficient)) return false;
        } else {
            if (t.gross_power < 0 || !is_integer(t.gross_power)) return false;
        }
    }
    return true;
}

}  // namespace gross
