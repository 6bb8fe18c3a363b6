#pragma once

/**
 * @file puiseux.hpp
 * @brief The valued coefficient field: fractions of finite generalized power
 *        series over the rationals, with valuation and residue maps.
 *
 * Inverses are kept symbolic as numerator/denominator pairs and never
 * expanded, so every field operation is exact. Equality is decided by
 * cross-multiplication and does not depend on the normal form.
 */

#include "tropgen/series.hpp"

namespace tropgen {

/// Value of the valuation map: a rational number, or +infinity exactly for 0.
struct Valuation {
    std::optional<Rat> value;  // nullopt encodes +infinity

    bool is_infinite() const { return !value.has_value(); }
    const Rat& finite() const { return *value; }

    static Valuation infinite() { return Valuation{std::nullopt}; }
    static Valuation of(const Rat& q) { return Valuation{q}; }

    friend bool operator==(const Valuation& a, const Valuation& b) { return a.value == b.value; }
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return a.finite() < b.finite();
    }
    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.is_infinite() || b.is_infinite()) return infinite();
        return of(a.finite() + b.finite());
    }
    std::string str() const { return is_infinite() ? "inf" : to_string(finite()); }
};

struct NegativeValuationError : std::domain_error {
    NegativeValuationError() : std::domain_error("residue of element with negative valuation") {}
};
struct DivisionByZeroError : std::domain_error {
    DivisionByZeroError() : std::domain_error("division by zero") {}
};

class PuiseuxScalar {
  public:
    PuiseuxScalar() : num_(), den_(Rat(1)) {}
    explicit PuiseuxScalar(const Rat& c) : num_(c), den_(Rat(1)) {}
    PuiseuxScalar(FiniteSeries num, FiniteSeries den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZeroError();
        canonicalize();
    }
    static PuiseuxScalar from_series(FiniteSeries s) {
        return PuiseuxScalar(std::move(s), FiniteSeries(Rat(1)));
    }
    static PuiseuxScalar t() { return from_series(FiniteSeries::t()); }
    static PuiseuxScalar t_power(const Rat& e) {
        return from_series(FiniteSeries::monomial(Rat(1), e));
    }

    const FiniteSeries& num() const { return num_; }
    const FiniteSeries& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    Valuation valuation() const {
        if (num_.is_zero()) return Valuation::infinite();
        return Valuation::of(num_.low_exponent() - den_.low_exponent());
    }

    /// Image in the residue field; requires valuation >= 0.
    Rat residue() const {
        Valuation v = valuation();
        if (v.is_infinite()) return Rat(0);
        if (v.finite() < 0) throw NegativeValuationError();
        if (v.finite() > 0) return Rat(0);
        return num_.low_coefficient() / den_.low_coefficient();
    }

    friend PuiseuxScalar operator+(const PuiseuxScalar& a, const PuiseuxScalar& b) {
        return PuiseuxScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend PuiseuxScalar operator-(const PuiseuxScalar& a, const PuiseuxScalar& b) {
        return PuiseuxScalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend PuiseuxScalar operator-(const PuiseuxScalar& a) {
        PuiseuxScalar r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend PuiseuxScalar operator*(const PuiseuxScalar& a, const PuiseuxScalar& b) {
        return PuiseuxScalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend PuiseuxScalar operator/(const PuiseuxScalar& a, const PuiseuxScalar& b) {
        if (b.is_zero()) throw DivisionByZeroError();
        return PuiseuxScalar(a.num_ * b.den_, a.den_ * b.num_);
    }
    PuiseuxScalar& operator+=(const PuiseuxScalar& o) { return *this = *this + o; }
    PuiseuxScalar& operator-=(const PuiseuxScalar& o) { return *this = *this - o; }
    PuiseuxScalar& operator*=(const PuiseuxScalar& o) { return *this = *this * o; }
    PuiseuxScalar& operator/=(const PuiseuxScalar& o) { return *this = *this / o; }

    PuiseuxScalar inverse() const {
        if (is_zero()) throw DivisionByZeroError();
        return PuiseuxScalar(den_, num_);
    }

    /// cross-multiplication equality
    friend bool operator==(const PuiseuxScalar& a, const PuiseuxScalar& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const PuiseuxScalar& a, const PuiseuxScalar& b) { return !(a == b); }

    /// True if the value lies in the rationals (denominator divides exactly).
    std::optional<Rat> as_rational() const {
        if (num_.is_zero()) return Rat(0);
        if (den_.is_monomial() && num_.is_monomial() &&
            num_.low_exponent() == den_.low_exponent())
            return num_.low_coefficient() / den_.low_coefficient();
        try {
            FiniteSeries q = divide_exact(num_, den_);
            if (q.is_monomial() && q.low_exponent() == 0) return q.low_coefficient();
            if (q.is_zero()) return Rat(0);
        } catch (const std::domain_error&) {
        }
        return std::nullopt;
    }

  private:
    // Normal form: common series factors are not cancelled (no gcd exists in
    // general), but monomial content is: the denominator is scaled to have
    // lowest exponent 0 and lowest coefficient 1, and a full cancellation is
    // attempted when one side is a monomial or divides exactly.
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = FiniteSeries(Rat(1));
            return;
        }
        if (den_.is_monomial()) {
            num_ = num_.scaled(Rat(1) / den_.low_coefficient(), -den_.low_exponent());
            den_ = FiniteSeries(Rat(1));
            return;
        }
        if (num_.is_monomial()) {
            den_ = den_.scaled(Rat(1) / num_.low_coefficient(), -num_.low_exponent());
            num_ = FiniteSeries(Rat(1));
            return;
        }
        try {
            FiniteSeries q = divide_exact(num_, den_);
            num_ = std::move(q);
            den_ = FiniteSeries(Rat(1));
            return;
        } catch (const std::domain_error&) {
        }
        // scale so den has low exponent 0 and low coefficient 1
        Rat c = den_.low_coefficient();
        Rat e = den_.low_exponent();
        num_ = num_.scaled(Rat(1) / c, -e);
        den_ = den_.scaled(Rat(1) / c, -e);
    }

    FiniteSeries num_;
    FiniteSeries den_;
};

inline Valuation valuation(const PuiseuxScalar& a) { return a.valuation(); }
inline Rat residue(const PuiseuxScalar& a) { return a.residue(); }

/// Common-denominator normalization for a coefficient sequence.
///
/// Returns N and series c_i * d (d the product of distinct denominators),
/// shifted by a power of t so that every exponent is a nonnegative multiple
/// of 1/N. Ratios c_i/c_j are preserved.
struct ClearedCoefficients {
    Int N;                            // common exponent denominator
    std::vector<FiniteSeries> polys;  // exponents in (1/N) * nonnegative integers
};

inline ClearedCoefficients clear_denominators(const std::vector<PuiseuxScalar>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("clear_denominators: empty input");
    // multiply everything by each distinct denominator once
    std::vector<FiniteSeries> dens;
    for (const auto& c : coeffs) {
        if (c.den().is_one()) continue;
        bool seen = false;
        for (const auto& d : dens)
            if (d == c.den()) {
                seen = true;
                break;
            }
        if (!seen) dens.push_back(c.den());
    }
    std::vector<FiniteSeries> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        FiniteSeries s = c.num();
        for (const auto& d : dens)
            if (!(d == c.den())) s *= d;
        if (c.den().is_one())
            for (const auto& d : dens) (void)d;  // num already includes no den factor
        out.push_back(std::move(s));
    }
    // careful: above multiplies num_i by all dens except its own; if its own
    // denominator is 1 it must be multiplied by all of them
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].den().is_one()) {
            FiniteSeries s = coeffs[i].num();
            for (const auto& d : dens) s *= d;
            out[i] = std::move(s);
        }
    }
    // shift exponents to be >= 0 and find the common exponent denominator
    std::optional<Rat> low;
    Int N(1);
    for (const auto& s : out)
        if (!s.is_zero()) {
            if (!low || s.low_exponent() < *low) low = s.low_exponent();
        }
    if (low && *low < 0)
        for (auto& s : out) s = s.scaled(Rat(1), -*low);
    else
        low = Rat(0);
    for (const auto& s : out)
        for (const auto& [e, c] : s.terms()) N = lcm(N, den(e));
    return ClearedCoefficients{N, std::move(out)};
}

}  // namespace tropgen
