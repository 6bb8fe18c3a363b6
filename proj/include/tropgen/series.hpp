#pragma once

/**
 * @file series.hpp
 * @brief Finite generalized power series over the rationals: finite sums
 *        sum c_e * t^e with rational exponents e and nonzero rational c_e.
 *
 * This is the finite-support subring of the ring of generalized power
 * series; its fraction field (puiseux.hpp) is the coefficient domain for
 * the non-trivially valued case.
 */

#include "tropgen/rational.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace tropgen {

class FiniteSeries {
  public:
    // terms sorted by strictly increasing exponent, all coefficients nonzero
    using Term = std::pair<Rat, Rat>;  // (exponent, coefficient)

    FiniteSeries() = default;
    explicit FiniteSeries(const Rat& c) {
        if (c != 0) terms_.emplace_back(Rat(0), c);
    }
    static FiniteSeries monomial(const Rat& coeff, const Rat& exponent) {
        FiniteSeries s;
        if (coeff != 0) s.terms_.emplace_back(exponent, coeff);
        return s;
    }
    static FiniteSeries t() { return monomial(Rat(1), Rat(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
    }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// min exponent; only valid for nonzero series
    const Rat& low_exponent() const { return terms_.front().first; }
    const Rat& low_coefficient() const { return terms_.front().second; }
    const Rat& high_exponent() const { return terms_.back().first; }
    const Rat& high_coefficient() const { return terms_.back().second; }

    /// valuation: min exponent of the support; nullopt encodes +infinity
    std::optional<Rat> valuation() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.front().first;
    }

    friend bool operator==(const FiniteSeries& a, const FiniteSeries& b) {
        return a.terms_ == b.terms_;
    }

    friend FiniteSeries operator-(const FiniteSeries& a) {
        FiniteSeries r = a;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend FiniteSeries operator+(const FiniteSeries& a, const FiniteSeries& b) {
        FiniteSeries r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() && ib != b.terms_.end()) {
            if (ia->first < ib->first) {
                r.terms_.push_back(*ia++);
            } else if (ib->first < ia->first) {
                r.terms_.push_back(*ib++);
            } else {
                Rat c = ia->second + ib->second;
                if (c != 0) r.terms_.emplace_back(ia->first, c);
                ++ia;
                ++ib;
            }
        }
        r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
        r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
        return r;
    }

    friend FiniteSeries operator-(const FiniteSeries& a, const FiniteSeries& b) {
        return a + (-b);
    }

    friend FiniteSeries operator*(const FiniteSeries& a, const FiniteSeries& b) {
        FiniteSeries r;
        if (a.is_zero() || b.is_zero()) return r;
        std::map<Rat, Rat> acc;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
        for (auto& [e, c] : acc)
            if (c != 0) r.terms_.emplace_back(e, c);
        return r;
    }

    FiniteSeries& operator+=(const FiniteSeries& o) { return *this = *this + o; }
    FiniteSeries& operator-=(const FiniteSeries& o) { return *this = *this - o; }
    FiniteSeries& operator*=(const FiniteSeries& o) { return *this = *this * o; }

    /// multiply by c * t^e
    FiniteSeries scaled(const Rat& coeff, const Rat& exponent) const {
        FiniteSeries r;
        if (coeff == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& [e, c] : terms_) r.terms_.emplace_back(e + exponent, c * coeff);
        return r;
    }

    /// Exact division; throws if the quotient is not a finite series.
    /// Division proceeds from the top exponent down, as for polynomials.
    /// For an exact quotient q we have q.low = a.low - b.low, so any step
    /// producing a smaller exponent certifies inexactness.
    friend FiniteSeries divide_exact(const FiniteSeries& a, const FiniteSeries& b) {
        if (b.is_zero()) throw std::domain_error("series division by zero");
        FiniteSeries quot;
        if (a.is_zero()) return quot;
        const Rat low_bound = a.low_exponent() - b.low_exponent();
        FiniteSeries rem = a;
        while (!rem.is_zero()) {
            Rat e = rem.high_exponent() - b.high_exponent();
            if (e < low_bound) throw std::domain_error("series division is not exact");
            Rat c = rem.high_coefficient() / b.high_coefficient();
            quot.terms_.emplace_back(e, c);
            rem -= b.scaled(c, e);
        }
        std::reverse(quot.terms_.begin(), quot.terms_.end());
        return quot;
    }

  private:
    std::vector<Term> terms_;
};

}  // namespace tropgen
