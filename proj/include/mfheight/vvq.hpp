#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mfheight/coef.hpp"
#include "mfheight/rat.hpp"

namespace mfh {

// Vector-valued q-series: finitely many stored terms (exponent, component) ->
// coefficient, plus a truncation order. Every exponent strictly below
// `truncation` is complete (absent means the coefficient is zero); nothing is
// claimed at or above it. Exponents are rationals, components are indices
// into whatever discriminant form the caller works over.
class VVQExpansion {
public:
    VVQExpansion() : ncomp_(1), truncation_(0) {}
    VVQExpansion(long ncomp, Rat truncation)
        : ncomp_(ncomp), truncation_(std::move(truncation)) {}

    long ncomp() const { return ncomp_; }
    const Rat& truncation() const { return truncation_; }
    void set_truncation(const Rat& t) { truncation_ = t; }

    using Key = std::pair<Rat, long>;
    const std::map<Key, Coef>& terms() const { return terms_; }

    void add_term(const Rat& exponent, long comp, const Coef& c);
    // stored coefficient or exact zero; throws if the exponent is beyond the
    // truncation (the value there is unknown, not zero)
    Coef at(const Rat& exponent, long comp) const;
    bool known(const Rat& exponent) const { return exponent < truncation_; }

    bool empty() const { return terms_.empty(); }
    // smallest stored exponent; truncation when there are no terms
    Rat min_exponent() const;
    Rat max_exponent() const;

    VVQExpansion scaled(const Coef& s) const;
    friend VVQExpansion operator+(const VVQExpansion& a, const VVQExpansion& b);
    VVQExpansion operator-() const { return scaled(Coef(Rat(-1))); }

    // n <= 0 terms
    VVQExpansion nonpositive_part() const;

    std::string str() const;

private:
    long ncomp_;
    Rat truncation_;
    std::map<Key, Coef> terms_;
};

}  // namespace mfh
