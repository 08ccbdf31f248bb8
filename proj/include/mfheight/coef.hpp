#pragma once

#include <string>
#include <variant>

#include "mfheight/bigfloat.hpp"
#include "mfheight/cyclo.hpp"
#include "mfheight/rat.hpp"
#include "mfheight/surd.hpp"

namespace mfh {

// Coefficient of a q-expansion term. Exact branches (Rat, SurdVal, Cyclo)
// stay exact under + and *; a SurdVal/Cyclo mix that is genuinely irrational
// on both sides falls through to certified BigComplex numerics. Equality is
// exact on exact branches and tolerance-free comparisons of BigComplex are
// deliberately not provided.
class Coef {
public:
    Coef() : v_(Rat(0)) {}
    Coef(const Rat& r) : v_(r) {}
    Coef(long n) : v_(Rat(n)) {}
    Coef(const SurdVal& s) { *this = s.is_rational() ? Coef(s.base()) : Coef(std::in_place_type<SurdVal>, s); }
    Coef(const Cyclo& c) {
        if (auto r = c.as_rational())
            v_ = *r;
        else
            v_ = c;
    }
    Coef(const BigComplex& z) : v_(z) {}

    bool is_exact() const { return !std::holds_alternative<BigComplex>(v_); }
    bool is_rat() const { return std::holds_alternative<Rat>(v_); }
    bool is_surd() const { return std::holds_alternative<SurdVal>(v_); }
    bool is_cyclo() const { return std::holds_alternative<Cyclo>(v_); }

    const Rat& rat() const { return std::get<Rat>(v_); }
    SurdVal surd() const {
        if (is_rat()) return SurdVal(rat());
        return std::get<SurdVal>(v_);
    }
    Cyclo cyclo() const {
        if (is_rat()) return Cyclo(rat());
        return std::get<Cyclo>(v_);
    }

    bool is_zero() const;
    BigComplex to_complex(long prec_bits = 0) const;

    friend Coef operator+(const Coef& a, const Coef& b) { return combine(a, b, false); }
    friend Coef operator*(const Coef& a, const Coef& b) { return combine(a, b, true); }
    friend Coef operator-(const Coef& a);
    friend Coef operator-(const Coef& a, const Coef& b) { return a + (-b); }
    Coef& operator+=(const Coef& o) { *this = *this + o; return *this; }
    Coef& operator*=(const Coef& o) { *this = *this * o; return *this; }

    // Exact equality; throws if either side is inexact.
    friend bool operator==(const Coef& a, const Coef& b);
    friend bool operator!=(const Coef& a, const Coef& b) { return !(a == b); }

    std::string str() const;

private:
    template <typename T, typename... A>
    Coef(std::in_place_type_t<T> t, A&&... a) : v_(t, std::forward<A>(a)...) {}

    static Coef combine(const Coef& a, const Coef& b, bool multiply);

    std::variant<Rat, SurdVal, Cyclo, BigComplex> v_;
};

}  // namespace mfh
