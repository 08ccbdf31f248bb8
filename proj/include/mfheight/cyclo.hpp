#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mfheight/bigfloat.hpp"
#include "mfheight/rat.hpp"

namespace mfh {

// Element of the group algebra Q[Z/MZ] read as sum coeffs[k] * e(k/M), with
// e(x) = exp(2 pi i x). Addition and multiplication of elements with different
// orders lift to the lcm. Stored sparsely with exponents reduced mod M;
// equality of represented complex numbers is decided exactly by reduction
// modulo the M-th cyclotomic polynomial.
class Cyclo {
public:
    Cyclo() : order_(1) {}
    explicit Cyclo(const Rat& c) : order_(1) {
        if (!c.is_zero()) coeffs_[0] = c;
    }
    static Cyclo root_of_unity(long k, long order);
    static Cyclo zero() { return Cyclo(); }
    static Cyclo one() { return Cyclo(Rat(1)); }
    // e(1/4).
    static Cyclo i() { return root_of_unity(1, 4); }
    // sqrt(n) for a positive integer n, as an exact cyclotomic number
    // (Gauss-sum construction). Throws for n <= 0.
    static Cyclo sqrt_int(long n);

    long order() const { return order_; }
    const std::map<long, Rat>& coeffs() const { return coeffs_; }

    Cyclo lifted_to(long new_order) const;

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a);
    friend Cyclo operator*(const Rat& s, const Cyclo& a);
    Cyclo& operator+=(const Cyclo& o) { *this = *this + o; return *this; }
    Cyclo& operator-=(const Cyclo& o) { *this = *this - o; return *this; }
    Cyclo& operator*=(const Cyclo& o) { *this = *this * o; return *this; }

    Cyclo conj() const;
    Cyclo pow(unsigned long e) const;

    // Exact test of the represented complex number against 0.
    bool is_zero() const;
    friend bool operator==(const Cyclo& a, const Cyclo& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    // Coordinates in the power basis {e(k/M)}^(phi(M)-1)_(k=0) after reduction
    // mod Phi_M; the element is rational iff only the constant survives.
    std::vector<Rat> canonical_coords() const;
    std::optional<Rat> as_rational() const;

    BigComplex to_complex(long prec_bits = 0) const;

    std::string str() const;

private:
    void trim();

    long order_;
    std::map<long, Rat> coeffs_;  // exponent mod order -> nonzero coefficient
};

// Phi_M as an exact integer-coefficient polynomial (ascending). Cached.
const std::vector<Rat>& cyclotomic_polynomial(long M);

}  // namespace mfh
