#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "mfheight/bigfloat.hpp"
#include "mfheight/rat.hpp"

namespace mfh {

// base + coeff * sqrt(kernel), with kernel a squarefree positive integer and
// kernel == 1 meaning the value is plain rational (coeff folded into base).
// Construction from an arbitrary nonnegative rational radicand canonicalizes:
// sqrt(p/q) = sqrt(p*q)/q and the square part of p*q is extracted. Sums
// require matching kernels; products of pure radicals recanonicalize, so
// expressions like sqrt(m0*m1)*sqrt(D0*D1) collapse to rationals exactly.
class SurdVal {
public:
    SurdVal() : base_(0), coeff_(0), kernel_(1) {}
    SurdVal(const Rat& rational) : base_(rational), coeff_(0), kernel_(1) {}
    SurdVal(long v) : base_(v), coeff_(0), kernel_(1) {}

    // base + coeff * sqrt(radicand), radicand a nonnegative rational.
    static SurdVal with_radicand(const Rat& base, const Rat& coeff, const Rat& radicand);
    static SurdVal sqrt_of(const Rat& radicand) { return with_radicand(Rat(0), Rat(1), radicand); }

    const Rat& base() const { return base_; }
    const Rat& coeff() const { return coeff_; }
    const Int& kernel() const { return kernel_; }
    bool is_rational() const { return coeff_.is_zero(); }

    friend SurdVal operator+(const SurdVal& a, const SurdVal& b);
    friend SurdVal operator-(const SurdVal& a, const SurdVal& b) { return a + (-b); }
    friend SurdVal operator-(const SurdVal& a) {
        SurdVal r = a;
        r.base_ = -r.base_;
        r.coeff_ = -r.coeff_;
        return r;
    }
    friend SurdVal operator*(const SurdVal& a, const SurdVal& b);
    friend SurdVal operator/(const SurdVal& a, const SurdVal& b);
    SurdVal& operator+=(const SurdVal& o) { *this = *this + o; return *this; }
    SurdVal& operator-=(const SurdVal& o) { *this = *this - o; return *this; }
    SurdVal& operator*=(const SurdVal& o) { *this = *this * o; return *this; }

    friend bool operator==(const SurdVal& a, const SurdVal& b) {
        if (a.base_ != b.base_) return false;
        if (a.coeff_.is_zero() && b.coeff_.is_zero()) return true;
        return a.coeff_ == b.coeff_ && a.kernel_ == b.kernel_;
    }
    friend bool operator!=(const SurdVal& a, const SurdVal& b) { return !(a == b); }

    bool is_zero() const { return base_.is_zero() && coeff_.is_zero(); }
    SurdVal conjugate() const {  // base - coeff * sqrt(kernel)
        SurdVal r = *this;
        r.coeff_ = -r.coeff_;
        return r;
    }
    SurdVal inverse() const;
    SurdVal pow(long e) const;

    BigFloat to_bigfloat(long prec_bits = 0) const;
    std::string str() const;

private:
    Rat base_;
    Rat coeff_;
    Int kernel_;
};

// radicand^(p/2) for integer p >= 0: rational for even p, rational*sqrt for
// odd p. This is the m^((kappa-1)/2) multiplicity helper.
SurdVal half_integer_power(const Rat& radicand, long numerator_p);

}  // namespace mfh
