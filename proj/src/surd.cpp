#include "mfheight/surd.hpp"

#include <sstream>

namespace mfh {

namespace {

// n = square * kernel with kernel squarefree. Trial division; radicands in
// this artifact stay desk-sized (products of discriminants).
void split_square(const Int& n, Int& square_root, Int& kernel) {
    Int m = n;
    square_root = Int(1);
    kernel = Int(1);
    Int p(2);
    while (p * p <= m) {
        Int p2 = p * p;
        if (m.divisible_by(p2)) {
            m = m.divexact(p2);
            square_root *= p;
        } else {
            if (m.divisible_by(p)) {
                m = m.divexact(p);
                kernel *= p;
            }
            p += Int(1);
        }
    }
    kernel *= m;
}

}  // namespace

SurdVal SurdVal::with_radicand(const Rat& base, const Rat& coeff, const Rat& radicand) {
    if (radicand.sign() < 0)
        throw std::domain_error("SurdVal: negative radicand");
    SurdVal r;
    r.base_ = base;
    if (coeff.is_zero() || radicand.is_zero()) {
        r.coeff_ = Rat(0);
        r.kernel_ = Int(1);
        return r;
    }
    // sqrt(p/q) = sqrt(p*q) / q
    Int pq = radicand.num() * radicand.den();
    Int sq, ker;
    split_square(pq, sq, ker);
    if (ker == Int(1)) {
        r.base_ += coeff * Rat(sq, radicand.den());
        r.coeff_ = Rat(0);
        r.kernel_ = Int(1);
    } else {
        r.coeff_ = coeff * Rat(sq, radicand.den());
        r.kernel_ = ker;
    }
    return r;
}

SurdVal operator+(const SurdVal& a, const SurdVal& b) {
    SurdVal r;
    r.base_ = a.base_ + b.base_;
    if (a.coeff_.is_zero()) {
        r.coeff_ = b.coeff_;
        r.kernel_ = b.kernel_;
    } else if (b.coeff_.is_zero()) {
        r.coeff_ = a.coeff_;
        r.kernel_ = a.kernel_;
    } else if (a.kernel_ == b.kernel_) {
        r.coeff_ = a.coeff_ + b.coeff_;
        r.kernel_ = a.kernel_;
        if (r.coeff_.is_zero()) r.kernel_ = Int(1);
    } else {
        throw std::domain_error("SurdVal: sum of incompatible radicands sqrt(" +
                                a.kernel_.str() + ") and sqrt(" + b.kernel_.str() + ")");
    }
    return r;
}

SurdVal operator*(const SurdVal& a, const SurdVal& b) {
    // (a0 + a1 sqrt(ka)) (b0 + b1 sqrt(kb)). The cross radical term
    // sqrt(ka*kb) recanonicalizes; it must merge with an existing kernel or
    // land on a rational, otherwise the product leaves the ring we model.
    SurdVal r;
    r.base_ = a.base_ * b.base_;
    r.coeff_ = Rat(0);
    r.kernel_ = Int(1);
    auto add_radical = [&r](const Rat& c, const Int& k) {
        if (c.is_zero()) return;
        if (r.coeff_.is_zero()) {
            r.coeff_ = c;
            r.kernel_ = k;
        } else if (r.kernel_ == k) {
            r.coeff_ += c;
            if (r.coeff_.is_zero()) r.kernel_ = Int(1);
        } else {
            throw std::domain_error("SurdVal: product mixes radicands sqrt(" + r.kernel_.str() +
                                    ") and sqrt(" + k.str() + ")");
        }
    };
    add_radical(a.base_ * b.coeff_, b.kernel_);
    add_radical(a.coeff_ * b.base_, a.kernel_);
    if (!a.coeff_.is_zero() && !b.coeff_.is_zero()) {
        Int prod = a.kernel_ * b.kernel_;
        Int sq, ker;
        Int m = prod;
        // kernels are squarefree, so the square part is gcd^2
        Int g = Int::gcd(a.kernel_, b.kernel_);
        sq = g;
        ker = prod.divexact(g * g);
        (void)m;
        Rat c = a.coeff_ * b.coeff_ * Rat(sq);
        if (ker == Int(1))
            r.base_ += c;
        else
            add_radical(c, ker);
    }
    return r;
}

SurdVal SurdVal::inverse() const {
    if (is_zero()) throw std::domain_error("SurdVal: inverse of zero");
    if (is_rational()) return SurdVal(Rat(1) / base_);
    // 1/(a + b sqrt k) = (a - b sqrt k) / (a^2 - b^2 k)
    Rat norm = base_ * base_ - coeff_ * coeff_ * Rat(kernel_);
    if (norm.is_zero()) throw std::domain_error("SurdVal: zero norm");
    SurdVal r;
    r.base_ = base_ / norm;
    r.coeff_ = -coeff_ / norm;
    r.kernel_ = kernel_;
    if (r.coeff_.is_zero()) r.kernel_ = Int(1);
    return r;
}

SurdVal operator/(const SurdVal& a, const SurdVal& b) { return a * b.inverse(); }

SurdVal SurdVal::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    SurdVal r(Rat(1));
    SurdVal base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

BigFloat SurdVal::to_bigfloat(long prec_bits) const {
    long prec = prec_bits > 0 ? prec_bits : default_precision();
    BigFloat r(base_, prec);
    if (!coeff_.is_zero())
        r += BigFloat(coeff_, prec) * BigFloat(Rat(kernel_), prec).sqrt();
    return r;
}

std::string SurdVal::str() const {
    if (is_rational()) return base_.str();
    std::ostringstream os;
    if (!base_.is_zero()) os << base_.str() << " + ";
    os << "(" << coeff_.str() << ")*sqrt(" << kernel_.str() << ")";
    return os.str();
}

SurdVal half_integer_power(const Rat& radicand, long numerator_p) {
    if (numerator_p < 0) throw std::domain_error("half_integer_power: negative exponent");
    if (radicand.sign() < 0) throw std::domain_error("half_integer_power: negative base");
    Rat even_part = radicand.pow(numerator_p / 2);
    if (numerator_p % 2 == 0) return SurdVal(even_part);
    return SurdVal::with_radicand(Rat(0), even_part, radicand);
}

}  // namespace mfh
