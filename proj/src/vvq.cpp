#include "mfheight/vvq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mfh {

void VVQExpansion::add_term(const Rat& exponent, long comp, const Coef& c) {
    if (comp < 0 || comp >= ncomp_)
        throw std::out_of_range("VVQExpansion: component out of range");
    if (c.is_zero()) return;
    Key k{exponent, comp};
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_exact() && it->second.is_zero()) terms_.erase(it);
    }
}

Coef VVQExpansion::at(const Rat& exponent, long comp) const {
    if (comp < 0 || comp >= ncomp_)
        throw std::out_of_range("VVQExpansion: component out of range");
    auto it = terms_.find(Key{exponent, comp});
    if (it != terms_.end()) return it->second;
    if (!(exponent < truncation_))
        throw std::out_of_range("VVQExpansion: exponent " + exponent.str() +
                                " beyond truncation " + truncation_.str());
    return Coef(Rat(0));
}

Rat VVQExpansion::min_exponent() const {
    if (terms_.empty()) return truncation_;
    return terms_.begin()->first.first;
}

Rat VVQExpansion::max_exponent() const {
    if (terms_.empty()) return truncation_;
    return terms_.rbegin()->first.first;
}

VVQExpansion VVQExpansion::scaled(const Coef& s) const {
    VVQExpansion r(ncomp_, truncation_);
    if (s.is_zero() && s.is_exact()) return r;
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c * s);
    return r;
}

VVQExpansion operator+(const VVQExpansion& a, const VVQExpansion& b) {
    if (a.ncomp_ != b.ncomp_)
        throw std::invalid_argument("VVQExpansion: component count mismatch");
    VVQExpansion r(a.ncomp_, std::min(a.truncation_, b.truncation_));
    for (const auto& [k, c] : a.terms_)
        if (k.first < r.truncation_) r.add_term(k.first, k.second, c);
    for (const auto& [k, c] : b.terms_)
        if (k.first < r.truncation_) r.add_term(k.first, k.second, c);
    return r;
}

VVQExpansion VVQExpansion::nonpositive_part() const {
    if (truncation_.sign() <= 0)
        throw std::logic_error("VVQExpansion: truncation does not cover the n <= 0 range");
    // The result vanishes identically above 0, so it is complete below any
    // bound; a generous truncation keeps downstream reach checks permissive.
    VVQExpansion r(ncomp_, Rat(1000000000L));
    for (const auto& [k, c] : terms_)
        if (k.first.sign() <= 0) r.add_term(k.first, k.second, c);
    return r;
}

std::string VVQExpansion::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ") q^(" << k.first.str() << ") e_" << k.second;
    }
    if (first) os << "0";
    os << "  [O(q^" << truncation_.str() << ")]";
    return os.str();
}

}  // namespace mfh
