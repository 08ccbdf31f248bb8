#include "mfheight/cyclo.hpp"

#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mfh {

namespace {

long normalize_exponent(long k, long M) {
    long r = k % M;
    return r < 0 ? r + M : r;
}

// Exact division of polynomials with rational coefficients, ascending order.
// Requires the division to be exact (used only for x^M-1 / product of Phi_d).
std::vector<Rat> poly_divexact(std::vector<Rat> num, const std::vector<Rat>& den) {
    if (den.empty() || den.back().is_zero())
        throw std::logic_error("poly_divexact: bad divisor");
    std::vector<Rat> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
    for (long i = static_cast<long>(num.size()) - 1; i >= static_cast<long>(den.size()) - 1; --i) {
        Rat c = num[i] / den.back();
        q[i - den.size() + 1] = c;
        if (c.is_zero()) continue;
        for (size_t j = 0; j < den.size(); ++j)
            num[i - den.size() + 1 + j] -= c * den[j];
    }
    for (const Rat& c : num)
        if (!c.is_zero()) throw std::logic_error("poly_divexact: division not exact");
    return q;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

}  // namespace

const std::vector<Rat>& cyclotomic_polynomial(long M) {
    static std::map<long, std::vector<Rat>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;

    std::function<const std::vector<Rat>&(long)> get = [&](long m) -> const std::vector<Rat>& {
        auto hit = cache.find(m);
        if (hit != cache.end()) return hit->second;
        std::vector<Rat> result;
        if (m == 1) {
            result = {Rat(-1), Rat(1)};  // x - 1
        } else {
            // x^m - 1 divided by the product of Phi_d over proper divisors d.
            std::vector<Rat> num(m + 1, Rat(0));
            num[0] = Rat(-1);
            num[m] = Rat(1);
            std::vector<Rat> den{Rat(1)};
            for (long d = 1; d < m; ++d)
                if (m % d == 0) den = poly_mul(den, get(d));
            result = poly_divexact(std::move(num), den);
        }
        return cache.emplace(m, std::move(result)).first->second;
    };
    return get(M);
}

void Cyclo::trim() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second.is_zero())
            it = coeffs_.erase(it);
        else
            ++it;
    }
    if (coeffs_.empty()) order_ = 1;
}

Cyclo Cyclo::root_of_unity(long k, long order) {
    if (order <= 0) throw std::domain_error("Cyclo: root of unity needs positive order");
    Cyclo r;
    r.order_ = order;
    r.coeffs_[normalize_exponent(k, order)] = Rat(1);
    return r;
}

Cyclo Cyclo::lifted_to(long new_order) const {
    if (new_order % order_ != 0)
        throw std::invalid_argument("Cyclo: lift target must be a multiple of the order");
    Cyclo r;
    r.order_ = new_order;
    long scale = new_order / order_;
    for (const auto& [k, c] : coeffs_) r.coeffs_[k * scale] = c;
    return r;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    long M = std::lcm(a.order_, b.order_);
    Cyclo x = a.lifted_to(M), y = b.lifted_to(M);
    for (const auto& [k, c] : y.coeffs_) {
        auto [it, inserted] = x.coeffs_.emplace(k, c);
        if (!inserted) it->second += c;
    }
    x.trim();
    return x;
}

Cyclo operator-(const Cyclo& a) {
    Cyclo r = a;
    for (auto& [k, c] : r.coeffs_) c = -c;
    return r;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    long M = std::lcm(a.order_, b.order_);
    Cyclo x = a.lifted_to(M), y = b.lifted_to(M);
    Cyclo r;
    r.order_ = M;
    for (const auto& [ka, ca] : x.coeffs_)
        for (const auto& [kb, cb] : y.coeffs_) {
            long k = ka + kb >= M ? ka + kb - M : ka + kb;
            auto [it, inserted] = r.coeffs_.emplace(k, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    r.trim();
    return r;
}

Cyclo operator*(const Rat& s, const Cyclo& a) {
    Cyclo r = a;
    for (auto& [k, c] : r.coeffs_) c *= s;
    r.trim();
    return r;
}

Cyclo Cyclo::conj() const {
    Cyclo r;
    r.order_ = order_;
    for (const auto& [k, c] : coeffs_) r.coeffs_[k == 0 ? 0 : order_ - k] = c;
    return r;
}

Cyclo Cyclo::pow(unsigned long e) const {
    Cyclo r = Cyclo::one();
    Cyclo base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::vector<Rat> Cyclo::canonical_coords() const {
    const std::vector<Rat>& phi = cyclotomic_polynomial(order_);
    size_t deg = phi.size() - 1;  // phi(M)
    std::vector<Rat> v(order_ > static_cast<long>(deg) ? order_ : deg, Rat(0));
    for (const auto& [k, c] : coeffs_) v[k] = c;
    // Reduce mod Phi_M (monic), top down.
    for (long i = static_cast<long>(v.size()) - 1; i >= static_cast<long>(deg); --i) {
        if (v[i].is_zero()) continue;
        Rat c = v[i];
        v[i] = Rat(0);
        for (size_t j = 0; j < deg; ++j) v[i - deg + j] -= c * phi[j];
    }
    v.resize(deg);
    return v;
}

bool Cyclo::is_zero() const {
    if (coeffs_.empty()) return true;
    for (const Rat& c : canonical_coords())
        if (!c.is_zero()) return false;
    return true;
}

std::optional<Rat> Cyclo::as_rational() const {
    std::vector<Rat> v = canonical_coords();
    for (size_t i = 1; i < v.size(); ++i)
        if (!v[i].is_zero()) return std::nullopt;
    return v.empty() ? Rat(0) : v[0];
}

BigComplex Cyclo::to_complex(long prec_bits) const {
    long prec = prec_bits > 0 ? prec_bits : default_precision();
    BigComplex acc{BigFloat(prec), BigFloat(prec)};
    for (const auto& [k, c] : coeffs_) {
        BigFloat x = BigFloat(Rat(k, order_), prec);
        BigComplex term = BigComplex::e_of(x);
        BigFloat cf(c, prec);
        acc.re += cf * term.re;
        acc.im += cf * term.im;
    }
    return acc;
}

Cyclo Cyclo::sqrt_int(long n) {
    if (n <= 0) throw std::domain_error("Cyclo: sqrt_int needs n > 0");
    // Pull out the square part, build sqrt of the squarefree remainder.
    long s = 1, k = n;
    for (long p = 2; p * p <= k;) {
        if (k % (p * p) == 0) {
            k /= p * p;
            s *= p;
        } else {
            ++p;
        }
    }
    Cyclo r{Rat(s)};
    long rem = k;
    if (rem % 2 == 0) {
        // sqrt 2 = e(1/8) + e(-1/8)
        r *= root_of_unity(1, 8) + root_of_unity(-1, 8);
        rem /= 2;
    }
    for (long p = 3; rem > 1; p += 2) {
        if (rem % p != 0) continue;
        rem /= p;
        // Quadratic Gauss sum: sum_j (j|p) e(j/p) = sqrt p for p = 1 mod 4,
        // i sqrt p for p = 3 mod 4.
        Cyclo g;
        for (long j = 1; j < p; ++j) {
            int chi = Int::kronecker(Int(j), Int(p));
            if (chi == 1)
                g += root_of_unity(j, p);
            else
                g -= root_of_unity(j, p);
        }
        if (p % 4 == 3) g *= root_of_unity(-1, 4);
        r *= g;
    }
    return r;
}

std::string Cyclo::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (k != 0) os << "*e(" << k << "/" << order_ << ")";
    }
    return os.str();
}

}  // namespace mfh
