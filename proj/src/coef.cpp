#include "mfheight/coef.hpp"

#include <sstream>

namespace mfh {

bool Coef::is_zero() const {
    if (is_rat()) return rat().is_zero();
    if (is_surd()) return std::get<SurdVal>(v_).is_zero();
    if (is_cyclo()) return std::get<Cyclo>(v_).is_zero();
    const BigComplex& z = std::get<BigComplex>(v_);
    return z.re.is_zero() && z.im.is_zero();
}

BigComplex Coef::to_complex(long prec_bits) const {
    long prec = prec_bits > 0 ? prec_bits : default_precision();
    if (is_rat()) return BigComplex::from_real(BigFloat(rat(), prec));
    if (is_surd()) return BigComplex::from_real(std::get<SurdVal>(v_).to_bigfloat(prec));
    if (is_cyclo()) return std::get<Cyclo>(v_).to_complex(prec);
    return std::get<BigComplex>(v_);
}

Coef operator-(const Coef& a) {
    if (a.is_rat()) return Coef(-a.rat());
    if (a.is_surd()) return Coef(-std::get<SurdVal>(a.v_));
    if (a.is_cyclo()) return Coef(-std::get<Cyclo>(a.v_));
    return Coef(-std::get<BigComplex>(a.v_));
}

Coef Coef::combine(const Coef& a, const Coef& b, bool multiply) {
    if (a.is_rat() && b.is_rat())
        return multiply ? Coef(a.rat() * b.rat()) : Coef(a.rat() + b.rat());
    auto surdish = [](const Coef& c) { return c.is_rat() || c.is_surd(); };
    auto cycloish = [](const Coef& c) { return c.is_rat() || c.is_cyclo(); };
    if (surdish(a) && surdish(b))
        return multiply ? Coef(a.surd() * b.surd()) : Coef(a.surd() + b.surd());
    if (cycloish(a) && cycloish(b))
        return multiply ? Coef(a.cyclo() * b.cyclo()) : Coef(a.cyclo() + b.cyclo());
    // Mixed surd/cyclo or anything inexact: certified numerics.
    BigComplex x = a.to_complex(), y = b.to_complex();
    return multiply ? Coef(x * y) : Coef(x + y);
}

bool operator==(const Coef& a, const Coef& b) {
    if (!a.is_exact() || !b.is_exact())
        throw std::logic_error("Coef: exact equality on inexact value (use a tolerance)");
    Coef d = a - b;
    if (!d.is_exact())
        throw std::logic_error("Coef: equality across surd/cyclo branches is not decidable here");
    return d.is_zero();
}

std::string Coef::str() const {
    if (is_rat()) return rat().str();
    if (is_surd()) return std::get<SurdVal>(v_).str();
    if (is_cyclo()) return std::get<Cyclo>(v_).str();
    const BigComplex& z = std::get<BigComplex>(v_);
    std::ostringstream os;
    os << z.re.str(30) << " + " << z.im.str(30) << "i";
    return os.str();
}

}  // namespace mfh
