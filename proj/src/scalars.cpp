#include <atomic>
#include <cstdlib>
#include <ostream>

#include "mfheight/bigfloat.hpp"
#include "mfheight/rat.hpp"

namespace mfh {

namespace {

long initial_precision() {
    // MFHEIGHT_PRECISION_BITS overrides the 192-bit default; values below 128
    // are rejected at configuration time, not silently clamped.
    if (const char* env = std::getenv("MFHEIGHT_PRECISION_BITS")) {
        long bits = std::strtol(env, nullptr, 10);
        if (bits >= 128) return bits;
    }
    return 192;
}

std::atomic<long> g_precision{initial_precision()};

}  // namespace

long default_precision() { return g_precision.load(); }

void set_default_precision(long bits) {
    if (bits < 128)
        throw std::invalid_argument("precision must be at least 128 bits");
    g_precision.store(bits);
}

std::ostream& operator<<(std::ostream& os, const Int& x) { return os << x.str(); }
std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }

std::string BigFloat::str(int digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRg", digits);
    char* out = nullptr;
    mpfr_asprintf(&out, fmt, f_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

}  // namespace mfh
