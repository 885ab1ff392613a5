#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace delta {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw std::invalid_argument("bad rational: '" + s + "'");
    r.canonicalize();
    return r;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

}  // namespace delta
