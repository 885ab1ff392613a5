#include "delta/qnumbers.hpp"

#include <stdexcept>

namespace delta {

MultiPoly qint(long n) {
    if (n < 0) throw std::invalid_argument("qint of a negative integer");
    MultiPoly r;
    for (long i = 0; i < n; ++i) r.add_term(Mono::var(Q, static_cast<int32_t>(i)), 1);
    return r;
}

MultiPoly qtint(long n, QtZero zero_convention) {
    if (n < 0) throw std::invalid_argument("qtint of a negative integer");
    if (n == 0) return zero_convention == QtZero::Zero ? MultiPoly() : MultiPoly(1);
    MultiPoly r;
    for (long i = 0; i < n; ++i) {
        Mono m;
        m.set(Q, static_cast<int32_t>(i));
        m.set(T, static_cast<int32_t>(n - i - 1));
        r.add_term(m, 1);
    }
    return r;
}

MultiPoly qfact(long n) {
    if (n < 0) throw std::invalid_argument("qfact of a negative integer");
    MultiPoly r(1);
    for (long i = 2; i <= n; ++i) r *= qint(i);
    return r;
}

MultiPoly qbinom(long n, long k) {
    if (k < 0 || n < 0 || k > n) throw std::invalid_argument("qbinom needs n >= k >= 0");
    // product of [n-i]/[i+1] keeps intermediate results polynomial
    MultiPoly r(1);
    for (long i = 0; i < k; ++i) {
        auto q = (r * qint(n - i)).divide_exact(qint(i + 1));
        if (!q) throw std::logic_error("internal: q-binomial not exact");
        r = std::move(*q);
    }
    return r;
}

MultiPoly cyclotomic(long p) {
    if (p < 1) throw std::invalid_argument("cyclotomic index must be positive");
    // q^p - 1 divided by Phi_d for every proper divisor d
    MultiPoly r = MultiPoly::var(Q, static_cast<int32_t>(p)) - MultiPoly(1);
    for (long d = 1; d < p; ++d) {
        if (p % d) continue;
        r = univariate_divmod(r, cyclotomic(d), Q).quotient;
    }
    return r;
}

LucasResult q_lucas_check(long n, long k, long p) {
    if (p < 1) throw std::invalid_argument("q-Lucas modulus must be positive");
    MultiPoly phi = cyclotomic(p);
    long n1 = n / p, n0 = n % p, k1 = k / p, k0 = k % p;
    MultiPoly lhs = univariate_divmod(qbinom(n, k), phi, Q).remainder;
    MultiPoly rhs;
    if (k0 <= n0) rhs = univariate_divmod(MultiPoly(Rational(binomial(n1, k1))) * qbinom(n0, k0), phi, Q).remainder;
    return {lhs == rhs, lhs};
}

Divisibility poly_divides(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) throw std::invalid_argument("poly_divides by zero");
    DivMod dm = univariate_divmod(b, a, Q);
    if (!dm.remainder.is_zero()) return {false, {}};
    return {true, dm.quotient};
}

}  // namespace delta
