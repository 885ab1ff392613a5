#pragma once

#include "delta/multipoly.hpp"

namespace delta {

// value of [0]_{q,t}; the two conventions disagree, so callers must choose
enum class QtZero { Zero, One };

MultiPoly qint(long n);
MultiPoly qtint(long n, QtZero zero_convention);
MultiPoly qfact(long n);
MultiPoly qbinom(long n, long k);  // throws unless n >= k >= 0

MultiPoly cyclotomic(long p);  // Phi_p(q)

struct LucasResult {
    bool holds = false;
    MultiPoly residue;  // qbinom(n,k) mod Phi_p
};
LucasResult q_lucas_check(long n, long k, long p);

struct Divisibility {
    bool divides = false;
    MultiPoly quotient;
};
// does a divide b in Q[q]
Divisibility poly_divides(const MultiPoly& a, const MultiPoly& b);

}  // namespace delta
