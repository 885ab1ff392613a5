#pragma once

#include "delta/multipoly.hpp"

#include <map>
#include <string>

namespace delta {

// gcd in Q[q,t], normalized so the lex-leading coefficient is 1
MultiPoly gcd_qt(const MultiPoly& a, const MultiPoly& b);
// gcd in Q[slot], monic
MultiPoly gcd_univariate(const MultiPoly& a, const MultiPoly& b, int slot);

// Element of Q(q,t).
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(const MultiPoly& p);
    RatFunc(const MultiPoly& n, const MultiPoly& d);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    // numerator when the value is a polynomial; throws otherwise
    MultiPoly as_poly() const;

    RatFunc operator-() const { return RatFunc(-num_, den_, raw_tag{}); }
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    // cross-multiplication
    bool operator==(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }
    // identical canonical representation
    bool same_form(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string to_string() const;
    static RatFunc parse(const std::string& s);

private:
    struct raw_tag {};
    RatFunc(MultiPoly n, MultiPoly d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}
    void canonicalize();
    void normalize_sign();
    MultiPoly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& r);

// Substitute rational functions in q,t for some of q,t,z,w,u. Unbound variables
// other than q,t must not occur in the result.
using Bindings = std::map<int, RatFunc>;
RatFunc specialize(const MultiPoly& p, const Bindings& b);
RatFunc specialize(const RatFunc& r, const Bindings& b);
// polynomial substitution keeping every variable (e.g. z -> 0)
MultiPoly specialize_poly(const MultiPoly& p, const std::map<int, MultiPoly>& b);

}  // namespace delta
