#pragma once

#include "delta/partition.hpp"
#include "delta/ratfunc.hpp"

#include <map>
#include <string>
#include <vector>

namespace delta {

enum class Basis { M, E, H, P, S, Htilde };
std::string basis_name(Basis b);
Basis parse_basis(const std::string& s);

// Homogeneous symmetric function of degree deg() over Q(q,t).
class SymFunc {
public:
    using Coeffs = std::map<Partition, RatFunc>;

    SymFunc(Basis b, int deg) : basis_(b), deg_(deg) {}
    static SymFunc basis_element(Basis b, const Partition& p);
    static SymFunc e(int n) { return basis_element(Basis::E, n ? Partition{n} : Partition{}); }
    static SymFunc h(int n) { return basis_element(Basis::H, n ? Partition{n} : Partition{}); }
    static SymFunc p(int n) { return basis_element(Basis::P, n ? Partition{n} : Partition{}); }
    static SymFunc s(const Partition& p) { return basis_element(Basis::S, p); }

    Basis basis() const { return basis_; }
    int deg() const { return deg_; }
    const Coeffs& coeffs() const { return c_; }
    RatFunc coeff(const Partition& p) const;
    bool is_zero() const { return c_.empty(); }
    void add(const Partition& p, const RatFunc& v);

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc& operator*=(const RatFunc& c);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const RatFunc& c) { return a *= c; }
    friend SymFunc operator*(const RatFunc& c, SymFunc a) { return a *= c; }

    // same abstract function (compares in the monomial basis)
    bool equals(const SymFunc& o) const;
    bool operator==(const SymFunc& o) const { return equals(o); }

    std::string to_string() const;  // basis=<tag>; deg=<n>; <partition>-><coef>;...
    static SymFunc parse(const std::string& s);

private:
    Basis basis_;
    int deg_;
    Coeffs c_;
};

std::ostream& operator<<(std::ostream& os, const SymFunc& f);

// transition matrix: row lambda gives b_lambda in the monomial basis, rows/cols indexed by partitions(n)
using RatMatrix = std::vector<std::vector<Rational>>;
const RatMatrix& to_monomial_matrix(Basis b, int n);
const RatMatrix& from_monomial_matrix(Basis b, int n);
int partition_index(const Partition& p);

SymFunc convert(const SymFunc& f, Basis target);
SymFunc multiply(const SymFunc& f, const SymFunc& g);
SymFunc omega(const SymFunc& f);
RatFunc hall_inner(const SymFunc& f, const SymFunc& g);

// truncation to x1..xN; coefficients must be polynomials
MultiPoly expand_vars(const SymFunc& f, int N);
// read back a symmetric x-expansion of degree n (N >= n); throws naming the first violated swap
SymFunc from_x_expansion(const MultiPoly& p, int n, int N);
// first adjacent swap x_i <-> x_{i+1} that changes p, or 0
int symmetry_violation(const MultiPoly& p, int N);
// coefficient of x^alpha (other variables kept)
MultiPoly qsym_coeff(const MultiPoly& p, const Composition& alpha);
MultiPoly x_monomial(const std::vector<int>& exponents);

struct SchurExpansion {
    std::map<Partition, RatFunc> coeffs;
    bool positive = true;  // every coefficient a polynomial with nonnegative coefficients
};
SchurExpansion schur_expand(const SymFunc& f);
SchurExpansion schur_expand(const MultiPoly& x_expansion, int n, int N);
bool has_nonnegative_coefficients(const MultiPoly& p);

// A signed sum of monic monomials, possibly involving x-variables.
struct Alphabet {
    std::vector<std::pair<int, Mono>> letters;  // (sign, monomial)
    static Alphabet from_poly(const MultiPoly& p);  // integer coefficients, repeated letters
    static Alphabet variables(int N);              // x1 + ... + xN
    Alphabet operator-(const Alphabet& o) const;
    Alphabet operator+(const Alphabet& o) const;
    Alphabet operator*(const Alphabet& o) const;
    MultiPoly power_sum(int k) const;
};

// f[A]; result lives in q,t and any x-variables of A (coefficients of f must be polynomial when A has x's)
RatFunc plethysm_scalar(const SymFunc& f, const Alphabet& a);
MultiPoly plethysm_poly(const SymFunc& f, const Alphabet& a);
// f[X * A] for a scalar alphabet A, as a symmetric function
SymFunc plethysm_times(const SymFunc& f, const Alphabet& a);

}  // namespace delta
