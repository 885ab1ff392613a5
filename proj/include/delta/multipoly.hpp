#pragma once

#include "delta/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace delta {

// Variable slots. x-variables follow u: slot 5 is x1, slot 6 is x2, ...
enum Var : int { Q = 0, T = 1, Z = 2, W = 3, U = 4, X0 = 5 };

inline int xvar(int i) { return X0 + i - 1; }  // i is 1-based
std::string var_name(int slot);
int parse_var(const std::string& name);

// Exponent vector with trailing zeros trimmed, so that plain vector comparison
// is the lex order q > t > z > w > u > x1 > x2 > ...
class Mono {
public:
    Mono() = default;
    explicit Mono(std::vector<int32_t> e) : e_(std::move(e)) { trim(); }
    static Mono var(int slot, int32_t power = 1);

    int32_t operator[](int slot) const { return slot < static_cast<int>(e_.size()) ? e_[slot] : 0; }
    void set(int slot, int32_t v);
    int size() const { return static_cast<int>(e_.size()); }
    bool is_one() const { return e_.empty(); }
    const std::vector<int32_t>& raw() const { return e_; }

    Mono operator*(const Mono& o) const;
    bool divides(const Mono& o) const;
    Mono operator/(const Mono& o) const;  // requires divides
    long total_degree() const;

    auto operator<=>(const Mono&) const = default;
    bool operator==(const Mono&) const = default;

private:
    void trim() {
        while (!e_.empty() && e_.back() == 0) e_.pop_back();
    }
    std::vector<int32_t> e_;
};

class MultiPoly {
public:
    // leading (largest) monomial first
    using Terms = std::map<Mono, Rational, std::greater<Mono>>;

    MultiPoly() = default;
    MultiPoly(long c);
    MultiPoly(const Rational& c);
    MultiPoly(const Mono& m, const Rational& c);
    static MultiPoly var(int slot, int32_t power = 1) { return MultiPoly(Mono::var(slot, power), 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    size_t size() const { return terms_.size(); }

    const Mono& leading_mono() const;
    const Rational& leading_coeff() const;
    Rational coeff(const Mono& m) const;

    void add_term(const Mono& m, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(long c, MultiPoly a) { return a *= Rational(c); }
    friend MultiPoly operator*(MultiPoly a, long c) { return a *= Rational(c); }
    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    MultiPoly pow(unsigned e) const;
    int32_t degree(int slot) const;
    int32_t min_degree(int slot) const;
    int max_slot() const;  // largest slot with a nonzero exponent, -1 for constants
    bool uses_only(std::initializer_list<int> slots) const;

    // polynomial multiplying var^k, with var removed
    MultiPoly coeff_extract(int slot, int32_t k) const;
    // substitute polynomials for some variables
    MultiPoly substitute(const std::map<int, MultiPoly>& bindings) const;
    // multiply every monomial by m (m may carry negative exponents if the result stays nonnegative)
    MultiPoly shift(const std::vector<int32_t>& delta) const;

    // exact division; nullopt when the divisor does not divide
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;
    bool divisible_by(const MultiPoly& d) const { return divide_exact(d).has_value(); }

    std::string to_string() const;
    static MultiPoly parse(const std::string& s);

private:
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// univariate helpers over Q in a single slot
struct DivMod {
    MultiPoly quotient, remainder;
};
DivMod univariate_divmod(const MultiPoly& a, const MultiPoly& b, int slot);

}  // namespace delta
