#include "delta/formulas.hpp"
#include "delta/macdonald.hpp"
#include "delta/pathgf.hpp"

#include <catch_amalgamated.hpp>

using namespace delta;

namespace {
MultiPoly at_11(const MultiPoly& p) { return p.substitute({{Q, MultiPoly(1)}, {T, MultiPoly(1)}}); }
}  // namespace

TEST_CASE("k = 1 closed form, small values") {
    CHECK(k1_formula(1) == SymFunc::s({1}));
    SymFunc two = SymFunc::s({2}) + SymFunc::s({1, 1}) * RatFunc(MultiPoly(1) + MultiPoly::var(Q) + MultiPoly::var(T));
    CHECK(k1_formula(2) == two);
    // [0] = 1 adds an extra s_{1^n}
    CHECK(!(k1_formula(2, QtZero::One) == two));
}

TEST_CASE("k = 1 closed form against both sides") {
    for (int n = 1; n <= 4; ++n) CHECK(k1_formula(n) == delta_op(SymFunc::e(1), SymFunc::e(n)));
    for (int n = 2; n <= 5; ++n) {
        MultiPoly rise = rise_gf(n, 0) + rise_gf(n, 1);
        CHECK(from_x_expansion(rise, n, n) == k1_formula(n));
    }
}

TEST_CASE("q = t = 1 closed form") {
    auto f = q1_formula(2, 1);
    auto m = convert(f, Basis::M);
    CHECK(m.coeff({2}) == RatFunc(1));
    CHECK(m.coeff({1, 1}) == RatFunc(4));  // 2 e_2 + e_1^2
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            INFO("n=" << n << " k=" << k);
            MultiPoly lhs = rise_gf(n, k - 1);
            if (k < n) lhs += rise_gf(n, k);
            CHECK(at_11(lhs) == expand_vars(q1_formula(n, k), n));
        }
}

TEST_CASE("Dyck paths by vertical run type") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& [lam, count] : run_type_census(n)) CHECK(run_type_count(lam) == Rational(count));
    long total = 0;
    for (const auto& lam : partitions(6)) total += run_type_count(lam) == Rational(0) ? 0 : 1;
    CHECK(total == static_cast<long>(partitions(6).size()));
}
