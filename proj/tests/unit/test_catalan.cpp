#include "delta/catalan.hpp"

#include <catch_amalgamated.hpp>

using namespace delta;

namespace {
MultiPoly eval(const MultiPoly& p, long q, long t, long z, long w) {
    return p.substitute({{Q, MultiPoly(q)}, {T, MultiPoly(t)}, {Z, MultiPoly(z)}, {W, MultiPoly(w)}});
}
Rational binom(int n, int k) {
    Rational r(1);
    for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
    return r;
}
MultiPoly swap_zw(const MultiPoly& p) {
    return p.substitute({{Z, MultiPoly::var(W)}, {W, MultiPoly::var(Z)}});
}
}  // namespace

TEST_CASE("small Catalan polynomials") {
    CHECK(cat4(1) == MultiPoly(1));
    MultiPoly two = MultiPoly::var(Q) + MultiPoly::var(T) + MultiPoly::var(Z) + MultiPoly::var(W);
    CHECK(cat4(2) == two);
    CHECK(catmod4(2) == two);
}

TEST_CASE("unlabeled statistics on the starred path") {
    AreaVec a{0, 1, 1, 0, 0};
    CHECK(catalan_dinv(a) == 8);
    CHECK(catalan_dinv_vector(a) == std::vector<int>{2, 3, 2, 1, 0});
    CHECK(catalan_valleys(a) == std::vector<int>{3, 4, 5});
    CHECK(reading_order(a) == std::vector<int>{3, 2, 5, 4, 1});
    CHECK(touch_count(a) == 3);
    CHECK(touch_composition(a, {2}) == Composition{2, 1, 1});
    CHECK(touch_composition(a, {}) == Composition{3, 1, 1});
}

TEST_CASE("reading-order increases sit at non-first peaks") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& a : dyck_paths(n)) {
            auto order = reading_order(a);
            auto peaks = peak_rows(a);
            std::vector<int> expect;
            bool first = true;
            for (size_t p = 0; p < order.size(); ++p) {
                if (std::find(peaks.begin(), peaks.end(), order[p]) == peaks.end()) continue;
                if (!first) expect.push_back(static_cast<int>(p) + 1);
                first = false;
            }
            REQUIRE(reading_b_rises(a) == expect);
            CHECK(expect.size() == catalan_valleys(a).size());
        }
}

TEST_CASE("Catalan polynomials: evaluations, symmetries, agreement") {
    for (int n = 1; n <= 7; ++n) {
        INFO("n=" << n);
        auto c = cat4(n), m = catmod4(n);
        CHECK(c == m);
        CHECK(eval(c, 1, 1, 0, 0) == MultiPoly(binom(2 * n, n) / Rational(n + 1)));
        Rational pow2(1);
        for (int i = 1; i < n; ++i) pow2 = pow2 * Rational(2);
        CHECK(eval(c, 1, 1, 1, 1) == MultiPoly(pow2 * binom(2 * n, n) / Rational(n + 1)));
        for (const auto& p : {c, m}) {
            auto one = p.substitute({{Q, MultiPoly(1)}, {T, MultiPoly(1)}});
            CHECK(one == swap_zw(one));
            auto lhs = p.substitute({{T, MultiPoly(1)}, {Z, MultiPoly(0)}});
            auto rhs = p.substitute({{Q, MultiPoly(1)}, {T, MultiPoly::var(Q)}, {Z, MultiPoly::var(W)}, {W, MultiPoly(0)}});
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("touch and composition refinements reassemble") {
    for (int n = 1; n <= 6; ++n) {
        MultiPoly c, m;
        for (int r = 1; r <= n; ++r) c += cat4(n, r), m += catmod4(n, r);
        CHECK(c == cat4(n));
        CHECK(m == catmod4(n));
        MultiPoly comp;
        for (int s = 0; s < n; ++s)
            for (const auto& alpha : compositions(n - s)) comp += catmod4_comp(n, alpha) * MultiPoly::var(W, s);
        CHECK(comp == catmod4(n));
    }
}

TEST_CASE("operator side of the Catalan coefficients, small sizes") {
    for (int n = 1; n <= 4; ++n) {
        auto c = cat4(n);
        for (int k = 0; k < n; ++k)
            for (int l = 0; k + l < n; ++l) {
                INFO("n=" << n << " k=" << k << " l=" << l);
                RatFunc lhs(c.coeff_extract(Z, k).coeff_extract(W, l));
                CHECK(lhs == cat_coeff_nabla(n, k, l));
                CHECK(lhs == cat_coeff_delta_prime(n, k, l));
            }
    }
}

TEST_CASE("hook pairing against the e_m pairing") {
    for (int m = 1; m <= 4; ++m)
        for (int k = 1; k < m; ++k)
            for (int j = 0; j <= 2; ++j)
                for (const auto& f : {SymFunc::e(m), SymFunc::h(m), SymFunc::s(hook(m, 1))}) {
                    INFO("m=" << m << " k=" << k << " j=" << j);
                    CHECK(hook_side(j, f, k) == e_side(j, f, k));
                }
}
