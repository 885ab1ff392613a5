#include "delta/stacks.hpp"
#include "delta/symfunc.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace delta;

namespace {

const StackPath fig_stack{{1, 2, 6}, {0, 0, 0, 1, 1, 1}, {3, 4, 6, 1, 4, 5}};

}  // namespace

TEST_CASE("stack path statistics on a six-row example") {
    REQUIRE(is_stack_path(fig_stack));
    CHECK(stack_area_vector(fig_stack.shape()) == std::vector<int>{0, 1, 1, 0, 0, 1});
    CHECK(stack_area(fig_stack.shape()) == 3);
    CHECK(wdinv(fig_stack) == 1);
    CHECK(hdinv(fig_stack) == 0);
    CHECK(stack_heights(fig_stack.shape()) == std::vector<int>{0, 1, 2, 2, 3, 4});
    CHECK(reading_word(fig_stack) == std::vector<int>{5, 4, 1, 6, 4, 3});

    bool seen = false;
    for_each_stack_path(6, 2, 6, [&](const StackPath& p) { seen = seen || p == fig_stack; });
    CHECK(seen);

    StackPath one{{1}, {0}, {1}};
    CHECK(stack_area(one.shape()) == 0);
    CHECK(wdinv(one) == 0);
    CHECK(hdinv(one) == 0);
}

TEST_CASE("phi, psi and theta on a six-row example") {
    LabeledPath fall_input{{0, 1, 2, 2, 3, 4}, {3, 4, 6, 1, 4, 5}};
    CHECK(falls(fall_input.a) == std::vector<int>{2, 3, 4, 5});
    CHECK(phi(fall_input, {2, 3, 4}) == fig_stack);

    LabeledPath val_input{{0, 1, 1, 0, 0, 1}, {3, 4, 6, 1, 4, 5}};
    CHECK(north_x(val_input.a) == std::vector<int>{0, 0, 1, 3, 4, 4});
    CHECK(psi(val_input, {3, 4, 5}) == fig_stack);

    auto d = theta(fig_stack);
    CHECK(d.path == AreaVec{0, 1, 1});
    CHECK(to_string(d) == "(0,0){3} (0,1){4,6} (1,1){1,4} (1,2){5} (2,2){}");
    CHECK(dense_area(d) == 3);
    CHECK(dense_wdinv(d) == 1);
    CHECK(theta_inverse(d) == fig_stack);

    CHECK_THROWS_AS(phi(fall_input, {1}), std::invalid_argument);
    CHECK_THROWS_AS(psi(val_input, {2}), std::invalid_argument);
}

TEST_CASE("bijections round-trip and transport statistics") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<long> fall_count(n), val_count(n), stack_count(n);
        for_each_labeled_path(n, n, [&](const LabeledPath& p) {
            for (const auto& F : subsets_of(falls(p.a))) {
                auto s = phi(p, F);
                REQUIRE(is_stack_path(s));
                CHECK(stack_area(s.shape()) == area_minus(p, F));
                CHECK(hdinv(s) == dinv(p));
                CHECK(phi_inverse(s) == std::make_pair(p, F));
                ++fall_count[n - 1 - F.size()];
            }
            for (const auto& V : subsets_of(valleys(p))) {
                auto s = psi(p, V);
                REQUIRE(is_stack_path(s));
                CHECK(stack_area(s.shape()) == area(p.a));
                CHECK(wdinv(s) == dinv_minus(p, V));
                CHECK(psi_inverse(s) == std::make_pair(p, V));
                ++val_count[n - 1 - V.size()];
            }
        });
        for (int k = 0; k < n; ++k) {
            for_each_stack_path(n, k, n, [&](const StackPath& s) {
                ++stack_count[k];
                auto d = theta(s);
                REQUIRE(is_dense_path(d));
                CHECK(dense_area(d) == stack_area(s.shape()));
                CHECK(dense_wdinv(d) == wdinv(s));
                CHECK(x_content(s.labels) == dense_content(d));
                CHECK(theta_inverse(d) == s);
            });
            long dense = 0;
            for_each_dense_path(n, k, n, true, [&](const DensePath&) { ++dense; });
            CHECK(dense == stack_count[k]);
        }
        CHECK(fall_count == stack_count);
        CHECK(val_count == stack_count);
    }
}

TEST_CASE("stack and dense sums reproduce the path generating functions") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(stack_rise_z_poly(n) == rise_z_poly(n));
        CHECK(stack_val_z_poly(n) == val_z_poly(n));
        CHECK(dense_val_z_poly(n) == val_z_poly(n));
    }
}

TEST_CASE("dense paths without the east-below-north condition overcount") {
    long strict = 0, literal = 0;
    for_each_dense_path(4, 2, 4, true, [&](const DensePath&) { ++strict; });
    for_each_dense_path(4, 2, 4, false, [&](const DensePath&) { ++literal; });
    CHECK(literal > strict);
    CHECK(dense_val_z_poly(4, {}, false) != val_z_poly(4));
}

TEST_CASE("east-square minima must not start wdinv pairs") {
    StackPath s{{1, 2, 4}, {0, 0, 1, 2}, {1, 2, 1, 2}};
    auto d = theta(s);
    CHECK(to_string(d) == "(0,0){1} (0,1){2} (1,1){1} (2,2){2}");
    CHECK(wdinv(s) == 1);
    CHECK(dense_wdinv(d) == 1);
    CHECK(dense_wdinv(d, false) == 2);
}

TEST_CASE("LLT decomposition and Yamanouchi Schur coefficients") {
    for (int n = 1; n <= 4; ++n) {
        MultiPoly total;
        for (int k = 0; k < n; ++k)
            for (const auto& sh : stack_shapes(n, k))
                total += llt(sh, n) * MultiPoly(Mono::var(T, stack_area(sh)), 1) * MultiPoly(Mono::var(Z, n - k - 1), 1);
        CHECK(total == rise_z_poly(n));
    }
    for (int n = 2; n <= 5; ++n)
        for (const auto& sh : stack_shapes(n, 1)) {
            auto poly = llt(sh, n);
            CHECK(symmetry_violation(poly, n) == 0);
            auto schur = schur_expand(poly, n, n);
            auto yam = yamanouchi_schur(sh);
            std::map<Partition, MultiPoly> expanded;
            for (const auto& [lam, c] : schur.coeffs)
                if (!c.is_zero()) expanded[lam] = c.as_poly();
            CHECK(expanded == yam);
            for (const auto& [lam, c] : yam) CHECK(lam.front() <= 2);
        }
}

TEST_CASE("Yamanouchi words") {
    CHECK(is_yamanouchi({6, 5, 2, 4, 1, 3, 2, 1}));
    CHECK(is_yamanouchi({}));
    CHECK(is_yamanouchi({1}));
    CHECK_FALSE(is_yamanouchi({2}));
    CHECK_FALSE(is_yamanouchi({1, 2}));
    CHECK(is_yamanouchi({2, 1}));
}
