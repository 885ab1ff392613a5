#include "delta/macdonald.hpp"
#include "delta/partial.hpp"
#include "delta/pathgf.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace delta;

TEST_CASE("partially labeled path with two empty valleys") {
    PartialPath p{{0, 1, 1, 0, 0, 1, 2, 1}, {2, 4, 0, 3, 0, 1, 5, 6}};
    REQUIRE(is_partial_path(p));
    CHECK(area(p.a) == 6);
    CHECK(touch(p) == 2);
    CHECK(empty_rows(p) == 2);
    // the label-0 reading adds (3,8) to the six pairs in the drawing
    std::vector<std::pair<int, int>> pairs{{1, 4}, {2, 4}, {2, 5}, {2, 8}, {3, 6}, {3, 8}, {6, 8}};
    CHECK(partial_dinv_pairs(p) == pairs);
    CHECK(partial_dinv(p, PartialDinv::Zeros) == 7);
    CHECK(partial_dinv(p, PartialDinv::Prime) == 6);

    PartialPath first_empty{{0, 0}, {0, 1}};
    CHECK_FALSE(is_partial_path(first_empty));
    PartialPath empty_rise{{0, 1}, {1, 0}};
    CHECK_FALSE(is_partial_path(empty_rise));
}

TEST_CASE("enumeration yields valid distinct objects") {
    for (int n = 1; n <= 4; ++n)
        for (int l = 0; l + n <= 5; ++l) {
            std::vector<PartialPath> seen;
            for_each_partial_path(n, l, n, [&](const PartialPath& p) {
                REQUIRE(is_partial_path(p));
                REQUIRE(empty_rows(p) == l);
                seen.push_back(p);
            });
            std::set<std::pair<AreaVec, std::vector<int>>> keys;
            for (const auto& p : seen) keys.insert({p.a, p.labels});
            CHECK(keys.size() == seen.size());
        }
}

TEST_CASE("no empty rows gives the rise side") {
    for (int n = 1; n <= 4; ++n)
        for (auto v : {PartialDinv::Zeros, PartialDinv::Prime})
            CHECK(partial_z_poly(n, 0, v) == rise_z_poly(n));
}

TEST_CASE("partial generating function against the operator, small sizes") {
    for (int n = 1; n <= 3; ++n)
        for (int l = 0; n + l <= 4; ++l)
            for (int k = 0; k < n; ++k) {
                SymFunc rhs = delta_prime(SymFunc::e(n - k - 1), SymFunc::e(n));
                if (l) rhs = delta_op(SymFunc::h(l), rhs);
                MultiPoly want = expand_vars(rhs, n);
                for (auto v : {PartialDinv::Zeros, PartialDinv::Prime}) {
                    INFO("n=" << n << " l=" << l << " k=" << k << " variant " << int(v));
                    CHECK(partial_gf(n, l, k, v) == want);
                }
            }
}

TEST_CASE("touch refinement reassembles") {
    for (int n = 1; n <= 3; ++n)
        for (int l = 0; l <= 2; ++l)
            for (auto v : {PartialDinv::Zeros, PartialDinv::Prime}) {
                MultiPoly sum;
                for (int r = 0; r <= n; ++r) sum += partial_z_poly(n, l, v, 0, r);
                CHECK(sum == partial_z_poly(n, l, v));
            }
}

TEST_CASE("dinv with -1 on empty rows stays nonnegative at small sizes") {
    for (int n = 1; n <= 4; ++n)
        for (int l = 0; n + l <= 6; ++l) CHECK(min_partial_dinv(n, l, PartialDinv::Prime) >= 0);
}
