#include "delta/osp.hpp"
#include "delta/pathgf.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace delta;

TEST_CASE("ordered multiset partition counts") {
    CHECK(enumerate_osp({1, 1, 1}, 2).size() == 6);
    CHECK(enumerate_osp({1}, 1).size() == 1);
    CHECK(enumerate_osp({2}, 1).empty());
    CHECK(enumerate_osp({1, 1, 1}, 3).size() == 6);
    CHECK(enumerate_osp({2, 1}, 2).size() == 2);  // 1|12 and 12|1
}

TEST_CASE("text form") {
    auto p = parse_osp("13|23|14|234");
    CHECK(p.blocks == std::vector<std::vector<int>>{{1, 3}, {2, 3}, {1, 4}, {2, 3, 4}});
    CHECK(to_string(p) == "13|23|14|234");
    CHECK(osp_content(p) == Composition{2, 2, 3, 2});
    CHECK(to_string(OSP{{{1, 12}, {3}}}) == "1,12|3");
    CHECK(parse_osp("1,12|3") == OSP{{{1, 12}, {3}}});
    CHECK_THROWS_AS(parse_osp("11|2"), std::invalid_argument);
}

TEST_CASE("statistics on small examples") {
    CHECK(osp_inv(parse_osp("15|23|4")) == 2);
    auto p = parse_osp("13|23|14|234");
    CHECK(minimaj_word(p) == std::vector<int>{3, 1, 2, 3, 4, 1, 2, 3, 4});
    CHECK(minimaj(p) == 6);
    auto one = parse_osp("1357");
    CHECK(osp_inv(one) == 0);
    CHECK(osp_dinv(one) == 0);
    CHECK(osp_maj(one) == 0);
    CHECK(minimaj(one) == 0);
}

TEST_CASE("minimaj is the least major index over within-block orders") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& alpha : compositions(n))
            for (int k = 1; k <= n; ++k)
                for_each_osp(alpha, k, [&](const OSP& p) {
                    INFO(to_string(p));
                    CHECK(minimaj(p) == min_rearranged_maj(p));
                });
}

TEST_CASE("four statistics are equidistributed") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& alpha : compositions(n))
            for (int k = 1; k <= n; ++k) {
                auto inv = osp_gf(alpha, k, OspStat::Inv);
                CHECK(osp_gf(alpha, k, OspStat::Dinv) == inv);
                CHECK(osp_gf(alpha, k, OspStat::Maj) == inv);
                CHECK(osp_gf(alpha, k, OspStat::Minimaj) == inv);
            }
}

TEST_CASE("gamma on a four-block example") {
    auto p = parse_osp("13|23|14|234");
    auto d = gamma(p);
    CHECK(to_string(d) == "(0,0){2,3} (0,1){4} (1,1){1} (1,2){2} (1,3){3} (2,3){1,3} (3,3){4}");
    CHECK(dense_area(d) == 6);
    CHECK(dense_wdinv(d) == 0);
    CHECK(gamma_inverse(d) == p);

    auto single = gamma(parse_osp("245"));
    CHECK(to_string(single) == "(0,0){2,4,5}");
}

TEST_CASE("gamma is a bijection onto wdinv-zero dense paths") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& alpha : compositions(n))
            for (int k = 0; k < n; ++k) {
                INFO("alpha size " << n << " k " << k);
                std::set<DensePath> image;
                for_each_osp(alpha, k + 1, [&](const OSP& p) {
                    auto d = gamma(p);
                    INFO(to_string(p) << " -> " << to_string(d));
                    REQUIRE(is_dense_path(d));
                    CHECK(dense_wdinv(d) == 0);
                    CHECK(dense_area(d) == minimaj(p));
                    CHECK(dense_content(d) == x_content(minimaj_word(p)));
                    CHECK(gamma_inverse(d) == p);
                    image.insert(d);
                });
                size_t targets = 0;
                Mono want;
                for (size_t i = 0; i < alpha.size(); ++i) want.set(xvar(static_cast<int>(i) + 1), alpha[i]);
                for_each_dense_path(n, k, static_cast<int>(alpha.size()), true, [&](const DensePath& d) {
                    if (dense_content(d) != want || dense_wdinv(d) != 0) return;
                    ++targets;
                    CHECK(image.count(d) == 1);
                });
                CHECK(targets == image.size());
            }
}

TEST_CASE("gamma_inverse rejects paths with positive wdinv") {
    DensePath d{{0, 0}, {{0, 0, true, {1}}, {1, 1, true, {2}}}};
    REQUIRE(is_dense_path(d));
    REQUIRE(dense_wdinv(d) > 0);
    CHECK_THROWS_AS(gamma_inverse(d), std::invalid_argument);
}

TEST_CASE("statistics match the specialized path generating functions") {
    for (int n = 1; n <= 4; ++n) {
        GfOptions opt{.N = n, .contents = Contents::Compositions};
        for (int k = 0; k < n; ++k) {
            auto rise = rise_gf(n, k, opt), val = val_gf(n, k, opt);
            auto qz = [](const MultiPoly& p) { return p.substitute({{T, MultiPoly(0)}}); };
            auto zq = [](const MultiPoly& p) { return p.substitute({{Q, MultiPoly(0)}}).substitute({{T, MultiPoly::var(Q)}}); };
            for (const auto& alpha : compositions(n)) {
                INFO("n=" << n << " k=" << k);
                CHECK(x_coeff(qz(rise), alpha) == osp_gf(alpha, k + 1, OspStat::Dinv));
                CHECK(x_coeff(zq(rise), alpha) == osp_gf(alpha, k + 1, OspStat::Maj));
                CHECK(x_coeff(qz(val), alpha) == osp_gf(alpha, k + 1, OspStat::Inv));
                CHECK(x_coeff(zq(val), alpha) == osp_gf(alpha, k + 1, OspStat::Minimaj));
            }
        }
    }
}
