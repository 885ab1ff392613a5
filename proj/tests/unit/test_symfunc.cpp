#include "delta/symfunc.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace delta;

namespace {
const MultiPoly q = MultiPoly::var(Q), t = MultiPoly::var(T);
MultiPoly x(int i) { return MultiPoly::var(xvar(i)); }

SymFunc random_sym(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> c(-3, 3);
    SymFunc f(Basis::M, n);
    for (const auto& lam : partitions(n)) f.add(lam, RatFunc(c(rng) * q + MultiPoly(c(rng))));
    return f;
}
}  // namespace

TEST_CASE("partitions") {
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(4).front() == Partition{4});
    CHECK(partitions(4)[1] == Partition{3, 1});
    CHECK(partitions(8).size() == 22);
    CHECK(conjugate({4, 3}) == Partition{2, 2, 2, 1});
    for (const auto& p : partitions(7)) CHECK(conjugate(conjugate(p)) == p);
    CHECK(compositions(4).size() == 8);
    CHECK(z_lambda({1, 1}) == 2);
    CHECK(z_lambda({2, 1, 1}) == 4);
    CHECK(weak_compositions(2, 3).size() == 6);
}

TEST_CASE("variable expansions") {
    CHECK(expand_vars(SymFunc::e(2), 2) == x(1) * x(2));
    CHECK(expand_vars(SymFunc::h(2), 2) == x(1) * x(1) + x(1) * x(2) + x(2) * x(2));
    MultiPoly s21 = expand_vars(SymFunc::s({2, 1}), 3);
    CHECK(s21.coeff(Mono({0, 0, 0, 0, 0, 1, 1, 1})) == 2);
    CHECK(s21.coeff(Mono({0, 0, 0, 0, 0, 2, 1})) == 1);
    CHECK(qsym_coeff(expand_vars(SymFunc::e(3), 3), {1, 1, 1}) == MultiPoly(1));
    CHECK(qsym_coeff(expand_vars(SymFunc::h(2), 2), {2}) == MultiPoly(1));
}

TEST_CASE("basis conversions") {
    CHECK(convert(SymFunc::e(2), Basis::S) == SymFunc::s({1, 1}));
    CHECK(convert(SymFunc::e(2), Basis::S).coeffs().size() == 1);
    SymFunc p2m = convert(SymFunc::p(2), Basis::M);
    CHECK(p2m.coeffs().size() == 1);
    CHECK(p2m.coeff({2}) == RatFunc(1));
    CHECK(convert(SymFunc::h(2), Basis::S).coeff({2}) == RatFunc(1));
    CHECK(convert(SymFunc::h(2), Basis::S).coeffs().size() == 1);
}

TEST_CASE("conversion round trips through every basis pair") {
    std::vector<Basis> bases{Basis::M, Basis::E, Basis::H, Basis::P, Basis::S};
    for (int n = 1; n <= 7; ++n)
        for (const auto& lam : partitions(n))
            for (Basis a : bases)
                for (Basis b : bases) {
                    SymFunc f = SymFunc::basis_element(a, lam);
                    SymFunc back = convert(convert(f, b), a);
                    REQUIRE(back.coeffs().size() == 1);
                    CHECK(back.coeff(lam) == RatFunc(1));
                }
}

TEST_CASE("Hall inner product") {
    for (const auto& a : partitions(4))
        for (const auto& b : partitions(4))
            CHECK(hall_inner(SymFunc::s(a), SymFunc::s(b)) == RatFunc(a == b ? 1 : 0));
    CHECK(hall_inner(SymFunc::basis_element(Basis::P, {1, 1}), SymFunc::basis_element(Basis::P, {1, 1})) == RatFunc(2));
    CHECK(hall_inner(SymFunc::e(5), SymFunc::s({1, 1, 1, 1, 1})) == RatFunc(1));
    std::mt19937 rng(3);
    for (int n = 1; n <= 6; ++n) {
        SymFunc f = random_sym(rng, n), g = random_sym(rng, n);
        CHECK(hall_inner(omega(f), omega(g)) == hall_inner(f, g));
    }
}

TEST_CASE("omega") {
    CHECK(omega(SymFunc::e(3)) == SymFunc::h(3));
    CHECK(omega(SymFunc::s({2, 1})) == SymFunc::s({2, 1}));
    std::mt19937 rng(5);
    SymFunc f = random_sym(rng, 5);
    CHECK(omega(omega(f)) == f);
}

TEST_CASE("plethysm") {
    Alphabet b = Alphabet::from_poly(q + t + MultiPoly(1));
    CHECK(plethysm_scalar(SymFunc::e(1), b) == RatFunc(q + t + MultiPoly(1)));
    CHECK(plethysm_scalar(SymFunc::e(2), Alphabet::from_poly(MultiPoly(1) + q)) == RatFunc(q));
    MultiPoly u = MultiPoly::var(U);
    for (int n = 2; n <= 7; ++n)
        for (int m = 0; 2 * m <= n; ++m) {
            MultiPoly expect;
            for (int p = m; p <= n - m; ++p) expect += MultiPoly::var(U, p);
            CHECK(plethysm_poly(SymFunc::s(sorted_partition({n - m, m})), Alphabet::from_poly(MultiPoly(1) + u)) == expect);
        }
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : partitions(n)) {
            SymFunc f = SymFunc::s(lam);
            CHECK(plethysm_poly(f, Alphabet::variables(n)) == expand_vars(f, n));
        }
}

TEST_CASE("symmetry witness") {
    std::mt19937 rng(9);
    for (int n = 1; n <= 5; ++n) CHECK(symmetry_violation(expand_vars(random_sym(rng, n), n), n) == 0);
    MultiPoly bad = x(1) * x(1) * x(2);
    CHECK(symmetry_violation(bad, 2) == 1);
    CHECK_THROWS_WITH(schur_expand(bad, 3, 3), Catch::Matchers::ContainsSubstring("x1 <-> x2"));
}

TEST_CASE("Cauchy formula on three plus three variables") {
    Alphabet X = Alphabet::variables(3);
    Alphabet Y;
    for (int i = 4; i <= 6; ++i) Y.letters.emplace_back(1, Mono::var(xvar(i)));
    for (int n = 1; n <= 5; ++n) {
        MultiPoly lhs = plethysm_poly(SymFunc::e(n), X * Y);
        for (auto [a, b] : {std::pair{Basis::M, Basis::H}, std::pair{Basis::S, Basis::S}}) {
            MultiPoly rhs;
            for (const auto& lam : partitions(n))
                rhs += plethysm_poly(omega(SymFunc::basis_element(a, lam)), X) * plethysm_poly(SymFunc::basis_element(b, lam), Y);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("serialization") {
    SymFunc f = SymFunc::s({2, 1}) * RatFunc(q, t - q) + SymFunc::s({3});
    SymFunc g = SymFunc::parse(f.to_string());
    CHECK(g.to_string() == f.to_string());
    CHECK(g == f);
    CHECK(SymFunc::s({1}).to_string() == "basis=s; deg=1; (1)->1;");
}
