#include "delta/xy.hpp"

#include <catch_amalgamated.hpp>

using namespace delta;

namespace {

XYDiagram diagram(const std::string& top_first, int area) {
    XYDiagram d;
    d.area = area;
    size_t start = 0;
    while (start <= top_first.size()) {
        size_t end = top_first.find('/', start);
        if (end == std::string::npos) end = top_first.size();
        auto row = top_first.substr(start, end - start);
        d.rows.insert(d.rows.begin(), {row[0] == '.' ? ' ' : row[0], row[1] == '.' ? ' ' : row[1]});
        start = end + 1;
    }
    return d;
}

MultiPoly q_range(int lo, int hi) {
    MultiPoly s;
    for (int i = lo; i <= hi; ++i) s += MultiPoly::var(Q, i);
    return s;
}

}  // namespace

TEST_CASE("XY diagram of a two-column example") {
    StackPath p{{1, 4}, {0, 0, 0, 0, 0, 1, 1, 1}, {1, 2, 3, 4, 5, 1, 2, 6}};
    REQUIRE(is_stack_path(p));
    CHECK(reading_word(p) == std::vector<int>{6, 5, 2, 4, 1, 3, 2, 1});
    CHECK(is_yamanouchi(reading_word(p)));
    auto d = xy_diagram(p);
    CHECK(to_string(d) == "XX/XY/XY/X./X.");
    CHECK(d.area == 2);
    CHECK(stack_area(p.shape()) == 2);
    CHECK(xy_hdinv(d) == 3);
    CHECK(hdinv(p) == 3);
    CHECK(xy_inverse(d) == p);
    CHECK(classify(d) == XYClass{XYType::I, 2, 2, 1, 0, false});
}

TEST_CASE("the two diagram types") {
    auto one = diagram("X./X./XX/XY/XY/X.", 1);
    CHECK(classify(one) == XYClass{XYType::I, 1, 2, 1, 2, false});
    CHECK(xy_diagram(xy_inverse(one)) == one);

    auto two = diagram(".X/.X/.Y/XY/X./X.", 2);
    CHECK(classify(two) == XYClass{XYType::II, 2, 1, 1, 2, true});
    CHECK(xy_diagram(xy_inverse(two)) == two);

    auto column = diagram("X./X./X.", 0);
    CHECK(classify(column).d == 3);
    auto p = xy_inverse(column);
    CHECK(p.diag == std::vector<int>{1});
    CHECK(p.labels == std::vector<int>{1, 2, 3});

    CHECK_THROWS(classify(diagram(".Y/XY/X.", 0)));
    CHECK_THROWS(xy_inverse(diagram("Y./X.", 0)));
}

TEST_CASE("Yamanouchi search matches brute force") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<StackPath> fast, slow;
        for_each_two_column_yamanouchi(n, [&](const StackPath& p) { fast.push_back(p); });
        for (int k = 0; k <= std::min(1, n - 1); ++k)
            for_each_stack_path(n, k, n, [&](const StackPath& p) {
                if (is_yamanouchi(reading_word(p))) slow.push_back(p);
            });
        std::sort(fast.begin(), fast.end());
        std::sort(slow.begin(), slow.end());
        CHECK(fast == slow);
    }
}

TEST_CASE("every two-column diagram classifies, round-trips and counts correctly") {
    for (int n = 1; n <= 8; ++n) {
        for_each_two_column_yamanouchi(n, [&](const StackPath& p) {
            auto d = xy_diagram(p);
            CHECK_NOTHROW(classify(d));
            CHECK(xy_inverse(d) == p);
            CHECK(xy_hdinv(d) == hdinv(p));
        });
        auto table = two_column_schur_table(n);
        for (int m = 0; 2 * m <= n; ++m)
            for (int j = 0; j <= n - m - 1; ++j) {
                auto want = q_range(std::max(0, m - j - 1), n - m - j - 1);
                auto it = table.find({m, j});
                CHECK((it == table.end() ? MultiPoly() : it->second) == want);
            }
    }
}
