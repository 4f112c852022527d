#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "fnom/compositions.hpp"
#include "oracles.hpp"

TEST_CASE("fixed-width enumeration is lexicographic, duplicate-free, complete") {
    std::vector<std::vector<int>> got;
    for (const auto& c : fnom::CompositionRange(3, 2)) got.push_back(c);
    const std::vector<std::vector<int>> expected{{1, 2}, {2, 1}};
    CHECK(got == expected);

    for (int m = 0; m <= 12; ++m)
        for (int s = 0; s <= m + 1; ++s) {
            const fnom::CompositionRange range(m, s);
            CHECK(range.total() == m);
            CHECK(range.part_count() == s);
            std::vector<std::vector<int>> stream;
            for (const auto& c : range) {
                if (!stream.empty())
                    CHECK(std::lexicographical_compare(stream.back().begin(),
                                                       stream.back().end(), c.begin(), c.end()));
                stream.push_back(c);
            }
            CHECK(stream == oracle::brute_compositions(m, s));
            CHECK(fnom::composition_count(m, s) == stream.size());
        }
}

TEST_CASE("variable-width enumeration covers every composition exactly once") {
    std::vector<std::vector<int>> got;
    for (const auto& c : fnom::AllCompositions(3)) got.push_back(c);
    const std::vector<std::vector<int>> expected{{3}, {1, 2}, {2, 1}, {1, 1, 1}};
    CHECK(got == expected);

    for (int m = 1; m <= 12; ++m) {
        std::vector<std::vector<int>> stream;
        for (const auto& c : fnom::AllCompositions(m)) stream.push_back(c);
        CHECK(fnom::composition_count(m) == stream.size());
        auto sorted = stream;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        auto brute = oracle::brute_compositions(m);
        std::sort(brute.begin(), brute.end());
        CHECK(sorted == brute);
    }
}

TEST_CASE("counts match the closed forms") {
    const auto pascal = oracle::pascal_triangle(13);
    for (int m = 1; m <= 14; ++m) {
        const fnom::BigInt power = fnom::BigInt(1) << (m - 1);
        CHECK(fnom::composition_count(m) == power);
        for (int s = 1; s <= m; ++s)
            CHECK(fnom::composition_count(m, s) ==
                  pascal[static_cast<std::size_t>(m) - 1][static_cast<std::size_t>(s) - 1]);
    }
    CHECK(fnom::composition_count(10) == 512);
    CHECK(fnom::composition_count(0, 0) == 1);
    CHECK(fnom::composition_count(4, 0) == 0);
    CHECK(fnom::composition_count(3, 5) == 0);
    CHECK(fnom::composition_count(14, 7) == 1716);
}

TEST_CASE("degenerate shapes and argument validation") {
    std::vector<std::vector<int>> empty_one;
    for (const auto& c : fnom::CompositionRange(0, 0)) empty_one.push_back(c);
    CHECK(empty_one == std::vector<std::vector<int>>{{}});

    int seen = 0;
    for ([[maybe_unused]] const auto& c : fnom::CompositionRange(3, 0)) ++seen;
    for ([[maybe_unused]] const auto& c : fnom::CompositionRange(2, 3)) ++seen;
    CHECK(seen == 0);

    std::vector<std::vector<int>> single;
    for (const auto& c : fnom::CompositionRange(5, 5)) single.push_back(c);
    CHECK(single == std::vector<std::vector<int>>{{1, 1, 1, 1, 1}});
    for (const auto& c : fnom::AllCompositions(1)) single.push_back(c);
    CHECK(single.back() == std::vector<int>{1});

    CHECK_THROWS_AS(fnom::CompositionRange(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(fnom::CompositionRange(3, -1), std::invalid_argument);
    CHECK_THROWS_AS(fnom::AllCompositions(0), std::invalid_argument);
    CHECK_THROWS_AS(fnom::composition_count(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(fnom::composition_count(2, -1), std::invalid_argument);
    CHECK_THROWS_AS(fnom::composition_count(0), std::invalid_argument);
}
