#include <algorithm>

#include "doctest.h"
#include "gmcc/field.hpp"
#include "gmcc/lattice.hpp"

using namespace gmcc;

namespace {

std::uint64_t brute_hyperbolic(std::uint64_t b, std::uint32_t m, std::uint64_t a) {
    std::uint64_t count = 0;
    std::vector<std::uint64_t> l(m, 1);
    while (true) {
        std::uint64_t prod = 1;
        for (const auto x : l) prod *= x;
        if (prod <= a) ++count;
        std::size_t i = 0;
        while (i < m && l[i] == b) l[i++] = 1;
        if (i == m) return count;
        ++l[i];
    }
}

}  // namespace

TEST_CASE("lex order") {
    CHECK(lex_compare({0, 1}, {1, 0}) == std::strong_ordering::less);
    CHECK(lex_compare({2, 3}, {2, 3}) == std::strong_ordering::equal);
    CHECK_THROWS_AS(lex_compare({0}, {0, 0}), UsageError);

    const ExponentBox box({4, 2});
    std::vector<Exponent> seen;
    box.for_each([&](const Exponent& e) { seen.push_back(e); });
    CHECK(seen == std::vector<Exponent>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {3, 0}, {3, 1}});
    for (std::uint64_t i = 0; i < box.n(); ++i) CHECK(box.index_of(box.at(i)) == i);
}

TEST_CASE("dis and footprint bound") {
    const ExponentBox box({8, 6});
    CHECK(dis(box, {1, 2}) == 28);
    CHECK(dis(box, {0, 0}) == 48);
    CHECK(dis(box, {7, 5}) == 1);

    std::vector<Exponent> members;
    for (std::uint32_t a = 0; a < 3; ++a)
        for (std::uint32_t b = 0; b < 2; ++b) members.push_back({a, b});
    members.push_back({0, 2});
    members.push_back({1, 2});
    CHECK(footprint_bound(ExponentSet(box, members)) == 28);
    CHECK(footprint_bound(ExponentSet(box, {{0, 0}})) == 48);
    CHECK_THROWS_AS(footprint_bound(ExponentSet(box, {})), UsageError);

    // Dis strictly decreases along each coordinate.
    box.for_each([&](const Exponent& e) {
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] + 1 >= box.size(j)) continue;
            Exponent f = e;
            ++f[j];
            CHECK(dis(box, f) < dis(box, e));
        }
    });
}

TEST_CASE("E0") {
    CHECK(build_e0(ExponentBox({4}), 3).members() == std::vector<Exponent>{{0}, {1}});
    CHECK(build_e0(ExponentBox({4, 2}), 3).size() == 4);
    for (const std::uint32_t q : {3u, 5u, 7u, 9u})
        for (const std::uint32_t lambda : {1u, 2u}) {
            if ((q - 1) % lambda) continue;
            const ExponentBox box({lambda * (q + 1), 3});
            CHECK(build_e0(box, q).size() == (q + 1) / 2 * 3);
        }
}

TEST_CASE("Delta_t members") {
    const ExponentBox box({8, 6});
    CHECK(build_delta_t(box, 7, 3).members() == std::vector<Exponent>{{0, 0}, {0, 1}, {1, 0}});
    CHECK(build_delta_t(box, 7, 2).members() == std::vector<Exponent>{{0, 0}});
    CHECK(build_delta_t(box, 7, 4).size() == 5);
    const auto d5 = build_delta_t(box, 7, 5);
    CHECK(d5.members() ==
          std::vector<Exponent>{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 1}, {2, 0}, {3, 0}});
    CHECK(footprint_bound(d5) == 24);
    CHECK_THROWS_AS(build_delta_t(box, 7, 6), UsageError);
    CHECK_THROWS_AS(build_delta_t(box, 7, 1), UsageError);
}

TEST_CASE("Delta_t is nested and inside E0") {
    for (const std::uint32_t q : {3u, 5u, 7u, 9u}) {
        const ExponentBox box({q + 1, q + 1, 3});
        const auto e0 = build_e0(box, q);
        for (std::uint32_t t = 2; t <= (q + 3) / 2; ++t) {
            const auto d = build_delta_t(box, q, t);
            CHECK(d.is_subset_of(e0));
            if (t + 1 <= (q + 3) / 2) CHECK(d.is_subset_of(build_delta_t(box, q, t + 1)));
        }
    }
}

TEST_CASE("V recursion") {
    CHECK(hyperbolic_count(8, 2, 2) == 3);
    CHECK(hyperbolic_count(5, 1, 3) == 3);
    CHECK(hyperbolic_count(5, 1, 9) == 5);
    CHECK(hyperbolic_count(5, 3, 0) == 0);
    for (std::uint64_t b = 1; b <= 6; ++b)
        for (std::uint32_t m = 1; m <= 3; ++m)
            for (std::uint64_t a = 0; a <= 20; ++a) CHECK(hyperbolic_count(b, m, a) == brute_hyperbolic(b, m, a));
}

TEST_CASE("delta_size: recursion, closed forms, enumeration") {
    CHECK(delta_size_m2_closed(5) == 8);
    CHECK(delta_size_m2_closed(7) == 14);
    CHECK(delta_size_m2_closed(6) == 10);
    CHECK(delta_size(ExponentBox({60, 120}), 7) == 14);
    CHECK(delta_size(ExponentBox({10, 10}), 6) == 10);
    for (const std::uint32_t q : {3u, 5u, 7u, 9u})
        for (const auto lambda : divisors(q - 1)) {
            const auto b = static_cast<std::uint32_t>(lambda * (q + 1));
            for (std::uint32_t m = 1; m <= 3; ++m) {
                const ExponentBox box(std::vector<std::uint32_t>(m, b));
                for (std::uint32_t t = 2; t <= (q + 3) / 2; ++t) {
                    const auto direct = build_delta_t(box, q, t).size();
                    CHECK(delta_size(box, t) == direct);
                    CHECK(hyperbolic_count(b, m, t - 1) == direct);
                    if (m == 2) CHECK(delta_size_m2_closed(t) == direct);
                    if (m == 3) CHECK(delta_size_m3_closed(t) == direct);
                }
            }
        }
}

TEST_CASE("mixed boxes clamp to the box") {
    CHECK(delta_size(ExponentBox({24, 13, 2}), 4) == 6);
    CHECK(build_delta_t(ExponentBox({24, 13, 2}), 5, 4).size() == 6);
    CHECK(delta_size(ExponentBox({8, 3, 3}), 3) == 4);
}
