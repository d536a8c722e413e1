#include <sstream>

#include "doctest.h"
#include "gmcc/catalog.hpp"

using namespace gmcc;

namespace {

bool has(const std::vector<QuantumCodeRecord>& rs, std::uint64_t n, std::int64_t k, std::uint32_t t) {
    for (const auto& r : rs)
        if (r.n == n && r.k == k && r.t == t) return true;
    return false;
}

}  // namespace

TEST_CASE("construction strings") {
    CHECK(construction_string(5, 1, {6, 13}, 3) == "q=5,lambda=1,sizes=6x13,t=3");
}

TEST_CASE("sweep examples") {
    SweepSpec a;
    a.qs = {3};
    a.m_max = 1;
    a.t_min = 3;
    a.t_max = 3;
    const auto ra = sweep(a);
    CHECK(has(ra, 4, 0, 3));
    CHECK(has(ra, 8, 4, 3));

    SweepSpec b;
    b.qs = {5};
    b.lambdas = {1};
    b.m_min = b.m_max = 2;
    b.size_min = b.size_max = 13;
    b.t_min = 3;
    b.t_max = 4;
    const auto rb = sweep(b);
    REQUIRE(rb.size() == 2);
    CHECK(has(rb, 78, 72, 3));
    CHECK(has(rb, 78, 68, 4));

    CHECK(sweep(SweepSpec{}).empty());
}

TEST_CASE("sweep is deterministic, ordered, valid and filtered") {
    SweepSpec s;
    s.qs = {3, 5};
    s.size_max = 6;
    s.verify_budget = 100000;
    s.threads = 1;
    const auto one = sweep(s);
    s.threads = 4;
    const auto four = sweep(s);
    CHECK(one == four);
    CHECK(to_json(one) == to_json(four));
    for (const auto& r : one) {
        CHECK_NOTHROW(validate_record(r));
        if (r.m == 1 && r.d_exact) CHECK(r.singleton.label == SingletonLabel::kMds);
        if (r.d_exact) CHECK(r.singleton.defect % 2 == 0);
    }
    for (std::size_t i = 1; i < one.size(); ++i) {
        const auto& x = one[i - 1];
        const auto& y = one[i];
        CHECK(std::tie(x.q, x.lambda, x.m, x.sizes, x.t) < std::tie(y.q, y.lambda, y.m, y.sizes, y.t));
    }

    s.filter = SweepFilter::kQhamds;
    for (const auto& r : sweep(s)) CHECK(r.singleton.label == SingletonLabel::kQhamds);
    s.filter = SweepFilter::kBeatsQgv;
    s.n_max = 30;
    for (const auto& r : sweep(s)) {
        CHECK(r.qgv_beaten);
        CHECK(r.n <= 30);
    }
}

TEST_CASE("emit round trips") {
    SweepSpec s;
    s.qs = {5};
    s.lambdas = {2};
    s.m_max = 1;
    s.t_min = s.t_max = 3;
    s.verify_budget = 1000;
    const auto rs = sweep(s);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].n == 12);
    CHECK(records_from_json(to_json(rs)) == rs);

    std::ostringstream csv;
    emit(rs, OutputFormat::kCsv, csv);
    const std::string text = csv.str();
    CHECK(std::count(text.begin(), text.end(), '\n') == 2);
    CHECK(text.rfind("q,lambda,m,sizes,t,n,k,d_bound,d_exact,method,singleton,qgv\n", 0) == 0);
    CHECK(text.find("5,2,1,12,3,12,8,3,3,column-dependence,MDS,yes") != std::string::npos);

    std::ostringstream empty_json, empty_csv;
    emit({}, OutputFormat::kJson, empty_json);
    emit({}, OutputFormat::kCsv, empty_csv);
    CHECK(records_from_json(empty_json.str()).empty());
    const std::string empty_text = empty_csv.str();
    CHECK(std::count(empty_text.begin(), empty_text.end(), '\n') == 1);

    QuantumCodeRecord big = rs[0];
    big.work = (std::uint64_t{1} << 53) + 7;
    const auto json = to_json({big});
    CHECK(json.find("\"9007199254740999\"") != std::string::npos);
    CHECK(records_from_json(json)[0] == big);
}

TEST_CASE("reproduce selected tables") {
    ReproduceOptions opts;
    opts.only = {"table3", "ranges", "ranges2"};
    const auto res = reproduce_tables(opts);
    REQUIRE(res.size() == 3);
    for (const auto& t : res) CHECK(t.diffs.empty());
    const auto& t3 = res[0];
    // [[16,8,5]]_7 MDS
    bool found = false;
    for (const auto& r : t3.records)
        if (r.n == 16 && r.k == 8 && r.t == 5) {
            found = true;
            CHECK(r.d_exact == 5u);
            CHECK(r.singleton.label == SingletonLabel::kMds);
        }
    CHECK(found);
    CHECK(res[1].actual.back() == std::vector<std::string>{"17", "7", "72590-82944"});
}

TEST_CASE("table 4 holds the [[12800,12792,3]]_9 row") {
    ReproduceOptions opts;
    opts.only = {"table4"};
    const auto res = reproduce_tables(opts);
    REQUIRE(res.size() == 1);
    bool found = false;
    for (const auto& r : res[0].records)
        if (r.n == 12800) {
            found = true;
            CHECK(r.k == 12792);
            CHECK(r.sizes == std::vector<std::uint32_t>{80, 80, 2});
        }
    CHECK(found);
}
