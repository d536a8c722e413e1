#include "gmcc/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "gmcc/lattice.hpp"

namespace gmcc {

std::string construction_string(std::uint32_t q, std::uint32_t lambda, const std::vector<std::uint32_t>& sizes,
                                std::uint32_t t) {
    std::string s = "q=" + std::to_string(q) + ",lambda=" + std::to_string(lambda) + ",sizes=";
    for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "x" : "") + std::to_string(sizes[i]);
    return s + ",t=" + std::to_string(t);
}

void validate_record(const QuantumCodeRecord& r) {
    const auto fail = [&](const std::string& what) {
        throw InvariantViolation("record " + r.construction + ": " + what);
    };
    if (r.q % 2 == 0 || r.lambda == 0 || (r.q - 1) % r.lambda != 0) fail("lambda does not divide q - 1");
    if (r.t < 2 || r.t > (r.q + 3) / 2) fail("t out of range");
    if (r.sizes.size() != r.m || r.sizes.empty() || r.sizes[0] != r.lambda * (r.q + 1)) fail("bad sizes");
    const ExponentBox box(r.sizes);
    if (box.n() != r.n) fail("n != prod sizes");
    if (r.k != static_cast<std::int64_t>(r.n) - 2 * static_cast<std::int64_t>(delta_size(box, r.t)))
        fail("k != n - 2 #Delta_t");
    if ((static_cast<std::int64_t>(r.n) - r.k) % 2 != 0) fail("n and k differ in parity");
    if (r.d_exact && *r.d_exact < r.t) fail("d_exact < t");
}

namespace {

struct SweepTask {
    std::uint32_t q;
    std::uint32_t lambda;
    std::vector<std::uint32_t> tail;
    std::uint32_t t;
};

bool keep(const QuantumCodeRecord& r, SweepFilter filter) {
    switch (filter) {
        case SweepFilter::kNone: return true;
        case SweepFilter::kMds: return r.singleton.label == SingletonLabel::kMds;
        case SweepFilter::kQhamds: return r.singleton.label == SingletonLabel::kQhamds;
        case SweepFilter::kBeatsQgv: return r.qgv_beaten;
    }
    return true;
}

// Runs fn(i) for i in [0, count) over a worker pool; the first exception
// (by index) is rethrown after all workers finish.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    const auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned workers = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

void enumerate_tails(std::uint32_t len, std::uint32_t lo, std::uint32_t hi, std::vector<std::uint32_t>& cur,
                     std::vector<std::vector<std::uint32_t>>& out) {
    if (cur.size() == len) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t a = lo; a <= hi; ++a) {
        cur.push_back(a);
        enumerate_tails(len, lo, hi, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<QuantumCodeRecord> sweep(const SweepSpec& spec) {
    std::vector<SweepTask> tasks;
    for (const std::uint32_t q : spec.qs) {
        field_for_q(q);
        const std::uint32_t t_lo = std::max<std::uint32_t>(2, spec.t_min.value_or(2));
        const std::uint32_t t_hi = std::min<std::uint32_t>((q + 3) / 2, spec.t_max.value_or((q + 3) / 2));
        const std::uint32_t a_hi = std::min(spec.size_max, q * q - 1);
        const std::uint32_t a_lo = std::max<std::uint32_t>(2, spec.size_min);
        for (const auto lambda64 : divisors(q - 1)) {
            const auto lambda = static_cast<std::uint32_t>(lambda64);
            if (!spec.lambdas.empty() &&
                std::find(spec.lambdas.begin(), spec.lambdas.end(), lambda) == spec.lambdas.end())
                continue;
            for (std::uint32_t m = std::max(1u, spec.m_min); m <= spec.m_max; ++m) {
                std::vector<std::vector<std::uint32_t>> tails;
                std::vector<std::uint32_t> cur;
                if (m == 1 || a_lo <= a_hi) enumerate_tails(m - 1, a_lo, a_hi, cur, tails);
                for (const auto& tail : tails) {
                    std::uint64_t n = std::uint64_t{lambda} * (q + 1);
                    for (const auto a : tail) n *= a;
                    if (spec.n_max && n > *spec.n_max) continue;
                    for (std::uint32_t t = t_lo; t <= t_hi; ++t) tasks.push_back({q, lambda, tail, t});
                }
            }
        }
    }

    const unsigned workers = resolve_threads(spec.threads);
    std::vector<std::optional<QuantumCodeRecord>> results(tasks.size());
    parallel_for(tasks.size(), workers, [&](std::size_t i) {
        const auto& task = tasks[i];
        try {
            const CodeParams params = CodeParams::make(task.q, task.lambda, task.tail);
            QuantumParamsOptions opts;
            opts.verify_distance = spec.verify_budget > 0;
            opts.budget = std::max<std::uint64_t>(1, spec.verify_budget);
            opts.threads = workers > 1 ? 1 : spec.threads;
            results[i] = quantum_params(params, task.t, opts);
        } catch (const UsageError&) {
            // Boxes too small for Delta_t are skipped.
        }
    });

    std::vector<QuantumCodeRecord> out;
    for (auto& r : results)
        if (r && keep(*r, spec.filter)) out.push_back(std::move(*r));
    if (!spec.dedupe) return out;

    std::map<std::tuple<std::uint32_t, std::uint64_t, std::int64_t, std::uint32_t>, std::string> best;
    for (const auto& r : out) {
        auto [it, inserted] = best.try_emplace({r.q, r.n, r.k, r.t}, r.construction);
        if (!inserted && r.construction < it->second) it->second = r.construction;
    }
    std::vector<QuantumCodeRecord> deduped;
    for (auto& r : out)
        if (best.at({r.q, r.n, r.k, r.t}) == r.construction) deduped.push_back(std::move(r));
    return deduped;
}

std::vector<std::string> table_names() { return {"table1", "table2", "table3", "table4", "table5", "ranges", "ranges2"}; }

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, sep)) cells.push_back(cell);
    if (!line.empty() && line.back() == sep) cells.emplace_back();
    return cells;
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split(line, ',');
        if (csv.header.empty()) {
            csv.header = std::move(cells);
            continue;
        }
        cells.resize(csv.header.size());
        csv.rows.push_back(std::move(cells));
    }
    return csv;
}

std::uint32_t to_u32(const std::string& s) { return static_cast<std::uint32_t>(std::stoul(s)); }

std::string label_cell(const SingletonClassification& s) {
    switch (s.label) {
        case SingletonLabel::kMds: return "MDS";
        case SingletonLabel::kQhamds: return "QHAMDS";
        case SingletonLabel::kDefect: break;
    }
    return "";
}

void reproduce_code_table(TableResult& out, const ReproduceOptions& opts) {
    std::vector<QuantumCodeRecord> records(out.expected.size());
    std::vector<std::string> notes(out.expected.size());
    parallel_for(out.expected.size(), opts.threads, [&](std::size_t i) {
        const auto& row = out.expected[i];
        const std::uint32_t m = to_u32(row[0]);
        const std::uint32_t q = to_u32(row[4]);
        const std::uint32_t a1 = to_u32(row[1]);
        const std::uint32_t t = to_u32(row[7]);
        if (a1 % (q + 1) != 0) throw UsageError(out.name + ": a1 is not a multiple of q + 1");
        std::vector<std::uint32_t> tail;
        for (std::uint32_t j = 1; j < m; ++j) tail.push_back(to_u32(row[1 + j]));
        const CodeParams params = CodeParams::make(q, a1 / (q + 1), tail);

        QuantumParamsOptions qopts;
        const std::uint64_t n = params.n();
        qopts.verify_distance = opts.verify && (m == 1 || (m == 2 && t == 3 && n <= 64));
        qopts.budget = opts.budget;
        qopts.threads = 1;
        records[i] = quantum_params(params, t, qopts);
        if (qopts.verify_distance && !records[i].d_exact) notes[i] = "unverified";
    });

    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        const auto& row = out.expected[i];
        std::vector<std::string> actual = {std::to_string(r.m), std::to_string(r.sizes[0]),
                                           r.m > 1 ? std::to_string(r.sizes[1]) : "",
                                           r.m > 2 ? std::to_string(r.sizes[2]) : "",
                                           std::to_string(r.q), std::to_string(r.n), std::to_string(r.k),
                                           std::to_string(r.distance()), r.qgv_beaten ? "yes" : "no",
                                           label_cell(r.singleton)};
        if (!notes[i].empty()) actual[7] = row[7] + "?" + notes[i];
        out.actual.push_back(std::move(actual));
        out.records.push_back(r);
    }
}

std::string range_cell(std::uint32_t q, std::uint32_t d) {
    if (d > (q + 3) / 2) return "out-of-range";
    const GvInterval iv = gv_interval(q, d);
    if (iv.empty()) return "none";
    return std::to_string(iv.n_low) + "-" + std::to_string(iv.n_high);
}

}  // namespace

std::vector<TableResult> reproduce_tables(const ReproduceOptions& opts) {
    const auto& golden = golden_tables();
    std::vector<TableResult> results;
    for (const auto& name : table_names()) {
        if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), name) == opts.only.end()) continue;
        const Csv csv = parse_csv(golden.at(name));
        TableResult res;
        res.name = name;
        res.header = csv.header;
        res.expected = csv.rows;
        if (name == "ranges") {
            for (const auto& row : csv.rows)
                res.actual.push_back({row[0], row[1], range_cell(to_u32(row[0]), to_u32(row[1]))});
        } else if (name == "ranges2") {
            for (const auto& row : csv.rows) {
                const std::uint32_t q = to_u32(row[0]);
                const std::uint64_t hi = (std::uint64_t{q} * q - 1) * (std::uint64_t{q} * q - 1);
                res.actual.push_back({row[0], std::to_string(qgv_threshold_d3(q)) + "-" + std::to_string(hi)});
            }
        } else {
            reproduce_code_table(res, opts);
        }
        for (std::size_t i = 0; i < res.expected.size(); ++i)
            for (std::size_t c = 0; c < res.header.size(); ++c)
                if (res.expected[i][c] != res.actual[i][c])
                    res.diffs.push_back({name, i + 1, res.header[c], res.expected[i][c], res.actual[i][c]});
        results.push_back(std::move(res));
    }
    return results;
}

std::string describe(const CellDiff& d) {
    return d.table + " row " + std::to_string(d.row) + " " + d.column + ": expected '" + d.expected + "', got '" +
           d.actual + "'";
}

}  // namespace gmcc
