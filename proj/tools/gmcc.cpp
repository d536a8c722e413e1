// gmcc: command-line front end for the quantum code construction library.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gmcc/bounds.hpp"
#include "gmcc/catalog.hpp"
#include "gmcc/codes.hpp"
#include "gmcc/field.hpp"
#include "gmcc/lattice.hpp"
#include "gmcc/verify.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;
using namespace gmcc;

constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitMismatch = 3;

struct CodeFlags {
    std::uint32_t q = 0;
    std::uint32_t lambda = 1;
    std::uint32_t m = 1;
    std::uint32_t t = 2;
    std::vector<std::uint32_t> sizes;
    std::string eval_sets;

    void add_to(CLI::App* cmd, bool with_t = true) {
        cmd->add_option("--q", q, "Odd prime power q; codes live over GF(q^2)")->required();
        cmd->add_option("--lambda", lambda, "Divisor of q-1; a_1 = lambda(q+1)")->capture_default_str();
        cmd->add_option("--m", m, "Number of variables")->capture_default_str();
        if (with_t) cmd->add_option("--t", t, "Designed distance, 2 <= t <= (q+3)/2")->required();
        cmd->add_option("--sizes", sizes, "a_2,...,a_m")->delimiter(',');
        cmd->add_option("--eval-sets", eval_sets, "JSON file: one list of generator exponents per A_j, j >= 2");
    }

    CodeParams params() const {
        if (m == 0) throw UsageError("m must be at least 1");
        if (!eval_sets.empty()) {
            std::ifstream in(eval_sets);
            if (!in) throw UsageError("cannot read " + eval_sets);
            ordered_json j;
            try {
                j = ordered_json::parse(in);
            } catch (const ordered_json::exception& e) {
                throw UsageError(std::string("invalid --eval-sets JSON: ") + e.what());
            }
            const auto sets = j.get<std::vector<std::vector<std::uint32_t>>>();
            if (sets.size() + 1 != m) throw UsageError("--eval-sets must hold m - 1 lists");
            if (!sizes.empty()) {
                for (std::size_t i = 0; i < sets.size(); ++i)
                    if (i >= sizes.size() || sets[i].size() != sizes[i])
                        throw UsageError("--sizes disagrees with --eval-sets");
            }
            return CodeParams::make_from_exponents(q, lambda, sets);
        }
        if (sizes.size() + 1 != m)
            throw UsageError("--sizes needs exactly m - 1 = " + std::to_string(m - 1) + " entries");
        return CodeParams::make(q, lambda, sizes);
    }
};

ordered_json symbol(Element e) { return e.is_zero() ? ordered_json(nullptr) : ordered_json(e.log); }

ordered_json exponent_list(const std::vector<Exponent>& es) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : es) arr.push_back(e);
    return arr;
}

ordered_json pair_list(const std::vector<ExponentPair>& pairs) {
    ordered_json arr = ordered_json::array();
    for (const auto& [a, b] : pairs) arr.push_back(ordered_json::array({a, b}));
    return arr;
}

ordered_json distance_json(const DistanceResult& d) {
    return {{"value", d.value}, {"exact", d.exact}, {"method", d.method}, {"work", d.work}, {"witness", d.witness}};
}

void print(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_field_info(std::uint32_t p, std::uint32_t k) {
    const FieldPtr f = make_field(p, k);
    ordered_json j;
    j["p"] = p;
    j["k"] = k;
    j["size"] = f->size();
    j["modulus"] = f->modulus();
    j["generator_order"] = f->multiplicative_order(f->generator());
    if (f->is_quadratic_extension()) {
        j["q"] = f->sqrt_size();
        ordered_json sols = ordered_json::array();
        for (const Element e : solve_qplus1_power_eq_minus_one(*f)) sols.push_back(e.log);
        j["norm_minus_one"] = sols;
    } else {
        j["q"] = nullptr;
        j["norm_minus_one"] = nullptr;
    }
    print(j);
    return 0;
}

int cmd_delta(const CodeFlags& flags) {
    const CodeParams params = flags.params();
    const ExponentSet delta = build_delta_t(params.box, flags.q, flags.t);
    ordered_json j;
    j["sizes"] = params.box.sizes();
    j["t"] = flags.t;
    j["count"] = delta.size();
    j["members"] = exponent_list(delta.members());
    j["footprint_bound"] = footprint_bound(delta);
    print(j);
    return 0;
}

int cmd_construct(const CodeFlags& flags, const std::string& matrix_format) {
    const CodeParams params = flags.params();
    const ExponentSet delta = build_delta_t(params.box, flags.q, flags.t);
    const PointGrid grid = build_grid(params);
    const Vector twist = build_twist(params);
    const GeneratorMatrix g = generator_matrix(delta, twist, grid, params.field);
    if (matrix_format == "csv") {
        for (std::size_t r = 0; r < g.rows.rows(); ++r) {
            for (std::size_t c = 0; c < g.rows.cols(); ++c)
                std::cout << (c ? "," : "") << params.field->to_index(g.rows(r, c));
            std::cout << '\n';
        }
        return 0;
    }
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < g.rows.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (const Element e : g.rows.row(r)) row.push_back(symbol(e));
        rows.push_back(std::move(row));
    }
    ordered_json tw = ordered_json::array();
    for (const Element e : twist) tw.push_back(symbol(e));
    ordered_json j;
    j["q"] = flags.q;
    j["lambda"] = flags.lambda;
    j["sizes"] = params.box.sizes();
    j["t"] = flags.t;
    j["n"] = params.n();
    j["delta_size"] = delta.size();
    j["delta"] = exponent_list(delta.members());
    j["footprint_bound"] = footprint_bound(delta);
    j["twist"] = tw;
    j["generator_matrix"] = rows;
    print(j);
    return 0;
}

int cmd_verify(const CodeFlags& flags, bool untwisted) {
    const CodeParams params = flags.params();
    const ExponentSet delta = build_delta_t(params.box, flags.q, flags.t);
    const PointGrid grid = build_grid(params);
    const Vector twist = untwisted ? unit_twist(grid.size()) : build_twist(params);
    const auto report = check_self_orthogonal(generator_matrix(delta, twist, grid, params.field));
    ordered_json j;
    j["twist"] = untwisted ? "unit" : "canonical";
    j["gram_is_zero"] = report.gram_is_zero;
    j["predicate_all_pairs"] = report.predicate_all_pairs;
    j["offending_pairs"] = pair_list(report.offending_pairs);
    j["predicate_failures"] = pair_list(report.predicate_failures);
    print(j);
    if (!untwisted && !report.gram_is_zero) {
        std::cerr << "error: canonical twist is not Hermitian self-orthogonal\n";
        return kExitInvariant;
    }
    return 0;
}

int cmd_distance(const CodeFlags& flags, bool exact, bool brute, std::uint64_t budget, unsigned threads) {
    const CodeParams params = flags.params();
    const ExponentSet delta = build_delta_t(params.box, flags.q, flags.t);
    DistanceResult d;
    if (brute || exact) {
        const PointGrid grid = build_grid(params);
        const auto g = generator_matrix(delta, unit_twist(grid.size()), grid, params.field);
        d = brute ? brute_force_dual_distance(g.rows, *params.field)
                  : dual_distance_by_columns(g.rows, *params.field, budget, threads);
        if (d.value < flags.t && d.exact) {
            print(distance_json(d));
            std::cerr << "error: dual distance below t\n";
            return kExitInvariant;
        }
        if (!d.exact) d.value = std::max(d.value, flags.t);
    } else {
        d.value = flags.t;
        d.exact = false;
        d.method = "footprint-only";
    }
    ordered_json j = distance_json(d);
    j["n"] = params.n();
    j["k"] = static_cast<std::int64_t>(params.n()) - 2 * static_cast<std::int64_t>(delta.size());
    print(j);
    return 0;
}

int cmd_qgv(std::int64_t n, std::int64_t k, std::int64_t d, std::uint32_t q) {
    const QgvVerdict v = qgv(n, k, d, q);
    ordered_json j;
    j["n"] = n;
    j["k"] = k;
    j["d"] = d;
    j["q"] = q;
    j["lhs"] = to_decimal(v.lhs);
    j["lhs_exact"] = v.lhs_exact;
    j["rhs"] = to_decimal(v.rhs);
    j["beaten"] = v.beaten;
    j["preconditions_met"] = v.preconditions_met;
    print(j);
    return 0;
}

int cmd_singleton(std::int64_t n, std::int64_t k, std::int64_t d) {
    const auto s = classify_singleton(n, k, d);
    print({{"n", n}, {"k", k}, {"d", d}, {"defect", s.defect}, {"label", s.to_string()}});
    return 0;
}

int cmd_gv_interval(std::uint32_t q, std::uint32_t d) {
    const GvInterval iv = gv_interval(q, d);
    ordered_json j;
    j["q"] = q;
    j["d"] = d;
    j["lower_bound"] = iv.lower_bound;
    j["n_low"] = iv.n_low;
    j["n_high"] = iv.n_high;
    j["empty"] = iv.empty();
    print(j);
    return 0;
}

int cmd_gv_threshold(std::uint32_t q, std::uint32_t d, const std::string& parity) {
    ordered_json j;
    j["q"] = q;
    j["d"] = d;
    if (d == 3 && parity == "closed-form") {
        j["method"] = "closed-form";
        j["threshold"] = qgv_threshold_d3(q);
    } else {
        const LengthParity par = parity == "any" ? LengthParity::kAny : LengthParity::kEven;
        const auto t = qgv_scan_threshold(q, d, par);
        j["method"] = parity == "any" ? "scan-any" : "scan-even";
        j["threshold"] = t ? ordered_json(*t) : ordered_json(nullptr);
    }
    j["n_high"] = (std::uint64_t{q} * q - 1) * (std::uint64_t{q} * q - 1);
    print(j);
    return 0;
}

struct ScanFlags {
    std::vector<std::uint32_t> qs;
    std::vector<std::uint32_t> lambdas;
    bool lambda_all = false;
    std::vector<std::uint32_t> ms{1, 2};
    std::uint32_t sizes_min = 2;
    std::uint32_t sizes_max = 8;
    std::vector<std::uint32_t> ts;
    std::string filter = "none";
    std::optional<std::uint64_t> n_max;
    std::uint64_t verify_budget = 0;
    std::string out;
    std::string format = "json";
    bool no_dedupe = false;
};

int cmd_scan(const ScanFlags& flags, unsigned threads) {
    SweepSpec spec;
    spec.qs = flags.qs;
    if (!flags.lambda_all) spec.lambdas = flags.lambdas.empty() ? std::vector<std::uint32_t>{1} : flags.lambdas;
    if (flags.ms.empty()) throw UsageError("--m needs at least one value");
    spec.m_min = *std::min_element(flags.ms.begin(), flags.ms.end());
    spec.m_max = *std::max_element(flags.ms.begin(), flags.ms.end());
    spec.size_min = flags.sizes_min;
    spec.size_max = flags.sizes_max;
    if (!flags.ts.empty()) {
        spec.t_min = *std::min_element(flags.ts.begin(), flags.ts.end());
        spec.t_max = *std::max_element(flags.ts.begin(), flags.ts.end());
    }
    if (flags.filter == "mds") spec.filter = SweepFilter::kMds;
    else if (flags.filter == "qhamds") spec.filter = SweepFilter::kQhamds;
    else if (flags.filter == "qgv") spec.filter = SweepFilter::kBeatsQgv;
    spec.n_max = flags.n_max;
    spec.verify_budget = flags.verify_budget;
    spec.threads = threads;
    spec.dedupe = !flags.no_dedupe;

    const auto records = sweep(spec);
    const OutputFormat fmt = flags.format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
    if (flags.out.empty()) {
        emit(records, fmt, std::cout);
    } else {
        std::ofstream file(flags.out);
        if (!file) throw UsageError("cannot write " + flags.out);
        emit(records, fmt, file);
        std::cerr << records.size() << " records written to " << flags.out << '\n';
    }
    return 0;
}

int cmd_tables(const std::vector<std::string>& which, bool diff, bool no_verify, std::uint64_t budget,
               unsigned threads) {
    ReproduceOptions opts;
    opts.verify = !no_verify;
    opts.budget = budget;
    opts.threads = threads;
    for (const auto& w : which) opts.only.push_back(w.size() == 1 ? "table" + w : w);
    const auto names = table_names();
    for (const auto& name : opts.only)
        if (std::find(names.begin(), names.end(), name) == names.end()) throw UsageError("unknown table " + name);

    const auto results = reproduce_tables(opts);
    std::size_t mismatches = 0;
    for (const auto& r : results) mismatches += r.diffs.size();
    if (diff) {
        for (const auto& r : results)
            for (const auto& d : r.diffs) std::cout << describe(d) << '\n';
    } else {
        ordered_json arr = ordered_json::array();
        for (const auto& r : results) {
            ordered_json t;
            t["table"] = r.name;
            t["header"] = r.header;
            t["rows"] = r.actual;
            t["mismatches"] = r.diffs.size();
            arr.push_back(std::move(t));
        }
        print(arr);
    }
    if (mismatches > 0) {
        std::cerr << mismatches << " cell(s) differ from the golden tables\n";
        return kExitMismatch;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum stabilizer codes from generalized monomial-Cartesian codes"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "Worker threads (0 = available parallelism)");

    std::uint32_t fp = 0, fk = 0;
    auto* field_cmd = app.add_subcommand("field-info", "Canonical GF(p^k): modulus, generator, x^(q+1) = -1");
    field_cmd->add_option("--p", fp, "Prime")->required();
    field_cmd->add_option("--k", fk, "Extension degree")->required();

    CodeFlags delta_flags;
    auto* delta_cmd = app.add_subcommand("delta", "Members of Delta_t and its footprint bound");
    delta_flags.add_to(delta_cmd);

    CodeFlags construct_flags;
    std::string matrix_format = "json";
    auto* construct_cmd = app.add_subcommand("construct", "Twisted generator matrix of C_{v,Delta_t}");
    construct_flags.add_to(construct_cmd);
    construct_cmd->add_option("--matrix-format", matrix_format, "json or csv (field-element indices)")
        ->check(CLI::IsMember({"json", "csv"}));

    CodeFlags verify_flags;
    bool untwisted = false;
    auto* verify_cmd = app.add_subcommand("verify", "Hermitian self-orthogonality report");
    verify_flags.add_to(verify_cmd);
    verify_cmd->add_flag("--untwisted", untwisted, "Use the all-ones twist (negative control)");

    CodeFlags distance_flags;
    bool exact = false, brute = false;
    std::uint64_t budget = kDefaultDistanceBudget;
    auto* distance_cmd = app.add_subcommand("distance", "Dual distance of C_{1,Delta_t}");
    distance_flags.add_to(distance_cmd);
    distance_cmd->add_flag("--exact", exact, "Search dependent column subsets");
    distance_cmd->add_flag("--brute-force", brute, "Enumerate the dual code (small instances)");
    distance_cmd->add_option("--budget", budget, "Subset tests allowed")->capture_default_str();

    std::int64_t qn = 0, qk = 0, qd = 0;
    std::uint32_t qq = 0;
    auto* qgv_cmd = app.add_subcommand("qgv", "Quantum Gilbert-Varshamov verdict, exact");
    qgv_cmd->add_option("--n", qn)->required();
    qgv_cmd->add_option("--k", qk)->required();
    qgv_cmd->add_option("--d", qd)->required();
    qgv_cmd->add_option("--q", qq)->required();

    std::int64_t sn = 0, sk = 0, sd = 0;
    auto* singleton_cmd = app.add_subcommand("singleton", "Quantum Singleton defect and label");
    singleton_cmd->add_option("--n", sn)->required();
    singleton_cmd->add_option("--k", sk)->required();
    singleton_cmd->add_option("--d", sd)->required();

    std::uint32_t iq = 0, id = 0;
    auto* interval_cmd = app.add_subcommand("gv-interval", "Lengths n_low..(q^2-1)^2 that beat the QGV bound");
    interval_cmd->add_option("--q", iq)->required();
    interval_cmd->add_option("--d", id)->required();

    std::uint32_t tq = 0, td = 3;
    std::string parity = "even";
    auto* threshold_cmd = app.add_subcommand("gv-threshold", "Smallest length from which m = 2 codes beat QGV");
    threshold_cmd->add_option("--q", tq)->required();
    threshold_cmd->add_option("--d", td)->capture_default_str();
    threshold_cmd->add_option("--parity", parity, "even, any, or closed-form (d = 3 only)")
        ->check(CLI::IsMember({"even", "any", "closed-form"}))
        ->capture_default_str();

    ScanFlags scan;
    auto* scan_cmd = app.add_subcommand("scan", "Sweep construction parameters");
    scan_cmd->add_option("--q", scan.qs, "q values")->delimiter(',')->required();
    scan_cmd->add_option("--lambda", scan.lambdas, "lambda values (default 1)")->delimiter(',');
    scan_cmd->add_flag("--lambda-all", scan.lambda_all, "Every divisor of q-1");
    scan_cmd->add_option("--m", scan.ms, "m values")->delimiter(',');
    scan_cmd->add_option("--sizes-min", scan.sizes_min)->capture_default_str();
    scan_cmd->add_option("--sizes-max", scan.sizes_max)->capture_default_str();
    scan_cmd->add_option("--t", scan.ts, "t values (default: all)")->delimiter(',');
    scan_cmd->add_option("--filter", scan.filter)->check(CLI::IsMember({"none", "mds", "qhamds", "qgv"}));
    scan_cmd->add_option("--n-max", scan.n_max);
    scan_cmd->add_option("--verify-budget", scan.verify_budget, "0 skips exact distances")->capture_default_str();
    scan_cmd->add_option("--out", scan.out, "Output file (default stdout)");
    scan_cmd->add_option("--format", scan.format)->check(CLI::IsMember({"json", "csv"}));
    scan_cmd->add_flag("--no-dedupe", scan.no_dedupe, "Keep duplicate (q, n, k, t) tuples");

    std::vector<std::string> which;
    bool diff = false, no_verify = false;
    std::uint64_t table_budget = kDefaultDistanceBudget;
    auto* tables_cmd = app.add_subcommand("tables", "Reproduce the sample tables");
    tables_cmd->add_option("--table", which, "1..5, ranges, ranges2 (default: all)")->delimiter(',');
    tables_cmd->add_flag("--diff", diff, "Print only cells that differ from the golden tables");
    tables_cmd->add_flag("--no-verify", no_verify, "Skip exact distance checks");
    tables_cmd->add_option("--budget", table_budget)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*field_cmd) return cmd_field_info(fp, fk);
        if (*delta_cmd) return cmd_delta(delta_flags);
        if (*construct_cmd) return cmd_construct(construct_flags, matrix_format);
        if (*verify_cmd) return cmd_verify(verify_flags, untwisted);
        if (*distance_cmd) return cmd_distance(distance_flags, exact, brute, budget, threads);
        if (*qgv_cmd) return cmd_qgv(qn, qk, qd, qq);
        if (*singleton_cmd) return cmd_singleton(sn, sk, sd);
        if (*interval_cmd) return cmd_gv_interval(iq, id);
        if (*threshold_cmd) return cmd_gv_threshold(tq, td, parity);
        if (*scan_cmd) return cmd_scan(scan, threads);
        if (*tables_cmd) return cmd_tables(which, diff, no_verify, table_budget, threads);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
