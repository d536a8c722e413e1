#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gmcc/bounds.hpp"
#include "gmcc/catalog.hpp"
#include "gmcc/codes.hpp"
#include "gmcc/field.hpp"
#include "gmcc/lattice.hpp"
#include "gmcc/verify.hpp"

namespace py = pybind11;
using namespace gmcc;

namespace {

py::int_ big(const BigInt& v) { return py::int_(py::str(to_decimal(v))); }

py::dict record_dict(const QuantumCodeRecord& r) {
    py::dict d;
    d["q"] = r.q;
    d["lambda"] = r.lambda;
    d["m"] = r.m;
    d["sizes"] = r.sizes;
    d["t"] = r.t;
    d["n"] = r.n;
    d["k"] = r.k;
    d["d_bound"] = r.d_bound;
    d["d_exact"] = r.d_exact ? py::object(py::int_(*r.d_exact)) : py::object(py::none());
    d["method"] = r.method;
    d["work"] = r.work;
    d["singleton"] = r.singleton.to_string();
    d["defect"] = r.singleton.defect;
    d["qgv_beaten"] = r.qgv_beaten;
    d["construction"] = r.construction;
    return d;
}

CodeParams make_params(std::uint32_t q, std::uint32_t lambda, const std::vector<std::uint32_t>& sizes) {
    return CodeParams::make(q, lambda, sizes);
}

DistanceResult dual_distance(std::uint32_t q, std::uint32_t lambda, const std::vector<std::uint32_t>& sizes,
                             std::uint32_t t, bool brute_force, std::uint64_t budget) {
    const CodeParams params = make_params(q, lambda, sizes);
    const PointGrid grid = build_grid(params);
    const auto g = generator_matrix(build_delta_t(params.box, q, t), unit_twist(grid.size()), grid, params.field);
    return brute_force ? brute_force_dual_distance(g.rows, *params.field)
                       : dual_distance_by_columns(g.rows, *params.field, budget, 1);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum codes from generalized monomial-Cartesian codes";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

    m.def(
        "field_info",
        [](std::uint32_t p, std::uint32_t k) {
            const FieldPtr f = make_field(p, k);
            py::dict d;
            d["size"] = f->size();
            d["modulus"] = f->modulus();
            d["generator_order"] = f->multiplicative_order(f->generator());
            std::vector<std::uint32_t> sols;
            if (f->is_quadratic_extension())
                for (const Element e : solve_qplus1_power_eq_minus_one(*f)) sols.push_back(e.log);
            d["norm_minus_one"] = sols;
            return d;
        },
        py::arg("p"), py::arg("k"));

    m.def(
        "delta",
        [](const std::vector<std::uint32_t>& box_sizes, std::uint32_t q, std::uint32_t t) {
            return build_delta_t(ExponentBox(box_sizes), q, t).members();
        },
        py::arg("box_sizes"), py::arg("q"), py::arg("t"), "Members of Delta_t in lex order.");
    m.def(
        "delta_size", [](const std::vector<std::uint32_t>& box_sizes, std::uint32_t t) {
            return delta_size(ExponentBox(box_sizes), t);
        },
        py::arg("box_sizes"), py::arg("t"));
    m.def("hyperbolic_count", &hyperbolic_count, py::arg("b"), py::arg("m"), py::arg("a"));

    m.def(
        "classify_singleton",
        [](std::int64_t n, std::int64_t k, std::int64_t d) {
            const auto s = classify_singleton(n, k, d);
            return py::make_tuple(s.defect, s.to_string());
        },
        py::arg("n"), py::arg("k"), py::arg("d"), "(defect, label)");

    m.def(
        "qgv",
        [](std::int64_t n, std::int64_t k, std::int64_t d, std::uint32_t q) {
            const QgvVerdict v = qgv(n, k, d, q);
            py::dict out;
            out["lhs"] = big(v.lhs);
            out["lhs_exact"] = v.lhs_exact;
            out["rhs"] = big(v.rhs);
            out["beaten"] = v.beaten;
            out["preconditions_met"] = v.preconditions_met;
            return out;
        },
        py::arg("n"), py::arg("k"), py::arg("d"), py::arg("q"));

    m.def(
        "gv_interval",
        [](std::uint32_t q, std::uint32_t d) -> py::object {
            const GvInterval iv = gv_interval(q, d);
            if (iv.empty()) return py::none();
            return py::make_tuple(iv.n_low, iv.n_high);
        },
        py::arg("q"), py::arg("d"), "(n_low, n_high), or None when empty.");
    m.def("qgv_threshold_d3", &qgv_threshold_d3, py::arg("q"));
    m.def(
        "qgv_scan_threshold",
        [](std::uint32_t q, std::uint32_t d, bool even) {
            return qgv_scan_threshold(q, d, even ? LengthParity::kEven : LengthParity::kAny);
        },
        py::arg("q"), py::arg("d"), py::arg("even") = true);

    m.def(
        "quantum_params",
        [](std::uint32_t q, std::uint32_t lambda, const std::vector<std::uint32_t>& sizes, std::uint32_t t,
           bool verify_distance, std::uint64_t budget) {
            QuantumParamsOptions opts;
            opts.verify_distance = verify_distance;
            opts.budget = budget;
            opts.threads = 1;
            return record_dict(quantum_params(make_params(q, lambda, sizes), t, opts));
        },
        py::arg("q"), py::arg("lambda_"), py::arg("sizes") = std::vector<std::uint32_t>{}, py::arg("t") = 3,
        py::arg("verify_distance") = false, py::arg("budget") = kDefaultDistanceBudget,
        "Parameters of [[n, n - 2 #Delta_t, >= t]]_q; `sizes` are a_2..a_m.");

    m.def(
        "self_orthogonal",
        [](std::uint32_t q, std::uint32_t lambda, const std::vector<std::uint32_t>& sizes, std::uint32_t t,
           bool twisted) {
            const CodeParams params = make_params(q, lambda, sizes);
            const PointGrid grid = build_grid(params);
            const Vector v = twisted ? build_twist(params) : unit_twist(grid.size());
            const auto g = generator_matrix(build_delta_t(params.box, q, t), v, grid, params.field);
            return check_self_orthogonal(g).gram_is_zero;
        },
        py::arg("q"), py::arg("lambda_"), py::arg("sizes"), py::arg("t"), py::arg("twisted") = true);

    m.def(
        "dual_distance",
        [](std::uint32_t q, std::uint32_t lambda, const std::vector<std::uint32_t>& sizes, std::uint32_t t,
           bool brute_force, std::uint64_t budget) {
            const DistanceResult r = dual_distance(q, lambda, sizes, t, brute_force, budget);
            py::dict d;
            d["value"] = r.value;
            d["exact"] = r.exact;
            d["method"] = r.method;
            d["work"] = r.work;
            d["witness"] = r.witness;
            return d;
        },
        py::arg("q"), py::arg("lambda_"), py::arg("sizes"), py::arg("t"), py::arg("brute_force") = false,
        py::arg("budget") = kDefaultDistanceBudget);

    m.def(
        "sweep",
        [](const std::vector<std::uint32_t>& qs, std::uint32_t m_max, std::uint32_t size_max, bool all_lambdas) {
            SweepSpec spec;
            spec.qs = qs;
            spec.m_max = m_max;
            spec.size_max = size_max;
            if (!all_lambdas) spec.lambdas = {1};
            spec.threads = 1;
            py::list out;
            for (const auto& r : sweep(spec)) out.append(record_dict(r));
            return out;
        },
        py::arg("qs"), py::arg("m_max") = 2, py::arg("size_max") = 8, py::arg("all_lambdas") = true);

    m.def(
        "reproduce_tables",
        [](bool verify) {
            ReproduceOptions opts;
            opts.verify = verify;
            opts.threads = 1;
            py::dict out;
            for (const auto& t : reproduce_tables(opts)) {
                py::list diffs;
                for (const auto& d : t.diffs) diffs.append(describe(d));
                out[py::str(t.name)] = diffs;
            }
            return out;
        },
        py::arg("verify") = true, "Table name -> list of differing cells.");
}
