#include "gmcc/codes.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>

namespace gmcc {

FieldPtr field_for_q(std::uint32_t q) {
    static std::mutex mu;
    static std::map<std::uint32_t, FieldPtr> cache;

    const auto [p, s] = prime_power_decomposition(q);
    if (p == 0) throw UsageError("q = " + std::to_string(q) + " is not a prime power");
    if (p == 2) throw UsageError("q must be odd");
    std::lock_guard lock(mu);
    if (auto it = cache.find(q); it != cache.end()) return it->second;
    auto f = make_field(p, 2 * s);
    cache.emplace(q, f);
    return f;
}

CodeParams CodeParams::make(std::uint32_t q, std::uint32_t lambda, std::span<const std::uint32_t> tail_sizes,
                            std::optional<std::vector<std::vector<Element>>> eval_sets) {
    CodeParams params;
    params.field = field_for_q(q);
    params.q = q;
    if (lambda == 0 || (q - 1) % lambda != 0)
        throw UsageError("lambda = " + std::to_string(lambda) + " must divide q - 1 = " + std::to_string(q - 1));
    params.lambda = lambda;
    const std::uint32_t max_size = q * q - 1;
    for (const std::uint32_t a : tail_sizes)
        if (a < 2 || a > max_size)
            throw UsageError("a_j = " + std::to_string(a) + " outside [2, " + std::to_string(max_size) + "]");
    params.box = ExponentBox::for_code(q, lambda, tail_sizes);

    if (eval_sets) {
        if (eval_sets->size() != tail_sizes.size())
            throw UsageError("expected " + std::to_string(tail_sizes.size()) + " evaluation sets");
        for (std::size_t j = 0; j < tail_sizes.size(); ++j) {
            const auto& set = (*eval_sets)[j];
            if (set.size() != tail_sizes[j])
                throw UsageError("evaluation set A_" + std::to_string(j + 2) + " has " + std::to_string(set.size()) +
                                 " elements, expected " + std::to_string(tail_sizes[j]));
            std::set<std::uint32_t> seen;
            for (const Element e : set) {
                if (e.is_zero() || !params.field->contains(e))
                    throw UsageError("evaluation set elements must be nonzero field elements");
                if (!seen.insert(e.log).second) throw UsageError("evaluation set elements must be distinct");
            }
        }
        params.eval_sets = std::move(*eval_sets);
    } else {
        for (const std::uint32_t a : tail_sizes) {
            std::vector<Element> set;
            for (std::uint32_t i = 0; i < a; ++i) set.push_back(Element::gen_pow(i));
            params.eval_sets.push_back(std::move(set));
        }
    }
    return params;
}

CodeParams CodeParams::make_from_exponents(std::uint32_t q, std::uint32_t lambda,
                                           const std::vector<std::vector<std::uint32_t>>& eval_set_exponents) {
    const std::uint32_t order = q * q - 1;
    std::vector<std::uint32_t> sizes;
    std::vector<std::vector<Element>> sets;
    for (const auto& exps : eval_set_exponents) {
        std::vector<Element> set;
        for (const std::uint32_t e : exps) {
            if (e >= order) throw UsageError("generator exponent " + std::to_string(e) + " >= q^2 - 1");
            set.push_back(Element::gen_pow(e));
        }
        sizes.push_back(static_cast<std::uint32_t>(set.size()));
        sets.push_back(std::move(set));
    }
    return make(q, lambda, sizes, std::move(sets));
}

PointGrid build_grid(const CodeParams& params) {
    if (params.n() > kMaxGridPoints) throw UsageError("code length exceeds 65536 grid points");
    const Field& f = *params.field;
    const Element zeta = f.root_of_unity(params.box.size(0));
    std::vector<Element> coords;
    coords.reserve(params.n() * params.m());
    params.box.for_each([&](const Exponent& alpha) {
        coords.push_back(f.pow(zeta, alpha[0]));
        for (std::size_t j = 1; j < alpha.size(); ++j) coords.push_back(params.eval_sets[j - 1][alpha[j]]);
    });
    return PointGrid(params.m(), std::move(coords));
}

Vector build_twist(const CodeParams& params) {
    const std::uint32_t q = params.q;
    const std::uint64_t n = params.n();
    const std::uint64_t block = n / (q + 1);
    const Element twisted = Element::gen_pow((q - 1) / 2);
    Vector v(n);
    for (std::uint64_t i = 0; i < n; ++i) v[i] = (i / block) % 2 == 0 ? twisted : Element::one();
    return v;
}

Vector unit_twist(std::size_t n) { return Vector(n, Element::one()); }

Vector eval_monomial(const Field& f, const Exponent& e, std::span<const Element> twist, const PointGrid& grid) {
    if (e.size() != grid.m()) throw UsageError("exponent dimension does not match grid");
    if (twist.size() != grid.size()) throw UsageError("twist length does not match grid");
    Vector out(grid.size());
    for (std::size_t alpha = 0; alpha < grid.size(); ++alpha) {
        Element value = twist[alpha];
        const auto point = grid.point(alpha);
        for (std::size_t j = 0; j < e.size(); ++j) value = f.mul(value, f.pow(point[j], e[j]));
        out[alpha] = value;
    }
    return out;
}

Vector eval_polynomial(const Field& f, const std::vector<Exponent>& support, std::span<const Element> coeffs,
                       std::span<const Element> twist, const PointGrid& grid) {
    if (support.size() != coeffs.size()) throw UsageError("support and coefficient counts differ");
    Vector out(grid.size());
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        const Vector term = eval_monomial(f, support[i], twist, grid);
        for (std::size_t a = 0; a < out.size(); ++a) out[a] = f.add(out[a], f.mul(coeffs[i], term[a]));
    }
    return out;
}

GeneratorMatrix generator_matrix(const ExponentSet& delta, std::span<const Element> twist, const PointGrid& grid,
                                 FieldPtr field) {
    if (delta.empty()) throw UsageError("generator matrix of an empty exponent set");
    Matrix rows(delta.size(), grid.size());
    for (std::size_t r = 0; r < delta.size(); ++r) {
        const Vector row = eval_monomial(*field, delta.members()[r], twist, grid);
        std::copy(row.begin(), row.end(), rows.row(r).begin());
    }
    return GeneratorMatrix{delta, std::move(rows), std::move(field)};
}

namespace {

void require_same_length(std::span<const Element> a, std::span<const Element> b) {
    if (a.size() != b.size()) throw UsageError("vector length mismatch");
}

}  // namespace

Element hermitian_ip(const Field& f, std::span<const Element> a, std::span<const Element> b) {
    require_same_length(a, b);
    Element acc = Element::zero();
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], f.conj(b[i])));
    return acc;
}

Element euclidean_ip(const Field& f, std::span<const Element> a, std::span<const Element> b) {
    require_same_length(a, b);
    Element acc = Element::zero();
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

Vector star(const Field& f, std::span<const Element> a, std::span<const Element> b) {
    require_same_length(a, b);
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], b[i]);
    return out;
}

Element twisted_monomial_hermitian_ip(const CodeParams& params, const Exponent& e, const Exponent& g) {
    if (!params.box.contains(e) || !params.box.contains(g)) throw UsageError("exponent outside box");
    const Field& f = *params.field;
    const std::uint32_t q = params.q;
    const Element zeta = f.root_of_unity(params.box.size(0));
    const Element twisted_norm = f.pow(Element::gen_pow((q - 1) / 2), q + 1);

    // v depends on alpha_1 only: twisted iff floor(alpha_1 / lambda) is even.
    Element first = Element::zero();
    for (std::uint32_t a1 = 0; a1 < params.box.size(0); ++a1) {
        const Element norm = (a1 / params.lambda) % 2 == 0 ? twisted_norm : Element::one();
        const Element x = f.pow(zeta, a1);
        first = f.add(first, f.mul(norm, f.mul(f.pow(x, e[0]), f.conj(f.pow(x, g[0])))));
    }
    Element acc = first;
    for (std::size_t j = 1; j < params.m(); ++j) {
        Element factor = Element::zero();
        for (const Element x : params.eval_sets[j - 1])
            factor = f.add(factor, f.mul(f.pow(x, e[j]), f.conj(f.pow(x, g[j]))));
        acc = f.mul(acc, factor);
    }
    return acc;
}

Vector dual_twist(const Field& f, std::span<const Element> v) {
    Vector w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) throw UsageError("twist vector has a zero entry");
        w[i] = f.inv(f.conj(v[i]));
    }
    return w;
}

}  // namespace gmcc
