#include "gmcc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>

namespace gmcc {

bool monomials_orthogonal(std::uint64_t e1, std::uint64_t e1p, std::uint32_t q) {
    if (q % 2 == 0) throw UsageError("q must be odd");
    const std::uint64_t full = q + 1;
    const std::uint64_t half = full / 2;
    return e1 % full == e1p % full || e1 % half != e1p % half;
}

OrthogonalityReport check_self_orthogonal(const GeneratorMatrix& g) {
    const Field& f = *g.field;
    const std::uint32_t q = f.sqrt_size();
    const auto& members = g.delta.members();
    OrthogonalityReport report;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i; j < members.size(); ++j) {
            if (!hermitian_ip(f, g.rows.row(i), g.rows.row(j)).is_zero()) {
                report.gram_is_zero = false;
                report.offending_pairs.emplace_back(members[i], members[j]);
            }
            if (!monomials_orthogonal(members[i][0], members[j][0], q)) {
                report.predicate_all_pairs = false;
                report.predicate_failures.emplace_back(members[i], members[j]);
            }
        }
    }
    return report;
}

unsigned resolve_threads(unsigned threads) {
    if (threads != 0) return threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

// C(n, r), saturating.
std::uint64_t choose(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 c = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        c = c * (n - r + i) / i;
        if (c > kSaturated) return kSaturated;
    }
    return static_cast<std::uint64_t>(c);
}

// Incremental echelon basis of column vectors. Each stored vector is
// normalized at its pivot and reduced against all earlier ones.
class ColumnBasis {
  public:
    ColumnBasis(const Field& f, std::size_t height, std::size_t depth)
        : f_(f), height_(height), vecs_(depth, Vector(height)), pivots_(depth) {}

    std::size_t size() const { return used_; }
    void pop() { --used_; }

    // Pushes the column when independent of the basis; returns false otherwise.
    bool push(const Matrix& g, std::size_t col) {
        Vector& v = vecs_[used_];
        for (std::size_t r = 0; r < height_; ++r) v[r] = g(r, col);
        for (std::size_t i = 0; i < used_; ++i) {
            const Element c = v[pivots_[i]];
            if (c.is_zero()) continue;
            const Element neg_c = f_.neg(c);
            const Vector& b = vecs_[i];
            for (std::size_t r = 0; r < height_; ++r)
                if (!b[r].is_zero()) v[r] = f_.add(v[r], f_.mul(neg_c, b[r]));
        }
        std::size_t piv = 0;
        while (piv < height_ && v[piv].is_zero()) ++piv;
        if (piv == height_) return false;
        const Element inv = f_.inv(v[piv]);
        for (std::size_t r = 0; r < height_; ++r) v[r] = f_.mul(v[r], inv);
        pivots_[used_++] = piv;
        return true;
    }

  private:
    const Field& f_;
    std::size_t height_;
    std::vector<Vector> vecs_;
    std::vector<std::size_t> pivots_;
    std::size_t used_ = 0;
};

struct TaskOutcome {
    bool found = false;
    std::uint64_t tested = 0;  // subsets tested, counting the witness
    std::vector<std::size_t> witness;
};

// Subsets of size s whose largest column is x, visited in colex order:
// the next-largest element ascends slowest. Stops after `limit` subsets.
class LevelTask {
  public:
    LevelTask(const Matrix& g, const Field& f, std::size_t s, std::uint64_t limit)
        : g_(g), s_(s), limit_(limit), basis_(f, g.rows(), s), chosen_(s) {}

    TaskOutcome run(std::size_t x) {
        out_ = {};
        chosen_[s_ - 1] = x;
        if (!basis_.push(g_, x)) {
            out_.found = true;
            out_.tested = 1;
            out_.witness = {x};
            return out_;
        }
        if (s_ == 1) {
            out_.tested = 1;
            basis_.pop();
            return out_;
        }
        descend(s_ - 1, x);
        basis_.pop();
        return out_;
    }

  private:
    // Chooses positions [0, slots) from columns below `bound`.
    bool descend(std::size_t slots, std::size_t bound) {
        if (slots == 0) return false;
        for (std::size_t y = slots - 1; y < bound; ++y) {
            if (slots == 1 && out_.tested >= limit_) return true;
            chosen_[slots - 1] = y;
            const bool independent = basis_.push(g_, y);
            if (slots == 1) {
                ++out_.tested;
                if (!independent) {
                    out_.found = true;
                    out_.witness.assign(chosen_.begin(), chosen_.end());
                    return true;
                }
                basis_.pop();
                continue;
            }
            // A dependent proper subset would have ended an earlier level;
            // it only happens here when that level was truncated by budget.
            if (!independent) {
                out_.tested = sat_add(out_.tested, choose(y, slots - 1));
                continue;
            }
            const bool stop = descend(slots - 1, y);
            basis_.pop();
            if (stop) return true;
        }
        return false;
    }

    const Matrix& g_;
    std::size_t s_;
    std::uint64_t limit_;
    ColumnBasis basis_;
    std::vector<std::size_t> chosen_;
    TaskOutcome out_;
};

}  // namespace

DistanceResult dual_distance_by_columns(const Matrix& g, const Field& f, std::uint64_t budget, unsigned threads) {
    if (budget == 0) throw UsageError("distance budget must be positive");
    const std::size_t n = g.cols();
    const std::size_t k = g.rows();
    if (n == 0) throw UsageError("generator matrix has no columns");
    if (rank(f, g) != k) throw UsageError("generator matrix must have full row rank");
    const unsigned workers = resolve_threads(threads);

    DistanceResult result;
    result.method = "column-dependence";
    std::uint64_t spent = 0;
    // Any k+1 columns are dependent, so the loop ends by s = min(k+1, n+1).
    for (std::size_t s = 1; s <= std::min(k + 1, n); ++s) {
        const std::uint64_t remaining = budget - spent;
        const std::uint64_t level_total = choose(n, s);
        const bool truncated = level_total > remaining;

        // Task x covers colex ranks [offset[x], offset[x] + C(x, s-1)).
        std::vector<std::uint64_t> offset(n + 1, 0);
        for (std::size_t x = 0; x < n; ++x) offset[x + 1] = sat_add(offset[x], choose(x, s - 1));
        std::size_t last_task = n;
        while (last_task > 0 && offset[last_task - 1] >= remaining) --last_task;

        std::vector<std::optional<TaskOutcome>> outcomes(last_task);
        std::atomic<std::size_t> next{s - 1};
        std::atomic<std::size_t> best{last_task};
        const auto work = [&] {
            for (std::size_t x = next.fetch_add(1); x < last_task; x = next.fetch_add(1)) {
                if (x > best.load()) break;
                const std::uint64_t limit = std::min(remaining - offset[x], offset[x + 1] - offset[x]);
                LevelTask task(g, f, s, limit);
                outcomes[x] = task.run(x);
                if (outcomes[x]->found) {
                    std::size_t cur = best.load();
                    while (x < cur && !best.compare_exchange_weak(cur, x)) {
                    }
                }
            }
        };
        if (workers <= 1 || last_task < 2) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
            for (auto& th : pool) th.join();
        }

        const std::size_t hit = best.load();
        if (hit < last_task) {
            result.value = static_cast<std::uint32_t>(s);
            result.exact = true;
            result.work = sat_add(spent, sat_add(offset[hit], outcomes[hit]->tested));
            result.witness = outcomes[hit]->witness;
            return result;
        }
        if (truncated) {
            result.value = static_cast<std::uint32_t>(s);
            result.exact = false;
            result.work = budget;
            return result;
        }
        spent += level_total;
    }
    throw InvariantViolation("no dependent column set found among k + 1 columns");
}

namespace {

// Visits every codeword of the row space of `basis` (one word per row),
// stepping one coordinate of the coefficient vector at a time.
template <typename Fn>
void for_each_codeword(const Matrix& basis, const Field& f, Fn&& fn) {
    const std::size_t dim = basis.rows();
    const std::size_t n = basis.cols();
    const auto elements = f.elements();
    const std::size_t q = elements.size();
    std::vector<std::size_t> digits(dim, 0);
    Vector word(n);
    fn(word);
    while (true) {
        std::size_t i = 0;
        while (i < dim && digits[i] == q - 1) {
            // Wrap digit i back to zero: subtract its last value.
            const Element old = elements[q - 1];
            for (std::size_t c = 0; c < n; ++c) word[c] = f.sub(word[c], f.mul(old, basis(i, c)));
            digits[i] = 0;
            ++i;
        }
        if (i == dim) return;
        const Element step = f.sub(elements[digits[i] + 1], elements[digits[i]]);
        for (std::size_t c = 0; c < n; ++c) word[c] = f.add(word[c], f.mul(step, basis(i, c)));
        ++digits[i];
        fn(word);
    }
}

std::uint64_t word_count(const Field& f, std::size_t dim) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (count > kBruteForceLimit / f.size()) return kBruteForceLimit + 1;
        count *= f.size();
    }
    return count;
}

}  // namespace

DistanceResult brute_force_dual_distance(const Matrix& g, const Field& f) {
    const Matrix dual = nullspace(f, g);
    const std::uint64_t words = word_count(f, dual.rows());
    if (words > kBruteForceLimit) throw UsageError("dual code too large to enumerate");
    DistanceResult result;
    result.method = "brute-force";
    result.exact = true;
    std::size_t best = g.cols() + 1;
    for_each_codeword(dual, f, [&](const Vector& w) {
        const std::size_t wt = weight(w);
        if (wt > 0) best = std::min(best, wt);
        ++result.work;
    });
    if (best > g.cols()) throw UsageError("dual code is trivial");
    result.value = static_cast<std::uint32_t>(best);
    return result;
}

std::vector<std::uint64_t> weight_enumerator(const Matrix& g, const Field& f) {
    if (word_count(f, g.rows()) > kBruteForceLimit) throw UsageError("code too large to enumerate");
    std::vector<std::uint64_t> dist(g.cols() + 1, 0);
    for_each_codeword(g, f, [&](const Vector& w) { ++dist[weight(w)]; });
    return dist;
}

std::uint32_t brute_force_min_distance(const Matrix& g, const Field& f) {
    const auto dist = weight_enumerator(g, f);
    for (std::size_t w = 1; w < dist.size(); ++w)
        if (dist[w] != 0) return static_cast<std::uint32_t>(w);
    throw UsageError("code is trivial");
}

QuantumCodeRecord quantum_params(const CodeParams& params, std::uint32_t t, const QuantumParamsOptions& opts) {
    const std::uint32_t q = params.q;
    const ExponentSet delta = build_delta_t(params.box, q, t);

    QuantumCodeRecord rec;
    rec.q = q;
    rec.lambda = params.lambda;
    rec.m = static_cast<std::uint32_t>(params.m());
    rec.sizes = params.box.sizes();
    rec.t = t;
    rec.n = params.n();
    rec.k = static_cast<std::int64_t>(rec.n) - 2 * static_cast<std::int64_t>(delta.size());
    rec.d_bound = t;
    rec.construction = construction_string(q, params.lambda, rec.sizes, t);
    if (rec.k < 0) throw UsageError("box too small: n - 2 #Delta_t is negative");

    const bool grid_ok = rec.n <= kMaxGridPoints;
    if (grid_ok) {
        const PointGrid grid = build_grid(params);
        const Vector twist = build_twist(params);
        const auto report = check_self_orthogonal(generator_matrix(delta, twist, grid, params.field));
        if (!report.gram_is_zero) throw InvariantViolation("twisted code is not Hermitian self-orthogonal");
        if (opts.verify_distance) {
            const auto g = generator_matrix(delta, unit_twist(grid.size()), grid, params.field);
            const DistanceResult d = dual_distance_by_columns(g.rows, *params.field, opts.budget, opts.threads);
            rec.work = d.work;
            if (d.exact) {
                rec.d_exact = d.value;
                rec.method = d.method;
            }
        }
    } else {
        const auto& members = delta.members();
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i; j < members.size(); ++j)
                if (!twisted_monomial_hermitian_ip(params, members[i], members[j]).is_zero())
                    throw InvariantViolation("twisted code is not Hermitian self-orthogonal");
    }
    if (rec.d_exact && *rec.d_exact < t) throw InvariantViolation("dual distance below the designed distance");

    const std::uint32_t d = rec.distance();
    rec.singleton = classify_singleton(static_cast<std::int64_t>(rec.n), rec.k, d);
    const QgvVerdict v = qgv(static_cast<std::int64_t>(rec.n), rec.k, d, q);
    rec.qgv_beaten = v.beaten;
    rec.qgv_preconditions = v.preconditions_met;
    return rec;
}

}  // namespace gmcc
