#include "gmcc/bounds.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <sstream>

#include "gmcc/field.hpp"
#include "gmcc/lattice.hpp"

namespace gmcc {

namespace {

void require_odd_prime_power(std::uint32_t q) {
    const auto [p, s] = prime_power_decomposition(q);
    if (p == 0) throw UsageError("q = " + std::to_string(q) + " is not a prime power");
    if (p == 2) throw UsageError("q must be odd");
}

}  // namespace

std::string SingletonClassification::to_string() const {
    switch (label) {
        case SingletonLabel::kMds: return "MDS";
        case SingletonLabel::kQhamds: return "QHAMDS";
        case SingletonLabel::kDefect: break;
    }
    return "defect(" + std::to_string(defect) + ")";
}

SingletonClassification classify_singleton(std::int64_t n, std::int64_t k, std::int64_t d) {
    if (n <= 0) throw UsageError("n must be positive");
    if (k < 0 || k > n) throw UsageError("k must lie in [0, n]");
    if (d < 1) throw UsageError("d must be at least 1");
    const std::int64_t defect = n - (k + 2 * d - 2);
    if (defect < 0)
        throw UsageError("[[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) +
                         "]] violates the quantum Singleton bound");
    SingletonClassification c;
    c.defect = defect;
    c.label = defect == 0 ? SingletonLabel::kMds : defect == 2 ? SingletonLabel::kQhamds : SingletonLabel::kDefect;
    return c;
}

BigInt binomial(std::uint64_t n, std::uint64_t i) {
    if (i > n) return 0;
    BigInt c = 1;
    // Each partial product C(n, j) is an integer, so the division is exact.
    for (std::uint64_t j = 1; j <= i; ++j) c = c * (n - i + j) / j;
    return c;
}

BigInt qgv_rhs_termwise(std::uint64_t n, std::uint64_t d, std::uint32_t q) {
    const BigInt base = BigInt(q) * q - 1;
    BigInt total = 0;
    for (std::uint64_t i = 1; i + 1 <= d; ++i) total += boost::multiprecision::pow(base, static_cast<unsigned>(i - 1)) * binomial(n, i);
    return total;
}

BigInt qgv_rhs_horner(std::uint64_t n, std::uint64_t d, std::uint32_t q) {
    const BigInt base = BigInt(q) * q - 1;
    BigInt acc = 0;
    for (std::uint64_t i = d - 1; i >= 1; --i) acc = acc * base + binomial(n, i);
    return acc;
}

QgvVerdict qgv(std::int64_t n, std::int64_t k, std::int64_t d, std::uint32_t q) {
    require_odd_prime_power(q);
    if (n <= 0 || d <= 0) throw UsageError("n and d must be positive");
    if (k < 0 || k > n) throw UsageError("k must lie in [0, n]");

    QgvVerdict v;
    const BigInt q2m1 = BigInt(q) * q - 1;
    const BigInt numerator = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n - k + 2)) - 1;
    v.lhs = numerator / q2m1;
    v.lhs_exact = numerator % q2m1 == 0;
    v.rhs = qgv_rhs_termwise(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d), q);
    v.beaten = numerator < v.rhs * q2m1;
    v.preconditions_met = n > k && k >= 2 && d >= 2 && (n - k) % 2 == 0;
    return v;
}

std::uint64_t qgv_threshold_d3(std::uint32_t q) {
    require_odd_prime_power(q);
    const BigInt Q(q);
    const BigInt q2 = Q * Q;
    const BigInt disc = 8 * q2 * q2 * q2 * q2 + q2 * q2 - 6 * q2 + 1;
    // n beats the bound iff 2(q^2-1)n - (q^2-3) > sqrt(disc), i.e. the left
    // side is positive and its square exceeds disc.
    const auto beats = [&](const BigInt& n) {
        const BigInt lhs = 2 * (q2 - 1) * n - (q2 - 3);
        return lhs > 0 && lhs * lhs > disc;
    };
    const BigInt root = boost::multiprecision::sqrt(disc);
    BigInt n = (q2 - 3 + root) / (2 * (q2 - 1));
    if (n > 1) n -= 1;
    while (beats(n - 1) && n > 1) n -= 1;
    while (!beats(n)) n += 1;
    return n.convert_to<std::uint64_t>();
}

namespace {

template <unsigned Digits>
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>>;

// ((d-1)^(d-1) q^2 / (q^2-1)^(d-1) * q^(2(d-1)(0.7 + ln(d-1))))^(1/(d-1)),
// evaluated through its logarithm.
template <unsigned Digits>
Real<Digits> gv_lower_real(std::uint32_t q, std::uint32_t d) {
    using R = Real<Digits>;
    const R r(d - 1);
    const R q2 = R(q) * R(q);
    const R c = R(7) / R(10) + boost::multiprecision::log(r);
    const R log_x = boost::multiprecision::log(r) +
                    (boost::multiprecision::log(q2) - r * boost::multiprecision::log(q2 - 1)) / r +
                    2 * c * boost::multiprecision::log(R(q));
    return boost::multiprecision::exp(log_x);
}

// Smallest even integer >= x, or nullopt when x sits too close to an even
// integer to decide at this precision.
template <unsigned Digits>
std::optional<std::uint64_t> even_ceiling(const Real<Digits>& x) {
    using R = Real<Digits>;
    const R half = x / 2;
    const R fl = boost::multiprecision::floor(half);
    const R frac = half - fl;
    const R tol = boost::multiprecision::pow(R(10), -static_cast<int>(Digits) / 2);
    if (frac < tol || (1 - frac) < tol) return std::nullopt;
    return 2 * (fl.template convert_to<std::uint64_t>() + 1);
}

}  // namespace

GvInterval gv_interval(std::uint32_t q, std::uint32_t d) {
    require_odd_prime_power(q);
    if (d < 5 || d > (q + 3) / 2)
        throw UsageError("d = " + std::to_string(d) + " outside [5, " + std::to_string((q + 3) / 2) + "]");

    GvInterval out;
    out.q = q;
    out.d = d;
    out.n_high = (std::uint64_t{q} * q - 1) * (std::uint64_t{q} * q - 1);

    const auto x50 = gv_lower_real<50>(q, d);
    std::ostringstream os;
    os.precision(12);
    os << x50;
    out.lower_bound = os.str();

    if (auto n = even_ceiling<50>(x50)) {
        out.n_low = *n;
    } else if (auto n2 = even_ceiling<150>(gv_lower_real<150>(q, d))) {
        out.n_low = *n2;
    } else if (auto n3 = even_ceiling<400>(gv_lower_real<400>(q, d))) {
        out.n_low = *n3;
    } else {
        throw InvariantViolation("GV interval endpoint undecidable at 400 digits");
    }
    return out;
}

std::optional<std::uint64_t> qgv_scan_threshold(std::uint32_t q, std::uint32_t d,
                                                const std::function<std::int64_t(std::uint64_t)>& k_of_n,
                                                LengthParity parity) {
    require_odd_prime_power(q);
    if (d < 3) throw UsageError("scan threshold needs d >= 3");
    const std::uint64_t n_max = (std::uint64_t{q} * q - 1) * (std::uint64_t{q} * q - 1);
    const std::uint64_t step = parity == LengthParity::kEven ? 2 : 1;
    const BigInt q2m1 = BigInt(q) * q - 1;

    std::optional<std::uint64_t> first_considered;
    std::optional<std::uint64_t> last_unbeaten;
    std::uint64_t last_considered = 0;
    for (std::uint64_t n = step; n <= n_max; n += step) {
        const std::int64_t k = k_of_n(n);
        if (k < 0 || k > static_cast<std::int64_t>(n)) continue;
        if (!first_considered) first_considered = n;
        last_considered = n;
        const BigInt numerator = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n - k + 2)) - 1;
        const bool beaten = numerator < qgv_rhs_horner(n, d, q) * q2m1;
        if (!beaten) last_unbeaten = n;
    }
    if (!first_considered) return std::nullopt;
    if (!last_unbeaten) return first_considered;
    if (*last_unbeaten == last_considered) return std::nullopt;
    std::uint64_t next = *last_unbeaten + step;
    while (true) {
        const std::int64_t k = k_of_n(next);
        if (k >= 0 && k <= static_cast<std::int64_t>(next)) return next;
        next += step;
    }
}

std::optional<std::uint64_t> qgv_scan_threshold(std::uint32_t q, std::uint32_t d, LengthParity parity) {
    const std::uint64_t delta = hyperbolic_count(q + 1, 2, d - 1);
    return qgv_scan_threshold(
        q, d, [delta](std::uint64_t n) { return static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(delta); },
        parity);
}

std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace gmcc
