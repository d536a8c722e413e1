#include "gmcc/lattice.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "gmcc/field.hpp"

namespace gmcc {

ExponentBox::ExponentBox(std::vector<std::uint32_t> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw UsageError("exponent box needs at least one variable");
    for (const std::uint32_t a : sizes_) {
        if (a == 0) throw UsageError("exponent box sizes must be positive");
        if (n_ > std::numeric_limits<std::uint64_t>::max() / a) throw UsageError("exponent box too large");
        n_ *= a;
    }
}

ExponentBox ExponentBox::for_code(std::uint32_t q, std::uint32_t lambda, std::span<const std::uint32_t> tail) {
    std::vector<std::uint32_t> sizes{lambda * (q + 1)};
    sizes.insert(sizes.end(), tail.begin(), tail.end());
    return ExponentBox(std::move(sizes));
}

bool ExponentBox::contains(const Exponent& e) const {
    if (e.size() != sizes_.size()) return false;
    for (std::size_t j = 0; j < e.size(); ++j)
        if (e[j] >= sizes_[j]) return false;
    return true;
}

std::uint64_t ExponentBox::index_of(const Exponent& e) const {
    if (!contains(e)) throw UsageError("exponent outside box");
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < e.size(); ++j) idx = idx * sizes_[j] + e[j];
    return idx;
}

Exponent ExponentBox::at(std::uint64_t index) const {
    if (index >= n_) throw UsageError("exponent index outside box");
    Exponent e(sizes_.size());
    for (std::size_t j = sizes_.size(); j-- > 0;) {
        e[j] = static_cast<std::uint32_t>(index % sizes_[j]);
        index /= sizes_[j];
    }
    return e;
}

void ExponentBox::for_each(const std::function<void(const Exponent&)>& fn) const {
    Exponent e(sizes_.size(), 0);
    for (std::uint64_t i = 0; i < n_; ++i) {
        fn(e);
        for (std::size_t j = sizes_.size(); j-- > 0;) {
            if (++e[j] < sizes_[j]) break;
            e[j] = 0;
        }
    }
}

std::strong_ordering lex_compare(const Exponent& e, const Exponent& f) {
    if (e.size() != f.size()) throw UsageError("exponent dimension mismatch");
    for (std::size_t j = 0; j < e.size(); ++j)
        if (e[j] != f[j]) return e[j] <=> f[j];
    return std::strong_ordering::equal;
}

namespace {

bool lex_less(const Exponent& a, const Exponent& b) { return lex_compare(a, b) < 0; }

}  // namespace

ExponentSet::ExponentSet(ExponentBox box, std::vector<Exponent> members)
    : box_(std::move(box)), members_(std::move(members)) {
    for (const auto& e : members_)
        if (!box_.contains(e)) throw UsageError("exponent set member outside box");
    std::sort(members_.begin(), members_.end(), lex_less);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ExponentSet::contains(const Exponent& e) const {
    return std::binary_search(members_.begin(), members_.end(), e, lex_less);
}

bool ExponentSet::is_subset_of(const ExponentSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end(), lex_less);
}

std::uint64_t dis(const ExponentBox& box, const Exponent& e) {
    if (!box.contains(e)) throw UsageError("exponent outside box");
    std::uint64_t d = 1;
    for (std::size_t j = 0; j < e.size(); ++j) d *= box.size(j) - e[j];
    return d;
}

std::uint64_t footprint_bound(const ExponentSet& delta) {
    if (delta.empty()) throw UsageError("footprint bound of an empty exponent set");
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (const auto& e : delta.members()) best = std::min(best, dis(delta.box(), e));
    return best;
}

ExponentSet build_e0(const ExponentBox& box, std::uint32_t q) {
    if (q % 2 == 0) throw UsageError("q must be odd");
    const std::uint32_t limit = (q - 1) / 2;
    std::vector<Exponent> members;
    box.for_each([&](const Exponent& e) {
        if (e[0] <= limit) members.push_back(e);
    });
    return ExponentSet(box, std::move(members));
}

namespace {

// Visits every in-box exponent with prod (e_j + 1) < t; the search never
// leaves the sub-box [0, t-2]^m.
void for_each_hyperbolic(const ExponentBox& box, std::uint32_t t, const std::function<void(const Exponent&)>& fn) {
    Exponent e(box.m(), 0);
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t j, std::uint64_t prod) {
        if (j == box.m()) {
            fn(e);
            return;
        }
        for (std::uint32_t v = 0; v < box.size(j) && prod * (v + 1) < t; ++v) {
            e[j] = v;
            rec(j + 1, prod * (v + 1));
        }
        e[j] = 0;
    };
    if (t > 1) rec(0, 1);
}

}  // namespace

ExponentSet build_delta_t(const ExponentBox& box, std::uint32_t q, std::uint32_t t) {
    if (q % 2 == 0) throw UsageError("q must be odd");
    if (t < 2 || t > (q + 3) / 2)
        throw UsageError("t = " + std::to_string(t) + " outside [2, " + std::to_string((q + 3) / 2) + "]");
    std::vector<Exponent> members;
    for_each_hyperbolic(box, t, [&](const Exponent& e) { members.push_back(e); });
    return ExponentSet(box, std::move(members));
}

std::uint64_t HyperbolicCounter::operator()(std::uint32_t m, std::uint64_t a) {
    if (m == 0) throw UsageError("V needs m >= 1");
    if (a == 0) return 0;
    if (m == 1) return std::min(a, b_);
    const auto key = std::make_pair(m, a);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::uint64_t total = 0;
    // Terms with s > a vanish because floor(a/s) = 0.
    for (std::uint64_t s = 1; s <= std::min(a, b_); ++s) total += (*this)(m - 1, a / s);
    memo_.emplace(key, total);
    return total;
}

std::uint64_t hyperbolic_count(std::uint64_t b, std::uint32_t m, std::uint64_t a) {
    HyperbolicCounter counter(b);
    return counter(m, a);
}

std::uint64_t delta_size(const ExponentBox& box, std::uint32_t t) {
    if (t < 2) throw UsageError("delta_size needs t >= 2");
    const auto& s = box.sizes();
    if (std::all_of(s.begin(), s.end(), [&](std::uint32_t a) { return a == s.front(); }))
        return hyperbolic_count(s.front(), static_cast<std::uint32_t>(box.m()), t - 1);
    std::uint64_t count = 0;
    for_each_hyperbolic(box, t, [&](const Exponent&) { ++count; });
    return count;
}

std::uint64_t delta_size_m2_closed(std::uint32_t t) {
    std::uint64_t total = 0;
    for (std::uint32_t j = 1; j + 1 <= t; ++j) total += (t - 1) / j;
    return total;
}

std::uint64_t delta_size_m3_closed(std::uint32_t t) {
    std::uint64_t total = 0;
    const std::uint64_t r = t - 1;
    for (std::uint64_t alpha = 1; alpha <= r; ++alpha)
        for (std::uint64_t beta = 1; beta <= r / alpha; ++beta) total += r / (alpha * beta);
    return total;
}

}  // namespace gmcc
