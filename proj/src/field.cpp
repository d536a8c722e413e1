#include "gmcc/field.hpp"

#include <algorithm>
#include <numeric>

namespace gmcc {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_decomposition(std::uint64_t q) {
    if (q < 2) return {0, 0};
    const auto f = prime_factors(q);
    if (f.size() != 1) return {0, 0};
    std::uint32_t s = 0;
    while (q > 1) {
        q /= f[0];
        ++s;
    }
    return {static_cast<std::uint32_t>(f[0]), s};
}

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficient of X^i at [i]

// Remainder of a modulo monic b over GF(p); both low-degree first.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        if (lead != 0) {
            for (std::size_t i = 0; i <= db; ++i)
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - (std::uint64_t{lead} * b[i]) % p) % p);
        }
        a.pop_back();
    }
    return a;
}

bool all_zero(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            g[d] = 1;
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            if (all_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

}  // namespace

FieldPtr make_field(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) throw UsageError("field characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw UsageError("extension degree must be at least 1");
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        size *= p;
        if (size > Field::kMaxSize)
            throw UsageError("field size " + std::to_string(p) + "^" + std::to_string(k) +
                             " exceeds the 2^20 table budget");
    }

    std::shared_ptr<Field> field(new Field());
    field->p_ = p;
    field->k_ = k;
    field->size_ = static_cast<std::uint32_t>(size);
    if (k % 2 == 0) {
        std::uint32_t q = 1;
        for (std::uint32_t i = 0; i < k / 2; ++i) q *= p;
        field->q_ = q;
    }
    const std::uint32_t order = field->size_ - 1;

    // Lex order over (c_{k-1}, ..., c_0): c_0 is the least significant digit.
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        Poly f(k + 1, 0);
        f[k] = 1;
        std::uint64_t v = idx;
        for (std::uint32_t i = 0; i < k; ++i) {
            f[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        if (!is_irreducible(f, p)) continue;

        // Powers of X as packed indices, stopping early if X is not primitive.
        std::vector<std::uint32_t> exp(order);
        std::vector<std::uint32_t> cur(k, 0);
        cur[0] = 1;
        bool primitive = true;
        for (std::uint32_t i = 0; i < order; ++i) {
            std::uint32_t packed = 0;
            for (std::uint32_t j = k; j-- > 0;) packed = packed * p + cur[j];
            if (packed == 0 || (i > 0 && packed == 1)) {
                primitive = false;
                break;
            }
            exp[i] = packed;
            const std::uint32_t top = cur[k - 1];
            for (std::uint32_t j = k - 1; j > 0; --j) cur[j] = static_cast<std::uint32_t>((cur[j - 1] + p - (std::uint64_t{top} * f[j]) % p) % p);
            cur[0] = static_cast<std::uint32_t>((p - (std::uint64_t{top} * f[0]) % p) % p);
        }
        if (!primitive) continue;

        field->modulus_.assign(f.rbegin(), f.rend());
        field->exp_ = std::move(exp);
        field->log_.assign(size, Element::kZero);
        for (std::uint32_t i = 0; i < order; ++i) field->log_[field->exp_[i]] = i;

        // zech_[i] = log(1 + g^i); adding 1 bumps only the constant coefficient.
        field->zech_.assign(order, Element::kZero);
        for (std::uint32_t i = 0; i < order; ++i) {
            const std::uint32_t x = field->exp_[i];
            const std::uint32_t c0 = x % p;
            const std::uint32_t y = x - c0 + (c0 + 1) % p;
            field->zech_[i] = y == 0 ? Element::kZero : field->log_[y];
        }
        return field;
    }
    throw InvariantViolation("no primitive monic irreducible polynomial found");
}

std::uint32_t Field::sqrt_size() const {
    if (k_ % 2 != 0) throw UsageError("field is not a quadratic extension GF(q^2)");
    return q_;
}

Element Field::neg(Element a) const {
    if (a.is_zero() || p_ == 2) return a;
    return Element{static_cast<std::uint32_t>((std::uint64_t{a.log} + order() / 2) % order())};
}

Element Field::add(Element a, Element b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // g^a + g^b = g^a (1 + g^(b-a))
    const std::uint32_t n = order();
    const std::uint32_t diff = b.log >= a.log ? b.log - a.log : b.log + n - a.log;
    const std::uint32_t z = zech_[diff];
    if (z == Element::kZero) return Element::zero();
    return Element{static_cast<std::uint32_t>((std::uint64_t{a.log} + z) % n)};
}

Element Field::mul(Element a, Element b) const {
    if (a.is_zero() || b.is_zero()) return Element::zero();
    return Element{static_cast<std::uint32_t>((std::uint64_t{a.log} + b.log) % order())};
}

Element Field::inv(Element a) const {
    if (a.is_zero()) throw UsageError("inversion of zero");
    return Element{a.log == 0 ? 0 : order() - a.log};
}

Element Field::pow(Element a, std::uint64_t e) const {
    if (e == 0) return Element::one();
    if (a.is_zero()) return Element::zero();
    const std::uint64_t n = order();
    return Element{static_cast<std::uint32_t>(((a.log % n) * (e % n)) % n)};
}

Element Field::conj(Element a) const { return pow(a, sqrt_size()); }

Element Field::root_of_unity(std::uint64_t t) const {
    if (t == 0 || order() % t != 0)
        throw UsageError("root of unity order " + std::to_string(t) + " does not divide " +
                         std::to_string(order()));
    return Element{static_cast<std::uint32_t>((order() / t) % order())};
}

std::uint64_t Field::multiplicative_order(Element a) const {
    if (a.is_zero()) throw UsageError("zero has no multiplicative order");
    return order() / std::gcd<std::uint64_t, std::uint64_t>(a.log, order());
}

std::uint32_t Field::to_index(Element a) const { return a.is_zero() ? 0 : exp_[a.log]; }

Element Field::from_index(std::uint32_t index) const {
    if (index >= size_) throw UsageError("field index out of range");
    return Element{log_[index]};
}

Element Field::from_int(std::int64_t v) const {
    const std::int64_t r = ((v % p_) + p_) % p_;
    return from_index(static_cast<std::uint32_t>(r));
}

std::vector<Element> Field::elements() const {
    std::vector<Element> out;
    out.reserve(size_);
    for (std::uint32_t i = 0; i < size_; ++i) out.push_back(Element{log_[i]});
    return out;
}

std::vector<Element> solve_qplus1_power_eq_minus_one(const Field& f) {
    const std::uint32_t q = f.sqrt_size();
    if (q % 2 == 0) throw UsageError("x^(q+1) = -1 requires odd q");
    const Element target = f.minus_one();
    std::vector<Element> out;
    for (std::uint32_t i = 0; i < f.order(); ++i) {
        const Element x{i};
        if (f.pow(x, q + 1) == target) out.push_back(x);
    }
    return out;
}

BoundElement::BoundElement(FieldPtr field, Element value) : field_(std::move(field)), value_(value) {
    if (!field_) throw UsageError("element has no field");
    if (!field_->contains(value_)) throw UsageError("element does not belong to its field");
}

const Field& BoundElement::same_field(const BoundElement& o) const {
    if (field_ != o.field_) throw UsageError("operands belong to different fields");
    return *field_;
}

BoundElement BoundElement::operator+(const BoundElement& o) const {
    return {field_, same_field(o).add(value_, o.value_)};
}
BoundElement BoundElement::operator-(const BoundElement& o) const {
    return {field_, same_field(o).sub(value_, o.value_)};
}
BoundElement BoundElement::operator*(const BoundElement& o) const {
    return {field_, same_field(o).mul(value_, o.value_)};
}
BoundElement BoundElement::operator/(const BoundElement& o) const {
    return {field_, same_field(o).div(value_, o.value_)};
}
BoundElement BoundElement::operator-() const { return {field_, field_->neg(value_)}; }
BoundElement BoundElement::inv() const { return {field_, field_->inv(value_)}; }
BoundElement BoundElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
BoundElement BoundElement::conj() const { return {field_, field_->conj(value_)}; }

}  // namespace gmcc
