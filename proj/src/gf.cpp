/*
   Copyright 2026 The kummer-ag Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "kummer/gf.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "kummer/kernels.hpp"

namespace kummer {

namespace {

using Poly = std::vector<std::uint32_t>;  // over GF(p), low-to-high

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    // p is prime and small; Fermat
    std::uint64_t result = 1, base = a % p;
    std::uint32_t n = p - 2;
    while (n) {
        if (n & 1) result = result * base % p;
        base = base * base % p;
        n >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lead_inv = inv_mod_p(m.back(), p);
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * m[i] % p) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t n, const Poly& m, std::uint32_t p) {
    Poly result{1};
    base = poly_mod(std::move(base), m, p);
    while (n) {
        if (n & 1) result = poly_mulmod(result, base, m, p);
        base = poly_mulmod(base, base, m, p);
        n >>= 1;
    }
    return result;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
    Poly f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t e = f.size() - 1;
    if (e == 1) return true;
    const Poly x{0, 1};
    // x^(p^k) mod f by k repeated p-th powers
    auto frobenius_iterate = [&](std::size_t k) {
        Poly r = x;
        for (std::size_t i = 0; i < k; ++i) r = poly_powmod(r, p, f, p);
        return r;
    };
    if (poly_sub(frobenius_iterate(e), x, p).size() != 0) return false;
    for (std::uint64_t l : prime_factors(e)) {
        Poly g = poly_gcd(f, poly_sub(frobenius_iterate(e / l), x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

FieldPtr FiniteField::create(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (e < 1 || modulus.size() != e + 1 || modulus.back() != 1)
        throw Error(ErrorKind::BadModulusDegree, "modulus must be monic of degree e=" + std::to_string(e));
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxFieldSize) throw Error(ErrorKind::FieldTooLarge, "q = p^e exceeds 2^16");
    }
    for (auto c : modulus)
        if (c >= p) throw Error(ErrorKind::BadModulusDegree, "modulus digit out of range [0, p)");
    if (!is_irreducible(p, modulus)) throw Error(ErrorKind::NotIrreducible, "modulus is reducible over GF(p)");
    return FieldPtr(new FiniteField(p, e, std::move(modulus)));
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
    for (std::uint32_t i = 0; i < e; ++i) q_ *= p;
    order_ = q_ - 1;
    build_tables();
}

std::vector<std::uint32_t> FiniteField::digits(Elem a) const {
    std::vector<std::uint32_t> out(e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

Elem FiniteField::from_digits(std::span<const std::uint32_t> d) const {
    if (d.size() > e_) throw Error(ErrorKind::OutOfRange, "too many digits");
    Elem a = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] >= p_) throw Error(ErrorKind::OutOfRange, "digit out of range");
        a = a * p_ + d[i];
    }
    return a;
}

Elem FiniteField::decode(std::uint64_t k) const {
    if (k >= q_) throw Error(ErrorKind::OutOfRange, std::to_string(k) + " not in [0, " + std::to_string(q_) + ")");
    return static_cast<Elem>(k);
}

Elem FiniteField::from_int(std::int64_t n) const noexcept {
    const std::int64_t r = ((n % static_cast<std::int64_t>(p_)) + p_) % p_;
    return static_cast<Elem>(r);
}

Elem FiniteField::mul_by_polynomial(Elem a, Elem b) const {
    Poly pa = digits(a), pb = digits(b);
    trim(pa);
    trim(pb);
    Poly r = poly_mulmod(pa, pb, modulus_, p_);
    r.resize(e_, 0);
    return from_digits(r);
}

void FiniteField::build_tables() {
    auto slow_pow = [this](Elem a, std::uint64_t n) {
        Elem result = 1;
        while (n) {
            if (n & 1) result = mul_by_polynomial(result, a);
            a = mul_by_polynomial(a, a);
            n >>= 1;
        }
        return result;
    };

    Elem generator = 1;
    if (order_ > 1) {
        const auto factors = prime_factors(order_);
        for (Elem g = 2; g < q_; ++g) {
            bool primitive = true;
            for (auto l : factors) {
                if (slow_pow(g, order_ / l) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                generator = g;
                break;
            }
        }
    }

    exp_.assign(2 * static_cast<std::size_t>(order_), 0);
    log_.assign(q_, kNoLog);
    Elem cur = 1;
    for (std::uint32_t k = 0; k < order_; ++k) {
        exp_[k] = cur;
        exp_[k + order_] = cur;
        log_[cur] = k;
        cur = mul_by_polynomial(cur, generator);
    }

    if (p_ != 2) {
        auto add_digits = [this](Elem a, Elem b) {
            auto da = digits(a), db = digits(b);
            for (std::uint32_t i = 0; i < e_; ++i) da[i] = (da[i] + db[i]) % p_;
            return from_digits(da);
        };
        neg_.assign(q_, 0);
        for (Elem a = 0; a < q_; ++a) {
            auto d = digits(a);
            for (auto& c : d) c = (p_ - c) % p_;
            neg_[a] = from_digits(d);
        }
        zech_.assign(order_, kNoLog);
        for (std::uint32_t d = 0; d < order_; ++d) {
            const Elem s = add_digits(1, exp_[d]);
            zech_[d] = s == 0 ? kNoLog : log_[s];
        }
    }
}

Elem FiniteField::inv(Elem a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return exp_[(order_ - log_[a]) % order_];
}

Elem FiniteField::div(Elem a, Elem b) const {
    if (b == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
    if (a == 0) return 0;
    return exp_[log_[a] + order_ - log_[b]];
}

Elem FiniteField::pow(Elem a, std::int64_t n) const {
    if (a == 0) {
        if (n == 0) return 1;
        if (n < 0) throw Error(ErrorKind::DivisionByZero, "zero to a negative power");
        return 0;
    }
    const std::int64_t ord = order_;
    std::int64_t k = (static_cast<std::int64_t>(log_[a]) * (n % ord)) % ord;
    if (k < 0) k += ord;
    return exp_[static_cast<std::size_t>(k)];
}

std::string FiniteField::describe() const {
    std::ostringstream os;
    os << "GF(" << p_ << "^" << e_ << ") modulus=";
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
    return os.str();
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    if (value_ >= field_->q()) throw Error(ErrorKind::OutOfRange, "element codec out of range");
}

const FiniteField& FieldElement::checked(const FieldElement& rhs) const {
    if (!field_->same_as(*rhs.field_)) throw Error(ErrorKind::FieldMismatch, "operands belong to different fields");
    return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const { return {field_, checked(rhs).add(value_, rhs.value_)}; }
FieldElement FieldElement::operator-(const FieldElement& rhs) const { return {field_, checked(rhs).sub(value_, rhs.value_)}; }
FieldElement FieldElement::operator*(const FieldElement& rhs) const { return {field_, checked(rhs).mul(value_, rhs.value_)}; }
FieldElement FieldElement::operator/(const FieldElement& rhs) const { return {field_, checked(rhs).div(value_, rhs.value_)}; }

bool FieldElement::operator==(const FieldElement& rhs) const {
    checked(rhs);
    return value_ == rhs.value_;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.value(); }

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void Matrix::truncate_rows(std::size_t count) {
    if (count >= rows_) return;
    rows_ = count;
    data_.resize(rows_ * cols_);
}

EchelonForm rref(Matrix m) {
    auto pivots = kernels::parallel::rref_inplace(*m.field(), m.data(), m.rows(), m.cols());
    return {std::move(m), std::move(pivots)};
}

RankNullspace rank_and_nullspace(const Matrix& m) {
    auto [reduced, pivots] = rref(m);
    const std::size_t cols = m.cols();
    const std::size_t rank = pivots.size();
    const FiniteField& f = *m.field();

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    Matrix basis(m.field(), cols - rank, cols);
    std::size_t row = 0;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        basis.at(row, free) = 1;
        for (std::size_t i = 0; i < rank; ++i) basis.at(row, pivots[i]) = f.neg(reduced.at(i, free));
        ++row;
    }
    auto canonical = rref(std::move(basis));
    return {rank, std::move(canonical.reduced)};
}

Matrix multiply_transpose(const Matrix& a, const Matrix& b) {
    if (!a.field()->same_as(*b.field())) throw Error(ErrorKind::FieldMismatch, "matrices over different fields");
    if (a.cols() != b.cols()) throw Error(ErrorKind::OutOfRange, "column counts differ");
    const FiniteField& f = *a.field();
    Matrix out(a.field(), a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) {
            Elem acc = 0;
            for (std::size_t c = 0; c < a.cols(); ++c) acc = f.add(acc, f.mul(a.at(i, c), b.at(j, c)));
            out.at(i, j) = acc;
        }
    }
    return out;
}

}  // namespace kummer
