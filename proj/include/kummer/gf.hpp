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

/*
   Exact arithmetic in GF(p^e), polynomial basis with a caller-supplied modulus.

   Elements are addressed by their codec integer sum(c_i * p^i), where c_i is
   the coefficient of x^i. All file formats and the raw arithmetic API use this
   integer directly; FieldElement wraps it together with its field for code that
   wants operator syntax and mismatch checking.

   Multiplication goes through log/antilog tables built from a primitive element
   found at construction. Addition is XOR in characteristic 2 and a Zech table
   otherwise.
*/

#ifndef KUMMER_GF_HPP
#define KUMMER_GF_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "kummer/error.hpp"

namespace kummer {

using Elem = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldSize = 1u << 16;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

class FiniteField {
   public:
    /// Validates p, e and the modulus (low-to-high base-p digits, length e+1, monic, irreducible).
    static FieldPtr create(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t e() const noexcept { return e_; }
    std::uint32_t q() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    Elem primitive() const noexcept { return exp_[q_ > 2 ? 1 : 0]; }

    bool same_as(const FiniteField& other) const noexcept {
        return this == &other || (p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_);
    }

    Elem add(Elem a, Elem b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (a == 0) return b;
        if (b == 0) return a;
        const std::uint32_t la = log_[a];
        std::uint32_t d = log_[b] + order_ - la;
        if (d >= order_) d -= order_;
        const std::uint32_t z = zech_[d];
        if (z == kNoLog) return 0;
        return exp_[la + z];
    }
    Elem neg(Elem a) const noexcept { return p_ == 2 ? a : neg_[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::int64_t n) const;

    /// The image of an integer in the prime subfield.
    Elem from_int(std::int64_t n) const noexcept;

    /// Checked codec: integer in [0, q) -> element (identity on the representation).
    Elem decode(std::uint64_t k) const;
    std::vector<std::uint32_t> digits(Elem a) const;
    Elem from_digits(std::span<const std::uint32_t> digits) const;

    /// Schoolbook product reduced by the modulus; independent of the tables.
    Elem mul_by_polynomial(Elem a, Elem b) const;

    std::string describe() const;

   private:
    static constexpr std::uint32_t kNoLog = 0xffffffffu;

    FiniteField(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);
    void build_tables();

    std::uint32_t p_;
    std::uint32_t e_;
    std::uint32_t q_;
    std::uint32_t order_;  // q - 1
    std::vector<std::uint32_t> modulus_;
    std::vector<Elem> exp_;            // length 2*(q-1), so log sums need no reduction
    std::vector<std::uint32_t> log_;   // log_[0] unused
    std::vector<std::uint32_t> zech_;  // odd p only: log(1 + g^d)
    std::vector<Elem> neg_;            // odd p only
};

bool is_prime(std::uint64_t n) noexcept;

/// Rabin's test over GF(p); coefficients low-to-high, must be monic.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

class FieldElement {
   public:
    FieldElement(FieldPtr field, Elem value);

    static FieldElement zero(FieldPtr field) { return {std::move(field), 0}; }
    static FieldElement one(FieldPtr field) { return {std::move(field), 1}; }

    Elem value() const noexcept { return value_; }
    const FieldPtr& field() const noexcept { return field_; }
    std::vector<std::uint32_t> coeffs() const { return field_->digits(value_); }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement operator-() const { return {field_, field_->neg(value_)}; }
    FieldElement inverse() const { return {field_, field_->inv(value_)}; }
    FieldElement pow(std::int64_t n) const { return {field_, field_->pow(value_, n)}; }

    bool operator==(const FieldElement& rhs) const;

   private:
    const FiniteField& checked(const FieldElement& rhs) const;

    FieldPtr field_;
    Elem value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

/// Dense row-major matrix over one field, entries stored as codec integers.
class Matrix {
   public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::vector<Elem>& data() noexcept { return data_; }
    const std::vector<Elem>& data() const noexcept { return data_; }

    static Matrix identity(FieldPtr field, std::size_t n);

    /// Keeps the first `count` rows.
    void truncate_rows(std::size_t count);

    bool operator==(const Matrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_ && field_->same_as(*rhs.field_);
    }

   private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

struct EchelonForm {
    Matrix reduced;                   // same shape as the input, zero rows at the bottom
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form; pivot = first nonzero entry scanning columns left to right, rows top-down.
EchelonForm rref(Matrix m);

struct RankNullspace {
    std::size_t rank;
    Matrix nullspace;  // (cols - rank) x cols, reduced echelon form
};

RankNullspace rank_and_nullspace(const Matrix& m);

/// a * b^T.
Matrix multiply_transpose(const Matrix& a, const Matrix& b);

}  // namespace kummer

#endif
