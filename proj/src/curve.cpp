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

#include "kummer/curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "kummer/kernels.hpp"

namespace kummer {

std::string RationalPlace::label() const {
    switch (kind) {
        case Kind::Infinity: return "Pinf";
        case Kind::Ramified: return "P" + std::to_string(index);
        case Kind::Affine: return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    }
    return {};
}

std::int64_t kummer_genus(std::int64_t m, std::int64_t r) {
    const std::int64_t twice = (r - 1) * (m - 1);
    if (twice % 2 != 0) throw Error(ErrorKind::InvariantViolated, "(r-1)(m-1) is odd");
    return twice / 2;
}

std::int64_t inverse_mod(std::int64_t u, std::int64_t m) {
    // extended Euclid on (u mod m, m)
    std::int64_t old_r = ((u % m) + m) % m, r = m, old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
    }
    if (old_r != 1) throw Error(ErrorKind::GcdViolation, "no inverse modulo " + std::to_string(m));
    return ((old_s % m) + m) % m;
}

LatticeParams LatticeParams::from(std::int64_t m, std::int64_t r) {
    if (m < 2) throw Error(ErrorKind::BadParameter, "m must be at least 2");
    if (r < 1) throw Error(ErrorKind::BadParameter, "f needs at least one root");
    if (std::gcd(m, r) != 1) throw Error(ErrorKind::GcdViolation, "gcd(m, r) != 1");
    LatticeParams p;
    p.m = m;
    p.r = r;
    p.a = m == 1 ? 0 : inverse_mod(r, m);
    p.b = (1 - p.a * r) / m;
    p.genus = kummer_genus(m, r);
    return p;
}

KummerCurve KummerCurve::create(FieldPtr field, std::int64_t m, std::int64_t lambda, std::vector<Elem> roots) {
    if (m < 2) throw Error(ErrorKind::BadParameter, "m must be at least 2");
    if (lambda < 1) throw Error(ErrorKind::BadParameter, "lambda must be positive");
    if (roots.empty()) throw Error(ErrorKind::BadParameter, "f needs at least one root");
    for (auto a : roots)
        if (a >= field->q()) throw Error(ErrorKind::OutOfRange, "root " + std::to_string(a) + " not in the field");
    {
        auto sorted = roots;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(ErrorKind::DuplicateRoots, "roots of f must be pairwise distinct");
    }
    if (std::gcd(static_cast<std::int64_t>(field->p()), m) != 1)
        throw Error(ErrorKind::CharacteristicDividesM, "gcd(p, m) != 1");
    const auto r = static_cast<std::int64_t>(roots.size());
    if (std::gcd(m, r * lambda) != 1)
        throw Error(ErrorKind::GcdViolation, "gcd(m, r*lambda) = gcd(" + std::to_string(m) + ", " +
                                                 std::to_string(r * lambda) + ") = " +
                                                 std::to_string(std::gcd(m, r * lambda)));

    KummerCurve c;
    c.field_ = std::move(field);
    c.m_ = m;
    c.lambda_ = lambda;
    c.roots_ = std::move(roots);
    c.genus_ = kummer_genus(m, r);
    c.A_ = inverse_mod(lambda, m);
    c.B_ = (1 - c.A_ * lambda) / m;
    c.a_ = inverse_mod(r, m);
    c.b_ = (1 - c.a_ * r) / m;
    if (c.A_ * lambda + c.B_ * m != 1 || c.a_ * r + c.b_ * m != 1)
        throw Error(ErrorKind::InvariantViolated, "Bezout identities do not hold");
    return c;
}

std::vector<Elem> KummerCurve::find_roots(const FiniteField& field, std::span<const Elem> coeffs) {
    std::size_t deg = coeffs.size();
    while (deg > 0 && coeffs[deg - 1] == 0) --deg;
    if (deg < 2) throw Error(ErrorKind::NotSplit, "f must have degree at least 1");
    if (coeffs[deg - 1] != 1) throw Error(ErrorKind::NotSplit, "f must be monic");
    for (std::size_t i = 0; i < deg; ++i)
        if (coeffs[i] >= field.q()) throw Error(ErrorKind::OutOfRange, "coefficient not in the field");
    std::vector<Elem> roots;
    for (Elem x = 0; x < field.q(); ++x) {
        Elem acc = 0;
        for (std::size_t i = deg; i-- > 0;) acc = field.add(field.mul(acc, x), coeffs[i]);
        if (acc == 0) roots.push_back(x);
    }
    if (roots.size() != deg - 1)
        throw Error(ErrorKind::NotSplit, "f has " + std::to_string(roots.size()) + " distinct roots in the field, degree " +
                                             std::to_string(deg - 1));
    return roots;
}

Elem KummerCurve::root(std::size_t mu) const {
    if (mu < 1 || mu > roots_.size()) throw Error(ErrorKind::IndexOutOfRange, "root index " + std::to_string(mu));
    return roots_[mu - 1];
}

Elem KummerCurve::f_at(Elem x) const {
    const FiniteField& f = *field_;
    Elem acc = 1;
    for (auto a : roots_) acc = f.mul(acc, f.sub(x, a));
    return acc;
}

Divisor KummerCurve::principal_divisor(CurveFunction fn, std::size_t index) const {
    const std::size_t n = roots_.size();
    const auto r = static_cast<std::int64_t>(n);
    switch (fn) {
        case CurveFunction::XMinusRoot: {
            if (index < 1 || index > n) throw Error(ErrorKind::IndexOutOfRange, "root index " + std::to_string(index));
            Divisor d = Divisor::zero(n);
            d.s[index - 1] = m_;
            d.t = -m_;
            return d;
        }
        case CurveFunction::Y: return {std::vector<std::int64_t>(n, lambda_), -r * lambda_};
        case CurveFunction::F: return {std::vector<std::int64_t>(n, m_), -r * m_};
        case CurveFunction::Z: return {std::vector<std::int64_t>(n, 1), -r};
    }
    return Divisor::zero(n);
}

std::vector<RationalPlace> KummerCurve::enumerate_places() const {
    const FiniteField& f = *field_;
    std::vector<Elem> rhs(f.q(), kernels::kNoValue);
    for (Elem x = 0; x < f.q(); ++x) {
        const Elem fx = f_at(x);
        if (fx != 0) rhs[x] = f.pow(fx, lambda_);
    }
    const auto affine = kernels::parallel::affine_points(f, rhs, static_cast<std::uint32_t>(m_));

    std::vector<RationalPlace> places;
    places.reserve(1 + roots_.size() + affine.size());
    places.push_back(RationalPlace::infinity());
    for (std::size_t mu = 1; mu <= roots_.size(); ++mu) places.push_back(RationalPlace::ramified(mu, roots_[mu - 1]));
    for (auto [x, y] : affine) places.push_back(RationalPlace::affine(x, y));
    return places;
}

std::string KummerCurve::describe() const {
    std::ostringstream os;
    os << "y^" << m_ << " = f(x)^" << lambda_ << " over " << field_->describe() << ", roots=";
    for (std::size_t i = 0; i < roots_.size(); ++i) os << (i ? "," : "") << roots_[i];
    return os.str();
}

}  // namespace kummer
