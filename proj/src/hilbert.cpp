// Copyright 2026 The qne Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qne/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

namespace qne {

namespace {

void require_finite(std::span<const Amplitude> amps) {
    for (const auto& a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw NonFiniteError("state amplitude is not finite");
        }
    }
}

void require_dim(std::size_t dim) {
    if (dim < 2) {
        throw DimensionError("state dimension must be at least 2, got " + std::to_string(dim));
    }
}

void require_same_dim(const StateVector& p, const StateVector& q) {
    if (p.dim() != q.dim()) {
        throw DimensionError("dimension mismatch: " + std::to_string(p.dim()) + " vs " +
                             std::to_string(q.dim()));
    }
}

double squared_norm(std::span<const Amplitude> amps) {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return s;
}

}  // namespace

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps, double tol) {
    require_dim(amps.size());
    require_finite(amps);
    const double n = std::sqrt(squared_norm(amps));
    if (std::abs(n - 1.0) > tol) {
        throw NormalizationError("state norm " + std::to_string(n) + " differs from 1");
    }
    return StateVector(std::move(amps));
}

StateVector StateVector::normalize(std::vector<Amplitude> amps) {
    require_dim(amps.size());
    require_finite(amps);
    const double n = std::sqrt(squared_norm(amps));
    if (n == 0.0) throw NormalizationError("cannot normalize the zero vector");
    for (auto& a : amps) a /= n;
    return StateVector(std::move(amps));
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    require_dim(dim);
    if (index >= dim) throw DimensionError("basis index out of range");
    std::vector<Amplitude> amps(dim);
    amps[index] = 1.0;
    return StateVector(std::move(amps));
}

double StateVector::norm() const { return std::sqrt(squared_norm(amps_)); }

StateVector StateVector::with_global_phase(double phase) const {
    const Amplitude factor = std::polar(1.0, phase);
    std::vector<Amplitude> out(amps_);
    for (auto& a : out) a *= factor;
    return StateVector(std::move(out));
}

AngleRadians::AngleRadians(double value)
    : value_(std::clamp(value, 0.0, std::numbers::pi / 2)) {}

std::size_t ObservableBasis::index_of(std::string_view label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    return static_cast<std::size_t>(it - labels_.begin());
}

ObservableBasis ObservableBasis::computational(std::size_t dim, std::vector<std::string> labels) {
    require_dim(dim);
    if (labels.empty()) {
        for (std::size_t i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i + 1));
    }
    std::vector<StateVector> vectors;
    for (std::size_t i = 0; i < dim; ++i) vectors.push_back(StateVector::basis(dim, i));
    return validate_basis(std::move(vectors), std::move(labels));
}

ObservableBasis validate_basis(std::vector<StateVector> vectors, std::vector<std::string> labels,
                               double tol) {
    const std::size_t count = vectors.size();
    for (std::size_t i = 0; i < count; ++i) {
        if (vectors[i].dim() != count) {
            throw DimensionError("basis vector " + std::to_string(i) + " has dimension " +
                                 std::to_string(vectors[i].dim()) + " but the basis has " +
                                 std::to_string(count) + " vectors");
        }
    }
    if (labels.size() != count) {
        throw LabelError("basis has " + std::to_string(count) + " vectors but " +
                         std::to_string(labels.size()) + " labels");
    }
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (l.empty()) throw LabelError("basis label is empty");
        if (!seen.insert(l).second) throw LabelError("duplicate basis label '" + l + "'");
    }
    for (std::size_t i = 0; i < count; ++i) {
        if (std::abs(std::abs(inner_product(vectors[i], vectors[i])) - 1.0) > tol) {
            throw NormalizationError("basis vector '" + labels[i] + "' is not normalized");
        }
        for (std::size_t j = i + 1; j < count; ++j) {
            if (std::abs(inner_product(vectors[i], vectors[j])) > tol) {
                throw OrthogonalityError("basis vectors '" + labels[i] + "' and '" + labels[j] +
                                         "' are not orthogonal");
            }
        }
    }
    return ObservableBasis(std::move(vectors), std::move(labels));
}

Amplitude inner_product(const StateVector& p, const StateVector& q) {
    require_same_dim(p, q);
    // Expanded by hand so that <q,p> is bitwise the conjugate of <p,q>.
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        const double a = p[i].real(), b = p[i].imag();
        const double c = q[i].real(), d = q[i].imag();
        re += a * c + b * d;
        im += a * d - b * c;
    }
    return {re, im};
}

double fidelity(const StateVector& p, const StateVector& q) {
    return std::min(1.0, std::abs(inner_product(p, q)));
}

double chord_distance(const StateVector& p, const StateVector& q) {
    const Amplitude ip = inner_product(p, q);
    const double f = std::abs(ip);
    // e^{i phi} maximizing Re(e^{i phi} <p,q>).
    const Amplitude align = f > 0.0 ? std::conj(ip) / f : Amplitude(1.0);
    double s = 0.0;
    for (std::size_t i = 0; i < p.dim(); ++i) s += std::norm(p[i] - align * q[i]);
    return std::min(std::sqrt(s), std::numbers::sqrt2);
}

AngleRadians angle(const StateVector& p, const StateVector& q) {
    return AngleRadians(2.0 * std::asin(chord_distance(p, q) / 2.0));
}

std::vector<double> measurement_distribution(const StateVector& q, const ObservableBasis& basis) {
    if (q.dim() != basis.dim()) {
        throw DimensionError("state dimension " + std::to_string(q.dim()) +
                             " does not match basis dimension " + std::to_string(basis.dim()));
    }
    std::vector<double> out;
    out.reserve(basis.dim());
    for (const auto& b : basis.vectors()) out.push_back(std::min(1.0, std::norm(inner_product(b, q))));
    return out;
}

StateVector tensor(const StateVector& p, const StateVector& q) {
    std::vector<Amplitude> out;
    out.reserve(p.dim() * q.dim());
    for (const auto& a : p.amplitudes()) {
        for (const auto& b : q.amplitudes()) out.push_back(a * b);
    }
    return StateVector::normalize(std::move(out));
}

bool equal_up_to_phase(const StateVector& p, const StateVector& q, double tol) {
    return p.dim() == q.dim() && chord_distance(p, q) <= tol;
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<Amplitude>>& rows) {
    if (rows.empty()) return {};
    ComplexMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw DimensionError("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols_; ++c) {
            const auto& a = rows[r][c];
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
                throw NonFiniteError("matrix entry is not finite");
            }
            m(r, c) = a;
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
    }
    return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
    ComplexMatrix m(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Amplitude a = (*this)(r, k);
            if (a == Amplitude{}) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) m(r, c) += a * rhs(k, c);
        }
    }
    return m;
}

std::vector<Amplitude> ComplexMatrix::apply(std::span<const Amplitude> v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
    std::vector<Amplitude> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Amplitude s{};
        for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

double ComplexMatrix::unitarity_defect() const {
    if (!square() || rows_ == 0) return std::numeric_limits<double>::infinity();
    const ComplexMatrix g = adjoint() * (*this);
    double worst = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const Amplitude expected = r == c ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(g(r, c) - expected));
        }
    }
    return worst;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Amplitude x = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    m(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
                }
            }
        }
    }
    return m;
}

}  // namespace qne
