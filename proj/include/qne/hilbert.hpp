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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qne/errors.hpp"

namespace qne {

using Amplitude = std::complex<double>;

/// Normalized vector of complex amplitudes in a d-dimensional Hilbert space,
/// d >= 2. Instances are immutable; every constructor enforces the norm.
class StateVector {
public:
    /// Accepts amplitudes whose norm is already 1 within `tol`. Unnormalized
    /// input is rejected with NormalizationError rather than repaired.
    static StateVector from_amplitudes(std::vector<Amplitude> amps,
                                       double tol = kDefaultTolerances.structural);

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    static StateVector normalize(std::vector<Amplitude> amps);

    /// The computational basis vector |index> of dimension `dim`.
    static StateVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

    /// Euclidean norm of the stored amplitudes.
    double norm() const;

    /// This state multiplied by e^{i phase}.
    StateVector with_global_phase(double phase) const;

    friend bool operator==(const StateVector&, const StateVector&) = default;

private:
    explicit StateVector(std::vector<Amplitude> amps) : amps_(std::move(amps)) {}

    std::vector<Amplitude> amps_;
};

/// An angle between two rays, always within [0, pi/2].
class AngleRadians {
public:
    AngleRadians() = default;
    /// Clamps `value` into [0, pi/2].
    explicit AngleRadians(double value);

    double value() const { return value_; }

    friend auto operator<=>(const AngleRadians&, const AngleRadians&) = default;

private:
    double value_ = 0.0;
};

/// Labeled orthonormal family {b_1, ..., b_d} spanning the space.
class ObservableBasis {
public:
    std::size_t dim() const { return vectors_.size(); }
    const StateVector& vector(std::size_t i) const { return vectors_.at(i); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::span<const StateVector> vectors() const { return vectors_; }
    std::span<const std::string> labels() const { return labels_; }

    /// Index of `label`, or dim() when absent.
    std::size_t index_of(std::string_view label) const;

    /// Computational basis labeled b1..bd unless labels are supplied.
    static ObservableBasis computational(std::size_t dim,
                                         std::vector<std::string> labels = {});

private:
    friend ObservableBasis validate_basis(std::vector<StateVector>, std::vector<std::string>,
                                          double);

    ObservableBasis(std::vector<StateVector> vectors, std::vector<std::string> labels)
        : vectors_(std::move(vectors)), labels_(std::move(labels)) {}

    std::vector<StateVector> vectors_;
    std::vector<std::string> labels_;
};

/// Checks orthonormality, label uniqueness and completeness.
///
/// Throws DimensionError when the vector count differs from the vector
/// dimension, NormalizationError, OrthogonalityError or LabelError.
ObservableBasis validate_basis(std::vector<StateVector> vectors,
                               std::vector<std::string> labels,
                               double tol = kDefaultTolerances.structural);

/// <p, q>, conjugate-linear in the first argument.
Amplitude inner_product(const StateVector& p, const StateVector& q);

/// |<p, q>|, in [0, 1].
double fidelity(const StateVector& p, const StateVector& q);

/// arccos(fidelity(p, q)).
///
/// Evaluated as 2 asin(chord / 2) from the phase-aligned chord, which has the
/// same value but stays accurate for nearly parallel states where arccos loses
/// half the significant digits.
AngleRadians angle(const StateVector& p, const StateVector& q);

/// min over phi of ||p - e^{i phi} q|| = sqrt(2 - 2 fidelity) = 2 sin(theta / 2).
double chord_distance(const StateVector& p, const StateVector& q);

/// Born probabilities |<q, b_i>|^2 for each basis element.
std::vector<double> measurement_distribution(const StateVector& q, const ObservableBasis& basis);

/// Kronecker product; amplitude i * q.dim() + j is p_i q_j.
StateVector tensor(const StateVector& p, const StateVector& q);

/// True when p = e^{i phi} q for some phi, within `tol` on the chord distance.
bool equal_up_to_phase(const StateVector& p, const StateVector& q,
                       double tol = kDefaultTolerances.structural);

/// Dense row-major complex matrix used for strategy and circuit unitaries.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Builds from nested rows; every row must have the same length.
    static ComplexMatrix from_rows(const std::vector<std::vector<Amplitude>>& rows);
    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Amplitude& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Amplitude& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    std::vector<Amplitude> apply(std::span<const Amplitude> v) const;

    /// max |(U^dagger U - I)_{rc}|; infinity for non-square matrices.
    double unitarity_defect() const;
    bool is_unitary(double tol = kDefaultTolerances.structural) const {
        return unitarity_defect() <= tol;
    }

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Amplitude> data_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qne
