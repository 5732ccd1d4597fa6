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

#include <stdexcept>
#include <string>

namespace qne {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define QNE_DEFINE_ERROR(Name)                  \
    class Name : public Error {                 \
    public:                                     \
        using Error::Error;                     \
    }

QNE_DEFINE_ERROR(DimensionError);
QNE_DEFINE_ERROR(NormalizationError);
QNE_DEFINE_ERROR(OrthogonalityError);
QNE_DEFINE_ERROR(LabelError);
QNE_DEFINE_ERROR(NonFiniteError);
QNE_DEFINE_ERROR(UnitarityError);
QNE_DEFINE_ERROR(PreferenceError);
QNE_DEFINE_ERROR(GameDefinitionError);
QNE_DEFINE_ERROR(InvalidPlay);
QNE_DEFINE_ERROR(WeightError);
QNE_DEFINE_ERROR(NotBasisValued);
QNE_DEFINE_ERROR(InvalidBasisIndex);
QNE_DEFINE_ERROR(CriterionMismatch);
QNE_DEFINE_ERROR(NoEquilibrium);

#undef QNE_DEFINE_ERROR

/// Numerical tolerances shared by every module.
struct ToleranceConfig {
    /// Orthogonality, normalization and unitarity checks.
    double structural = 1e-9;
    /// Identities that only involve a global phase.
    double phase = 1e-12;
    /// Tie band for preference comparisons and equilibrium slack.
    double tie = 1e-9;
};

inline constexpr ToleranceConfig kDefaultTolerances{};

}  // namespace qne
