// Copyright 2026 The qreflect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QREFLECT_STATE_H
#define QREFLECT_STATE_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qreflect/errors.h"

namespace qreflect {

using cplx = std::complex<double>;

/// Maximum deviation of a state's squared norm from 1.
inline constexpr double kNormTolerance = 1e-10;

/// Maximum deviation of a reflection axis' norm from 1 before it is rejected.
inline constexpr double kAxisNormTolerance = 1e-8;

/// Size caps. Every allocation that scales with the register size is checked
/// against these.
struct Limits {
    /// Largest index register, in qubits. 24 qubits is 16M amplitudes (256 MiB).
    int max_qubits = 24;
    /// Largest dense matrix side used by the determinant analysis.
    size_t max_dense_dim = size_t{1} << 12;
};

/// Dense pure state over an N-dimensional index register.
///
/// Invariant: dim() >= 1 and the squared norm is 1 within kNormTolerance.
/// Construction from raw amplitudes checks the norm; states produced by the
/// library's norm-preserving operations are not re-checked.
class StateVector {
   public:
    /// Throws PreconditionError if `amplitudes` is empty or not unit-norm.
    explicit StateVector(std::vector<cplx> amplitudes);

    /// Rescales `amplitudes` to unit norm. Throws PreconditionError on a zero vector.
    static StateVector normalized(std::vector<cplx> amplitudes);

    /// Skips the norm check. For results of norm-preserving arithmetic only.
    static StateVector adopt(std::vector<cplx> amplitudes);

    size_t dim() const {
        return amps_.size();
    }
    std::span<const cplx> amplitudes() const {
        return amps_;
    }
    const cplx &operator[](size_t k) const {
        return amps_[k];
    }
    double norm_sq() const;

    /// Releases the amplitude buffer.
    std::vector<cplx> take() && {
        return std::move(amps_);
    }

    bool operator==(const StateVector &other) const = default;

   private:
    struct Unchecked {};
    StateVector(Unchecked, std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {
    }
    std::vector<cplx> amps_;
};

/// An unstructured search instance: register of n qubits, N = 2^n, and the
/// set of marked (solution) indices, which plays the role of f(x).
class SearchProblem {
   public:
    /// Throws CapacityError for n < 1 or n above the cap, and
    /// PreconditionError for an empty, duplicated, or out-of-range marked set.
    SearchProblem(int n, std::vector<uint64_t> marked, const Limits &limits = {});

    int n() const {
        return n_;
    }
    uint64_t N() const {
        return uint64_t{1} << n_;
    }
    uint64_t M() const {
        return marked_.size();
    }
    /// Sorted ascending.
    std::span<const uint64_t> marked() const {
        return marked_;
    }
    bool is_marked(uint64_t x) const;

   private:
    int n_;
    std::vector<uint64_t> marked_;
};

/// In-plane coordinates of a state relative to |alpha> (uniform over the
/// unmarked indices) and |beta> (uniform over the marked indices).
struct PlaneCoordinates {
    /// atan2 of the beta and alpha components after global phase alignment, in (-pi, pi].
    double angle;
    /// Norm of the part of the state orthogonal to span{alpha, beta}.
    double residual;
    /// <alpha|state> and <beta|state> before phase alignment.
    cplx alpha_overlap;
    cplx beta_overlap;
};

/// |psi> = N^{-1/2} sum_x |x>. Throws CapacityError if n is outside [1, limits.max_qubits].
StateVector uniform_superposition(int n, const Limits &limits = {});

/// |index> in a `dim`-dimensional space.
StateVector basis_state(size_t dim, size_t index);

/// sum_x conj(a_x) b_x. Throws ShapeError on a dimension mismatch.
cplx inner_product(const StateVector &a, const StateVector &b);

/// 2<axis|target> axis - target, i.e. (2|axis><axis| - I) applied to target.
/// Throws ShapeError on mismatched dims and PreconditionError if the axis norm
/// deviates from 1 by more than kAxisNormTolerance.
StateVector reflect_about(const StateVector &axis, const StateVector &target);

/// Flips the sign of every marked amplitude.
StateVector apply_oracle(const SearchProblem &problem, const StateVector &state);

/// Projects onto span{alpha, beta}.
///
/// Phase convention: the state is multiplied by exp(-i w), where w is the
/// phase of the larger of the two overlaps reduced modulo pi into
/// (-pi/2, pi/2]. Real-amplitude states are therefore left untouched, and the
/// returned angle covers the full circle, so rotation laws stay literal up to pi.
///
/// Throws DegeneratePlaneError when M = N, and ShapeError on a dimension mismatch.
PlaneCoordinates decompose_in_plane(const SearchProblem &problem, const StateVector &state);

/// sum over marked x of |a_x|^2.
double success_probability(const SearchProblem &problem, const StateVector &state);

}  // namespace qreflect

#endif
