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

#include "qreflect/no_reflection.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <unsupported/Eigen/KroneckerProduct>

namespace qreflect {

OverlapConstraint implied_control_overlaps(cplx c) {
    const double mag = std::abs(c);
    if (!(mag <= 1.0 + 1e-12)) {
        throw PreconditionError("|c| = " + std::to_string(mag) + " exceeds 1");
    }
    const double m2 = mag * mag;
    OverlapConstraint out{c, std::nullopt, std::nullopt, std::nullopt};
    if (std::abs(m2 - 0.5) > kSingularTolerance) {
        out.t1 = c / (2.0 * m2 - 1.0);
    }
    if (std::abs(m2 - 0.75) > kSingularTolerance) {
        out.t2 = c / (4.0 * m2 - 3.0);
    }
    if (out.t1 && out.t2) {
        out.discrepancy = std::abs(*out.t1 - *out.t2);
    }
    return out;
}

std::vector<ScanPoint> consistency_scan(int resolution) {
    if (resolution < 10) {
        throw PreconditionError("scan resolution must be at least 10");
    }
    std::vector<double> grid;
    grid.reserve(resolution + 3);
    for (int i = 0; i <= resolution; i++) {
        grid.push_back(static_cast<double>(i) / resolution);
    }
    grid.push_back(1.0 / std::numbers::sqrt2);
    grid.push_back(std::numbers::sqrt3 / 2.0);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<ScanPoint> out;
    out.reserve(grid.size());
    for (double a : grid) {
        out.push_back(ScanPoint{a, implied_control_overlaps(cplx{a, 0.0})});
    }
    return out;
}

std::vector<double> consistency_zero_set(const std::vector<ScanPoint> &scan, double tolerance) {
    std::vector<double> zeros;
    for (const auto &p : scan) {
        if (p.constraint.discrepancy && *p.constraint.discrepancy < tolerance) {
            zeros.push_back(p.abs_c);
        }
    }
    return zeros;
}

std::vector<ReflectionSample> make_samples(const std::vector<StateVector> &controls,
                                           const std::vector<StateVector> &targets) {
    std::vector<ReflectionSample> out;
    out.reserve(controls.size() * targets.size());
    for (const auto &chi : controls) {
        for (const auto &phi : targets) {
            if (chi.dim() != phi.dim() || chi.dim() != controls.front().dim()) {
                throw ShapeError("control and target states must share one dimension");
            }
            out.push_back(ReflectionSample{chi, phi});
        }
    }
    return out;
}

std::vector<StateVector> spanning_targets(size_t d) {
    std::vector<StateVector> out;
    for (size_t j = 0; j < d; j++) {
        out.push_back(basis_state(d, j));
    }
    const double h = 1.0 / std::numbers::sqrt2;
    for (size_t j = 1; j < d; j++) {
        std::vector<cplx> plus(d), iplus(d);
        plus[0] = h;
        plus[j] = h;
        iplus[0] = h;
        iplus[j] = cplx{0, h};
        out.push_back(StateVector::adopt(std::move(plus)));
        out.push_back(StateVector::adopt(std::move(iplus)));
    }
    return out;
}

double unitarity_defect(const Matrix &u) {
    Matrix g = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
    return g.cwiseAbs().maxCoeff();
}

namespace {

Vector to_eigen(const StateVector &s) {
    Vector v(s.dim());
    for (size_t k = 0; k < s.dim(); k++) {
        v[k] = s[k];
    }
    return v;
}

/// Per-sample data: the bipartite input and the desired reflected target.
struct PreparedSample {
    Vector input;
    Vector desired;
};

std::vector<PreparedSample> prepare(const std::vector<ReflectionSample> &samples, size_t &d_out) {
    if (samples.empty()) {
        throw PreconditionError("at least one sample is required");
    }
    const size_t d = samples.front().control.dim();
    std::vector<PreparedSample> out;
    out.reserve(samples.size());
    for (const auto &s : samples) {
        if (s.control.dim() != d || s.target.dim() != d) {
            throw ShapeError("control and target states must share one dimension");
        }
        Vector chi = to_eigen(s.control);
        Vector phi = to_eigen(s.target);
        Vector input(d * d);
        for (size_t c = 0; c < d; c++) {
            input.segment(c * d, d) = chi[c] * phi;
        }
        Vector desired = 2.0 * chi.dot(phi) * chi - phi;
        // A reflection maps unit vectors to unit vectors.
        double n = desired.norm();
        if (!(std::abs(n - 1.0) < 1e-8)) {
            throw PreconditionError("reflected target lost normalization");
        }
        out.push_back(PreparedSample{std::move(input), desired / n});
    }
    d_out = d;
    return out;
}

/// <r| Tr_control(U|in><in|U^dagger) |r> = sum_c |sum_t conj(r_t) v_{c d + t}|^2.
double sample_fidelity(const Matrix &u, const PreparedSample &s, size_t d, Vector *projected) {
    Vector v = u * s.input;
    double f = 0;
    if (projected != nullptr) {
        projected->resize(d * d);
    }
    for (size_t c = 0; c < d; c++) {
        cplx w = s.desired.dot(v.segment(c * d, d));
        f += std::norm(w);
        if (projected != nullptr) {
            projected->segment(c * d, d) = w * s.desired;
        }
    }
    return f;
}

double residual_of(const Matrix &u, const std::vector<PreparedSample> &samples, size_t d) {
    double total = 0;
    for (const auto &s : samples) {
        total += sample_fidelity(u, s, d, nullptr);
    }
    return 1.0 - total / static_cast<double>(samples.size());
}

Matrix gradient_of(const Matrix &u, const std::vector<PreparedSample> &samples, size_t d) {
    // Euclidean derivative of the residual w.r.t. conj(U):
    //   E = -(1/S) sum_s (P_s U in_s) in_s^dagger,  P_s = I (x) |r_s><r_s|.
    const auto dim = static_cast<Eigen::Index>(d * d);
    Matrix e = Matrix::Zero(dim, dim);
    Vector projected;
    for (const auto &s : samples) {
        sample_fidelity(u, s, d, &projected);
        e.noalias() -= projected * s.input.adjoint();
    }
    e /= static_cast<double>(samples.size());
    Matrix eu = e * u.adjoint();
    return eu - eu.adjoint();
}

double real_inner(const Matrix &a, const Matrix &b) {
    return (a.conjugate().cwiseProduct(b)).sum().real();
}

void check_machine(const Matrix &u, size_t d) {
    const auto dim = static_cast<Eigen::Index>(d * d);
    if (u.rows() != dim || u.cols() != dim) {
        throw PreconditionError("machine must be a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    }
    if (!(unitarity_defect(u) <= kUnitarityTolerance)) {
        throw PreconditionError("machine is not unitary within tolerance");
    }
}

/// Orthogonal basis of anti-Hermitian dim x dim matrices.
std::vector<Matrix> antihermitian_basis(Eigen::Index dim) {
    std::vector<Matrix> basis;
    for (Eigen::Index j = 0; j < dim; j++) {
        Matrix x = Matrix::Zero(dim, dim);
        x(j, j) = cplx{0, 1};
        basis.push_back(x);
        for (Eigen::Index k = j + 1; k < dim; k++) {
            Matrix re = Matrix::Zero(dim, dim);
            re(j, k) = 1;
            re(k, j) = -1;
            basis.push_back(re);
            Matrix im = Matrix::Zero(dim, dim);
            im(j, k) = cplx{0, 1};
            im(k, j) = cplx{0, 1};
            basis.push_back(im);
        }
    }
    return basis;
}

}  // namespace

double reflection_residual(const Matrix &u, const std::vector<ReflectionSample> &samples) {
    size_t d = 0;
    auto prepared = prepare(samples, d);
    check_machine(u, d);
    return residual_of(u, prepared, d);
}

Matrix single_control_machine(const StateVector &chi) {
    const auto d = static_cast<Eigen::Index>(chi.dim());
    Vector c = to_eigen(chi);
    Matrix refl = 2.0 * c * c.adjoint() - Matrix::Identity(d, d);
    Matrix out = Matrix::Zero(d * d, d * d);
    for (Eigen::Index k = 0; k < d; k++) {
        out.block(k * d, k * d, d, d) = refl;
    }
    return out;
}

Matrix controlled_reflection_machine(const std::vector<StateVector> &orthonormal_controls) {
    if (orthonormal_controls.empty()) {
        throw PreconditionError("need at least one control state");
    }
    const auto d = static_cast<Eigen::Index>(orthonormal_controls.front().dim());
    std::vector<Vector> es;
    for (const auto &s : orthonormal_controls) {
        if (static_cast<Eigen::Index>(s.dim()) != d) {
            throw ShapeError("control states must share one dimension");
        }
        es.push_back(to_eigen(s));
    }
    for (size_t i = 0; i < es.size(); i++) {
        for (size_t j = 0; j < i; j++) {
            if (std::abs(es[i].dot(es[j])) > 1e-10) {
                throw PreconditionError("control states are not orthogonal");
            }
        }
    }
    const Matrix id = Matrix::Identity(d, d);
    Matrix rest = id;
    Matrix out = Matrix::Zero(d * d, d * d);
    for (const auto &e : es) {
        Matrix proj = e * e.adjoint();
        rest -= proj;
        out += Eigen::kroneckerProduct(proj, Matrix(2.0 * proj - id));
    }
    out += Eigen::kroneckerProduct(rest, id);
    return out;
}

Matrix residual_gradient(const Matrix &u, const std::vector<ReflectionSample> &samples) {
    size_t d = 0;
    auto prepared = prepare(samples, d);
    check_machine(u, d);
    return gradient_of(u, prepared, d);
}

namespace {

Matrix numeric_gradient_of(const Matrix &u, const std::vector<PreparedSample> &samples, size_t d, double step) {
    const Eigen::Index dim = u.rows();
    Matrix g = Matrix::Zero(dim, dim);
    for (const auto &x : antihermitian_basis(dim)) {
        double up = residual_of(expm_antihermitian(step * x) * u, samples, d);
        double down = residual_of(expm_antihermitian(-step * x) * u, samples, d);
        double slope = (up - down) / (2 * step);
        g += (slope / x.squaredNorm()) * x;
    }
    return g;
}

}  // namespace

Matrix residual_gradient_numeric(const Matrix &u, const std::vector<ReflectionSample> &samples, double step) {
    size_t d = 0;
    auto prepared = prepare(samples, d);
    check_machine(u, d);
    return numeric_gradient_of(u, prepared, d, step);
}

Matrix random_unitary(size_t dim, uint64_t seed, uint64_t stream) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(stream),
                      static_cast<uint32_t>(stream >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    const auto n = static_cast<Eigen::Index>(dim);
    Matrix z(n, n);
    for (Eigen::Index j = 0; j < n; j++) {
        for (Eigen::Index i = 0; i < n; i++) {
            double re = normal(rng);
            double im = normal(rng);
            z(i, j) = cplx{re, im};
        }
    }
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fixing the phases of R's diagonal makes Q Haar-distributed.
    for (Eigen::Index j = 0; j < n; j++) {
        cplx diag = r(j, j);
        double mag = std::abs(diag);
        q.col(j) *= mag > 0 ? diag / mag : cplx{1, 0};
    }
    return q;
}

Matrix expm_antihermitian(const Matrix &x) {
    Matrix h = cplx{0, -1} * x;
    h = 0.5 * (h + h.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
    const Matrix &v = eig.eigenvectors();
    Vector phases(v.cols());
    for (Eigen::Index k = 0; k < v.cols(); k++) {
        phases[k] = std::polar(1.0, eig.eigenvalues()[k]);
    }
    return v * phases.asDiagonal() * v.adjoint();
}

Matrix project_to_unitary(const Matrix &m) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

namespace {

struct Iterate {
    Matrix u;
    double residual;
    Matrix grad;
};

StartOutcome minimize_from(Matrix &u, const std::vector<PreparedSample> &samples, size_t d,
                           const OptimizerOptions &opt) {
    auto grad_at = [&](const Matrix &m) {
        return opt.gradient == GradientMode::Analytic ? gradient_of(m, samples, d)
                                                      : numeric_gradient_of(m, samples, d, 1e-6);
    };
    Iterate cur{u, residual_of(u, samples, d), grad_at(u)};
    Matrix dir = -cur.grad;
    double step = 0.5;
    const Eigen::Index dim = u.rows();
    const int restart_every = static_cast<int>(dim * dim);

    int it = 0;
    bool converged = false;
    for (; it < opt.max_iterations; it++) {
        const double gnorm2 = cur.grad.squaredNorm();
        if (std::sqrt(gnorm2) < opt.gradient_tolerance || cur.residual < opt.residual_target) {
            converged = true;
            break;
        }
        double slope = real_inner(cur.grad, dir);
        if (!(slope < 0) || it % restart_every == 0) {
            dir = -cur.grad;
            slope = -gnorm2;
        }

        // Armijo backtracking along the geodesic exp(t dir) U.
        double t = step;
        Matrix trial;
        double trial_residual = 0;
        bool accepted = false;
        for (int k = 0; k < 60; k++) {
            trial = project_to_unitary(expm_antihermitian(t * dir) * cur.u);
            trial_residual = residual_of(trial, samples, d);
            if (trial_residual <= cur.residual + 1e-4 * t * slope) {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) {
            // No descent left at double precision.
            converged = std::sqrt(gnorm2) < 1e3 * opt.gradient_tolerance;
            break;
        }
        Matrix next_grad = grad_at(trial);
        // Polak-Ribiere+, with tangent vectors kept in the Lie algebra so no transport is needed.
        double beta = std::max(0.0, real_inner(next_grad, next_grad - cur.grad) / gnorm2);
        dir = -next_grad + beta * dir;
        cur = Iterate{std::move(trial), trial_residual, std::move(next_grad)};
        step = std::min(4.0 * t, 4.0);
    }
    u = cur.u;
    return StartOutcome{cur.residual, it, converged};
}

}  // namespace

ReflectionMachineResult optimize_reflection_machine(size_t d, const std::vector<StateVector> &controls,
                                                    const std::vector<StateVector> &targets,
                                                    const OptimizerOptions &options) {
    if (d < 2) {
        throw PreconditionError("reflection machine dimension must be at least 2");
    }
    if (controls.empty() || targets.empty()) {
        throw PreconditionError("need at least one control and one target state");
    }
    if (options.starts < 1) {
        throw PreconditionError("need at least one optimizer start");
    }
    for (const auto &s : controls) {
        if (s.dim() != d) {
            throw ShapeError("control dimension does not match d");
        }
    }
    size_t prepared_d = 0;
    auto prepared = prepare(make_samples(controls, targets), prepared_d);

    ReflectionMachineResult result;
    result.d = d;
    result.starts = options.starts;
    result.seed = options.seed;
    for (size_t i = 0; i < controls.size(); i++) {
        for (size_t j = i + 1; j < controls.size(); j++) {
            result.control_overlaps.push_back(std::abs(inner_product(controls[j], controls[i])));
        }
    }

    for (int s = 0; s < options.starts; s++) {
        Matrix u = random_unitary(d * d, options.seed, static_cast<uint64_t>(s));
        StartOutcome outcome = minimize_from(u, prepared, d, options);
        result.total_iterations += outcome.iterations;
        result.per_start.push_back(outcome);
        // Strict improvement only, so ties keep the earlier start.
        if (result.best_start < 0 || outcome.residual < result.best_residual) {
            result.best_residual = outcome.residual;
            result.unitary = u;
            result.best_start = s;
            result.converged = outcome.converged;
        }
        result.record.push_back(result.best_residual);
    }
    return result;
}

std::vector<StateVector> controls_with_overlap(size_t d, double overlap) {
    if (d < 2) {
        throw PreconditionError("need d >= 2 for two distinct control states");
    }
    if (!(overlap >= 0.0 && overlap <= 1.0)) {
        throw PreconditionError("overlap must lie in [0, 1]");
    }
    std::vector<cplx> second(d);
    second[0] = overlap;
    second[1] = std::sqrt(1.0 - overlap * overlap);
    return {basis_state(d, 0), StateVector::normalized(std::move(second))};
}

}  // namespace qreflect
