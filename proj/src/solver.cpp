#include "cavrotor/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace cavrotor {

namespace {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

std::vector<std::pair<double, VectorXcd>> dense_lowest(const SparseMatrixC& h, int count) {
    MatrixXcd dense = MatrixXcd(h);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(dense);
    std::vector<std::pair<double, VectorXcd>> out;
    for (int i = 0; i < count; ++i) out.emplace_back(es.eigenvalues()(i), es.eigenvectors().col(i));
    return out;
}

// Orthogonalize v against the first m columns of basis, twice for stability.
void reorthogonalize(VectorXcd& v, const MatrixXcd& basis, Index m) {
    for (int pass = 0; pass < 2; ++pass) {
        if (m > 0) v -= basis.leftCols(m) * (basis.leftCols(m).adjoint() * v);
    }
}

std::vector<std::pair<double, VectorXcd>> lanczos_lowest(const SparseMatrixC& h, int count,
                                                         const SolverOptions& opts) {
    const Index dim = h.rows();
    const int block = std::min<Index>(count + 1, dim);
    const Index cap = std::min<Index>(std::max<Index>(opts.max_basis, 4 * block), dim);

    std::mt19937 rng(20240817u); // deterministic fill-in for extra block columns
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto fresh_column = [&](const MatrixXcd& basis, Index m) {
        VectorXcd v(dim);
        for (Index i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
        reorthogonalize(v, basis, m);
        return v;
    };

    MatrixXcd basis(dim, cap), image(dim, cap); // image = H * basis
    MatrixXcd proj = MatrixXcd::Zero(cap, cap);

    Index m = 0;
    auto append_column = [&](VectorXcd v) -> bool {
        reorthogonalize(v, basis, m);
        double nrm = v.norm();
        if (nrm < 1e-8) {
            v = fresh_column(basis, m);
            nrm = v.norm();
            if (nrm < 1e-8) return false;
        }
        basis.col(m) = v / nrm;
        image.col(m) = h * basis.col(m);
        for (Index i = 0; i <= m; ++i) {
            Complex t = basis.col(i).dot(image.col(m));
            proj(i, m) = t;
            proj(m, i) = std::conj(t);
        }
        ++m;
        return true;
    };

    // Deterministic start block: normalized all-ones, then seeded random fill.
    append_column(VectorXcd::Ones(dim));
    for (int j = 1; j < block && m < cap; ++j) append_column(fresh_column(basis, m));

    double best_energy = 0.0, best_residual = std::numeric_limits<double>::infinity();
    for (int restart = 0; restart <= opts.max_restarts; ++restart) {
        while (m < cap) {
            // expand with H times the newest block
            Index lo = std::max<Index>(0, m - block);
            Index nb = m;
            for (Index j = lo; j < nb && m < cap; ++j) append_column(image.col(j));

            Eigen::SelfAdjointEigenSolver<MatrixXcd> es(proj.topLeftCorner(m, m));
            const int want = std::min<Index>(count, m);
            bool all_ok = true;
            double worst = 0.0;
            for (int i = 0; i < want; ++i) {
                double theta = es.eigenvalues()(i);
                VectorXcd y = es.eigenvectors().col(i);
                VectorXcd rvec = image.leftCols(m) * y - theta * (basis.leftCols(m) * y);
                double res = rvec.norm();
                worst = std::max(worst, res);
                if (res > opts.tol) all_ok = false;
            }
            if (worst < best_residual) {
                best_residual = worst;
                best_energy = es.eigenvalues()(0);
            }
            if (all_ok && m >= count) {
                std::vector<std::pair<double, VectorXcd>> out;
                for (int i = 0; i < want; ++i) {
                    VectorXcd x = basis.leftCols(m) * es.eigenvectors().col(i);
                    x.normalize();
                    out.emplace_back(es.eigenvalues()(i), std::move(x));
                }
                return out;
            }
            if (m >= dim) break;
        }
        if (m >= dim) {
            // Krylov space exhausted the full space; accept the projection.
            Eigen::SelfAdjointEigenSolver<MatrixXcd> es(proj.topLeftCorner(m, m));
            std::vector<std::pair<double, VectorXcd>> out;
            for (int i = 0; i < std::min<Index>(count, m); ++i) {
                VectorXcd x = basis.leftCols(m) * es.eigenvectors().col(i);
                x.normalize();
                out.emplace_back(es.eigenvalues()(i), std::move(x));
            }
            return out;
        }

        // Thick restart: keep the lowest count+block Ritz vectors.
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(proj.topLeftCorner(m, m));
        const Index keep = std::min<Index>(count + block, m);
        MatrixXcd kept = basis.leftCols(m) * es.eigenvectors().leftCols(keep);
        m = 0;
        proj.setZero();
        for (Index j = 0; j < keep; ++j) append_column(kept.col(j));
    }
    throw NoConvergence(best_energy, best_residual, opts.max_restarts);
}

} // namespace

std::vector<std::pair<double, VectorXcd>> lowest_eigenpairs(const SparseMatrixC& h, int count,
                                                            const SolverOptions& opts) {
    if (count < 1) throw DomainError("count", "must be >= 1");
    const Index dim = h.rows();
    count = int(std::min<Index>(count, dim)); // clamp to dimension
    if (dim <= opts.dense_threshold) return dense_lowest(h, count);
    return lanczos_lowest(h, count, opts);
}

GroundStateResult ground_state(const HamiltonianBundle& h, double tol) {
    SolverOptions opts;
    opts.tol = tol;
    const int count = h.dimension() >= 2 ? 2 : 1;
    auto pairs = lowest_eigenpairs(h.matrix, count, opts);

    GroundStateResult r;
    r.energy = pairs[0].first;
    r.state = std::move(pairs[0].second);
    r.sector = h.basis && h.basis->sector() ? *h.basis->sector() : 0;
    r.residual = (h.matrix * r.state - r.energy * r.state).norm();
    r.converged = r.residual <= std::max(tol, 1e-12);
    if (pairs.size() > 1) r.near_degenerate = (pairs[1].first - pairs[0].first) < 1e-8;
    return r;
}

std::vector<std::pair<double, VectorXcd>> low_spectrum(const HamiltonianBundle& h, int count,
                                                       double tol) {
    SolverOptions opts;
    opts.tol = tol;
    return lowest_eigenpairs(h.matrix, count, opts);
}

SectorScanResult ground_sector_scan(const ModelParams& params, const TruncationSpec& trunc,
                                    double tol) {
    SectorScanResult out;
    double best = std::numeric_limits<double>::infinity();
    for (int sector : sector_scan_range(trunc)) {
        auto basis = std::make_shared<BasisCatalog>(build_basis(trunc.with_sector(sector),
                                                                params.n_dimers));
        auto h = build_circular(params, basis);
        GroundStateResult g = ground_state(h, tol);
        out.energies.emplace_back(sector, g.energy);
        best = std::min(best, g.energy);
    }
    // Prefer the smallest |sector| among near-degenerate minima; at J = inf
    // every sector is exactly degenerate up to truncation noise.
    int best_sector = out.energies.front().first;
    double best_key = std::numeric_limits<double>::infinity();
    for (auto [sector, energy] : out.energies) {
        if (energy > best + 1e-9) continue;
        double key = std::abs(double(sector));
        if (key < best_key) {
            best_key = key;
            best_sector = sector;
        }
    }
    out.best_sector = best_sector;
    return out;
}

bool ground_energy_converged(const ModelParams& params, const TruncationSpec& trunc, double tol,
                             double* change) {
    auto solve = [&](const TruncationSpec& t) {
        auto basis = std::make_shared<BasisCatalog>(build_basis(t, params.n_dimers));
        return ground_state(build_circular(params, basis), tol).energy;
    };
    const double e0 = solve(trunc);
    const double e1 = solve(trunc.grown(2));
    const double diff = std::abs(e1 - e0);
    if (change) *change = diff;
    return diff < 1e-8 || diff < 1e-4 * std::abs(e0);
}

} // namespace cavrotor
