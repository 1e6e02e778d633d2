#ifndef CAVROTOR_ERRORS_HPP
#define CAVROTOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cavrotor {

struct DomainError : std::runtime_error {
    std::string field;
    explicit DomainError(std::string f, const std::string& msg)
        : std::runtime_error("invalid " + f + ": " + msg), field(std::move(f)) {}
};

struct EmptySector : std::runtime_error {
    explicit EmptySector(int sector)
        : std::runtime_error("sector " + std::to_string(sector) + " admits no basis states") {}
};

struct DimensionOverflow : std::runtime_error {
    explicit DimensionOverflow(std::size_t dim, std::size_t cap)
        : std::runtime_error("basis dimension " + std::to_string(dim) +
                             " exceeds cap " + std::to_string(cap)) {}
};

struct SiteOutOfRange : std::runtime_error {
    explicit SiteOutOfRange(int site, int n)
        : std::runtime_error("site " + std::to_string(site) + " out of range for N=" +
                             std::to_string(n)) {}
};

struct SectorMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BasisMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoConvergence : std::runtime_error {
    double best_energy;
    double residual;
    NoConvergence(double e, double r, int iters)
        : std::runtime_error("eigensolver did not converge after " + std::to_string(iters) +
                             " iterations (residual " + std::to_string(r) + ")"),
          best_energy(e), residual(r) {}
};

struct ComplexRoots : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonzeroB : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridTooCoarse : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cavrotor

#endif
