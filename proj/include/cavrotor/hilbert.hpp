#ifndef CAVROTOR_HILBERT_HPP
#define CAVROTOR_HILBERT_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <unordered_map>
#include <vector>

#include <Eigen/SparseCore>

#include "cavrotor/errors.hpp"

namespace cavrotor {

using Complex = std::complex<double>;
using SparseMatrixC = Eigen::SparseMatrix<Complex>;

struct TruncationSpec {
    int n_max = 8;                       // bosonic Fock cutoff per mode, occupations 0..n_max
    int k_max = 6;                       // rotor momentum cutoff, |k_i| <= k_max
    std::optional<int> sector;           // restrict to total angular momentum L
    int k_scan = 2;                      // sector range for ground-sector scans
    std::size_t dimension_cap = 5'000'000;

    TruncationSpec with_sector(int s) const {
        TruncationSpec t = *this;
        t.sector = s;
        return t;
    }
    TruncationSpec grown(int by) const {
        TruncationSpec t = *this;
        t.n_max += by;
        t.k_max += by;
        return t;
    }
};

/// One many-body basis state: two photon occupations, N spin-z eigenvalues
/// packed into a bitstring (site 0 = least significant bit, bit set = spin up),
/// and N rotor momentum quantum numbers.
struct BasisState {
    int n_r = 0;
    int n_l = 0;
    std::uint32_t spins = 0;
    std::vector<int> k;

    bool spin_up(int site) const { return (spins >> site) & 1u; }
    int sigma_z_sum() const;

    long long total_angular_momentum() const {
        long long t = n_r - n_l;
        for (int ki : k) t += ki;
        return t;
    }

    bool operator==(const BasisState& o) const {
        return n_r == o.n_r && n_l == o.n_l && spins == o.spins && k == o.k;
    }
};

std::ostream& operator<<(std::ostream& os, const BasisState& s);

/// Deterministically ordered enumeration of the truncated basis,
/// optionally restricted to one total-angular-momentum sector.
class BasisCatalog {
  public:
    BasisCatalog(std::vector<BasisState> states, TruncationSpec trunc, int n_dimers,
                 std::optional<int> sector);

    std::size_t dimension() const { return states_.size(); }
    const std::vector<BasisState>& states() const { return states_; }
    const BasisState& state(std::size_t i) const { return states_[i]; }
    std::optional<int> sector() const { return sector_; }
    int n_dimers() const { return n_dimers_; }
    const TruncationSpec& trunc() const { return trunc_; }

    /// Ordinal of a state, or nullopt if it falls outside the catalog
    /// (cutoff or sector violation).
    std::optional<std::size_t> find(const BasisState& s) const;

    void dump_csv(std::ostream& os) const;

  private:
    std::vector<BasisState> states_;
    TruncationSpec trunc_;
    int n_dimers_;
    std::optional<int> sector_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

BasisCatalog build_basis(const TruncationSpec& trunc, int n_dimers);

enum class OperatorKind {
    annihilate_r,
    annihilate_l,
    sigma_x,
    sigma_y,
    sigma_z,
    rotor_momentum,
    rotor_raise,  // e^{+i phi_i}, shifts k_i -> k_i + 1
    rotor_lower,  // e^{-i phi_i}
    optical_L,    // r^dag r - l^dag l
    mech_L,       // sum_i p_{phi_i}
    total_L,
};

struct OperatorMatrix {
    SparseMatrixC matrix;
    bool hermitian = false;
    std::size_t dimension() const { return std::size_t(matrix.rows()); }
};

/// Sparse matrix of an elementary operator in the given basis. Amplitudes
/// mapped outside the catalog (cutoff boundary or sector change) are dropped.
OperatorMatrix build_operator(OperatorKind kind, const BasisCatalog& basis, int site = -1);

std::vector<int> sector_scan_range(const TruncationSpec& trunc);

double hermiticity_defect(const SparseMatrixC& m);

} // namespace cavrotor

#endif
