#include "cavrotor/hilbert.hpp"

#include <algorithm>
#include <bit>

namespace cavrotor {

namespace {

// Packed key for ordinal lookup. Supports n_max <= 63, N <= 6, k_max <= 63.
std::uint64_t pack(const BasisState& s) {
    std::uint64_t key = std::uint64_t(s.n_r) | (std::uint64_t(s.n_l) << 6) |
                        (std::uint64_t(s.spins) << 12);
    int shift = 19;
    for (int ki : s.k) {
        key |= std::uint64_t(ki + 64) << shift;
        shift += 7;
    }
    return key;
}

void check_packable(const TruncationSpec& t, int n_dimers) {
    if (t.n_max < 1 && t.n_max != 0) throw DomainError("n_max", "must be >= 0");
    if (t.n_max > 63) throw DomainError("n_max", "must be <= 63");
    if (t.k_max < 0) throw DomainError("k_max", "must be >= 0");
    if (t.k_max > 63) throw DomainError("k_max", "must be <= 63");
    if (n_dimers < 1 || n_dimers > 6) throw DomainError("n_dimers", "must be in 1..6");
}

} // namespace

int BasisState::sigma_z_sum() const {
    int ups = std::popcount(spins);
    int total = int(k.size());
    return 2 * ups - total;
}

std::ostream& operator<<(std::ostream& os, const BasisState& s) {
    os << "(" << s.n_r << "," << s.n_l << ",";
    for (std::size_t i = 0; i < s.k.size(); ++i) os << (s.spin_up(int(i)) ? "u" : "d");
    os << ",[";
    for (std::size_t i = 0; i < s.k.size(); ++i) os << (i ? "," : "") << s.k[i];
    return os << "])";
}

BasisCatalog::BasisCatalog(std::vector<BasisState> states, TruncationSpec trunc, int n_dimers,
                           std::optional<int> sector)
    : states_(std::move(states)), trunc_(trunc), n_dimers_(n_dimers), sector_(sector) {
    index_.reserve(states_.size());
    for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(pack(states_[i]), i);
}

std::optional<std::size_t> BasisCatalog::find(const BasisState& s) const {
    if (s.n_r < 0 || s.n_r > trunc_.n_max || s.n_l < 0 || s.n_l > trunc_.n_max)
        return std::nullopt;
    for (int ki : s.k)
        if (ki < -trunc_.k_max || ki > trunc_.k_max) return std::nullopt;
    auto it = index_.find(pack(s));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void BasisCatalog::dump_csv(std::ostream& os) const {
    os << "ordinal,n_r,n_l,spins";
    for (int i = 0; i < n_dimers_; ++i) os << ",k_" << (i + 1);
    os << "\n";
    for (std::size_t i = 0; i < states_.size(); ++i) {
        const BasisState& s = states_[i];
        os << i << "," << s.n_r << "," << s.n_l << ",";
        for (int b = 0; b < n_dimers_; ++b) os << (s.spin_up(b) ? '1' : '0');
        for (int ki : s.k) os << "," << ki;
        os << "\n";
    }
}

BasisCatalog build_basis(const TruncationSpec& trunc, int n_dimers) {
    check_packable(trunc, n_dimers);
    if (trunc.sector) {
        long long max_l = 2LL * trunc.n_max + (long long)n_dimers * trunc.k_max;
        if (std::llabs(*trunc.sector) > max_l) throw EmptySector(*trunc.sector);
    }

    std::vector<BasisState> states;
    BasisState s;
    s.k.assign(std::size_t(n_dimers), 0);

    // Lexicographic enumeration on (n_r, n_l, spins, k). When a sector is
    // requested the last rotor momentum is determined by the others; we still
    // enumerate it to keep the code path uniform, the cost is negligible.
    std::uint32_t spin_count = 1u << n_dimers;
    for (s.n_r = 0; s.n_r <= trunc.n_max; ++s.n_r) {
        for (s.n_l = 0; s.n_l <= trunc.n_max; ++s.n_l) {
            for (s.spins = 0; s.spins < spin_count; ++s.spins) {
                // iterate k vectors lexicographically
                std::fill(s.k.begin(), s.k.end(), -trunc.k_max);
                while (true) {
                    if (!trunc.sector || s.total_angular_momentum() == *trunc.sector) {
                        states.push_back(s);
                        if (states.size() > trunc.dimension_cap)
                            throw DimensionOverflow(states.size(), trunc.dimension_cap);
                    }
                    int pos = n_dimers - 1;
                    while (pos >= 0 && s.k[std::size_t(pos)] == trunc.k_max) {
                        s.k[std::size_t(pos)] = -trunc.k_max;
                        --pos;
                    }
                    if (pos < 0) break;
                    ++s.k[std::size_t(pos)];
                }
            }
        }
    }
    if (trunc.sector && states.empty()) throw EmptySector(*trunc.sector);
    return BasisCatalog(std::move(states), trunc, n_dimers, trunc.sector);
}

std::vector<int> sector_scan_range(const TruncationSpec& trunc) {
    std::vector<int> sectors;
    for (int l = -trunc.k_scan; l <= trunc.k_scan; ++l) sectors.push_back(l);
    return sectors;
}

OperatorMatrix build_operator(OperatorKind kind, const BasisCatalog& basis, int site) {
    const bool needs_site = kind == OperatorKind::sigma_x || kind == OperatorKind::sigma_y ||
                            kind == OperatorKind::sigma_z || kind == OperatorKind::rotor_momentum ||
                            kind == OperatorKind::rotor_raise || kind == OperatorKind::rotor_lower;
    if (needs_site && (site < 0 || site >= basis.n_dimers()))
        throw SiteOutOfRange(site, basis.n_dimers());

    const auto dim = Eigen::Index(basis.dimension());
    std::vector<Eigen::Triplet<Complex>> trips;
    trips.reserve(basis.dimension());

    auto emit = [&](const BasisState& to, std::size_t col, Complex v) {
        if (v == Complex(0.0)) return;
        if (auto row = basis.find(to)) trips.emplace_back(Eigen::Index(*row), Eigen::Index(col), v);
    };

    bool hermitian = false;
    for (std::size_t col = 0; col < basis.dimension(); ++col) {
        const BasisState& s = basis.state(col);
        BasisState t = s;
        switch (kind) {
            case OperatorKind::annihilate_r:
                if (s.n_r > 0) { t.n_r = s.n_r - 1; emit(t, col, std::sqrt(double(s.n_r))); }
                break;
            case OperatorKind::annihilate_l:
                if (s.n_l > 0) { t.n_l = s.n_l - 1; emit(t, col, std::sqrt(double(s.n_l))); }
                break;
            case OperatorKind::sigma_x:
                t.spins = s.spins ^ (1u << site);
                emit(t, col, 1.0);
                hermitian = true;
                break;
            case OperatorKind::sigma_y:
                t.spins = s.spins ^ (1u << site);
                emit(t, col, s.spin_up(site) ? Complex(0.0, 1.0) : Complex(0.0, -1.0));
                hermitian = true;
                break;
            case OperatorKind::sigma_z:
                emit(t, col, s.spin_up(site) ? 1.0 : -1.0);
                hermitian = true;
                break;
            case OperatorKind::rotor_momentum:
                emit(t, col, double(s.k[std::size_t(site)]));
                hermitian = true;
                break;
            case OperatorKind::rotor_raise:
                t.k[std::size_t(site)] = s.k[std::size_t(site)] + 1;
                emit(t, col, 1.0);
                break;
            case OperatorKind::rotor_lower:
                t.k[std::size_t(site)] = s.k[std::size_t(site)] - 1;
                emit(t, col, 1.0);
                break;
            case OperatorKind::optical_L:
                emit(t, col, double(s.n_r - s.n_l));
                hermitian = true;
                break;
            case OperatorKind::mech_L: {
                long long sum = 0;
                for (int ki : s.k) sum += ki;
                emit(t, col, double(sum));
                hermitian = true;
                break;
            }
            case OperatorKind::total_L:
                emit(t, col, double(s.total_angular_momentum()));
                hermitian = true;
                break;
        }
    }

    OperatorMatrix op;
    op.matrix.resize(dim, dim);
    op.matrix.setFromTriplets(trips.begin(), trips.end());
    op.matrix.makeCompressed();
    op.hermitian = hermitian;
    return op;
}

double hermiticity_defect(const SparseMatrixC& m) {
    SparseMatrixC d = SparseMatrixC(m - SparseMatrixC(m.adjoint()));
    double worst = 0.0;
    for (int k = 0; k < d.outerSize(); ++k)
        for (SparseMatrixC::InnerIterator it(d, k); it; ++it)
            worst = std::max(worst, std::abs(it.value()));
    return worst;
}

} // namespace cavrotor
