#include "cavrotor/hamiltonian.hpp"

#include <bit>
#include <cmath>

namespace cavrotor {

namespace {

constexpr Complex I{0.0, 1.0};

struct TripletSink {
    std::vector<Eigen::Triplet<Complex>> trips;
    const BasisCatalog& basis;
    bool check_sector;
    long long col_l = 0;

    explicit TripletSink(const BasisCatalog& b)
        : basis(b), check_sector(b.sector().has_value()) {}

    void emit(const BasisState& to, std::size_t col, Complex v) {
        if (v == Complex(0.0)) return;
        if (check_sector && to.total_angular_momentum() != col_l)
            throw SectorMismatch("Hamiltonian term leaves the angular-momentum sector");
        if (auto row = basis.find(to))
            trips.emplace_back(Eigen::Index(*row), Eigen::Index(col), v);
    }
};

SparseMatrixC from_triplets(std::vector<Eigen::Triplet<Complex>>& trips, std::size_t dim) {
    SparseMatrixC m{Eigen::Index(dim), Eigen::Index(dim)};
    m.setFromTriplets(trips.begin(), trips.end());
    m.makeCompressed();
    return m;
}

} // namespace

BogoliubovMatrix bogoliubov(double b_field) {
    const double s = std::sqrt(1.0 + b_field * b_field);
    const double wr = s + b_field, wl = s - b_field;
    BogoliubovMatrix bg;
    bg.u1 = (2.0 + wr + wl) / (4.0 * std::sqrt(wr + wl));
    bg.u2 = (wr - wl) * (wr - wl) / (4.0 * std::sqrt(wr + wl) * (2.0 + wr + wl));
    const double u1 = bg.u1, u2 = bg.u2;
    bg.U << u1, -u2, -I * u1, I * u2,
            -u2, u1, -I * u2, I * u1,
            -I * u1, I * u2, u1, -u2,
            -I * u2, I * u1, -u2, u1;
    return bg;
}

HamiltonianBundle build_circular(const ModelParams& params,
                                 std::shared_ptr<const BasisCatalog> basis) {
    validate(params);
    if (basis->n_dimers() != params.n_dimers)
        throw BasisMismatch("basis was built for a different number of dimers");

    const DerivedScalars d = derived(params);
    const double ge = params.effective_g();
    const int n = params.n_dimers;
    const double c = ge / std::sqrt(8.0 * n * (d.omega_r + d.omega_l));
    const double pair_coef = ge * ge / (16.0 * n);

    TripletSink sink(*basis);
    sink.trips.reserve(basis->dimension() * std::size_t(4 * n + 2));

    for (std::size_t col = 0; col < basis->dimension(); ++col) {
        const BasisState& s = basis->state(col);
        sink.col_l = s.total_angular_momentum();

        double diag = 0.5 * params.delta * s.sigma_z_sum() + d.omega_r * s.n_r +
                      d.omega_l * s.n_l + ge * ge / 8.0;
        for (int ki : s.k) diag += params.rotor_kinetic(ki);
        sink.emit(s, col, diag);

        for (int i = 0; i < n; ++i) {
            BasisState t = s;
            t.spins = s.spins ^ (1u << i);

            // -i c sigma_x [w_r r e^{i phi} - w_l l e^{-i phi}] + h.c.
            if (s.n_r > 0) {
                t.n_r = s.n_r - 1; t.k[std::size_t(i)] = s.k[std::size_t(i)] + 1;
                sink.emit(t, col, -I * c * d.omega_r * std::sqrt(double(s.n_r)));
                t.n_r = s.n_r;
            }
            if (s.n_l > 0) {
                t.n_l = s.n_l - 1; t.k[std::size_t(i)] = s.k[std::size_t(i)] - 1;
                sink.emit(t, col, I * c * d.omega_l * std::sqrt(double(s.n_l)));
                t.n_l = s.n_l;
            }
            t.n_r = s.n_r + 1; t.k[std::size_t(i)] = s.k[std::size_t(i)] - 1;
            sink.emit(t, col, I * c * d.omega_r * std::sqrt(double(s.n_r + 1)));
            t.n_r = s.n_r;
            t.n_l = s.n_l + 1; t.k[std::size_t(i)] = s.k[std::size_t(i)] + 1;
            sink.emit(t, col, -I * c * d.omega_l * std::sqrt(double(s.n_l + 1)));

            // (g^2/8N) sigma_x sigma_x cos(phi_i - phi_j), expanded into
            // e^{i(phi_i-phi_j)}/2 + h.c.; the ordered double loop covers the
            // symmetric sum.
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                BasisState u = s;
                u.spins = s.spins ^ (1u << i) ^ (1u << j);
                u.k[std::size_t(i)] = s.k[std::size_t(i)] + 1;
                u.k[std::size_t(j)] = s.k[std::size_t(j)] - 1;
                sink.emit(u, col, pair_coef);
                u.k[std::size_t(i)] = s.k[std::size_t(i)] - 1;
                u.k[std::size_t(j)] = s.k[std::size_t(j)] + 1;
                sink.emit(u, col, pair_coef);
            }
        }
    }

    HamiltonianBundle h;
    h.matrix = from_triplets(sink.trips, basis->dimension());
    h.representation = Representation::circular;
    h.params = params;
    h.basis = std::move(basis);
    return h;
}

HamiltonianBundle build_dipole(const ModelParams& params,
                               std::shared_ptr<const BasisCatalog> basis_linear) {
    validate(params);
    if (basis_linear->sector())
        throw SectorMismatch("dipole gauge requires an unrestricted (mixed-sector) basis");
    if (basis_linear->n_dimers() != params.n_dimers)
        throw BasisMismatch("basis was built for a different number of dimers");

    const BasisCatalog& b = *basis_linear;
    const DerivedScalars d = derived(params);
    const double ge = params.effective_g();
    const int n = params.n_dimers;
    const auto dim = Eigen::Index(b.dimension());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    // The catalog's photon slots are read as the two linear modes x, y.
    SparseMatrixC ax = build_operator(OperatorKind::annihilate_r, b).matrix;
    SparseMatrixC ay = build_operator(OperatorKind::annihilate_l, b).matrix;
    SparseMatrixC qx = inv_sqrt2 * (ax + SparseMatrixC(ax.adjoint()));
    SparseMatrixC qy = inv_sqrt2 * (ay + SparseMatrixC(ay.adjoint()));
    SparseMatrixC px = I * inv_sqrt2 * (SparseMatrixC(ax.adjoint()) - ax);
    SparseMatrixC py = I * inv_sqrt2 * (SparseMatrixC(ay.adjoint()) - ay);

    const double gamma = ge / (2.0 * std::sqrt(double(n)));
    SparseMatrixC pol_x(dim, dim), pol_y(dim, dim);
    for (int i = 0; i < n; ++i) {
        SparseMatrixC sx = build_operator(OperatorKind::sigma_x, b, i).matrix;
        SparseMatrixC raise = build_operator(OperatorKind::rotor_raise, b, i).matrix;
        SparseMatrixC cosp = 0.5 * (raise + SparseMatrixC(raise.adjoint()));
        SparseMatrixC sinp = Complex(0.0, -0.5) * (raise - SparseMatrixC(raise.adjoint()));
        pol_x += SparseMatrixC(sx * cosp);
        pol_y += SparseMatrixC(sx * sinp);
    }

    SparseMatrixC cap_px = SparseMatrixC(px - params.b_field * qy) - SparseMatrixC(gamma * pol_x);
    SparseMatrixC cap_py = SparseMatrixC(py + params.b_field * qx) - SparseMatrixC(gamma * pol_y);

    SparseMatrixC h = 0.5 * SparseMatrixC(SparseMatrixC(cap_px * cap_px) +
                                          SparseMatrixC(cap_py * cap_py)) +
                      0.5 * SparseMatrixC(SparseMatrixC(qx * qx) + SparseMatrixC(qy * qy));

    std::vector<Eigen::Triplet<Complex>> diag;
    diag.reserve(b.dimension());
    const double zero_point = 0.5 * (d.omega_r + d.omega_l);
    for (std::size_t col = 0; col < b.dimension(); ++col) {
        const BasisState& s = b.state(col);
        double v = 0.5 * params.delta * s.sigma_z_sum() - zero_point;
        for (int ki : s.k) v += params.rotor_kinetic(ki);
        diag.emplace_back(Eigen::Index(col), Eigen::Index(col), v);
    }
    SparseMatrixC rest = from_triplets(diag, b.dimension());

    HamiltonianBundle out;
    out.matrix = SparseMatrixC(h + rest);
    out.matrix.prune(Complex(1e-15), 1.0);
    out.matrix.makeCompressed();
    out.representation = Representation::dipole_gauge;
    out.params = params;
    out.basis = std::move(basis_linear);
    return out;
}

HamiltonianBundle build_corotating(const ModelParams& params,
                                   std::shared_ptr<const BasisCatalog> basis) {
    validate(params);
    if (params.n_dimers != 1)
        throw Unsupported("co-rotating frame is implemented for a single dimer only");
    if (basis->sector())
        throw SectorMismatch("co-rotating frame uses k as the frame momentum; "
                             "build the basis without a sector restriction");

    const DerivedScalars d = derived(params);
    const double ge = params.effective_g();
    const double c = ge / std::sqrt(8.0 * (d.omega_r + d.omega_l));

    TripletSink sink(*basis);
    for (std::size_t col = 0; col < basis->dimension(); ++col) {
        const BasisState& s = basis->state(col);
        const long long k = s.k[0];
        const long long l_opt = s.n_r - s.n_l;

        double diag = 0.5 * params.delta * s.sigma_z_sum() + d.omega_r * s.n_r +
                      d.omega_l * s.n_l + ge * ge / 8.0 + params.rotor_kinetic(k - l_opt);
        sink.emit(s, col, diag);

        BasisState t = s;
        t.spins = s.spins ^ 1u;
        // -i c sigma_x [w_r (r - r^dag) - w_l (l - l^dag)]
        if (s.n_r > 0) {
            t.n_r = s.n_r - 1;
            sink.emit(t, col, -I * c * d.omega_r * std::sqrt(double(s.n_r)));
        }
        t.n_r = s.n_r + 1;
        sink.emit(t, col, I * c * d.omega_r * std::sqrt(double(s.n_r + 1)));
        t.n_r = s.n_r;
        if (s.n_l > 0) {
            t.n_l = s.n_l - 1;
            sink.emit(t, col, I * c * d.omega_l * std::sqrt(double(s.n_l)));
        }
        t.n_l = s.n_l + 1;
        sink.emit(t, col, -I * c * d.omega_l * std::sqrt(double(s.n_l + 1)));
    }

    HamiltonianBundle h;
    h.matrix = from_triplets(sink.trips, basis->dimension());
    h.representation = Representation::corotating;
    h.params = params;
    h.basis = std::move(basis);
    return h;
}

Eigen::MatrixXcd dicke_fixed_angles(const ModelParams& params, const std::vector<double>& angles,
                                    int n_max) {
    validate(params);
    const int n = params.n_dimers;
    if (int(angles.size()) != n)
        throw BasisMismatch("need one angle per dimer");

    const DerivedScalars d = derived(params);
    const double ge = params.effective_g();
    const double c = ge / std::sqrt(8.0 * n * (d.omega_r + d.omega_l));
    const int nph = n_max + 1;
    const std::uint32_t nspin = 1u << n;
    const Eigen::Index dim = Eigen::Index(nph) * nph * nspin;

    auto idx = [&](int nr, int nl, std::uint32_t sp) {
        return (Eigen::Index(nr) * nph + nl) * nspin + sp;
    };

    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (int nr = 0; nr < nph; ++nr) {
        for (int nl = 0; nl < nph; ++nl) {
            for (std::uint32_t sp = 0; sp < nspin; ++sp) {
                const Eigen::Index col = idx(nr, nl, sp);
                int sz = 2 * int(std::popcount(sp)) - n;
                h(col, col) += 0.5 * params.delta * sz + d.omega_r * nr + d.omega_l * nl +
                               ge * ge / 8.0;

                for (int i = 0; i < n; ++i) {
                    const Complex phase = std::exp(I * angles[std::size_t(i)]);
                    const std::uint32_t spf = sp ^ (1u << i);
                    if (nr > 0)
                        h(idx(nr - 1, nl, spf), col) +=
                            -I * c * d.omega_r * phase * std::sqrt(double(nr));
                    if (nl > 0)
                        h(idx(nr, nl - 1, spf), col) +=
                            I * c * d.omega_l * std::conj(phase) * std::sqrt(double(nl));
                    if (nr < n_max)
                        h(idx(nr + 1, nl, spf), col) +=
                            I * c * d.omega_r * std::conj(phase) * std::sqrt(double(nr + 1));
                    if (nl < n_max)
                        h(idx(nr, nl + 1, spf), col) +=
                            -I * c * d.omega_l * phase * std::sqrt(double(nl + 1));

                    for (int j = 0; j < n; ++j) {
                        if (j == i) continue;
                        const double cij =
                            std::cos(angles[std::size_t(i)] - angles[std::size_t(j)]);
                        h(idx(nr, nl, sp ^ (1u << i) ^ (1u << j)), col) +=
                            ge * ge / (8.0 * n) * cij;
                    }
                }
            }
        }
    }
    return h;
}

} // namespace cavrotor
