#include "mckay/quiver_numerics.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "mckay/errors.hpp"

namespace mckay {

namespace {

using Complex = std::complex<double>;

Complex unit_root(unsigned m, long k) {
    static const double two_pi = 2.0 * std::acos(-1.0);
    const long mm = static_cast<long>(m);
    const double theta = two_pi * static_cast<double>(((k % mm) + mm) % mm) /
                         static_cast<double>(m);
    return {std::cos(theta), std::sin(theta)};
}

double point_norm(const QuiverPoint& p) {
    double s = 0.0;
    for (const auto& b : p.B) s += b.squaredNorm();
    s += p.v.squaredNorm() + p.w.squaredNorm();
    return std::sqrt(s);
}

}  // namespace

InvariantBasis build_invariant_basis(const GroupData& g) {
    if (!g.cyclic_weights()) throw semantic_error("nonabelian unsupported");
    if (g.embedding_dim() != 2 && g.embedding_dim() != 3)
        throw semantic_error("embedding dimension must be 2 or 3");

    InvariantBasis basis;
    basis.n = g.embedding_dim();
    basis.order = g.order();
    basis.weights = *g.cyclic_weights();
    const long N = static_cast<long>(g.order());
    for (int alpha = 0; alpha < basis.n; ++alpha) {
        const long w = basis.weights[static_cast<size_t>(alpha)];
        for (long i = 0; i < N; ++i) {
            ArrowSlot slot;
            slot.source = static_cast<unsigned>(i);
            slot.target = static_cast<unsigned>(((i - w) % N + N) % N);
            slot.alpha = alpha;
            basis.arrows.push_back(slot);
        }
    }
    return basis;
}

QuiverPoint point_from_coords(const InvariantBasis& basis, const Eigen::VectorXcd& coords) {
    if (coords.size() != static_cast<Eigen::Index>(basis.complex_dim()))
        throw semantic_error("coordinate vector length mismatch");
    const auto N = static_cast<Eigen::Index>(basis.order);
    QuiverPoint p;
    p.n = basis.n;
    p.order = basis.order;
    p.B.assign(static_cast<size_t>(basis.n), Eigen::MatrixXcd::Zero(N, N));
    for (size_t k = 0; k < basis.arrows.size(); ++k) {
        const ArrowSlot& s = basis.arrows[k];
        p.B[static_cast<size_t>(s.alpha)](s.target, s.source) = coords(static_cast<Eigen::Index>(k));
    }
    p.v = Eigen::VectorXcd::Zero(N);
    p.v(0) = coords(static_cast<Eigen::Index>(basis.arrows.size()));
    p.w = Eigen::RowVectorXcd::Zero(N);
    p.w(0) = coords(static_cast<Eigen::Index>(basis.arrows.size() + 1));
    return p;
}

Eigen::VectorXcd coords_from_point(const InvariantBasis& basis, const QuiverPoint& p) {
    Eigen::VectorXcd coords(static_cast<Eigen::Index>(basis.complex_dim()));
    for (size_t k = 0; k < basis.arrows.size(); ++k) {
        const ArrowSlot& s = basis.arrows[k];
        coords(static_cast<Eigen::Index>(k)) = p.B[static_cast<size_t>(s.alpha)](s.target, s.source);
    }
    coords(static_cast<Eigen::Index>(basis.arrows.size())) = p.v(0);
    coords(static_cast<Eigen::Index>(basis.arrows.size() + 1)) = p.w(0);
    return coords;
}

double equivariance_residual(const QuiverPoint& p, const InvariantBasis& basis) {
    const auto N = static_cast<Eigen::Index>(basis.order);
    Eigen::VectorXcd rho(N);
    for (Eigen::Index i = 0; i < N; ++i) rho(i) = unit_root(basis.order, i);

    double num = 0.0;
    for (int alpha = 0; alpha < basis.n; ++alpha) {
        const Complex phase = unit_root(basis.order, -basis.weights[static_cast<size_t>(alpha)]);
        const auto& b = p.B[static_cast<size_t>(alpha)];
        for (Eigen::Index i = 0; i < N; ++i)
            for (Eigen::Index j = 0; j < N; ++j) {
                Complex conjugated = rho(i) * b(i, j) * std::conj(rho(j));
                num += std::norm(conjugated - phase * b(i, j));
            }
    }
    num += (rho.asDiagonal() * p.v - p.v).squaredNorm();
    num += (p.w * rho.conjugate().asDiagonal() - p.w).squaredNorm();
    return std::sqrt(num) / std::max(1e-300, point_norm(p));
}

LieValue moment_map(const QuiverPoint& p) {
    const Eigen::Index N = p.v.size();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(N, N);
    for (const auto& b : p.B) m += b * b.adjoint() - b.adjoint() * b;
    m += p.v * p.v.adjoint();
    m -= p.w.adjoint() * p.w;
    LieValue mu(N);
    for (Eigen::Index i = 0; i < N; ++i) mu(i) = 0.5 * m(i, i).real();
    return mu;
}

double n_residual(const QuiverPoint& p) {
    double s = 0.0;
    for (size_t a = 0; a < p.B.size(); ++a)
        for (size_t b = a + 1; b < p.B.size(); ++b)
            s += (p.B[a] * p.B[b] - p.B[b] * p.B[a]).squaredNorm();
    s += (p.v * p.w).squaredNorm();
    return std::sqrt(s);
}

QuiverPoint orbit_point(const GroupData& g, const Eigen::VectorXcd& x) {
    if (!g.cyclic_weights()) throw semantic_error("nonabelian unsupported");
    const auto& weights = *g.cyclic_weights();
    if (x.size() != static_cast<Eigen::Index>(weights.size()))
        throw semantic_error("orbit seed dimension mismatch");
    const unsigned N = g.order();
    const int n = g.embedding_dim();

    // orbit points p_k = rho(g^k) x
    std::vector<Eigen::VectorXcd> pts;
    for (unsigned k = 0; k < N; ++k) {
        Eigen::VectorXcd pt(x.size());
        for (Eigen::Index a = 0; a < x.size(); ++a)
            pt(a) = unit_root(N, static_cast<long>(k) * weights[static_cast<size_t>(a)]) * x(a);
        pts.push_back(std::move(pt));
    }
    const double scale = std::max(1.0, x.norm());
    for (unsigned k = 0; k < N; ++k)
        for (unsigned l = k + 1; l < N; ++l)
            if ((pts[k] - pts[l]).norm() <= 1e-9 * scale)
                throw semantic_error("orbit not free");

    // multiplication operators, diagonal in the delta basis, moved to
    // the irrep basis by U(k,i) = zeta^{-ik}
    const auto Ni = static_cast<Eigen::Index>(N);
    Eigen::MatrixXcd U(Ni, Ni);
    for (Eigen::Index k = 0; k < Ni; ++k)
        for (Eigen::Index i = 0; i < Ni; ++i) U(k, i) = unit_root(N, -k * i);

    QuiverPoint p;
    p.n = n;
    p.order = N;
    for (int alpha = 0; alpha < n; ++alpha) {
        Eigen::VectorXcd diag(Ni);
        for (Eigen::Index k = 0; k < Ni; ++k) diag(k) = pts[static_cast<size_t>(k)](alpha);
        p.B.push_back((U.adjoint() * diag.asDiagonal() * U) / static_cast<double>(N));
    }
    p.v = Eigen::VectorXcd::Zero(Ni);
    p.v(0) = 1.0;
    p.w = Eigen::RowVectorXcd::Zero(Ni);
    return p;
}

namespace {

QuiverPoint apply_gauge(const QuiverPoint& p, const Eigen::VectorXd& log_diag) {
    const Eigen::Index N = p.v.size();
    Eigen::VectorXd d(N), dinv(N);
    for (Eigen::Index i = 0; i < N; ++i) {
        d(i) = std::exp(log_diag(i));
        dinv(i) = std::exp(-log_diag(i));
    }
    QuiverPoint out;
    out.n = p.n;
    out.order = p.order;
    for (const auto& b : p.B)
        out.B.push_back(d.asDiagonal() * b * dinv.asDiagonal());
    out.v = d.asDiagonal() * p.v;
    out.w = p.w * dinv.asDiagonal();
    return out;
}

}  // namespace

QuiverPoint kempf_ness_flow(const QuiverPoint& p, const FlowConfig& cfg,
                            std::vector<FlowTraceRow>* trace) {
    if (cfg.tol <= 0) throw semantic_error("tolerance must be positive");
    if (cfg.target.size() != p.v.size()) throw semantic_error("target dimension mismatch");

    QuiverPoint cur = p;
    double err = (moment_map(cur) - cfg.target).norm();
    double step = cfg.initial_step;

    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        if (err <= cfg.tol) return cur;
        LieValue xi = moment_map(cur) - cfg.target;
        QuiverPoint trial = apply_gauge(cur, -step * xi);
        double trial_err = (moment_map(trial) - cfg.target).norm();
        if (trial_err < err) {
            cur = std::move(trial);
            err = trial_err;
            step *= 2.0;
        } else {
            step *= 0.5;
            if (step < 1e-300) break;
        }
        if (trace) trace->push_back({iter, err, n_residual(cur), step});
    }
    if (err <= cfg.tol) return cur;
    throw numeric_error("did not converge");
}

QuotientDimResult quotient_dim(const QuiverPoint& p, const LieValue& target,
                               const InvariantBasis& basis) {
    (void)target;  // the Jacobian of mu - target does not depend on the target
    const auto N = static_cast<Eigen::Index>(basis.order);
    const size_t ncoords = basis.complex_dim();
    const size_t npairs = static_cast<size_t>(basis.n) * (static_cast<size_t>(basis.n) - 1) / 2;
    const Eigen::Index rows =
        static_cast<Eigen::Index>((npairs + 1) * 2 * static_cast<size_t>(N * N) + basis.order);
    const Eigen::Index cols = static_cast<Eigen::Index>(2 * ncoords);

    Eigen::MatrixXd jac(rows, cols);
    for (size_t slot = 0; slot < ncoords; ++slot) {
        for (int part = 0; part < 2; ++part) {
            Eigen::VectorXcd dc = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(ncoords));
            dc(static_cast<Eigen::Index>(slot)) = part == 0 ? Complex(1, 0) : Complex(0, 1);
            QuiverPoint d = point_from_coords(basis, dc);

            Eigen::Index row = 0;
            const Eigen::Index col = static_cast<Eigen::Index>(2 * slot + static_cast<size_t>(part));
            for (size_t a = 0; a < p.B.size(); ++a)
                for (size_t b = a + 1; b < p.B.size(); ++b) {
                    Eigen::MatrixXcd de = d.B[a] * p.B[b] - p.B[b] * d.B[a] +
                                          p.B[a] * d.B[b] - d.B[b] * p.B[a];
                    for (Eigen::Index i = 0; i < N; ++i)
                        for (Eigen::Index j = 0; j < N; ++j) {
                            jac(row++, col) = de(i, j).real();
                            jac(row++, col) = de(i, j).imag();
                        }
                }
            Eigen::MatrixXcd dvw = d.v * p.w + p.v * d.w;
            for (Eigen::Index i = 0; i < N; ++i)
                for (Eigen::Index j = 0; j < N; ++j) {
                    jac(row++, col) = dvw(i, j).real();
                    jac(row++, col) = dvw(i, j).imag();
                }
            // d mu: (1/2)([dB,B*] + [B,dB*] + dv v* + v dv* - w* dw - dw* w)_ii
            Eigen::MatrixXcd dm = Eigen::MatrixXcd::Zero(N, N);
            for (size_t a = 0; a < p.B.size(); ++a) {
                dm += d.B[a] * p.B[a].adjoint() - p.B[a].adjoint() * d.B[a];
                dm += p.B[a] * d.B[a].adjoint() - d.B[a].adjoint() * p.B[a];
            }
            dm += d.v * p.v.adjoint() + p.v * d.v.adjoint();
            dm -= p.w.adjoint() * d.w + d.w.adjoint() * p.w;
            for (Eigen::Index i = 0; i < N; ++i) jac(row++, col) = 0.5 * dm(i, i).real();
        }
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
    Eigen::VectorXd sigma = svd.singularValues();

    QuotientDimResult out;
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
        out.singular_values.push_back(sigma(i));

    const double sigma_max = sigma.size() ? sigma(0) : 0.0;
    const double cut = 1e-6 * sigma_max;
    Eigen::Index rank = 0;
    while (rank < sigma.size() && sigma(rank) >= cut) ++rank;

    if (rank > 0 && rank < sigma.size()) {
        const double below = sigma(rank);
        out.gap_ratio = below > 0 ? sigma(rank - 1) / below
                                  : std::numeric_limits<double>::infinity();
        if (out.gap_ratio < 1e3) throw numeric_error("rank plateau ambiguous");
    } else {
        out.gap_ratio = std::numeric_limits<double>::infinity();
    }

    out.kernel_dim = static_cast<size_t>(cols - rank);
    out.dim = static_cast<int>(out.kernel_dim) - static_cast<int>(basis.order);
    return out;
}

}  // namespace mckay
