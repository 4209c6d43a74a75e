#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "mckay/group_data.hpp"

namespace mckay {

// One coordinate of the invariant space M = (Q (x) End R)^G (+)
// Hom(R_0,R)^G (+) Hom(R,R_0)^G in the irrep (Fourier) basis of the
// regular representation. For abelian cyclic G the arrow slot of B_alpha
// with source irrep i has target (i - w_alpha) mod |G|; the v and w
// slots sit in the trivial-irrep coordinate.
struct ArrowSlot {
    unsigned source = 0;
    unsigned target = 0;
    int alpha = 0;  // which B component, 0-based
};

struct InvariantBasis {
    int n = 0;           // embedding dimension
    unsigned order = 0;  // |G|
    std::vector<long> weights;
    std::vector<ArrowSlot> arrows;

    size_t complex_dim() const { return arrows.size() + 2; }  // + v slot + w slot
    size_t real_dim() const { return 2 * complex_dim(); }
};

// Errors: "nonabelian unsupported" for table-backed groups.
InvariantBasis build_invariant_basis(const GroupData& g);

// A point (B, v, w) of M, stored as dense matrices in the irrep basis.
struct QuiverPoint {
    int n = 0;
    unsigned order = 0;
    std::vector<Eigen::MatrixXcd> B;  // n matrices, |G| x |G|
    Eigen::VectorXcd v;
    Eigen::RowVectorXcd w;
};

// Relative deviation from G-equivariance (exactly zero for points built
// through the invariant basis, up to roundoff).
double equivariance_residual(const QuiverPoint& p, const InvariantBasis& basis);

QuiverPoint point_from_coords(const InvariantBasis& basis,
                              const Eigen::VectorXcd& coords);
Eigen::VectorXcd coords_from_point(const InvariantBasis& basis, const QuiverPoint& p);

// Real moment-map value per irrep block of F = prod U(1):
//   mu_i = (1/2) ( [B,B*] + v v* - w* w )_{ii}.
using LieValue = Eigen::VectorXd;
LieValue moment_map(const QuiverPoint& p);

// Frobenius norm of all components of the defining equations of N:
// the commutators [B_alpha, B_beta] for alpha < beta together with the
// rank-one product v w.
double n_residual(const QuiverPoint& p);

// Point of N attached to a free G-orbit: B_alpha = multiplication by
// the alpha-th coordinate on functions on G.x, v spans the invariant
// functions, w = 0. Error "orbit not free" when orbit points collide.
QuiverPoint orbit_point(const GroupData& g, const Eigen::VectorXcd& x);

struct FlowConfig {
    LieValue target;
    double tol = 1e-8;
    int max_iters = 10000;
    double initial_step = 0.1;
    std::uint64_t seed = 0;
};

struct FlowTraceRow {
    int iter = 0;
    double moment_error = 0.0;
    double n_residual = 0.0;
    double step = 0.0;
};

// Descent along imaginary gauge directions exp(-eps xi), xi = mu - target,
// with backtracking step control; ||mu - target|| decreases on every
// accepted step. Error "did not converge" after max_iters.
QuiverPoint kempf_ness_flow(const QuiverPoint& p, const FlowConfig& cfg,
                            std::vector<FlowTraceRow>* trace = nullptr);

struct QuotientDimResult {
    int dim = 0;           // kernel dim of the stacked Jacobian minus dim F
    size_t kernel_dim = 0;
    double gap_ratio = 0.0;  // smallest kept / largest dropped singular value
    std::vector<double> singular_values;
};

// Numerical real dimension of N /\ mu^-1(target) at p: singular values
// of the stacked real Jacobian below 1e-6 * sigma_max count as zero;
// requires a spectral gap of ratio >= 1e3 at the cut ("rank plateau
// ambiguous" otherwise).
QuotientDimResult quotient_dim(const QuiverPoint& p, const LieValue& target,
                               const InvariantBasis& basis);

}  // namespace mckay
