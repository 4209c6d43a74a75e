#pragma once

#include "mckay/group_data.hpp"
#include "mckay/rational_matrix.hpp"

namespace mckay {

// Exact eta invariant of the boundary Dirac operator twisted by the
// class function x:
//   (1/|G|) sum_{c != id} |c| * x(c) / (chi_{Lambda^2 Q}(c) - chi_Q(c)).
// Errors: "non-isolated singularity" when a denominator vanishes,
// "eta not rational" when the Galois-invariant sum fails to land in Q
// (which would indicate a bug, not bad input).
Rational eta(const GroupData& g, const VirtualCharacter& x);

// Definitional eta table: entry (i,j) = eta(chi_i * conj(chi_j)).
// This is the serial reference; sweep.hpp has the cached kernel.
RationalMatrix eta_table(const GroupData& g);

// |G| delta_ik - n_i n_k, computed by explicitly summing
// chi_i(g) chi_k*(g) over g != 1 (the independent oracle for the
// chain identity).
Rational orthogonality_sum(const GroupData& g, size_t i, size_t k);

struct EtaReport {
    std::vector<Rational> per_irrep;  // eta(chi_i)
    RationalMatrix table;             // eta_{R_i (x) R_j^*}
    RationalMatrix chain;             // L = C~ * table
    RationalMatrix closed_form;       // n_i n_j / |G| - delta_ij
    bool chain_matches = false;
};

// Computes L_ij = sum_k C~_ik eta_{R_k (x) R_j*} both through the eta
// table and through the orthogonality closed form, and reports whether
// they agree entry-exactly.
EtaReport chain_identity(const GroupData& g);
EtaReport chain_identity(const GroupData& g, const RationalMatrix& table);

}  // namespace mckay
