#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mckay/group_data.hpp"
#include "mckay/rational_matrix.hpp"

namespace mckay {

// Optimized eta-table kernel: inverts each class denominator once and
// reuses it across all (i,j) entries, instead of re-deriving it per
// entry like the definitional eta_table(). With parallel=true the
// entry loop runs under OpenMP. Output is identical to eta_table().
RationalMatrix eta_table_kernel(const GroupData& g, bool parallel);

// All SL weight triples (w1,w2,w3) mod r whose action on C^3 \ {0} is
// free, i.e. every weight coprime to r.
std::vector<std::array<unsigned, 3>> free_weight_triples(unsigned r);

// One representative per sorted multiset; chi_Q (and hence everything
// downstream) only depends on the multiset of weights.
std::vector<std::array<unsigned, 3>> free_weight_multisets(unsigned r);

struct GroupCheckFailure {
    std::string group;
    std::string what;
};

// Exact per-group verification used by the n=3 suite: kernel of C~
// contains the dimension vector, det C != 0, eta table rational /
// antisymmetric / zero-diagonal, chain identity against the
// orthogonality closed form, and the kappa block form.
struct SweepSummary {
    unsigned max_r = 0;
    std::uint64_t triples_total = 0;    // all free triples counted
    std::uint64_t multisets_checked = 0;
    int kappa_epsilon = 0;              // global sign, 0 if inconsistent
    bool all_ok = false;
    std::vector<GroupCheckFailure> failures;
    double elapsed_seconds = 0.0;
};

SweepSummary run_free_triple_sweep(unsigned max_r, bool parallel);

}  // namespace mckay
