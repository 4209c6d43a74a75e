#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mckay/group_data.hpp"
#include "mckay/rational_matrix.hpp"

namespace mckay {

// Multiplicity data of the McKay quiver: a_ij from tensoring with Q,
// and for n=3 the coarrow multiplicities b_ij from Lambda^2 Q.
struct McKayQuiver {
    std::vector<unsigned> dims;
    std::vector<std::vector<long>> arrows;              // a_ij
    std::optional<std::vector<std::vector<long>>> coarrows;  // b_ij, n=3 only
};

McKayQuiver adjacency(const GroupData& g);

struct CartanBundle {
    enum class Mode { ClassicalN2, GeneralizedN3 };
    Mode mode;
    RationalMatrix extended;  // (r+1) x (r+1)
    RationalMatrix reduced;   // extended with row/col 0 removed
    RationalMatrix inverse;   // exact inverse of reduced
};

// A = 2I - C~ rearranged: extended Cartan matrix 2I - a for n=2.
CartanBundle classical_cartan(const GroupData& g);

// C~ = [a_ij - b_ij] for n=3; requires a free action and abelian G.
// "singular Cartan matrix" would contradict the invertibility the
// theory guarantees, so it surfaces as an internal error.
CartanBundle generalized_cartan(const GroupData& g);

// C^{-1}: the predicted pairing matrix for n=3.
RationalMatrix pairing_matrix(const GroupData& g);

// Affine ADE classification of an n=2 quiver by arm decomposition
// against the affine templates; errors with "not ADE" when nothing
// matches. vertex_map[t] = quiver vertex placed at template vertex t.
struct AdeResult {
    std::string label;  // "A3", "D6", "E8", ...
    std::vector<size_t> vertex_map;
};

AdeResult ade_classify(const McKayQuiver& q);

// Adjacency matrix of the affine diagram for a label like "A5"/"D7"/"E6"
// (the extended diagram, so an (index+1)-vertex graph).
std::vector<std::vector<long>> affine_ade_adjacency(const std::string& label);

// Matrix of multiplication by sum (-1)^i Lambda^i Q on R(G), source
// basis {R_reg, R_1, ..., R_r}, target basis {R_0, R_i - n_i R_0}
// (columns indexed by source). The block check asserts row 0 and
// column 0 vanish and the lower block equals epsilon * C.
struct KappaReport {
    RationalMatrix matrix;
    bool block_ok = false;
    int epsilon = 0;  // sign relating the block to the reduced Cartan matrix
};

KappaReport kappa_matrix(const GroupData& g);

// DOT digraph, one edge per unit of multiplicity; coarrows dashed.
std::string quiver_dot(const McKayQuiver& q);

}  // namespace mckay
