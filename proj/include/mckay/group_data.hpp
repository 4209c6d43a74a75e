#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mckay/cyclotomic.hpp"

namespace mckay {

// Class function on the conjugacy classes of a fixed group, one
// cyclotomic value per class.
using VirtualCharacter = std::vector<Cyclotomic>;

struct GroupSpec {
    enum class Kind { Cyclic, Table };
    Kind kind = Kind::Cyclic;
    // cyclic
    int n = 0;                     // embedding dimension
    unsigned r = 0;                // group order
    std::vector<long> weights;     // n residues mod r
    // table
    std::string table_path;

    std::string display_name() const;
};

struct ConjClass {
    std::string label;
    unsigned size = 0;
    unsigned element_order = 0;
};

struct IrrepRow {
    unsigned index = 0;
    unsigned dim = 0;
    VirtualCharacter values;
};

// Immutable character-level description of a finite subgroup of
// SL(n,C): conjugacy classes, power maps, full character table and the
// distinguished embedding character chi_Q. No matrix representations
// are ever stored; every downstream formula consumes only this data.
class GroupData {
public:
    // Cyclic subgroup of SL(n,C) generated by diag(zeta^w_1,...,zeta^w_n).
    // Errors: "not in SL" when the weights do not sum to 0 mod r.
    static GroupData build_cyclic(const GroupSpec& spec);

    // Parse and validate a character-table file. All structural
    // invariants (identity class, size sum, exact row orthogonality,
    // chi_Q(1) = n, trivial first irrep, power maps up to n) are
    // checked; a table failing any of them is rejected.
    static GroupData load_table(const std::string& path);

    const std::string& name() const { return name_; }
    unsigned order() const { return order_; }
    unsigned conductor() const { return conductor_; }
    int embedding_dim() const { return embedding_dim_; }
    size_t num_classes() const { return classes_.size(); }
    size_t num_irreps() const { return table_.size(); }
    const std::vector<ConjClass>& classes() const { return classes_; }
    const std::vector<IrrepRow>& table() const { return table_; }
    const IrrepRow& irrep(size_t i) const { return table_.at(i); }
    const VirtualCharacter& q_char() const { return qchar_; }

    // Class index of g^k for g in class c; k in 1..n.
    unsigned power_class(unsigned k, unsigned c) const;
    unsigned max_power_map() const { return static_cast<unsigned>(power_maps_.size()); }

    bool abelian() const;

    // Weight vector when the group was built from a cyclic spec.
    const std::optional<std::vector<long>>& cyclic_weights() const { return cyclic_weights_; }

    // Full invariant check (used by load_table and tests).
    void validate() const;

private:
    GroupData() = default;

    std::string name_;
    unsigned order_ = 0;
    unsigned conductor_ = 1;
    int embedding_dim_ = 0;
    std::vector<ConjClass> classes_;
    std::vector<std::vector<unsigned>> power_maps_;  // [k-1][class], k = 1..n
    std::vector<IrrepRow> table_;
    VirtualCharacter qchar_;
    std::optional<std::vector<long>> cyclic_weights_;
};

// ---- character operations ----

// (1/|G|) sum_c |c| x(c) conj(y(c)).
Cyclotomic inner_product(const VirtualCharacter& x, const VirtualCharacter& y,
                         const GroupData& g);

VirtualCharacter trivial_character(const GroupData& g);
VirtualCharacter regular_character(const GroupData& g);
VirtualCharacter conj_character(const VirtualCharacter& x);
VirtualCharacter multiply_characters(const VirtualCharacter& x, const VirtualCharacter& y);

// Character of Lambda^k applied to the (virtual) character x, computed
// through the Newton recursion k e_k = sum (-1)^(m-1) e_(k-m) p_m with
// p_m(c) = x(c under the m-th power map).
VirtualCharacter exterior_power_char(const VirtualCharacter& x, unsigned k,
                                     const GroupData& g);

// True iff sum_k (-1)^k chi_{Lambda^k Q}(c) != 0 for every nonidentity
// class, i.e. det(I - g) != 0 for all g != 1.
bool is_free(const GroupData& g);

// Multiplicity vector (<x, chi_j>)_j; every entry must be a rational
// integer. Error "non-integral multiplicity" otherwise.
std::vector<long> decompose(const VirtualCharacter& x, const GroupData& g);

}  // namespace mckay
