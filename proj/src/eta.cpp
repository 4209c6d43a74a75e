#include "mckay/eta.hpp"

#include "mckay/errors.hpp"
#include "mckay/mckay_core.hpp"

namespace mckay {

namespace {

void require_eta_preconditions(const GroupData& g) {
    if (g.embedding_dim() != 3) throw semantic_error("wrong dimension");
    if (!is_free(g)) throw semantic_error("non-isolated singularity");
}

// chi_{Lambda^2 Q}(c) - chi_Q(c) per class; zero denominators are the
// non-isolated case.
VirtualCharacter eta_denominators(const GroupData& g) {
    VirtualCharacter den = exterior_power_char(g.q_char(), 2, g);
    for (size_t c = 0; c < den.size(); ++c) den[c] -= g.q_char()[c];
    for (size_t c = 1; c < den.size(); ++c)
        if (den[c].is_zero()) throw semantic_error("non-isolated singularity");
    return den;
}

Rational eta_from_inverse_denominators(const GroupData& g, const VirtualCharacter& x,
                                       const VirtualCharacter& inv_den) {
    Cyclotomic sum;
    for (size_t c = 1; c < g.num_classes(); ++c) {
        if (x[c].is_zero()) continue;
        Cyclotomic term = x[c] * inv_den[c];
        term *= Rational(g.classes()[c].size);
        sum += term;
    }
    sum *= make_rational(1, static_cast<long>(g.order()));
    if (!sum.is_rational()) throw internal_error("eta not rational");
    return sum.to_rational();
}

}  // namespace

Rational eta(const GroupData& g, const VirtualCharacter& x) {
    require_eta_preconditions(g);
    if (x.size() != g.num_classes()) throw semantic_error("class function length mismatch");
    VirtualCharacter den = eta_denominators(g);
    VirtualCharacter inv_den(g.num_classes());
    for (size_t c = 1; c < den.size(); ++c) inv_den[c] = den[c].inverse();
    return eta_from_inverse_denominators(g, x, inv_den);
}

RationalMatrix eta_table(const GroupData& g) {
    require_eta_preconditions(g);
    const size_t n = g.num_irreps();
    RationalMatrix t(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            t.at(i, j) = eta(g, multiply_characters(g.irrep(i).values,
                                                    conj_character(g.irrep(j).values)));
    return t;
}

Rational orthogonality_sum(const GroupData& g, size_t i, size_t k) {
    const auto& xi = g.irrep(i).values;
    const auto& xk = g.irrep(k).values;
    Cyclotomic sum;
    for (size_t c = 1; c < g.num_classes(); ++c) {
        Cyclotomic term = xi[c] * xk[c].conj();
        term *= Rational(g.classes()[c].size);
        sum += term;
    }
    if (!sum.is_rational()) throw internal_error("orthogonality sum not rational");
    return sum.to_rational();
}

EtaReport chain_identity(const GroupData& g, const RationalMatrix& table) {
    require_eta_preconditions(g);
    CartanBundle cartan = generalized_cartan(g);
    const size_t n = g.num_irreps();

    EtaReport rep;
    rep.table = table;
    for (size_t i = 0; i < n; ++i) rep.per_irrep.push_back(table.at(i, 0));

    rep.chain = cartan.extended * rep.table;

    rep.closed_form = RationalMatrix(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rational v = make_rational(
                static_cast<long>(g.irrep(i).dim) * static_cast<long>(g.irrep(j).dim),
                static_cast<long>(g.order()));
            if (i == j) v -= 1;
            rep.closed_form.at(i, j) = v;
        }

    rep.chain_matches = rep.chain == rep.closed_form;
    return rep;
}

EtaReport chain_identity(const GroupData& g) {
    return chain_identity(g, eta_table(g));
}

}  // namespace mckay
