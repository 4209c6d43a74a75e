#include <doctest.h>

#include <random>

#include "mckay/errors.hpp"
#include "mckay/eta.hpp"

using namespace mckay;

namespace {

GroupData cyclic(unsigned r, std::vector<long> w) {
    GroupSpec s;
    s.kind = GroupSpec::Kind::Cyclic;
    s.n = 3;
    s.r = r;
    s.weights = std::move(w);
    return GroupData::build_cyclic(s);
}

std::string data_path(const std::string& name) {
    return std::string(MCKAY_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("eta on the worked Z_3 values") {
    GroupData z3 = cyclic(3, {1, 1, 1});
    CHECK(eta(z3, trivial_character(z3)) == Rational(0));
    CHECK(eta(z3, z3.irrep(1).values) == make_rational(-1, 9));
    CHECK(eta(z3, z3.irrep(2).values) == make_rational(1, 9));

    CHECK_THROWS_WITH_AS(eta(cyclic(3, {1, 2, 0}), VirtualCharacter(3, Cyclotomic(1))),
                         "non-isolated singularity", McKayError);
}

TEST_CASE("eta table of Z_3 is the expected circulant") {
    GroupData z3 = cyclic(3, {1, 1, 1});
    RationalMatrix t = eta_table(z3);
    const Rational ninth = make_rational(1, 9);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            size_t d = (i + 3 - j) % 3;
            Rational expect = d == 0 ? Rational(0) : (d == 1 ? -ninth : ninth);
            CHECK(t.at(i, j) == expect);
        }
}

TEST_CASE("eta table is antisymmetric with zero diagonal") {
    for (auto [r, w] : std::vector<std::pair<unsigned, std::vector<long>>>{
             {5, {1, 1, 3}}, {7, {1, 2, 4}}, {11, {1, 3, 7}}}) {
        GroupData g = cyclic(r, w);
        RationalMatrix t = eta_table(g);
        for (size_t i = 0; i < t.rows(); ++i) {
            CHECK(t.at(i, i) == 0);
            for (size_t j = 0; j < t.cols(); ++j) CHECK(t.at(i, j) == -t.at(j, i));
        }
    }
}

TEST_CASE("eta is linear and flips sign under conjugation") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> coeff(-4, 4);
    GroupData g = cyclic(7, {1, 2, 4});

    auto random_virtual = [&] {
        VirtualCharacter x(g.num_classes(), Cyclotomic(0));
        for (size_t j = 0; j < g.num_irreps(); ++j) {
            Rational c(coeff(rng));
            for (size_t cl = 0; cl < x.size(); ++cl)
                x[cl] += c * g.irrep(j).values[cl];
        }
        return x;
    };

    for (int trial = 0; trial < 10; ++trial) {
        VirtualCharacter x = random_virtual(), y = random_virtual();
        VirtualCharacter sum(x.size());
        for (size_t c = 0; c < x.size(); ++c) sum[c] = x[c] + y[c];
        CHECK(eta(g, sum) == eta(g, x) + eta(g, y));

        Rational q = make_rational(coeff(rng), 3);
        VirtualCharacter scaled(x.size());
        for (size_t c = 0; c < x.size(); ++c) scaled[c] = q * x[c];
        CHECK(eta(g, scaled) == q * eta(g, x));

        CHECK(eta(g, conj_character(x)) == -eta(g, x));
    }
}

TEST_CASE("orthogonality sums") {
    GroupData z3 = cyclic(3, {1, 1, 1});
    for (size_t i = 0; i < 3; ++i)
        CHECK(orthogonality_sum(z3, i, i) == Rational(3 - 1));
    CHECK(orthogonality_sum(z3, 0, 1) == Rational(-1));

    GroupData icosa = GroupData::load_table(data_path("binary_icosahedral.tbl"));
    CHECK(orthogonality_sum(icosa, 0, 0) == Rational(119));
    for (size_t i = 0; i < icosa.num_irreps(); ++i)
        for (size_t k = 0; k < icosa.num_irreps(); ++k) {
            long ni = icosa.irrep(i).dim, nk = icosa.irrep(k).dim;
            Rational expect = Rational(i == k ? 120 : 0) - Rational(ni * nk);
            CHECK(orthogonality_sum(icosa, i, k) == expect);
        }
}

TEST_CASE("chain identity on the worked values") {
    GroupData z3 = cyclic(3, {1, 1, 1});
    EtaReport rep = chain_identity(z3);
    CHECK(rep.chain_matches);
    CHECK(rep.chain.at(1, 1) == make_rational(-2, 3));
    CHECK(rep.closed_form.at(1, 1) == make_rational(-2, 3));
    CHECK(rep.chain.at(1, 2) == make_rational(1, 3));
    CHECK(rep.per_irrep == std::vector<Rational>{Rational(0), make_rational(-1, 9),
                                                 make_rational(1, 9)});

    EtaReport z7 = chain_identity(cyclic(7, {1, 2, 4}));
    CHECK(z7.chain_matches);
    CHECK(z7.chain.rows() == 7);
    for (size_t i = 0; i < 7; ++i)
        for (size_t j = 0; j < 7; ++j)
            CHECK(z7.chain.at(i, j) ==
                  make_rational(1, 7) - Rational(i == j ? 1 : 0));
}
