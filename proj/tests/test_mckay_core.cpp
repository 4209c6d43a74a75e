#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mckay/errors.hpp"
#include "mckay/mckay_core.hpp"

using namespace mckay;

namespace {

GroupSpec cyclic_spec(int n, unsigned r, std::vector<long> w) {
    GroupSpec s;
    s.kind = GroupSpec::Kind::Cyclic;
    s.n = n;
    s.r = r;
    s.weights = std::move(w);
    return s;
}

GroupData cyclic(int n, unsigned r, std::vector<long> w) {
    return GroupData::build_cyclic(cyclic_spec(n, r, std::move(w)));
}

GroupData table(const std::string& name) {
    return GroupData::load_table(std::string(MCKAY_DATA_DIR) + "/" + name);
}

size_t count_substr(const std::string& hay, const std::string& needle) {
    size_t n = 0;
    for (size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + 1))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("adjacency of the basic cyclic groups") {
    McKayQuiver z2 = adjacency(cyclic(2, 2, {1, 1}));
    CHECK(z2.arrows == std::vector<std::vector<long>>{{0, 2}, {2, 0}});
    CHECK_FALSE(z2.coarrows.has_value());

    McKayQuiver z3 = adjacency(cyclic(3, 3, {1, 1, 1}));
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            CHECK(z3.arrows[i][j] == (j == (i + 1) % 3 ? 3 : 0));
            CHECK((*z3.coarrows)[i][j] == (j == (i + 2) % 3 ? 3 : 0));
        }
}

TEST_CASE("classical Cartan bundle") {
    CartanBundle z2 = classical_cartan(cyclic(2, 2, {1, 1}));
    CHECK(z2.extended == RationalMatrix{{2, -2}, {-2, 2}});
    CHECK(z2.reduced == RationalMatrix{{2}});
    CHECK(z2.inverse.at(0, 0) == make_rational(1, 2));

    // Z_k(1,k-1) reduces to the tridiagonal A_{k-1} Cartan matrix
    for (unsigned k : {3u, 5u, 8u}) {
        CartanBundle c = classical_cartan(cyclic(2, k, {1, static_cast<long>(k) - 1}));
        for (size_t i = 0; i < k - 1; ++i)
            for (size_t j = 0; j < k - 1; ++j) {
                long expect = i == j ? 2 : (i + 1 == j || j + 1 == i ? -1 : 0);
                CHECK(c.reduced.at(i, j) == Rational(expect));
            }
    }

    // dimension vector lies in the kernel of the extended matrix
    for (const char* name : {"binary_tetrahedral.tbl", "binary_octahedral.tbl",
                             "binary_icosahedral.tbl", "binary_dihedral_4.tbl"}) {
        GroupData g = table(name);
        CartanBundle c = classical_cartan(g);
        std::vector<Rational> dims;
        for (const auto& row : g.table()) dims.emplace_back(row.dim);
        for (const auto& v : c.extended.apply(dims)) CHECK(v == 0);
    }

    CHECK_THROWS_WITH_AS(classical_cartan(cyclic(3, 3, {1, 1, 1})), "wrong dimension",
                         McKayError);
}

TEST_CASE("generalized Cartan bundle") {
    CartanBundle z3 = generalized_cartan(cyclic(3, 3, {1, 1, 1}));
    CHECK(z3.extended == RationalMatrix{{0, 3, -3}, {-3, 0, 3}, {3, -3, 0}});
    CHECK(z3.reduced == RationalMatrix{{0, 3}, {-3, 0}});
    RationalMatrix expected_inv(2, 2);
    expected_inv.at(0, 1) = make_rational(-1, 3);
    expected_inv.at(1, 0) = make_rational(1, 3);
    CHECK(z3.inverse == expected_inv);

    CartanBundle z7 = generalized_cartan(cyclic(3, 7, {1, 2, 4}));
    CHECK(z7.reduced.rows() == 6);
    CHECK(z7.reduced.determinant() != 0);

    CHECK_THROWS_WITH_AS(generalized_cartan(cyclic(2, 2, {1, 1})), "wrong dimension",
                         McKayError);
    CHECK_THROWS_WITH_AS(generalized_cartan(cyclic(3, 3, {1, 2, 0})), "not free",
                         McKayError);
}

TEST_CASE("generalized Cartan rejects nonabelian groups") {
    // binary tetrahedral data rewritten as an SL(3) embedding through its
    // 3-dimensional representation
    std::ifstream in(std::string(MCKAY_DATA_DIR) + "/binary_tetrahedral.tbl");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto pos = text.find("embedding_dim 2");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 15, "embedding_dim 3");
    pos = text.find("powermap 2 0 0 1 4 3 4 3");
    REQUIRE(pos != std::string::npos);
    text.insert(pos + 24, "\npowermap 3 0 1 2 0 0 1 1");
    pos = text.find("qchar values 2 -2 0 -1 -1 1 1");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 29, "qchar values 3 3 -1 0 0 0 0");

    std::string tmp = "/tmp/tetra_so3.tbl";
    std::ofstream out(tmp);
    out << text;
    out.close();
    GroupData g = GroupData::load_table(tmp);
    CHECK(g.embedding_dim() == 3);
    CHECK_THROWS_WITH_AS(generalized_cartan(g), "nonabelian unsupported", McKayError);
}

TEST_CASE("n=3 extended Cartan is antisymmetric with the dims in its kernel") {
    for (auto [r, w] : std::vector<std::pair<unsigned, std::vector<long>>>{
             {3, {1, 1, 1}}, {7, {1, 2, 4}}, {11, {1, 3, 7}}, {13, {2, 5, 6}}}) {
        GroupData g = cyclic(3, r, w);
        CartanBundle c = generalized_cartan(g);
        CHECK(c.extended == -c.extended.transpose());
        std::vector<Rational> dims(g.num_irreps(), Rational(1));
        for (const auto& v : c.extended.apply(dims)) CHECK(v == 0);
    }
}

TEST_CASE("ADE classification of the five families") {
    CHECK(ade_classify(adjacency(cyclic(2, 2, {1, 1}))).label == "A1");
    for (unsigned k : {3u, 4u, 7u})
        CHECK(ade_classify(adjacency(cyclic(2, k, {1, static_cast<long>(k) - 1}))).label ==
              "A" + std::to_string(k - 1));

    CHECK(ade_classify(adjacency(table("binary_dihedral_2.tbl"))).label == "D4");
    CHECK(ade_classify(adjacency(table("binary_dihedral_3.tbl"))).label == "D5");
    CHECK(ade_classify(adjacency(table("binary_dihedral_4.tbl"))).label == "D6");
    CHECK(ade_classify(adjacency(table("binary_dihedral_5.tbl"))).label == "D7");
    CHECK(ade_classify(adjacency(table("binary_tetrahedral.tbl"))).label == "E6");
    CHECK(ade_classify(adjacency(table("binary_octahedral.tbl"))).label == "E7");
    CHECK(ade_classify(adjacency(table("binary_icosahedral.tbl"))).label == "E8");

    McKayQuiver corrupt;
    corrupt.dims = {1, 1, 1};
    corrupt.arrows = {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}};  // disconnected
    CHECK_THROWS_WITH_AS(ade_classify(corrupt), "not ADE", McKayError);
}

TEST_CASE("classified quivers match the affine templates entrywise") {
    for (const char* name :
         {"binary_dihedral_2.tbl", "binary_dihedral_3.tbl", "binary_dihedral_4.tbl",
          "binary_dihedral_5.tbl", "binary_tetrahedral.tbl", "binary_octahedral.tbl",
          "binary_icosahedral.tbl"}) {
        GroupData g = table(name);
        McKayQuiver q = adjacency(g);
        AdeResult ade = ade_classify(q);
        auto tmpl = affine_ade_adjacency(ade.label);
        CartanBundle c = classical_cartan(g);
        for (size_t i = 0; i < tmpl.size(); ++i)
            for (size_t j = 0; j < tmpl.size(); ++j) {
                CHECK(q.arrows[ade.vertex_map[i]][ade.vertex_map[j]] == tmpl[i][j]);
                long cartan_entry = (i == j ? 2 : 0) - tmpl[i][j];
                CHECK(c.extended.at(ade.vertex_map[i], ade.vertex_map[j]) ==
                      Rational(cartan_entry));
            }
    }
}

TEST_CASE("kappa block form") {
    GroupData z3 = cyclic(3, 3, {1, 1, 1});
    KappaReport k3 = kappa_matrix(z3);
    CHECK(k3.block_ok);
    for (size_t i = 0; i < 3; ++i) {
        CHECK(k3.matrix.at(0, i) == 0);
        CHECK(k3.matrix.at(i, 0) == 0);
    }
    CartanBundle c3 = generalized_cartan(z3);
    RationalMatrix block = k3.matrix.minor_without(0);
    CHECK(block == (k3.epsilon == 1 ? c3.reduced : -c3.reduced));

    KappaReport k7 = kappa_matrix(cyclic(3, 7, {1, 2, 4}));
    CHECK(k7.block_ok);
    CHECK(k7.epsilon == k3.epsilon);
}

TEST_CASE("pairing matrix") {
    RationalMatrix p = pairing_matrix(cyclic(3, 3, {1, 1, 1}));
    CHECK(p.at(0, 0) == 0);
    CHECK(p.at(0, 1) == make_rational(-1, 3));
    CHECK(p.at(1, 0) == make_rational(1, 3));
    CHECK(p.at(1, 1) == 0);

    for (auto [r, w] : std::vector<std::pair<unsigned, std::vector<long>>>{
             {5, {1, 1, 3}}, {7, {1, 2, 4}}}) {
        GroupData g = cyclic(3, r, w);
        CHECK(pairing_matrix(g) * generalized_cartan(g).reduced ==
              RationalMatrix::identity(r - 1));
    }

    // n=2 comparison: -C^-1 for Z_k(1,k-1) has the closed form
    // -min(i,j)(k - max(i,j))/k (1-indexed)
    for (unsigned k : {4u, 9u, 12u}) {
        CartanBundle c = classical_cartan(cyclic(2, k, {1, static_cast<long>(k) - 1}));
        for (size_t i = 1; i < k; ++i)
            for (size_t j = 1; j < k; ++j) {
                long lo = static_cast<long>(std::min(i, j));
                long hi = static_cast<long>(std::max(i, j));
                CHECK(-c.inverse.at(i - 1, j - 1) ==
                      make_rational(-lo * (static_cast<long>(k) - hi), static_cast<long>(k)));
            }
        CHECK((-c.inverse) * c.reduced == -RationalMatrix::identity(k - 1));
    }
}

TEST_CASE("quiver DOT output") {
    std::string z2 = quiver_dot(adjacency(cyclic(2, 2, {1, 1})));
    CHECK(count_substr(z2, "label=\"R0 (dim 1)\"") == 1);
    CHECK(count_substr(z2, "->") == 4);
    CHECK(count_substr(z2, "dashed") == 0);

    std::string z3 = quiver_dot(adjacency(cyclic(3, 3, {1, 1, 1})));
    CHECK(count_substr(z3, "->") == 18);
    CHECK(count_substr(z3, "dashed") == 9);

    McKayQuiver empty;
    empty.dims = {1, 1};
    empty.arrows = {{0, 0}, {0, 0}};
    std::string dot = quiver_dot(empty);
    CHECK(count_substr(dot, "v0") == 1);
    CHECK(count_substr(dot, "->") == 0);
}
