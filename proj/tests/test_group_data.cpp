#include <doctest.h>

#include <fstream>
#include <numeric>
#include <sstream>

#include "mckay/errors.hpp"
#include "mckay/group_data.hpp"

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

std::string data_path(const std::string& name) {
    return std::string(MCKAY_DATA_DIR) + "/" + name;
}

Cyclotomic omega(long k) { return Cyclotomic::root_of_unity(3, k); }

// Column orthogonality: sum_i chi_i(c) conj(chi_i(c')) = delta |G|/|c|.
void check_column_orthogonality(const GroupData& g) {
    for (size_t c = 0; c < g.num_classes(); ++c)
        for (size_t d = c; d < g.num_classes(); ++d) {
            Cyclotomic sum;
            for (const auto& row : g.table()) sum += row.values[c] * row.values[d].conj();
            Cyclotomic expected(c == d ? make_rational(g.order(), g.classes()[c].size)
                                       : Rational(0));
            CHECK(sum == expected);
        }
}

}  // namespace

TEST_CASE("build_cyclic evaluates the embedding character") {
    GroupData z2 = GroupData::build_cyclic(cyclic_spec(2, 2, {1, 1}));
    CHECK(z2.q_char()[0] == Cyclotomic(2));
    CHECK(z2.q_char()[1] == Cyclotomic(-2));

    GroupData z3 = GroupData::build_cyclic(cyclic_spec(3, 3, {1, 1, 1}));
    CHECK(z3.q_char()[0] == Cyclotomic(3));
    CHECK(z3.q_char()[1] == Rational(3) * omega(1));
    CHECK(z3.q_char()[2] == Rational(3) * omega(2));

    CHECK_THROWS_WITH_AS(GroupData::build_cyclic(cyclic_spec(3, 3, {1, 1, 2})),
                         "not in SL", McKayError);

    // weights are residues mod r; zero weights are legal input
    GroupData z5 = GroupData::build_cyclic(cyclic_spec(3, 5, {6, 7, 7}));
    CHECK(z5.cyclic_weights() == std::vector<long>{1, 2, 2});
    CHECK_NOTHROW(GroupData::build_cyclic(cyclic_spec(3, 3, {1, 2, 0})));
}

TEST_CASE("bundled character tables load and validate") {
    struct Expect {
        const char* file;
        unsigned order;
        size_t irreps;
    };
    const Expect expected[] = {
        {"binary_dihedral_2.tbl", 8, 5},   {"binary_dihedral_3.tbl", 12, 6},
        {"binary_dihedral_4.tbl", 16, 7},  {"binary_dihedral_5.tbl", 20, 8},
        {"binary_tetrahedral.tbl", 24, 7}, {"binary_octahedral.tbl", 48, 8},
        {"binary_icosahedral.tbl", 120, 9},
    };
    for (const auto& e : expected) {
        GroupData g = GroupData::load_table(data_path(e.file));
        CHECK(g.order() == e.order);
        CHECK(g.num_irreps() == e.irreps);
        CHECK(g.embedding_dim() == 2);
        CHECK_FALSE(g.abelian());
        check_column_orthogonality(g);

        unsigned long dimsq = 0;
        for (const auto& row : g.table()) dimsq += row.dim * row.dim;
        CHECK(dimsq == g.order());
    }
}

TEST_CASE("corrupted tables are rejected") {
    std::ifstream in(data_path("binary_tetrahedral.tbl"));
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string original = buf.str();

    auto load_patched = [&](const std::string& from, const std::string& to) {
        std::string text = original;
        auto pos = text.find(from);
        REQUIRE(pos != std::string::npos);
        text.replace(pos, from.size(), to);
        std::string tmp = "/tmp/corrupt_table.tbl";
        std::ofstream out(tmp);
        out << text;
        out.close();
        return GroupData::load_table(tmp);
    };

    CHECK_THROWS_WITH_AS(load_patched("values 3 3 -1", "values 3 3 -2"),
                         "orthogonality violated", McKayError);
    CHECK_THROWS_WITH_AS(load_patched("class 2 size 6", "class 2 size 5"),
                         "class sizes do not sum to |G|", McKayError);
    CHECK_THROWS_WITH_AS(load_patched("powermap 2 0 0 1 4 3 4 3", "# no powermap"),
                         "missing power map", McKayError);
    CHECK_THROWS_AS(load_patched("irrep 6 dim 3", "irrep 6 dim 4"), McKayError);
}

TEST_CASE("inner products") {
    GroupData z3 = GroupData::build_cyclic(cyclic_spec(3, 3, {1, 1, 1}));
    for (size_t i = 0; i < z3.num_irreps(); ++i)
        CHECK(inner_product(z3.irrep(i).values, z3.irrep(i).values, z3) == Cyclotomic(1));
    CHECK(inner_product(z3.q_char(), z3.irrep(0).values, z3) == Cyclotomic(0));

    GroupData icosa = GroupData::load_table(data_path("binary_icosahedral.tbl"));
    VirtualCharacter reg = regular_character(icosa);
    for (size_t i = 0; i < icosa.num_irreps(); ++i)
        CHECK(inner_product(reg, icosa.irrep(i).values, icosa) ==
              Cyclotomic(Rational(icosa.irrep(i).dim)));
}

TEST_CASE("exterior powers via the Newton recursion") {
    GroupData z3 = GroupData::build_cyclic(cyclic_spec(3, 3, {1, 1, 1}));
    CHECK(exterior_power_char(z3.q_char(), 0, z3) == trivial_character(z3));

    VirtualCharacter lambda2 = exterior_power_char(z3.q_char(), 2, z3);
    CHECK(lambda2[1] == Rational(3) * omega(2));

    // Lambda^n Q is the determinant character, trivial for SL specs.
    for (auto [r, w] : std::vector<std::pair<unsigned, std::vector<long>>>{
             {3, {1, 1, 1}}, {7, {1, 2, 4}}, {9, {1, 3, 5}}, {10, {1, 2, 7}}}) {
        GroupData g = GroupData::build_cyclic(cyclic_spec(3, r, w));
        CHECK(exterior_power_char(g.q_char(), 3, g) == trivial_character(g));
    }
    GroupData icosa = GroupData::load_table(data_path("binary_icosahedral.tbl"));
    CHECK(exterior_power_char(icosa.q_char(), 2, icosa) == trivial_character(icosa));

    GroupData z2 = GroupData::build_cyclic(cyclic_spec(2, 4, {1, 3}));
    CHECK_THROWS_WITH_AS(exterior_power_char(z2.q_char(), 3, z2), "power map missing",
                         McKayError);
}

TEST_CASE("freeness test and its arithmetic oracle") {
    CHECK(is_free(GroupData::build_cyclic(cyclic_spec(3, 3, {1, 1, 1}))));
    CHECK_FALSE(is_free(GroupData::build_cyclic(cyclic_spec(3, 3, {1, 2, 0}))));
    CHECK(is_free(GroupData::build_cyclic(cyclic_spec(3, 7, {1, 2, 4}))));

    // independent oracle: free iff every weight coprime to r
    for (unsigned r = 2; r <= 20; ++r)
        for (unsigned a = 0; a < r; ++a)
            for (unsigned b = 0; b < r; ++b) {
                unsigned c = (2 * r - (a + b) % r) % r;
                GroupData g = GroupData::build_cyclic(
                    cyclic_spec(3, r, {static_cast<long>(a), static_cast<long>(b),
                                       static_cast<long>(c)}));
                bool coprime = std::gcd(a, r) == 1 && std::gcd(b, r) == 1 &&
                               std::gcd(c, r) == 1;
                CHECK(is_free(g) == coprime);
            }
}

TEST_CASE("decompose returns exact multiplicities") {
    GroupData z3 = GroupData::build_cyclic(cyclic_spec(3, 3, {1, 1, 1}));
    CHECK(decompose(regular_character(z3), z3) == std::vector<long>{1, 1, 1});
    CHECK(decompose(z3.q_char(), z3) == std::vector<long>{0, 3, 0});

    // chi_Q = 2 chi_1 on Z_2(1,1), so Q (x) Q = 4 R_0
    GroupData z2 = GroupData::build_cyclic(cyclic_spec(2, 2, {1, 1}));
    VirtualCharacter qq = multiply_characters(z2.q_char(), z2.q_char());
    CHECK(qq[0] == Cyclotomic(4));
    CHECK(qq[1] == Cyclotomic(4));
    CHECK(decompose(qq, z2) == std::vector<long>{4, 0});

    // reassembling the multiplicities reproduces the character
    GroupData octa = GroupData::load_table(data_path("binary_octahedral.tbl"));
    VirtualCharacter x = multiply_characters(octa.q_char(), octa.irrep(6).values);
    auto m = decompose(x, octa);
    VirtualCharacter rebuilt(octa.num_classes(), Cyclotomic(0));
    for (size_t j = 0; j < m.size(); ++j)
        for (size_t c = 0; c < rebuilt.size(); ++c)
            rebuilt[c] += Rational(m[j]) * octa.irrep(j).values[c];
    CHECK(rebuilt == x);

    // a malformed class function has non-integral multiplicities
    VirtualCharacter bad(z3.num_classes(), Cyclotomic(0));
    bad[1] = Cyclotomic(1);
    CHECK_THROWS_WITH_AS(decompose(bad, z3), "non-integral multiplicity", McKayError);
}

TEST_CASE("regular representation of cyclic groups decomposes with multiplicity one") {
    for (unsigned r : {4u, 6u, 11u}) {
        GroupData g = GroupData::build_cyclic(
            cyclic_spec(3, r, {1, 1, static_cast<long>(2 * r - 2) % static_cast<long>(r)}));
        auto m = decompose(regular_character(g), g);
        for (long v : m) CHECK(v == 1);
        check_column_orthogonality(g);
    }
}
