#include "mckay/mckay_core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mckay/errors.hpp"

namespace mckay {

McKayQuiver adjacency(const GroupData& g) {
    McKayQuiver q;
    for (const auto& row : g.table()) q.dims.push_back(row.dim);

    for (const auto& row : g.table()) {
        auto mult = decompose(multiply_characters(row.values, g.q_char()), g);
        for (long m : mult)
            if (m < 0) throw internal_error("negative arrow multiplicity");
        q.arrows.push_back(std::move(mult));
    }

    if (g.embedding_dim() == 3) {
        VirtualCharacter lambda2 = exterior_power_char(g.q_char(), 2, g);
        std::vector<std::vector<long>> b;
        for (const auto& row : g.table())
            b.push_back(decompose(multiply_characters(row.values, lambda2), g));
        q.coarrows = std::move(b);
    }
    return q;
}

namespace {

RationalMatrix long_matrix(const std::vector<std::vector<long>>& m) {
    RationalMatrix out(m.size(), m.empty() ? 0 : m[0].size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) out.at(i, j) = Rational(m[i][j]);
    return out;
}

}  // namespace

CartanBundle classical_cartan(const GroupData& g) {
    if (g.embedding_dim() != 2) throw semantic_error("wrong dimension");
    McKayQuiver q = adjacency(g);
    const size_t n = q.dims.size();
    RationalMatrix ext = long_matrix(q.arrows);
    ext = -ext;
    for (size_t i = 0; i < n; ++i) ext.at(i, i) += 2;

    CartanBundle out;
    out.mode = CartanBundle::Mode::ClassicalN2;
    out.reduced = ext.minor_without(0);
    out.inverse = out.reduced.inverse();
    out.extended = std::move(ext);
    return out;
}

CartanBundle generalized_cartan(const GroupData& g) {
    if (g.embedding_dim() != 3) throw semantic_error("wrong dimension");
    if (!g.abelian()) throw semantic_error("nonabelian unsupported");
    if (!is_free(g)) throw semantic_error("not free");

    McKayQuiver q = adjacency(g);
    RationalMatrix ext = long_matrix(q.arrows) + (-long_matrix(*q.coarrows));

    CartanBundle out;
    out.mode = CartanBundle::Mode::GeneralizedN3;
    out.reduced = ext.minor_without(0);
    try {
        out.inverse = out.reduced.inverse();
    } catch (const McKayError&) {
        throw internal_error("singular Cartan matrix");
    }
    out.extended = std::move(ext);
    return out;
}

RationalMatrix pairing_matrix(const GroupData& g) {
    return generalized_cartan(g).inverse;
}

// ---- affine ADE templates and classification ----

std::vector<std::vector<long>> affine_ade_adjacency(const std::string& label) {
    if (label.size() < 2) throw semantic_error("bad ADE label '" + label + "'");
    const char family = label[0];
    unsigned k = 0;
    try {
        k = static_cast<unsigned>(std::stoul(label.substr(1)));
    } catch (const std::exception&) {
        throw semantic_error("bad ADE label '" + label + "'");
    }

    auto empty_graph = [](size_t v) {
        return std::vector<std::vector<long>>(v, std::vector<long>(v, 0));
    };
    auto link = [](std::vector<std::vector<long>>& a, size_t i, size_t j) {
        a[i][j] += 1;
        a[j][i] += 1;
    };

    if (family == 'A') {
        if (k == 1) {
            auto a = empty_graph(2);
            a[0][1] = a[1][0] = 2;
            return a;
        }
        if (k < 1) throw semantic_error("bad ADE label '" + label + "'");
        auto a = empty_graph(k + 1);
        for (size_t i = 0; i + 1 <= k; ++i) link(a, i, i + 1);
        link(a, 0, k);
        return a;
    }
    if (family == 'D') {
        if (k < 4) throw semantic_error("bad ADE label '" + label + "'");
        // [leafA1, leafA2, p_1..p_{k-3}, leafB1, leafB2]
        auto a = empty_graph(k + 1);
        const size_t p0 = 2, plast = 2 + (k - 3) - 1;
        link(a, 0, p0);
        link(a, 1, p0);
        for (size_t i = p0; i < plast; ++i) link(a, i, i + 1);
        link(a, plast + 1, plast);
        link(a, plast + 2, plast);
        return a;
    }
    if (family == 'E') {
        // Arms of lengths (l1,l2,l3) around a degree-3 center; vertices
        // listed leaf-inward per arm, center last.
        std::vector<size_t> arms;
        if (k == 6) arms = {2, 2, 2};
        else if (k == 7) arms = {3, 3, 1};
        else if (k == 8) arms = {5, 2, 1};
        else throw semantic_error("bad ADE label '" + label + "'");
        const size_t v = arms[0] + arms[1] + arms[2] + 1;
        auto a = empty_graph(v);
        const size_t center = v - 1;
        size_t base = 0;
        for (size_t len : arms) {
            for (size_t i = 0; i + 1 < len; ++i) link(a, base + i, base + i + 1);
            link(a, base + len - 1, center);
            base += len;
        }
        return a;
    }
    throw semantic_error("bad ADE label '" + label + "'");
}

namespace {

struct Graph {
    size_t v;
    std::vector<std::vector<long>> adj;
    std::vector<size_t> deg;  // edge-multiplicity degree
    std::vector<std::vector<size_t>> nbrs;
};

Graph build_graph(const McKayQuiver& q) {
    Graph g;
    g.v = q.dims.size();
    g.adj.assign(g.v, std::vector<long>(g.v, 0));
    for (size_t i = 0; i < g.v; ++i)
        for (size_t j = 0; j < g.v; ++j) g.adj[i][j] = q.arrows[i][j];
    for (size_t i = 0; i < g.v; ++i)
        for (size_t j = 0; j < g.v; ++j)
            if (g.adj[i][j] != g.adj[j][i]) throw semantic_error("not ADE");
    g.deg.assign(g.v, 0);
    g.nbrs.assign(g.v, {});
    for (size_t i = 0; i < g.v; ++i) {
        if (g.adj[i][i] != 0) throw semantic_error("not ADE");
        for (size_t j = 0; j < g.v; ++j) {
            if (i == j || g.adj[i][j] == 0) continue;
            g.deg[i] += static_cast<size_t>(g.adj[i][j]);
            g.nbrs[i].push_back(j);
        }
    }
    // connectivity
    std::vector<char> seen(g.v, 0);
    std::vector<size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        size_t x = stack.back();
        stack.pop_back();
        for (size_t y : g.nbrs[x])
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(g.v))
        throw semantic_error("not ADE");
    return g;
}

// Walk a degree <=2 path away from `from` starting at `first`,
// collecting vertices until a leaf; returns the walk inward->outward.
std::vector<size_t> walk_arm(const Graph& g, size_t from, size_t first) {
    std::vector<size_t> arm{first};
    size_t prev = from, cur = first;
    while (g.deg[cur] == 2) {
        size_t next = g.nbrs[cur][0] == prev ? g.nbrs[cur][1] : g.nbrs[cur][0];
        arm.push_back(next);
        prev = cur;
        cur = next;
    }
    if (g.deg[cur] != 1) throw semantic_error("not ADE");
    return arm;
}

void verify_map(const McKayQuiver& q, const std::vector<std::vector<long>>& tmpl,
                const std::vector<size_t>& map) {
    for (size_t i = 0; i < map.size(); ++i)
        for (size_t j = 0; j < map.size(); ++j)
            if (q.arrows[map[i]][map[j]] != tmpl[i][j])
                throw internal_error("ADE vertex map mismatch");
}

}  // namespace

AdeResult ade_classify(const McKayQuiver& q) {
    Graph g = build_graph(q);
    AdeResult out;

    if (g.v == 2) {
        if (g.adj[0][1] == 2) {
            out.label = "A1";
            out.vertex_map = {0, 1};
            verify_map(q, affine_ade_adjacency(out.label), out.vertex_map);
            return out;
        }
        throw semantic_error("not ADE");
    }
    for (size_t i = 0; i < g.v; ++i)
        for (size_t j = 0; j < g.v; ++j)
            if (g.adj[i][j] > 1) throw semantic_error("not ADE");

    const size_t deg3 = static_cast<size_t>(
        std::count(g.deg.begin(), g.deg.end(), static_cast<size_t>(3)));
    const size_t deg4 = static_cast<size_t>(
        std::count(g.deg.begin(), g.deg.end(), static_cast<size_t>(4)));
    const bool all_deg2 =
        std::all_of(g.deg.begin(), g.deg.end(), [](size_t d) { return d == 2; });

    if (all_deg2) {
        // cycle: affine A_{v-1}
        out.label = "A" + std::to_string(g.v - 1);
        std::vector<size_t> map{0};
        size_t prev = 0, cur = std::min(g.nbrs[0][0], g.nbrs[0][1]);
        while (cur != 0) {
            map.push_back(cur);
            size_t next = g.nbrs[cur][0] == prev ? g.nbrs[cur][1] : g.nbrs[cur][0];
            prev = cur;
            cur = next;
        }
        if (map.size() != g.v) throw semantic_error("not ADE");
        out.vertex_map = std::move(map);
        verify_map(q, affine_ade_adjacency(out.label), out.vertex_map);
        return out;
    }

    if (deg4 == 1 && g.v == 5) {
        // affine D_4 star
        size_t center = 0;
        while (g.deg[center] != 4) ++center;
        std::vector<size_t> leaves;
        for (size_t i = 0; i < g.v; ++i)
            if (i != center) {
                if (g.deg[i] != 1) throw semantic_error("not ADE");
                leaves.push_back(i);
            }
        out.label = "D4";
        out.vertex_map = {leaves[0], leaves[1], center, leaves[2], leaves[3]};
        verify_map(q, affine_ade_adjacency(out.label), out.vertex_map);
        return out;
    }

    if (deg3 == 2 && deg4 == 0) {
        // affine D_k, k >= 5: two forks joined by a path, two leaves each
        std::vector<size_t> forks;
        for (size_t i = 0; i < g.v; ++i)
            if (g.deg[i] == 3) forks.push_back(i);
        auto fork_leaves = [&](size_t f) {
            std::vector<size_t> ls;
            for (size_t y : g.nbrs[f])
                if (g.deg[y] == 1) ls.push_back(y);
            return ls;
        };
        auto la = fork_leaves(forks[0]);
        auto lb = fork_leaves(forks[1]);
        if (la.size() != 2 || lb.size() != 2) throw semantic_error("not ADE");
        // path between the forks
        std::vector<size_t> path{forks[0]};
        size_t prev = forks[0];
        size_t cur = 0;
        bool found = false;
        for (size_t y : g.nbrs[forks[0]])
            if (g.deg[y] != 1) {
                cur = y;
                found = true;
            }
        if (!found) throw semantic_error("not ADE");
        while (cur != forks[1]) {
            if (g.deg[cur] != 2) throw semantic_error("not ADE");
            path.push_back(cur);
            size_t next = g.nbrs[cur][0] == prev ? g.nbrs[cur][1] : g.nbrs[cur][0];
            prev = cur;
            cur = next;
        }
        path.push_back(forks[1]);
        const size_t k = g.v - 1;
        if (path.size() != k - 3) throw semantic_error("not ADE");
        out.label = "D" + std::to_string(k);
        out.vertex_map = {la[0], la[1]};
        out.vertex_map.insert(out.vertex_map.end(), path.begin(), path.end());
        out.vertex_map.push_back(lb[0]);
        out.vertex_map.push_back(lb[1]);
        verify_map(q, affine_ade_adjacency(out.label), out.vertex_map);
        return out;
    }

    if (deg3 == 1 && deg4 == 0) {
        size_t center = 0;
        while (g.deg[center] != 3) ++center;
        std::vector<std::vector<size_t>> arms;
        for (size_t y : g.nbrs[center]) arms.push_back(walk_arm(g, center, y));
        std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a.back() < b.back();
        });
        const size_t l1 = arms[0].size(), l2 = arms[1].size(), l3 = arms[2].size();
        if (l1 == 2 && l2 == 2 && l3 == 2) out.label = "E6";
        else if (l1 == 3 && l2 == 3 && l3 == 1) out.label = "E7";
        else if (l1 == 5 && l2 == 2 && l3 == 1) out.label = "E8";
        else throw semantic_error("not ADE");
        for (const auto& arm : arms)
            for (auto it = arm.rbegin(); it != arm.rend(); ++it)
                out.vertex_map.push_back(*it);  // leaf inward
        out.vertex_map.push_back(center);
        verify_map(q, affine_ade_adjacency(out.label), out.vertex_map);
        return out;
    }

    throw semantic_error("not ADE");
}

KappaReport kappa_matrix(const GroupData& g) {
    CartanBundle cartan = generalized_cartan(g);  // shares all preconditions
    const size_t n = g.num_irreps();

    VirtualCharacter lambda = exterior_power_char(g.q_char(), 2, g);
    for (size_t c = 0; c < lambda.size(); ++c) lambda[c] -= g.q_char()[c];

    KappaReport rep;
    rep.matrix = RationalMatrix(n, n);
    for (size_t k = 0; k < n; ++k) {
        const VirtualCharacter& src =
            k == 0 ? regular_character(g) : g.irrep(k).values;
        auto mult = decompose(multiply_characters(lambda, src), g);
        // rewrite sum m_j R_j in the basis {R_0, R_j - n_j R_0}
        long r0 = mult[0];
        for (size_t j = 1; j < n; ++j)
            r0 += mult[j] * static_cast<long>(g.irrep(j).dim);
        rep.matrix.at(0, k) = Rational(r0);
        for (size_t j = 1; j < n; ++j) rep.matrix.at(j, k) = Rational(mult[j]);
    }

    bool border_zero = true;
    for (size_t k = 0; k < n; ++k)
        if (rep.matrix.at(0, k) != 0 || rep.matrix.at(k, 0) != 0) border_zero = false;

    RationalMatrix block = rep.matrix.minor_without(0);
    if (border_zero && block == cartan.reduced) {
        rep.block_ok = true;
        rep.epsilon = 1;
    } else if (border_zero && block == -cartan.reduced) {
        rep.block_ok = true;
        rep.epsilon = -1;
    }
    return rep;
}

std::string quiver_dot(const McKayQuiver& q) {
    std::ostringstream out;
    out << "digraph mckay {\n";
    for (size_t i = 0; i < q.dims.size(); ++i)
        out << "  v" << i << " [label=\"R" << i << " (dim " << q.dims[i] << ")\"];\n";
    for (size_t i = 0; i < q.arrows.size(); ++i)
        for (size_t j = 0; j < q.arrows[i].size(); ++j)
            for (long e = 0; e < q.arrows[i][j]; ++e)
                out << "  v" << i << " -> v" << j << ";\n";
    if (q.coarrows)
        for (size_t i = 0; i < q.coarrows->size(); ++i)
            for (size_t j = 0; j < (*q.coarrows)[i].size(); ++j)
                for (long e = 0; e < (*q.coarrows)[i][j]; ++e)
                    out << "  v" << i << " -> v" << j << " [style=dashed];\n";
    out << "}\n";
    return out.str();
}

}  // namespace mckay
