#include "mckay/report.hpp"

#include <json.hpp>

#include "mckay/errors.hpp"
#include "mckay/eta.hpp"
#include "mckay/mckay_core.hpp"
#include "mckay/sphere_spectrum.hpp"
#include "mckay/sweep.hpp"

namespace mckay {

namespace {

using Json = nlohmann::ordered_json;

Json matrix_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json long_matrix_json(const std::vector<std::vector<long>>& m) {
    Json rows = Json::array();
    for (const auto& r : m) rows.push_back(r);
    return rows;
}

Json character_json(const VirtualCharacter& x) {
    Json vals = Json::array();
    for (const auto& v : x) vals.push_back(v.to_string());
    return vals;
}

Json group_json(const GroupData& g) {
    Json j;
    j["name"] = g.name();
    j["order"] = g.order();
    j["conductor"] = g.conductor();
    j["embedding_dim"] = g.embedding_dim();
    j["abelian"] = g.abelian();
    j["free"] = is_free(g);
    Json classes = Json::array();
    for (const auto& c : g.classes()) {
        Json cj;
        cj["label"] = c.label;
        cj["size"] = c.size;
        cj["element_order"] = c.element_order;
        classes.push_back(std::move(cj));
    }
    j["classes"] = std::move(classes);
    return j;
}

Json characters_json(const GroupData& g) {
    Json j;
    Json irreps = Json::array();
    for (const auto& row : g.table()) {
        Json rj;
        rj["index"] = row.index;
        rj["dim"] = row.dim;
        rj["values"] = character_json(row.values);
        irreps.push_back(std::move(rj));
    }
    j["irreps"] = std::move(irreps);
    j["qchar"] = character_json(g.q_char());
    return j;
}

Json cartan_json_block(const CartanBundle& cartan) {
    Json j;
    j["mode"] = cartan.mode == CartanBundle::Mode::ClassicalN2 ? "classical-n2"
                                                               : "generalized-n3";
    j["extended"] = matrix_json(cartan.extended);
    j["reduced"] = matrix_json(cartan.reduced);
    j["inverse"] = matrix_json(cartan.inverse);
    return j;
}

Json eta_json_block(const GroupData& g) {
    RationalMatrix table = eta_table_kernel(g, false);
    EtaReport rep = chain_identity(g, table);
    Json j;
    Json per = Json::array();
    for (const auto& v : rep.per_irrep) per.push_back(rational_to_string(v));
    j["per_irrep"] = std::move(per);
    j["table"] = matrix_json(rep.table);
    j["chain"] = matrix_json(rep.chain);
    j["closed_form"] = matrix_json(rep.closed_form);
    j["chain_matches"] = rep.chain_matches;
    return j;
}

Json kappa_json_block(const GroupData& g) {
    KappaReport rep = kappa_matrix(g);
    Json j;
    j["matrix"] = matrix_json(rep.matrix);
    j["block_ok"] = rep.block_ok;
    j["epsilon"] = rep.epsilon;
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string report_json(const GroupData& g) {
    Json j;
    j["group"] = group_json(g);
    j["characters"] = characters_json(g);

    McKayQuiver q = adjacency(g);
    Json quiver;
    quiver["a"] = long_matrix_json(q.arrows);
    if (q.coarrows) quiver["b"] = long_matrix_json(*q.coarrows);
    j["quiver"] = std::move(quiver);

    if (g.embedding_dim() == 2) {
        CartanBundle cartan = classical_cartan(g);
        j["cartan"] = cartan_json_block(cartan);
        j["pairing"] = matrix_json(cartan.inverse);
        j["ade"] = ade_classify(q).label;
    } else if (g.embedding_dim() == 3) {
        if (!is_free(g)) throw semantic_error("non-isolated singularity");
        CartanBundle cartan = generalized_cartan(g);
        j["cartan"] = cartan_json_block(cartan);
        j["pairing"] = matrix_json(cartan.inverse);
        j["eta"] = eta_json_block(g);
        j["kappa"] = kappa_json_block(g);
    } else {
        throw semantic_error("wrong dimension");
    }
    return dump(j);
}

std::string report_quiver_dot(const GroupData& g) { return quiver_dot(adjacency(g)); }

std::string eta_json(const GroupData& g) {
    Json j;
    j["group"] = g.name();
    j["eta"] = eta_json_block(g);
    return dump(j);
}

std::string cartan_json(const GroupData& g) {
    CartanBundle cartan =
        g.embedding_dim() == 2 ? classical_cartan(g) : generalized_cartan(g);
    Json j;
    j["group"] = g.name();
    j["cartan"] = cartan_json_block(cartan);
    j["pairing"] = matrix_json(cartan.inverse);
    return dump(j);
}

std::string spectrum_json(int n, const Rational& cutoff) {
    auto entries = dirac_spectrum(n, cutoff);
    Json j;
    j["n"] = n;
    j["sphere_dim"] = 2 * n - 1;
    j["cutoff"] = rational_to_string(cutoff);

    Json agg = Json::array();
    for (const auto& [lambda, mult] : aggregate_spectrum(entries)) {
        Json e;
        e["eigenvalue"] = rational_to_string(lambda);
        e["multiplicity"] = mult.get_str();
        agg.push_back(std::move(e));
    }
    j["aggregated"] = std::move(agg);

    Json fams = Json::array();
    for (const auto& e : entries) {
        Json f;
        f["family"] = e.family;
        f["a"] = e.a;
        f["b"] = e.b;
        if (e.family == 3) f["r"] = e.r;
        Json mu = Json::array();
        for (const auto& m : e.weight.mu) mu.push_back(rational_to_string(m));
        f["weight"] = std::move(mu);
        f["eigenvalue"] = rational_to_string(e.eigenvalue);
        f["multiplicity"] = e.multiplicity.get_str();
        fams.push_back(std::move(f));
    }
    j["by_family"] = std::move(fams);
    return dump(j);
}

}  // namespace mckay
