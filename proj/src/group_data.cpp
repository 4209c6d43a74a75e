#include "mckay/group_data.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "mckay/errors.hpp"

namespace mckay {

std::string GroupSpec::display_name() const {
    if (kind == Kind::Table) return table_path;
    std::ostringstream out;
    out << "Z_" << r << "(";
    for (size_t i = 0; i < weights.size(); ++i) out << (i ? "," : "") << weights[i];
    out << ")";
    return out.str();
}

GroupData GroupData::build_cyclic(const GroupSpec& spec) {
    if (spec.r < 2) throw semantic_error("cyclic group order must be at least 2");
    if (spec.n < 2) throw semantic_error("embedding dimension must be at least 2");
    if (spec.weights.size() != static_cast<size_t>(spec.n))
        throw semantic_error("weight count must equal embedding dimension");

    const long r = static_cast<long>(spec.r);
    std::vector<long> w;
    long wsum = 0;
    for (long a : spec.weights) {
        long res = ((a % r) + r) % r;
        w.push_back(res);
        wsum += res;
    }
    if (wsum % r != 0) throw semantic_error("not in SL");

    GroupData g;
    g.name_ = spec.display_name();
    g.order_ = spec.r;
    g.conductor_ = spec.r;
    g.embedding_dim_ = spec.n;
    g.cyclic_weights_ = w;

    for (unsigned k = 0; k < spec.r; ++k) {
        ConjClass c;
        c.label = "g^" + std::to_string(k);
        c.size = 1;
        c.element_order = spec.r / std::gcd(spec.r, k);
        if (k == 0) c.element_order = 1;
        g.classes_.push_back(c);
    }

    for (unsigned k = 1; k <= static_cast<unsigned>(spec.n); ++k) {
        std::vector<unsigned> pm(spec.r);
        for (unsigned c = 0; c < spec.r; ++c) pm[c] = (k * c) % spec.r;
        g.power_maps_.push_back(std::move(pm));
    }

    for (unsigned j = 0; j < spec.r; ++j) {
        IrrepRow row;
        row.index = j;
        row.dim = 1;
        for (unsigned k = 0; k < spec.r; ++k)
            row.values.push_back(Cyclotomic::root_of_unity(spec.r, static_cast<long>(j) * k));
        g.table_.push_back(std::move(row));
    }

    for (unsigned k = 0; k < spec.r; ++k) {
        Cyclotomic v;
        for (long a : w) v += Cyclotomic::root_of_unity(spec.r, a * static_cast<long>(k));
        g.qchar_.push_back(std::move(v));
    }
    return g;
}

unsigned GroupData::power_class(unsigned k, unsigned c) const {
    if (k == 0 || k > power_maps_.size()) throw semantic_error("power map missing");
    return power_maps_[k - 1].at(c);
}

bool GroupData::abelian() const {
    for (const auto& row : table_)
        if (row.dim != 1) return false;
    return true;
}

// ---- table file parsing ----

namespace {

std::vector<std::vector<std::string>> tokenize_lines(std::istream& in) {
    std::vector<std::vector<std::string>> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

unsigned parse_uint(const std::string& s, const char* what) {
    try {
        return static_cast<unsigned>(std::stoul(s));
    } catch (const std::exception&) {
        throw parse_error(std::string("bad ") + what + " '" + s + "'");
    }
}

}  // namespace

GroupData GroupData::load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw semantic_error("cannot open table file '" + path + "'");
    auto lines = tokenize_lines(in);
    if (lines.empty() || lines[0][0] != "group")
        throw parse_error("table file must start with a 'group' line");

    GroupData g;
    const auto& head = lines[0];
    // group <name> order <|G|> conductor <m> classes <c> irreps <k> embedding_dim <n>
    if (head.size() != 12) throw parse_error("malformed group header");
    g.name_ = head[1];
    unsigned nclasses = 0, nirreps = 0;
    for (size_t i = 2; i + 1 < head.size(); i += 2) {
        const std::string& key = head[i];
        const std::string& val = head[i + 1];
        if (key == "order") g.order_ = parse_uint(val, "order");
        else if (key == "conductor") g.conductor_ = parse_uint(val, "conductor");
        else if (key == "classes") nclasses = parse_uint(val, "class count");
        else if (key == "irreps") nirreps = parse_uint(val, "irrep count");
        else if (key == "embedding_dim") g.embedding_dim_ = static_cast<int>(parse_uint(val, "embedding dim"));
        else throw parse_error("unknown header key '" + key + "'");
    }

    std::vector<std::vector<unsigned>> powermaps;
    for (size_t li = 1; li < lines.size(); ++li) {
        const auto& toks = lines[li];
        if (toks[0] == "class") {
            // class <idx> size <s> element_order <o>
            if (toks.size() != 6) throw parse_error("malformed class line");
            if (parse_uint(toks[1], "class index") != g.classes_.size())
                throw parse_error("class lines out of order");
            ConjClass c;
            c.label = "c" + toks[1];
            c.size = parse_uint(toks[3], "class size");
            c.element_order = parse_uint(toks[5], "element order");
            g.classes_.push_back(c);
        } else if (toks[0] == "powermap") {
            if (toks.size() != 2 + nclasses) throw parse_error("malformed powermap line");
            unsigned k = parse_uint(toks[1], "power");
            std::vector<unsigned> pm;
            for (size_t i = 2; i < toks.size(); ++i) {
                unsigned img = parse_uint(toks[i], "powermap image");
                if (img >= nclasses) throw parse_error("powermap image out of range");
                pm.push_back(img);
            }
            if (powermaps.size() + 2 != k) throw parse_error("powermap lines out of order");
            powermaps.push_back(std::move(pm));
        } else if (toks[0] == "irrep") {
            // irrep <idx> dim <n_i> values <v_0> ...
            if (toks.size() != 5 + nclasses) throw parse_error("malformed irrep line");
            IrrepRow row;
            row.index = parse_uint(toks[1], "irrep index");
            if (row.index != g.table_.size()) throw parse_error("irrep lines out of order");
            row.dim = parse_uint(toks[3], "irrep dim");
            for (size_t i = 5; i < toks.size(); ++i)
                row.values.push_back(Cyclotomic::from_string(toks[i]));
            g.table_.push_back(std::move(row));
        } else if (toks[0] == "qchar") {
            if (toks.size() != 2 + nclasses) throw parse_error("malformed qchar line");
            for (size_t i = 2; i < toks.size(); ++i)
                g.qchar_.push_back(Cyclotomic::from_string(toks[i]));
        } else {
            throw parse_error("unknown table line '" + toks[0] + "'");
        }
    }

    if (g.classes_.size() != nclasses) throw parse_error("class count mismatch");
    if (g.table_.size() != nirreps) throw parse_error("irrep count mismatch");
    if (g.qchar_.size() != nclasses) throw parse_error("missing qchar line");

    // Identity map for k=1, file lines for k=2..n.
    std::vector<unsigned> ident(nclasses);
    std::iota(ident.begin(), ident.end(), 0u);
    g.power_maps_.push_back(std::move(ident));
    for (auto& pm : powermaps) g.power_maps_.push_back(std::move(pm));
    if (g.power_maps_.size() < static_cast<size_t>(g.embedding_dim_))
        throw semantic_error("missing power map");

    g.validate();
    return g;
}

void GroupData::validate() const {
    if (classes_.empty() || table_.empty())
        throw semantic_error("empty group data");
    if (classes_[0].size != 1 || classes_[0].element_order != 1)
        throw semantic_error("class 0 is not the identity");

    unsigned long size_sum = 0;
    for (const auto& c : classes_) size_sum += c.size;
    if (size_sum != order_) throw semantic_error("class sizes do not sum to |G|");

    for (const auto& row : table_) {
        if (row.values.size() != classes_.size())
            throw semantic_error("character row length mismatch");
        if (row.values[0] != Cyclotomic(Rational(row.dim)))
            throw semantic_error("character degree does not match dim");
    }
    for (const auto& v : table_[0].values)
        if (v != Cyclotomic(1)) throw semantic_error("irrep 0 is not trivial");

    if (qchar_.size() != classes_.size())
        throw semantic_error("qchar length mismatch");
    if (qchar_[0] != Cyclotomic(Rational(embedding_dim_)))
        throw semantic_error("qchar degree does not match embedding dimension");

    // Exact row orthogonality.
    for (size_t i = 0; i < table_.size(); ++i)
        for (size_t j = i; j < table_.size(); ++j) {
            Cyclotomic ip = inner_product(table_[i].values, table_[j].values, *this);
            Cyclotomic expected(i == j ? 1 : 0);
            if (ip != expected) throw semantic_error("orthogonality violated");
        }

    // Power maps fix the identity and send a class of order o to one of
    // order o / gcd(k, o).
    for (size_t k = 1; k <= power_maps_.size(); ++k) {
        const auto& pm = power_maps_[k - 1];
        if (pm.size() != classes_.size()) throw semantic_error("missing power map");
        if (pm[0] != 0) throw semantic_error("power map does not fix identity");
        for (size_t c = 0; c < pm.size(); ++c) {
            unsigned o = classes_[c].element_order;
            unsigned expected = o / std::gcd(static_cast<unsigned>(k), o);
            if (classes_[pm[c]].element_order != expected)
                throw semantic_error("power map violates element orders");
        }
    }
}

// ---- character operations ----

Cyclotomic inner_product(const VirtualCharacter& x, const VirtualCharacter& y,
                         const GroupData& g) {
    if (x.size() != g.num_classes() || y.size() != g.num_classes())
        throw semantic_error("class function length mismatch");
    Cyclotomic sum;
    for (size_t c = 0; c < x.size(); ++c) {
        if (x[c].is_zero() || y[c].is_zero()) continue;
        Cyclotomic term = x[c] * y[c].conj();
        term *= Rational(g.classes()[c].size);
        sum += term;
    }
    sum *= make_rational(1, static_cast<long>(g.order()));
    return sum;
}

VirtualCharacter trivial_character(const GroupData& g) {
    return VirtualCharacter(g.num_classes(), Cyclotomic(1));
}

VirtualCharacter regular_character(const GroupData& g) {
    VirtualCharacter x(g.num_classes(), Cyclotomic(0));
    x[0] = Cyclotomic(Rational(g.order()));
    return x;
}

VirtualCharacter conj_character(const VirtualCharacter& x) {
    VirtualCharacter out;
    out.reserve(x.size());
    for (const auto& v : x) out.push_back(v.conj());
    return out;
}

VirtualCharacter multiply_characters(const VirtualCharacter& x, const VirtualCharacter& y) {
    if (x.size() != y.size()) throw semantic_error("class function length mismatch");
    VirtualCharacter out;
    out.reserve(x.size());
    for (size_t c = 0; c < x.size(); ++c) out.push_back(x[c] * y[c]);
    return out;
}

VirtualCharacter exterior_power_char(const VirtualCharacter& x, unsigned k,
                                     const GroupData& g) {
    if (x.size() != g.num_classes()) throw semantic_error("class function length mismatch");
    if (k > g.max_power_map() && k > 0) throw semantic_error("power map missing");

    // Power sums p_m(c) = x(c^m), then Newton's identity for e_k.
    std::vector<VirtualCharacter> e(k + 1);
    e[0] = trivial_character(g);
    for (unsigned kk = 1; kk <= k; ++kk) {
        VirtualCharacter acc(g.num_classes(), Cyclotomic(0));
        int sign = 1;
        for (unsigned m = 1; m <= kk; ++m) {
            for (size_t c = 0; c < acc.size(); ++c) {
                Cyclotomic term = e[kk - m][c] * x[g.power_class(m, static_cast<unsigned>(c))];
                if (sign < 0) term = -term;
                acc[c] += term;
            }
            sign = -sign;
        }
        for (auto& v : acc) v *= make_rational(1, kk);
        e[kk] = std::move(acc);
    }
    return e[k];
}

bool is_free(const GroupData& g) {
    const unsigned n = static_cast<unsigned>(g.embedding_dim());
    // sum_k (-1)^k chi_{Lambda^k Q}, evaluated classwise = det(I - g).
    VirtualCharacter det_char(g.num_classes(), Cyclotomic(0));
    int sign = 1;
    for (unsigned k = 0; k <= n; ++k) {
        VirtualCharacter ek = exterior_power_char(g.q_char(), k, g);
        for (size_t c = 0; c < det_char.size(); ++c) {
            if (sign < 0)
                det_char[c] -= ek[c];
            else
                det_char[c] += ek[c];
        }
        sign = -sign;
    }
    for (size_t c = 1; c < det_char.size(); ++c)
        if (det_char[c].is_zero()) return false;
    return true;
}

std::vector<long> decompose(const VirtualCharacter& x, const GroupData& g) {
    std::vector<long> mult;
    mult.reserve(g.num_irreps());
    for (const auto& row : g.table()) {
        Cyclotomic ip = inner_product(x, row.values, g);
        if (!ip.is_rational()) throw semantic_error("non-integral multiplicity");
        Rational q = ip.to_rational();
        if (!is_integer(q)) throw semantic_error("non-integral multiplicity");
        if (!q.get_num().fits_slong_p()) throw internal_error("multiplicity overflow");
        mult.push_back(q.get_num().get_si());
    }
    return mult;
}

}  // namespace mckay
