#include "rumin/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "rumin/errors.hpp"

namespace rumin {

namespace {

std::vector<int> parse_index_list(const std::string& key) {
    std::vector<int> out;
    if (key.empty()) return out;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(part, &used);
            if (used != part.size() && part.find_first_not_of(' ', used) != std::string::npos)
                throw ParseError("ParseError: bad index list '" + key + "'");
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw ParseError("ParseError: bad index list '" + key + "'");
        }
    }
    return out;
}

std::string index_key(const std::vector<int>& idx) {
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i] + 1);
    return s;
}

}  // namespace

Scalar scalar_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    throw ParseError("ParseError: scalar must be a string or an integer");
}

StratifiedLieAlgebra group_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("ParseError: group definition must be an object");
    if (!j.contains("layers") || !j["layers"].is_array()) throw ParseError("ParseError: missing \"layers\" array");
    std::vector<int> layers;
    for (const auto& v : j["layers"]) {
        if (!v.is_number_integer() || v.get<int>() <= 0) throw ParseError("ParseError: layer sizes must be positive");
        layers.push_back(v.get<int>());
    }
    std::set<std::uint64_t> declared;
    if (j.contains("sqrt")) {
        if (!j["sqrt"].is_array()) throw ParseError("ParseError: \"sqrt\" must be an array");
        for (const auto& v : j["sqrt"]) {
            if (!v.is_number_integer() || v.get<long>() < 2) throw ParseError("ParseError: bad radicand in \"sqrt\"");
            for (auto p : prime_factors(v.get<std::uint64_t>())) declared.insert(p);
        }
    }
    BracketTable table;
    if (j.contains("brackets")) {
        const auto& b = j["brackets"];
        if (!b.is_object()) throw ParseError("ParseError: \"brackets\" must be an object");
        for (const auto& [key, val] : b.items()) {
            auto ij = parse_index_list(key);
            if (ij.size() != 2) throw ParseError("ParseError: bracket key '" + key + "' is not a pair");
            if (!val.is_object()) throw ParseError("ParseError: bracket value for '" + key + "' must be an object");
            int a = ij[0] - 1, c = ij[1] - 1;
            if (a >= c) throw InvalidInput("InvalidInput: bracket key '" + key + "' must have i < j");
            SparseVec v;
            for (const auto& [k, s] : val.items()) {
                auto kk = parse_index_list(k);
                if (kk.size() != 1) throw ParseError("ParseError: bad basis index '" + k + "'");
                Scalar x = scalar_from_json(s);
                for (auto p : x.primes())
                    if (!declared.count(p))
                        throw TowerInsufficient("TowerInsufficient: sqrt(" + std::to_string(p) +
                                                ") used but not declared in \"sqrt\"");
                if (!x.is_zero()) v[kk[0] - 1] += x;
            }
            table[{a, c}] = v;
        }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array()) throw ParseError("ParseError: \"labels\" must be an array");
        for (const auto& v : j["labels"]) labels.push_back(v.get<std::string>());
    }
    return StratifiedLieAlgebra::from_structure_constants(table, layers, labels);
}

nlohmann::json group_to_json(const StratifiedLieAlgebra& g) {
    nlohmann::json j;
    j["layers"] = g.layer_dims();
    nlohmann::json b = nlohmann::json::object();
    std::set<std::uint64_t> primes;
    for (const auto& [ij, v] : g.table()) {
        nlohmann::json e = nlohmann::json::object();
        for (const auto& [k, s] : v) {
            e[std::to_string(k + 1)] = s.str();
            for (auto p : s.primes()) primes.insert(p);
        }
        if (!e.empty()) b[index_key({ij.first, ij.second})] = e;
    }
    j["brackets"] = b;
    if (!primes.empty()) j["sqrt"] = std::vector<std::uint64_t>(primes.begin(), primes.end());
    j["labels"] = g.labels();
    return j;
}

StratifiedLieAlgebra load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("ParseError: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("ParseError: ") + e.what());
    }
    try {
        return group_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("ParseError: ") + e.what());
    }
}

nlohmann::json matrix_rows_json(const OperatorMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json r = nlohmann::json::array();
        for (int jj = 0; jj < m.cols(); ++jj) r.push_back(m.at(i, jj).str());
        rows.push_back(r);
    }
    return rows;
}

nlohmann::json matrix_to_json(const OperatorMatrix& m) {
    nlohmann::json j;
    j["name"] = m.name;
    j["source_degree"] = m.source_degree;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    auto o = m.order();
    j["order"] = o ? nlohmann::json(*o) : nlohmann::json(nullptr);
    j["entries"] = matrix_rows_json(m);
    return j;
}

OperatorMatrix matrix_from_json(const RingPtr& ring, const nlohmann::json& j) {
    const nlohmann::json& rows = j.is_object() ? j.at("entries") : j;
    if (!rows.is_array()) throw ParseError("ParseError: matrix entries must be an array of rows");
    std::vector<std::vector<std::string>> text;
    for (const auto& r : rows) {
        if (!r.is_array()) throw ParseError("ParseError: matrix row must be an array");
        std::vector<std::string> line;
        for (const auto& e : r) line.push_back(e.get<std::string>());
        text.push_back(line);
    }
    OperatorMatrix m = parse_matrix(ring, text);
    if (j.is_object()) {
        if (j.contains("rows") && j["rows"].get<int>() != m.rows())
            throw DimensionMismatch("DimensionMismatch: declared rows differ from entries");
        if (j.contains("cols") && j["cols"].get<int>() != m.cols() && m.rows() > 0)
            throw DimensionMismatch("DimensionMismatch: declared cols differ from entries");
        if (j.contains("rows") && m.rows() == 0) m = OperatorMatrix(ring, 0, j.value("cols", 0));
        m.name = j.value("name", std::string());
        m.source_degree = j.value("source_degree", -1);
        m.claimed_order = m.order();
    }
    return m;
}

nlohmann::json form_to_json(const Form& f) {
    nlohmann::json t = nlohmann::json::object();
    for (const auto& [c, s] : f.terms()) t[index_key(cov_indices(c))] = s.str();
    return {{"degree", f.degree()}, {"terms", t}};
}

Form form_from_json(const nlohmann::json& j, int degree) {
    const nlohmann::json& terms = j.contains("terms") ? j.at("terms") : j;
    if (j.contains("degree")) degree = j["degree"].get<int>();
    Form f(degree);
    for (const auto& [k, s] : terms.items()) {
        auto idx = parse_index_list(k);
        for (int& i : idx) i -= 1;
        if (static_cast<int>(idx.size()) != degree)
            throw DimensionMismatch("DimensionMismatch: covector '" + k + "' in a " + std::to_string(degree) + "-form");
        int inversions = 0;
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b) {
                if (idx[a] == idx[b]) throw InvalidInput("InvalidInput: repeated index in covector '" + k + "'");
                if (idx[a] > idx[b]) ++inversions;
            }
        Scalar x = scalar_from_json(s);
        f.add(cov_from_indices(idx), inversions % 2 ? -x : x);
    }
    return f;
}

nlohmann::json operator_form_to_json(const OperatorForm& f) {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& [k, u] : f.terms()) {
        std::vector<int> idx = cov_indices(k.cov);
        for (int& i : idx) i += 1;
        t.push_back({{"covector", idx}, {"slot", k.slot + 1}, {"operator", u.str()}});
    }
    return {{"degree", f.degree()}, {"slots", f.slots()}, {"terms", t}};
}

OperatorForm operator_form_from_json(const RingPtr& ring, const nlohmann::json& j) {
    OperatorForm f(ring, j.at("degree").get<int>(), j.value("slots", 1));
    for (const auto& t : j.at("terms")) {
        std::vector<int> idx = t.at("covector").get<std::vector<int>>();
        for (int& i : idx) i -= 1;
        if (static_cast<int>(idx.size()) != f.degree()) throw DimensionMismatch("DimensionMismatch: covector degree");
        int slot = t.value("slot", 1) - 1;
        if (slot < 0 || slot >= f.slots()) throw OutOfRange("OutOfRange: slot index");
        f.add(cov_from_indices(idx), slot, parse_env(ring, t.at("operator").get<std::string>()));
    }
    return f;
}

nlohmann::json exponent_record_to_json(const ExponentRecord& r) {
    nlohmann::json chain = nlohmann::json::array();
    for (const auto& l : r.chain) {
        nlohmann::json e{{"op", l.op}, {"order", l.order}};
        if (l.degree >= 0) e["degree"] = l.degree;
        if (l.stated_order) e["stated_order"] = *l.stated_order;
        chain.push_back(e);
    }
    nlohmann::json j{{"theorem", theorem_name(r.theorem)},
                     {"family", r.family},
                     {"degree", r.degree},
                     {"term", r.term},
                     {"norm", r.norm},
                     {"rhs", r.rhs},
                     {"laplacian_order", r.laplacian_order},
                     {"chain", chain},
                     {"gradient_pairing", r.gradient_pairing},
                     {"chain_order", r.chain_order},
                     {"kernel_type", r.kernel_type},
                     {"derived_k", r.derived_k},
                     {"derived_exponent", exponent_label(r.derived_k)},
                     {"derived_value", r.derived_value().get_str()},
                     {"paper_k", r.paper_k},
                     {"paper_exponent", exponent_label(r.paper_k)},
                     {"folland_used", r.folland_used},
                     {"folland_ok", r.folland_ok},
                     {"status", r.status}};
    if (r.stated_k) {
        j["stated_k"] = *r.stated_k;
        j["stated_exponent"] = exponent_label(*r.stated_k);
    }
    return j;
}

nlohmann::json sum_pair_to_json(const SumPair& p) {
    return {{"degree", p.degree},
            {"paper", {p.paper.first, p.paper.second}},
            {"derived", {p.derived.first, p.derived.second}},
            {"agree", p.agree}};
}

nlohmann::json finding_to_json(const Finding& f) {
    nlohmann::json j{{"check", f.check},
                     {"status", f.status},
                     {"paper_row", f.paper_row},
                     {"derived_row", f.derived_row},
                     {"certificate", nullptr},
                     {"corrected_tensor", nullptr},
                     {"detail", f.detail},
                     {"round_trip", f.round_trip}};
    if (f.certificate) j["certificate"] = *f.certificate;
    if (f.corrected_tensor) j["corrected_tensor"] = *f.corrected_tensor;
    return j;
}

}  // namespace rumin
