#include "commands.hpp"

#include <ostream>

#include "rumin/errors.hpp"
#include "rumin/estimates.hpp"
#include "rumin/json_io.hpp"
#include "rumin/laplacians.hpp"
#include "rumin/verify.hpp"

#ifndef RUMIN_DEFAULT_GOLDEN
#define RUMIN_DEFAULT_GOLDEN "data/golden/cartan_matrices.json"
#endif

namespace rumin::cli {

namespace {

StratifiedLieAlgebra load_group(const RunConfig& cfg) {
    if (cfg.max_dim <= 0) throw InvalidInput("InvalidInput: --max-dim must be positive");
    StratifiedLieAlgebra g;
    const std::string& src = cfg.group;
    if (src == "builtin:cartan") {
        g = cartan_group();
    } else if (src.rfind("builtin:", 0) == 0) {
        throw InvalidInput("InvalidInput: unknown built-in group '" + src.substr(8) + "'");
    } else if (src.rfind("free:", 0) == 0) {
        std::string spec = src.substr(5);
        auto comma = spec.find(',');
        int m = 0, k = 0;
        try {
            if (comma == std::string::npos) throw std::invalid_argument(spec);
            std::size_t u1 = 0, u2 = 0;
            m = std::stoi(spec.substr(0, comma), &u1);
            k = std::stoi(spec.substr(comma + 1), &u2);
            if (u1 != comma || u2 != spec.size() - comma - 1) throw std::invalid_argument(spec);
        } catch (const std::logic_error&) {
            throw InvalidInput("InvalidInput: expected free:m,k, got '" + src + "'");
        }
        if (m < 1 || k < 1) throw InvalidInput("InvalidInput: free:m,k needs m, k >= 1");
        g = free_nilpotent(m, k, cfg.max_dim);
    } else {
        g = load_group_file(src);
    }
    if (g.dim() > cfg.max_dim)
        throw ResourceLimit("ResourceLimit: group of dimension " + std::to_string(g.dim()) + " exceeds --max-dim " +
                            std::to_string(cfg.max_dim));
    return g;
}

RuminComplex build_complex(const RunConfig& cfg) { return RuminComplex(PbwRing::create(load_group(cfg))); }

void require_degree(const Args& a, int lo, int hi) {
    if (!a.degree) throw InvalidInput("InvalidInput: --degree is required");
    if (*a.degree < lo || *a.degree > hi)
        throw OutOfRange("OutOfRange: degree " + std::to_string(*a.degree) + " outside " + std::to_string(lo) + ".." +
                         std::to_string(hi));
}

Matrix paper_alignment(const RuminComplex& c, int h) {
    if (!is_cartan(c.algebra())) throw UnsupportedGroup("UnsupportedGroup: --paper-basis needs the Cartan group");
    return align_basis(c.basis(h), cartan_reference_basis(h));
}

OperatorMatrix maybe_align(const RunConfig& cfg, const RuminComplex& c, const OperatorMatrix& m, int src, int tgt) {
    if (!cfg.paper_basis) return m;
    OperatorMatrix out = change_basis(m, paper_alignment(c, src), paper_alignment(c, tgt));
    out.name = m.name;
    out.source_degree = m.source_degree;
    out.claimed_order = m.claimed_order;
    return out;
}

void print_matrix(const RunConfig& cfg, const OperatorMatrix& m, std::ostream& out) {
    switch (cfg.format) {
        case Format::text: out << m.str() << "\n"; break;
        case Format::latex: out << m.latex() << "\n"; break;
        case Format::json: out << matrix_to_json(m).dump(2) << "\n"; break;
    }
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string chain_str(const ExponentRecord& r) {
    std::string s;
    for (std::size_t i = 0; i < r.chain.size(); ++i) s += (i ? " " : "") + r.chain[i].str();
    return s;
}

}  // namespace

int cmd_build(const RunConfig& cfg, std::ostream& out) {
    RuminComplex c = build_complex(cfg);
    const auto& g = c.algebra();
    auto dims = c.dims();
    if (cfg.format == Format::json) {
        nlohmann::json w = nlohmann::json::object();
        for (int h = 0; h <= c.n(); ++h) w[std::to_string(h)] = c.basis(h).weights;
        nlohmann::json j{{"group", group_to_json(g)},
                         {"dims", dims},
                         {"Q", g.homogeneous_dimension()},
                         {"weights", w},
                         {"cartan", is_cartan(g)}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "dims E0 = " << join(dims) << "; Q=" << g.homogeneous_dimension() << "\n";
    out << "layers = " << join(g.layer_dims()) << "\n";
    for (int h = 0; h <= c.n(); ++h) out << "weights E0^" << h << " = " << join(c.basis(h).weights) << "\n";
    return 0;
}

int cmd_dc(const RunConfig& cfg, const Args& a, std::ostream& out) {
    RuminComplex c = build_complex(cfg);
    require_degree(a, 0, c.n());
    int h = *a.degree;
    print_matrix(cfg, maybe_align(cfg, c, c.dc(h), h, std::min(h + 1, c.n())), out);
    return 0;
}

int cmd_deltac(const RunConfig& cfg, const Args& a, std::ostream& out) {
    RuminComplex c = build_complex(cfg);
    require_degree(a, 0, c.n());
    int h = *a.degree;
    print_matrix(cfg, maybe_align(cfg, c, c.deltac(h), h, std::max(h - 1, 0)), out);
    return 0;
}

int cmd_laplacian(const RunConfig& cfg, const Args& a, std::ostream& out) {
    if (a.family.empty()) throw InvalidInput("InvalidInput: --family is required");
    Family f = parse_family(a.family);
    RuminComplex c = build_complex(cfg);
    require_degree(a, 0, c.n());
    int h = *a.degree;
    OperatorMatrix m = maybe_align(cfg, c, laplacian(c, f, h), h, h);
    auto order = m.order();
    bool adj = verify_self_adjoint(m).self_adjoint;
    if (cfg.format == Format::json) {
        nlohmann::json j{{"family", family_name(f)},
                         {"degree", h},
                         {"order", order ? nlohmann::json(*order) : nlohmann::json(nullptr)},
                         {"self_adjoint", adj},
                         {"matrix", matrix_to_json(m)}};
        out << j.dump(2) << "\n";
        return 0;
    }
    print_matrix(cfg, m, out);
    if (cfg.format == Format::text)
        out << "order " << (order ? std::to_string(*order) : std::string("mixed")) << ", "
            << (adj ? "self-adjoint" : "not self-adjoint") << "\n";
    return 0;
}

int cmd_pi_e(const RunConfig& cfg, const Args& a, std::ostream& out) {
    RuminComplex c = build_complex(cfg);
    require_degree(a, 0, c.n());
    int h = *a.degree;
    int d = c.dim(h);
    std::vector<int> which;
    if (a.index) {
        if (*a.index < 1 || *a.index > d)
            throw OutOfRange("OutOfRange: index " + std::to_string(*a.index) + " outside 1.." + std::to_string(d));
        which.push_back(*a.index - 1);
    } else {
        for (int j = 0; j < d; ++j) which.push_back(j);
    }
    nlohmann::json arr = nlohmann::json::array();
    for (int j : which) {
        OperatorForm pe = c.pi_E(c.symbolic(h, j));
        if (cfg.format == Format::json) {
            arr.push_back({{"index", j + 1}, {"basis", form_to_json(c.basis(h).elements[j])},
                           {"pi_E", operator_form_to_json(pe)}});
        } else {
            out << "Pi_E(xi_" << j + 1 << " = " << c.basis(h).elements[j].str() << ") = " << pe.str() << "\n";
        }
    }
    if (cfg.format == Format::json) out << arr.dump(2) << "\n";
    return 0;
}

int cmd_exponents(const RunConfig& cfg, const Args& a, std::ostream& out) {
    std::vector<Theorem> ts;
    if (a.theorem.empty()) ts = {Theorem::H2, Theorem::C2, Theorem::H2cor, Theorem::H2sum};
    else ts = {parse_theorem(a.theorem)};
    RuminComplex c = build_complex(cfg);
    nlohmann::json j = nlohmann::json::object();
    for (Theorem t : ts) {
        auto tab = theorem_table(c, t);
        if (cfg.format == Format::json) {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& r : tab) rows.push_back(exponent_record_to_json(r));
            j[theorem_name(t)]["records"] = rows;
            if (t == Theorem::H2sum) {
                nlohmann::json pairs = nlohmann::json::array();
                for (const auto& p : sum_pairs(tab)) pairs.push_back(sum_pair_to_json(p));
                j[theorem_name(t)]["sum_pairs"] = pairs;
                j[theorem_name(t)]["duality"] = sum_space_duality_note();
            }
            continue;
        }
        out << theorem_name(t) << "\n";
        for (const auto& r : tab) {
            out << "  " << r.family << " h=" << r.degree << " " << r.term << " [" << r.norm << "] " << chain_str(r)
                << "  a=" << r.laplacian_order << " c=" << r.chain_order << " mu=" << r.kernel_type << "  "
                << exponent_label(r.derived_k) << " (expected " << exponent_label(r.paper_k);
            if (r.stated_k) out << ", stated orders give " << exponent_label(*r.stated_k);
            out << ")  " << r.status << "\n";
        }
        if (t == Theorem::H2sum) {
            for (const auto& p : sum_pairs(tab))
                out << "  sum h=" << p.degree << ": " << exponent_label(p.derived.first) << " + "
                    << exponent_label(p.derived.second) << (p.agree ? "  agree" : "  mismatch") << "\n";
            out << "  duality " << sum_space_duality_note() << "\n";
        }
    }
    if (cfg.format == Format::json) out << j.dump(2) << "\n";
    return 0;
}

int cmd_tensors(const RunConfig& cfg, const Args& a, std::ostream& out) {
    Convention conv = parse_convention(a.convention);
    RuminComplex c = build_complex(cfg);
    auto fs = tensor_findings(c, conv);
    if (cfg.format == Format::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& f : fs) arr.push_back(finding_to_json(f));
        out << arr.dump(2) << "\n";
        return 0;
    }
    for (const auto& f : fs) {
        out << f.check << ": " << f.status << "\n";
        out << "  divergence  " << f.paper_row << "\n";
        out << "  derived     " << f.derived_row << "\n";
        if (f.certificate) out << "  certificate " << *f.certificate << "\n";
        if (f.corrected_tensor)
            out << "  corrected   " << *f.corrected_tensor << (f.round_trip ? "  (round trip exact)" : "") << "\n";
        out << "  " << f.detail << "\n";
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, const Args& a, std::ostream& out) {
    StratifiedLieAlgebra g = load_group(cfg);
    VerifyOptions opts;
    opts.golden_path = cfg.golden.empty() ? std::string(RUMIN_DEFAULT_GOLDEN) : cfg.golden;
    opts.update_golden = cfg.update_golden;
    opts.seed = cfg.seed;
    opts.oracle_pairs = a.oracle_pairs;
    VerifyReport r = run_verify(g, opts);
    if (cfg.format == Format::json) {
        out << r.to_json().dump(2) << "\n";
    } else {
        for (const auto& c : r.checks) {
            out << (c.passed ? "PASS " : (c.must_pass ? "FAIL " : "INFO ")) << c.name;
            if (c.criterion) out << " [" << c.criterion << "]";
            if (!c.detail.empty()) out << "  " << c.detail;
            out << "\n";
        }
        out << (r.passed() ? "verify: all checks passed" : "verify: FAILED") << "\n";
    }
    return r.passed() ? 0 : 1;
}

}  // namespace rumin::cli
