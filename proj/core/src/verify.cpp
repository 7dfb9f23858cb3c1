#include "rumin/verify.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <random>

#include "rumin/errors.hpp"
#include "rumin/estimates.hpp"
#include "rumin/json_io.hpp"
#include "rumin/laplacians.hpp"

namespace rumin {

bool VerifyReport::passed() const {
    for (const auto& c : checks)
        if (c.must_pass && !c.passed) return false;
    return true;
}

std::vector<const CheckRecord*> VerifyReport::criterion(int k) const {
    std::vector<const CheckRecord*> out;
    for (const auto& c : checks)
        if (c.criterion == k) out.push_back(&c);
    return out;
}

bool VerifyReport::criterion_passed(int k) const {
    auto cs = criterion(k);
    if (cs.empty()) return false;
    for (const auto* c : cs)
        if (c->must_pass && !c->passed) return false;
    return true;
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json checks_j = nlohmann::json::array();
    for (const auto& c : checks)
        checks_j.push_back({{"name", c.name},
                            {"criterion", c.criterion},
                            {"must_pass", c.must_pass},
                            {"passed", c.passed},
                            {"detail", c.detail}});
    return {{"group", group}, {"passed", passed()}, {"checks", checks_j}, {"findings", findings}, {"exponents", exponents}};
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string entry_path(const std::string& section, int h, int i, int j) {
    return section + "/" + std::to_string(h) + "/(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("ParseError: cannot read " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("ParseError: ") + path + ": " + e.what());
    }
}

// Orthogonal changes of basis from the computed bases to the golden ones.
std::vector<Matrix> golden_alignment(const RuminComplex& c, const nlohmann::json& g) {
    std::vector<Matrix> t;
    for (int h = 0; h <= c.n(); ++h) {
        std::vector<Form> expected;
        for (const auto& f : g.at("bases").at(std::to_string(h))) expected.push_back(form_from_json({{"terms", f}}, h));
        t.push_back(align_basis(c.basis(h), expected));
    }
    return t;
}

struct AlignedMatrices {
    std::map<int, OperatorMatrix> star, dc, deltac;
};

AlignedMatrices aligned(const RuminComplex& c, const std::vector<Matrix>& t) {
    AlignedMatrices a;
    int n = c.n();
    for (int h = 1; h < n; ++h)
        a.star[h] = change_basis(OperatorMatrix::from_scalars(c.ring(), c.star(h)), t[h], t[n - h]);
    for (int h = 0; h < n; ++h) a.dc[h] = change_basis(c.dc(h), t[h], t[h + 1]);
    for (int h = 1; h <= n; ++h) a.deltac[h] = change_basis(c.deltac(h), t[h], t[h - 1]);
    return a;
}

void compare_section(const RuminComplex& c, const nlohmann::json& g, const std::string& section,
                     const std::map<int, OperatorMatrix>& mats, std::vector<std::string>& out) {
    if (!g.contains(section)) {
        out.push_back(section + " (missing)");
        return;
    }
    for (const auto& [h, m] : mats) {
        std::string key = std::to_string(h);
        if (!g[section].contains(key)) {
            out.push_back(section + "/" + key + " (missing)");
            continue;
        }
        OperatorMatrix want = matrix_from_json(c.ring(), g[section][key]);
        if (want.rows() != m.rows() || want.cols() != m.cols()) {
            out.push_back(section + "/" + key + " (shape)");
            continue;
        }
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (want.at(i, j) != m.at(i, j)) out.push_back(entry_path(section, h, i, j));
    }
}

}  // namespace

std::vector<std::string> compare_golden(const RuminComplex& c, const std::string& path) {
    nlohmann::json g = read_json(path);
    std::vector<std::string> out;
    std::vector<Matrix> t;
    try {
        t = golden_alignment(c, g);
    } catch (const SpanMismatch& e) {
        return {std::string("bases (") + e.what() + ")"};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("ParseError: golden bases: ") + e.what());
    }
    AlignedMatrices a = aligned(c, t);
    compare_section(c, g, "star", a.star, out);
    compare_section(c, g, "dc", a.dc, out);
    compare_section(c, g, "deltac", a.deltac, out);
    return out;
}

void write_golden(const RuminComplex& c, const std::string& path) {
    nlohmann::json g = read_json(path);
    AlignedMatrices a = aligned(c, golden_alignment(c, g));
    auto section = [](const std::map<int, OperatorMatrix>& mats) {
        nlohmann::json s = nlohmann::json::object();
        for (const auto& [h, m] : mats) s[std::to_string(h)] = matrix_rows_json(m);
        return s;
    };
    g["star"] = section(a.star);
    g["dc"] = section(a.dc);
    g["deltac"] = section(a.deltac);
    std::ofstream out(path);
    if (!out) throw ParseError("ParseError: cannot write " + path);
    out << g.dump(2) << "\n";
}

namespace {

class Suite {
public:
    explicit Suite(VerifyReport& r) : r_(r) {}

    // Runs fn, which fills detail and returns pass/fail; exceptions fail the check.
    void run(const std::string& name, int criterion, const std::function<bool(std::string&)>& fn,
             bool must_pass = true) {
        CheckRecord rec;
        rec.name = name;
        rec.criterion = criterion;
        rec.must_pass = must_pass;
        auto t0 = Clock::now();
        try {
            rec.passed = fn(rec.detail);
        } catch (const std::exception& e) {
            rec.passed = false;
            rec.detail = e.what();
        }
        rec.seconds = since(t0);
        r_.checks.push_back(rec);
    }
    void add(CheckRecord rec) { r_.checks.push_back(std::move(rec)); }

private:
    VerifyReport& r_;
};

void generic_checks(Suite& s, const RuminComplex& c) {
    for (const auto& r : verify_complex(c)) {
        int crit = 0;
        if (r.name == "dc_squared_zero") crit = 3;
        else if (r.name == "chain_map" || r.name == "projection_identity") crit = 6;
        else if (r.name == "dc_order_table") crit = 5;
        std::string name = r.name + (r.degree >= 0 ? "/" + std::to_string(r.degree) : "");
        s.add({name, crit, true, r.passed, r.detail, 0});
    }
    const RingPtr& ring = c.ring();
    int n = c.n();
    for (int h = 0; h <= n; ++h)
        s.run("d_full_squared_zero/" + std::to_string(h), 3, [&](std::string& d) {
            auto covs = covectors(n, h);
            OperatorForm a(ring, h, static_cast<int>(covs.size()));
            for (std::size_t k = 0; k < covs.size(); ++k)
                a.add(covs[k], static_cast<int>(k), EnvElement::constant(ring, 1));
            OperatorForm dd = d_full(d_full(a));
            if (!dd.is_zero()) d = dd.str();
            return dd.is_zero();
        });
    for (int h = 1; h <= n; ++h)
        s.run("deltac_consistency/" + std::to_string(h), 4, [&](std::string& d) {
            auto rep = deltac_consistency(c, h);
            d = "sign " + std::to_string(rep.sign);
            for (auto [i, j] : rep.differing) d += " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            return rep.sign != 0;
        });
    s.run("json_round_trip", 0, [&](std::string& d) {
        for (int h = 0; h < n; ++h) {
            const OperatorMatrix& m = c.dc(h);
            if (!(matrix_from_json(ring, matrix_to_json(m)) == m)) {
                d = "dc/" + std::to_string(h);
                return false;
            }
        }
        return true;
    });
}

Polynomial random_polynomial(std::mt19937_64& rng, int nvars, int max_degree) {
    std::uniform_int_distribution<int> nterms(1, 4), coeff(-5, 5), var(0, nvars - 1), deg(0, max_degree);
    Polynomial p(nvars);
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        Monomial m(nvars, 0);
        int d = deg(rng);
        for (int e = 0; e < d; ++e) ++m[var(rng)];
        int c = coeff(rng);
        p.add(m, Scalar(c == 0 ? 1 : c));
    }
    return p;
}

void cartan_checks(Suite& s, const RuminComplex& c, const VerifyOptions& opts, VerifyReport& report, double build) {
    const RingPtr& ring = c.ring();
    s.run("cartan_dims", 1, [&](std::string& d) {
        auto dims = c.dims();
        for (std::size_t h = 0; h < dims.size(); ++h) d += (h ? "," : "") + std::to_string(dims[h]);
        return dims == std::vector<int>{1, 2, 3, 3, 2, 1};
    });
    for (int h = 0; h <= 5; ++h)
        s.run("basis_span/" + std::to_string(h), 1, [&](std::string& d) {
            Matrix t = align_basis(c.basis(h), cartan_reference_basis(h));
            d = t == Matrix::identity(t.rows()) ? "identity alignment" : "signed alignment";
            return true;
        });

    double basis_time = build;
    for (const auto* r : report.criterion(1)) basis_time += r->seconds;
    // Timings stay out of the detail on success so reports are reproducible.
    s.add({"basis_time", 1, true, basis_time < 1,
           basis_time < 1 ? "construction and bases within 1 s" : std::to_string(basis_time) + " s", basis_time});

    if (!opts.golden_path.empty()) {
        if (opts.update_golden) s.run("golden_update", 2, [&](std::string& d) {
            write_golden(c, opts.golden_path);
            d = "rewrote " + opts.golden_path;
            return true;
        });
        auto tg = Clock::now();
        s.run("golden_matrices", 2, [&](std::string& d) {
            auto diff = compare_golden(c, opts.golden_path);
            for (std::size_t k = 0; k < diff.size(); ++k) d += (k ? " " : "") + diff[k];
            if (diff.empty()) d = "star 1-4, dc 0-4, deltac 1-5 match entrywise";
            return diff.empty() && since(tg) < 10;
        });
    } else {
        s.add({"golden_matrices", 2, true, false, "no golden file given", 0});
    }

    s.run("laplacian_orders", 5, [&](std::string& d) {
        bool ok = true;
        for (Family f : {Family::G, Family::R, Family::A}) {
            auto want = expected_orders(f);
            d += family_name(f) + ":";
            for (int h = 0; h <= 5; ++h) {
                OperatorMatrix m = laplacian(c, f, h);
                auto rep = verify_homogeneous_order(m, want[h]);
                auto adj = verify_self_adjoint(m);
                d += " " + (rep.actual ? std::to_string(*rep.actual) : std::string("?")) + (adj.self_adjoint ? "" : "!");
                ok = ok && rep.passed && adj.self_adjoint;
            }
            d += "; ";
        }
        return ok;
    });
    s.run("laplacian_A_star_conjugate", 5, [&](std::string& d) {
        bool ok = hodge_conjugate(c, laplacian(c, Family::A, 2), 2) == laplacian(c, Family::A, 3);
        d = ok ? "Delta_A3 = star2 Delta_A2 star3" : "entrywise difference";
        return ok;
    });
    s.run("laplacian_star_duality", 0, [&](std::string& d) {
        bool ok = true;
        for (Family f : {Family::G, Family::R, Family::A})
            for (int h = 0; h <= 5; ++h) {
                int sg = star_duality_sign(c, f, h);
                d += family_name(f) + std::to_string(h) + ":" + std::to_string(sg) + " ";
                ok = ok && sg != 0;
            }
        return ok;
    });

    nlohmann::json exps = nlohmann::json::object();
    for (Theorem t : {Theorem::H2, Theorem::H2cor, Theorem::C2, Theorem::H2sum}) {
        s.run("exponents/" + theorem_name(t), 7, [&](std::string& d) {
            auto tab = theorem_table(c, t);
            nlohmann::json rows = nlohmann::json::array();
            int agree = 0, flagged = 0, bad = 0;
            for (const auto& r : tab) {
                rows.push_back(exponent_record_to_json(r));
                if (r.status == "agree") ++agree;
                else if (r.status == "documented_discrepancy") ++flagged;
                else ++bad;
                if (r.folland_used && !r.folland_ok) ++bad;
            }
            nlohmann::json entry{{"records", rows}};
            bool ok = bad == 0;
            if (t == Theorem::C2) {
                int want = 0;
                for (const auto& r : tab)
                    if (r.status == "documented_discrepancy" && (r.degree == 2 || r.degree == 3)) ++want;
                ok = ok && want == 2 && flagged == 2;
            } else {
                ok = ok && flagged == 0;
            }
            if (t == Theorem::H2sum) {
                nlohmann::json pairs = nlohmann::json::array();
                for (const auto& p : sum_pairs(tab)) {
                    pairs.push_back(sum_pair_to_json(p));
                    ok = ok && p.agree;
                }
                entry["sum_pairs"] = pairs;
                entry["duality"] = sum_space_duality_note();
            }
            exps[theorem_name(t)] = entry;
            d = std::to_string(agree) + " agree, " + std::to_string(flagged) + " documented discrepancies, " +
                std::to_string(bad) + " mismatches";
            return ok;
        });
    }
    report.exponents = exps;

    s.run("divergence_tensors", 8, [&](std::string& d) {
        auto fs = tensor_findings(c, Convention::CvS);
        bool ok = !fs.empty();
        for (const auto& f : fs) {
            report.findings.push_back(finding_to_json(f));
            d += f.check + ":" + f.status + " ";
            if (f.check == "pierre-h3-tensor" || f.check == "pierre-h4-tensor")
                ok = ok && f.status == "certified" && f.certificate;
            if (f.check == "pierre-h1-tensor" || f.check == "pierre-h2-tensor")
                ok = ok && (f.status == "certified" || (f.status == "corrected" && f.round_trip));
        }
        // Certificates must be constant for h = 3, 4.
        for (int h : {3, 4}) {
            auto cert = check_row_membership(generalized_divergence(ring, paper_tensor(ring, h), Convention::CvS),
                                             c.dc(h), 12);
            ok = ok && cert && cert->constant();
        }
        return ok;
    });

    s.run("oracle_cross_validation", 9, [&](std::string& d) {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<int> len(1, opts.max_word), letter(0, 4);
        CoordinateRealization real = cartan_realization();
        int fails = 0;
        for (int k = 0; k < opts.oracle_pairs; ++k) {
            std::vector<int> w(len(rng));
            for (int& x : w) x = letter(rng);
            Polynomial p = random_polynomial(rng, 5, opts.max_poly_degree);
            if (!(coordinate_apply(normal_form(ring, w), p, &real) == apply_word(real, w, p))) ++fails;
        }
        d = std::to_string(opts.oracle_pairs) + " pairs, seed " + std::to_string(opts.seed) + ", " +
            std::to_string(fails) + " failures";
        return fails == 0 && opts.oracle_pairs >= 100;
    });
}

}  // namespace

VerifyReport run_verify(const StratifiedLieAlgebra& g, const VerifyOptions& opts) {
    VerifyReport report;
    auto t0 = Clock::now();
    bool cartan = is_cartan(g);
    report.group = cartan ? "cartan" : "dim " + std::to_string(g.dim());
    Suite s(report);

    auto tb = Clock::now();
    RuminComplex c(PbwRing::create(g));
    double build = since(tb);
    if (cartan) cartan_checks(s, c, opts, report, build);
    generic_checks(s, c);

    s.run("free_nilpotent_2_3", 10, [&](std::string& d) {
        StratifiedLieAlgebra f = free_nilpotent(2, 3);
        StratifiedLieAlgebra k = cartan_group();
        bool ok = f == k && f.homogeneous_dimension() == 10;
        d = "Q=" + std::to_string(f.homogeneous_dimension()) + (f == k ? ", tables equal" : ", tables differ");
        return ok;
    });

    report.seconds = since(t0);
    bool fast = report.seconds < 60;
    s.add({"wall_clock", 11, true, fast, fast ? "within 60 s" : std::to_string(report.seconds) + " s", report.seconds});
    return report;
}

}  // namespace rumin
