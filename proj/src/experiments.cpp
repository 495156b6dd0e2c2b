// Drivers behind the command-line tool.  Each one collects library results
// into key/value rows, a JSON object, and named checks; a shared assembler
// renders whichever format was requested.  Exit code 0 means every check
// passed, 1 means some check failed, 2 means the configuration was unusable.

#include <steenrod/experiments.hpp>

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <steenrod/closedform.hpp>
#include <steenrod/diagonal.hpp>
#include <steenrod/frobenius.hpp>
#include <steenrod/garnir.hpp>
#include <steenrod/qlayers.hpp>
#include <steenrod/regseq.hpp>
#include <steenrod/tildedecomp.hpp>

namespace steenrod {
namespace {

using json = nlohmann::ordered_json;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Report {
    std::vector<std::pair<std::string, std::string>> rows;
    json data = json::object();
    std::vector<std::pair<std::string, bool>> checks;
    std::string csv;  // set only by grid-shaped reports

    void row(const std::string& key, const std::string& value) { rows.emplace_back(key, value); }
    void check(const std::string& name, bool ok) { checks.emplace_back(name, ok); }
    bool all() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
    }
};

void require_range(const std::string& what, long v, long lo, long hi) {
    if (v < lo || v > hi)
        throw usage_error(what + " must lie between " + std::to_string(lo) + " and " +
                          std::to_string(hi) + ", got " + std::to_string(v));
}

std::vector<long> series_ints(const UPoly& p) {
    std::vector<long> out;
    for (int d = 0; d <= p.degree(); ++d) {
        Rational c = p.coeff(d);
        if (!(c.den() == Integer(1)))
            throw std::logic_error("series_ints: non-integer coefficient");
        out.push_back(c.num().get_si());
    }
    return out;
}

template <class Int>
std::string join(const std::vector<Int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << " ";
        os << v[i];
    }
    return os.str();
}

std::string render_weights(const std::vector<Rational>& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i].render();
    }
    return os.str();
}

json weights_json(const std::vector<Rational>& a) {
    json out = json::array();
    for (const auto& c : a) out.push_back(c.render());
    return out;
}

int default_cap(const std::string& family, int n) {
    if (family == "tilde") return n * (n + 1) / 2;
    return n * (n - 1) / 2 + 1;
}

bool known_family(const std::string& f) {
    return f == "classical" || f == "tilde" || f == "hat" || f == "q-steenrod";
}

OperatorFamily<Rational> rational_family(const std::string& family, int n,
                                         const std::optional<Rational>& q) {
    if (family == "classical") return family_classical<Rational>(n);
    if (family == "tilde") return family_tilde<Rational>(n);
    if (family == "hat") return family_hat<Rational>(n);
    return family_q_steenrod(n, q.value_or(Rational(1)));
}

bool symbolic_q_requested(const ExperimentConfig& cfg) {
    return cfg.family == "q-steenrod" && !cfg.q;
}

void describe_family(Report& r, const ExperimentConfig& cfg) {
    r.row("family", cfg.family);
    r.data["family"] = cfg.family;
    r.row("n", std::to_string(cfg.n));
    r.data["n"] = cfg.n;
    if (cfg.family == "q-steenrod") {
        std::string qs = cfg.q ? cfg.q->render() : "symbolic";
        r.row("q", qs);
        r.data["q"] = qs;
    }
}

void record_series(Report& r, const std::string& key, const UPoly& p) {
    r.row(key, detail::render_t_ascending(p));
    r.data[key] = series_ints(p);
}

// --- hilbert -------------------------------------------------------------

Report run_hilbert(const ExperimentConfig& cfg) {
    if (!known_family(cfg.family)) throw usage_error("unknown family: " + cfg.family);
    require_range("--n", cfg.n, 1, 4);
    int cap = cfg.cap >= 0 ? cfg.cap : default_cap(cfg.family, cfg.n);
    require_range("--cap", cap, 0, 36);

    Report r;
    describe_family(r, cfg);
    r.row("degree-cap", std::to_string(cap));
    r.data["degree_cap"] = cap;
    UPoly h;
    Integer total;
    if (symbolic_q_requested(cfg)) {
        auto K = solve_kernel(family_q_steenrod_symbolic(cfg.n), cap);
        h = K.hilbert();
        total = K.total();
    } else {
        auto K = solve_kernel(rational_family(cfg.family, cfg.n, cfg.q), cap);
        h = K.hilbert();
        total = K.total();
    }
    record_series(r, "hilbert", h);
    r.row("total", total.get_str());
    r.data["total"] = total.get_si();
    return r;
}

// --- frobenius -----------------------------------------------------------

std::vector<SymFunc> hat_characteristics(int n) {
    std::vector<SymFunc> hats{sym_s({})};
    for (int k = 1; k <= n; ++k)
        hats.push_back(frobenius_of_kernel(solve_kernel(family_hat<Rational>(k), k * (k - 1) / 2)));
    return hats;
}

Report run_frobenius(const ExperimentConfig& cfg) {
    if (!known_family(cfg.family)) throw usage_error("unknown family: " + cfg.family);
    require_range("--n", cfg.n, 1, 4);
    int cap = cfg.cap >= 0 ? cfg.cap : default_cap(cfg.family, cfg.n);
    require_range("--cap", cap, 0, 36);

    Report r;
    describe_family(r, cfg);
    r.row("degree-cap", std::to_string(cap));
    r.data["degree_cap"] = cap;
    SymFunc f = sym_zero(cfg.n, SymBasis::schur);
    if (symbolic_q_requested(cfg)) {
        auto K = solve_kernel(family_q_steenrod_symbolic(cfg.n), cap);
        auto traces = kernel_class_traces(K);
        std::vector<std::map<Partition, Rational>> constant;
        for (const auto& layer : traces) {
            std::map<Partition, Rational> m;
            for (const auto& [mu, tr] : layer) m.emplace(mu, q_constant_value(tr));
            constant.push_back(std::move(m));
        }
        f = to_schur(frobenius_from_traces(cfg.n, constant));
        r.check("q-free-traces", true);
        r.check("schur-positive", sym_is_multiplicity_positive(f));
    } else {
        f = frobenius_of_kernel(solve_kernel(rational_family(cfg.family, cfg.n, cfg.q), cap));
    }
    r.row("frobenius", sym_render(f));
    json schur = json::object();
    for (const auto& lam : partitions_of(cfg.n)) {
        UPoly c = sym_poly_coeff(f, lam);
        if (!c.is_zero()) schur[detail::render_partition(lam)] = series_ints(c);
    }
    r.data["schur"] = schur;
    if (cfg.family == "classical") {
        r.check("matches-stable-principal-formula", f == frobenius_formula_regular(cfg.n));
        r.check("matches-cocharge-tableaux", f == frobenius_formula_tableaux(cfg.n));
    } else if (cfg.family == "tilde") {
        r.check("matches-induction-formula", f == frobenius_tilde_formula(hat_characteristics(cfg.n)));
    }
    return r;
}

// --- tilde-decomp --------------------------------------------------------

Report run_tilde_decomp(const ExperimentConfig& cfg) {
    require_range("--n", cfg.n, 1, 4);
    int cap = cfg.cap >= 0 ? cfg.cap : cfg.n * (cfg.n + 1) / 2;
    require_range("--cap", cap, 0, 36);

    Report r;
    r.row("n", std::to_string(cfg.n));
    r.data["n"] = cfg.n;
    r.row("degree-cap", std::to_string(cap));
    r.data["degree_cap"] = cap;
    auto rep = decomposition_check_tilde(cfg.n, cap);
    record_series(r, "hilbert", rep.tilde_hilbert);
    record_series(r, "assembled", rep.assembled_hilbert);
    r.check("operator-identity", rep.operator_identity);
    r.check("hilbert-assembled", rep.hilbert_assembled);
    r.check("supports-split", rep.supports_split);
    return r;
}

// --- q-layers ------------------------------------------------------------

Report run_q_layers(const ExperimentConfig& cfg) {
    require_range("--n", cfg.n, 1, 3);
    int cap = cfg.cap >= 0 ? cfg.cap : cfg.n * (cfg.n - 1) / 2 + 1;
    require_range("--cap", cap, 0, 36);

    Report r;
    r.row("n", std::to_string(cfg.n));
    r.data["n"] = cfg.n;
    r.row("degree-cap", std::to_string(cap));
    r.data["degree_cap"] = cap;
    auto K = solve_kernel(family_q_steenrod_symbolic(cfg.n), cap);
    record_series(r, "hilbert", K.hilbert());

    bool conditions = true, chains = true;
    long words = 0;
    int longest = 0;
    json lengths = json::array();
    for (int d = 0; d <= cap; ++d) {
        json per_degree = json::array();
        for (const auto& b : K.graded[d]) {
            auto lay = q_layers(clear_q_denominators(b));
            per_degree.push_back(lay.length() + 1);
            longest = std::max(longest, lay.length());
            if (!layer_conditions(lay).ok()) conditions = false;
            auto ch = chain_harmonicity(lay);
            if (!ch.all_harmonic) chains = false;
            words += ch.chains_checked;
        }
        lengths.push_back(per_degree);
    }
    r.data["layer_counts"] = lengths;
    r.row("longest-stack", std::to_string(longest + 1));
    r.row("chains-checked", std::to_string(words));
    r.data["chains_checked"] = words;

    auto spans = first_last_spans(K);
    record_series(r, "first-term-span", spans.first_hilbert);
    record_series(r, "last-term-span", spans.last_hilbert);
    r.check("layer-conditions", conditions);
    r.check("chains-harmonic", chains);
    r.check("first-span-matches", spans.first_hilbert == K.hilbert());
    r.check("last-span-matches", spans.last_hilbert == K.hilbert());
    return r;
}

// --- coeff-equality ------------------------------------------------------

Report run_coeff_equality(const ExperimentConfig& cfg) {
    require_range("--n", cfg.n, 1, 4);

    Report r;
    r.row("n", std::to_string(cfg.n));
    r.data["n"] = cfg.n;
    auto rep = coefficient_equality_check(cfg.n);
    r.row("kernel-dims", join(rep.kernel_dims));
    r.data["kernel_dims"] = rep.kernel_dims;
    r.row("factorial-coeffs", join(rep.factorial_coeffs));
    r.data["factorial_coeffs"] = rep.factorial_coeffs;
    r.check("coefficients-match", rep.equal);
    return r;
}

// --- psi-basis -----------------------------------------------------------

Report run_psi_basis(const ExperimentConfig& cfg) {
    require_range("--n", cfg.n, 1, 4);
    int k = cfg.k > 0 ? cfg.k : 1;
    require_range("--k", k, 1, 4);
    int cap = cfg.cap >= 0 ? cfg.cap : 6;
    require_range("--cap", cap, 0, 12);
    std::vector<Rational> a = cfg.a.empty() ? std::vector<Rational>(cfg.n, Rational(1)) : cfg.a;
    std::vector<Rational> b = cfg.b.empty() ? std::vector<Rational>(cfg.n, Rational(1)) : cfg.b;
    if (static_cast<int>(a.size()) != cfg.n || static_cast<int>(b.size()) != cfg.n)
        throw usage_error("--a and --b must each list n weights");
    auto sing = singular_parameter_degree(a[cfg.n - 1], b[cfg.n - 1]);
    if (sing && *sing <= Integer(cap))
        throw usage_error("distinguished weights are singular at degree " + sing->get_str() +
                          "; change them or lower the cap");

    Report r;
    r.row("n", std::to_string(cfg.n));
    r.data["n"] = cfg.n;
    r.row("k", std::to_string(k));
    r.data["k"] = k;
    r.row("degree-cap", std::to_string(cap));
    r.data["degree_cap"] = cap;
    r.row("a", render_weights(a));
    r.data["a"] = weights_json(a);
    r.row("b", render_weights(b));
    r.data["b"] = weights_json(b);

    PsiLift<Rational> lift(cfg.n, k, a, b);
    auto op = lift.op();
    bool annihilated = true, independent = true;
    std::vector<Rational> dims;
    for (int d = 0; d <= cap; ++d) {
        auto basis = lift.lifted_basis(d);
        for (const auto& f : basis)
            if (!op.apply(f).is_zero()) annihilated = false;
        auto mons = monomials_of_degree(cfg.n, d);
        std::vector<std::vector<Rational>> rows;
        for (const auto& f : basis) rows.push_back(poly_to_vec(f, mons));
        auto piv = rref_field(rows, static_cast<int>(mons.size()));
        if (piv.size() != basis.size()) independent = false;
        dims.push_back(Rational(static_cast<long>(basis.size())));
    }
    UPoly lifted(dims);
    record_series(r, "hilbert", lifted);
    auto direct = solve_kernel(family_single("psi", k, op), cap).hilbert();
    r.check("annihilated", annihilated);
    r.check("independent", independent);
    r.check("matches-nullspace", lifted == direct);
    r.check("matches-closed-form", lifted == kernel_hilbert_single(k, cfg.n, cap));
    return r;
}

// --- garnir-bound --------------------------------------------------------

Report run_garnir_bound(const ExperimentConfig& cfg) {
    if (!known_family(cfg.family)) throw usage_error("unknown family: " + cfg.family);
    require_range("--n", cfg.n, 1, 4);
    int member_cap = cfg.family == "classical" ? cfg.n : cfg.n + 1;

    Report r;
    describe_family(r, cfg);
    GarnirBoundReport rep =
        symbolic_q_requested(cfg)
            ? garnir_lower_bound(family_q_steenrod_symbolic(cfg.n), member_cap)
            : garnir_lower_bound(rational_family(cfg.family, cfg.n, cfg.q), member_cap);
    record_series(r, "lower-bound", rep.lower);
    record_series(r, "kernel-hilbert", rep.kernel_hilbert);
    r.check("annihilated", rep.annihilated);
    r.check("bounded", rep.bounded);
    return r;
}

// --- regseq --------------------------------------------------------------

Report run_regseq(const ExperimentConfig& cfg) {
    if (cfg.a.empty()) throw usage_error("regseq needs --a with at least one weight");
    int n = static_cast<int>(cfg.a.size());
    require_range("number of weights", n, 1, 4);
    int k = cfg.k > 0 ? cfg.k : 2;
    require_range("--k", k, 1, 4);
    int cap = cfg.cap >= 0 ? cfg.cap : quotient_decision_cap(k, n);
    require_range("--cap", cap, 0, 24);

    Report r;
    r.row("a", render_weights(cfg.a));
    r.data["a"] = weights_json(cfg.a);
    r.row("k", std::to_string(k));
    r.data["k"] = k;

    PhiFamily<Rational> F{cfg.a};
    auto subsets = subset_sum_regularity(cfg.a);
    auto quotient = quotient_hilbert(k, F, cap);
    int e = n * (n - 1) / 2 + 1;
    bool pure = true;
    for (int i = 0; i < n; ++i) {
        ExpVec exp(n, 0);
        exp[i] = e;
        if (!ideal_membership(MultiPoly<Rational>::monomial(n, exp, Rational(1)), 1, F))
            pure = false;
    }

    r.row("regular", subsets.regular ? "yes" : "no");
    r.data["regular"] = subsets.regular;
    if (!subsets.regular) {
        r.row("witness-subset", join(subsets.witness));
        r.data["witness_subset"] = subsets.witness;
    }
    r.row("quotient-dims", join(quotient.dims));
    r.data["hilbert"] = quotient.dims;
    r.row("pure-powers-in-ideal", pure ? "yes" : "no");
    r.data["pure_powers_in_ideal"] = pure;
    bool agree = subsets.regular == quotient.terminated && subsets.regular == pure;
    r.data["criteria_agree"] = agree;
    r.check("criteria-agree", agree);
    if (subsets.regular)
        r.check("quotient-matches-formula",
                UPoly(std::vector<Rational>(quotient.dims.begin(), quotient.dims.end())) ==
                    quotient_hilbert_formula(k, n));
    return r;
}

// --- diagonal ------------------------------------------------------------

Report run_symbolic_diagonal(const ExperimentConfig& cfg) {
    if (cfg.n != 3) throw usage_error("symbolic weights are only tabulated for --n 3");
    Report r;
    r.row("n", std::to_string(cfg.n));
    r.data["n"] = cfg.n;
    r.row("a", "symbolic");
    r.data["a"] = "symbolic";
    auto rep = antisymmetrizer_identity();
    r.check("seed-rebuilds-apex", rep.rebuilds_apex);
    r.check("kills-symmetric", rep.kills_symmetric);
    r.check("composes-to-order", rep.composes_to_order);
    return r;
}

Report run_diagonal(const ExperimentConfig& cfg) {
    if (cfg.symbolic_a) return run_symbolic_diagonal(cfg);
    require_range("--n", cfg.n, 1, 3);
    int cap = cfg.cap >= 0 ? cfg.cap : cfg.n * (cfg.n + 1) + 2;
    require_range("--cap", cap, 0, 26);
    std::vector<Rational> a = cfg.a.empty() ? std::vector<Rational>(cfg.n, Rational(1)) : cfg.a;
    if (static_cast<int>(a.size()) != cfg.n) throw usage_error("--a must list n weights");
    auto subsets = subset_sum_regularity(a);
    if (!subsets.regular)
        throw usage_error("weights are not regular: subset {" + join(subsets.witness) +
                          "} sums to zero");

    Report r;
    r.row("n", std::to_string(cfg.n));
    r.data["n"] = cfg.n;
    r.row("a", render_weights(a));
    r.data["a"] = weights_json(a);
    r.row("degree-cap", std::to_string(cap));
    r.data["degree_cap"] = cap;

    auto K = solve_diagonal(cfg.n, a, cap);
    auto table = K.table();
    r.row("total", K.total().get_str());
    r.data["total"] = K.total().get_si();
    json rows_json = json::array();
    std::ostringstream csv;
    csv << "# command=diagonal n=" << cfg.n << " seed=" << cfg.seed << "\n";
    csv << "dx\\dy";
    std::size_t width = 0;
    for (const auto& row : table) width = std::max(width, row.size());
    for (std::size_t j = 0; j < width; ++j) csv << "," << j;
    csv << "\n";
    for (std::size_t i = 0; i < table.size(); ++i) {
        rows_json.push_back(table[i]);
        r.row("bidegree-row " + std::to_string(i), join(table[i]));
        csv << i;
        for (std::size_t j = 0; j < width; ++j) {
            csv << ",";
            if (j < table[i].size()) csv << table[i][j];
        }
        csv << "\n";
    }
    r.data["table"] = rows_json;
    r.csv = csv.str();

    r.check("certified", K.certified);
    bool ones = std::all_of(a.begin(), a.end(), [](const Rational& c) { return c == Rational(1); });
    if (ones) {
        Integer trees = 1;
        for (int i = 0; i < cfg.n - 1; ++i) trees *= cfg.n + 1;
        r.check("counts-labelled-trees", K.total() == trees);
    }
    return r;
}

// --- wood-basis ----------------------------------------------------------

Report run_wood_basis(const ExperimentConfig& cfg) {
    require_range("--n", cfg.n, 1, 4);
    int cap = cfg.n * (cfg.n + 1) / 2;

    Report r;
    r.row("n", std::to_string(cfg.n));
    r.data["n"] = cfg.n;
    auto basis = wood_basis(cfg.n);
    r.row("count", std::to_string(basis.size()));
    r.data["count"] = basis.size();

    Integer expected = 0;
    for (int k = 0; k <= cfg.n; ++k) expected += int_binomial(cfg.n, k) * int_factorial(k);
    r.check("count-matches-formula", Integer(static_cast<long>(basis.size())) == expected);

    std::vector<int> per_degree(cap + 1, 0);
    json mons = json::array();
    std::ostringstream listing;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        ++per_degree[exp_degree(basis[i])];
        std::string m = exp_render(basis[i]);
        if (m.empty()) m = "1";
        mons.push_back(m);
        if (i) listing << ", ";
        listing << m;
    }
    r.row("monomials", listing.str());
    r.data["monomials"] = mons;
    r.row("per-degree", join(per_degree));
    r.data["per_degree"] = per_degree;
    auto quotient = hit_quotient_dims(family_tilde<Rational>(cfg.n), cap);
    r.check("degrees-match-hit-quotient", per_degree == quotient);
    return r;
}

// --- assembly ------------------------------------------------------------

std::string render_report(const ExperimentConfig& cfg, const Report& r, bool ok) {
    if (cfg.format == ReportFormat::csv) {
        if (r.csv.empty())
            throw usage_error("csv output is only available for the diagonal table");
        return r.csv;
    }
    if (cfg.format == ReportFormat::json) {
        json j;
        j["command"] = cfg.command;
        j["seed"] = cfg.seed;
        for (const auto& [key, value] : r.data.items()) j[key] = value;
        json checks = json::object();
        for (const auto& [name, passed] : r.checks) checks[name] = passed;
        j["checks"] = checks;
        j["result"] = ok ? "pass" : "fail";
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "command: " << cfg.command << "\n";
    os << "seed: " << cfg.seed << "\n";
    for (const auto& [key, value] : r.rows) os << key << ": " << value << "\n";
    for (const auto& [name, passed] : r.checks)
        os << "check " << name << ": " << (passed ? "pass" : "FAIL") << "\n";
    os << "result: " << (ok ? "pass" : "fail") << "\n";
    return os.str();
}

Report dispatch(const ExperimentConfig& cfg) {
    if (cfg.command == "hilbert") return run_hilbert(cfg);
    if (cfg.command == "frobenius") return run_frobenius(cfg);
    if (cfg.command == "tilde-decomp") return run_tilde_decomp(cfg);
    if (cfg.command == "q-layers") return run_q_layers(cfg);
    if (cfg.command == "coeff-equality") return run_coeff_equality(cfg);
    if (cfg.command == "psi-basis") return run_psi_basis(cfg);
    if (cfg.command == "garnir-bound") return run_garnir_bound(cfg);
    if (cfg.command == "regseq") return run_regseq(cfg);
    if (cfg.command == "diagonal") return run_diagonal(cfg);
    if (cfg.command == "wood-basis") return run_wood_basis(cfg);
    throw usage_error("unknown command: " + cfg.command);
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    try {
        Report r = dispatch(cfg);
        bool ok = r.all();
        return {ok ? 0 : 1, render_report(cfg, r, ok)};
    } catch (const std::exception& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    }
}

std::vector<ExpVec> wood_basis(int n) {
    if (n < 0) throw std::invalid_argument("wood_basis: negative variable count");
    std::vector<ExpVec> out;
    for (int k = 0; k <= n; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            // exponents 1..j+1 at position j, earliest non-forced slot fastest
            std::vector<int> a(k, 1);
            while (true) {
                ExpVec e(n, 0);
                for (int j = 0; j < k; ++j) e[idx[j]] = a[j];
                out.push_back(e);
                int j = 1;
                while (j < k && a[j] == j + 1) a[j++] = 1;
                if (j >= k) break;
                ++a[j];
            }
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

}  // namespace steenrod
