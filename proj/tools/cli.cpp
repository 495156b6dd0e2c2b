// Command-line front end: parse flags into an ExperimentConfig, run the
// experiment, and write the report to stdout or to --out.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <steenrod/experiments.hpp>

namespace {

steenrod::Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return steenrod::Rational(std::stol(s));
        return steenrod::Rational(std::stol(s.substr(0, slash)), std::stol(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::runtime_error("expected an integer or a fraction p/q, got '" + s + "'");
    }
}

std::vector<steenrod::Rational> parse_weights(const std::string& s) {
    std::vector<steenrod::Rational> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(parse_rational(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact kernel and quotient experiments for deformed derivation families"};
    app.require_subcommand(1);

    steenrod::ExperimentConfig cfg;
    std::string q, a, b;
    std::string format = "text";
    std::string out;

    auto common = [&](CLI::App* sub, bool with_cap) {
        sub->add_option("--n", cfg.n, "number of variables");
        if (with_cap) sub->add_option("--cap", cfg.cap, "degree cap; defaults per command");
        sub->add_option("--format", format, "text, json, or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--seed", cfg.seed, "seed recorded in the report");
        sub->add_option("--out", out, "write the report to this file");
        return sub;
    };
    auto family_flags = [&](CLI::App* sub) {
        sub->add_option("--family", cfg.family, "classical, tilde, hat, or q-steenrod");
        sub->add_option("--q", q, "deformation value, an integer or p/q, or 'symbolic'");
        return sub;
    };

    family_flags(common(app.add_subcommand("hilbert", "kernel dimensions by degree"), true));
    family_flags(common(app.add_subcommand("frobenius", "graded symmetric-group character"), true));
    common(app.add_subcommand("tilde-decomp", "kernel split over variable supports"), true);
    common(app.add_subcommand("q-layers", "layer structure of the symbolic kernel"), true);
    common(app.add_subcommand("coeff-equality", "kernel dimensions against t-factorial"), false);
    auto* psi = common(app.add_subcommand("psi-basis", "closed-form kernel of one operator"), true);
    psi->add_option("--k", cfg.k, "order drop of the operator");
    psi->add_option("--a", a, "comma-separated leading weights");
    psi->add_option("--b", b, "comma-separated trailing weights");
    family_flags(common(app.add_subcommand("garnir-bound", "tableau lower bound"), false));
    auto* regseq = common(app.add_subcommand("regseq", "regularity of weighted power sums"), true);
    regseq->add_option("--k", cfg.k, "smallest power-sum index");
    regseq->add_option("--a", a, "comma-separated weights")->required();
    auto* diag = common(app.add_subcommand("diagonal", "two-set kernel by bidegree"), true);
    diag->add_option("--a", a, "comma-separated weights, or 'symbolic'");
    common(app.add_subcommand("wood-basis", "monomial basis of the hit quotient"), false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    try {
        if (!q.empty() && q != "symbolic") cfg.q = parse_rational(q);
        if (a == "symbolic")
            cfg.symbolic_a = true;
        else if (!a.empty())
            cfg.a = parse_weights(a);
        if (!b.empty()) cfg.b = parse_weights(b);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (format == "json")
        cfg.format = steenrod::ReportFormat::json;
    else if (format == "csv")
        cfg.format = steenrod::ReportFormat::csv;

    auto result = steenrod::run_experiment(cfg);
    if (result.exit_code == 2) {
        std::cerr << result.body;
        return 2;
    }
    if (out.empty()) {
        std::cout << result.body;
    } else {
        std::ofstream file(out);
        if (!file) {
            std::cerr << "error: cannot open " << out << "\n";
            return 2;
        }
        file << result.body;
    }
    return result.exit_code;
}
