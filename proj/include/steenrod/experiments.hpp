#pragma once

// Named end-to-end experiments behind the command-line tool.  Each driver
// assembles library results into a deterministic text, JSON, or CSV report
// with named pass/fail checks; the mathematics lives in the module headers.

#include <optional>
#include <string>
#include <vector>

#include <steenrod/exponent.hpp>
#include <steenrod/rational.hpp>

namespace steenrod {

enum class ReportFormat { text, json, csv };

struct ExperimentConfig {
    std::string command;
    int n = 3;
    std::string family = "tilde";  // classical | tilde | hat | q-steenrod
    std::optional<Rational> q;     // q-steenrod only; empty means symbolic
    std::vector<Rational> a, b;    // weight vectors where applicable
    bool symbolic_a = false;
    int k = 0;    // 0: per-command default
    int cap = -1; // -1: per-command default
    ReportFormat format = ReportFormat::text;
    unsigned long seed = 1;
};

struct ExperimentResult {
    int exit_code = 0;  // 0: checks pass; 1: a check failed; 2: unusable config
    std::string body;
};

/// Dispatch on cfg.command.  Errors never escape; they come back as exit
/// code 2 with the message in the body.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Candidate monomial basis for the tilde hit-quotient: over every k-subset
/// of the variables, taken in increasing order, the exponents a with
/// 1 <= a_i <= i.  Sizes sum to sum_k binom(n,k) k!.
std::vector<ExpVec> wood_basis(int n);

}  // namespace steenrod
