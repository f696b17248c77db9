#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgrushin/harness.hpp"

namespace qgrushin {

/// Identifiers t31 … t64 and c43, c53 as accepted on the command line.
const std::vector<std::string>& theorem_ids();

struct RunConfig {
    std::string theorem = "t41";
    GrushinParams grushin;
    Quaternion q{0.0, 1.0, 1.0, 1.0};
    std::optional<double> L;  ///< complex drift of t32–t34; defaults to the i-coefficient of Q
    double p = 4.0;           ///< +∞ selects the infinity families
    DomainSpec domain;
    RunOptions options;
    std::optional<double> perturb_alpha;
};

enum class CaseKind { Residual, Dirichlet };

struct TheoremCase {
    SolutionSpec spec;
    OperatorTag op = OperatorTag::DivFormReduced;
    CaseKind kind = CaseKind::Residual;
};

/**
 * Derives the solution family and operator for a configuration. Throws Error
 * (InvalidArgument, QInvalid, XiDegenerate, XiResonant, …) naming the violated
 * constraint; the CLI maps these to exit status 2.
 */
TheoremCase build_case(const RunConfig& cfg);

}  // namespace qgrushin
