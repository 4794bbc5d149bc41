#ifndef EXTREMAL_TOOLS_COMMANDS_HPP
#define EXTREMAL_TOOLS_COMMANDS_HPP

// Implementation of the `extremal` command line. Kept apart from main() so the
// tests can drive it with string streams.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "extremal/experiments.hpp"
#include "extremal/extremal.hpp"
#include "extremal/verification.hpp"

namespace extremal::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2, kBudgetFailure = 3 };

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Grid {
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;

    double at(int k) const;
};

/// "a:b:n" with a < b and n >= 2.
Grid parse_grid(const std::string& text);

/// One real per line; blank lines and '#' comments ignored.
std::vector<double> read_nodes(std::istream& in);
/// "re,im" per line; blank lines and '#' comments ignored.
hilbert::CoefficientVector read_coefficients(std::istream& in);

struct EvalRow {
    double x, G, M, B, psi, phi;
};

struct EvalTable {
    std::vector<EvalRow> rows;
    double tol_requested = 0.0;
    double tol_achieved = 0.0;  ///< largest error estimate reported for G
};

EvalTable eval_table(const Grid& grid, double tol, GStrategy strategy);

/// Header `x,G,M,B,psi,phi`, 17 significant digits per value.
std::string to_csv(const EvalTable& table);
Json to_json(const EvalTable& table);
Json to_json(const VerificationReport& report);
Json to_json(const hilbert::RemarkReport& report);
Json to_json(const hilbert::ConstantSearchReport& report);

struct HilbertRequest {
    std::vector<double> lambdas;
    std::optional<hilbert::CoefficientVector> coefficients;
    std::optional<double> constant;
    hilbert::SpectralOptions spectral;
};

Json hilbert_report(const HilbertRequest& request);

/// Parses argv and runs one subcommand; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace extremal::cli

#endif  // EXTREMAL_TOOLS_COMMANDS_HPP
