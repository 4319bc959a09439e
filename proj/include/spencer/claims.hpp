#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spencer/cartan.hpp"
#include "spencer/liealg.hpp"
#include "spencer/prolong.hpp"

#include <nlohmann/json.hpp>

namespace spencer {

enum class ClaimStatus { confirmed, refuted, indeterminate, skipped };
enum class Provenance { paper, trivial, derived };

std::string to_string(ClaimStatus s);
std::string to_string(Provenance p);

/// One executed registry entry. `expected` carries the asserted value with
/// its provenance; refuted and indeterminate results always carry a witness
/// or reason.
struct ClaimResult {
    std::string id;
    std::string paper_location;
    Provenance provenance = Provenance::derived;
    ClaimStatus status = ClaimStatus::indeterminate;
    nlohmann::ordered_json expected;
    nlohmann::ordered_json computed;
    nlohmann::ordered_json witness;
};

struct RunOptions {
    std::string suite = "all";
    /// When set, convention-specific claims restrict to this convention;
    /// convention-independent claims always run.
    std::optional<LeibnizConvention> convention;
    std::uint64_t seed = 7;
    /// Pinned expected values for derived claims (claim id -> value).
    nlohmann::ordered_json snapshots = nlohmann::ordered_json::object();
    /// Pin missing snapshot entries from this run's computed values.
    bool update_snapshots = false;
};

struct RunOutcome {
    std::vector<ClaimResult> results;
    nlohmann::ordered_json snapshots;
    bool snapshots_changed = false;
};

const std::vector<std::string>& claim_suites();

/// Executes the registry (filtered by suite/convention) in registry order.
RunOutcome run_claims(const RunOptions& opts);

nlohmann::ordered_json make_report(const std::string& suite, const std::string& convention_label,
                                   const std::vector<ClaimResult>& results);

/// Refuted claims with paper provenance drive the verify exit code.
std::size_t refuted_paper_claims(const std::vector<ClaimResult>& results);

struct DimensionTableRow {
    std::string lambda_text;
    std::size_t degree = 0;
    std::size_t sym_dim = 0;
    std::size_t constraint_rank = 0;
    std::size_t kernel_dim = 0;
    long bound = 0;
    bool bound_holds = false;
};

std::vector<DimensionTableRow> dimension_table(const LieAlgebra& alg, std::size_t k_from,
                                               std::size_t k_to,
                                               const std::vector<DualFunctional>& samples,
                                               CartanKernelMode mode, LeibnizConvention conv);

nlohmann::ordered_json table_to_json(const std::vector<DimensionTableRow>& rows);

// Canonical JSON renderings used by the CLI.
std::string lambda_text(const DualFunctional& lambda);
nlohmann::ordered_json operator_to_json(const LieAlgebra& alg, const OperatorMatrix& op);
nlohmann::ordered_json spencer_kernel_to_json(const LieAlgebra& alg, const DualFunctional& lambda,
                                              const KernelBasis& kernel, LeibnizConvention conv);
nlohmann::ordered_json cartan_kernel_to_json(const LieAlgebra& alg, const DualFunctional& lambda,
                                             const CartanKernelResult& result,
                                             LeibnizConvention conv);

}  // namespace spencer
