#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spencer/claims.hpp"
#include "spencer/rng.hpp"

using namespace spencer;
using nlohmann::ordered_json;

namespace {

const ClaimResult* find(const std::vector<ClaimResult>& results, const std::string& id) {
    for (const auto& r : results)
        if (r.id == id) return &r;
    return nullptr;
}

RunOptions sl2_options() {
    RunOptions opts;
    opts.suite = "sl2";
    opts.seed = 7;
    return opts;
}

}  // namespace

TEST_CASE("mirror suite confirms everything and exits clean") {
    RunOptions opts;
    opts.suite = "mirror";
    RunOutcome out = run_claims(opts);
    REQUIRE(!out.results.empty());
    for (const auto& r : out.results) CHECK(r.status == ClaimStatus::confirmed);
    CHECK(refuted_paper_claims(out.results) == 0);
}

TEST_CASE("sl2 suite records the printed-sign conflict") {
    RunOutcome out = run_claims(sl2_options());
    const ClaimResult* hf = find(out.results, "b4-sigma-hf");
    REQUIRE(hf != nullptr);
    CHECK(hf->provenance == Provenance::paper);
    CHECK(hf->status == ClaimStatus::refuted);
    CHECK(!hf->witness.is_null());
    CHECK(hf->computed["lambda_F"] == "-2");
    CHECK(hf->expected["lambda_F"] == "2");

    const ClaimResult* c7 = find(out.results, "c7-sigma-hf");
    REQUIRE(c7 != nullptr);
    CHECK(c7->status == ClaimStatus::confirmed);

    CHECK(refuted_paper_claims(out.results) > 0);
}

TEST_CASE("kernel case split claims") {
    RunOutcome out = run_claims(sl2_options());
    const ClaimResult* nontrivial = find(out.results, "c7-kernel-nontrivial");
    REQUIRE(nontrivial != nullptr);
    CHECK(nontrivial->status == ClaimStatus::confirmed);
    const ClaimResult* trivial = find(out.results, "c7-kernel-trivial");
    REQUIRE(trivial != nullptr);
    CHECK(trivial->status == ClaimStatus::confirmed);
    const ClaimResult* bound = find(out.results, "a-dimension-bound-sl2-k1");
    REQUIRE(bound != nullptr);
    CHECK(bound->status == ClaimStatus::refuted);
    CHECK(!bound->witness.is_null());
}

TEST_CASE("suite filtering and convention restriction") {
    RunOptions opts;
    opts.suite = "nilpotency";
    RunOutcome both = run_claims(opts);
    opts.convention = LeibnizConvention::graded;
    RunOutcome graded_only = run_claims(opts);
    CHECK(both.results.size() == 2 * graded_only.results.size());
    for (const auto& r : graded_only.results)
        CHECK(r.id.find("ungraded") == std::string::npos);

    RunOptions bad;
    bad.suite = "nonsense";
    CHECK_THROWS_AS(run_claims(bad), std::invalid_argument);
}

TEST_CASE("derived claims without a snapshot are indeterminate, pinning fixes them") {
    RunOptions opts;
    opts.suite = "nilpotency";
    RunOutcome first = run_claims(opts);
    for (const auto& r : first.results) {
        // Paper-asserted verdicts still resolve without a snapshot...
        CHECK(r.status != ClaimStatus::indeterminate);
    }
    // ...but a pure derived pin (the sl2 oracle golden) needs one.
    RunOptions sl2 = sl2_options();
    RunOutcome unpinned = run_claims(sl2);
    const ClaimResult* oracle = find(unpinned.results, "oracle-hh-hef-ungraded");
    REQUIRE(oracle != nullptr);
    CHECK(oracle->status == ClaimStatus::indeterminate);

    sl2.update_snapshots = true;
    RunOutcome pinned = run_claims(sl2);
    CHECK(pinned.snapshots_changed);
    const ClaimResult* pinned_oracle = find(pinned.results, "oracle-hh-hef-ungraded");
    REQUIRE(pinned_oracle != nullptr);
    CHECK(pinned_oracle->status == ClaimStatus::confirmed);
    CHECK(pinned.snapshots.contains("oracle-hh-hef-ungraded"));

    // A tampered pin is reported as a stability failure, not silently refit.
    RunOptions tampered = sl2_options();
    tampered.snapshots = pinned.snapshots;
    tampered.snapshots["oracle-hh-hef-ungraded"] = ordered_json{{"lambda_H", "999"}};
    RunOutcome bad = run_claims(tampered);
    const ClaimResult* mismatch = find(bad.results, "oracle-hh-hef-ungraded");
    REQUIRE(mismatch != nullptr);
    CHECK(mismatch->status == ClaimStatus::indeterminate);
    CHECK(!mismatch->witness.is_null());
}

TEST_CASE("reports are deterministic for a fixed seed") {
    RunOptions opts = sl2_options();
    RunOutcome a = run_claims(opts);
    RunOutcome b = run_claims(opts);
    std::string ra = make_report("sl2", "both", a.results).dump(2);
    std::string rb = make_report("sl2", "both", b.results).dump(2);
    CHECK(ra == rb);
}

TEST_CASE("report layout") {
    RunOutcome out = run_claims(sl2_options());
    ordered_json report = make_report("sl2", "both", out.results);
    CHECK(report["suite"] == "sl2");
    CHECK(report["convention"] == "both");
    REQUIRE(report.contains("claims"));
    REQUIRE(report.contains("summary"));
    const auto& summary = report["summary"];
    std::size_t total = summary["confirmed"].get<std::size_t>() +
                        summary["refuted"].get<std::size_t>() +
                        summary["indeterminate"].get<std::size_t>() +
                        summary["skipped"].get<std::size_t>();
    CHECK(total == out.results.size());
    for (const auto& claim : report["claims"]) {
        CHECK(claim.contains("id"));
        CHECK(claim.contains("paper_location"));
        CHECK(claim.contains("provenance"));
        CHECK(claim.contains("status"));
        CHECK(claim.contains("expected"));
        CHECK(claim.contains("computed"));
        CHECK(claim.contains("witness"));
        std::string status = claim["status"].get<std::string>();
        if (status == "refuted" || status == "indeterminate" || status == "skipped")
            CHECK(!claim["witness"].is_null());
    }
}

TEST_CASE("dimension table") {
    LieAlgebra sl2 = LieAlgebra::builtin("sl2");
    std::vector<DualFunctional> samples{DualFunctional::zero(3)};
    auto rows = dimension_table(sl2, 1, 3, samples, CartanKernelMode::linearized,
                                LeibnizConvention::ungraded);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        CHECK(row.kernel_dim == row.sym_dim);  // zero lambda: no constraints bind
        CHECK(row.constraint_rank == 0);
        CHECK(!row.bound_holds);  // bound is sym_dim - 2 < sym_dim
    }

    DualFunctional le = DualFunctional::zero(3);
    le.coords[1] = GaussianRational(1);
    auto rows_e = dimension_table(sl2, 1, 1, {le}, CartanKernelMode::linearized,
                                  LeibnizConvention::ungraded);
    REQUIRE(rows_e.size() == 1);
    CHECK(rows_e[0].kernel_dim == 0);
}

TEST_CASE("serialization helpers produce canonical fields") {
    LieAlgebra sl2 = LieAlgebra::builtin("sl2");
    DualFunctional l = DualFunctional::zero(3);
    l.coords[0] = GaussianRational(1);
    auto op = operator_matrix(sl2, l, 1, LeibnizConvention::ungraded);
    ordered_json js = operator_to_json(sl2, op);
    CHECK(js["rows"] == 6);
    CHECK(js["cols"] == 3);
    CHECK(js["col_basis"][0] == "H");
    CHECK(js["entries"][4][0] == "1/4");  // E*F row, H column

    auto kernel = spencer_kernel(sl2, l, 1, LeibnizConvention::ungraded);
    ordered_json kj = spencer_kernel_to_json(sl2, l, kernel, LeibnizConvention::ungraded);
    CHECK(kj["dimension"] == kernel.dimension());
    CHECK(kj["mode"] == "spencer");
}
