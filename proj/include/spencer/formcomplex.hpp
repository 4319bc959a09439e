#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spencer/liealg.hpp"
#include "spencer/prolong.hpp"
#include "spencer/symtensor.hpp"

namespace spencer {

enum class VariableMode : std::uint8_t { real, complex_vars };

/// Polynomial differential form with Q(i) coefficients over formal
/// variables. Real mode has m variables x_1..x_m; complex mode has m
/// holomorphic variables z_1..z_m plus their conjugates (generator indices
/// 0..m-1 are z_i, m..2m-1 are zbar_i). Differential index sets are kept
/// strictly increasing; out-of-order insertions pick up the sorting sign
/// and repeated differentials annihilate the term.
class FormPoly {
public:
    struct TermKey {
        std::vector<std::uint32_t> exps;   // monomial exponents per generator
        std::vector<std::size_t> diffs;    // strictly increasing
        friend bool operator<(const TermKey& a, const TermKey& b) {
            if (a.diffs != b.diffs) return a.diffs < b.diffs;
            return a.exps < b.exps;
        }
        friend bool operator==(const TermKey& a, const TermKey& b) {
            return a.exps == b.exps && a.diffs == b.diffs;
        }
    };

    FormPoly() = default;
    FormPoly(VariableMode mode, std::size_t vars) : mode_(mode), vars_(vars) {}

    VariableMode mode() const { return mode_; }
    std::size_t vars() const { return vars_; }
    std::size_t generators() const { return mode_ == VariableMode::real ? vars_ : 2 * vars_; }

    static FormPoly constant(VariableMode mode, std::size_t vars, const GaussianRational& c);
    static FormPoly variable(VariableMode mode, std::size_t vars, std::size_t g);
    static FormPoly differential(VariableMode mode, std::size_t vars, std::size_t g);

    const std::map<TermKey, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True iff every term carries the same differential count.
    bool homogeneous() const;

    /// Unsorted diffs are normalized with the permutation sign; repeated
    /// diffs drop the term.
    void add_term(std::vector<std::uint32_t> exps, std::vector<std::size_t> diffs,
                  GaussianRational coeff);

    FormPoly operator+(const FormPoly& o) const;
    FormPoly operator-(const FormPoly& o) const;
    FormPoly operator*(const GaussianRational& c) const;
    FormPoly wedge(const FormPoly& o) const;
    friend bool operator==(const FormPoly& a, const FormPoly& b) {
        return a.mode_ == b.mode_ && a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    void check_compatible(const FormPoly& o) const;

    VariableMode mode_ = VariableMode::real;
    std::size_t vars_ = 0;
    std::map<TermKey, GaussianRational> terms_;
};

/// Exterior derivative; satisfies d(d(w)) = 0 identically.
FormPoly exterior_d(const FormPoly& w);

/// Dolbeault pieces in complex mode (throws std::invalid_argument on real
/// mode); del + delbar = d.
FormPoly del(const FormPoly& w);
FormPoly delbar(const FormPoly& w);

/// Element of the total bigraded complex, stored canonically as a map from
/// tensor monomial to its polynomial-form coefficient. A pure term
/// alpha (x) s expands over the tensor monomial basis.
class SpencerElement {
public:
    SpencerElement() = default;
    SpencerElement(VariableMode mode, std::size_t vars) : mode_(mode), vars_(vars) {}

    static SpencerElement term(const FormPoly& alpha, const SymTensor& s);

    VariableMode mode() const { return mode_; }
    std::size_t vars() const { return vars_; }
    const std::map<MultisetIndex, FormPoly>& parts() const { return parts_; }
    bool is_zero() const;

    void add_part(const MultisetIndex& idx, const FormPoly& poly);

    SpencerElement operator+(const SpencerElement& o) const;
    SpencerElement operator-(const SpencerElement& o) const;
    friend bool operator==(const SpencerElement& a, const SpencerElement& b);

    /// d (x) identity on the form factor.
    SpencerElement form_d() const;
    SpencerElement form_del() const;
    SpencerElement form_delbar() const;

    /// Tensor-side component: alpha (x) s -> (-1)^{deg alpha} alpha (x) delta(s),
    /// with the sign taken per homogeneous form term (form degree on the
    /// total complex; the paper's diagonal-degree sign has no off-diagonal
    /// reading).
    SpencerElement tensor_delta(const LieAlgebra& alg, const DualFunctional& lambda,
                                LeibnizConvention conv) const;

    /// D(alpha (x) s) = d alpha (x) s + (-1)^{deg alpha} alpha (x) delta(s).
    SpencerElement spencer_D(const LieAlgebra& alg, const DualFunctional& lambda,
                             LeibnizConvention conv) const;

private:
    VariableMode mode_ = VariableMode::real;
    std::size_t vars_ = 0;
    std::map<MultisetIndex, FormPoly> parts_;
};

enum class CheckStatus { confirmed, refuted, skipped };

struct DegenerationCheck {
    CheckStatus status = CheckStatus::confirmed;
    std::string witness;  // offending term or skip reason
};

/// With delta(s) = 0 verified first, confirms D(alpha (x) s) == d alpha (x) s
/// exactly; a violated precondition reports skipped.
DegenerationCheck degeneration_check(const FormPoly& alpha, const SymTensor& s,
                                     const LieAlgebra& alg, const DualFunctional& lambda,
                                     LeibnizConvention conv);

struct DolbeaultCheck {
    bool del_sq = false;
    bool delbar_sq = false;
    bool del_delbar_anticommute = false;
    bool del_delta_anticommute = false;
    bool delbar_delta_anticommute = false;
    bool delta_sq_matches_defect = false;

    bool all_identities() const {
        return del_sq && delbar_sq && del_delbar_anticommute && del_delta_anticommute &&
               delbar_delta_anticommute && delta_sq_matches_defect;
    }
};

/// Verifies, exactly on each sample: del_S^2 = 0, delbar_S^2 = 0,
/// {del_S, delbar_S} = 0, {del_S, delta_g} = 0, {delbar_S, delta_g} = 0,
/// and delta_g^2(alpha (x) s) = alpha (x) delta^2(s) (the tensor-side
/// defect, cross-checked against the composite operator matrix).
DolbeaultCheck dolbeault_split_check(const LieAlgebra& alg, const DualFunctional& lambda,
                                     LeibnizConvention conv,
                                     const std::vector<SpencerElement>& samples);

}  // namespace spencer
