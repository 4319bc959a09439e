#pragma once

#include <string>
#include <vector>

#include "spencer/liealg.hpp"
#include "spencer/matrix.hpp"
#include "spencer/prolong.hpp"
#include "spencer/symtensor.hpp"

namespace spencer {

/// Row label of the constraint matrix: one single-root test per
/// (root, Cartan k-tuple) combination.
struct ConstraintRowLabel {
    std::size_t root_index = 0;
    std::vector<std::size_t> tuple;  // Cartan basis indices, length k
};

/// The linear system M_{Phi,k} s = 0 cutting out the linearized
/// Cartan-restricted kernel. Rows are calibrated against the oracle: the
/// entry for column monomial m and row (alpha, J) equals the oracle's
/// evaluation of delta(m) on the test tuple (H_{J_1}, ..., H_{J_k}, E_alpha)
/// under the same convention. Columns run over Cartan-supported monomials.
struct ConstraintMatrix {
    std::string algebra;
    DualFunctional lambda;
    std::size_t degree = 0;
    LeibnizConvention convention = LeibnizConvention::ungraded;
    std::vector<ConstraintRowLabel> row_labels;
    std::vector<MultisetIndex> col_basis;
    ExactMatrix matrix;
};

/// Single constraint-row entry via the closed form
///   -1/(k+1) * <lambda, E_alpha> * sum_m alpha(H_{J_m}) alpha(V_m)
/// where V_m is the signed Killing-dual contraction of the monomial against
/// the tuple with slot m omitted (signs per convention; the ungraded case
/// is the paper's sign-free expansion). Equals the oracle evaluation of
/// delta(monomial) on (H_J, E_alpha) exactly. Throws on non-Cartan support.
GaussianRational single_root_coefficient(const LieAlgebra& alg, const DualFunctional& lambda,
                                         const MultisetIndex& monomial,
                                         const std::vector<std::size_t>& tuple, const Root& root,
                                         LeibnizConvention conv = LeibnizConvention::ungraded);

/// Assembles all (root, tuple) rows in canonical order: roots in declaration
/// order, tuples in lexicographic order over Cartan positions. An empty root
/// list gives a 0-row system (kernel = all of Sym^k(h)); a missing Cartan
/// declaration or broken Cartan/root orthogonality throws.
ConstraintMatrix constraint_matrix(const LieAlgebra& alg, const DualFunctional& lambda,
                                   std::size_t k,
                                   LeibnizConvention conv = LeibnizConvention::ungraded);

enum class CartanKernelMode { linearized, full };

std::string to_string(CartanKernelMode mode);
CartanKernelMode cartan_mode_from_string(const std::string& text);

/// Kernel inside Sym^k(h). Linearized mode solves the single-root system;
/// full mode restricts the Spencer operator matrix to Cartan-supported
/// columns and takes its nullspace (so images may have any support).
struct CartanKernelResult {
    CartanKernelMode mode = CartanKernelMode::linearized;
    std::size_t degree = 0;
    std::vector<SymTensor> basis;  // canonical RREF-nullspace order
    std::vector<MultisetIndex> col_basis;

    std::size_t dimension() const { return basis.size(); }
    ExactMatrix coordinate_rows() const;
};

CartanKernelResult cartan_kernel(const LieAlgebra& alg, const DualFunctional& lambda, std::size_t k,
                                 CartanKernelMode mode, LeibnizConvention conv);

/// Verdict of the bound dim K <= C(r+k-1,k) - |Phi| against the computed
/// linearized dimension.
struct DimensionBoundCheck {
    long bound = 0;           // C(r+k-1,k) - |Phi|, may be negative
    std::size_t dimension = 0;  // computed linearized kernel dimension
    bool holds = false;
};

DimensionBoundCheck dimension_bound_check(const LieAlgebra& alg, const DualFunctional& lambda,
                                          std::size_t k,
                                          LeibnizConvention conv = LeibnizConvention::ungraded);

}  // namespace spencer
