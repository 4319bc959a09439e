#pragma once

#include <string>
#include <vector>

#include "spencer/liealg.hpp"
#include "spencer/matrix.hpp"
#include "spencer/symtensor.hpp"

namespace spencer {

/// Sign convention for extending the generator action to higher tensor
/// degrees. The graded rule is
///   delta(s1 (.) s2) = delta(s1) (.) s2 + (-1)^{deg s1} s1 (.) delta(s2)
/// and the ungraded rule omits the sign. Monomials expand by peeling
/// factors in canonical (ascending-index) order, so on a monomial
/// g_1 (.) ... (.) g_k the graded rule gives alternating signs
/// (-1)^{j-1} on the j-th factor while the ungraded rule is the plain
/// derivation. Nothing in the workbench hard-codes one convention.
enum class LeibnizConvention { graded, ungraded };

std::string to_string(LeibnizConvention conv);
LeibnizConvention convention_from_string(const std::string& text);

/// Defining bilinear action on a generator v:
///   (delta(v))(w1, w2) = 1/2 (<lambda,[w1,[w2,v]]> + <lambda,[w2,[w1,v]]>)
GaussianRational generator_action_eval(const LieAlgebra& alg, const DualFunctional& lambda,
                                       const Vec& v, const Vec& w1, const Vec& w2);

/// Degree-2 tensor whose evaluation reproduces generator_action_eval on
/// every pair. Coordinates are recovered by solving the evaluation Gram
/// system on basis pairs; a singular Gram system (degenerate Killing
/// restriction) throws std::domain_error ("unsupported algebra").
SymTensor generator_action(const LieAlgebra& alg, const DualFunctional& lambda, const Vec& v);

/// Independent brute-force oracle: evaluates delta(s) on a (deg+1)-tuple by
/// literal recursion through the convention's Leibniz rule and the defining
/// generator formula. Shares no code with the matrix assembly path.
GaussianRational oracle_eval(const LieAlgebra& alg, const DualFunctional& lambda, const SymTensor& s,
                             const std::vector<Vec>& tuple, LeibnizConvention conv);

/// Coordinate-path image delta(s), via generator_action and symmetric
/// products (the path the operator matrix encodes).
SymTensor delta_tensor(const LieAlgebra& alg, const DualFunctional& lambda, const SymTensor& s,
                       LeibnizConvention conv);

/// Exact matrix of delta: Sym^k -> Sym^{k+1} between canonical monomial
/// bases; column j is the coordinate vector of delta applied to the j-th
/// degree-k monomial.
struct OperatorMatrix {
    std::string algebra;
    DualFunctional lambda;
    std::size_t degree_from = 0;
    LeibnizConvention convention = LeibnizConvention::ungraded;
    ExactMatrix matrix;
    std::vector<MultisetIndex> row_basis;
    std::vector<MultisetIndex> col_basis;
};

OperatorMatrix operator_matrix(const LieAlgebra& alg, const DualFunctional& lambda, std::size_t k,
                               LeibnizConvention conv);

struct NilpotencyDefect {
    bool is_zero = true;
    /// Nonzero entries of matrix(k+1) * matrix(k), as refutation witnesses.
    std::vector<std::tuple<std::size_t, std::size_t, GaussianRational>> nonzero_entries;
};

NilpotencyDefect nilpotency_defect(const LieAlgebra& alg, const DualFunctional& lambda,
                                   std::size_t k, LeibnizConvention conv);

/// Canonical kernel basis of delta in degree k (RREF nullspace order).
/// Every element is re-verified against the oracle on all basis tuples.
struct KernelBasis {
    std::size_t degree = 0;
    std::vector<SymTensor> basis;

    std::size_t dimension() const { return basis.size(); }
    /// Basis coordinate vectors as matrix rows (for subspace comparisons).
    ExactMatrix coordinate_rows(std::size_t n) const;
};

KernelBasis spencer_kernel(const LieAlgebra& alg, const DualFunctional& lambda, std::size_t k,
                           LeibnizConvention conv);

/// matrix(-lambda) + matrix(lambda) == 0, exactly.
bool mirror_antisymmetry_check(const LieAlgebra& alg, const DualFunctional& lambda, std::size_t k,
                               LeibnizConvention conv);

/// ker(lambda) and ker(-lambda) span the same subspace.
bool kernel_mirror_stability(const LieAlgebra& alg, const DualFunctional& lambda, std::size_t k,
                             LeibnizConvention conv);

/// All degree-k basis tuples (as coordinate-vector tuples) in canonical
/// multiset order; the re-verification and test sweep domain.
std::vector<std::vector<Vec>> basis_tuples(const LieAlgebra& alg, std::size_t k);

}  // namespace spencer
