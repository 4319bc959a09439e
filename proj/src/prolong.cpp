#include "spencer/prolong.hpp"

#include <stdexcept>

namespace spencer {

std::string to_string(LeibnizConvention conv) {
    return conv == LeibnizConvention::graded ? "graded" : "ungraded";
}

LeibnizConvention convention_from_string(const std::string& text) {
    if (text == "graded") return LeibnizConvention::graded;
    if (text == "ungraded") return LeibnizConvention::ungraded;
    throw std::invalid_argument("convention: expected \"graded\" or \"ungraded\", got \"" + text +
                                "\"");
}

GaussianRational generator_action_eval(const LieAlgebra& alg, const DualFunctional& lambda,
                                       const Vec& v, const Vec& w1, const Vec& w2) {
    GaussianRational a = lambda.pair(alg.bracket(w1, alg.bracket(w2, v)));
    GaussianRational b = lambda.pair(alg.bracket(w2, alg.bracket(w1, v)));
    return (a + b) / GaussianRational(2);
}

SymTensor generator_action(const LieAlgebra& alg, const DualFunctional& lambda, const Vec& v) {
    const std::size_t n = alg.dim();
    auto pairs = MultisetIndex::enumerate(n, 2);
    const std::size_t d = pairs.size();
    // Gram system: row p = evaluations of all degree-2 monomials on the
    // basis pair p; right-hand side = defining formula on that pair.
    ExactMatrix aug(d, d + 1);
    for (std::size_t p = 0; p < d; ++p) {
        std::vector<Vec> tuple{alg.basis_vector(pairs[p].factors()[0]),
                               alg.basis_vector(pairs[p].factors()[1])};
        for (std::size_t m = 0; m < d; ++m) aug(p, m) = evaluate_monomial(alg, pairs[m], tuple);
        aug(p, d) = generator_action_eval(alg, lambda, v, tuple[0], tuple[1]);
    }
    RrefResult r = rref(aug);
    // Unique solution requires full column rank on the Gram block.
    for (std::size_t p = 0; p < r.rank; ++p)
        if (r.pivot_cols[p] != p)
            throw std::domain_error("generator_action: unsupported algebra (singular Gram system)");
    if (r.rank < d)
        throw std::domain_error("generator_action: unsupported algebra (singular Gram system)");
    SymTensor out(2);
    for (std::size_t m = 0; m < d; ++m) out.add_term(pairs[m], r.reduced(m, d));
    return out;
}

namespace {

/// delta(monomial) evaluated on `tuple` by direct recursion. `factors` is
/// the canonical factor list of the monomial.
GaussianRational oracle_monomial(const LieAlgebra& alg, const DualFunctional& lambda,
                                 const MultisetIndex& idx, const std::vector<Vec>& tuple,
                                 LeibnizConvention conv) {
    const std::size_t k = idx.degree();
    const std::size_t n_args = tuple.size();
    if (k == 1)
        return generator_action_eval(alg, lambda, alg.basis_vector(idx.factors()[0]), tuple[0],
                                     tuple[1]);
    // Peel the first factor g: delta(m) = delta(g) (.) rest + sign * g (.) delta(rest).
    const Vec g = alg.basis_vector(idx.factors()[0]);
    const MultisetIndex rest = idx.without_factor(0);

    // (A (.) B)(W) = 1/C(N,a) * sum over a-subsets S of A(S) B(W \ S),
    // for symmetric forms A (degree a) and B.
    GaussianRational term1;  // delta(g) in the first two slots
    for (std::size_t p = 0; p < n_args; ++p)
        for (std::size_t q = p + 1; q < n_args; ++q) {
            GaussianRational a = generator_action_eval(alg, lambda, g, tuple[p], tuple[q]);
            if (a.is_zero()) continue;
            std::vector<Vec> remaining;
            remaining.reserve(n_args - 2);
            for (std::size_t t = 0; t < n_args; ++t)
                if (t != p && t != q) remaining.push_back(tuple[t]);
            term1 += a * evaluate_monomial(alg, rest, remaining);
        }
    term1 = term1 / GaussianRational(static_cast<long>(n_args * (n_args - 1) / 2));

    GaussianRational term2;  // g paired with one slot, delta(rest) on the rest
    for (std::size_t p = 0; p < n_args; ++p) {
        GaussianRational a = alg.killing(g, tuple[p]);
        if (a.is_zero()) continue;
        std::vector<Vec> remaining;
        remaining.reserve(n_args - 1);
        for (std::size_t t = 0; t < n_args; ++t)
            if (t != p) remaining.push_back(tuple[t]);
        term2 += a * oracle_monomial(alg, lambda, rest, remaining, conv);
    }
    term2 = term2 / GaussianRational(static_cast<long>(n_args));

    if (conv == LeibnizConvention::graded) return term1 - term2;
    return term1 + term2;
}

}  // namespace

GaussianRational oracle_eval(const LieAlgebra& alg, const DualFunctional& lambda, const SymTensor& s,
                             const std::vector<Vec>& tuple, LeibnizConvention conv) {
    if (tuple.size() != s.degree() + 1)
        throw std::invalid_argument("oracle_eval: arity mismatch (need degree+1 vectors)");
    if (s.degree() == 0)
        throw std::invalid_argument("oracle_eval: degree-0 input");
    GaussianRational out;
    for (const auto& [idx, c] : s.coeffs())
        out += c * oracle_monomial(alg, lambda, idx, tuple, conv);
    return out;
}

namespace {

/// Leibniz expansion of delta over the coordinate path, with the degree-2
/// generator images supplied once (they are the expensive Gram solves).
SymTensor delta_with_generators(const std::vector<SymTensor>& gen, const SymTensor& s,
                                LeibnizConvention conv) {
    SymTensor out(s.degree() + 1);
    for (const auto& [idx, c] : s.coeffs()) {
        const auto& factors = idx.factors();
        for (std::size_t j = 0; j < factors.size(); ++j) {
            GaussianRational coeff = c;
            if (conv == LeibnizConvention::graded && (j % 2 == 1)) coeff = -coeff;
            if (factors.size() == 1) {
                out.add_scaled(gen[factors[j]], coeff);
            } else {
                MultisetIndex rest = idx.without_factor(j);
                for (const auto& [gidx, gc] : gen[factors[j]].coeffs())
                    out.add_term(gidx.merged(rest), gc * coeff);
            }
        }
    }
    return out;
}

std::vector<SymTensor> generator_images(const LieAlgebra& alg, const DualFunctional& lambda) {
    std::vector<SymTensor> gen;
    gen.reserve(alg.dim());
    for (std::size_t g = 0; g < alg.dim(); ++g)
        gen.push_back(generator_action(alg, lambda, alg.basis_vector(g)));
    return gen;
}

}  // namespace

SymTensor delta_tensor(const LieAlgebra& alg, const DualFunctional& lambda, const SymTensor& s,
                       LeibnizConvention conv) {
    if (s.degree() == 0) throw std::invalid_argument("delta_tensor: degree-0 input");
    return delta_with_generators(generator_images(alg, lambda), s, conv);
}

OperatorMatrix operator_matrix(const LieAlgebra& alg, const DualFunctional& lambda, std::size_t k,
                               LeibnizConvention conv) {
    if (k < 1) throw std::invalid_argument("operator_matrix: degree must be >= 1");
    OperatorMatrix op;
    op.algebra = alg.name();
    op.lambda = lambda;
    op.degree_from = k;
    op.convention = conv;
    op.col_basis = MultisetIndex::enumerate(alg.dim(), k);
    op.row_basis = MultisetIndex::enumerate(alg.dim(), k + 1);
    op.matrix = ExactMatrix(op.row_basis.size(), op.col_basis.size());
    std::vector<SymTensor> gen = generator_images(alg, lambda);
    for (std::size_t j = 0; j < op.col_basis.size(); ++j) {
        SymTensor image = delta_with_generators(gen, SymTensor::monomial(op.col_basis[j]), conv);
        Vec coords = image.coordinates(alg.dim());
        for (std::size_t i = 0; i < op.row_basis.size(); ++i) op.matrix(i, j) = coords[i];
    }
    return op;
}

NilpotencyDefect nilpotency_defect(const LieAlgebra& alg, const DualFunctional& lambda,
                                   std::size_t k, LeibnizConvention conv) {
    ExactMatrix composite = operator_matrix(alg, lambda, k + 1, conv).matrix *
                            operator_matrix(alg, lambda, k, conv).matrix;
    NilpotencyDefect out;
    for (std::size_t i = 0; i < composite.rows(); ++i)
        for (std::size_t j = 0; j < composite.cols(); ++j)
            if (!composite(i, j).is_zero()) {
                out.is_zero = false;
                out.nonzero_entries.emplace_back(i, j, composite(i, j));
            }
    return out;
}

ExactMatrix KernelBasis::coordinate_rows(std::size_t n) const {
    std::vector<Vec> rows;
    rows.reserve(basis.size());
    for (const auto& t : basis) rows.push_back(t.coordinates(n));
    return ExactMatrix::from_rows(rows, sym_dimension(n, degree));
}

std::vector<std::vector<Vec>> basis_tuples(const LieAlgebra& alg, std::size_t k) {
    std::vector<std::vector<Vec>> out;
    for (const auto& idx : MultisetIndex::enumerate(alg.dim(), k)) {
        std::vector<Vec> tuple;
        tuple.reserve(k);
        for (std::size_t f : idx.factors()) tuple.push_back(alg.basis_vector(f));
        out.push_back(std::move(tuple));
    }
    return out;
}

KernelBasis spencer_kernel(const LieAlgebra& alg, const DualFunctional& lambda, std::size_t k,
                           LeibnizConvention conv) {
    OperatorMatrix op = operator_matrix(alg, lambda, k, conv);
    KernelBasis kernel;
    kernel.degree = k;
    auto tuples = basis_tuples(alg, k + 1);
    for (const Vec& v : nullspace(op.matrix)) {
        SymTensor t = SymTensor::from_coordinates(alg.dim(), k, v);
        for (const auto& tuple : tuples)
            if (!oracle_eval(alg, lambda, t, tuple, conv).is_zero())
                throw std::logic_error("spencer_kernel: oracle re-verification failed");
        kernel.basis.push_back(std::move(t));
    }
    return kernel;
}

bool mirror_antisymmetry_check(const LieAlgebra& alg, const DualFunctional& lambda, std::size_t k,
                               LeibnizConvention conv) {
    ExactMatrix plus = operator_matrix(alg, lambda, k, conv).matrix;
    ExactMatrix minus = operator_matrix(alg, lambda.negated(), k, conv).matrix;
    return (plus + minus).is_zero();
}

bool kernel_mirror_stability(const LieAlgebra& alg, const DualFunctional& lambda, std::size_t k,
                             LeibnizConvention conv) {
    KernelBasis a = spencer_kernel(alg, lambda, k, conv);
    KernelBasis b = spencer_kernel(alg, lambda.negated(), k, conv);
    if (a.dimension() != b.dimension()) return false;
    if (a.dimension() == 0) return true;
    ExactMatrix rows_a = a.coordinate_rows(alg.dim());
    ExactMatrix rows_b = b.coordinate_rows(alg.dim());
    return rank(rows_a.stacked(rows_b)) == a.dimension();
}

}  // namespace spencer
