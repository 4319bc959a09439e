#include "spencer/cartan.hpp"

#include <stdexcept>

namespace spencer {

std::string to_string(CartanKernelMode mode) {
    return mode == CartanKernelMode::linearized ? "linearized" : "full";
}

CartanKernelMode cartan_mode_from_string(const std::string& text) {
    if (text == "linearized") return CartanKernelMode::linearized;
    if (text == "full") return CartanKernelMode::full;
    throw std::invalid_argument("mode: expected \"linearized\" or \"full\", got \"" + text + "\"");
}

GaussianRational single_root_coefficient(const LieAlgebra& alg, const DualFunctional& lambda,
                                         const MultisetIndex& monomial,
                                         const std::vector<std::size_t>& tuple, const Root& root,
                                         LeibnizConvention conv) {
    if (!monomial.cartan_supported(alg))
        throw std::invalid_argument("single_root_coefficient: monomial has non-Cartan support");
    const std::size_t k = monomial.degree();
    if (tuple.size() != k)
        throw std::invalid_argument("single_root_coefficient: tuple length != degree");

    GaussianRational lambda_pairing = lambda.pair(root.vector);
    if (lambda_pairing.is_zero()) return GaussianRational();

    // alpha evaluated on each tuple entry; tuple entries are Cartan basis
    // vectors identified by their basis index.
    const auto& cartan = alg.cartan_indices();
    auto alpha_at_basis = [&](std::size_t basis_index) {
        for (std::size_t a = 0; a < cartan.size(); ++a)
            if (cartan[a] == basis_index) return root.alpha[a];
        throw std::invalid_argument("single_root_coefficient: tuple entry is not a Cartan index");
    };

    const auto& factors = monomial.factors();
    GaussianRational total;
    for (std::size_t m = 0; m < k; ++m) {
        std::vector<Vec> partial;
        partial.reserve(k - 1);
        for (std::size_t t = 0; t < k; ++t)
            if (t != m) partial.push_back(alg.basis_vector(tuple[t]));
        // Signed Killing-dual contraction V_m = (1/k) sum_j s_j eval(rest_j, partial) e_{i_j}.
        GaussianRational alpha_v;
        for (std::size_t j = 0; j < k; ++j) {
            GaussianRational rest = evaluate_monomial(alg, monomial.without_factor(j), partial);
            if (rest.is_zero()) continue;
            GaussianRational sign(1);
            if (conv == LeibnizConvention::graded && (j % 2 == 1)) sign = GaussianRational(-1);
            alpha_v += sign * rest * alpha_at_basis(factors[j]);
        }
        alpha_v = alpha_v / GaussianRational(static_cast<long>(k));
        total += alpha_at_basis(tuple[m]) * alpha_v;
    }
    return -(total * lambda_pairing) / GaussianRational(static_cast<long>(k + 1));
}

namespace {

std::vector<std::vector<std::size_t>> cartan_tuples(const LieAlgebra& alg, std::size_t k) {
    // All r^k tuples over the Cartan indices, lexicographic.
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    auto rec = [&](auto&& self) -> void {
        if (current.size() == k) {
            out.push_back(current);
            return;
        }
        for (std::size_t a : alg.cartan_indices()) {
            current.push_back(a);
            self(self);
            current.pop_back();
        }
    };
    rec(rec);
    return out;
}

}  // namespace

ConstraintMatrix constraint_matrix(const LieAlgebra& alg, const DualFunctional& lambda,
                                   std::size_t k, LeibnizConvention conv) {
    if (alg.cartan_indices().empty())
        throw std::invalid_argument("constraint_matrix: algebra \"" + alg.name() +
                                    "\" is missing root data (no Cartan subalgebra declared)");
    // The closed-form rows match the oracle only when kappa(h, g_alpha) = 0;
    // that support property is what makes non-single-root tests vanish.
    if (!alg.validate_cartan_orthogonality())
        throw std::invalid_argument("constraint_matrix: algebra \"" + alg.name() +
                                    "\" violates Cartan/root Killing orthogonality");
    ConstraintMatrix cm;
    cm.algebra = alg.name();
    cm.lambda = lambda;
    cm.degree = k;
    cm.convention = conv;
    cm.col_basis = MultisetIndex::enumerate_over(alg.cartan_indices(), k);
    auto tuples = cartan_tuples(alg, k);
    for (std::size_t r = 0; r < alg.roots().size(); ++r)
        for (const auto& tuple : tuples) cm.row_labels.push_back({r, tuple});
    cm.matrix = ExactMatrix(cm.row_labels.size(), cm.col_basis.size());
    for (std::size_t i = 0; i < cm.row_labels.size(); ++i)
        for (std::size_t j = 0; j < cm.col_basis.size(); ++j)
            cm.matrix(i, j) = single_root_coefficient(alg, lambda, cm.col_basis[j],
                                                      cm.row_labels[i].tuple,
                                                      alg.roots()[cm.row_labels[i].root_index], conv);
    return cm;
}

ExactMatrix CartanKernelResult::coordinate_rows() const {
    std::vector<Vec> rows;
    rows.reserve(basis.size());
    for (const auto& t : basis) rows.push_back(t.coordinates_over(col_basis));
    return ExactMatrix::from_rows(rows, col_basis.size());
}

CartanKernelResult cartan_kernel(const LieAlgebra& alg, const DualFunctional& lambda, std::size_t k,
                                 CartanKernelMode mode, LeibnizConvention conv) {
    CartanKernelResult out;
    out.mode = mode;
    out.degree = k;
    out.col_basis = MultisetIndex::enumerate_over(alg.cartan_indices(), k);

    if (mode == CartanKernelMode::linearized) {
        // An empty root list yields a 0-row system: the kernel is all of Sym^k(h).
        ConstraintMatrix cm = constraint_matrix(alg, lambda, k, conv);
        for (const Vec& v : nullspace(cm.matrix)) {
            SymTensor t(k);
            for (std::size_t j = 0; j < out.col_basis.size(); ++j) t.add_term(out.col_basis[j], v[j]);
            out.basis.push_back(std::move(t));
        }
        return out;
    }

    // Full mode: nullspace of the Spencer operator matrix restricted to
    // Cartan-monomial columns.
    OperatorMatrix op = operator_matrix(alg, lambda, k, conv);
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < op.col_basis.size(); ++j)
        if (op.col_basis[j].cartan_supported(alg)) keep.push_back(j);
    ExactMatrix restricted(op.matrix.rows(), keep.size());
    for (std::size_t i = 0; i < op.matrix.rows(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) restricted(i, j) = op.matrix(i, keep[j]);
    for (const Vec& v : nullspace(restricted)) {
        SymTensor t(k);
        for (std::size_t j = 0; j < keep.size(); ++j) t.add_term(op.col_basis[keep[j]], v[j]);
        out.basis.push_back(std::move(t));
    }
    return out;
}

DimensionBoundCheck dimension_bound_check(const LieAlgebra& alg, const DualFunctional& lambda,
                                          std::size_t k, LeibnizConvention conv) {
    DimensionBoundCheck out;
    std::size_t sym_dim = sym_dimension(alg.cartan_rank(), k);
    out.bound = static_cast<long>(sym_dim) - static_cast<long>(alg.roots().size());
    out.dimension = cartan_kernel(alg, lambda, k, CartanKernelMode::linearized, conv).dimension();
    out.holds = static_cast<long>(out.dimension) <= out.bound;
    return out;
}

}  // namespace spencer
