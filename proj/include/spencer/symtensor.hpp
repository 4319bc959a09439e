#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "spencer/liealg.hpp"
#include "spencer/scalar.hpp"

#include <nlohmann/json_fwd.hpp>

namespace spencer {

/// Degree-k multiset of basis indices, the key type for monomials of
/// Sym^k(g*). Canonical form keeps indices ascending; ordering is the
/// lexicographic order on the expanded index sequence, which fixes the
/// monomial basis order used by every matrix in the workbench.
class MultisetIndex {
public:
    MultisetIndex() = default;
    explicit MultisetIndex(std::vector<std::size_t> indices);

    std::size_t degree() const { return factors_.size(); }
    const std::vector<std::size_t>& factors() const { return factors_; }

    /// counts as (basis index, multiplicity) pairs, ascending.
    std::vector<std::pair<std::size_t, std::size_t>> counts() const;

    MultisetIndex merged(const MultisetIndex& o) const;
    /// Multiset with the j-th factor (in canonical order) removed.
    MultisetIndex without_factor(std::size_t j) const;

    bool cartan_supported(const LieAlgebra& alg) const;

    friend bool operator<(const MultisetIndex& a, const MultisetIndex& b) {
        return a.factors_ < b.factors_;
    }
    friend bool operator==(const MultisetIndex& a, const MultisetIndex& b) {
        return a.factors_ == b.factors_;
    }

    std::string str(const LieAlgebra& alg) const;

    /// All degree-k multisets over {0..n-1} in canonical order; the result
    /// has C(n+k-1, k) entries.
    static std::vector<MultisetIndex> enumerate(std::size_t n, std::size_t k);
    /// As above but restricted to the given index set (e.g. Cartan indices).
    static std::vector<MultisetIndex> enumerate_over(const std::vector<std::size_t>& allowed,
                                                     std::size_t k);

private:
    std::vector<std::size_t> factors_;  // ascending
};

/// dim Sym^k of an n-dimensional space: C(n+k-1, k).
std::size_t sym_dimension(std::size_t n, std::size_t k);

/// Element of Sym^k(g*): symmetric k-linear form on g, stored as monomial
/// coefficients without multinomial weights (all combinatorial factors live
/// in evaluate). Zero coefficients are never stored.
class SymTensor {
public:
    SymTensor() = default;
    explicit SymTensor(std::size_t degree) : degree_(degree) {}

    static SymTensor monomial(MultisetIndex idx, GaussianRational coeff = GaussianRational(1));

    std::size_t degree() const { return degree_; }
    const std::map<MultisetIndex, GaussianRational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    GaussianRational coeff(const MultisetIndex& idx) const;
    void add_term(const MultisetIndex& idx, const GaussianRational& c);
    /// In-place *this += o * scale, without intermediate copies.
    void add_scaled(const SymTensor& o, const GaussianRational& scale);

    SymTensor operator+(const SymTensor& o) const;
    SymTensor operator-(const SymTensor& o) const;
    SymTensor operator*(const GaussianRational& c) const;
    SymTensor operator-() const { return *this * GaussianRational(-1); }
    friend bool operator==(const SymTensor& a, const SymTensor& b) {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

    bool cartan_supported(const LieAlgebra& alg) const;

    /// Coefficient vector over MultisetIndex::enumerate(n, degree).
    Vec coordinates(std::size_t n) const;
    static SymTensor from_coordinates(std::size_t n, std::size_t degree, const Vec& coords);
    /// Coefficient vector over an explicit monomial basis (e.g. Cartan-only).
    Vec coordinates_over(const std::vector<MultisetIndex>& basis) const;

    nlohmann::ordered_json to_json() const;
    static SymTensor from_json(const nlohmann::json& doc);

    std::string str(const LieAlgebra& alg) const;

private:
    std::size_t degree_ = 0;
    std::map<MultisetIndex, GaussianRational> coeffs_;
};

/// Symmetric product; on monomials it merges multisets.
SymTensor sym_product(const SymTensor& a, const SymTensor& b);

/// Evaluates s on a tuple of coordinate vectors. For a monomial
/// a_1 (.) ... (.) a_k the value is (1/k!) sum over permutations pi of
/// prod_j kappa(a_{pi(j)}, w_j), extended linearly; degree-1 evaluation is
/// exactly the Killing pairing. Throws on arity mismatch.
GaussianRational evaluate(const LieAlgebra& alg, const SymTensor& s, const std::vector<Vec>& tuple);

/// Monomial-only fast path of evaluate.
GaussianRational evaluate_monomial(const LieAlgebra& alg, const MultisetIndex& idx,
                                   const std::vector<Vec>& tuple);

/// g -> Sym^1(g*) via the Killing pairing: evaluate(embed_vector(v), (w))
/// equals kappa(v, w). With the evaluation convention above this is the
/// identity on coordinates.
SymTensor embed_vector(const LieAlgebra& alg, const Vec& v);

/// Vector V with kappa(V, w) = evaluate(s, (w, partial...)) for all w: the
/// Killing-dual of the one-slot-open partial evaluation. Requires s to be a
/// sum of monomials (any tensor qualifies); computed without inverting
/// kappa.
Vec contract_vector(const LieAlgebra& alg, const SymTensor& s, const std::vector<Vec>& partial);

}  // namespace spencer
