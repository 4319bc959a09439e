#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spencer/matrix.hpp"
#include "spencer/scalar.hpp"

#include <nlohmann/json_fwd.hpp>

namespace spencer {

/// A root functional alpha on the Cartan subalgebra together with its root
/// vector. `alpha` is aligned with the algebra's cartan_indices order; the
/// root vector is a full coordinate vector (complexified combinations such
/// as E +/- i*F are allowed).
struct Root {
    Vec alpha;
    Vec vector;

    GaussianRational alpha_of(const Vec& cartan_coords) const;
    bool same_alpha(const Root& o) const { return alpha == o.alpha; }
    bool is_negation_of(const Root& o) const;
};

/// Constant element of g*: coords[i] = <lambda, e_i>. Missing/short vectors
/// are zero-extended at load time.
struct DualFunctional {
    Vec coords;

    GaussianRational pair(const Vec& v) const;
    DualFunctional negated() const;
    bool is_zero() const;

    static DualFunctional zero(std::size_t dim) { return {Vec(dim)}; }
};

/// Finite-dimensional Lie algebra given by structure constants, validated
/// exactly at construction: antisymmetry, the Jacobi identity on all basis
/// triples, commuting Cartan generators, and the declared root relations
/// [H, E_a] = a(H) E_a.
class LieAlgebra {
public:
    LieAlgebra(std::string name, std::size_t dim, std::vector<std::string> basis_labels,
               std::map<std::pair<std::size_t, std::size_t>, Vec> brackets,
               std::vector<std::size_t> cartan_indices, std::vector<Root> roots);

    static LieAlgebra from_json(const nlohmann::json& doc);

    /// Named built-ins: "sl2", "su2c", "su2c-rooted".
    static LieAlgebra builtin(const std::string& name);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const std::vector<std::size_t>& cartan_indices() const { return cartan_; }
    std::size_t cartan_rank() const { return cartan_.size(); }
    const std::vector<Root>& roots() const { return roots_; }

    /// Coordinates of [e_i, e_j].
    const Vec& structure(std::size_t i, std::size_t j) const { return c_[i * dim_ + j]; }

    /// Bilinear bracket of coordinate vectors.
    Vec bracket(const Vec& x, const Vec& y) const;

    Vec basis_vector(std::size_t i) const;

    /// kappa(e_i, e_j) = tr(ad e_i . ad e_j), computed from structure
    /// constants and cached.
    const ExactMatrix& killing_form() const { return killing_; }

    GaussianRational killing(const Vec& x, const Vec& y) const;

    /// kappa(e_a, v) = 0 for every Cartan basis vector e_a and every
    /// declared root vector v.
    bool validate_cartan_orthogonality() const;

private:
    void validate() const;
    ExactMatrix compute_killing() const;

    std::string name_;
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<Vec> c_;  // dense dim*dim table of bracket coordinate vectors
    std::vector<std::size_t> cartan_;
    std::vector<Root> roots_;
    ExactMatrix killing_;
};

DualFunctional lambda_from_json(const nlohmann::json& doc, std::size_t dim);

}  // namespace spencer
