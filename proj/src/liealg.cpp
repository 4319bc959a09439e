#include "spencer/liealg.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace spencer {

GaussianRational Root::alpha_of(const Vec& cartan_coords) const {
    if (cartan_coords.size() != alpha.size())
        throw std::invalid_argument("Root: Cartan coordinate length mismatch");
    GaussianRational out;
    for (std::size_t a = 0; a < alpha.size(); ++a) out += alpha[a] * cartan_coords[a];
    return out;
}

bool Root::is_negation_of(const Root& o) const {
    if (alpha.size() != o.alpha.size()) return false;
    for (std::size_t a = 0; a < alpha.size(); ++a)
        if (alpha[a] != -o.alpha[a]) return false;
    return true;
}

GaussianRational DualFunctional::pair(const Vec& v) const {
    if (v.size() != coords.size())
        throw std::invalid_argument("DualFunctional: dimension mismatch");
    GaussianRational out;
    for (std::size_t i = 0; i < v.size(); ++i) out += coords[i] * v[i];
    return out;
}

DualFunctional DualFunctional::negated() const {
    DualFunctional out{coords};
    for (auto& c : out.coords) c = -c;
    return out;
}

bool DualFunctional::is_zero() const {
    for (const auto& c : coords)
        if (!c.is_zero()) return false;
    return true;
}

namespace {

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str();
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, std::size_t dim, std::vector<std::string> basis_labels,
                       std::map<std::pair<std::size_t, std::size_t>, Vec> brackets,
                       std::vector<std::size_t> cartan_indices, std::vector<Root> roots)
    : name_(std::move(name)),
      dim_(dim),
      labels_(std::move(basis_labels)),
      c_(dim * dim, Vec(dim)),
      cartan_(std::move(cartan_indices)),
      roots_(std::move(roots)) {
    if (labels_.empty()) {
        for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i));
    }
    if (labels_.size() != dim_)
        throw std::invalid_argument("liealg: basis label count != dim");
    for (auto& [key, coords] : brackets) {
        auto [i, j] = key;
        if (i >= dim_ || j >= dim_)
            throw std::invalid_argument("liealg: bracket index out of range");
        if (coords.size() != dim_)
            throw std::invalid_argument("liealg: bracket coordinate length != dim");
        c_[i * dim_ + j] = coords;
        // Fill the mirrored pair; an explicitly given (j,i) entry is checked
        // against this in validate().
        if (brackets.find({j, i}) == brackets.end()) {
            Vec neg(dim_);
            for (std::size_t k = 0; k < dim_; ++k) neg[k] = -coords[k];
            c_[j * dim_ + i] = std::move(neg);
        }
    }
    for (auto& [key, coords] : brackets) {
        auto [i, j] = key;
        c_[i * dim_ + j] = coords;
    }
    for (std::size_t a : cartan_)
        if (a >= dim_) throw std::invalid_argument("liealg: cartan index out of range");
    for (const Root& r : roots_) {
        if (r.alpha.size() != cartan_.size())
            throw std::invalid_argument("liealg: root alpha length != cartan rank");
        if (r.vector.size() != dim_)
            throw std::invalid_argument("liealg: root vector length != dim");
    }
    validate();
    killing_ = compute_killing();
}

void LieAlgebra::validate() const {
    // Antisymmetry, including C(i,i) = 0.
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                if (structure(i, j)[k] != -structure(j, i)[k])
                    throw std::invalid_argument("liealg: antisymmetry-violation at basis pair (" +
                                                labels_[i] + ", " + labels_[j] + ")");
    // Jacobi on basis triples.
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = j + 1; k < dim_; ++k) {
                Vec ei = basis_vector(i), ej = basis_vector(j), ek = basis_vector(k);
                Vec residual = bracket(bracket(ei, ej), ek);
                Vec t2 = bracket(bracket(ej, ek), ei);
                Vec t3 = bracket(bracket(ek, ei), ej);
                for (std::size_t m = 0; m < dim_; ++m) residual[m] += t2[m] + t3[m];
                for (std::size_t m = 0; m < dim_; ++m)
                    if (!residual[m].is_zero())
                        throw std::invalid_argument(
                            "liealg: jacobi-violation at triple (" + labels_[i] + ", " + labels_[j] +
                            ", " + labels_[k] + "), residual " + vec_str(residual));
            }
    // Cartan generators commute pairwise.
    for (std::size_t a : cartan_)
        for (std::size_t b : cartan_)
            for (std::size_t m = 0; m < dim_; ++m)
                if (!structure(a, b)[m].is_zero())
                    throw std::invalid_argument("liealg: cartan generators (" + labels_[a] + ", " +
                                                labels_[b] + ") do not commute");
    // Declared roots: [H, E_a] = alpha(H) E_a for every Cartan basis vector.
    for (std::size_t r = 0; r < roots_.size(); ++r) {
        const Root& root = roots_[r];
        for (std::size_t a = 0; a < cartan_.size(); ++a) {
            Vec lhs = bracket(basis_vector(cartan_[a]), root.vector);
            for (std::size_t m = 0; m < dim_; ++m)
                if (lhs[m] != root.alpha[a] * root.vector[m])
                    throw std::invalid_argument("liealg: root-validation-failure for root #" +
                                                std::to_string(r) + " against Cartan generator " +
                                                labels_[cartan_[a]]);
        }
        bool all_zero = true;
        for (const auto& v : root.alpha)
            if (!v.is_zero()) all_zero = false;
        if (all_zero)
            throw std::invalid_argument("liealg: root #" + std::to_string(r) + " has zero alpha");
    }
    // Negation closure of the root set.
    for (std::size_t r = 0; r < roots_.size(); ++r) {
        bool found = false;
        for (std::size_t s = 0; s < roots_.size() && !found; ++s)
            if (roots_[r].is_negation_of(roots_[s])) found = true;
        if (!found)
            throw std::invalid_argument("liealg: root set not closed under negation (root #" +
                                        std::to_string(r) + ")");
    }
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw std::invalid_argument("liealg: bracket operand dimension mismatch");
    Vec out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            GaussianRational coef = x[i] * y[j];
            const Vec& cij = structure(i, j);
            for (std::size_t k = 0; k < dim_; ++k)
                if (!cij[k].is_zero()) out[k] += coef * cij[k];
        }
    }
    return out;
}

Vec LieAlgebra::basis_vector(std::size_t i) const {
    Vec v(dim_);
    v.at(i) = GaussianRational(1);
    return v;
}

ExactMatrix LieAlgebra::compute_killing() const {
    // kappa(e_i, e_j) = sum_{k,l} C(i,k)_l C(j,l)_k
    ExactMatrix k(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            GaussianRational sum;
            for (std::size_t a = 0; a < dim_; ++a)
                for (std::size_t b = 0; b < dim_; ++b)
                    sum += structure(i, a)[b] * structure(j, b)[a];
            k(i, j) = sum;
        }
    return k;
}

GaussianRational LieAlgebra::killing(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw std::invalid_argument("liealg: killing operand dimension mismatch");
    GaussianRational out;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            if (!y[j].is_zero()) out += x[i] * killing_(i, j) * y[j];
    }
    return out;
}

bool LieAlgebra::validate_cartan_orthogonality() const {
    for (std::size_t a : cartan_)
        for (const Root& r : roots_)
            if (!killing(basis_vector(a), r.vector).is_zero()) return false;
    return true;
}

namespace {

Vec parse_coords(const nlohmann::json& arr, std::size_t dim, const std::string& field) {
    if (!arr.is_array())
        throw std::invalid_argument("algebra-spec: field \"" + field + "\" must be an array");
    if (arr.size() != dim)
        throw std::invalid_argument("algebra-spec: field \"" + field + "\" has length " +
                                    std::to_string(arr.size()) + ", expected " + std::to_string(dim));
    Vec out;
    out.reserve(dim);
    for (const auto& v : arr) out.push_back(GaussianRational::parse(v.get<std::string>()));
    return out;
}

}  // namespace

LieAlgebra LieAlgebra::from_json(const nlohmann::json& doc) {
    for (const char* field : {"name", "dim", "basis", "brackets"})
        if (!doc.contains(field))
            throw std::invalid_argument("algebra-spec: missing field \"" + std::string(field) + "\"");
    std::string name = doc["name"].get<std::string>();
    std::size_t dim = doc["dim"].get<std::size_t>();
    std::vector<std::string> labels = doc["basis"].get<std::vector<std::string>>();

    std::map<std::pair<std::size_t, std::size_t>, Vec> brackets;
    for (const auto& entry : doc["brackets"]) {
        for (const char* field : {"i", "j", "coords"})
            if (!entry.contains(field))
                throw std::invalid_argument("algebra-spec: bracket entry missing field \"" +
                                            std::string(field) + "\"");
        std::size_t i = entry["i"].get<std::size_t>();
        std::size_t j = entry["j"].get<std::size_t>();
        if (i >= j)
            throw std::invalid_argument("algebra-spec: bracket entries must have i < j (got i=" +
                                        std::to_string(i) + ", j=" + std::to_string(j) + ")");
        brackets[{i, j}] = parse_coords(entry["coords"], dim, "coords");
    }

    std::vector<std::size_t> cartan;
    if (doc.contains("cartan")) cartan = doc["cartan"].get<std::vector<std::size_t>>();

    std::vector<Root> roots;
    if (doc.contains("roots")) {
        for (const auto& entry : doc["roots"]) {
            for (const char* field : {"alpha", "vector"})
                if (!entry.contains(field))
                    throw std::invalid_argument("algebra-spec: root entry missing field \"" +
                                                std::string(field) + "\"");
            Root r;
            r.alpha = parse_coords(entry["alpha"], cartan.size(), "alpha");
            r.vector = parse_coords(entry["vector"], dim, "vector");
            roots.push_back(std::move(r));
        }
    }
    return LieAlgebra(std::move(name), dim, std::move(labels), std::move(brackets),
                      std::move(cartan), std::move(roots));
}

LieAlgebra LieAlgebra::builtin(const std::string& name) {
    const GaussianRational i = GaussianRational::i();
    if (name == "sl2") {
        // [H,E] = 2E, [H,F] = -2F, [E,F] = H; roots +/-2 with vectors E, F.
        std::map<std::pair<std::size_t, std::size_t>, Vec> br;
        br[{0, 1}] = Vec{0, 2, 0};
        br[{0, 2}] = Vec{0, 0, -2};
        br[{1, 2}] = Vec{1, 0, 0};
        std::vector<Root> roots;
        roots.push_back(Root{Vec{2}, Vec{0, 1, 0}});
        roots.push_back(Root{Vec{-2}, Vec{0, 0, 1}});
        return LieAlgebra("sl2", 3, {"H", "E", "F"}, std::move(br), {0}, std::move(roots));
    }
    if (name == "su2c" || name == "su2c-rooted") {
        // [H,E] = iF, [H,F] = -iE, [E,F] = iH.
        std::map<std::pair<std::size_t, std::size_t>, Vec> br;
        br[{0, 1}] = Vec{GaussianRational(0), GaussianRational(0), i};
        br[{0, 2}] = Vec{GaussianRational(0), -i, GaussianRational(0)};
        br[{1, 2}] = Vec{i, GaussianRational(0), GaussianRational(0)};
        std::vector<Root> roots;
        if (name == "su2c-rooted") {
            // Complexified root pair: [H, E + iF] = +(E + iF), [H, E - iF] = -(E - iF).
            roots.push_back(Root{{GaussianRational(1)}, {GaussianRational(0), GaussianRational(1), i}});
            roots.push_back(Root{{GaussianRational(-1)}, {GaussianRational(0), GaussianRational(1), -i}});
        }
        return LieAlgebra(name, 3, {"H", "E", "F"}, std::move(br), {0}, std::move(roots));
    }
    throw std::invalid_argument("liealg: unknown builtin algebra \"" + name + "\"");
}

DualFunctional lambda_from_json(const nlohmann::json& doc, std::size_t dim) {
    if (!doc.contains("coords"))
        throw std::invalid_argument("lambda-spec: missing field \"coords\"");
    const auto& arr = doc["coords"];
    if (!arr.is_array()) throw std::invalid_argument("lambda-spec: field \"coords\" must be an array");
    if (arr.size() > dim)
        throw std::invalid_argument("lambda-spec: field \"coords\" longer than algebra dimension");
    DualFunctional lam = DualFunctional::zero(dim);
    for (std::size_t k = 0; k < arr.size(); ++k)
        lam.coords[k] = GaussianRational::parse(arr[k].get<std::string>());
    return lam;
}

}  // namespace spencer
