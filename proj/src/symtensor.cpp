#include "spencer/symtensor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace spencer {

MultisetIndex::MultisetIndex(std::vector<std::size_t> indices) : factors_(std::move(indices)) {
    std::sort(factors_.begin(), factors_.end());
}

std::vector<std::pair<std::size_t, std::size_t>> MultisetIndex::counts() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t f : factors_) {
        if (!out.empty() && out.back().first == f)
            ++out.back().second;
        else
            out.emplace_back(f, 1);
    }
    return out;
}

MultisetIndex MultisetIndex::merged(const MultisetIndex& o) const {
    std::vector<std::size_t> all = factors_;
    all.insert(all.end(), o.factors_.begin(), o.factors_.end());
    return MultisetIndex(std::move(all));
}

MultisetIndex MultisetIndex::without_factor(std::size_t j) const {
    if (j >= factors_.size()) throw std::out_of_range("MultisetIndex: factor index");
    std::vector<std::size_t> rest = factors_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
    return MultisetIndex(std::move(rest));
}

bool MultisetIndex::cartan_supported(const LieAlgebra& alg) const {
    const auto& cartan = alg.cartan_indices();
    for (std::size_t f : factors_)
        if (std::find(cartan.begin(), cartan.end(), f) == cartan.end()) return false;
    return true;
}

std::string MultisetIndex::str(const LieAlgebra& alg) const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto [idx, mult] : counts()) {
        if (!first) os << "*";
        first = false;
        os << alg.basis_labels()[idx];
        if (mult > 1) os << "^" << mult;
    }
    return os.str();
}

std::vector<MultisetIndex> MultisetIndex::enumerate(std::size_t n, std::size_t k) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return enumerate_over(all, k);
}

std::vector<MultisetIndex> MultisetIndex::enumerate_over(const std::vector<std::size_t>& allowed,
                                                         std::size_t k) {
    std::vector<std::size_t> sorted = allowed;
    std::sort(sorted.begin(), sorted.end());
    std::vector<MultisetIndex> out;
    std::vector<std::size_t> current;
    // Non-decreasing sequences over `sorted`, lexicographic.
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (current.size() == k) {
            out.push_back(MultisetIndex(current));
            return;
        }
        for (std::size_t p = from; p < sorted.size(); ++p) {
            current.push_back(sorted[p]);
            self(self, p);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::size_t sym_dimension(std::size_t n, std::size_t k) {
    if (n == 0) return k == 0 ? 1 : 0;
    // C(n+k-1, k) in size_t; desk scale keeps this small.
    std::size_t num = 1, den = 1;
    for (std::size_t j = 1; j <= k; ++j) {
        num *= n + k - j;
        den *= j;
    }
    return num / den;
}

SymTensor SymTensor::monomial(MultisetIndex idx, GaussianRational coeff) {
    SymTensor t(idx.degree());
    t.add_term(idx, coeff);
    return t;
}

GaussianRational SymTensor::coeff(const MultisetIndex& idx) const {
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? GaussianRational() : it->second;
}

void SymTensor::add_term(const MultisetIndex& idx, const GaussianRational& c) {
    if (idx.degree() != degree_)
        throw std::invalid_argument("SymTensor: term degree mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

SymTensor SymTensor::operator+(const SymTensor& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("SymTensor: degree mismatch in sum");
    SymTensor out = *this;
    for (const auto& [idx, c] : o.coeffs_) out.add_term(idx, c);
    return out;
}

void SymTensor::add_scaled(const SymTensor& o, const GaussianRational& scale) {
    if (degree_ != o.degree_) throw std::invalid_argument("SymTensor: degree mismatch in sum");
    if (scale.is_zero()) return;
    for (const auto& [idx, c] : o.coeffs_) add_term(idx, c * scale);
}

SymTensor SymTensor::operator-(const SymTensor& o) const {
    return *this + o * GaussianRational(-1);
}

SymTensor SymTensor::operator*(const GaussianRational& c) const {
    SymTensor out(degree_);
    if (c.is_zero()) return out;
    for (const auto& [idx, v] : coeffs_) out.coeffs_[idx] = v * c;
    return out;
}

bool SymTensor::cartan_supported(const LieAlgebra& alg) const {
    for (const auto& [idx, c] : coeffs_)
        if (!idx.cartan_supported(alg)) return false;
    return true;
}

Vec SymTensor::coordinates(std::size_t n) const {
    return coordinates_over(MultisetIndex::enumerate(n, degree_));
}

Vec SymTensor::coordinates_over(const std::vector<MultisetIndex>& basis) const {
    Vec out(basis.size());
    std::size_t placed = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto it = coeffs_.find(basis[i]);
        if (it != coeffs_.end()) {
            out[i] = it->second;
            ++placed;
        }
    }
    if (placed != coeffs_.size())
        throw std::invalid_argument("SymTensor: tensor not supported on the given basis");
    return out;
}

SymTensor SymTensor::from_coordinates(std::size_t n, std::size_t degree, const Vec& coords) {
    auto basis = MultisetIndex::enumerate(n, degree);
    if (coords.size() != basis.size())
        throw std::invalid_argument("SymTensor: coordinate length mismatch");
    SymTensor t(degree);
    for (std::size_t i = 0; i < basis.size(); ++i) t.add_term(basis[i], coords[i]);
    return t;
}

nlohmann::ordered_json SymTensor::to_json() const {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [idx, c] : coeffs_) {
        nlohmann::ordered_json index = nlohmann::ordered_json::array();
        for (auto [i, m] : idx.counts()) index.push_back({i, m});
        terms.push_back({{"index", index}, {"coeff", c.str()}});
    }
    return {{"degree", degree_}, {"terms", terms}};
}

SymTensor SymTensor::from_json(const nlohmann::json& doc) {
    for (const char* field : {"degree", "terms"})
        if (!doc.contains(field))
            throw std::invalid_argument("symtensor: missing field \"" + std::string(field) + "\"");
    SymTensor t(doc["degree"].get<std::size_t>());
    for (const auto& term : doc["terms"]) {
        std::vector<std::size_t> factors;
        for (const auto& pair : term.at("index")) {
            std::size_t idx = pair.at(0).get<std::size_t>();
            std::size_t mult = pair.at(1).get<std::size_t>();
            for (std::size_t r = 0; r < mult; ++r) factors.push_back(idx);
        }
        t.add_term(MultisetIndex(std::move(factors)),
                   GaussianRational::parse(term.at("coeff").get<std::string>()));
    }
    return t;
}

std::string SymTensor::str(const LieAlgebra& alg) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")*" << idx.str(alg);
    }
    return os.str();
}

SymTensor sym_product(const SymTensor& a, const SymTensor& b) {
    SymTensor out(a.degree() + b.degree());
    for (const auto& [ia, ca] : a.coeffs())
        for (const auto& [ib, cb] : b.coeffs()) out.add_term(ia.merged(ib), ca * cb);
    return out;
}

GaussianRational evaluate_monomial(const LieAlgebra& alg, const MultisetIndex& idx,
                                   const std::vector<Vec>& tuple) {
    const std::size_t k = idx.degree();
    if (tuple.size() != k)
        throw std::invalid_argument("symtensor: evaluation arity mismatch");
    if (k == 0) return GaussianRational(1);
    // pairing[j][l] = kappa(e_{factor j}, w_l); the value is perm(pairing)/k!.
    // kappa * w_l is shared across the k factor rows.
    const auto& factors = idx.factors();
    const ExactMatrix& kappa = alg.killing_form();
    std::vector<Vec> pairing(k, Vec(k));
    for (std::size_t l = 0; l < k; ++l) {
        Vec kw(alg.dim());
        for (std::size_t a = 0; a < alg.dim(); ++a)
            for (std::size_t b = 0; b < alg.dim(); ++b)
                if (!kappa(a, b).is_zero() && !tuple[l][b].is_zero())
                    kw[a] += kappa(a, b) * tuple[l][b];
        for (std::size_t j = 0; j < k; ++j) pairing[j][l] = kw[factors[j]];
    }
    std::vector<bool> used(k, false);
    GaussianRational total;
    GaussianRational prod(1);
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == k) {
            total += prod;
            return;
        }
        for (std::size_t l = 0; l < k; ++l) {
            if (used[l] || pairing[j][l].is_zero()) continue;
            used[l] = true;
            GaussianRational saved = prod;
            prod *= pairing[j][l];
            self(self, j + 1);
            prod = saved;
            used[l] = false;
        }
    };
    rec(rec, 0);
    GaussianRational kfact(1);
    for (std::size_t j = 2; j <= k; ++j) kfact *= GaussianRational(static_cast<long>(j));
    return total / kfact;
}

GaussianRational evaluate(const LieAlgebra& alg, const SymTensor& s, const std::vector<Vec>& tuple) {
    if (tuple.size() != s.degree())
        throw std::invalid_argument("symtensor: evaluation arity mismatch");
    GaussianRational out;
    for (const auto& [idx, c] : s.coeffs()) out += c * evaluate_monomial(alg, idx, tuple);
    return out;
}

SymTensor embed_vector(const LieAlgebra& alg, const Vec& v) {
    if (v.size() != alg.dim())
        throw std::invalid_argument("symtensor: embed_vector dimension mismatch");
    SymTensor t(1);
    for (std::size_t i = 0; i < v.size(); ++i)
        t.add_term(MultisetIndex({i}), v[i]);
    return t;
}

Vec contract_vector(const LieAlgebra& alg, const SymTensor& s, const std::vector<Vec>& partial) {
    if (s.degree() == 0 || partial.size() + 1 != s.degree())
        throw std::invalid_argument("symtensor: contraction arity mismatch");
    const std::size_t k = s.degree();
    Vec out(alg.dim());
    // For a monomial with factors (g_1..g_k):
    //   eval(s, (w, partial)) = (1/k) sum_j kappa(g_j, w) * eval(rest_j, partial)
    // so the kappa-dual vector is (1/k) sum_j eval(rest_j, partial) * g_j.
    GaussianRational inv_k = GaussianRational(1) / GaussianRational(static_cast<long>(k));
    for (const auto& [idx, c] : s.coeffs()) {
        for (std::size_t j = 0; j < k; ++j) {
            GaussianRational rest = evaluate_monomial(alg, idx.without_factor(j), partial);
            if (rest.is_zero()) continue;
            out[idx.factors()[j]] += c * inv_k * rest;
        }
    }
    return out;
}

}  // namespace spencer
