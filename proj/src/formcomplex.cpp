#include "spencer/formcomplex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spencer {

FormPoly FormPoly::constant(VariableMode mode, std::size_t vars, const GaussianRational& c) {
    FormPoly p(mode, vars);
    p.add_term(std::vector<std::uint32_t>(p.generators(), 0), {}, c);
    return p;
}

FormPoly FormPoly::variable(VariableMode mode, std::size_t vars, std::size_t g) {
    FormPoly p(mode, vars);
    std::vector<std::uint32_t> exps(p.generators(), 0);
    exps.at(g) = 1;
    p.add_term(std::move(exps), {}, GaussianRational(1));
    return p;
}

FormPoly FormPoly::differential(VariableMode mode, std::size_t vars, std::size_t g) {
    FormPoly p(mode, vars);
    if (g >= p.generators()) throw std::out_of_range("FormPoly: generator index");
    p.add_term(std::vector<std::uint32_t>(p.generators(), 0), {g}, GaussianRational(1));
    return p;
}

bool FormPoly::homogeneous() const {
    if (terms_.empty()) return true;
    std::size_t deg = terms_.begin()->first.diffs.size();
    for (const auto& [key, c] : terms_)
        if (key.diffs.size() != deg) return false;
    return true;
}

void FormPoly::add_term(std::vector<std::uint32_t> exps, std::vector<std::size_t> diffs,
                        GaussianRational coeff) {
    if (exps.size() != generators())
        throw std::invalid_argument("FormPoly: exponent vector length mismatch");
    if (coeff.is_zero()) return;
    // Sort the differential indices, tracking the permutation parity.
    bool negative = false;
    for (std::size_t i = 1; i < diffs.size(); ++i)
        for (std::size_t j = i; j > 0 && diffs[j - 1] > diffs[j]; --j) {
            std::swap(diffs[j - 1], diffs[j]);
            negative = !negative;
        }
    for (std::size_t i = 1; i < diffs.size(); ++i)
        if (diffs[i - 1] == diffs[i]) return;  // dx ^ dx = 0
    for (std::size_t g : diffs)
        if (g >= generators()) throw std::out_of_range("FormPoly: differential index");
    if (negative) coeff = -coeff;
    TermKey key{std::move(exps), std::move(diffs)};
    auto [it, inserted] = terms_.emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void FormPoly::check_compatible(const FormPoly& o) const {
    if (mode_ != o.mode_ || vars_ != o.vars_)
        throw std::invalid_argument("FormPoly: variable space mismatch");
}

FormPoly FormPoly::operator+(const FormPoly& o) const {
    check_compatible(o);
    FormPoly out = *this;
    for (const auto& [key, c] : o.terms_) out.add_term(key.exps, key.diffs, c);
    return out;
}

FormPoly FormPoly::operator-(const FormPoly& o) const { return *this + o * GaussianRational(-1); }

FormPoly FormPoly::operator*(const GaussianRational& c) const {
    FormPoly out(mode_, vars_);
    if (c.is_zero()) return out;
    for (const auto& [key, v] : terms_) out.terms_[key] = v * c;
    return out;
}

FormPoly FormPoly::wedge(const FormPoly& o) const {
    check_compatible(o);
    FormPoly out(mode_, vars_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            std::vector<std::uint32_t> exps(generators());
            for (std::size_t g = 0; g < generators(); ++g) exps[g] = ka.exps[g] + kb.exps[g];
            std::vector<std::size_t> diffs = ka.diffs;
            diffs.insert(diffs.end(), kb.diffs.begin(), kb.diffs.end());
            out.add_term(std::move(exps), std::move(diffs), ca * cb);
        }
    return out;
}

std::string FormPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        for (std::size_t g = 0; g < key.exps.size(); ++g)
            if (key.exps[g]) {
                os << "*" << (mode_ == VariableMode::real
                                  ? "x" + std::to_string(g + 1)
                                  : (g < vars_ ? "z" + std::to_string(g + 1)
                                               : "zb" + std::to_string(g - vars_ + 1)));
                if (key.exps[g] > 1) os << "^" << key.exps[g];
            }
        for (std::size_t g : key.diffs)
            os << "*d" << (mode_ == VariableMode::real
                               ? "x" + std::to_string(g + 1)
                               : (g < vars_ ? "z" + std::to_string(g + 1)
                                            : "zb" + std::to_string(g - vars_ + 1)));
    }
    return os.str();
}

namespace {

FormPoly derive(const FormPoly& w, std::size_t g_begin, std::size_t g_end) {
    FormPoly out(w.mode(), w.vars());
    for (const auto& [key, c] : w.terms()) {
        for (std::size_t g = g_begin; g < g_end; ++g) {
            if (key.exps[g] == 0) continue;
            std::vector<std::uint32_t> exps = key.exps;
            --exps[g];
            std::vector<std::size_t> diffs;
            diffs.reserve(key.diffs.size() + 1);
            diffs.push_back(g);  // df ^ dS; sorting supplies the sign
            diffs.insert(diffs.end(), key.diffs.begin(), key.diffs.end());
            out.add_term(std::move(exps), std::move(diffs),
                         c * GaussianRational(static_cast<long>(key.exps[g])));
        }
    }
    return out;
}

}  // namespace

FormPoly exterior_d(const FormPoly& w) { return derive(w, 0, w.generators()); }

FormPoly del(const FormPoly& w) {
    if (w.mode() != VariableMode::complex_vars)
        throw std::invalid_argument("del: requires complex mode");
    return derive(w, 0, w.vars());
}

FormPoly delbar(const FormPoly& w) {
    if (w.mode() != VariableMode::complex_vars)
        throw std::invalid_argument("delbar: requires complex mode");
    return derive(w, w.vars(), 2 * w.vars());
}

SpencerElement SpencerElement::term(const FormPoly& alpha, const SymTensor& s) {
    SpencerElement e(alpha.mode(), alpha.vars());
    for (const auto& [idx, c] : s.coeffs()) e.add_part(idx, alpha * c);
    return e;
}

bool SpencerElement::is_zero() const {
    for (const auto& [idx, poly] : parts_)
        if (!poly.is_zero()) return false;
    return true;
}

void SpencerElement::add_part(const MultisetIndex& idx, const FormPoly& poly) {
    if (poly.is_zero()) return;
    auto it = parts_.find(idx);
    if (it == parts_.end()) {
        parts_.emplace(idx, poly);
        return;
    }
    it->second = it->second + poly;
    if (it->second.is_zero()) parts_.erase(it);
}

SpencerElement SpencerElement::operator+(const SpencerElement& o) const {
    SpencerElement out = *this;
    if (out.parts_.empty()) {
        out.mode_ = o.mode_;
        out.vars_ = o.vars_;
    }
    for (const auto& [idx, poly] : o.parts_) out.add_part(idx, poly);
    return out;
}

SpencerElement SpencerElement::operator-(const SpencerElement& o) const {
    SpencerElement neg = o;
    for (auto& [idx, poly] : neg.parts_) poly = poly * GaussianRational(-1);
    return *this + neg;
}

bool operator==(const SpencerElement& a, const SpencerElement& b) {
    return (a - b).is_zero();
}

namespace {

SpencerElement map_forms(const SpencerElement& e, FormPoly (*op)(const FormPoly&)) {
    SpencerElement out(e.mode(), e.vars());
    for (const auto& [idx, poly] : e.parts()) out.add_part(idx, op(poly));
    return out;
}

}  // namespace

SpencerElement SpencerElement::form_d() const { return map_forms(*this, exterior_d); }
SpencerElement SpencerElement::form_del() const { return map_forms(*this, del); }
SpencerElement SpencerElement::form_delbar() const { return map_forms(*this, delbar); }

SpencerElement SpencerElement::tensor_delta(const LieAlgebra& alg, const DualFunctional& lambda,
                                            LeibnizConvention conv) const {
    SpencerElement out(mode_, vars_);
    for (const auto& [idx, poly] : parts_) {
        if (idx.degree() == 0) continue;  // delta is defined on degree >= 1
        SymTensor image = delta_tensor(alg, lambda, SymTensor::monomial(idx), conv);
        if (image.is_zero()) continue;
        // Split the form coefficient by parity of its form degree.
        FormPoly even(mode_, vars_), odd(mode_, vars_);
        for (const auto& [key, c] : poly.terms())
            (key.diffs.size() % 2 == 0 ? even : odd).add_term(key.exps, key.diffs, c);
        FormPoly signed_poly = even - odd;  // (-1)^{deg alpha} per term
        for (const auto& [target, coeff] : image.coeffs())
            out.add_part(target, signed_poly * coeff);
    }
    return out;
}

SpencerElement SpencerElement::spencer_D(const LieAlgebra& alg, const DualFunctional& lambda,
                                         LeibnizConvention conv) const {
    return form_d() + tensor_delta(alg, lambda, conv);
}

DegenerationCheck degeneration_check(const FormPoly& alpha, const SymTensor& s,
                                     const LieAlgebra& alg, const DualFunctional& lambda,
                                     LeibnizConvention conv) {
    DegenerationCheck out;
    SymTensor ds = delta_tensor(alg, lambda, s, conv);
    if (!ds.is_zero()) {
        out.status = CheckStatus::skipped;
        out.witness = "precondition failed: delta(s) = " + ds.str(alg);
        return out;
    }
    SpencerElement e = SpencerElement::term(alpha, s);
    SpencerElement lhs = e.spencer_D(alg, lambda, conv);
    SpencerElement rhs = SpencerElement::term(exterior_d(alpha), s);
    SpencerElement diff = lhs - rhs;
    if (diff.is_zero()) return out;
    out.status = CheckStatus::refuted;
    const auto& [idx, poly] = *diff.parts().begin();
    out.witness = "residual term " + poly.str() + " (x) " + idx.str(alg);
    return out;
}

DolbeaultCheck dolbeault_split_check(const LieAlgebra& alg, const DualFunctional& lambda,
                                     LeibnizConvention conv,
                                     const std::vector<SpencerElement>& samples) {
    DolbeaultCheck out;
    out.del_sq = out.delbar_sq = out.del_delbar_anticommute = true;
    out.del_delta_anticommute = out.delbar_delta_anticommute = true;
    out.delta_sq_matches_defect = true;
    for (const SpencerElement& e : samples) {
        if (e.mode() != VariableMode::complex_vars)
            throw std::invalid_argument("dolbeault_split_check: requires complex mode");
        auto dd = [&](const SpencerElement& x) { return x.tensor_delta(alg, lambda, conv); };
        if (!e.form_del().form_del().is_zero()) out.del_sq = false;
        if (!e.form_delbar().form_delbar().is_zero()) out.delbar_sq = false;
        if (!(e.form_del().form_delbar() + e.form_delbar().form_del()).is_zero())
            out.del_delbar_anticommute = false;
        if (!(dd(e.form_del()) + dd(e).form_del()).is_zero()) out.del_delta_anticommute = false;
        if (!(dd(e.form_delbar()) + dd(e).form_delbar()).is_zero())
            out.delbar_delta_anticommute = false;
        // delta_g^2(alpha (x) s) must equal alpha (x) delta^2(s), computed
        // independently through the composite operator matrices.
        SpencerElement lhs = dd(dd(e));
        SpencerElement rhs(e.mode(), e.vars());
        for (const auto& [idx, poly] : e.parts()) {
            if (idx.degree() == 0) continue;
            SymTensor dds =
                delta_tensor(alg, lambda, delta_tensor(alg, lambda, SymTensor::monomial(idx), conv), conv);
            for (const auto& [target, coeff] : dds.coeffs()) rhs.add_part(target, poly * coeff);
        }
        if (!(lhs - rhs).is_zero()) out.delta_sq_matches_defect = false;
    }
    return out;
}

}  // namespace spencer
