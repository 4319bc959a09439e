#include "spencer/scalar.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace spencer {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    // z/w = z * conj(w) / |w|^2
    Rational n = o.norm();
    GaussianRational num = *this * o.conj();
    re_ = num.re_ / n;
    im_ = num.im_ / n;
    return *this;
}

std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) out += rational_str(re_);
    if (im_ != 0) {
        if (re_ != 0 && im_ > 0) out += "+";
        out += rational_str(im_) + "*i";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("scalar: empty rational token");
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(boost::multiprecision::mpz_int(text));
        }
        boost::multiprecision::mpz_int num(text.substr(0, slash));
        boost::multiprecision::mpz_int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("scalar: zero denominator in \"" + text + "\"");
        // Division canonicalizes sign and gcd.
        return Rational(num) / Rational(den);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("scalar: malformed rational \"" + text + "\"");
    }
}

GaussianRational GaussianRational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("scalar: empty string");
    // Split into at most two signed terms; a term ending in "*i" (or being
    // "i"/"-i"/"+i") is the imaginary part.
    std::vector<std::string> terms;
    std::size_t start = 0;
    for (std::size_t pos = 1; pos < text.size(); ++pos) {
        if ((text[pos] == '+' || text[pos] == '-') && text[pos - 1] != '/') {
            terms.push_back(text.substr(start, pos - start));
            start = pos;
        }
    }
    terms.push_back(text.substr(start));
    if (terms.size() > 2) throw std::invalid_argument("scalar: too many terms in \"" + text + "\"");

    Rational re(0), im(0);
    bool saw_re = false, saw_im = false;
    for (std::string term : terms) {
        if (term.empty()) throw std::invalid_argument("scalar: empty term in \"" + text + "\"");
        if (term[0] == '+') term = term.substr(1);
        bool imaginary = false;
        if (term.size() >= 2 && term.compare(term.size() - 2, 2, "*i") == 0) {
            imaginary = true;
            term = term.substr(0, term.size() - 2);
        } else if (term == "i" || term == "-i") {
            imaginary = true;
            term = (term == "-i") ? "-1" : "1";
        }
        Rational value = parse_rational(term);
        if (imaginary) {
            if (saw_im) throw std::invalid_argument("scalar: repeated imaginary part in \"" + text + "\"");
            im = value;
            saw_im = true;
        } else {
            if (saw_re) throw std::invalid_argument("scalar: repeated real part in \"" + text + "\"");
            re = value;
            saw_re = true;
        }
    }
    return {re, im};
}

}  // namespace spencer
