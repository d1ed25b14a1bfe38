#include "starq/printer.hpp"

namespace starq {

namespace {

std::string rational_str(const Rational& q) { return q.get_str(); }

/// Renders one term; a purely real/imaginary negative coefficient is emitted
/// with a leading '-', mixed coefficients keep their signs inside parens.
std::string term_str(const TermKey& key, const Gaussian& c, ParamUse param) {
    std::vector<std::string> factors;

    const char* param_name = (param == ParamUse::Hbar) ? "hbar" : "lambda";
    std::string coeff;
    Gaussian g = c;
    bool has_monomial = !key.degree.is_constant() || key.hbar_power != 0;

    if (g.im == 0) {
        if (g.re == 1 && has_monomial) {
            coeff = "";
        } else if (g.re == -1 && has_monomial) {
            coeff = "-";
        } else {
            coeff = rational_str(g.re);
        }
    } else if (g.re == 0) {
        if (g.im == 1) {
            coeff = "i";
        } else if (g.im == -1) {
            coeff = "-i";
        } else {
            coeff = rational_str(g.im) + "*i";
        }
    } else {
        std::string im_mag = (abs(g.im) == 1) ? "i" : rational_str(abs(g.im)) + "*i";
        coeff = "(" + rational_str(g.re) + (g.im > 0 ? "+" : "-") + im_mag + ")";
    }

    std::string sign;
    std::string head = coeff;
    if (head.rfind("-", 0) == 0 && head != "-") {
        sign = "-";
        head = head.substr(1);
    } else if (head == "-") {
        sign = "-";
        head = "";
    }
    if (!head.empty()) factors.push_back(head);

    if (key.hbar_power != 0) {
        std::string p = param_name;
        if (key.hbar_power != 1) p += "^" + std::to_string(key.hbar_power);
        factors.push_back(p);
    }

    const Multidegree& md = key.degree;
    auto push_var = [&](const char* name, unsigned index, unsigned exp) {
        if (exp == 0) return;
        std::string v = std::string(name) + std::to_string(index + 1);
        if (exp > 1) v += "^" + std::to_string(exp);
        factors.push_back(v);
    };
    for (unsigned i = 0; i < md.dim(); ++i) push_var("x", i, md.x_exp(i));
    for (unsigned i = 0; i < md.dim(); ++i) push_var("p", i, md.p_exp(i));
    for (unsigned i = 0; i < md.dim(); ++i) push_var("y", i, md.y_exp(i));
    for (unsigned i = 0; i < md.dim(); ++i)
        if (md.psi(i)) factors.push_back("psi" + std::to_string(i + 1));

    if (factors.empty()) factors.push_back("1");

    std::string s = sign + factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) s += "*" + factors[i];
    return s;
}

}  // namespace

std::string print_canonical(const WeylElement& e, ParamUse param) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    // descending graded-lex: leading term first
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        std::string t = term_str(it->first, it->second, param);
        if (first) {
            out = t;
            first = false;
        } else if (t.rfind("-", 0) == 0) {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

}  // namespace starq
