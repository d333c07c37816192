#include "momenta/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace momenta {

SparsePoly SparsePoly::constant(unsigned arity, const Rat& c) {
    SparsePoly p(arity);
    p.add_term(std::vector<unsigned>(arity, 0), c);
    return p;
}

SparsePoly SparsePoly::variable(unsigned arity, unsigned index) {
    if (index >= arity) throw std::domain_error("variable index out of range");
    std::vector<unsigned> e(arity, 0);
    e[index] = 1;
    return monomial(arity, e, Rat(1));
}

SparsePoly SparsePoly::monomial(unsigned arity, const std::vector<unsigned>& e, const Rat& c) {
    SparsePoly p(arity);
    p.add_term(e, c);
    return p;
}

unsigned SparsePoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<unsigned>(mi_size(e)));
    return d;
}

Rat SparsePoly::coefficient(const std::vector<unsigned>& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void SparsePoly::add_term(const std::vector<unsigned>& e, const Rat& c) {
    if (e.size() != arity_) throw std::domain_error("exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly p(arity_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& rhs) {
    if (arity_ != rhs.arity_) throw std::domain_error("polynomial arity mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& rhs) {
    if (arity_ != rhs.arity_) throw std::domain_error("polynomial arity mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs) {
    if (lhs.arity_ != rhs.arity_) throw std::domain_error("polynomial arity mismatch");
    SparsePoly p(lhs.arity_);
    std::vector<unsigned> e(lhs.arity_);
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (unsigned i = 0; i < lhs.arity_; ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

SparsePoly& SparsePoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

SparsePoly SparsePoly::pow(unsigned e) const {
    SparsePoly result = constant(arity_, Rat(1));
    for (unsigned i = 0; i < e; ++i) result = result * *this;
    return result;
}

SparsePoly SparsePoly::extended(unsigned new_arity) const {
    if (new_arity < arity_) throw std::domain_error("cannot shrink polynomial arity");
    SparsePoly p(new_arity);
    for (const auto& [e, c] : terms_) {
        std::vector<unsigned> ext(e);
        ext.resize(new_arity, 0);
        p.terms_.emplace(std::move(ext), c);
    }
    return p;
}

Rat SparsePoly::evaluate(const std::vector<Rat>& xs) const {
    if (xs.size() != arity_) throw std::domain_error("evaluation point arity mismatch");
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (unsigned i = 0; i < arity_; ++i)
            if (e[i] != 0) term *= pow_rat(xs[i], e[i]);
        total += term;
    }
    return total;
}

double SparsePoly::evaluate_double(const std::vector<double>& xs) const {
    if (xs.size() != arity_) throw std::domain_error("evaluation point arity mismatch");
    double total = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = rat_to_double(c);
        for (unsigned i = 0; i < arity_; ++i)
            for (unsigned rep = 0; rep < e[i]; ++rep) term *= xs[i];
        total += term;
    }
    return total;
}

SparsePoly SparsePoly::substitute(const std::vector<SparsePoly>& replacement) const {
    if (replacement.size() != arity_) throw std::domain_error("substitution arity mismatch");
    unsigned out_arity = replacement.empty() ? 0 : replacement[0].arity();
    for (const auto& r : replacement)
        if (r.arity() != out_arity) throw std::domain_error("replacement arities differ");
    SparsePoly total(out_arity);
    for (const auto& [e, c] : terms_) {
        SparsePoly term = SparsePoly::constant(out_arity, c);
        for (unsigned i = 0; i < arity_; ++i)
            if (e[i] != 0) term = term * replacement[i].pow(e[i]);
        total += term;
    }
    return total;
}

SparsePoly SparsePoly::scale_vars(const std::vector<Rat>& factor) const {
    if (factor.size() != arity_) throw std::domain_error("scale factor arity mismatch");
    SparsePoly p(arity_);
    for (const auto& [e, c] : terms_) {
        Rat scaled = c;
        for (unsigned i = 0; i < arity_; ++i)
            if (e[i] != 0) scaled *= pow_rat(factor[i], e[i]);
        p.add_term(e, scaled);
    }
    return p;
}

std::string SparsePoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Terms ascending by exponent key keeps the rendering deterministic.
    for (const auto& [e, c] : terms_) {
        Rat coeff = c;
        if (first) {
            if (coeff < 0) {
                out << "-";
                coeff = -coeff;
            }
        } else {
            out << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        const bool has_vars = mi_size(e) > 0;
        if (!has_vars || coeff != 1) out << rat_to_string(coeff);
        bool printed = !has_vars || coeff != 1;
        for (unsigned i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            if (printed) out << " ";
            if (i < names.size())
                out << names[i];
            else
                out << "x" << (i + 1);
            if (e[i] > 1) out << "^" << e[i];
            printed = true;
        }
    }
    return out.str();
}

}  // namespace momenta
