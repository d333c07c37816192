#include "momenta/mvseries.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace momenta {

namespace {

void collect_of_total(unsigned arity, unsigned total, unsigned slot,
                      MultiIndex& scratch, std::vector<MultiIndex>& out) {
    if (slot + 1 == arity) {
        scratch[slot] = total;
        out.push_back(scratch);
        return;
    }
    for (unsigned v = 0; v <= total; ++v) {
        scratch[slot] = v;
        collect_of_total(arity, total - v, slot + 1, scratch, out);
    }
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_total(unsigned arity, unsigned total) {
    if (arity == 0) {
        return total == 0 ? std::vector<MultiIndex>{MultiIndex{}} : std::vector<MultiIndex>{};
    }
    std::vector<MultiIndex> out;
    MultiIndex scratch(arity, 0);
    collect_of_total(arity, total, 0, scratch, out);
    return out;
}

std::vector<MultiIndex> multi_indices_up_to(unsigned arity, unsigned degree) {
    std::vector<MultiIndex> out;
    for (unsigned d = 0; d <= degree; ++d) {
        std::vector<MultiIndex> level = multi_indices_of_total(arity, d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Rat TruncSeriesMV::coefficient(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void TruncSeriesMV::set_coefficient(const MultiIndex& m, const Rat& c) {
    if (m.size() != arity_) {
        throw std::invalid_argument("TruncSeriesMV: index arity mismatch");
    }
    if (mi_size(m) > max_degree_) {
        throw std::invalid_argument("TruncSeriesMV: index beyond truncation degree");
    }
    if (c == 0) {
        terms_.erase(m);
    } else {
        terms_[m] = c;
    }
}

void TruncSeriesMV::add_coefficient(const MultiIndex& m, const Rat& c) {
    if (m.size() != arity_) {
        throw std::invalid_argument("TruncSeriesMV: index arity mismatch");
    }
    if (mi_size(m) > max_degree_ || c == 0) return;
    Rat& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
}

TruncSeriesMV& TruncSeriesMV::operator+=(const TruncSeriesMV& rhs) {
    if (rhs.arity_ != arity_) {
        throw std::invalid_argument("TruncSeriesMV: arity mismatch");
    }
    if (rhs.max_degree_ < max_degree_) *this = truncated(rhs.max_degree_);
    for (const auto& [m, c] : rhs.terms_) add_coefficient(m, c);
    return *this;
}

TruncSeriesMV& TruncSeriesMV::operator-=(const TruncSeriesMV& rhs) {
    if (rhs.arity_ != arity_) {
        throw std::invalid_argument("TruncSeriesMV: arity mismatch");
    }
    if (rhs.max_degree_ < max_degree_) *this = truncated(rhs.max_degree_);
    for (const auto& [m, c] : rhs.terms_) add_coefficient(m, -c);
    return *this;
}

TruncSeriesMV& TruncSeriesMV::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

TruncSeriesMV operator*(const TruncSeriesMV& lhs, const TruncSeriesMV& rhs) {
    if (lhs.arity_ != rhs.arity_) {
        throw std::invalid_argument("TruncSeriesMV: arity mismatch");
    }
    TruncSeriesMV out(lhs.arity_, std::min(lhs.max_degree_, rhs.max_degree_));
    for (const auto& [ml, cl] : lhs.terms_) {
        const unsigned long dl = mi_size(ml);
        if (dl > out.max_degree_) continue;
        for (const auto& [mr, cr] : rhs.terms_) {
            if (dl + mi_size(mr) > out.max_degree_) continue;
            MultiIndex m = ml;
            for (unsigned i = 0; i < m.size(); ++i) m[i] += mr[i];
            out.add_coefficient(m, cl * cr);
        }
    }
    return out;
}

TruncSeriesMV TruncSeriesMV::truncated(unsigned new_degree) const {
    TruncSeriesMV out(arity_, std::min(new_degree, max_degree_));
    for (const auto& [m, c] : terms_) out.add_coefficient(m, c);
    return out;
}

TruncSeriesMV TruncSeriesMV::derivative(unsigned var) const {
    if (var >= arity_) {
        throw std::invalid_argument("TruncSeriesMV: variable out of range");
    }
    TruncSeriesMV out(arity_, max_degree_ == 0 ? 0 : max_degree_ - 1);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        MultiIndex d = m;
        --d[var];
        out.add_coefficient(d, c * Rat(m[var]));
    }
    return out;
}

TruncSeriesMV::Terms TruncSeriesMV::homogeneous_part(unsigned d) const {
    Terms out;
    for (const auto& [m, c] : terms_) {
        if (mi_size(m) == d) out.emplace(m, c);
    }
    return out;
}

Rat TruncSeriesMV::evaluate(const std::vector<Rat>& x) const {
    if (x.size() != arity_) {
        throw std::invalid_argument("TruncSeriesMV: point arity mismatch");
    }
    Rat sum = 0;
    for (const auto& [m, c] : terms_) {
        Rat term = c;
        for (unsigned i = 0; i < arity_; ++i) term *= pow_rat(x[i], m[i]);
        sum += term;
    }
    return sum;
}

double TruncSeriesMV::evaluate_double(const std::vector<double>& x) const {
    if (x.size() != arity_) {
        throw std::invalid_argument("TruncSeriesMV: point arity mismatch");
    }
    double sum = 0;
    for (const auto& [m, c] : terms_) {
        double term = rat_to_double(c);
        for (unsigned i = 0; i < arity_; ++i) term *= std::pow(x[i], static_cast<int>(m[i]));
        sum += term;
    }
    return sum;
}

}  // namespace momenta
