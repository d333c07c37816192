#include "momenta/liealg.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace momenta {
namespace {

Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

/// Falling factorial n(n-1)...(n-j+1).
Rat falling(unsigned n, unsigned j) {
    Rat out(1);
    for (unsigned t = 0; t < j; ++t) out *= Rat(static_cast<long>(n) - static_cast<long>(t));
    return out;
}

WeightShift zero_shift(unsigned k) { return WeightShift{std::vector<long>(k, 0), 0, 0}; }

WeightShift add_shifts(const WeightShift& x, const WeightShift& y) {
    WeightShift out = x;
    for (std::size_t i = 0; i < out.beta.size(); ++i) out.beta[i] += y.beta[i];
    out.gamma += y.gamma;
    out.a += y.a;
    return out;
}

bool is_zero_shift(const WeightShift& s) {
    if (s.gamma != 0 || s.a != 0) return false;
    return std::all_of(s.beta.begin(), s.beta.end(), [](long v) { return v == 0; });
}

/// Re-reads the weight symbols after the operand's weight was shifted:
/// substitutes symbol + shift for each symbol.
SparsePoly shift_symbols(const SparsePoly& p, const WeightShift& s, bool a_slot) {
    if (is_zero_shift(s)) return p;
    const unsigned arity = p.arity();
    const unsigned k = static_cast<unsigned>(s.beta.size());
    std::vector<SparsePoly> replacement;
    for (unsigned v = 0; v < arity; ++v) {
        long delta = 0;
        if (a_slot) {
            if (v == 0)
                delta = s.a;
            else if (v <= k)
                delta = s.beta[v - 1];
            else
                delta = s.gamma;
        } else {
            delta = v < k ? s.beta[v] : s.gamma;
        }
        SparsePoly r = SparsePoly::variable(arity, v);
        if (delta != 0) r += SparsePoly::constant(arity, Rat(delta));
        replacement.push_back(r);
    }
    return p.substitute(replacement);
}

MultiIndex mi_add(const MultiIndex& x, const MultiIndex& y) {
    MultiIndex out = x;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[i];
    return out;
}

/// Componentwise x - y; caller guarantees y <= x.
MultiIndex mi_sub(const MultiIndex& x, const MultiIndex& y) {
    MultiIndex out = x;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= y[i];
    return out;
}

bool mi_leq(const MultiIndex& x, const MultiIndex& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > y[i]) return false;
    return true;
}

}  // namespace

void LieOperator::normalize() {
    std::map<WeightShift, std::map<std::pair<MultiIndex, MultiIndex>, SparsePoly>> merged;
    for (PrimitiveTerm& term : terms_)
        for (auto& [key, coeff] : term.action) {
            if (coeff.is_zero()) continue;
            auto [it, fresh] = merged[term.shift].try_emplace(key, coeff);
            if (!fresh) it->second += coeff;
        }
    terms_.clear();
    for (auto& [shift, action] : merged) {
        for (auto it = action.begin(); it != action.end();)
            it = it->second.is_zero() ? action.erase(it) : std::next(it);
        if (!action.empty()) terms_.push_back(PrimitiveTerm{shift, std::move(action)});
    }
}

void LieOperator::add_monomial(const WeightShift& shift, const MultiIndex& x_pow,
                               const MultiIndex& d_pow, const SparsePoly& coeff) {
    if (shift.beta.size() != ground_ || x_pow.size() != ground_ || d_pow.size() != ground_)
        throw std::invalid_argument("shift or exponent arity does not match the ground size");
    if (coeff.arity() != symbol_arity())
        throw std::invalid_argument("coefficient arity does not match the weight symbols");
    terms_.push_back(PrimitiveTerm{shift, {{{x_pow, d_pow}, coeff}}});
    normalize();
}

LieOperator LieOperator::operator-() const {
    LieOperator out = *this;
    out *= Rat(-1);
    return out;
}

LieOperator& LieOperator::operator+=(const LieOperator& rhs) {
    if (ground_ != rhs.ground_ || a_slot_ != rhs.a_slot_)
        throw std::invalid_argument("operators live on different weight lattices");
    terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
    normalize();
    return *this;
}

LieOperator& LieOperator::operator-=(const LieOperator& rhs) { return *this += -rhs; }

LieOperator& LieOperator::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (PrimitiveTerm& term : terms_)
        for (auto& [key, coeff] : term.action) coeff *= c;
    return *this;
}

LieOperator compose(const LieOperator& a, const LieOperator& b) {
    if (a.ground() != b.ground() || a.has_a_slot() != b.has_a_slot())
        throw std::invalid_argument("operators live on different weight lattices");
    const unsigned k = a.ground();
    LieOperator out(k, a.has_a_slot());

    for (const PrimitiveTerm& tb : b.terms()) {
        for (const PrimitiveTerm& ta : a.terms()) {
            const WeightShift total = add_shifts(ta.shift, tb.shift);
            for (const auto& [ka, ca_raw] : ta.action) {
                const auto& [pa, qa] = ka;
                // a reads weights after b has shifted them.
                const SparsePoly ca = shift_symbols(ca_raw, tb.shift, a.has_a_slot());
                for (const auto& [kb, cb] : tb.action) {
                    const auto& [pb, qb] = kb;
                    // Normal-order d^qa past x^pb by the Leibniz rule.
                    std::vector<unsigned> lim(k);
                    for (unsigned i = 0; i < k; ++i) lim[i] = std::min(qa[i], pb[i]);
                    MultiIndex j(k, 0);
                    while (true) {
                        Rat factor(1);
                        for (unsigned i = 0; i < k; ++i)
                            factor *= binomial(qa[i], j[i]) * falling(pb[i], j[i]);
                        out.add_monomial(total, mi_add(pa, mi_sub(pb, j)),
                                         mi_add(qb, mi_sub(qa, j)), ca * cb * factor);
                        unsigned pos = 0;
                        while (pos < k && j[pos] == lim[pos]) j[pos++] = 0;
                        if (pos == k) break;
                        ++j[pos];
                    }
                }
            }
        }
    }
    return out;
}

LieOperator commutator(const LieOperator& a, const LieOperator& b) {
    LieOperator out = compose(a, b);
    out -= compose(b, a);
    out.label = "[" + a.label + "," + b.label + "]";
    return out;
}

namespace {

SparsePoly sym_const(unsigned arity, const Rat& c) { return SparsePoly::constant(arity, c); }

}  // namespace

LieOperator op_j_tilde(unsigned k, unsigned i) {
    if (i < 1 || i > k) throw std::invalid_argument("index outside the ground range");
    const unsigned arity = k + 1;
    LieOperator op(k);
    SparsePoly coeff = SparsePoly::variable(arity, k) + SparsePoly::variable(arity, i - 1) -
                       sym_const(arity, Rat(1));
    op.add_monomial(zero_shift(k), MultiIndex(k, 0), MultiIndex(k, 0), coeff);
    op.label = "J" + std::to_string(i);
    return op;
}

LieOperator op_mix(unsigned k, unsigned i, unsigned j) {
    if (i < 1 || i > k || j < 1 || j > k || i == j)
        throw std::invalid_argument("indices must be distinct and inside the ground range");
    const unsigned arity = k + 1;
    WeightShift shift = zero_shift(k);
    shift.beta[i - 1] = 1;
    shift.beta[j - 1] = -1;
    MultiIndex ei(k, 0), ej(k, 0);
    ei[i - 1] = 1;
    ej[j - 1] = 1;
    LieOperator op(k);
    op.add_monomial(shift, ei, ei, sym_const(arity, Rat(1)));
    op.add_monomial(shift, ej, ei, sym_const(arity, Rat(-1)));
    op.add_monomial(shift, MultiIndex(k, 0), MultiIndex(k, 0), SparsePoly::variable(arity, i - 1));
    op.label = "M" + std::to_string(i) + std::to_string(j);
    return op;
}

LieOperator op_raise(unsigned k, unsigned i) {
    if (i < 1 || i > k) throw std::invalid_argument("index outside the ground range");
    const unsigned arity = k + 1;
    WeightShift shift = zero_shift(k);
    shift.beta[i - 1] = 1;
    shift.gamma = 1;
    MultiIndex ei(k, 0);
    ei[i - 1] = 1;
    LieOperator op(k);
    op.add_monomial(shift, ei, ei, sym_const(arity, Rat(1)));
    op.add_monomial(shift, MultiIndex(k, 0), MultiIndex(k, 0), SparsePoly::variable(arity, i - 1));
    for (unsigned j = 1; j <= k; ++j) {
        MultiIndex ej(k, 0);
        ej[j - 1] = 1;
        op.add_monomial(shift, ej, mi_add(ej, ei), sym_const(arity, Rat(-1)));
    }
    op.label = "E+" + std::to_string(i);
    return op;
}

LieOperator op_lower(unsigned k, unsigned i) {
    if (i < 1 || i > k) throw std::invalid_argument("index outside the ground range");
    const unsigned arity = k + 1;
    WeightShift shift = zero_shift(k);
    shift.beta[i - 1] = -1;
    shift.gamma = -1;
    MultiIndex ei(k, 0);
    ei[i - 1] = 1;
    LieOperator op(k);
    op.add_monomial(shift, ei, MultiIndex(k, 0), sym_const(arity, Rat(1)));
    for (unsigned j = 1; j <= k; ++j) {
        MultiIndex ej(k, 0);
        ej[j - 1] = 1;
        op.add_monomial(shift, ej, ej, sym_const(arity, Rat(-1)));
    }
    op.add_monomial(shift, MultiIndex(k, 0), MultiIndex(k, 0),
                    sym_const(arity, Rat(1)) - SparsePoly::variable(arity, k));
    op.label = "E-" + std::to_string(i);
    return op;
}

LieOperator op_fd_e_b(unsigned k, unsigned i) {
    if (i < 1 || i > k) throw std::invalid_argument("index outside the ground range");
    const unsigned arity = k + 2;
    WeightShift shift = zero_shift(k);
    shift.beta[i - 1] = 1;
    MultiIndex ei(k, 0);
    ei[i - 1] = 1;
    LieOperator op(k, true);
    op.add_monomial(shift, ei, ei, sym_const(arity, Rat(1)));
    op.add_monomial(shift, MultiIndex(k, 0), MultiIndex(k, 0), SparsePoly::variable(arity, i));
    op.label = "Eb" + std::to_string(i);
    return op;
}

LieOperator op_fd_e_c(unsigned k) {
    const unsigned arity = k + 2;
    WeightShift shift = zero_shift(k);
    shift.gamma = 1;
    LieOperator op(k, true);
    SparsePoly scalar = SparsePoly::variable(arity, k + 1) - SparsePoly::variable(arity, 0);
    for (unsigned j = 1; j <= k; ++j) {
        MultiIndex ej(k, 0);
        ej[j - 1] = 1;
        op.add_monomial(shift, MultiIndex(k, 0), ej, sym_const(arity, Rat(1)));
        op.add_monomial(shift, ej, ej, sym_const(arity, Rat(-1)));
        scalar -= SparsePoly::variable(arity, j);
    }
    op.add_monomial(shift, MultiIndex(k, 0), MultiIndex(k, 0), scalar);
    op.label = "Ec";
    return op;
}

LieOperator op_fd_e_abc(unsigned k, unsigned i) {
    if (i < 1 || i > k) throw std::invalid_argument("index outside the ground range");
    const unsigned arity = k + 2;
    WeightShift shift = zero_shift(k);
    shift.a = 1;
    shift.beta[i - 1] = 1;
    shift.gamma = 1;
    MultiIndex ei(k, 0);
    ei[i - 1] = 1;
    LieOperator op(k, true);
    op.add_monomial(shift, MultiIndex(k, 0), ei, sym_const(arity, Rat(1)));
    op.label = "Eabc" + std::to_string(i);
    return op;
}

LieOperator op_fd_j_a(unsigned k) {
    const unsigned arity = k + 2;
    LieOperator op(k, true);
    op.add_monomial(zero_shift(k), MultiIndex(k, 0), MultiIndex(k, 0),
                    Rat(2) * SparsePoly::variable(arity, 0) - SparsePoly::variable(arity, k + 1));
    op.label = "Ja";
    return op;
}

LieOperator op_fd_j_b(unsigned k, unsigned i) {
    if (i < 1 || i > k) throw std::invalid_argument("index outside the ground range");
    const unsigned arity = k + 2;
    SparsePoly scalar = SparsePoly::variable(arity, i) - SparsePoly::variable(arity, k + 1);
    for (unsigned j = 1; j <= k; ++j) scalar += SparsePoly::variable(arity, j);
    LieOperator op(k, true);
    op.add_monomial(zero_shift(k), MultiIndex(k, 0), MultiIndex(k, 0), scalar);
    op.label = "Jb" + std::to_string(i);
    return op;
}

LieOperator op_fd_j_c(unsigned k) {
    const unsigned arity = k + 2;
    SparsePoly scalar = Rat(2) * SparsePoly::variable(arity, k + 1) -
                        SparsePoly::variable(arity, 0) - sym_const(arity, Rat(1));
    for (unsigned j = 1; j <= k; ++j) scalar -= SparsePoly::variable(arity, j);
    LieOperator op(k, true);
    op.add_monomial(zero_shift(k), MultiIndex(k, 0), MultiIndex(k, 0), scalar);
    op.label = "Jc";
    return op;
}

std::map<WeightShift, std::map<MultiIndex, SparsePoly>> monomial_action(const LieOperator& op,
                                                                        const MultiIndex& m) {
    if (m.size() != op.ground()) throw std::invalid_argument("monomial arity mismatch");
    std::map<WeightShift, std::map<MultiIndex, SparsePoly>> out;
    for (const PrimitiveTerm& term : op.terms())
        for (const auto& [key, coeff] : term.action) {
            const auto& [p, q] = key;
            if (!mi_leq(q, m)) continue;
            Rat factor(1);
            for (std::size_t i = 0; i < m.size(); ++i) factor *= falling(m[i], q[i]);
            auto& slot = out[term.shift];
            const MultiIndex target = mi_add(mi_sub(m, q), p);
            auto [it, fresh] = slot.try_emplace(target, coeff * factor);
            if (!fresh) it->second += coeff * factor;
        }
    for (auto& [shift, slot] : out)
        for (auto it = slot.begin(); it != slot.end();)
            it = it->second.is_zero() ? slot.erase(it) : std::next(it);
    for (auto it = out.begin(); it != out.end();)
        it = it->second.empty() ? out.erase(it) : std::next(it);
    return out;
}

namespace {

/// Weighted symbolic pieces: (accumulated shift, monomial) -> coefficient.
using Pieces = std::map<std::pair<WeightShift, MultiIndex>, SparsePoly>;

Pieces act_on_pieces(const LieOperator& op, const Pieces& in) {
    Pieces out;
    for (const auto& [key, poly] : in) {
        const auto& [acc_shift, mono] = key;
        for (const PrimitiveTerm& term : op.terms())
            for (const auto& [pq, coeff] : term.action) {
                const auto& [p, q] = pq;
                if (!mi_leq(q, mono)) continue;
                Rat factor(1);
                for (std::size_t i = 0; i < mono.size(); ++i) factor *= falling(mono[i], q[i]);
                const SparsePoly piece =
                    shift_symbols(coeff, acc_shift, op.has_a_slot()) * poly * factor;
                const std::pair<WeightShift, MultiIndex> target{
                    add_shifts(acc_shift, term.shift), mi_add(mi_sub(mono, q), p)};
                auto [it, fresh] = out.try_emplace(target, piece);
                if (!fresh) it->second += piece;
            }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

Pieces pieces_difference(Pieces lhs, const Pieces& rhs) {
    for (const auto& [key, poly] : rhs) {
        auto [it, fresh] = lhs.try_emplace(key, -poly);
        if (!fresh) it->second -= poly;
    }
    for (auto it = lhs.begin(); it != lhs.end();)
        it = it->second.is_zero() ? lhs.erase(it) : std::next(it);
    return lhs;
}

}  // namespace

bool bracket_action_verified(const LieOperator& a, const LieOperator& b,
                             const LieOperator& bracket, unsigned degree) {
    const unsigned k = a.ground();
    for (const MultiIndex& m : multi_indices_up_to(k, degree)) {
        Pieces start{{{zero_shift(k), m}, SparsePoly::constant(a.symbol_arity(), Rat(1))}};
        const Pieces via_actions = pieces_difference(act_on_pieces(a, act_on_pieces(b, start)),
                                                     act_on_pieces(b, act_on_pieces(a, start)));
        Pieces via_bracket;
        for (const auto& [shift, slot] : monomial_action(bracket, m))
            for (const auto& [mono, poly] : slot) via_bracket[{shift, mono}] = poly;
        if (via_actions != via_bracket) return false;
    }
    return true;
}

WeightedSeries build_basis_series(BasisFamily family, const BasisParams& params, unsigned D) {
    const unsigned k = static_cast<unsigned>(params.b.size());
    const bool fd = family == BasisFamily::LauricellaFd;
    if (fd && !params.a)
        throw std::invalid_argument("three-slot family needs the leading parameter");

    TruncSeriesMV body(k, D);
    for (const MultiIndex& m : multi_indices_up_to(k, D)) {
        const unsigned long total = mi_size(m);
        const Rat den = pochhammer(params.c, total) * mi_factorial(m);
        if (den == 0) throw std::domain_error("parameter pole in series denominator");
        Rat num(1);
        for (unsigned i = 0; i < k; ++i) num *= pochhammer(params.b[i], m[i]);
        if (fd) num *= pochhammer(*params.a, total);
        if (num != 0) body.set_coefficient(m, num / den);
    }

    WeightedSeries out{fd ? params.a : std::nullopt, params.b, params.c, D, std::move(body)};
    return out;
}

std::vector<WeightedSeries> apply(const LieOperator& op, const WeightedSeries& f) {
    const unsigned k = op.ground();
    if (f.body.arity() != k) throw std::invalid_argument("series arity mismatch");
    if (op.has_a_slot() != f.weight_a.has_value())
        throw std::invalid_argument("operator and series weight shapes differ");

    std::vector<Rat> xs;
    if (f.weight_a) xs.push_back(*f.weight_a);
    xs.insert(xs.end(), f.weight_beta.begin(), f.weight_beta.end());
    xs.push_back(f.weight_gamma);

    std::vector<WeightedSeries> out;
    for (const PrimitiveTerm& term : op.terms()) {
        TruncSeriesMV sum(k, f.body.max_degree());
        long guarantee = static_cast<long>(f.degree);
        for (const auto& [pq, coeff] : term.action) {
            const auto& [p, q] = pq;
            guarantee = std::min(guarantee, static_cast<long>(f.degree) +
                                                static_cast<long>(mi_size(p)) -
                                                static_cast<long>(mi_size(q)));
            const Rat cval = coeff.evaluate(xs);
            if (cval == 0) continue;
            // x^p d^q applied termwise at full storage degree; the guarantee
            // computed above accounts for the coefficients this cannot reach.
            for (const auto& [m, c] : f.body.terms()) {
                if (!mi_leq(q, m)) continue;
                Rat factor = cval * c;
                for (unsigned i = 0; i < k; ++i) factor *= falling(m[i], q[i]);
                if (factor == 0) continue;
                const MultiIndex target = mi_add(mi_sub(m, q), p);
                if (mi_size(target) <= sum.max_degree()) sum.add_coefficient(target, factor);
            }
        }
        guarantee = std::clamp<long>(guarantee, 0, static_cast<long>(f.body.max_degree()));

        std::vector<Rat> beta = f.weight_beta;
        for (unsigned i = 0; i < k; ++i) beta[i] += Rat(term.shift.beta[i]);
        std::optional<Rat> a;
        if (f.weight_a) a = *f.weight_a + Rat(term.shift.a);
        const unsigned degree = static_cast<unsigned>(guarantee);
        out.push_back(WeightedSeries{std::move(a), std::move(beta),
                                     f.weight_gamma + Rat(term.shift.gamma), degree,
                                     sum.truncated(degree)});
    }
    return out;
}

namespace {

struct ExpectedAction {
    LieOperator op;
    Rat factor;
    BasisParams shifted;
};

ExpectedAction expected_action(BasisFamily family, const std::string& name,
                               const BasisParams& params) {
    const unsigned k = static_cast<unsigned>(params.b.size());
    const auto index = [&](std::size_t pos) {
        const unsigned i = static_cast<unsigned>(std::stoul(name.substr(pos)));
        if (i < 1 || i > k) throw std::invalid_argument("operator index outside ground range");
        return i;
    };
    Rat bsum(0);
    for (const Rat& bi : params.b) bsum += bi;

    if (family == BasisFamily::HumbertPhi2) {
        if (name.size() >= 2 && name[0] == 'J') {
            const unsigned i = index(1);
            return {op_j_tilde(k, i), params.c + params.b[i - 1] - 1, params};
        }
        if (name.size() == 3 && name[0] == 'M') {
            const unsigned i = static_cast<unsigned>(name[1] - '0');
            const unsigned j = static_cast<unsigned>(name[2] - '0');
            if (i < 1 || i > k || j < 1 || j > k || i == j)
                throw std::invalid_argument("operator index outside ground range");
            BasisParams shifted = params;
            shifted.b[i - 1] += 1;
            shifted.b[j - 1] -= 1;
            return {op_mix(k, i, j), params.b[i - 1], shifted};
        }
        if (name.size() >= 3 && name[0] == 'E' && (name[1] == '+' || name[1] == '-')) {
            const unsigned i = index(2);
            BasisParams shifted = params;
            if (name[1] == '+') {
                shifted.b[i - 1] += 1;
                shifted.c += 1;
                return {op_raise(k, i), params.b[i - 1], shifted};
            }
            shifted.b[i - 1] -= 1;
            shifted.c -= 1;
            return {op_lower(k, i), Rat(1) - params.c, shifted};
        }
        throw std::invalid_argument("unknown operator name: " + name);
    }

    if (!params.a) throw std::invalid_argument("three-slot family needs the leading parameter");
    const Rat a = *params.a;
    if (name == "Ja") return {op_fd_j_a(k), Rat(2) * a - params.c, params};
    if (name == "Jc") return {op_fd_j_c(k), Rat(2) * params.c - a - bsum - 1, params};
    if (name.rfind("Jb", 0) == 0) {
        const unsigned i = index(2);
        return {op_fd_j_b(k, i), params.b[i - 1] + bsum - params.c, params};
    }
    if (name == "Ec") {
        if (params.c == 0) throw std::domain_error("parameter pole in predicted action");
        BasisParams shifted = params;
        shifted.c += 1;
        return {op_fd_e_c(k), (params.c - a) * (params.c - bsum) / params.c, shifted};
    }
    if (name.rfind("Eabc", 0) == 0) {
        const unsigned i = index(4);
        if (params.c == 0) throw std::domain_error("parameter pole in predicted action");
        BasisParams shifted = params;
        shifted.a = a + 1;
        shifted.b[i - 1] += 1;
        shifted.c += 1;
        return {op_fd_e_abc(k, i), a * params.b[i - 1] / params.c, shifted};
    }
    if (name.rfind("Eb", 0) == 0) {
        const unsigned i = index(2);
        BasisParams shifted = params;
        shifted.b[i - 1] += 1;
        return {op_fd_e_b(k, i), params.b[i - 1], shifted};
    }
    throw std::invalid_argument("unknown operator name: " + name);
}

}  // namespace

ActionReport verify_action(BasisFamily family, const std::string& op_name,
                           const BasisParams& params, unsigned D) {
    ExpectedAction expected = expected_action(family, op_name, params);
    const WeightedSeries f = build_basis_series(family, params, D);
    const std::vector<WeightedSeries> parts = apply(expected.op, f);
    if (parts.size() != 1)
        throw std::logic_error("named operator is not weight-homogeneous");
    const WeightedSeries& got = parts.front();
    const WeightedSeries want = build_basis_series(family, expected.shifted, D);

    ActionReport report;
    report.op_label = expected.op.label;
    report.checked_degree = std::min(got.degree, want.degree);
    report.max_abs_discrepancy = Rat(0);
    bool weights_match = got.weight_beta == want.weight_beta &&
                         got.weight_gamma == want.weight_gamma && got.weight_a == want.weight_a;
    for (const MultiIndex& m : multi_indices_up_to(f.body.arity(), report.checked_degree)) {
        const Rat diff = got.body.coefficient(m) - expected.factor * want.body.coefficient(m);
        report.max_abs_discrepancy = std::max(report.max_abs_discrepancy, rat_abs(diff));
    }
    report.pass = weights_match && report.max_abs_discrepancy == 0;
    return report;
}

namespace {

/// Flat exact coordinates of an operator: one coordinate per
/// (shift, x-power, derivative-power, symbol-exponent) combination.
using Coord = std::tuple<WeightShift, MultiIndex, MultiIndex, std::vector<unsigned>>;

std::map<Coord, Rat> operator_coords(const LieOperator& op) {
    std::map<Coord, Rat> out;
    for (const PrimitiveTerm& term : op.terms())
        for (const auto& [pq, coeff] : term.action)
            for (const auto& [e, c] : coeff.terms())
                out[{term.shift, pq.first, pq.second, e}] = c;
    return out;
}

/// Exact solve of A x = y requiring a unique solution; A is given row-wise.
std::vector<Rat> solve_unique(std::vector<std::vector<Rat>> A, std::vector<Rat> y,
                              unsigned cols) {
    const std::size_t rows = A.size();
    std::vector<long> pivot_row(cols, -1);
    std::size_t next = 0;
    for (unsigned col = 0; col < cols && next < rows; ++col) {
        std::size_t pr = rows;
        for (std::size_t r = next; r < rows; ++r)
            if (A[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr == rows) continue;
        std::swap(A[pr], A[next]);
        std::swap(y[pr], y[next]);
        const Rat piv = A[next][col];
        for (unsigned cc = col; cc < cols; ++cc) A[next][cc] /= piv;
        y[next] /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == next || A[r][col] == 0) continue;
            const Rat f = A[r][col];
            for (unsigned cc = col; cc < cols; ++cc) A[r][cc] -= f * A[next][cc];
            y[r] -= f * y[next];
        }
        pivot_row[col] = static_cast<long>(next);
        ++next;
    }
    for (unsigned col = 0; col < cols; ++col)
        if (pivot_row[col] < 0)
            throw std::logic_error("ambiguous expansion: basis coordinates are dependent");
    for (std::size_t r = next; r < rows; ++r)
        if (y[r] != 0) throw std::logic_error("bracket escapes the spanned algebra");
    std::vector<Rat> x(cols);
    for (unsigned col = 0; col < cols; ++col) x[col] = y[pivot_row[col]];
    return x;
}

}  // namespace

StructureConstants structure_constants(unsigned k) {
    if (k < 1 || k > 4) throw std::invalid_argument("ground size must be between 1 and 4");

    StructureConstants sc;
    sc.ground = k;
    for (unsigned i = 1; i <= k; ++i) {
        sc.basis.push_back(op_j_tilde(k, i));
        sc.labels.push_back(sc.basis.back().label);
    }
    for (unsigned i = 1; i <= k; ++i)
        for (unsigned j = 1; j <= k; ++j) {
            if (i == j) continue;
            sc.basis.push_back(op_mix(k, i, j));
            sc.labels.push_back(sc.basis.back().label);
        }
    for (unsigned i = 1; i <= k; ++i) {
        sc.basis.push_back(op_raise(k, i));
        sc.labels.push_back(sc.basis.back().label);
    }
    for (unsigned i = 1; i <= k; ++i) {
        sc.basis.push_back(op_lower(k, i));
        sc.labels.push_back(sc.basis.back().label);
    }
    const unsigned dim = sc.dimension();

    // Coordinates of the basis, and the row index of every coordinate key.
    std::vector<std::map<Coord, Rat>> basis_coords;
    std::map<Coord, std::size_t> row_of;
    for (const LieOperator& e : sc.basis) {
        basis_coords.push_back(operator_coords(e));
        for (const auto& [key, c] : basis_coords.back()) row_of.try_emplace(key, row_of.size());
    }
    std::vector<std::vector<Rat>> A(row_of.size(), std::vector<Rat>(dim, Rat(0)));
    for (unsigned col = 0; col < dim; ++col)
        for (const auto& [key, c] : basis_coords[col]) A[row_of.at(key)][col] = c;

    for (unsigned alpha = 0; alpha < dim; ++alpha)
        for (unsigned beta = alpha + 1; beta < dim; ++beta) {
            const LieOperator br = commutator(sc.basis[alpha], sc.basis[beta]);
            if (!bracket_action_verified(sc.basis[alpha], sc.basis[beta], br, 4))
                throw std::logic_error("bracket disagrees with its action composition");

            std::vector<Rat> rhs(row_of.size(), Rat(0));
            for (const auto& [key, c] : operator_coords(br)) {
                const auto hit = row_of.find(key);
                if (hit == row_of.end())
                    throw std::logic_error("bracket escapes the spanned algebra");
                rhs[hit->second] = c;
            }
            const std::vector<Rat> x = solve_unique(A, rhs, dim);

            LieOperator rebuilt(k);
            for (unsigned g = 0; g < dim; ++g) rebuilt += x[g] * sc.basis[g];
            if (!(rebuilt == br)) throw std::logic_error("bracket escapes the spanned algebra");

            std::map<unsigned, Rat> expansion, negated;
            for (unsigned g = 0; g < dim; ++g)
                if (x[g] != 0) {
                    expansion[g] = x[g];
                    negated[g] = -x[g];
                }
            if (!expansion.empty()) {
                sc.table[{alpha, beta}] = std::move(expansion);
                sc.table[{beta, alpha}] = std::move(negated);
            }
        }
    return sc;
}

bool antisymmetry_holds(const StructureConstants& sc) {
    const unsigned dim = sc.dimension();
    for (unsigned alpha = 0; alpha < dim; ++alpha) {
        if (sc.table.count({alpha, alpha})) return false;
        for (unsigned beta = 0; beta < dim; ++beta) {
            const auto ab = sc.table.find({alpha, beta});
            const auto ba = sc.table.find({beta, alpha});
            if ((ab == sc.table.end()) != (ba == sc.table.end())) return false;
            if (ab == sc.table.end()) continue;
            if (ab->second.size() != ba->second.size()) return false;
            for (const auto& [g, c] : ab->second) {
                const auto hit = ba->second.find(g);
                if (hit == ba->second.end() || hit->second != -c) return false;
            }
        }
    }
    return true;
}

bool jacobi_holds(const StructureConstants& sc) {
    const unsigned dim = sc.dimension();
    const auto expansion = [&sc](unsigned x, unsigned y) {
        static const std::map<unsigned, Rat> empty;
        const auto hit = sc.table.find({x, y});
        return hit == sc.table.end() ? &empty : &hit->second;
    };
    for (unsigned a = 0; a < dim; ++a)
        for (unsigned b = a + 1; b < dim; ++b)
            for (unsigned c = b + 1; c < dim; ++c) {
                std::map<unsigned, Rat> total;
                const auto accumulate = [&](unsigned x, unsigned y, unsigned z) {
                    for (const auto& [d, c1] : *expansion(x, y))
                        for (const auto& [e, c2] : *expansion(d, z)) total[e] += c1 * c2;
                };
                accumulate(a, b, c);
                accumulate(b, c, a);
                accumulate(c, a, b);
                for (const auto& [e, v] : total)
                    if (v != 0) return false;
            }
    return true;
}

std::vector<std::vector<Rat>> killing_matrix(const StructureConstants& sc) {
    const unsigned dim = sc.dimension();
    std::vector<std::vector<Rat>> K(dim, std::vector<Rat>(dim, Rat(0)));
    // Kimn = sum over j, d of c^d_{n j} c^j_{m d}.
    for (unsigned m = 0; m < dim; ++m)
        for (unsigned n = 0; n < dim; ++n)
            for (unsigned j = 0; j < dim; ++j) {
                const auto nj = sc.table.find({n, j});
                if (nj == sc.table.end()) continue;
                for (const auto& [d, c1] : nj->second) {
                    const auto md = sc.table.find({m, d});
                    if (md == sc.table.end()) continue;
                    const auto hit = md->second.find(j);
                    if (hit != md->second.end()) K[m][n] += c1 * hit->second;
                }
            }
    return K;
}

Rat killing_nondegeneracy(const StructureConstants& sc) {
    std::vector<std::vector<Rat>> K = killing_matrix(sc);
    const unsigned dim = sc.dimension();
    Rat det(1);
    for (unsigned col = 0; col < dim; ++col) {
        unsigned pr = dim;
        for (unsigned r = col; r < dim; ++r)
            if (K[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr == dim) return Rat(0);
        if (pr != col) {
            std::swap(K[pr], K[col]);
            det = -det;
        }
        det *= K[col][col];
        for (unsigned r = col + 1; r < dim; ++r) {
            if (K[r][col] == 0) continue;
            const Rat f = K[r][col] / K[col][col];
            for (unsigned cc = col; cc < dim; ++cc) K[r][cc] -= f * K[col][cc];
        }
    }
    return det;
}

EquivarianceReport permutation_equivariance(unsigned k, const Permutation& pi) {
    if (pi.size() != k || !pi.valid())
        throw std::invalid_argument("permutation does not act on the ground range");
    const StructureConstants sc = structure_constants(k);

    // Descriptors mirror the basis construction order.
    using Desc = std::tuple<char, unsigned, unsigned>;
    std::vector<Desc> descs;
    std::map<Desc, unsigned> index_of;
    for (unsigned i = 1; i <= k; ++i) descs.emplace_back('J', i, 0);
    for (unsigned i = 1; i <= k; ++i)
        for (unsigned j = 1; j <= k; ++j)
            if (i != j) descs.emplace_back('M', i, j);
    for (unsigned i = 1; i <= k; ++i) descs.emplace_back('+', i, 0);
    for (unsigned i = 1; i <= k; ++i) descs.emplace_back('-', i, 0);
    for (unsigned idx = 0; idx < descs.size(); ++idx) index_of[descs[idx]] = idx;

    const auto relabel = [&](unsigned i) { return pi.one_line[i - 1]; };
    std::vector<unsigned> sigma(descs.size());
    for (unsigned idx = 0; idx < descs.size(); ++idx) {
        const auto& [kind, i, j] = descs[idx];
        sigma[idx] = index_of.at(Desc{kind, relabel(i), j == 0 ? 0 : relabel(j)});
    }

    std::map<std::pair<unsigned, unsigned>, std::map<unsigned, Rat>> mapped;
    for (const auto& [key, expansion] : sc.table) {
        std::map<unsigned, Rat> image;
        for (const auto& [g, c] : expansion) image[sigma[g]] = c;
        mapped[{sigma[key.first], sigma[key.second]}] = std::move(image);
    }

    EquivarianceReport report;
    report.table_invariant = mapped == sc.table;
    for (unsigned i = 1; i <= k; ++i) report.diagonal_image.push_back(sigma[i - 1]);
    return report;
}

}  // namespace momenta
