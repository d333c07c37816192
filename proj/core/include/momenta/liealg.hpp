#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "momenta/combinatorics.hpp"
#include "momenta/mvseries.hpp"
#include "momenta/polynomial.hpp"
#include "momenta/rational.hpp"

namespace momenta {

/// Integer shift applied to the carried weight of a series: entries for the
/// k central parameters, the trailing parameter, and the optional leading
/// parameter of the three-slot family.
struct WeightShift {
    std::vector<long> beta;
    long gamma = 0;
    long a = 0;
    friend auto operator<=>(const WeightShift&, const WeightShift&) = default;
};

/// One weight-homogeneous summand of an operator: a finite sum of
/// differential monomials coeff * x^p d^q sharing a single weight shift.
/// Coefficients are exact polynomials in the weight symbols.
struct PrimitiveTerm {
    WeightShift shift;
    std::map<std::pair<MultiIndex, MultiIndex>, SparsePoly> action;
    friend bool operator==(const PrimitiveTerm&, const PrimitiveTerm&) = default;
};

/// Raising/lowering operator on weighted series, kept normalized: one
/// primitive term per weight shift, sorted, zero coefficients dropped.
/// Weight symbols are (b_1..b_k, c), preceded by an a-slot for the
/// three-parameter family; `label` is display-only bookkeeping.
class LieOperator {
public:
    explicit LieOperator(unsigned ground, bool with_a_slot = false)
        : ground_(ground), a_slot_(with_a_slot) {}

    unsigned ground() const { return ground_; }
    bool has_a_slot() const { return a_slot_; }
    unsigned symbol_arity() const { return ground_ + (a_slot_ ? 2u : 1u); }
    const std::vector<PrimitiveTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds coeff * x^p d^q at the given weight shift.
    void add_monomial(const WeightShift& shift, const MultiIndex& x_pow,
                      const MultiIndex& d_pow, const SparsePoly& coeff);

    LieOperator operator-() const;
    LieOperator& operator+=(const LieOperator& rhs);
    LieOperator& operator-=(const LieOperator& rhs);
    LieOperator& operator*=(const Rat& c);
    friend LieOperator operator+(LieOperator lhs, const LieOperator& rhs) { return lhs += rhs; }
    friend LieOperator operator-(LieOperator lhs, const LieOperator& rhs) { return lhs -= rhs; }
    friend LieOperator operator*(LieOperator op, const Rat& c) { return op *= c; }
    friend LieOperator operator*(const Rat& c, LieOperator op) { return op *= c; }
    friend bool operator==(const LieOperator& x, const LieOperator& y) {
        return x.ground_ == y.ground_ && x.a_slot_ == y.a_slot_ && x.terms_ == y.terms_;
    }

    std::string label;

private:
    unsigned ground_;
    bool a_slot_;
    std::vector<PrimitiveTerm> terms_;

    void normalize();
};

/// Operator product a∘b, normal-ordered: b's weight shift is pushed through
/// a's weight-reading coefficients exactly.
LieOperator compose(const LieOperator& a, const LieOperator& b);

/// Bracket [a,b] = a∘b − b∘a in normalized primitive-term form.
LieOperator commutator(const LieOperator& a, const LieOperator& b);

// Two-slot family basis, 1-based indices: the k diagonal operators, the
// k(k-1) parameter-exchange operators, and the k raising / k lowering pairs.
LieOperator op_j_tilde(unsigned k, unsigned i);
LieOperator op_mix(unsigned k, unsigned i, unsigned j);
LieOperator op_raise(unsigned k, unsigned i);
LieOperator op_lower(unsigned k, unsigned i);

// Weight-homogeneous operators of the three-slot family.
LieOperator op_fd_e_b(unsigned k, unsigned i);
LieOperator op_fd_e_c(unsigned k);
LieOperator op_fd_e_abc(unsigned k, unsigned i);
LieOperator op_fd_j_a(unsigned k);
LieOperator op_fd_j_b(unsigned k, unsigned i);
LieOperator op_fd_j_c(unsigned k);

/// Exact action on the monomial x^m: resulting pieces keyed by weight shift
/// and target monomial, coefficients polynomial in the weight symbols.
std::map<WeightShift, std::map<MultiIndex, SparsePoly>> monomial_action(const LieOperator& op,
                                                                        const MultiIndex& m);

/// Compares the normal-ordered bracket against the action-level composition
/// difference on every monomial of total degree <= degree; true when the two
/// routes agree exactly (symbolic weights throughout).
bool bracket_action_verified(const LieOperator& a, const LieOperator& b,
                             const LieOperator& bracket, unsigned degree);

enum class BasisFamily { HumbertPhi2, LauricellaFd };

/// Generic parameters of a basis series; `a` is used by the three-slot
/// family only.
struct BasisParams {
    std::optional<Rat> a;
    std::vector<Rat> b;
    Rat c;
};

/// Hypergeometric basis series with its carried weight and the total degree
/// up to which the stored body is guaranteed correct.
struct WeightedSeries {
    std::optional<Rat> weight_a;
    std::vector<Rat> weight_beta;
    Rat weight_gamma;
    unsigned degree = 0;
    TruncSeriesMV body;
};

/// Truncated series of the named family; coefficient of x^m is the usual
/// Pochhammer ratio. Throws std::domain_error on pole parameters.
WeightedSeries build_basis_series(BasisFamily family, const BasisParams& params, unsigned D);

/// Applies the operator with the series' numeric weights substituted for the
/// symbols; one output per weight shift (empty for the zero operator). Each
/// part records its own guaranteed degree: differential monomials lowering
/// x-degree cost one guaranteed degree apiece.
std::vector<WeightedSeries> apply(const LieOperator& op, const WeightedSeries& f);

struct ActionReport {
    std::string op_label;
    unsigned checked_degree = 0;
    Rat max_abs_discrepancy;
    bool pass = false;
};

/// Checks the closed-form action of the named operator on a basis series:
/// apply(op, f_params) must equal the predicted scalar times the predicted
/// shifted basis series, coefficient by coefficient. Operator names:
/// "J<i>", "M<i><j>", "E+<i>", "E-<i>" (two-slot family); "Ja", "Jb<i>",
/// "Jc", "Eb<i>", "Ec", "Eabc<i>" (three-slot family).
ActionReport verify_action(BasisFamily family, const std::string& op_name,
                           const BasisParams& params, unsigned D);

/// Bracket table of the two-slot basis: table[{α,β}] expands [e_α,e_β] in
/// the same basis (sparse, index -> coefficient).
struct StructureConstants {
    unsigned ground = 0;
    std::vector<std::string> labels;
    std::vector<LieOperator> basis;
    std::map<std::pair<unsigned, unsigned>, std::map<unsigned, Rat>> table;

    unsigned dimension() const { return static_cast<unsigned>(labels.size()); }
};

/// Computes all brackets of the two-slot basis and expands them in that
/// basis by exact linear solve over the monomial-action coordinates.
/// Non-closure or an ambiguous expansion is a hard error (std::logic_error).
StructureConstants structure_constants(unsigned k);

bool antisymmetry_holds(const StructureConstants& sc);
bool jacobi_holds(const StructureConstants& sc);

/// Killing form matrix K_{αβ} = tr(ad e_α ∘ ad e_β) from the bracket table.
std::vector<std::vector<Rat>> killing_matrix(const StructureConstants& sc);

/// Determinant of the Killing form matrix; nonzero certifies semisimplicity
/// at this dimension.
Rat killing_nondegeneracy(const StructureConstants& sc);

struct EquivarianceReport {
    bool table_invariant = false;
    /// Basis index each diagonal operator is carried to by the relabeling.
    std::vector<unsigned> diagonal_image;
};

/// Relabels ground indices by the permutation and checks that the bracket
/// table is carried to itself (table isomorphism).
EquivarianceReport permutation_equivariance(unsigned k, const Permutation& pi);

}  // namespace momenta
