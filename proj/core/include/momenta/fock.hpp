#pragma once

// Chaos-level constructions on a finite ground space: contractions of
// symmetric tensors, the extended inner product whose coherent values are
// Gamma-law moments, recursive identities for that form, multiple stochastic
// integrals of the compensated Poisson measure for disjoint product
// functions, diagonal decompositions of tensor integrals, and the Pascal /
// negative-binomial weight utilities. All scalars are real, so conjugation
// is the identity throughout.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "momenta/combinatorics.hpp"
#include "momenta/random_measures.hpp"
#include "momenta/rational.hpp"

namespace momenta {

/// A function of `order` ground points with rational values, keyed by the
/// argument tuple (entries are 0-based ground points). States built through
/// `set` are symmetric by construction: keys are stored sorted and `value`
/// falls back to the sorted key, so lookups may use any argument order.
/// Contractions of mixed block sizes are genuinely asymmetric; they store
/// one entry per ordered tuple instead, which the exact-key lookup serves.
class SymTensor {
public:
    SymTensor(unsigned order, unsigned ground_size)
        : order_(order), ground_size_(ground_size) {}

    unsigned order() const { return order_; }
    unsigned ground_size() const { return ground_size_; }
    const std::map<std::vector<unsigned>, Rat>& values() const { return values_; }

    /// Set the value on the orbit of `point` (key is canonicalized by
    /// sorting). Entries must be ground points below ground_size.
    void set(std::vector<unsigned> point, const Rat& c);

    /// Value at an argument tuple: exact key first, then its sorted orbit
    /// representative; 0 when absent.
    Rat value(const std::vector<unsigned>& point) const;

    /// The coherent state f^{(x_1)} ... f^{(x_n)} |-> prod_i f(x_i).
    static SymTensor coherent(unsigned ground_size, unsigned order,
                              const TestFunction& f);

    /// Raw keyed storage for asymmetric tables (used by contractions).
    void set_raw(std::vector<unsigned> point, const Rat& c);

private:
    unsigned order_;
    unsigned ground_size_;
    std::map<std::vector<unsigned>, Rat> values_;
};

/// The contraction of an order-n tensor along a partition of n: blocks are
/// laid out by increasing part size, and the b-th block repeats its variable
/// (part size) times, so e.g. the all-singletons partition returns the
/// tensor unchanged and the one-block partition restricts to the main
/// diagonal. The result is a function of |lambda| variables, tabulated on
/// every ordered tuple.
SymTensor contract(const SymTensor& phi, const IntPartition& lambda);

/// Extended inner product of coherent states: the n-th Gamma-law moment of
/// the pointwise product, n! * Z_n[<(phi psi)^i>_sigma].
Rat ext_inner_coherent(const FiniteMeasure& sigma, const TestFunction& phi,
                       const TestFunction& psi, unsigned long n);

/// Extended inner product of two arbitrary states of equal order n:
///   sum over partitions lambda of n of
///     #{permutations with cycle type lambda} * <phi_lambda psi_lambda>
/// with the contracted product integrated over sigma^{(x) |lambda|}.
/// Reduces to ext_inner_coherent on coherent tensors; for states vanishing
/// on all diagonals only the all-singletons term survives, recovering the
/// plain tensor inner product.
Rat ext_inner_general(const FiniteMeasure& sigma, const SymTensor& phi,
                      const SymTensor& psi);

/// Both sides of the recursion lifting the extended inner product one order:
///   <phi^{(n+1)}, psi^{(n+1)}> =
///     sum_k C(n,k) <phi^{(k)}, psi^{(k)}> <phi^{n-k+1} psi^{n-k+1}>_sigma.
std::pair<Rat, Rat> recursive_identity_check(const FiniteMeasure& sigma,
                                             const TestFunction& phi,
                                             const TestFunction& psi,
                                             unsigned long n);

/// Product function f_1 (x) ... (x) f_n whose factors have pairwise
/// sigma-disjoint supports; the dense class on which multiple stochastic
/// integrals factorize.
struct DisjointProductFunction {
    std::vector<TestFunction> factors;

    std::size_t order() const { return factors.size(); }
};

/// Throws std::domain_error unless the factors have pairwise disjoint
/// supports modulo sigma-null sets (and matching ground size).
void require_disjoint(const FiniteMeasure& sigma, const DisjointProductFunction& f);

/// Multiple stochastic integral of n! f^{sym} against the compensated
/// measure p - sigma, evaluated at the outcome with the given point counts:
/// the alternating binomial sum over contractions, which for disjoint
/// factors collapses to n! * prod_i (p(f_i) - sigma(f_i)).
Rat msi_compensated(const FiniteMeasure& sigma, const DisjointProductFunction& f,
                    const MultiIndex& counts);
/// Same evaluation at a floating sampler row.
double msi_compensated(const FiniteMeasure& sigma, const DisjointProductFunction& f,
                       const std::vector<double>& row);

/// Exact expectation E[ I_n(f) * I_m(g) ] over the Poisson law of intensity
/// sigma, computed through the moment algebra of the independent centered
/// point counts. Zero whenever n != m; n! times the symmetrized kernel norm
/// on the diagonal.
Rat msi_orthogonality(const FiniteMeasure& sigma, const DisjointProductFunction& f,
                      const DisjointProductFunction& g);

struct DiagonalDecomposition {
    Rat total;  // <phi>_{rho^{(x) n}}, the unrestricted tensor integral
    /// Per partition lambda: (number of set partitions of that shape) times
    /// the integral of the contraction over tuples of pairwise-distinct
    /// points, each block weighted by rho^{block size}. Sums to `total`.
    std::map<IntPartition, Rat> parts;
};

/// Split the tensor integral of a symmetric state over rho^{(x) n} into its
/// diagonal strata.
DiagonalDecomposition diagonal_decomposition(const FiniteMeasure& rho,
                                             const SymTensor& phi);

/// n! * ((1 - alpha) / alpha^2)^n, the n-particle weight of the Pascal
/// one-mode interacting Fock space. Requires r > 0 and 0 < alpha < 1.
Rat pascal_fock_weight(const Rat& r, const Rat& alpha, unsigned long n);

/// Negative-binomial mass alpha^r * multiset(r, m) * (1 - alpha)^m at m.
/// Exact values need an integer number of successes r >= 1; 0 < alpha < 1.
Rat negative_binomial_pmf(const Rat& r, const Rat& alpha, unsigned long m);

}  // namespace momenta
