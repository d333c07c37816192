#pragma once

#include "support.hpp"

#include <string>
#include <vector>

namespace cli {

/// One verification row: an identity or statistical comparison, whether it
/// held, and the observed discrepancy (exact rational for symbolic checks,
/// worst z-score or absolute error for sampled ones; serialized as text).
struct CheckRow {
    std::string name;
    bool pass = false;
    std::string discrepancy = "0";
    std::string detail;  ///< optional context, e.g. "dim 8"
};

/// Exact identity suite: polynomial dualities, moment formulas on the
/// simplex, transform routes, and the exact mass-biasing identity. Every
/// discrepancy is a rational computed symbolically; pass means exactly 0.
std::vector<CheckRow> run_identities(const Config& cfg);

/// Seeded sampler suite: empirical moments of the three random-measure
/// samplers against closed forms, the sampled mass-biasing identity, and
/// the charge/simplex decoupling. Pass means |z| below cfg.tolerance.
std::vector<CheckRow> run_montecarlo(const Config& cfg);

/// Inner-product suite: coherent/general agreement, the order-raising
/// recursion, diagonal strata, orthogonality of stochastic integrals, and
/// the particle-weight identities. All exact.
std::vector<CheckRow> run_fock(const Config& cfg);

/// Operator algebra suite at ground size k and truncation degree D:
/// closed-form actions of every generator on the hypergeometric bases,
/// bracket closure, structure constants, and relabeling equivariance.
std::vector<CheckRow> run_liealg(const Config& cfg, unsigned k, unsigned D);

/// Assemble rows into the report document {checks, passed, failed}.
Json report_from_rows(const std::vector<CheckRow>& rows);

}  // namespace cli
