#include "momenta/moments.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace momenta {

namespace {

/// x^lambda with the 1-based sequence convention (part size s -> seq[s-1]).
Rat sequence_power(const std::vector<Rat>& seq, const IntPartition& lambda) {
    Rat prod = 1;
    for (unsigned i = 0; i < lambda.freq.size(); ++i) {
        if (lambda.freq[i] == 0) continue;
        prod *= pow_rat(seq[i], lambda.freq[i]);
    }
    return prod;
}

}  // namespace

std::vector<Rat> cumulants_to_moments(const std::vector<Rat>& kappa) {
    const unsigned N = static_cast<unsigned>(kappa.size());
    std::vector<Rat> raw(N);
    for (unsigned n = 1; n <= N; ++n) {
        Rat sum = 0;
        for (const IntPartition& lambda : integer_partitions(n)) {
            sum += faa_di_bruno(lambda) * sequence_power(kappa, lambda);
        }
        raw[n - 1] = sum;
    }
    return raw;
}

std::vector<Rat> moments_to_cumulants(const std::vector<Rat>& raw) {
    const unsigned N = static_cast<unsigned>(raw.size());
    std::vector<Rat> kappa(N);
    for (unsigned n = 1; n <= N; ++n) {
        Rat sum = 0;
        for (const IntPartition& lambda : integer_partitions(n)) {
            const unsigned r = lambda.parts_count();
            const Rat sign = (r % 2 == 1) ? 1 : -1;
            sum += sign * factorial(r - 1) * faa_di_bruno(lambda) *
                   sequence_power(raw, lambda);
        }
        kappa[n - 1] = sum;
    }
    return kappa;
}

std::vector<Rat> raw_to_central(const std::vector<Rat>& raw) {
    const unsigned N = static_cast<unsigned>(raw.size());
    std::vector<Rat> central(N);
    if (N == 0) return central;
    const Rat& mean = raw[0];
    for (unsigned n = 1; n <= N; ++n) {
        Rat sum = 0;
        for (unsigned k = 0; k <= n; ++k) {
            const Rat sign = ((n - k) % 2 == 0) ? 1 : -1;
            const Rat mk = (k == 0) ? Rat(1) : raw[k - 1];
            sum += binomial(n, k) * sign * pow_rat(mean, n - k) * mk;
        }
        central[n - 1] = sum;
    }
    return central;
}

std::vector<Rat> central_to_raw(const std::vector<Rat>& central, const Rat& mean) {
    const unsigned N = static_cast<unsigned>(central.size());
    if (N >= 1 && central[0] != 0) {
        throw std::domain_error("central_to_raw: first central moment must be zero");
    }
    std::vector<Rat> raw(N);
    for (unsigned n = 1; n <= N; ++n) {
        Rat sum = 0;
        for (unsigned k = 0; k <= n; ++k) {
            const Rat mk = (k == 0) ? Rat(1) : central[k - 1];
            sum += binomial(n, k) * pow_rat(mean, n - k) * mk;
        }
        raw[n - 1] = sum;
    }
    return raw;
}

namespace {

/// Shared validation for multivariate_cumulant; returns the positions of L in
/// ascending order.
std::vector<unsigned> checked_positions(const MultiMomentProvider& p,
                                        const std::vector<unsigned>& positions,
                                        const std::vector<unsigned>& selection,
                                        unsigned order_limit) {
    if (positions.empty()) {
        throw std::domain_error("multivariate_cumulant: empty position set");
    }
    if (positions.size() > order_limit) {
        throw std::domain_error("multivariate_cumulant: order limit exceeded");
    }
    std::vector<unsigned> sorted = positions;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("multivariate_cumulant: repeated position");
    }
    for (unsigned pos : sorted) {
        if (pos >= selection.size()) {
            throw std::invalid_argument("multivariate_cumulant: position out of range");
        }
    }
    for (unsigned slot : selection) {
        if (slot >= p.arity()) {
            throw std::invalid_argument("multivariate_cumulant: slot out of range");
        }
    }
    return sorted;
}

/// mu' of the sub-collection named by a bitmask over the sorted positions.
Rat masked_moment(const MultiMomentProvider& p,
                  const std::vector<unsigned>& sorted,
                  const std::vector<unsigned>& selection,
                  std::uint32_t mask) {
    if (mask == 0) return 1;
    MultiIndex m(p.arity(), 0);
    for (unsigned b = 0; b < sorted.size(); ++b) {
        if (mask & (std::uint32_t{1} << b)) ++m[selection[sorted[b]]];
    }
    return p.moment(m);
}

Rat cumulant_partition_sum(const MultiMomentProvider& p,
                           const std::vector<unsigned>& sorted,
                           const std::vector<unsigned>& selection) {
    const unsigned t = static_cast<unsigned>(sorted.size());
    // Walk the restricted-growth strings of [t] without materializing the
    // partitions; each string is one set partition of the position set.
    std::vector<unsigned> rgs(t, 0);
    std::vector<unsigned> cap(t, 0);  // cap[i] = 1 + max(rgs[0..i-1])
    for (unsigned i = 1; i < t; ++i) cap[i] = 1;
    Rat sum = 0;
    for (;;) {
        const unsigned r = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::uint32_t> block_mask(r, 0);
        for (unsigned i = 0; i < t; ++i) block_mask[rgs[i]] |= std::uint32_t{1} << i;
        Rat prod = ((r % 2 == 1) ? Rat(1) : Rat(-1)) * factorial(r - 1);
        for (std::uint32_t bm : block_mask) prod *= masked_moment(p, sorted, selection, bm);
        sum += prod;

        // Lexicographic successor of the growth string.
        unsigned i = t;
        while (i-- > 1) {
            if (rgs[i] < cap[i]) break;
        }
        if (i == 0) break;
        ++rgs[i];
        for (unsigned j = i + 1; j < t; ++j) {
            rgs[j] = 0;
            cap[j] = std::max(cap[j - 1], rgs[j - 1] + 1);
        }
    }
    return sum;
}

Rat cumulant_recursion(const MultiMomentProvider& p,
                       const std::vector<unsigned>& sorted,
                       const std::vector<unsigned>& selection) {
    const unsigned t = static_cast<unsigned>(sorted.size());
    const std::uint32_t full = (t == 32) ? ~std::uint32_t{0}
                                         : ((std::uint32_t{1} << t) - 1);
    std::vector<std::optional<Rat>> memo(std::size_t{1} << t);
    struct Solver {
        const MultiMomentProvider& p;
        const std::vector<unsigned>& sorted;
        const std::vector<unsigned>& selection;
        std::vector<std::optional<Rat>>& memo;

        const Rat& kappa(std::uint32_t mask) {
            auto& slot = memo[mask];
            if (slot) return *slot;
            Rat value = masked_moment(p, sorted, selection, mask);
            const std::uint32_t low = mask & (~mask + 1);
            const std::uint32_t rest = mask ^ low;
            // Peel every proper subset containing the least position.
            for (std::uint32_t s = rest;; s = (s - 1) & rest) {
                if (s != rest) {
                    value -= kappa(low | s) *
                             masked_moment(p, sorted, selection, mask ^ (low | s));
                }
                if (s == 0) break;
            }
            slot = std::move(value);
            return *slot;
        }
    } solver{p, sorted, selection, memo};
    return solver.kappa(full);
}

}  // namespace

Rat multivariate_cumulant(const MultiMomentProvider& p,
                          const std::vector<unsigned>& positions,
                          const std::vector<unsigned>& selection,
                          CumulantPath path,
                          unsigned order_limit) {
    const std::vector<unsigned> sorted =
        checked_positions(p, positions, selection, std::min(order_limit, 20u));
    if (path == CumulantPath::PartitionSum) {
        return cumulant_partition_sum(p, sorted, selection);
    }
    return cumulant_recursion(p, sorted, selection);
}

Rat multivariate_raw_central(const MultiMomentProvider& p,
                             const MultiIndex& m,
                             MomentDirection direction,
                             const std::vector<Rat>& mean) {
    const unsigned k = p.arity();
    if (m.size() != k) {
        throw std::invalid_argument("multivariate_raw_central: index arity mismatch");
    }
    std::vector<Rat> mu1(k);
    if (direction == MomentDirection::RawToCentral) {
        for (unsigned i = 0; i < k; ++i) {
            MultiIndex e(k, 0);
            e[i] = 1;
            mu1[i] = p.moment(e);
        }
    } else {
        if (mean.size() != k) {
            throw std::invalid_argument("multivariate_raw_central: mean vector required");
        }
        mu1 = mean;
    }

    Rat sum = 0;
    MultiIndex j(k, 0);
    for (;;) {
        Rat term = p.moment(j);
        unsigned long defect = 0;
        for (unsigned i = 0; i < k; ++i) {
            term *= binomial(m[i], j[i]) * pow_rat(mu1[i], m[i] - j[i]);
            defect += m[i] - j[i];
        }
        if (direction == MomentDirection::RawToCentral && defect % 2 == 1) {
            term = -term;
        }
        sum += term;

        // Odometer step through 0 <= j <= m.
        unsigned i = 0;
        while (i < k && j[i] == m[i]) {
            j[i] = 0;
            ++i;
        }
        if (i == k) break;
        ++j[i];
    }
    return sum;
}

}  // namespace momenta
