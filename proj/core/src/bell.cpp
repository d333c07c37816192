#include "momenta/bell.hpp"

#include <numeric>
#include <stdexcept>

namespace momenta {

SparsePoly bell_partial(unsigned n, unsigned r) {
    if (r > n) throw std::domain_error("partial Bell polynomial requires r <= n");
    SparsePoly p(n);
    for (const auto& lambda : integer_partitions(n, r)) p.add_term(lambda.freq, faa_di_bruno(lambda));
    return p;
}

SparsePoly bell_complete(unsigned n) {
    SparsePoly p(n);
    for (const auto& lambda : integer_partitions(n)) p.add_term(lambda.freq, faa_di_bruno(lambda));
    return p;
}

SparsePoly touchard(unsigned n) {
    SparsePoly p(1);
    for (const auto& lambda : integer_partitions(n))
        p.add_term({lambda.parts_count()}, faa_di_bruno(lambda));
    return p;
}

SparsePoly cycle_index_sn(unsigned n) {
    SparsePoly p(n);
    const Rat norm = Rat(1) / factorial(n);
    for (const auto& lambda : integer_partitions(n)) p.add_term(lambda.freq, norm * multinomial_2nd(lambda));
    return p;
}

unsigned long CycleTypeMultiset::order() const {
    unsigned long total = 0;
    for (const auto& [type, count] : counts) total += count;
    return total;
}

CycleTypeMultiset CycleTypeMultiset::symmetric_group(unsigned n) {
    CycleTypeMultiset g;
    g.degree = n;
    for (const auto& lambda : integer_partitions(n)) {
        const Rat count = multinomial_2nd(lambda);
        g.counts[lambda] = count.get_num().get_ui();
    }
    return g;
}

CycleTypeMultiset CycleTypeMultiset::trivial_group(unsigned n) {
    CycleTypeMultiset g;
    g.degree = n;
    g.counts[partition_from_parts(std::vector<unsigned>(n, 1))] = 1;
    return g;
}

CycleTypeMultiset CycleTypeMultiset::cyclic_group(unsigned n) {
    if (n == 0) throw std::domain_error("cyclic group requires n >= 1");
    CycleTypeMultiset g;
    g.degree = n;
    // The power pi^j of an n-cycle splits into gcd(n,j) cycles of length n/gcd(n,j).
    for (unsigned j = 0; j < n; ++j) {
        const unsigned d = std::gcd(n, j);
        const unsigned len = n / d;
        std::vector<unsigned> parts(d, len);
        g.counts[partition_from_parts(parts)] += 1;
    }
    return g;
}

SparsePoly cycle_index_group(const CycleTypeMultiset& g) {
    const unsigned long size = g.order();
    if (size == 0) throw std::domain_error("cycle index of an empty census");
    SparsePoly p(g.degree);
    const Rat norm = Rat(1) / Rat(static_cast<unsigned long>(size));
    for (const auto& [type, count] : g.counts) {
        if (type.n != g.degree) throw std::domain_error("cycle type degree mismatch");
        p.add_term(type.freq, norm * Rat(count));
    }
    return p;
}

SparsePoly bell_star(unsigned n) {
    if (n == 0) throw std::domain_error("bell_star requires n >= 1");
    SparsePoly p(n);
    for (unsigned r = 1; r <= n; ++r) {
        const Rat coeff = (r % 2 == 1 ? Rat(1) : Rat(-1)) * factorial(r - 1);
        p += coeff * bell_partial(n, r);
    }
    return p;
}

Rat pattern_inventory(unsigned n, const std::vector<Rat>& s) {
    if (s.empty()) throw std::domain_error("pattern inventory requires a non-empty weight list");
    std::vector<Rat> power_sums(n, Rat(0));
    for (unsigned i = 1; i <= n; ++i)
        for (const Rat& w : s) power_sums[i - 1] += pow_rat(w, i);
    return cycle_index_sn(n).evaluate(power_sums);
}

}  // namespace momenta
