#include "momenta/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace momenta {

unsigned long mi_size(const MultiIndex& m) {
    unsigned long s = 0;
    for (unsigned v : m) s += v;
    return s;
}

Rat mi_factorial(const MultiIndex& m) {
    Rat r(1);
    for (unsigned v : m) r *= factorial(v);
    return r;
}

unsigned IntPartition::parts_count() const {
    unsigned r = 0;
    for (unsigned f : freq) r += f;
    return r;
}

std::vector<unsigned> IntPartition::parts_ascending() const {
    std::vector<unsigned> parts;
    for (unsigned i = 0; i < freq.size(); ++i)
        for (unsigned c = 0; c < freq[i]; ++c) parts.push_back(i + 1);
    return parts;
}

bool IntPartition::valid() const {
    if (freq.size() != n) return false;
    unsigned long total = 0;
    for (unsigned i = 0; i < freq.size(); ++i) total += static_cast<unsigned long>(i + 1) * freq[i];
    return total == n;
}

bool IntPartition::operator<(const IntPartition& other) const {
    if (n != other.n) return n < other.n;
    return freq < other.freq;
}

IntPartition partition_from_freq(std::vector<unsigned> freq, unsigned n) {
    freq.resize(n, 0);
    IntPartition p{std::move(freq), n};
    if (!p.valid()) throw std::domain_error("frequency vector does not partition n");
    return p;
}

IntPartition partition_from_parts(const std::vector<unsigned>& parts) {
    unsigned n = 0;
    for (unsigned p : parts) {
        if (p == 0) throw std::domain_error("partition with a zero part");
        n += p;
    }
    std::vector<unsigned> freq(n, 0);
    for (unsigned p : parts) ++freq[p - 1];
    return IntPartition{std::move(freq), n};
}

namespace {

void partitions_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& parts,
                    std::vector<IntPartition>& out) {
    if (remaining == 0) {
        out.push_back(partition_from_parts(parts));
        return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        parts.push_back(p);
        partitions_rec(remaining - p, p, parts, out);
        parts.pop_back();
    }
}

}  // namespace

std::vector<IntPartition> integer_partitions(unsigned n, std::optional<unsigned> r) {
    std::vector<IntPartition> all;
    if (n == 0) {
        if (!r || *r == 0) all.push_back(IntPartition{{}, 0});
        return all;
    }
    std::vector<unsigned> parts;
    partitions_rec(n, n, parts, all);
    if (r) {
        std::erase_if(all, [&](const IntPartition& p) { return p.parts_count() != *r; });
    }
    std::sort(all.begin(), all.end());
    return all;
}

unsigned SetPartition::ground_size() const {
    unsigned n = 0;
    for (const auto& b : blocks) n += static_cast<unsigned>(b.size());
    return n;
}

bool SetPartition::valid() const {
    const unsigned n = ground_size();
    std::vector<bool> seen(n + 1, false);
    unsigned prev_least = 0;
    for (const auto& b : blocks) {
        if (b.empty()) return false;
        if (!std::is_sorted(b.begin(), b.end())) return false;
        if (b.front() <= prev_least) return false;
        prev_least = b.front();
        for (unsigned e : b) {
            if (e < 1 || e > n || seen[e]) return false;
            seen[e] = true;
        }
    }
    return true;
}

std::vector<SetPartition> set_partitions(unsigned n) {
    if (n == 0) throw std::domain_error("set partitions require n >= 1");
    // Restricted-growth strings in lexicographic order: a[0] = 0 and
    // a[i] <= 1 + max(a[0..i-1]). Block j collects the elements with a[i] = j,
    // which automatically orders blocks by least element.
    std::vector<SetPartition> out;
    std::vector<unsigned> a(n, 0);
    auto emit = [&] {
        unsigned nblocks = 1 + *std::max_element(a.begin(), a.end());
        SetPartition p;
        p.blocks.assign(nblocks, {});
        for (unsigned i = 0; i < n; ++i) p.blocks[a[i]].push_back(i + 1);
        out.push_back(std::move(p));
    };
    // Iterative lexicographic successor on restricted-growth strings.
    while (true) {
        emit();
        int i = static_cast<int>(n) - 1;
        for (; i >= 1; --i) {
            unsigned prefix_max = 0;
            for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, a[j]);
            if (a[i] <= prefix_max) break;
        }
        if (i < 1) break;
        ++a[i];
        for (unsigned j = i + 1; j < n; ++j) a[j] = 0;
    }
    return out;
}

bool Permutation::valid() const {
    const unsigned n = size();
    std::vector<bool> seen(n + 1, false);
    for (unsigned v : one_line) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::vector<unsigned> Permutation::cycle_lengths() const {
    const unsigned n = size();
    std::vector<bool> visited(n + 1, false);
    std::vector<unsigned> lengths;
    for (unsigned start = 1; start <= n; ++start) {
        if (visited[start]) continue;
        unsigned len = 0, cur = start;
        while (!visited[cur]) {
            visited[cur] = true;
            cur = one_line[cur - 1];
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

Permutation Permutation::compose(const Permutation& other) const {
    Permutation r;
    r.one_line.resize(one_line.size());
    for (unsigned i = 0; i < one_line.size(); ++i) r.one_line[i] = one_line[other.one_line[i] - 1];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.one_line.resize(one_line.size());
    for (unsigned i = 0; i < one_line.size(); ++i) r.one_line[one_line[i] - 1] = i + 1;
    return r;
}

IntPartition shape_of(const SetPartition& p) {
    std::vector<unsigned> sizes;
    for (const auto& b : p.blocks) sizes.push_back(static_cast<unsigned>(b.size()));
    return partition_from_parts(sizes);
}

IntPartition shape_of(const Permutation& p) {
    return partition_from_parts(p.cycle_lengths());
}

Rat faa_di_bruno(const IntPartition& lambda) {
    Rat denom(1);
    for (unsigned i = 0; i < lambda.freq.size(); ++i) {
        if (lambda.freq[i] == 0) continue;
        denom *= pow_rat(factorial(i + 1), lambda.freq[i]) * factorial(lambda.freq[i]);
    }
    return factorial(lambda.n) / denom;
}

Rat multinomial_2nd(const IntPartition& lambda) {
    Rat denom(1);
    for (unsigned i = 0; i < lambda.freq.size(); ++i) {
        if (lambda.freq[i] == 0) continue;
        denom *= pow_rat(Rat(static_cast<long>(i + 1)), lambda.freq[i]) * factorial(lambda.freq[i]);
    }
    return factorial(lambda.n) / denom;
}

Rat multinomial_1st(const MultiIndex& m) {
    return multinomial(m);
}

Rat multiset_coeff(const Rat& alpha, unsigned n) {
    if (alpha <= 0) throw std::domain_error("multiset coefficient requires alpha > 0");
    return pochhammer(alpha, n) / factorial(n);
}

IntPartition multiindex_cycle_partition(const MultiIndex& m) {
    std::vector<unsigned> parts;
    for (unsigned v : m)
        if (v != 0) parts.push_back(v);
    return partition_from_parts(parts);
}

}  // namespace momenta
