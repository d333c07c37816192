#include <momenta/egf.hpp>
#include <momenta/moments.hpp>
#include <momenta/rational.hpp>
#include <momenta/rng.hpp>

#include <vector>

#include "doctest.h"
#include "test_support.hpp"

using namespace momenta;

namespace {

/// Joint moments of a finite rational random vector given by atoms and
/// weights; exact by direct summation.
class AtomicProvider : public MultiMomentProvider {
public:
    AtomicProvider(std::vector<std::vector<Rat>> atoms, std::vector<Rat> weights)
        : atoms_(std::move(atoms)), weights_(std::move(weights)) {}

    unsigned arity() const override {
        return static_cast<unsigned>(atoms_.front().size());
    }

    Rat moment(const MultiIndex& m) const override {
        Rat total(0);
        for (std::size_t a = 0; a < atoms_.size(); ++a) {
            Rat term = weights_[a];
            for (std::size_t i = 0; i < m.size(); ++i)
                term *= pow_rat(atoms_[a][i], static_cast<long>(m[i]));
            total += term;
        }
        return total;
    }

private:
    std::vector<std::vector<Rat>> atoms_;
    std::vector<Rat> weights_;
};

/// Univariate moments served through the multivariate interface.
class SequenceProvider : public MultiMomentProvider {
public:
    explicit SequenceProvider(std::vector<Rat> raw) : raw_(std::move(raw)) {}
    unsigned arity() const override { return 1; }
    Rat moment(const MultiIndex& m) const override {
        return m[0] == 0 ? Rat(1) : raw_[m[0] - 1];
    }

private:
    std::vector<Rat> raw_;  // raw_[j] is the moment of order j+1
};

}  // namespace

TEST_CASE("moment-cumulant conversion round trips") {
    Rng rng(101);
    for (int trial = 0; trial < 3; ++trial) {
        const std::vector<Rat> kappa = testsupport::draw_rats(rng, 10);
        const std::vector<Rat> raw = cumulants_to_moments(kappa);
        CHECK(moments_to_cumulants(raw) == kappa);

        const std::vector<Rat> raw2 = testsupport::draw_rats(rng, 10);
        CHECK(cumulants_to_moments(moments_to_cumulants(raw2)) == raw2);
    }
}

TEST_CASE("known conversion values") {
    // Cumulants all 1 belong to the unit-rate count distribution, whose raw
    // moments are the set-partition counts.
    const std::vector<Rat> raw =
        cumulants_to_moments({Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
    CHECK(raw == std::vector<Rat>{Rat(1), Rat(2), Rat(5), Rat(15), Rat(52)});
}

TEST_CASE("cumulants scale homogeneously") {
    Rng rng(102);
    const Rat c = testsupport::draw_rat(rng, true);
    const std::vector<Rat> raw = testsupport::draw_rats(rng, 8);
    const std::vector<Rat> kappa = moments_to_cumulants(raw);

    std::vector<Rat> scaled_raw(raw);
    Rat power(1);
    for (std::size_t n = 0; n < scaled_raw.size(); ++n) {
        power *= c;
        scaled_raw[n] *= power;
    }
    const std::vector<Rat> scaled_kappa = moments_to_cumulants(scaled_raw);
    power = Rat(1);
    for (std::size_t n = 0; n < kappa.size(); ++n) {
        power *= c;
        CHECK(scaled_kappa[n] == kappa[n] * power);
    }
}

TEST_CASE("cumulants add under convolution") {
    Rng rng(103);
    const unsigned D = 8;
    const std::vector<Rat> raw_x = testsupport::draw_rats(rng, D);
    const std::vector<Rat> raw_y = testsupport::draw_rats(rng, D);

    // Moments of the sum of independent variables: binomial convolution of
    // the moment sequences.
    EgfSeries mx(D), my(D);
    mx[0] = my[0] = Rat(1);
    for (unsigned n = 1; n <= D; ++n) {
        mx[n] = raw_x[n - 1];
        my[n] = raw_y[n - 1];
    }
    const EgfSeries msum = egf_mul(mx, my);
    std::vector<Rat> raw_sum;
    for (unsigned n = 1; n <= D; ++n) raw_sum.push_back(msum[n]);

    const std::vector<Rat> kx = moments_to_cumulants(raw_x);
    const std::vector<Rat> ky = moments_to_cumulants(raw_y);
    const std::vector<Rat> ks = moments_to_cumulants(raw_sum);
    for (unsigned n = 0; n < D; ++n) CHECK(ks[n] == kx[n] + ky[n]);
}

TEST_CASE("only the first cumulant feels a shift") {
    Rng rng(104);
    const unsigned D = 8;
    const Rat c = testsupport::draw_rat(rng, true);
    const std::vector<Rat> raw = testsupport::draw_rats(rng, D);

    // Moments of X + c via convolution with the deterministic sequence c^n.
    EgfSeries mx(D), mc(D);
    mx[0] = mc[0] = Rat(1);
    Rat power(1);
    for (unsigned n = 1; n <= D; ++n) {
        mx[n] = raw[n - 1];
        power *= c;
        mc[n] = power;
    }
    const EgfSeries shifted = egf_mul(mx, mc);
    std::vector<Rat> raw_shifted;
    for (unsigned n = 1; n <= D; ++n) raw_shifted.push_back(shifted[n]);

    const std::vector<Rat> kappa = moments_to_cumulants(raw);
    const std::vector<Rat> kappa_shifted = moments_to_cumulants(raw_shifted);
    CHECK(kappa_shifted[0] == kappa[0] + c);
    for (unsigned n = 1; n < D; ++n) CHECK(kappa_shifted[n] == kappa[n]);
}

TEST_CASE("raw and central moments convert both ways") {
    Rng rng(105);
    const std::vector<Rat> raw = testsupport::draw_rats(rng, 8);
    const std::vector<Rat> central = raw_to_central(raw);
    CHECK(central[0] == Rat(0));
    CHECK(central_to_raw(central, raw[0]) == raw);
}

TEST_CASE("joint cumulants of repeated slots reduce to the univariate values") {
    Rng rng(106);
    const std::vector<Rat> raw = testsupport::draw_rats(rng, 6);
    const SequenceProvider provider(raw);
    const std::vector<Rat> kappa = moments_to_cumulants(raw);

    for (unsigned n = 1; n <= 6; ++n) {
        std::vector<unsigned> positions, selection;
        for (unsigned i = 0; i < n; ++i) {
            positions.push_back(i);
            selection.push_back(0);
        }
        CHECK(multivariate_cumulant(provider, positions, selection) ==
              kappa[n - 1]);
    }
}

TEST_CASE("both joint cumulant paths agree") {
    Rng rng(107);
    std::vector<std::vector<Rat>> atoms;
    std::vector<Rat> weights;
    Rat total(0);
    for (int a = 0; a < 4; ++a) {
        atoms.push_back(testsupport::draw_rats(rng, 3));
        const Rat w = testsupport::draw_positive_rat(rng);
        weights.push_back(w);
        total += w;
    }
    for (auto& w : weights) w /= total;
    const AtomicProvider provider(atoms, weights);

    for (unsigned n = 1; n <= 6; ++n) {
        std::vector<unsigned> positions, selection;
        for (unsigned i = 0; i < n; ++i) {
            positions.push_back(i);
            selection.push_back(i % 3);
        }
        const Rat via_sum = multivariate_cumulant(provider, positions, selection,
                                                  CumulantPath::PartitionSum);
        const Rat via_rec = multivariate_cumulant(provider, positions, selection,
                                                  CumulantPath::Recursion);
        CHECK(via_sum == via_rec);
    }
}

TEST_CASE("mixed cumulants of independent slots vanish") {
    // Product law: joint moments factor across slots, so any cumulant
    // involving both slots is zero.
    class ProductProvider : public MultiMomentProvider {
    public:
        unsigned arity() const override { return 2; }
        Rat moment(const MultiIndex& m) const override {
            // First slot: moments of a fair +-1 coin; second slot: moments
            // of the two-point law on {1, 3}.
            const Rat first = m[0] % 2 == 0 ? Rat(1) : Rat(0);
            const Rat second =
                (pow_rat(Rat(1), m[1]) + pow_rat(Rat(3), m[1])) / 2;
            return first * second;
        }
    } provider;

    for (unsigned a = 1; a <= 3; ++a) {
        for (unsigned b = 1; b <= 3; ++b) {
            std::vector<unsigned> positions, selection;
            for (unsigned i = 0; i < a + b; ++i) positions.push_back(i);
            for (unsigned i = 0; i < a; ++i) selection.push_back(0);
            for (unsigned i = 0; i < b; ++i) selection.push_back(1);
            CHECK(multivariate_cumulant(provider, positions, selection) ==
                  Rat(0));
        }
    }
}

TEST_CASE("multivariate raw-central transform round trips") {
    Rng rng(108);
    std::vector<std::vector<Rat>> atoms;
    std::vector<Rat> weights{rat(1, 2), rat(1, 4), rat(1, 4)};
    for (int a = 0; a < 3; ++a) atoms.push_back(testsupport::draw_rats(rng, 2));
    const AtomicProvider provider(atoms, weights);

    const std::vector<Rat> mean{provider.moment({1, 0}), provider.moment({0, 1})};

    // Central moments from raw ones, served back to recover the raw values.
    class CentralProvider : public MultiMomentProvider {
    public:
        CentralProvider(const MultiMomentProvider& raw, unsigned degree)
            : raw_(raw), degree_(degree) {}
        unsigned arity() const override { return raw_.arity(); }
        Rat moment(const MultiIndex& m) const override {
            return multivariate_raw_central(raw_, m,
                                            MomentDirection::RawToCentral);
        }

    private:
        const MultiMomentProvider& raw_;
        unsigned degree_;
    };
    const CentralProvider central(provider, 4);

    for (unsigned i = 0; i <= 3; ++i) {
        for (unsigned j = 0; j + i <= 3; ++j) {
            const MultiIndex m{i, j};
            const Rat back = multivariate_raw_central(
                central, m, MomentDirection::CentralToRaw, mean);
            CHECK(back == provider.moment(m));
        }
    }
    // First central moments vanish.
    CHECK(central.moment({1, 0}) == Rat(0));
    CHECK(central.moment({0, 1}) == Rat(0));
}
