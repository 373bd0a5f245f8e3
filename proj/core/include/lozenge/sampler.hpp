#pragma once

// Exact uniform sampling of tilings. Rows are drawn top-down with
// P(row m-1 = mu | row m = lambda) = dim(mu)/dim(lambda); coordinates within
// a row are drawn sequentially using multilinearity of the Vandermonde weight
// over the disjoint coordinate intervals (lambda_{j+1}, lambda_j], normalized
// by determinants of power sums.

#include <cstdint>
#include <vector>

#include "lozenge/oracle.hpp"
#include "lozenge/polygon.hpp"
#include "lozenge/rational.hpp"

namespace lozenge {

// Counter-based 64-bit generator (splitmix finalizer over seed/stream/counter);
// separate streams are independent for embarrassingly parallel sampling.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream = 0);
    std::uint64_t next_u64();
    double next_unit();  // in [0, 1)

private:
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

ParticleArray sample_array(const PolygonSpec& spec, CounterRng& rng);

struct SampleBatch {
    PolygonSpec spec;
    std::uint64_t seed = 0;
    std::vector<ParticleArray> arrays;
};

SampleBatch sample_batch(const PolygonSpec& spec, int n_samples, std::uint64_t seed,
                         int workers = 0);

// Probability the sampler assigns to one specific array: the product of the
// exact per-coordinate conditionals. Equals 1/count_tilings for every array.
Rational sample_probability(const PolygonSpec& spec, const ParticleArray& arr);

struct McMoment {
    double estimate = 0;
    double std_error = 0;
    int n_samples = 0;
};

// Plug-in centered-product estimator: exact means E h come from the kernel,
// not from sample means. Standard error by batch means.
McMoment mc_moments(const PolygonSpec& spec, const std::vector<LatticePoint>& points,
                    int n_samples, std::uint64_t seed, int workers = 0);

}  // namespace lozenge
