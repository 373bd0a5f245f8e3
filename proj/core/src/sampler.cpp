#include "lozenge/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "lozenge/kernel.hpp"

namespace lozenge {

namespace {

inline std::uint64_t splitmix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    if (const char* env = std::getenv("LOZENGE_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Power sums sum_{v in (lo, hi]} v^t for t = 0..deg.
std::vector<BigInt> power_sums(long lo, long hi, int deg) {
    std::vector<BigInt> s(deg + 1, BigInt(0));
    for (long v = lo + 1; v <= hi; ++v) {
        BigInt p = 1;
        for (int t = 0; t <= deg; ++t) {
            s[t] += p;
            p *= v;
        }
    }
    return s;
}

// Row [v^deg, ..., v, 1]: with coordinates listed in decreasing order the
// determinant is the positive Vandermonde product.
std::vector<BigInt> powers_of(long v, int deg) {
    std::vector<BigInt> r(deg + 1);
    BigInt p = 1;
    for (int t = deg; t >= 0; --t) {
        r[t] = p;
        p *= v;
    }
    return r;
}

// One row-sampling step. Given level-(m) row `upper` (length m >= 2), draws
// the interlacing row of length m-1 with probability proportional to its
// Vandermonde product. When `forced` is non-null no randomness is used and
// the exact probability of that outcome is accumulated into *prob_out.
std::vector<long> draw_row(const std::vector<long>& upper, CounterRng* rng,
                           const std::vector<long>* forced, Rational* prob_out) {
    const int m = static_cast<int>(upper.size()) - 1;  // row length to draw
    if (m == 0) return {};
    const int deg = m - 1;

    // M holds one row per coordinate: fixed rows are power vectors of chosen
    // values, undecided rows are power sums over their whole interval.
    std::vector<std::vector<BigInt>> M(m, std::vector<BigInt>(m));
    for (int j = 0; j < m; ++j) {
        auto s = power_sums(upper[j + 1], upper[j], deg);
        for (int t = 0; t <= deg; ++t) M[j][t] = s[deg - t];
    }

    std::vector<long> chosen(m);
    for (int j = 0; j < m; ++j) {
        // Cofactors along row j do not depend on row j itself; they are
        // det(M) times column j of M^{-1}, i.e. det * solve(M y = e_j).
        // Candidate v then has weight sum_t powers(v)[t] * y[t] * det(M);
        // one fraction-free elimination yields y and det together.
        std::vector<BigInt> e(m, BigInt(0));
        e[j] = 1;
        auto sol = solve_int_system(M, std::move(e));
        const auto& y = sol.x;
        // Total weight with coordinate j still summed over its interval.
        Rational total(sol.det);
        if (!(total > 0)) throw std::runtime_error("sampler: non-positive weight");

        auto weight_of = [&](long v) -> Rational {
            Rational w(0);
            BigInt p = 1;
            for (int t = deg; t >= 0; --t) {
                w += Rational(p) * y[t];
                p *= v;
            }
            return w * total;
        };

        long picked;
        if (forced) {
            picked = (*forced)[j];
        } else {
            // Inverse-CDF draw. Only the uniform variate is a float; the
            // cumulative weights stay exact rationals, so there is no
            // normalization drift to guard against.
            Rational threshold = Rational(rng->next_unit()) * total;
            Rational acc(0);
            long v = upper[j + 1] + 1;
            for (; v <= upper[j]; ++v) {
                acc += weight_of(v);
                if (acc > threshold) break;
            }
            picked = std::min(v, upper[j]);
        }
        if (prob_out) *prob_out *= weight_of(picked) / total;
        chosen[j] = picked;
        M[j] = powers_of(picked, deg);
    }
    return chosen;
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : base_(splitmix(seed ^ splitmix(stream * 0x9e3779b97f4a7c15ULL + 1))) {}

std::uint64_t CounterRng::next_u64() { return splitmix(base_ + counter_++); }

double CounterRng::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

ParticleArray sample_array(const PolygonSpec& spec, CounterRng& rng) {
    require_valid(spec);
    ParticleArray arr;
    arr.rows.resize(spec.N);
    arr.rows[spec.N - 1] = top_row(spec);
    for (int m = spec.N; m >= 2; --m) {
        arr.rows[m - 2] = draw_row(arr.rows[m - 1], &rng, nullptr, nullptr);
    }
    return arr;
}

SampleBatch sample_batch(const PolygonSpec& spec, int n_samples, std::uint64_t seed,
                         int workers) {
    require_valid(spec);
    SampleBatch batch;
    batch.spec = spec;
    batch.seed = seed;
    batch.arrays.resize(n_samples);
    const int w = std::min(resolve_workers(workers), std::max(1, n_samples));
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (int t = 0; t < w; ++t) {
        pool.emplace_back([&, t] {
            for (int i = t; i < n_samples; i += w) {
                CounterRng rng(seed, static_cast<std::uint64_t>(i));
                batch.arrays[i] = sample_array(spec, rng);
            }
        });
    }
    for (auto& th : pool) th.join();
    return batch;
}

Rational sample_probability(const PolygonSpec& spec, const ParticleArray& arr) {
    auto vr = validate_array(spec, arr);
    if (!vr.ok) throw std::invalid_argument("sample_probability: " + vr.violation);
    Rational prob(1);
    for (int m = spec.N; m >= 2; --m) {
        draw_row(arr.rows[m - 1], nullptr, &arr.rows[m - 2], &prob);
    }
    return prob;
}

McMoment mc_moments(const PolygonSpec& spec, const std::vector<LatticePoint>& points,
                    int n_samples, std::uint64_t seed, int workers) {
    if (n_samples < 100) throw std::invalid_argument("mc_moments: need at least 100 samples");
    require_valid(spec);
    KernelEvaluator eval(spec);
    std::vector<Rational> mean;
    mean.reserve(points.size());
    for (const auto& p : points) mean.push_back(eval.mean_height(p.x, p.n));

    std::vector<double> values(n_samples);
    const int w = std::min(resolve_workers(workers), n_samples);
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (int t = 0; t < w; ++t) {
        pool.emplace_back([&, t] {
            for (int i = t; i < n_samples; i += w) {
                CounterRng rng(seed, static_cast<std::uint64_t>(i));
                ParticleArray arr = sample_array(spec, rng);
                Rational prod(1);
                for (size_t j = 0; j < points.size(); ++j) {
                    long h = height_of(spec, arr, points[j].x, points[j].n);
                    prod *= Rational(h) - mean[j];
                }
                values[i] = to_double(prod);
            }
        });
    }
    for (auto& th : pool) th.join();

    McMoment out;
    out.n_samples = n_samples;
    double sum = 0;
    for (double v : values) sum += v;
    out.estimate = sum / n_samples;

    const int n_batches = std::max(2, std::min(100, n_samples / 50));
    const int per = n_samples / n_batches;
    std::vector<double> bm;
    for (int b = 0; b < n_batches; ++b) {
        double s = 0;
        for (int i = b * per; i < (b + 1) * per; ++i) s += values[i];
        bm.push_back(s / per);
    }
    double mu = 0;
    for (double v : bm) mu += v;
    mu /= bm.size();
    double var = 0;
    for (double v : bm) var += (v - mu) * (v - mu);
    var /= (bm.size() - 1);
    out.std_error = std::sqrt(var / bm.size());
    return out;
}

}  // namespace lozenge
