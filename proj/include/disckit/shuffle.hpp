#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "disckit/errors.hpp"
#include "disckit/ks.hpp"
#include "disckit/rng.hpp"
#include "disckit/types.hpp"

namespace disckit {

// Configuration of the shuffle baseline and of the candidate grid used by
// the second KS test.
struct ShuffleConfig {
  std::uint64_t master_seed = 0;
  int repetitions = 1;
  double grid_step = 0.001;
  double grid_offset = 0.0005;

  void validate() const {
    if (repetitions < 1) throw DomainError("repetitions must be >= 1");
    if (!(grid_step > 0.0)) throw DomainError("grid step must be positive");
    if (!(grid_offset >= 0.0 && grid_offset < grid_step))
      throw DomainError("grid offset must lie in [0, step)");
  }
};

enum class Sign { minus, plus };

struct SignStability {
  double mean = 0.0;
  double sigma = 0.0;  // population sigma over repetitions
  std::vector<double> values;
};

struct ThresholdStability {
  SignStability minus;
  SignStability plus;
};

struct EmpiricalThresholds {
  ThresholdPair pair;  // per-sign mean over repetitions
  ThresholdStability stability;
};

// D'_KS: for each real class of size n_c, a fake class of n_c instances is
// drawn uniformly without replacement from all instances (overlap with the
// real class permitted) and scored against its complement. The draw for
// class c uses a stream derived from (seed, c), so per-class sampling is
// schedule-independent.
inline DiscriminativityMatrix shuffled_discriminativity(const StandardizedEmbedding& emb,
                                                        const LabelVector& labels,
                                                        std::uint64_t seed, int threads = 1,
                                                        std::string task = {}) {
  labels.validate();
  if (labels.size() != emb.data.n_instances)
    throw StatError("label count does not match embedding instances");
  if (labels.n_classes < 2)
    throw StatError("shuffled discriminativity needs at least 2 classes");

  const std::size_t n = labels.size();
  const std::size_t nf = emb.data.n_features;
  const std::size_t nc = labels.n_classes;
  const auto counts = labels.class_counts();

  // Fake classes drawn by different real classes may overlap, so each class
  // keeps its own membership mask.
  std::vector<std::vector<std::uint8_t>> is_fake(nc, std::vector<std::uint8_t>(n, 0));
  for (std::size_t c = 0; c < nc; ++c) {
    if (counts[c] >= n)
      throw StatError("fake class for class " + std::to_string(c) +
                      " would cover every instance");
    SplitMix64 rng(derive_stream(seed, stream_tag::kShuffleClass, c));
    for (auto i : sample_without_replacement(rng, static_cast<std::uint32_t>(n),
                                             static_cast<std::uint32_t>(counts[c])))
      is_fake[c][i] = 1;
  }

  std::vector<std::int64_t> class_sizes(nc);
  for (std::size_t c = 0; c < nc; ++c) class_sizes[c] = static_cast<std::int64_t>(counts[c]);

  DiscriminativityMatrix out;
  out.n_features = nf;
  out.n_classes = nc;
  out.values.resize(nf * nc);
  out.task = std::move(task);
  out.shuffled = true;

  parallel_for(nf, threads, [&](std::size_t fb, std::size_t fe) {
    for (std::size_t f = fb; f < fe; ++f) {
      const auto col = detail::sort_column(emb.data, f);
      const std::size_t nvals = col.values.size();
      for (std::size_t c = 0; c < nc; ++c) {
        out.values[f * nc + c] = detail::signed_ks_scan(
            col.values.data(), nvals,
            [&](std::size_t pos) { return is_fake[c][col.ids[pos]] != 0; }, class_sizes[c],
            static_cast<std::int64_t>(n) - class_sizes[c]);
      }
    }
  });
  return out;
}

// The second KS test. Both samples are restricted to the requested sign
// (the negative side is solved in the mirrored positive domain), the
// absolute ECDF difference is evaluated on the candidate grid
// {offset, offset+step, ...} inside (0, 1), and the returned threshold is
// the middle grid point of the longest run tied at the maximum. Differences
// are compared as exact integer numerators, so tied runs are exact.
inline double optimal_threshold(std::span<const double> real_values,
                                std::span<const double> noise_values, Sign sign,
                                const ShuffleConfig& cfg = {}) {
  cfg.validate();

  std::vector<double> real;
  std::vector<double> noise;
  const bool plus = sign == Sign::plus;
  for (double v : real_values)
    if (plus ? v > 0.0 : v < 0.0) real.push_back(plus ? v : -v);
  for (double v : noise_values)
    if (plus ? v > 0.0 : v < 0.0) noise.push_back(plus ? v : -v);
  if (real.empty())
    throw StatError(std::string("real sample has no ") + (plus ? "positive" : "negative") +
                    " values");
  if (noise.empty())
    throw StatError(std::string("noise sample has no ") + (plus ? "positive" : "negative") +
                    " values");
  std::sort(real.begin(), real.end());
  std::sort(noise.begin(), noise.end());

  const std::int64_t m_real = static_cast<std::int64_t>(real.size());
  const std::int64_t m_noise = static_cast<std::int64_t>(noise.size());

  std::size_t n_grid = static_cast<std::size_t>((1.0 - cfg.grid_offset) / cfg.grid_step) + 1;
  while (n_grid > 0 && cfg.grid_offset + static_cast<double>(n_grid - 1) * cfg.grid_step >= 1.0)
    --n_grid;

  std::int64_t best = 0;
  std::vector<std::pair<std::size_t, std::size_t>> runs;  // [first, last] grid indices
  std::size_t pr = 0;
  std::size_t pn = 0;
  for (std::size_t k = 0; k < n_grid; ++k) {
    const double t = cfg.grid_offset + static_cast<double>(k) * cfg.grid_step;
    while (pr < real.size() && real[pr] <= t) ++pr;
    while (pn < noise.size() && noise[pn] <= t) ++pn;
    const std::int64_t num =
        std::abs(static_cast<std::int64_t>(pr) * m_noise - static_cast<std::int64_t>(pn) * m_real);
    if (num > best) {
      best = num;
      runs.clear();
      runs.emplace_back(k, k);
    } else if (num == best && best > 0) {
      if (!runs.empty() && runs.back().second + 1 == k)
        runs.back().second = k;
      else
        runs.emplace_back(k, k);
    }
  }
  if (best == 0)
    throw NoSeparationError("real and noise distributions coincide on the candidate grid");

  // Longest tied run; earlier run wins on equal length. The middle grid
  // point of an even-length run is the upper of the two central points
  // (run {0.1005..0.8995} -> 0.5005).
  std::size_t best_run = 0;
  for (std::size_t r = 1; r < runs.size(); ++r) {
    const auto len = [&](std::size_t i) { return runs[i].second - runs[i].first; };
    if (len(r) > len(best_run)) best_run = r;
  }
  const std::size_t mid = (runs[best_run].first + runs[best_run].second + 1) / 2;
  const double t = cfg.grid_offset + static_cast<double>(mid) * cfg.grid_step;
  return plus ? t : -t;
}

// Empirical thresholds: per repetition r, a shuffled matrix is built with a
// stream derived from (master seed, r); all real D_KS values and all
// shuffled values are pooled across feature-class pairs and the second KS
// test yields one (t-, t+) per repetition. The returned pair is the
// per-sign mean, with per-repetition values and population sigma reported
// alongside.
inline EmpiricalThresholds empirical_thresholds(const StandardizedEmbedding& emb,
                                                const LabelVector& labels,
                                                const ShuffleConfig& cfg, int threads = 1) {
  cfg.validate();
  const DiscriminativityMatrix real = discriminativity_matrix(emb, labels, threads);

  EmpiricalThresholds out;
  out.stability.minus.values.reserve(cfg.repetitions);
  out.stability.plus.values.reserve(cfg.repetitions);
  for (int r = 0; r < cfg.repetitions; ++r) {
    const std::uint64_t rep_seed =
        derive_stream(cfg.master_seed, stream_tag::kShuffleRep, static_cast<std::uint64_t>(r));
    const DiscriminativityMatrix noise =
        shuffled_discriminativity(emb, labels, rep_seed, threads);
    out.stability.minus.values.push_back(
        optimal_threshold(real.values, noise.values, Sign::minus, cfg));
    out.stability.plus.values.push_back(
        optimal_threshold(real.values, noise.values, Sign::plus, cfg));
  }

  const auto fold = [](SignStability& s) {
    double sum = 0.0;
    for (double v : s.values) sum += v;
    s.mean = sum / static_cast<double>(s.values.size());
    double ss = 0.0;
    for (double v : s.values) ss += (v - s.mean) * (v - s.mean);
    s.sigma = s.values.size() == 1 ? 0.0 : std::sqrt(ss / static_cast<double>(s.values.size()));
  };
  fold(out.stability.minus);
  fold(out.stability.plus);
  out.pair = ThresholdPair{out.stability.minus.mean, out.stability.plus.mean};
  out.pair.validate();
  return out;
}

// Per-class diagnostic: thresholds computed from the D_KS pool of a single
// class column instead of the task-wide pool. Exposed for inspection only;
// the task-level thresholds above are the ones matching the published
// methodology.
inline std::vector<ThresholdPair> per_class_thresholds(const DiscriminativityMatrix& real,
                                                       const DiscriminativityMatrix& noise,
                                                       const ShuffleConfig& cfg = {}) {
  if (real.n_features != noise.n_features || real.n_classes != noise.n_classes)
    throw StatError("real and shuffled matrices have different shapes");
  std::vector<ThresholdPair> out;
  out.reserve(real.n_classes);
  std::vector<double> rcol(real.n_features);
  std::vector<double> ncol(real.n_features);
  for (std::size_t c = 0; c < real.n_classes; ++c) {
    for (std::size_t f = 0; f < real.n_features; ++f) {
      rcol[f] = real.at(f, c);
      ncol[f] = noise.at(f, c);
    }
    out.push_back(ThresholdPair{optimal_threshold(rcol, ncol, Sign::minus, cfg),
                                optimal_threshold(rcol, ncol, Sign::plus, cfg)});
  }
  return out;
}

}  // namespace disckit
