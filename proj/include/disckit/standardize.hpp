#pragma once

#include <cmath>
#include <string>

#include "disckit/parallel.hpp"
#include "disckit/types.hpp"

namespace disckit {

// Feature-wise z-scoring across all instances of the task. Population
// standard deviation (divide-by-n). Zero-variance columns become all-zero
// and are recorded in constant_features; they carry no signal and the KS
// statistic handles the resulting ties.
inline StandardizedEmbedding standardize(const EmbeddingMatrix& emb, int threads = 1) {
  emb.validate();
  if (emb.n_instances < 2)
    throw IngestError("standardize needs at least 2 instances, got " +
                      std::to_string(emb.n_instances));

  const std::size_t n = emb.n_instances;
  const std::size_t nf = emb.n_features;

  StandardizedEmbedding out;
  out.data.n_instances = n;
  out.data.n_features = nf;
  out.data.values.resize(n * nf);
  out.data.tags = emb.tags;
  out.feature_means.resize(nf);
  out.feature_stds.resize(nf);

  std::vector<std::uint8_t> is_constant(nf, 0);
  parallel_for(nf, threads, [&](std::size_t fb, std::size_t fe) {
    for (std::size_t f = fb; f < fe; ++f) {
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) sum += emb.at(i, f);
      const double mean = sum / static_cast<double>(n);
      double ss = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double d = emb.at(i, f) - mean;
        ss += d * d;
      }
      const double std = std::sqrt(ss / static_cast<double>(n));
      out.feature_means[f] = mean;
      out.feature_stds[f] = std;
      if (std == 0.0) {
        is_constant[f] = 1;
        for (std::size_t i = 0; i < n; ++i) out.data.at(i, f) = 0.0;
      } else {
        for (std::size_t i = 0; i < n; ++i) out.data.at(i, f) = (emb.at(i, f) - mean) / std;
      }
    }
  });
  for (std::size_t f = 0; f < nf; ++f)
    if (is_constant[f]) out.constant_features.push_back(f);
  return out;
}

// Instance counts, classes, exact instances-per-class ratio and the
// population sigma of per-class counts (the "imbalance" of the task).
inline TaskMeta compute_task_meta(const LabelVector& labels, const std::string& name) {
  labels.validate();

  TaskMeta meta;
  meta.name = name;
  meta.n_instances = labels.size();
  meta.n_classes = labels.n_classes;
  meta.instances_per_class = Ratio{meta.n_instances, meta.n_classes};

  const auto counts = labels.class_counts();
  const std::uint64_t n = meta.n_instances;
  const std::uint64_t k = meta.n_classes;
  // sigma = sqrt(sum (c_i - n/k)^2 / k) computed from integers, so
  // imbalance is exactly 0 iff all class counts are equal.
  std::uint64_t ss_scaled = 0;  // sum of (k*c_i - n)^2
  for (auto c : counts) {
    const std::int64_t d = static_cast<std::int64_t>(k * c) - static_cast<std::int64_t>(n);
    ss_scaled += static_cast<std::uint64_t>(d * d);
  }
  meta.imbalance =
      ss_scaled == 0 ? 0.0 : std::sqrt(static_cast<double>(ss_scaled)) / (static_cast<double>(k) * std::sqrt(static_cast<double>(k)));
  return meta;
}

}  // namespace disckit
