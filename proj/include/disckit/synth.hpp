#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "disckit/errors.hpp"
#include "disckit/rng.hpp"
#include "disckit/types.hpp"

namespace disckit {

// Synthetic embedding with planted discriminative structure. Background is
// i.i.d. standard normal; each planted (feature, class) pair shifts the
// inner-class values by +/- effect_size (in sigma units, so feature-wise
// standardization preserves the plant).
//
// Plant layout: every class plants `plants_per_class` features. With
// overlap_classes=false class c owns features [c*m, (c+1)*m); with
// overlap_classes=true all classes plant the same features [0, m) and
// differ only in sign.
struct SynthSpec {
  std::vector<std::size_t> class_counts;  // per-class instance counts; supports imbalance
  std::size_t n_features = 0;
  std::size_t plants_per_class = 0;
  double effect_size = 0.0;  // mean shift in sigma units
  double sign_mix = 0.0;     // fraction of under-activation (negative) plants
  bool overlap_classes = false;
  std::uint64_t seed = 0;

  std::size_t n_classes() const { return class_counts.size(); }

  void validate() const {
    if (class_counts.empty()) throw SynthError("spec has no classes");
    for (auto c : class_counts)
      if (c < 1) throw SynthError("every class needs at least one instance");
    if (n_features < 1) throw SynthError("spec needs at least one feature");
    if (!(effect_size >= 0.0) || !std::isfinite(effect_size))
      throw SynthError("effect size must be a finite non-negative number");
    if (!(sign_mix >= 0.0 && sign_mix <= 1.0)) throw SynthError("sign mix must lie in [0, 1]");
    if (overlap_classes) {
      if (plants_per_class > n_features)
        throw SynthError("plants per class exceed feature count");
    } else if (plants_per_class * class_counts.size() > n_features) {
      throw SynthError("disjoint plants need plants_per_class * n_classes <= n_features");
    }
  }
};

struct PlantedPair {
  std::size_t feature = 0;
  std::size_t cls = 0;
  int sign = 0;  // +1 over-activation, -1 under-activation
};

struct GroundTruth {
  std::vector<PlantedPair> pairs;
};

struct SynthTask {
  EmbeddingMatrix embedding;
  LabelVector labels;
  GroundTruth truth;
};

namespace detail {

// Deterministic sign assignment realising the requested minus fraction:
// minus plants are spread evenly over slot positions (Bresenham spacing),
// with a per-class rotation so adjacent classes decorrelate. For
// sign_mix=0.5 this alternates signs along (slot + class).
inline int plant_sign(std::size_t slot, std::size_t cls, std::size_t plants_per_class,
                      std::size_t n_minus) {
  if (n_minus == 0) return 1;
  const std::size_t pos = (slot + cls) % plants_per_class;
  const bool minus = (pos + 1) * n_minus / plants_per_class > pos * n_minus / plants_per_class;
  return minus ? -1 : 1;
}

}  // namespace detail

// Deterministic under the spec seed: class c's rows come from a stream
// derived from (seed, c), so generation parallelised per class would match
// serial output bit for bit.
inline SynthTask generate(const SynthSpec& spec) {
  spec.validate();
  const std::size_t k = spec.n_classes();
  const std::size_t m = spec.plants_per_class;
  const std::size_t n_minus =
      static_cast<std::size_t>(std::llround(spec.sign_mix * static_cast<double>(m)));

  std::size_t n = 0;
  for (auto c : spec.class_counts) n += c;

  SynthTask task;
  task.embedding.n_instances = n;
  task.embedding.n_features = spec.n_features;
  task.embedding.values.resize(n * spec.n_features);

  std::vector<std::uint32_t> labels(n);
  std::size_t row = 0;
  for (std::size_t c = 0; c < k; ++c) {
    SplitMix64 rng(derive_stream(spec.seed, stream_tag::kSynthClass, c));
    const std::size_t cnt = spec.class_counts[c];
    for (std::size_t i = 0; i < cnt; ++i) {
      labels[row + i] = static_cast<std::uint32_t>(c);
      for (std::size_t f = 0; f < spec.n_features; ++f)
        task.embedding.at(row + i, f) = rng.next_normal();
    }
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t f = spec.overlap_classes ? j : c * m + j;
      const int s = detail::plant_sign(j, c, m, n_minus);
      const double shift = static_cast<double>(s) * spec.effect_size;
      for (std::size_t i = 0; i < cnt; ++i) task.embedding.at(row + i, f) += shift;
      task.truth.pairs.push_back(PlantedPair{f, c, s});
    }
    row += cnt;
  }
  task.labels = LabelVector::from_labels(std::move(labels));
  return task;
}

// Sign-aware precision/recall of nonzero discrete labels against the
// planted pairs. A pair detected with the wrong sign counts as both a false
// positive and a miss.
struct DetectionScore {
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;

  std::optional<double> precision() const {
    const std::size_t d = true_positives + false_positives;
    if (d == 0) return std::nullopt;
    return static_cast<double>(true_positives) / static_cast<double>(d);
  }
  // Undefined (and flagged) when the ground truth side is empty.
  std::optional<double> recall() const {
    const std::size_t d = true_positives + false_negatives;
    if (d == 0) return std::nullopt;
    return static_cast<double>(true_positives) / static_cast<double>(d);
  }
  std::optional<double> f1() const {
    const auto p = precision();
    const auto r = recall();
    if (!p || !r || *p + *r == 0.0) return std::nullopt;
    return 2.0 * *p * *r / (*p + *r);
  }
};

struct DetectionReport {
  DetectionScore plus;
  DetectionScore minus;
  DetectionScore combined;
};

inline DetectionReport evaluate_detection(const DiscretizedMatrix& disc,
                                          const GroundTruth& truth) {
  std::vector<std::int8_t> expected(disc.n_features * disc.n_classes, 0);
  for (const auto& p : truth.pairs) {
    if (p.feature >= disc.n_features || p.cls >= disc.n_classes)
      throw SynthError("ground-truth pair outside matrix dimensions");
    if (p.sign != 1 && p.sign != -1) throw SynthError("ground-truth sign must be +1 or -1");
    expected[p.feature * disc.n_classes + p.cls] = static_cast<std::int8_t>(p.sign);
  }

  DetectionReport rep;
  for (std::size_t i = 0; i < disc.values.size(); ++i) {
    const std::int8_t got = disc.values[i];
    const std::int8_t want = expected[i];
    for (int s : {+1, -1}) {
      DetectionScore& score = s > 0 ? rep.plus : rep.minus;
      if (want == s && got == s) ++score.true_positives;
      if (got == s && want != s) ++score.false_positives;
      if (want == s && got != s) ++score.false_negatives;
    }
    if (want != 0 && got == want) ++rep.combined.true_positives;
    if (got != 0 && want != got) ++rep.combined.false_positives;
    if (want != 0 && got != want) ++rep.combined.false_negatives;
  }
  return rep;
}

}  // namespace disckit
