#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "disckit/errors.hpp"

namespace disckit {

// Exact ratio, kept unreduced so n_instances / n_classes stays readable.
// Rounding happens only at display time.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct FeatureTag {
  std::string layer_id;
  std::uint32_t channel = 0;
};

// Dense instances x features matrix, row-major.
struct EmbeddingMatrix {
  std::size_t n_instances = 0;
  std::size_t n_features = 0;
  std::vector<double> values;       // n_instances * n_features
  std::vector<FeatureTag> tags;     // optional; empty or n_features entries

  double at(std::size_t i, std::size_t f) const { return values[i * n_features + f]; }
  double& at(std::size_t i, std::size_t f) { return values[i * n_features + f]; }

  void validate() const {
    if (n_instances < 1 || n_features < 1)
      throw IngestError("embedding must have at least one instance and one feature");
    if (values.size() != n_instances * n_features)
      throw IngestError("embedding value buffer does not match declared shape");
    if (!tags.empty() && tags.size() != n_features)
      throw IngestError("feature tag list does not match feature count");
    for (double v : values)
      if (!std::isfinite(v)) throw IngestError("embedding contains non-finite values");
  }
};

// Per-instance class indices. Classes are dense: every index in
// [0, n_classes) occurs at least once.
struct LabelVector {
  std::vector<std::uint32_t> labels;
  std::uint32_t n_classes = 0;

  std::size_t size() const { return labels.size(); }

  static LabelVector from_labels(std::vector<std::uint32_t> labels) {
    LabelVector lv;
    lv.labels = std::move(labels);
    std::uint32_t maxc = 0;
    for (auto l : lv.labels) maxc = std::max(maxc, l);
    lv.n_classes = lv.labels.empty() ? 0 : maxc + 1;
    lv.validate();
    return lv;
  }

  std::vector<std::size_t> class_counts() const {
    std::vector<std::size_t> counts(n_classes, 0);
    for (auto l : labels) ++counts[l];
    return counts;
  }

  void validate() const {
    if (labels.empty()) throw IngestError("label vector is empty");
    for (auto l : labels)
      if (l >= n_classes) throw IngestError("label " + std::to_string(l) + " out of range");
    for (std::size_t c = 0; c < n_classes; ++c) {
      bool seen = false;
      for (auto l : labels)
        if (l == c) { seen = true; break; }
      if (!seen)
        throw IngestError("class " + std::to_string(c) + " has no instances (labels must be dense)");
    }
  }
};

// Z-scored embedding plus the statistics it was derived from. The type
// itself is the standardization marker: downstream statistics only accept
// this, never a raw EmbeddingMatrix.
struct StandardizedEmbedding {
  EmbeddingMatrix data;
  std::vector<double> feature_means;
  std::vector<double> feature_stds;          // population (divide-by-n)
  std::vector<std::size_t> constant_features;  // columns with zero variance, stored all-zero
};

struct TaskMeta {
  std::string name;
  std::size_t n_instances = 0;
  std::uint32_t n_classes = 0;
  Ratio instances_per_class;  // n_instances / n_classes, exact
  double imbalance = 0.0;     // population sigma of per-class counts
};

// Discretization thresholds. t_minus < 0 < t_plus always.
struct ThresholdPair {
  double t_minus = 0.0;
  double t_plus = 0.0;

  void validate() const {
    if (!(t_minus < 0.0))
      throw DomainError("t_minus must be negative, got " + std::to_string(t_minus));
    if (!(t_plus > 0.0))
      throw DomainError("t_plus must be positive, got " + std::to_string(t_plus));
  }
};

// Signed D_KS value per (feature, class) pair, row-major features x classes.
struct DiscriminativityMatrix {
  std::size_t n_features = 0;
  std::size_t n_classes = 0;
  std::vector<double> values;  // n_features * n_classes, each in [-1, 1]
  std::string task;
  bool shuffled = false;

  double at(std::size_t f, std::size_t c) const { return values[f * n_classes + c]; }
  double& at(std::size_t f, std::size_t c) { return values[f * n_classes + c]; }
};

// {-1, 0, +1} label per (feature, class) pair plus the thresholds used.
struct DiscretizedMatrix {
  std::size_t n_features = 0;
  std::size_t n_classes = 0;
  std::vector<std::int8_t> values;
  ThresholdPair thresholds;

  std::int8_t at(std::size_t f, std::size_t c) const { return values[f * n_classes + c]; }
};

}  // namespace disckit
