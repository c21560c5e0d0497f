#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "disckit/errors.hpp"
#include "disckit/parallel.hpp"
#include "disckit/types.hpp"

namespace disckit {

namespace detail {

// Core scan shared by every KS entry point. Walks values ascending, grouped
// by distinct value (right-continuous ECDF: all ties at a value accumulate
// before the difference is evaluated), and keeps the signed difference with
// the largest magnitude. Differences are compared as exact integer
// numerators over the common denominator nI*nO, so tie-breaking (smallest
// evaluation point wins) never depends on floating-point rounding.
//
// is_inner(pos) classifies the pos-th smallest value.
template <typename InnerPred>
double signed_ks_scan(const double* sorted_values, std::size_t n, InnerPred&& is_inner,
                      std::int64_t n_inner, std::int64_t n_outer) {
  std::int64_t cum_inner = 0;
  std::int64_t cum_outer = 0;
  std::int64_t best = 0;  // signed numerator of the extremal difference
  std::size_t i = 0;
  while (i < n) {
    const double v = sorted_values[i];
    do {
      if (is_inner(i))
        ++cum_inner;
      else
        ++cum_outer;
      ++i;
    } while (i < n && sorted_values[i] == v);
    const std::int64_t num = cum_outer * n_inner - cum_inner * n_outer;
    if (std::abs(num) > std::abs(best)) best = num;
  }
  return static_cast<double>(best) / static_cast<double>(n_inner * n_outer);
}

}  // namespace detail

// Signed two-sample Kolmogorov-Smirnov distance in [-1, 1]. The empirical
// CDF difference F_outer - F_inner is evaluated at every merged sample
// point; the value at the point maximising |difference| is returned, ties
// broken towards the smallest point. Positive sign means the inner sample
// is stochastically larger (over-activation).
inline double signed_ks(std::span<const double> inner, std::span<const double> outer) {
  if (inner.empty() || outer.empty())
    throw StatError("signed_ks requires two non-empty samples");

  const std::size_t n = inner.size() + outer.size();
  std::vector<std::pair<double, std::uint8_t>> merged;
  merged.reserve(n);
  for (double v : inner) merged.emplace_back(v, 1);
  for (double v : outer) merged.emplace_back(v, 0);
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = merged[i].first;
  return detail::signed_ks_scan(
      values.data(), n, [&](std::size_t pos) { return merged[pos].second != 0; },
      static_cast<std::int64_t>(inner.size()), static_cast<std::int64_t>(outer.size()));
}

namespace detail {

// Column order shared by all classes of one feature: instance ids sorted by
// feature value. Ties keep instance order; the scan groups equal values, so
// the tie order never affects results.
struct SortedColumn {
  std::vector<double> values;
  std::vector<std::uint32_t> ids;
};

inline SortedColumn sort_column(const EmbeddingMatrix& m, std::size_t feature) {
  const std::size_t n = m.n_instances;
  SortedColumn col;
  col.ids.resize(n);
  for (std::size_t i = 0; i < n; ++i) col.ids[i] = static_cast<std::uint32_t>(i);
  std::sort(col.ids.begin(), col.ids.end(), [&](std::uint32_t a, std::uint32_t b) {
    const double va = m.at(a, feature);
    const double vb = m.at(b, feature);
    return va < vb || (va == vb && a < b);
  });
  col.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) col.values[i] = m.at(col.ids[i], feature);
  return col;
}

// Computes one matrix row (all classes of one feature) given per-class
// membership of each instance. membership[i] is the class of instance i for
// the real matrix, or a fake-class id for the shuffled one; entries equal
// to kNoClass belong to no inner sample.
inline void ks_feature_row(const SortedColumn& col, std::span<const std::uint32_t> membership,
                           std::span<const std::int64_t> class_sizes, double* row_out) {
  const std::size_t n = col.values.size();
  const std::int64_t total = static_cast<std::int64_t>(n);
  for (std::size_t c = 0; c < class_sizes.size(); ++c) {
    const std::int64_t n_inner = class_sizes[c];
    row_out[c] = signed_ks_scan(
        col.values.data(), n,
        [&](std::size_t pos) { return membership[col.ids[pos]] == c; }, n_inner,
        total - n_inner);
  }
}

}  // namespace detail

// Signed D_KS for every (feature, class) pair: inner sample = feature values
// on the class instances, outer = the full complement. Only accepts
// standardized embeddings. Pairs are independent; the computation is
// parallel over features with a write-once layout, bit-identical to serial.
inline DiscriminativityMatrix discriminativity_matrix(const StandardizedEmbedding& emb,
                                                      const LabelVector& labels,
                                                      int threads = 1,
                                                      std::string task = {}) {
  labels.validate();
  if (labels.size() != emb.data.n_instances)
    throw StatError("label count does not match embedding instances");
  if (labels.n_classes < 2)
    throw StatError("discriminativity needs at least 2 classes");

  const std::size_t nf = emb.data.n_features;
  const std::size_t nc = labels.n_classes;

  const auto counts = labels.class_counts();
  std::vector<std::int64_t> class_sizes(nc);
  for (std::size_t c = 0; c < nc; ++c) class_sizes[c] = static_cast<std::int64_t>(counts[c]);

  DiscriminativityMatrix out;
  out.n_features = nf;
  out.n_classes = nc;
  out.values.resize(nf * nc);
  out.task = std::move(task);
  out.shuffled = false;

  parallel_for(nf, threads, [&](std::size_t fb, std::size_t fe) {
    for (std::size_t f = fb; f < fe; ++f) {
      const auto col = detail::sort_column(emb.data, f);
      detail::ks_feature_row(col, labels.labels, class_sizes, &out.values[f * nc]);
    }
  });
  return out;
}

}  // namespace disckit
