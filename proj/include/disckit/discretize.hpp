#pragma once

#include <cstdint>

#include "disckit/errors.hpp"
#include "disckit/types.hpp"

namespace disckit {

// Elementwise mapping to {-1, 0, +1}. Comparisons are inclusive at both
// thresholds; with the grid-offset design no D_KS value lands exactly on a
// threshold, so the choice is inert in practice.
inline DiscretizedMatrix discretize(const DiscriminativityMatrix& d, const ThresholdPair& t) {
  t.validate();
  DiscretizedMatrix out;
  out.n_features = d.n_features;
  out.n_classes = d.n_classes;
  out.thresholds = t;
  out.values.resize(d.values.size());
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    const double v = d.values[i];
    out.values[i] = v >= t.t_plus ? std::int8_t{1} : (v <= t.t_minus ? std::int8_t{-1} : std::int8_t{0});
  }
  return out;
}

// Share of feature-class pairs whose discrete label differs between the two
// threshold pairs, as a percentage of all pairs.
inline double change_percentage(const DiscriminativityMatrix& d, const ThresholdPair& t1,
                                const ThresholdPair& t2) {
  const DiscretizedMatrix a = discretize(d, t1);
  const DiscretizedMatrix b = discretize(d, t2);
  std::size_t changed = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (a.values[i] != b.values[i]) ++changed;
  return 100.0 * static_cast<double>(changed) / static_cast<double>(a.values.size());
}

}  // namespace disckit
