#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "disckit/errors.hpp"
#include "disckit/types.hpp"

namespace disckit {

struct LayerShape {
  std::string id;
  std::size_t channels = 0;
  std::size_t height = 0;
  std::size_t width = 0;

  std::size_t block_size() const { return channels * height * width; }
};

// Raw per-location activations before pooling. All instances share the same
// layer shapes; each instance stores its blocks concatenated in layer order,
// each block dense C x H x W (channel-major).
struct RawActivationSet {
  std::vector<LayerShape> layers;
  std::vector<std::vector<float>> instances;
  std::vector<std::uint32_t> labels;  // optional; empty or one per instance

  std::size_t values_per_instance() const {
    std::size_t total = 0;
    for (const auto& l : layers) total += l.block_size();
    return total;
  }

  void validate() const {
    if (instances.empty()) throw IngestError("activation set has no instances");
    if (layers.empty()) throw IngestError("activation set has no layers");
    for (const auto& l : layers)
      if (l.channels == 0 || l.height == 0 || l.width == 0)
        throw IngestError("layer '" + l.id + "' has a zero dimension");
    const std::size_t expect = values_per_instance();
    for (std::size_t i = 0; i < instances.size(); ++i) {
      if (instances[i].size() != expect)
        throw IngestError("instance " + std::to_string(i) + " has " +
                          std::to_string(instances[i].size()) + " values, expected " +
                          std::to_string(expect));
      for (float v : instances[i])
        if (!std::isfinite(v)) throw IngestError("instance " + std::to_string(i) +
                                                 " contains non-finite activations");
    }
    if (!labels.empty() && labels.size() != instances.size())
      throw IngestError("label count does not match instance count");
  }
};

// Average spatial pooling: one output feature per (layer, channel), the
// arithmetic mean over the H x W locations. Feature order is layer-major
// then channel, fixed so matrices are comparable across runs.
inline EmbeddingMatrix spatial_average_pool(const RawActivationSet& raw) {
  raw.validate();

  std::size_t n_features = 0;
  for (const auto& l : raw.layers) n_features += l.channels;

  EmbeddingMatrix emb;
  emb.n_instances = raw.instances.size();
  emb.n_features = n_features;
  emb.values.resize(emb.n_instances * n_features);
  emb.tags.reserve(n_features);
  for (const auto& l : raw.layers)
    for (std::size_t c = 0; c < l.channels; ++c)
      emb.tags.push_back(FeatureTag{l.id, static_cast<std::uint32_t>(c)});

  for (std::size_t i = 0; i < emb.n_instances; ++i) {
    const auto& inst = raw.instances[i];
    std::size_t offset = 0;
    std::size_t f = 0;
    for (const auto& l : raw.layers) {
      const std::size_t hw = l.height * l.width;
      for (std::size_t c = 0; c < l.channels; ++c) {
        double sum = 0.0;
        for (std::size_t p = 0; p < hw; ++p) sum += inst[offset + c * hw + p];
        emb.at(i, f++) = sum / static_cast<double>(hw);
      }
      offset += l.block_size();
    }
  }
  return emb;
}

}  // namespace disckit
