#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "fognet/ops.hpp"
#include "fognet/tensor.hpp"

namespace fognet {

struct ResidualBlockSpec {
  int64_t in_channels = 0;
  int64_t out_channels = 0;
  int64_t stride = 1;
  int64_t kernel = 17;

  // A 1x1 projection shortcut exists exactly when the block changes shape.
  bool has_projection() const { return in_channels != out_channels || stride != 1; }
  bool operator==(const ResidualBlockSpec&) const = default;
};

struct NetworkSpec {
  int64_t input_channels = 3;
  int64_t window_length = 1000;
  std::vector<ResidualBlockSpec> blocks;
  int64_t head_features = 512;
  int64_t num_outputs = 3;

  bool operator==(const NetworkSpec&) const = default;
  void validate() const;
  // Activation length after each block, starting from window_length.
  std::vector<int64_t> block_output_lengths() const;
};

// Builds a spec from per-block channel/stride schedules with a shared kernel.
NetworkSpec make_network_spec(int64_t input_channels, int64_t window_length,
                              const std::vector<int64_t>& channels,
                              const std::vector<int64_t>& strides, int64_t kernel,
                              int64_t num_outputs);

// The production architecture: channels 32/64/128/256/384/512 over lengths
// 1000/500/250/125/25/5, kernel 17, three outputs.
NetworkSpec default_network_spec();

template <class T>
struct BlockParams {
  ConvLayerParams<T> conv1;  // block stride
  NormLayerParams<T> bn1;
  ConvLayerParams<T> conv2;  // stride 1
  NormLayerParams<T> bn2;
  std::optional<ConvLayerParams<T>> proj;  // 1x1, block stride
  std::optional<NormLayerParams<T>> proj_bn;
};

template <class T>
struct ModelParameters {
  NetworkSpec spec;
  std::vector<BlockParams<T>> blocks;
  LinearParams<T> head;
};

// Deterministic fan-in-scaled initialization: conv and head weights from a
// seeded gaussian with std 1/sqrt(fan_in) (doubled variance for conv layers
// feeding rectifiers), norm scale 1 / shift 0, all biases 0.
template <class T>
ModelParameters<T> init_parameters(const NetworkSpec& spec, uint64_t seed);

// Same shapes, all-zero values; the gradient container paired with a model.
template <class T>
ModelParameters<T> zeros_like_parameters(const NetworkSpec& spec);

template <class T>
void zero_gradients(ModelParameters<T>& grads);

// Number of trainable scalars (running statistics excluded).
template <class T>
int64_t parameter_count(const ModelParameters<T>& params);

enum class TensorKind { kTrainable, kBuffer };

template <class T>
struct NamedTensor {
  std::string name;
  std::vector<T>* data = nullptr;
  TensorKind kind = TensorKind::kTrainable;
};

// Stable, checkpoint-order enumeration of every tensor in the model:
// block<i>.{conv1,bn1,conv2,bn2[,proj,proj_bn]}.*, then head.*.
template <class T>
std::vector<NamedTensor<T>> named_tensors(ModelParameters<T>& params);

template <class T>
struct BlockCache {
  Conv1dCache<T> conv1;
  BatchNormCache<T> bn1;
  ReluCache relu1;
  Conv1dCache<T> conv2;
  BatchNormCache<T> bn2;
  Conv1dCache<T> proj;
  BatchNormCache<T> proj_bn;
  ReluCache relu_out;
  int64_t out_channels = 0;
  int64_t out_length = 0;
};

template <class T>
struct NetworkCache {
  Mode mode = Mode::kTrain;
  std::shared_ptr<const Tensor3<T>> input;
  std::vector<BlockCache<T>> blocks;
  LinearCache<T> head;
  int64_t pooled_length = 0;

  // (channels, length) after each block, as observed during the forward pass.
  std::vector<std::pair<int64_t, int64_t>> block_output_shapes() const;
};

// Whole-network forward. Train mode updates batch-norm running statistics
// (hence non-const params) and must be given a cache for the later backward.
template <class T>
Matrix2<T> network_forward(ModelParameters<T>& params, const Tensor3<T>& batch, Mode mode,
                           std::type_identity_t<NetworkCache<T>>* cache = nullptr);

// Inference-only forward over immutable parameters, safe to call concurrently.
template <class T>
Matrix2<T> network_forward_eval(const ModelParameters<T>& params, const Tensor3<T>& batch);

// Populates (accumulates into) `grads` from a train-mode cache.
template <class T>
void network_backward(const ModelParameters<T>& params, const NetworkCache<T>& cache,
                      const Matrix2<T>& grad_logits, ModelParameters<T>& grads);

// ---------------------------------------------------------------------------
// Checkpointing: little-endian binary, magic + version + spec + metadata +
// named parameter table; round-trips bit-exactly.
// ---------------------------------------------------------------------------

struct CheckpointMeta {
  int32_t fold_id = -1;
  uint64_t seed = 0;
  uint64_t config_digest = 0;
};

struct Checkpoint {
  ModelParameters<float> params;
  CheckpointMeta meta;
};

// Atomic: writes to a temporary sibling, then renames into place.
void save_checkpoint(const ModelParameters<float>& params, const CheckpointMeta& meta,
                     const std::filesystem::path& path);

// Rejects bad magic, unknown versions, truncation and shape mismatches with
// distinct diagnostics. When `expected` is given, the stored spec must equal it.
Checkpoint load_checkpoint(const std::filesystem::path& path,
                           const NetworkSpec* expected = nullptr);

}  // namespace fognet
