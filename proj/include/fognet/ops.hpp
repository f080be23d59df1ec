#pragma once

#include <cstdint>
#include <memory>
#include <type_traits>
#include <vector>

#include "fognet/tensor.hpp"

namespace fognet {

enum class Mode { kTrain, kEval };

// ---------------------------------------------------------------------------
// Layer parameter sets. The same structs double as gradient accumulators:
// backward passes add into the weight/bias arrays of a zero-initialized twin.
// ---------------------------------------------------------------------------

template <class T>
struct ConvLayerParams {
  int64_t in_channels = 0;
  int64_t out_channels = 0;
  int64_t kernel = 0;
  int64_t stride = 1;
  int64_t padding = 0;
  std::vector<T> weights;  // [out_channels][in_channels][kernel]
  std::vector<T> bias;     // [out_channels]

  static ConvLayerParams make(int64_t in_ch, int64_t out_ch, int64_t kernel, int64_t stride,
                              int64_t padding);
  void validate() const;
};

template <class T>
struct NormLayerParams {
  int64_t channels = 0;
  std::vector<T> scale;         // gamma, init 1
  std::vector<T> shift;         // beta, init 0
  std::vector<T> running_mean;  // buffers, not trainable
  std::vector<T> running_var;
  double momentum = 0.1;
  double epsilon = 1e-5;

  static NormLayerParams make(int64_t channels);
  void validate() const;
};

template <class T>
struct LinearParams {
  int64_t in_features = 0;
  int64_t out_features = 0;
  std::vector<T> weights;  // [out_features][in_features]
  std::vector<T> bias;     // [out_features]

  static LinearParams make(int64_t in_features, int64_t out_features);
  void validate() const;
};

// Output length of a 1-d convolution; throws if the result would be empty.
int64_t conv1d_output_length(int64_t length, int64_t kernel, int64_t stride, int64_t padding);

// ---------------------------------------------------------------------------
// Forward/backward primitives. Caches hold exactly what backward needs;
// activations are shared, never copied, when the caller already owns them
// behind a shared_ptr.
// ---------------------------------------------------------------------------

template <class T>
struct Conv1dCache {
  std::shared_ptr<const Tensor3<T>> input;
  int64_t out_length = 0;
};

template <class T>
Tensor3<T> conv1d_forward(const std::shared_ptr<const Tensor3<T>>& input,
                          const ConvLayerParams<T>& p, std::type_identity_t<Conv1dCache<T>>* cache = nullptr);

template <class T>
Tensor3<T> conv1d_forward(const Tensor3<T>& input, const ConvLayerParams<T>& p,
                          std::type_identity_t<Conv1dCache<T>>* cache = nullptr);

// Returns grad_input; accumulates weight/bias gradients into `grad`.
template <class T>
Tensor3<T> conv1d_backward(const Tensor3<T>& grad_out, const Conv1dCache<T>& cache,
                           const ConvLayerParams<T>& p, ConvLayerParams<T>& grad);

template <class T>
struct BatchNormCache {
  std::shared_ptr<const Tensor3<T>> input;
  std::vector<T> mean;     // per-channel batch statistics (train mode)
  std::vector<T> inv_std;  // 1 / sqrt(var + eps)
  Mode mode = Mode::kTrain;
};

// Train mode normalizes by batch*length statistics per channel and updates
// the running buffers in `p`; eval mode reads the running buffers and leaves
// `p` untouched.
template <class T>
Tensor3<T> batchnorm1d_forward(const std::shared_ptr<const Tensor3<T>>& input,
                               NormLayerParams<T>& p, Mode mode,
                               std::type_identity_t<BatchNormCache<T>>* cache = nullptr);

template <class T>
Tensor3<T> batchnorm1d_forward(const Tensor3<T>& input, NormLayerParams<T>& p, Mode mode,
                               std::type_identity_t<BatchNormCache<T>>* cache = nullptr);

template <class T>
Tensor3<T> batchnorm1d_backward(const Tensor3<T>& grad_out, const BatchNormCache<T>& cache,
                                const NormLayerParams<T>& p, NormLayerParams<T>& grad);

struct ReluCache {
  std::vector<uint8_t> mask;  // 1 where input > 0
  int64_t batch = 0, channels = 0, length = 0;
};

template <class T>
Tensor3<T> relu_forward(const Tensor3<T>& input, ReluCache* cache = nullptr);

template <class T>
Tensor3<T> relu_backward(const Tensor3<T>& grad_out, const ReluCache& cache);

// Mean over the position axis: (B, C, L) -> (B, C).
template <class T>
Matrix2<T> global_avg_pool_forward(const Tensor3<T>& input);

template <class T>
Tensor3<T> global_avg_pool_backward(const Matrix2<T>& grad_out, int64_t length);

template <class T>
struct LinearCache {
  std::shared_ptr<const Matrix2<T>> input;
};

template <class T>
Matrix2<T> linear_forward(const Matrix2<T>& input, const LinearParams<T>& p,
                          std::type_identity_t<LinearCache<T>>* cache = nullptr);

template <class T>
Matrix2<T> linear_backward(const Matrix2<T>& grad_out, const LinearCache<T>& cache,
                           const LinearParams<T>& p, LinearParams<T>& grad);

template <class T>
struct BceResult {
  double loss = 0.0;       // mean over all elements
  Matrix2<T> grad_logits;  // (sigmoid(x) - z) / N
};

// Numerically stable binary cross entropy on logits:
//   max(x, 0) - x*z + log(1 + exp(-|x|)), averaged over every element.
// Targets must be exactly 0 or 1.
template <class T>
BceResult<T> bce_with_logits(const Matrix2<T>& logits, const Matrix2<T>& targets);

}  // namespace fognet
