#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "viqa/error.hpp"
#include "viqa/rng.hpp"

// Dense row-major tensors with reverse-mode differentiation. A TensorT is a
// cheap value-semantic handle: shape plus a shared payload. Tensors without
// a tape are plain immutable values; attaching one to a recording tape makes
// the ops below record their backward step.
//
// Numerics default to 64-bit floats (viqa::Tensor); the engine is also
// instantiated for float as the reduced-precision switch.

namespace viqa {

using Shape = std::vector<std::size_t>;

std::string shape_str(const Shape& s);

template <typename T>
class TapeT;

template <typename T>
struct TensorT {
  Shape shape;
  std::shared_ptr<std::vector<T>> data;
  TapeT<T>* tape = nullptr;
  int node = -1;

  TensorT() = default;

  static TensorT zeros(Shape s);
  static TensorT full(Shape s, T v);
  static TensorT from(Shape s, std::vector<T> v);
  static TensorT scalar(T v) { return from({1}, {v}); }
  static TensorT randn(Shape s, Rng& rng, T stddev);

  std::size_t size() const { return data ? data->size() : 0; }
  std::size_t rank() const { return shape.size(); }
  std::size_t rows() const;
  std::size_t cols() const;
  bool is_scalar() const { return size() == 1; }
  bool on_tape() const { return tape != nullptr; }

  T* ptr() { return data->data(); }
  const T* ptr() const { return data->data(); }
  T& operator[](std::size_t i) { return (*data)[i]; }
  T operator[](std::size_t i) const { return (*data)[i]; }
  T& at(std::size_t r, std::size_t c) { return (*data)[r * cols() + c]; }
  T at(std::size_t r, std::size_t c) const { return (*data)[r * cols() + c]; }

  /// Value of a scalar tensor.
  T value() const;

  /// Deep copy of the payload; the copy is never on a tape.
  TensorT clone() const;

  bool all_finite() const;
};

template <typename T>
class TapeT {
 public:
  enum class Mode { kRecording, kFrozen };

  using Pull = std::function<void(TapeT&, int)>;

  TapeT() = default;
  TapeT(const TapeT&) = delete;
  TapeT& operator=(const TapeT&) = delete;

  /// Records an operation node; `pull` adds the node's adjoint into its
  /// parents' adjoints. Leaves pass a null pull.
  int record(std::size_t out_size, Pull pull);

  /// Adjoint buffer for a node, zero-initialized on first touch.
  std::vector<T>& adjoint(int node);
  bool has_adjoint(int node) const;

  /// Reverse pass from a scalar loss node. Each node is visited exactly
  /// once, in reverse topological order; afterwards the tape is frozen.
  void backward_from(int loss_node);

  Mode mode() const { return mode_; }
  std::size_t node_count() const { return nodes_.size(); }

 private:
  struct Node {
    std::size_t size;
    Pull pull;
  };
  std::vector<Node> nodes_;
  std::vector<std::vector<T>> adjoints_;
  Mode mode_ = Mode::kRecording;
};

/// Registers `param` as a differentiable leaf on `tape`. The returned tensor
/// shares the parameter's payload.
template <typename T>
TensorT<T> watch(TapeT<T>& tape, const TensorT<T>& param);

/// Gradient of a watched (or op-produced) tensor after backward(); zeros if
/// the tensor was unreachable from the loss.
template <typename T>
TensorT<T> grad_of(const TensorT<T>& t);

/// Reverse pass from a scalar loss tensor.
template <typename T>
void backward(const TensorT<T>& loss);

// ---- differentiable operations -------------------------------------------

template <typename T>
TensorT<T> matmul(const TensorT<T>& a, const TensorT<T>& b);

template <typename T>
TensorT<T> transpose(const TensorT<T>& a);

// add/sub/mul support identical shapes, or one scalar operand broadcast
// against the other (the only broadcasting form in this engine).
template <typename T>
TensorT<T> add(const TensorT<T>& a, const TensorT<T>& b);
template <typename T>
TensorT<T> sub(const TensorT<T>& a, const TensorT<T>& b);
template <typename T>
TensorT<T> mul(const TensorT<T>& a, const TensorT<T>& b);

template <typename T>
TensorT<T> scale(const TensorT<T>& a, T factor);

/// X[r x c] + row-broadcast bias[c].
template <typename T>
TensorT<T> add_row_bias(const TensorT<T>& x, const TensorT<T>& bias);

template <typename T>
TensorT<T> slice_rows(const TensorT<T>& a, std::size_t r0, std::size_t r1);
template <typename T>
TensorT<T> slice_cols(const TensorT<T>& a, std::size_t c0, std::size_t c1);
template <typename T>
TensorT<T> concat_rows(const TensorT<T>& a, const TensorT<T>& b);
template <typename T>
TensorT<T> concat_cols(const std::vector<TensorT<T>>& parts);

template <typename T>
TensorT<T> reshape(const TensorT<T>& a, Shape s);

/// Softmax along `axis` (0 or 1 for matrices, 0 for vectors), computed with
/// max subtraction.
template <typename T>
TensorT<T> softmax(const TensorT<T>& a, int axis);

/// Layer normalization over the last axis, then affine gain/bias.
template <typename T>
TensorT<T> layernorm(const TensorT<T>& x, const TensorT<T>& gain,
                     const TensorT<T>& bias, T eps);

template <typename T>
TensorT<T> gelu(const TensorT<T>& a);
template <typename T>
TensorT<T> tanh_of(const TensorT<T>& a);
template <typename T>
TensorT<T> sigmoid_of(const TensorT<T>& a);

/// log(max(x, floor)); the floor keeps cross-entropy finite.
template <typename T>
TensorT<T> log_clamped(const TensorT<T>& a, T floor);

template <typename T>
TensorT<T> sum(const TensorT<T>& a);
template <typename T>
TensorT<T> mean(const TensorT<T>& a);

/// u.v / ((|u|+eps)(|v|+eps)) for same-size tensors treated as vectors.
template <typename T>
TensorT<T> cosine_similarity(const TensorT<T>& u, const TensorT<T>& v,
                             T eps = T(1e-8));

/// X*W + bias as one call.
template <typename T>
TensorT<T> linear(const TensorT<T>& x, const TensorT<T>& w,
                  const TensorT<T>& bias);

// ---- verification --------------------------------------------------------

/// Compares tape gradients of a scalar-valued function against central
/// finite differences at `point`. Returns the max over coordinates of
/// |analytic - numeric| / (|numeric| + 1e-8).
template <typename T>
T grad_check(
    const std::function<TensorT<T>(TapeT<T>&, std::vector<TensorT<T>>&)>& f,
    const std::vector<TensorT<T>>& point, T step);

using Tensor = TensorT<double>;
using Tape = TapeT<double>;

}  // namespace viqa
