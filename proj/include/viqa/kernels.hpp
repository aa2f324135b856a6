#pragma once

#include <cstddef>

// Dense numeric kernels. viqa::kernels holds the OpenMP-parallel versions
// used by the tensor engine; viqa::reference holds serial implementations
// kept for testing and benchmarking. Both compute every output element with
// the same accumulation order, so results are bit-identical regardless of
// thread count.

namespace viqa::kernels {

// C[m x n] = A[m x k] * B[k x n]; accumulate adds into C instead.
template <typename T>
void gemm_nn(T* c, const T* a, const T* b, std::size_t m, std::size_t k,
             std::size_t n, bool accumulate);

// C[m x p] = A[m x q] * B[p x q]^T
template <typename T>
void gemm_nt(T* c, const T* a, const T* b, std::size_t m, std::size_t q,
             std::size_t p, bool accumulate);

// C[p x n] = A[m x p]^T * B[m x n]
template <typename T>
void gemm_tn(T* c, const T* a, const T* b, std::size_t m, std::size_t p,
             std::size_t n, bool accumulate);

template <typename T>
void transpose(T* out, const T* in, std::size_t rows, std::size_t cols);

// Row-wise softmax with max subtraction.
template <typename T>
void softmax_rows(T* out, const T* in, std::size_t rows, std::size_t cols);

// Per-row layer normalization over the last axis followed by affine
// gain/bias. Also emits the normalized values and reciprocal stddev per row,
// which the backward pass reuses.
template <typename T>
void layernorm_rows(T* out, T* normalized, T* rstd, const T* in, const T* gain,
                    const T* bias, std::size_t rows, std::size_t cols, T eps);

template <typename T>
void gelu(T* out, const T* in, std::size_t len);

template <typename T>
void gelu_backward(T* grad_in, const T* in, const T* grad_out,
                   std::size_t len);

}  // namespace viqa::kernels

namespace viqa::reference {

template <typename T>
void gemm_nn(T* c, const T* a, const T* b, std::size_t m, std::size_t k,
             std::size_t n, bool accumulate);

template <typename T>
void gemm_nt(T* c, const T* a, const T* b, std::size_t m, std::size_t q,
             std::size_t p, bool accumulate);

template <typename T>
void gemm_tn(T* c, const T* a, const T* b, std::size_t m, std::size_t p,
             std::size_t n, bool accumulate);

template <typename T>
void transpose(T* out, const T* in, std::size_t rows, std::size_t cols);

template <typename T>
void softmax_rows(T* out, const T* in, std::size_t rows, std::size_t cols);

template <typename T>
void layernorm_rows(T* out, T* normalized, T* rstd, const T* in, const T* gain,
                    const T* bias, std::size_t rows, std::size_t cols, T eps);

template <typename T>
void gelu(T* out, const T* in, std::size_t len);

}  // namespace viqa::reference
