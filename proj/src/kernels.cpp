#include "viqa/kernels.hpp"

#include <cmath>
#include <cstdint>

namespace viqa::kernels {

template <typename T>
void gemm_nn(T* c, const T* a, const T* b, std::size_t m, std::size_t k,
             std::size_t n, bool accumulate) {
  const std::int64_t mm = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < mm; ++i) {
    T* crow = c + i * n;
    if (!accumulate) {
      for (std::size_t j = 0; j < n; ++j) crow[j] = T(0);
    }
    const T* arow = a + i * k;
    // k outer, j inner: contiguous writes, k-ascending sums per element.
    for (std::size_t t = 0; t < k; ++t) {
      const T av = arow[t];
      const T* brow = b + t * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

template <typename T>
void gemm_nt(T* c, const T* a, const T* b, std::size_t m, std::size_t q,
             std::size_t p, bool accumulate) {
  const std::int64_t mm = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < mm; ++i) {
    const T* arow = a + i * q;
    T* crow = c + i * p;
    for (std::size_t j = 0; j < p; ++j) {
      const T* brow = b + j * q;
      T acc = T(0);
      for (std::size_t t = 0; t < q; ++t) acc += arow[t] * brow[t];
      crow[j] = accumulate ? crow[j] + acc : acc;
    }
  }
}

template <typename T>
void gemm_tn(T* c, const T* a, const T* b, std::size_t m, std::size_t p,
             std::size_t n, bool accumulate) {
  const std::int64_t pp = static_cast<std::int64_t>(p);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < pp; ++i) {
    T* crow = c + i * n;
    if (!accumulate) {
      for (std::size_t j = 0; j < n; ++j) crow[j] = T(0);
    }
    for (std::size_t t = 0; t < m; ++t) {
      const T av = a[t * p + i];
      const T* brow = b + t * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

template <typename T>
void transpose(T* out, const T* in, std::size_t rows, std::size_t cols) {
  const std::int64_t rr = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rr; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[j * rows + i] = in[i * cols + j];
  }
}

template <typename T>
void softmax_rows(T* out, const T* in, std::size_t rows, std::size_t cols) {
  const std::int64_t rr = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rr; ++i) {
    const T* x = in + i * cols;
    T* y = out + i * cols;
    T mx = x[0];
    for (std::size_t j = 1; j < cols; ++j) mx = x[j] > mx ? x[j] : mx;
    T sum = T(0);
    for (std::size_t j = 0; j < cols; ++j) {
      y[j] = std::exp(x[j] - mx);
      sum += y[j];
    }
    for (std::size_t j = 0; j < cols; ++j) y[j] /= sum;
  }
}

template <typename T>
void layernorm_rows(T* out, T* normalized, T* rstd, const T* in, const T* gain,
                    const T* bias, std::size_t rows, std::size_t cols, T eps) {
  const std::int64_t rr = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rr; ++i) {
    const T* x = in + i * cols;
    T* y = out + i * cols;
    T* xn = normalized + i * cols;
    T mean = T(0);
    for (std::size_t j = 0; j < cols; ++j) mean += x[j];
    mean /= static_cast<T>(cols);
    T var = T(0);
    for (std::size_t j = 0; j < cols; ++j) {
      const T d = x[j] - mean;
      var += d * d;
    }
    var /= static_cast<T>(cols);
    const T r = T(1) / std::sqrt(var + eps);
    rstd[i] = r;
    for (std::size_t j = 0; j < cols; ++j) {
      xn[j] = (x[j] - mean) * r;
      y[j] = xn[j] * gain[j] + bias[j];
    }
  }
}

template <typename T>
void gelu(T* out, const T* in, std::size_t len) {
  const std::int64_t nn = static_cast<std::int64_t>(len);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < nn; ++i) {
    const T x = in[i];
    out[i] = x * T(0.5) * (T(1) + std::erf(x * T(0.7071067811865475244)));
  }
}

template <typename T>
void gelu_backward(T* grad_in, const T* in, const T* grad_out,
                   std::size_t len) {
  const std::int64_t nn = static_cast<std::int64_t>(len);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < nn; ++i) {
    const T x = in[i];
    const T cdf = T(0.5) * (T(1) + std::erf(x * T(0.7071067811865475244)));
    const T pdf = std::exp(T(-0.5) * x * x) * T(0.3989422804014326779);
    grad_in[i] += grad_out[i] * (cdf + x * pdf);
  }
}

template void gemm_nn<float>(float*, const float*, const float*, std::size_t,
                             std::size_t, std::size_t, bool);
template void gemm_nn<double>(double*, const double*, const double*,
                              std::size_t, std::size_t, std::size_t, bool);
template void gemm_nt<float>(float*, const float*, const float*, std::size_t,
                             std::size_t, std::size_t, bool);
template void gemm_nt<double>(double*, const double*, const double*,
                              std::size_t, std::size_t, std::size_t, bool);
template void gemm_tn<float>(float*, const float*, const float*, std::size_t,
                             std::size_t, std::size_t, bool);
template void gemm_tn<double>(double*, const double*, const double*,
                              std::size_t, std::size_t, std::size_t, bool);
template void transpose<float>(float*, const float*, std::size_t, std::size_t);
template void transpose<double>(double*, const double*, std::size_t,
                                std::size_t);
template void softmax_rows<float>(float*, const float*, std::size_t,
                                  std::size_t);
template void softmax_rows<double>(double*, const double*, std::size_t,
                                   std::size_t);
template void layernorm_rows<float>(float*, float*, float*, const float*,
                                    const float*, const float*, std::size_t,
                                    std::size_t, float);
template void layernorm_rows<double>(double*, double*, double*, const double*,
                                     const double*, const double*, std::size_t,
                                     std::size_t, double);
template void gelu<float>(float*, const float*, std::size_t);
template void gelu<double>(double*, const double*, std::size_t);
template void gelu_backward<float>(float*, const float*, const float*,
                                   std::size_t);
template void gelu_backward<double>(double*, const double*, const double*,
                                    std::size_t);

}  // namespace viqa::kernels

namespace viqa::reference {

template <typename T>
void gemm_nn(T* c, const T* a, const T* b, std::size_t m, std::size_t k,
             std::size_t n, bool accumulate) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      T acc = T(0);
      for (std::size_t t = 0; t < k; ++t) acc += a[i * k + t] * b[t * n + j];
      c[i * n + j] = accumulate ? c[i * n + j] + acc : acc;
    }
  }
}

template <typename T>
void gemm_nt(T* c, const T* a, const T* b, std::size_t m, std::size_t q,
             std::size_t p, bool accumulate) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      T acc = T(0);
      for (std::size_t t = 0; t < q; ++t) acc += a[i * q + t] * b[j * q + t];
      c[i * p + j] = accumulate ? c[i * p + j] + acc : acc;
    }
  }
}

template <typename T>
void gemm_tn(T* c, const T* a, const T* b, std::size_t m, std::size_t p,
             std::size_t n, bool accumulate) {
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      T acc = T(0);
      for (std::size_t t = 0; t < m; ++t) acc += a[t * p + i] * b[t * n + j];
      c[i * n + j] = accumulate ? c[i * n + j] + acc : acc;
    }
  }
}

template <typename T>
void transpose(T* out, const T* in, std::size_t rows, std::size_t cols) {
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out[j * rows + i] = in[i * cols + j];
}

template <typename T>
void softmax_rows(T* out, const T* in, std::size_t rows, std::size_t cols) {
  for (std::size_t i = 0; i < rows; ++i) {
    const T* x = in + i * cols;
    T* y = out + i * cols;
    T mx = x[0];
    for (std::size_t j = 1; j < cols; ++j) mx = x[j] > mx ? x[j] : mx;
    T sum = T(0);
    for (std::size_t j = 0; j < cols; ++j) {
      y[j] = std::exp(x[j] - mx);
      sum += y[j];
    }
    for (std::size_t j = 0; j < cols; ++j) y[j] /= sum;
  }
}

template <typename T>
void layernorm_rows(T* out, T* normalized, T* rstd, const T* in, const T* gain,
                    const T* bias, std::size_t rows, std::size_t cols, T eps) {
  for (std::size_t i = 0; i < rows; ++i) {
    const T* x = in + i * cols;
    T mean = T(0);
    for (std::size_t j = 0; j < cols; ++j) mean += x[j];
    mean /= static_cast<T>(cols);
    T var = T(0);
    for (std::size_t j = 0; j < cols; ++j) var += (x[j] - mean) * (x[j] - mean);
    var /= static_cast<T>(cols);
    const T r = T(1) / std::sqrt(var + eps);
    rstd[i] = r;
    for (std::size_t j = 0; j < cols; ++j) {
      normalized[i * cols + j] = (x[j] - mean) * r;
      out[i * cols + j] = normalized[i * cols + j] * gain[j] + bias[j];
    }
  }
}

template <typename T>
void gelu(T* out, const T* in, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    const T x = in[i];
    out[i] = x * T(0.5) * (T(1) + std::erf(x * T(0.7071067811865475244)));
  }
}

template void gemm_nn<float>(float*, const float*, const float*, std::size_t,
                             std::size_t, std::size_t, bool);
template void gemm_nn<double>(double*, const double*, const double*,
                              std::size_t, std::size_t, std::size_t, bool);
template void gemm_nt<float>(float*, const float*, const float*, std::size_t,
                             std::size_t, std::size_t, bool);
template void gemm_nt<double>(double*, const double*, const double*,
                              std::size_t, std::size_t, std::size_t, bool);
template void gemm_tn<float>(float*, const float*, const float*, std::size_t,
                             std::size_t, std::size_t, bool);
template void gemm_tn<double>(double*, const double*, const double*,
                              std::size_t, std::size_t, std::size_t, bool);
template void transpose<float>(float*, const float*, std::size_t, std::size_t);
template void transpose<double>(double*, const double*, std::size_t,
                                std::size_t);
template void softmax_rows<float>(float*, const float*, std::size_t,
                                  std::size_t);
template void softmax_rows<double>(double*, const double*, std::size_t,
                                   std::size_t);
template void layernorm_rows<float>(float*, float*, float*, const float*,
                                    const float*, const float*, std::size_t,
                                    std::size_t, float);
template void layernorm_rows<double>(double*, double*, double*, const double*,
                                     const double*, const double*, std::size_t,
                                     std::size_t, double);
template void gelu<float>(float*, const float*, std::size_t);
template void gelu<double>(double*, const double*, std::size_t);

}  // namespace viqa::reference
