// SPDX-License-Identifier: Apache-2.0
//
// Serial reference kernels. Kept deliberately naive: these are the ground
// truth the OpenMP variants are tested against bit-for-bit.
#pragma once

namespace csifeed::kernels::serial {

// C(m,n) = A(m,k) * B(k,n)
template <typename T>
void gemm(const T* a, const T* b, T* c, int m, int k, int n) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      T acc = T(0);
      for (int l = 0; l < k; ++l) acc += a[i * k + l] * b[l * n + j];
      c[i * n + j] = acc;
    }
}

// C(m,n) = A(m,k) * B(n,k)^T
template <typename T>
void gemm_nt(const T* a, const T* b, T* c, int m, int k, int n) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      T acc = T(0);
      for (int l = 0; l < k; ++l) acc += a[i * k + l] * b[j * k + l];
      c[i * n + j] = acc;
    }
}

// C(m,n) = A(k,m)^T * B(k,n)
template <typename T>
void gemm_tn(const T* a, const T* b, T* c, int m, int k, int n) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      T acc = T(0);
      for (int l = 0; l < k; ++l) acc += a[l * m + i] * b[l * n + j];
      c[i * n + j] = acc;
    }
}

// y(N,Cout,OH,OW) = cross-correlation of x(N,Cin,H,W) with kern(Cout,Cin,kh,kw).
template <typename T>
void conv2d_fwd(const T* x, const T* kern, const T* bias, T* y, int N, int Cin, int H,
                int W, int Cout, int kh, int kw, int stride, int pad, int OH, int OW) {
  for (int n = 0; n < N; ++n)
    for (int co = 0; co < Cout; ++co)
      for (int oh = 0; oh < OH; ++oh)
        for (int ow = 0; ow < OW; ++ow) {
          T acc = bias ? bias[co] : T(0);
          for (int ci = 0; ci < Cin; ++ci)
            for (int a = 0; a < kh; ++a) {
              const int ih = oh * stride - pad + a;
              if (ih < 0 || ih >= H) continue;
              for (int b = 0; b < kw; ++b) {
                const int iw = ow * stride - pad + b;
                if (iw < 0 || iw >= W) continue;
                acc += x[((static_cast<long>(n) * Cin + ci) * H + ih) * W + iw] *
                       kern[((static_cast<long>(co) * Cin + ci) * kh + a) * kw + b];
              }
            }
          y[((static_cast<long>(n) * Cout + co) * OH + oh) * OW + ow] = acc;
        }
}

// dx for conv2d_fwd; gather form so each dx element is written once.
template <typename T>
void conv2d_gx(const T* dy, const T* kern, T* dx, int N, int Cin, int H, int W, int Cout,
               int kh, int kw, int stride, int pad, int OH, int OW) {
  for (int n = 0; n < N; ++n)
    for (int ci = 0; ci < Cin; ++ci)
      for (int ih = 0; ih < H; ++ih)
        for (int iw = 0; iw < W; ++iw) {
          T acc = T(0);
          for (int co = 0; co < Cout; ++co)
            for (int a = 0; a < kh; ++a) {
              const int t = ih + pad - a;
              if (t < 0 || t % stride) continue;
              const int oh = t / stride;
              if (oh >= OH) continue;
              for (int b = 0; b < kw; ++b) {
                const int u = iw + pad - b;
                if (u < 0 || u % stride) continue;
                const int ow = u / stride;
                if (ow >= OW) continue;
                acc += dy[((static_cast<long>(n) * Cout + co) * OH + oh) * OW + ow] *
                       kern[((static_cast<long>(co) * Cin + ci) * kh + a) * kw + b];
              }
            }
          dx[((static_cast<long>(n) * Cin + ci) * H + ih) * W + iw] = acc;
        }
}

// dk for conv2d_fwd.
template <typename T>
void conv2d_gk(const T* x, const T* dy, T* dk, int N, int Cin, int H, int W, int Cout,
               int kh, int kw, int stride, int pad, int OH, int OW) {
  for (int co = 0; co < Cout; ++co)
    for (int ci = 0; ci < Cin; ++ci)
      for (int a = 0; a < kh; ++a)
        for (int b = 0; b < kw; ++b) {
          T acc = T(0);
          for (int n = 0; n < N; ++n)
            for (int oh = 0; oh < OH; ++oh) {
              const int ih = oh * stride - pad + a;
              if (ih < 0 || ih >= H) continue;
              for (int ow = 0; ow < OW; ++ow) {
                const int iw = ow * stride - pad + b;
                if (iw < 0 || iw >= W) continue;
                acc += dy[((static_cast<long>(n) * Cout + co) * OH + oh) * OW + ow] *
                       x[((static_cast<long>(n) * Cin + ci) * H + ih) * W + iw];
              }
            }
          dk[((static_cast<long>(co) * Cin + ci) * kh + a) * kw + b] = acc;
        }
}

// Transposed convolution. x(N,Cin,H,W), kern(Cin,Cout,kh,kw),
// y(N,Cout,OH,OW) with OH = (H-1)*stride - 2*pad + kh.
template <typename T>
void deconv2d_fwd(const T* x, const T* kern, const T* bias, T* y, int N, int Cin, int H,
                  int W, int Cout, int kh, int kw, int stride, int pad, int OH, int OW) {
  for (int n = 0; n < N; ++n)
    for (int co = 0; co < Cout; ++co)
      for (int oh = 0; oh < OH; ++oh)
        for (int ow = 0; ow < OW; ++ow) {
          T acc = bias ? bias[co] : T(0);
          for (int ci = 0; ci < Cin; ++ci)
            for (int a = 0; a < kh; ++a) {
              const int t = oh + pad - a;
              if (t < 0 || t % stride) continue;
              const int ih = t / stride;
              if (ih >= H) continue;
              for (int b = 0; b < kw; ++b) {
                const int u = ow + pad - b;
                if (u < 0 || u % stride) continue;
                const int iw = u / stride;
                if (iw >= W) continue;
                acc += x[((static_cast<long>(n) * Cin + ci) * H + ih) * W + iw] *
                       kern[((static_cast<long>(ci) * Cout + co) * kh + a) * kw + b];
              }
            }
          y[((static_cast<long>(n) * Cout + co) * OH + oh) * OW + ow] = acc;
        }
}

// dx for deconv2d_fwd (a plain strided correlation against dy).
template <typename T>
void deconv2d_gx(const T* dy, const T* kern, T* dx, int N, int Cin, int H, int W,
                 int Cout, int kh, int kw, int stride, int pad, int OH, int OW) {
  for (int n = 0; n < N; ++n)
    for (int ci = 0; ci < Cin; ++ci)
      for (int ih = 0; ih < H; ++ih)
        for (int iw = 0; iw < W; ++iw) {
          T acc = T(0);
          for (int co = 0; co < Cout; ++co)
            for (int a = 0; a < kh; ++a) {
              const int oh = ih * stride - pad + a;
              if (oh < 0 || oh >= OH) continue;
              for (int b = 0; b < kw; ++b) {
                const int ow = iw * stride - pad + b;
                if (ow < 0 || ow >= OW) continue;
                acc += dy[((static_cast<long>(n) * Cout + co) * OH + oh) * OW + ow] *
                       kern[((static_cast<long>(ci) * Cout + co) * kh + a) * kw + b];
              }
            }
          dx[((static_cast<long>(n) * Cin + ci) * H + ih) * W + iw] = acc;
        }
}

// dk for deconv2d_fwd.
template <typename T>
void deconv2d_gk(const T* x, const T* dy, T* dk, int N, int Cin, int H, int W, int Cout,
                 int kh, int kw, int stride, int pad, int OH, int OW) {
  for (int ci = 0; ci < Cin; ++ci)
    for (int co = 0; co < Cout; ++co)
      for (int a = 0; a < kh; ++a)
        for (int b = 0; b < kw; ++b) {
          T acc = T(0);
          for (int n = 0; n < N; ++n)
            for (int ih = 0; ih < H; ++ih) {
              const int oh = ih * stride - pad + a;
              if (oh < 0 || oh >= OH) continue;
              for (int iw = 0; iw < W; ++iw) {
                const int ow = iw * stride - pad + b;
                if (ow < 0 || ow >= OW) continue;
                acc += x[((static_cast<long>(n) * Cin + ci) * H + ih) * W + iw] *
                       dy[((static_cast<long>(n) * Cout + co) * OH + oh) * OW + ow];
              }
            }
          dk[((static_cast<long>(ci) * Cout + co) * kh + a) * kw + b] = acc;
        }
}

}  // namespace csifeed::kernels::serial
