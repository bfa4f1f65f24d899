#include "mgnn/tensor/ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mgnn {

namespace {

void require_rank2(const Tensor& t, const char* op) {
  if (t.rank() != 2) {
    throw std::invalid_argument(std::string(op) + ": expected a rank-2 tensor, got " + shape_string(t.shape()));
  }
}

void require_same_shape(const Tensor& a, const Tensor& b, const char* op) {
  if (a.shape() != b.shape()) {
    throw std::invalid_argument(std::string(op) + ": shape mismatch " + shape_string(a.shape()) + " vs " +
                                shape_string(b.shape()));
  }
}

// Elementwise map with a derivative expressed in terms of input and output.
template <typename Fwd, typename Deriv>
Tensor elementwise(const Tensor& x, Fwd fwd, Deriv deriv) {
  auto xv = x.values();
  std::vector<double> out(xv.size());
  for (std::size_t i = 0; i < xv.size(); ++i) out[i] = fwd(xv[i]);
  auto out_copy = std::make_shared<std::vector<double>>(out);
  return Tensor::make_op(x.shape(), std::move(out), {x}, [x, out_copy, deriv](std::span<const double> g) mutable {
    auto xv = x.values();
    auto gx = x.mutable_grad();
    for (std::size_t i = 0; i < g.size(); ++i) gx[i] += g[i] * deriv(xv[i], (*out_copy)[i]);
  });
}

}  // namespace

Tensor matmul(const Tensor& a, const Tensor& b) {
  require_rank2(a, "matmul");
  require_rank2(b, "matmul");
  const std::size_t m = a.rows();
  const std::size_t k = a.cols();
  const std::size_t n = b.cols();
  if (b.rows() != k) {
    throw std::invalid_argument("matmul: inner dimensions differ " + shape_string(a.shape()) + " x " +
                                shape_string(b.shape()));
  }
  auto av = a.values();
  auto bv = b.values();
  std::vector<double> out(m * n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    double* orow = out.data() + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = av[i * k + p];
      const double* brow = bv.data() + p * n;
      for (std::size_t j = 0; j < n; ++j) orow[j] += aip * brow[j];
    }
  }
  return Tensor::make_op({m, n}, std::move(out), {a, b}, [a, b, m, k, n](std::span<const double> g) mutable {
    auto av = a.values();
    auto bv = b.values();
    if (a.requires_grad()) {
      auto ga = a.mutable_grad();
      for (std::size_t i = 0; i < m; ++i) {
        const double* grow = g.data() + i * n;
        for (std::size_t p = 0; p < k; ++p) {
          const double* brow = bv.data() + p * n;
          double s = 0.0;
          for (std::size_t j = 0; j < n; ++j) s += grow[j] * brow[j];
          ga[i * k + p] += s;
        }
      }
    }
    if (b.requires_grad()) {
      auto gb = b.mutable_grad();
      for (std::size_t i = 0; i < m; ++i) {
        const double* grow = g.data() + i * n;
        for (std::size_t p = 0; p < k; ++p) {
          const double aip = av[i * k + p];
          double* gbrow = gb.data() + p * n;
          for (std::size_t j = 0; j < n; ++j) gbrow[j] += aip * grow[j];
        }
      }
    }
  });
}

Tensor transpose(const Tensor& a) {
  require_rank2(a, "transpose");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  auto av = a.values();
  std::vector<double> out(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out[j * m + i] = av[i * n + j];
  return Tensor::make_op({n, m}, std::move(out), {a}, [a, m, n](std::span<const double> g) mutable {
    auto ga = a.mutable_grad();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) ga[i * n + j] += g[j * m + i];
  });
}

Tensor add(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "add");
  auto av = a.values();
  auto bv = b.values();
  std::vector<double> out(av.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = av[i] + bv[i];
  return Tensor::make_op(a.shape(), std::move(out), {a, b}, [a, b](std::span<const double> g) mutable {
    if (a.requires_grad()) a.accumulate_grad(g);
    if (b.requires_grad()) b.accumulate_grad(g);
  });
}

Tensor sub(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "sub");
  auto av = a.values();
  auto bv = b.values();
  std::vector<double> out(av.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = av[i] - bv[i];
  return Tensor::make_op(a.shape(), std::move(out), {a, b}, [a, b](std::span<const double> g) mutable {
    if (a.requires_grad()) a.accumulate_grad(g);
    if (b.requires_grad()) {
      auto gb = b.mutable_grad();
      for (std::size_t i = 0; i < g.size(); ++i) gb[i] -= g[i];
    }
  });
}

Tensor mul(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "mul");
  auto av = a.values();
  auto bv = b.values();
  std::vector<double> out(av.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = av[i] * bv[i];
  return Tensor::make_op(a.shape(), std::move(out), {a, b}, [a, b](std::span<const double> g) mutable {
    auto av = a.values();
    auto bv = b.values();
    if (a.requires_grad()) {
      auto ga = a.mutable_grad();
      for (std::size_t i = 0; i < g.size(); ++i) ga[i] += g[i] * bv[i];
    }
    if (b.requires_grad()) {
      auto gb = b.mutable_grad();
      for (std::size_t i = 0; i < g.size(); ++i) gb[i] += g[i] * av[i];
    }
  });
}

Tensor scale(const Tensor& a, double s) {
  auto av = a.values();
  std::vector<double> out(av.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = av[i] * s;
  return Tensor::make_op(a.shape(), std::move(out), {a}, [a, s](std::span<const double> g) mutable {
    auto ga = a.mutable_grad();
    for (std::size_t i = 0; i < g.size(); ++i) ga[i] += g[i] * s;
  });
}

Tensor add_row_vector(const Tensor& a, const Tensor& bias) {
  require_rank2(a, "add_row_vector");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (bias.numel() != n) {
    throw std::invalid_argument("add_row_vector: bias has " + std::to_string(bias.numel()) + " elements, expected " +
                                std::to_string(n));
  }
  auto av = a.values();
  auto bv = bias.values();
  std::vector<double> out(av.begin(), av.end());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] += bv[j];
  return Tensor::make_op(a.shape(), std::move(out), {a, bias}, [a, bias, m, n](std::span<const double> g) mutable {
    if (a.requires_grad()) a.accumulate_grad(g);
    if (bias.requires_grad()) {
      auto gb = bias.mutable_grad();
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) gb[j] += g[i * n + j];
    }
  });
}

Tensor leaky_relu(const Tensor& x, double slope) {
  if (!(slope > 0.0 && slope < 1.0)) throw std::invalid_argument("leaky_relu: slope must lie in (0, 1)");
  return elementwise(
      x, [slope](double v) { return v >= 0.0 ? v : slope * v; },
      [slope](double v, double) { return v >= 0.0 ? 1.0 : slope; });
}

Tensor relu(const Tensor& x) {
  return elementwise(
      x, [](double v) { return v > 0.0 ? v : 0.0; }, [](double v, double) { return v > 0.0 ? 1.0 : 0.0; });
}

Tensor elu(const Tensor& x, double alpha) {
  return elementwise(
      x, [alpha](double v) { return v > 0.0 ? v : alpha * std::expm1(v); },
      [alpha](double v, double y) { return v > 0.0 ? 1.0 : y + alpha; });
}

Tensor sigmoid(const Tensor& x) {
  return elementwise(
      x,
      [](double v) {
        if (v >= 0.0) return 1.0 / (1.0 + std::exp(-v));
        const double e = std::exp(v);
        return e / (1.0 + e);
      },
      [](double, double y) { return y * (1.0 - y); });
}

Tensor dropout(const Tensor& x, double p, Rng& rng, bool training) {
  if (p < 0.0 || p >= 1.0) throw std::invalid_argument("dropout: probability must lie in [0, 1)");
  if (!training || p == 0.0) return x;
  auto xv = x.values();
  auto mask = std::make_shared<std::vector<double>>(xv.size());
  const double keep_scale = 1.0 / (1.0 - p);
  std::vector<double> out(xv.size());
  for (std::size_t i = 0; i < xv.size(); ++i) {
    (*mask)[i] = uniform01(rng) < p ? 0.0 : keep_scale;
    out[i] = xv[i] * (*mask)[i];
  }
  return Tensor::make_op(x.shape(), std::move(out), {x}, [x, mask](std::span<const double> g) mutable {
    auto gx = x.mutable_grad();
    for (std::size_t i = 0; i < g.size(); ++i) gx[i] += g[i] * (*mask)[i];
  });
}

Tensor sum(const Tensor& x) {
  double s = 0.0;
  for (double v : x.values()) s += v;
  return Tensor::make_op({}, {s}, {x}, [x](std::span<const double> g) mutable {
    auto gx = x.mutable_grad();
    for (double& v : gx) v += g[0];
  });
}

Tensor mean(const Tensor& x) {
  const auto n = static_cast<double>(x.numel());
  return scale(sum(x), 1.0 / n);
}

Tensor reshape(const Tensor& x, Shape shape) {
  if (shape_numel(shape) != x.numel()) {
    throw std::invalid_argument("reshape: " + shape_string(x.shape()) + " -> " + shape_string(shape));
  }
  auto xv = x.values();
  return Tensor::make_op(std::move(shape), std::vector<double>(xv.begin(), xv.end()), {x},
                         [x](std::span<const double> g) mutable { x.accumulate_grad(g); });
}

Tensor concat_cols(const std::vector<Tensor>& parts) {
  if (parts.empty()) throw std::invalid_argument("concat_cols: nothing to concatenate");
  const std::size_t m = parts.front().rows();
  std::size_t n = 0;
  std::vector<std::size_t> widths;
  for (const Tensor& p : parts) {
    if (p.rows() != m) throw std::invalid_argument("concat_cols: row counts differ");
    widths.push_back(p.cols());
    n += p.cols();
  }
  std::vector<double> out(m * n);
  std::size_t col = 0;
  for (std::size_t t = 0; t < parts.size(); ++t) {
    auto pv = parts[t].values();
    const std::size_t w = widths[t];
    for (std::size_t i = 0; i < m; ++i) std::copy_n(pv.data() + i * w, w, out.data() + i * n + col);
    col += w;
  }
  return Tensor::make_op({m, n}, std::move(out), parts, [parts, widths, m, n](std::span<const double> g) mutable {
    std::size_t col = 0;
    for (std::size_t t = 0; t < parts.size(); ++t) {
      const std::size_t w = widths[t];
      if (parts[t].requires_grad()) {
        auto gp = parts[t].mutable_grad();
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < w; ++j) gp[i * w + j] += g[i * n + col + j];
      }
      col += w;
    }
  });
}

Tensor concat_rows(const std::vector<Tensor>& parts) {
  if (parts.empty()) throw std::invalid_argument("concat_rows: nothing to concatenate");
  const std::size_t n = parts.front().cols();
  std::size_t m = 0;
  for (const Tensor& p : parts) {
    if (p.cols() != n) throw std::invalid_argument("concat_rows: column counts differ");
    m += p.rows();
  }
  std::vector<double> out;
  out.reserve(m * n);
  for (const Tensor& p : parts) out.insert(out.end(), p.values().begin(), p.values().end());
  return Tensor::make_op({m, n}, std::move(out), parts, [parts](std::span<const double> g) mutable {
    std::size_t offset = 0;
    for (const Tensor& p : parts) {
      const std::size_t len = p.numel();
      if (p.requires_grad()) p.accumulate_grad(g.subspan(offset, len));
      offset += len;
    }
  });
}

Tensor slice_rows(const Tensor& x, std::size_t begin, std::size_t count) {
  require_rank2(x, "slice_rows");
  const std::size_t n = x.cols();
  if (begin + count > x.rows()) throw std::out_of_range("slice_rows: range exceeds tensor");
  auto xv = x.values().subspan(begin * n, count * n);
  return Tensor::make_op({count, n}, std::vector<double>(xv.begin(), xv.end()), {x},
                         [x, begin, n](std::span<const double> g) mutable {
                           auto gx = x.mutable_grad().subspan(begin * n, g.size());
                           for (std::size_t i = 0; i < g.size(); ++i) gx[i] += g[i];
                         });
}

Tensor slice_cols(const Tensor& x, std::size_t begin, std::size_t count) {
  require_rank2(x, "slice_cols");
  const std::size_t m = x.rows();
  const std::size_t n = x.cols();
  if (begin + count > n) throw std::out_of_range("slice_cols: range exceeds tensor");
  auto xv = x.values();
  std::vector<double> out(m * count);
  for (std::size_t i = 0; i < m; ++i) std::copy_n(xv.data() + i * n + begin, count, out.data() + i * count);
  return Tensor::make_op({m, count}, std::move(out), {x}, [x, begin, count, m, n](std::span<const double> g) mutable {
    auto gx = x.mutable_grad();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < count; ++j) gx[i * n + begin + j] += g[i * count + j];
  });
}

Tensor gather_rows(const Tensor& x, const IndexArray& idx) {
  require_rank2(x, "gather_rows");
  const std::size_t n = x.cols();
  const std::size_t rows = x.rows();
  auto xv = x.values();
  std::vector<double> out(idx->size() * n);
  for (std::size_t e = 0; e < idx->size(); ++e) {
    const std::size_t r = (*idx)[e];
    if (r >= rows) throw std::out_of_range("gather_rows: index out of range");
    std::copy_n(xv.data() + r * n, n, out.data() + e * n);
  }
  return Tensor::make_op({idx->size(), n}, std::move(out), {x}, [x, idx, n](std::span<const double> g) mutable {
    auto gx = x.mutable_grad();
    for (std::size_t e = 0; e < idx->size(); ++e) {
      double* dst = gx.data() + static_cast<std::size_t>((*idx)[e]) * n;
      const double* src = g.data() + e * n;
      for (std::size_t j = 0; j < n; ++j) dst[j] += src[j];
    }
  });
}

Tensor scatter_add_rows(const Tensor& x, const IndexArray& idx, std::size_t n_out) {
  require_rank2(x, "scatter_add_rows");
  if (idx->size() != x.rows()) throw std::invalid_argument("scatter_add_rows: one index per row required");
  const std::size_t n = x.cols();
  auto xv = x.values();
  std::vector<double> out(n_out * n, 0.0);
  for (std::size_t e = 0; e < idx->size(); ++e) {
    const std::size_t r = (*idx)[e];
    if (r >= n_out) throw std::out_of_range("scatter_add_rows: index out of range");
    for (std::size_t j = 0; j < n; ++j) out[r * n + j] += xv[e * n + j];
  }
  return Tensor::make_op({n_out, n}, std::move(out), {x}, [x, idx, n](std::span<const double> g) mutable {
    auto gx = x.mutable_grad();
    for (std::size_t e = 0; e < idx->size(); ++e) {
      const double* src = g.data() + static_cast<std::size_t>((*idx)[e]) * n;
      for (std::size_t j = 0; j < n; ++j) gx[e * n + j] += src[j];
    }
  });
}

Tensor replicas_to_nodes(const Tensor& h, std::size_t n_nodes, std::size_t n_layers) {
  require_rank2(h, "replicas_to_nodes");
  if (h.rows() != n_nodes * n_layers) {
    throw std::invalid_argument("replicas_to_nodes: expected " + std::to_string(n_nodes * n_layers) +
                                " replica rows, got " + std::to_string(h.rows()));
  }
  const std::size_t f = h.cols();
  auto hv = h.values();
  std::vector<double> out(hv.size());
  for (std::size_t a = 0; a < n_layers; ++a)
    for (std::size_t i = 0; i < n_nodes; ++i)
      std::copy_n(hv.data() + (a * n_nodes + i) * f, f, out.data() + i * n_layers * f + a * f);
  return Tensor::make_op({n_nodes, n_layers * f}, std::move(out), {h},
                         [h, n_nodes, n_layers, f](std::span<const double> g) mutable {
                           auto gh = h.mutable_grad();
                           for (std::size_t a = 0; a < n_layers; ++a)
                             for (std::size_t i = 0; i < n_nodes; ++i)
                               for (std::size_t j = 0; j < f; ++j)
                                 gh[(a * n_nodes + i) * f + j] += g[i * n_layers * f + a * f + j];
                         });
}

Tensor segment_softmax(const Tensor& scores, const IndexArray& segment, std::size_t n_segments) {
  if (scores.rank() != 1 && scores.rank() != 2) {
    throw std::invalid_argument("segment_softmax: scores must be rank 1 or 2");
  }
  const std::size_t E = scores.shape()[0];
  const std::size_t H = scores.rank() == 2 ? scores.shape()[1] : 1;
  if (segment->size() != E) throw std::invalid_argument("segment_softmax: one segment id per row required");
  auto sv = scores.values();

  std::vector<double> seg_max(n_segments * H, -std::numeric_limits<double>::infinity());
  for (std::size_t e = 0; e < E; ++e) {
    const std::size_t s = (*segment)[e];
    if (s >= n_segments) throw std::out_of_range("segment_softmax: segment id out of range");
    for (std::size_t h = 0; h < H; ++h) seg_max[s * H + h] = std::max(seg_max[s * H + h], sv[e * H + h]);
  }
  std::vector<double> out(E * H);
  std::vector<double> seg_sum(n_segments * H, 0.0);
  for (std::size_t e = 0; e < E; ++e) {
    const std::size_t s = (*segment)[e];
    for (std::size_t h = 0; h < H; ++h) {
      const double v = std::exp(sv[e * H + h] - seg_max[s * H + h]);
      out[e * H + h] = v;
      seg_sum[s * H + h] += v;
    }
  }
  for (std::size_t e = 0; e < E; ++e) {
    const std::size_t s = (*segment)[e];
    for (std::size_t h = 0; h < H; ++h) out[e * H + h] /= seg_sum[s * H + h];
  }
  auto y = std::make_shared<std::vector<double>>(out);
  return Tensor::make_op(scores.shape(), std::move(out), {scores},
                         [scores, segment, n_segments, y, E, H](std::span<const double> g) mutable {
                           // dx_e = y_e * (g_e - sum_{e' in seg} g_e' y_e')
                           std::vector<double> dot(n_segments * H, 0.0);
                           for (std::size_t e = 0; e < E; ++e) {
                             const std::size_t s = (*segment)[e];
                             for (std::size_t h = 0; h < H; ++h) dot[s * H + h] += g[e * H + h] * (*y)[e * H + h];
                           }
                           auto gs = scores.mutable_grad();
                           for (std::size_t e = 0; e < E; ++e) {
                             const std::size_t s = (*segment)[e];
                             for (std::size_t h = 0; h < H; ++h)
                               gs[e * H + h] += (*y)[e * H + h] * (g[e * H + h] - dot[s * H + h]);
                           }
                         });
}

Tensor head_dot(const Tensor& z, const Tensor& att) {
  require_rank2(z, "head_dot");
  require_rank2(att, "head_dot");
  const std::size_t n = z.rows();
  const std::size_t H = att.rows();
  const std::size_t F = att.cols();
  if (z.cols() != H * F) {
    throw std::invalid_argument("head_dot: z has " + std::to_string(z.cols()) + " columns, expected " +
                                std::to_string(H * F));
  }
  auto zv = z.values();
  auto av = att.values();
  std::vector<double> out(n * H, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t h = 0; h < H; ++h) {
      double s = 0.0;
      for (std::size_t f = 0; f < F; ++f) s += zv[i * H * F + h * F + f] * av[h * F + f];
      out[i * H + h] = s;
    }
  return Tensor::make_op({n, H}, std::move(out), {z, att}, [z, att, n, H, F](std::span<const double> g) mutable {
    auto zv = z.values();
    auto av = att.values();
    if (z.requires_grad()) {
      auto gz = z.mutable_grad();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t h = 0; h < H; ++h) {
          const double gi = g[i * H + h];
          for (std::size_t f = 0; f < F; ++f) gz[i * H * F + h * F + f] += gi * av[h * F + f];
        }
    }
    if (att.requires_grad()) {
      auto ga = att.mutable_grad();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t h = 0; h < H; ++h) {
          const double gi = g[i * H + h];
          for (std::size_t f = 0; f < F; ++f) ga[h * F + f] += gi * zv[i * H * F + h * F + f];
        }
    }
  });
}

Tensor attention_aggregate(const Tensor& alpha, const Tensor& z, const IndexArray& src, const IndexArray& dst,
                           std::size_t n_out) {
  require_rank2(alpha, "attention_aggregate");
  require_rank2(z, "attention_aggregate");
  const std::size_t E = alpha.rows();
  const std::size_t H = alpha.cols();
  if (z.cols() % H != 0) throw std::invalid_argument("attention_aggregate: z width not divisible by heads");
  const std::size_t F = z.cols() / H;
  const std::size_t HF = H * F;
  if (src->size() != E || dst->size() != E) throw std::invalid_argument("attention_aggregate: edge count mismatch");
  auto av = alpha.values();
  auto zv = z.values();
  const std::size_t n_in = z.rows();
  std::vector<double> out(n_out * HF, 0.0);
  for (std::size_t e = 0; e < E; ++e) {
    const std::size_t s = (*src)[e];
    const std::size_t d = (*dst)[e];
    if (s >= n_in || d >= n_out) throw std::out_of_range("attention_aggregate: endpoint out of range");
    const double* zrow = zv.data() + s * HF;
    double* orow = out.data() + d * HF;
    for (std::size_t h = 0; h < H; ++h) {
      const double w = av[e * H + h];
      for (std::size_t f = 0; f < F; ++f) orow[h * F + f] += w * zrow[h * F + f];
    }
  }
  return Tensor::make_op({n_out, HF}, std::move(out), {alpha, z},
                         [alpha, z, src, dst, E, H, F, HF](std::span<const double> g) mutable {
                           auto av = alpha.values();
                           auto zv = z.values();
                           const bool need_alpha = alpha.requires_grad();
                           const bool need_z = z.requires_grad();
                           std::span<double> ga = need_alpha ? alpha.mutable_grad() : std::span<double>{};
                           std::span<double> gz = need_z ? z.mutable_grad() : std::span<double>{};
                           for (std::size_t e = 0; e < E; ++e) {
                             const std::size_t s = (*src)[e];
                             const std::size_t d = (*dst)[e];
                             const double* grow = g.data() + d * HF;
                             const double* zrow = zv.data() + s * HF;
                             for (std::size_t h = 0; h < H; ++h) {
                               if (need_alpha) {
                                 double acc = 0.0;
                                 for (std::size_t f = 0; f < F; ++f) acc += grow[h * F + f] * zrow[h * F + f];
                                 ga[e * H + h] += acc;
                               }
                               if (need_z) {
                                 const double w = av[e * H + h];
                                 double* gzrow = gz.data() + s * HF;
                                 for (std::size_t f = 0; f < F; ++f) gzrow[h * F + f] += w * grow[h * F + f];
                               }
                             }
                           }
                         });
}

Tensor head_mean(const Tensor& z, std::size_t heads) {
  require_rank2(z, "head_mean");
  if (heads == 0 || z.cols() % heads != 0) throw std::invalid_argument("head_mean: width not divisible by heads");
  const std::size_t n = z.rows();
  const std::size_t F = z.cols() / heads;
  auto zv = z.values();
  std::vector<double> out(n * F, 0.0);
  const double inv = 1.0 / static_cast<double>(heads);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t h = 0; h < heads; ++h)
      for (std::size_t f = 0; f < F; ++f) out[i * F + f] += zv[i * heads * F + h * F + f] * inv;
  return Tensor::make_op({n, F}, std::move(out), {z}, [z, n, heads, F, inv](std::span<const double> g) mutable {
    auto gz = z.mutable_grad();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t h = 0; h < heads; ++h)
        for (std::size_t f = 0; f < F; ++f) gz[i * heads * F + h * F + f] += g[i * F + f] * inv;
  });
}

}  // namespace mgnn
