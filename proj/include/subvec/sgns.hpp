#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "subvec/mat.hpp"

namespace subvec {

template <class Real>
Real sigmoid(Real x) {
  return Real(1) / (Real(1) + std::exp(-x));
}

namespace detail {

inline void check_row(std::size_t id, std::size_t rows, const char* what) {
  if (id >= rows) throw std::out_of_range(std::string(what) + " id out of range");
}

}  // namespace detail

/// h = sum of input rows over `segments`.
template <class Real>
void compose_segments(const Mat<Real>& input, std::span<const std::uint32_t> segments,
                      std::span<Real> out) {
  for (auto& v : out) v = Real(0);
  for (std::uint32_t s : segments) {
    detail::check_row(s, input.rows, "segment");
    auto row = input.row(s);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += row[j];
  }
}

/// Composition score: (sum of segment vectors) . (context output vector).
template <class Real>
Real sgns_score(const Mat<Real>& input, const Mat<Real>& output,
                std::span<const std::uint32_t> center_segments, std::uint32_t context_id) {
  detail::check_row(context_id, output.rows, "context");
  std::vector<Real> h(input.cols, Real(0));
  compose_segments(input, center_segments, std::span<Real>(h));
  auto ctx = output.row(context_id);
  Real dot = Real(0);
  for (std::size_t j = 0; j < h.size(); ++j) dot += h[j] * ctx[j];
  return dot;
}

/// Pair loss -[log s(score_pos) + sum_i log s(-score_neg_i)] at the current
/// parameters, without updating anything.
template <class Real>
Real sgns_pair_loss(const Mat<Real>& input, const Mat<Real>& output,
                    std::span<const std::uint32_t> center_segments, std::uint32_t context_id,
                    std::span<const std::uint32_t> negative_ids) {
  Real loss = -std::log(sigmoid(sgns_score(input, output, center_segments, context_id)));
  for (std::uint32_t neg : negative_ids)
    loss -= std::log(sigmoid(-sgns_score(input, output, center_segments, neg)));
  return loss;
}

/// One SGD step on the pair loss. Gradients:
///   d/dv_ctx   = (s(p) - 1) h
///   d/dv_neg_i = s(n_i) h
///   d/dv_s     = (s(p) - 1) v_ctx + sum_i s(n_i) v_neg_i
/// Returns the pair loss before the update.
template <class Real>
Real sgns_step(Mat<Real>& input, Mat<Real>& output,
               std::span<const std::uint32_t> center_segments, std::uint32_t context_id,
               std::span<const std::uint32_t> negative_ids, Real lr,
               std::vector<Real>& h_buf, std::vector<Real>& grad_buf) {
  const std::size_t dim = input.cols;
  detail::check_row(context_id, output.rows, "context");

  h_buf.resize(dim);
  grad_buf.resize(dim);
  compose_segments(input, center_segments, std::span<Real>(h_buf));
  for (auto& v : grad_buf) v = Real(0);

  auto dot_h = [&](std::span<const Real> row) {
    Real d = Real(0);
    for (std::size_t j = 0; j < dim; ++j) d += h_buf[j] * row[j];
    return d;
  };

  // Scores and coefficients first, so every update sees pre-step parameters.
  const Real score_pos = dot_h(output.row(context_id));
  Real loss = -std::log(sigmoid(score_pos));
  const Real coef_pos = sigmoid(score_pos) - Real(1);

  std::vector<Real> coef_neg(negative_ids.size());
  for (std::size_t i = 0; i < negative_ids.size(); ++i) {
    detail::check_row(negative_ids[i], output.rows, "negative");
    const Real score = dot_h(output.row(negative_ids[i]));
    loss -= std::log(sigmoid(-score));
    coef_neg[i] = sigmoid(score);
  }

  // Accumulate d/dh from pre-update rows (duplicate ids stay exact), then
  // apply the output updates, which depend only on h and the coefficients.
  {
    auto ctx = output.row(context_id);
    for (std::size_t j = 0; j < dim; ++j) grad_buf[j] += coef_pos * ctx[j];
  }
  for (std::size_t i = 0; i < negative_ids.size(); ++i) {
    auto neg = output.row(negative_ids[i]);
    for (std::size_t j = 0; j < dim; ++j) grad_buf[j] += coef_neg[i] * neg[j];
  }

  {
    auto ctx = output.row(context_id);
    for (std::size_t j = 0; j < dim; ++j) ctx[j] -= lr * coef_pos * h_buf[j];
  }
  for (std::size_t i = 0; i < negative_ids.size(); ++i) {
    auto neg = output.row(negative_ids[i]);
    for (std::size_t j = 0; j < dim; ++j) neg[j] -= lr * coef_neg[i] * h_buf[j];
  }

  for (std::uint32_t s : center_segments) {
    auto row = input.row(s);
    for (std::size_t j = 0; j < dim; ++j) row[j] -= lr * grad_buf[j];
  }
  return loss;
}

template <class Real>
Real sgns_step(Mat<Real>& input, Mat<Real>& output,
               std::span<const std::uint32_t> center_segments, std::uint32_t context_id,
               std::span<const std::uint32_t> negative_ids, Real lr) {
  std::vector<Real> h, grad;
  return sgns_step(input, output, center_segments, context_id, negative_ids, lr, h, grad);
}

}  // namespace subvec
