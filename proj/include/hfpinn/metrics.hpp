#pragma once

#include <span>
#include <stdexcept>
#include <string>

namespace hfpinn {

struct LengthMismatch : std::runtime_error {
  explicit LengthMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroDenominator : std::runtime_error {
  explicit ZeroDenominator(const std::string& what) : std::runtime_error(what) {}
};

struct MetricReport {
  double rmae = 0.0;   // sum |pred-truth| / sum |truth|
  double rrmse = 0.0;  // sqrt(sum (pred-truth)^2 / sum truth^2)
  double mae = 0.0;    // mean |pred-truth| [degC]
  std::size_t n = 0;
  std::string mode;
};

/// Errors of `pred` against `truth`. Throws LengthMismatch on unequal sizes,
/// ZeroDenominator when a relative metric has an all-zero reference.
MetricReport evaluate(std::span<const double> pred, std::span<const double> truth);

}  // namespace hfpinn
