#include "hfpinn/metrics.hpp"

#include <cmath>

namespace hfpinn {

MetricReport evaluate(std::span<const double> pred, std::span<const double> truth) {
  if (pred.size() != truth.size()) {
    throw LengthMismatch("evaluate: prediction and reference lengths differ");
  }
  if (truth.empty()) {
    throw LengthMismatch("evaluate: empty inputs");
  }
  double abs_err = 0.0, abs_ref = 0.0, sq_err = 0.0, sq_ref = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const double d = pred[i] - truth[i];
    abs_err += std::abs(d);
    abs_ref += std::abs(truth[i]);
    sq_err += d * d;
    sq_ref += truth[i] * truth[i];
  }
  if (abs_ref == 0.0 || sq_ref == 0.0) {
    throw ZeroDenominator("evaluate: reference field is identically zero");
  }
  MetricReport r;
  r.n = truth.size();
  r.rmae = abs_err / abs_ref;
  r.rrmse = std::sqrt(sq_err / sq_ref);
  r.mae = abs_err / static_cast<double>(truth.size());
  return r;
}

}  // namespace hfpinn
