#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hfpinn/geometry.hpp"

namespace hfpinn {

enum class SampleCategory {
  InteriorW,
  InteriorCu,
  InteriorCuCrZr,
  TopBC,
  AdiabaticBC,
  ConvectiveBC,
  IfaceCuCrZrCu,
  IfaceCuW,
  Supervision,
  Initial,
};

constexpr int kNumSampleCategories = 10;

const char* category_name(SampleCategory c);
SampleCategory category_from_name(const std::string& name);

struct SamplePoint {
  double x = 0.0, y = 0.0, z = 0.0;  // meters
  double t = 0.0;                    // seconds
  SampleCategory category = SampleCategory::InteriorW;
  std::optional<Vec3> normal;        // boundary/interface points only
  std::optional<double> t_data;      // supervision points only [degC]
};

struct SampleSet {
  std::vector<SamplePoint> points;

  std::array<std::size_t, kNumSampleCategories> category_counts() const;
  std::size_t count(SampleCategory c) const;
};

/// Per-category collocation counts. The eight non-initial fields default to
/// the reference budget; `initial` covers the t = 0 condition points.
struct SamplingBudget {
  int interior_cucrzr = 1845;
  int interior_cu = 5160;
  int interior_w = 6500;
  int adiabatic = 1000;
  int top = 2500;
  int convective = 250;
  int iface_cucrzr_cu = 170;
  int iface_cu_w = 290;
  int initial = 2000;
  /// Fraction of interior points forced into the top 20% slab near the
  /// heated surface (0 disables the biased-selection option).
  double top_bias_fraction = 0.0;
};

struct BudgetInfeasible : std::runtime_error {
  explicit BudgetInfeasible(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateAxis : std::runtime_error {
  explicit DegenerateAxis(const std::string& what) : std::runtime_error(what) {}
};

struct NonFiniteGradient : std::runtime_error {
  explicit NonFiniteGradient(const std::string& what) : std::runtime_error(what) {}
};

/// Axis bounds for mapping physical coordinates into [-1, 1]^4.
struct NormalizationSpec {
  double x_min = 0.0, x_max = 1.0;
  double y_min = 0.0, y_max = 1.0;
  double z_min = 0.0, z_max = 1.0;
  double t_min = 0.0, t_max = 1.0;

  static NormalizationSpec from_domain(const MonoblockGeometry& g, double t_lo, double t_hi);

  /// d(normalized)/d(physical) per axis, i.e. 2 / (max - min).
  std::array<double, 4> scales() const;
  void validate() const;  // throws DegenerateAxis
};

std::array<double, 4> normalize(const SamplePoint& p, const NormalizationSpec& spec);
std::array<double, 4> normalize_xyzt(double x, double y, double z, double t,
                                     const NormalizationSpec& spec);
std::array<double, 4> denormalize(const std::array<double, 4>& q, const NormalizationSpec& spec);

/// Adaptive region-size state for the region-optimization step. sigma is
/// recalibrated from the L1 norm of the elementwise standard deviation of the
/// recent gradient history.
struct TrustRegionState {
  double region_size = 1e-3;   // r, in normalized units
  double sigma = 1.0;          // current calibration value
  double sigma_floor = 1e-2;
  std::size_t buffer_capacity = 10;
  std::deque<std::vector<double>> grad_buffer;

  double region_width() const { return region_size / sigma; }
};

/// Draws the categorized collocation set. Deterministic for a fixed seed.
SampleSet sample_collocation(const MonoblockGeometry& g, const SamplingBudget& budget,
                             double t_lo, double t_hi, uint64_t seed);

/// One-sided uniform perturbation of each point's free coordinates in
/// normalized space, width r / sigma. Boundary points move only tangentially
/// within their surface (and in time); interior points that would cross a
/// material boundary are reverted; supervision points are left untouched.
SampleSet perturb_region(const SampleSet& points, const TrustRegionState& state,
                         const MonoblockGeometry& g, const NormalizationSpec& spec,
                         uint64_t seed);

/// Appends a gradient to the history (evicting beyond capacity) and
/// recalibrates sigma = max(||elementwise_std||_1, sigma_floor).
void update_trust_region(TrustRegionState& state, std::span<const double> new_grad);

/// CSV with header `category,x,y,z,t,nx,ny,nz,T_data`; empty fields where
/// not applicable.
void write_sample_csv(std::ostream& os, const SampleSet& set);
SampleSet read_sample_csv(std::istream& is);

}  // namespace hfpinn
