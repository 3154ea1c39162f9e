#include "hfpinn/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "hfpinn/rng.hpp"

namespace hfpinn {

namespace {

constexpr int kMaxRejectionTries = 200000;
constexpr double kTopBiasSlab = 0.2;  // top fraction of the height used by biased selection

double clip_unit(double v) { return std::clamp(v, -1.0, 1.0); }

Vec3 radial_unit(const MonoblockGeometry& g, double theta) {
  return {std::cos(theta), std::sin(theta), 0.0};
}

SamplePoint interior_sample(const MonoblockGeometry& g, Region want, double t_lo, double t_hi,
                            bool top_biased, SampleCategory cat, Rng& rng) {
  for (int tries = 0; tries < kMaxRejectionTries; ++tries) {
    const double z_lo = top_biased ? (1.0 - kTopBiasSlab) * g.height_z : 0.0;
    Vec3 p{rng.uniform(0.0, g.length_x), rng.uniform(0.0, g.width_y),
           rng.uniform(z_lo, g.height_z)};
    const Region r = classify_material(p, g);
    const bool ok = (want == Region::Outside) ? is_solid(r) : (r == want);
    if (ok) {
      SamplePoint s;
      s.x = p.x;
      s.y = p.y;
      s.z = p.z;
      s.t = (cat == SampleCategory::Initial) ? 0.0 : rng.uniform(t_lo, t_hi);
      s.category = cat;
      return s;
    }
  }
  throw BudgetInfeasible("rejection sampling failed; region has (near) zero measure");
}

SamplePoint cylinder_sample(const MonoblockGeometry& g, double radius, SampleCategory cat,
                            bool normal_inward, double t_lo, double t_hi, Rng& rng) {
  const double theta = rng.uniform(0.0, 2.0 * M_PI);
  const Vec3 rad = radial_unit(g, theta);
  SamplePoint s;
  s.x = g.axis_x + radius * rad.x;
  s.y = g.axis_y + radius * rad.y;
  s.z = rng.uniform(0.0, g.height_z);
  s.t = rng.uniform(t_lo, t_hi);
  s.category = cat;
  s.normal = normal_inward ? -1.0 * rad : rad;
  return s;
}

}  // namespace

const char* category_name(SampleCategory c) {
  switch (c) {
    case SampleCategory::InteriorW: return "InteriorW";
    case SampleCategory::InteriorCu: return "InteriorCu";
    case SampleCategory::InteriorCuCrZr: return "InteriorCuCrZr";
    case SampleCategory::TopBC: return "TopBC";
    case SampleCategory::AdiabaticBC: return "AdiabaticBC";
    case SampleCategory::ConvectiveBC: return "ConvectiveBC";
    case SampleCategory::IfaceCuCrZrCu: return "IfaceCuCrZrCu";
    case SampleCategory::IfaceCuW: return "IfaceCuW";
    case SampleCategory::Supervision: return "Supervision";
    case SampleCategory::Initial: return "Initial";
  }
  return "?";
}

SampleCategory category_from_name(const std::string& name) {
  for (int i = 0; i < kNumSampleCategories; ++i) {
    const auto c = static_cast<SampleCategory>(i);
    if (name == category_name(c)) return c;
  }
  throw std::invalid_argument("unknown sample category: " + name);
}

std::array<std::size_t, kNumSampleCategories> SampleSet::category_counts() const {
  std::array<std::size_t, kNumSampleCategories> counts{};
  for (const auto& p : points) counts[static_cast<int>(p.category)]++;
  return counts;
}

std::size_t SampleSet::count(SampleCategory c) const {
  return category_counts()[static_cast<int>(c)];
}

NormalizationSpec NormalizationSpec::from_domain(const MonoblockGeometry& g, double t_lo,
                                                 double t_hi) {
  NormalizationSpec spec;
  spec.x_min = 0.0;
  spec.x_max = g.length_x;
  spec.y_min = 0.0;
  spec.y_max = g.width_y;
  spec.z_min = 0.0;
  spec.z_max = g.height_z;
  spec.t_min = t_lo;
  spec.t_max = t_hi;
  spec.validate();
  return spec;
}

void NormalizationSpec::validate() const {
  if (!(x_max > x_min && y_max > y_min && z_max > z_min && t_max > t_min)) {
    throw DegenerateAxis("normalization bounds must satisfy max > min on every axis");
  }
}

std::array<double, 4> NormalizationSpec::scales() const {
  return {2.0 / (x_max - x_min), 2.0 / (y_max - y_min), 2.0 / (z_max - z_min),
          2.0 / (t_max - t_min)};
}

std::array<double, 4> normalize_xyzt(double x, double y, double z, double t,
                                     const NormalizationSpec& spec) {
  spec.validate();
  return {2.0 * (x - spec.x_min) / (spec.x_max - spec.x_min) - 1.0,
          2.0 * (y - spec.y_min) / (spec.y_max - spec.y_min) - 1.0,
          2.0 * (z - spec.z_min) / (spec.z_max - spec.z_min) - 1.0,
          2.0 * (t - spec.t_min) / (spec.t_max - spec.t_min) - 1.0};
}

std::array<double, 4> normalize(const SamplePoint& p, const NormalizationSpec& spec) {
  return normalize_xyzt(p.x, p.y, p.z, p.t, spec);
}

std::array<double, 4> denormalize(const std::array<double, 4>& q, const NormalizationSpec& spec) {
  spec.validate();
  return {spec.x_min + 0.5 * (q[0] + 1.0) * (spec.x_max - spec.x_min),
          spec.y_min + 0.5 * (q[1] + 1.0) * (spec.y_max - spec.y_min),
          spec.z_min + 0.5 * (q[2] + 1.0) * (spec.z_max - spec.z_min),
          spec.t_min + 0.5 * (q[3] + 1.0) * (spec.t_max - spec.t_min)};
}

SampleSet sample_collocation(const MonoblockGeometry& g, const SamplingBudget& budget,
                             double t_lo, double t_hi, uint64_t seed) {
  g.validate();
  const int counts[] = {budget.interior_cucrzr, budget.interior_cu,  budget.interior_w,
                        budget.adiabatic,       budget.top,          budget.convective,
                        budget.iface_cucrzr_cu, budget.iface_cu_w,   budget.initial};
  for (int c : counts) {
    if (c < 0) throw BudgetInfeasible("budget counts must be >= 0");
  }
  if (!(t_hi > t_lo)) throw BudgetInfeasible("time range is empty");
  if (budget.top_bias_fraction < 0.0 || budget.top_bias_fraction > 1.0) {
    throw BudgetInfeasible("top_bias_fraction must lie in [0, 1]");
  }

  SampleSet set;
  set.points.reserve(static_cast<std::size_t>(budget.interior_cucrzr + budget.interior_cu +
                                              budget.interior_w + budget.adiabatic + budget.top +
                                              budget.convective + budget.iface_cucrzr_cu +
                                              budget.iface_cu_w + budget.initial));

  // One independent stream per category: changing one count leaves the
  // other categories' points unchanged.
  const struct {
    SampleCategory cat;
    Region region;
    int n;
  } interior[] = {
      {SampleCategory::InteriorCuCrZr, Region::CuCrZr, budget.interior_cucrzr},
      {SampleCategory::InteriorCu, Region::Cu, budget.interior_cu},
      {SampleCategory::InteriorW, Region::W, budget.interior_w},
  };
  int stream = 0;
  for (const auto& spec : interior) {
    Rng rng(derive_seed(seed, stream++));
    const int n_biased = static_cast<int>(std::ceil(budget.top_bias_fraction * spec.n));
    for (int i = 0; i < spec.n; ++i) {
      set.points.push_back(
          interior_sample(g, spec.region, t_lo, t_hi, i < n_biased, spec.cat, rng));
    }
  }

  {  // adiabatic: bottom plus the four side faces, area weighted
    Rng rng(derive_seed(seed, stream++));
    const double bottom_area = g.length_x * g.width_y - M_PI * g.r_coolant * g.r_coolant;
    const double areas[5] = {bottom_area, g.width_y * g.height_z, g.width_y * g.height_z,
                             g.length_x * g.height_z, g.length_x * g.height_z};
    const double total = areas[0] + areas[1] + areas[2] + areas[3] + areas[4];
    for (int i = 0; i < budget.adiabatic; ++i) {
      const double pick = rng.uniform(0.0, total);
      double acc = 0.0;
      int face = 0;
      for (; face < 4; ++face) {
        acc += areas[face];
        if (pick < acc) break;
      }
      SamplePoint s;
      s.category = SampleCategory::AdiabaticBC;
      s.t = rng.uniform(t_lo, t_hi);
      switch (face) {
        case 0: {  // bottom, coolant disk excluded
          for (int tries = 0;; ++tries) {
            if (tries >= kMaxRejectionTries)
              throw BudgetInfeasible("bottom face sampling failed");
            s.x = rng.uniform(0.0, g.length_x);
            s.y = rng.uniform(0.0, g.width_y);
            if (g.radial_distance(s.x, s.y) >= g.r_coolant) break;
          }
          s.z = 0.0;
          s.normal = Vec3{0.0, 0.0, -1.0};
          break;
        }
        case 1:
          s.x = 0.0;
          s.y = rng.uniform(0.0, g.width_y);
          s.z = rng.uniform(0.0, g.height_z);
          s.normal = Vec3{-1.0, 0.0, 0.0};
          break;
        case 2:
          s.x = g.length_x;
          s.y = rng.uniform(0.0, g.width_y);
          s.z = rng.uniform(0.0, g.height_z);
          s.normal = Vec3{1.0, 0.0, 0.0};
          break;
        case 3:
          s.x = rng.uniform(0.0, g.length_x);
          s.y = 0.0;
          s.z = rng.uniform(0.0, g.height_z);
          s.normal = Vec3{0.0, -1.0, 0.0};
          break;
        default:
          s.x = rng.uniform(0.0, g.length_x);
          s.y = g.width_y;
          s.z = rng.uniform(0.0, g.height_z);
          s.normal = Vec3{0.0, 1.0, 0.0};
          break;
      }
      set.points.push_back(s);
    }
  }

  {  // top face, coolant disk excluded
    Rng rng(derive_seed(seed, stream++));
    for (int i = 0; i < budget.top; ++i) {
      SamplePoint s;
      s.category = SampleCategory::TopBC;
      for (int tries = 0;; ++tries) {
        if (tries >= kMaxRejectionTries) throw BudgetInfeasible("top face sampling failed");
        s.x = rng.uniform(0.0, g.length_x);
        s.y = rng.uniform(0.0, g.width_y);
        if (g.radial_distance(s.x, s.y) >= g.r_coolant) break;
      }
      s.z = g.height_z;
      s.t = rng.uniform(t_lo, t_hi);
      s.normal = Vec3{0.0, 0.0, 1.0};
      set.points.push_back(s);
    }
  }

  {
    Rng rng(derive_seed(seed, stream++));
    for (int i = 0; i < budget.convective; ++i) {
      set.points.push_back(cylinder_sample(g, g.r_coolant, SampleCategory::ConvectiveBC,
                                           /*normal_inward=*/true, t_lo, t_hi, rng));
    }
  }
  {
    Rng rng(derive_seed(seed, stream++));
    for (int i = 0; i < budget.iface_cucrzr_cu; ++i) {
      set.points.push_back(cylinder_sample(g, g.r_cucrzr_outer, SampleCategory::IfaceCuCrZrCu,
                                           /*normal_inward=*/false, t_lo, t_hi, rng));
    }
  }
  {
    Rng rng(derive_seed(seed, stream++));
    for (int i = 0; i < budget.iface_cu_w; ++i) {
      set.points.push_back(cylinder_sample(g, g.r_cu_outer, SampleCategory::IfaceCuW,
                                           /*normal_inward=*/false, t_lo, t_hi, rng));
    }
  }
  {  // initial condition points: anywhere solid, t = 0
    Rng rng(derive_seed(seed, stream++));
    for (int i = 0; i < budget.initial; ++i) {
      set.points.push_back(interior_sample(g, Region::Outside, t_lo, t_hi,
                                           /*top_biased=*/false, SampleCategory::Initial, rng));
    }
  }
  return set;
}

SampleSet perturb_region(const SampleSet& points, const TrustRegionState& state,
                         const MonoblockGeometry& g, const NormalizationSpec& spec,
                         uint64_t seed) {
  if (state.sigma < state.sigma_floor) {
    throw std::invalid_argument("trust-region sigma below its floor");
  }
  const double w = state.region_width();
  SampleSet out;
  out.points.reserve(points.points.size());
  Rng rng(seed);
  const auto s = spec.scales();

  for (const auto& p : points.points) {
    SamplePoint q = p;
    switch (p.category) {
      case SampleCategory::Supervision:
        break;  // measured sites are fixed
      case SampleCategory::InteriorW:
      case SampleCategory::InteriorCu:
      case SampleCategory::InteriorCuCrZr:
      case SampleCategory::Initial: {
        auto n = normalize(p, spec);
        const int naxes = (p.category == SampleCategory::Initial) ? 3 : 4;
        for (int a = 0; a < naxes; ++a) n[a] = clip_unit(n[a] + rng.uniform(0.0, w));
        const auto phys = denormalize(n, spec);
        q.x = phys[0];
        q.y = phys[1];
        q.z = phys[2];
        if (p.category != SampleCategory::Initial) q.t = phys[3];
        const Region before = classify_material({p.x, p.y, p.z}, g);
        const Region after = classify_material({q.x, q.y, q.z}, g);
        const bool ok = (p.category == SampleCategory::Initial) ? is_solid(after)
                                                                : (after == before);
        if (!ok) q = p;  // crossing a material boundary reverts the point
        break;
      }
      case SampleCategory::TopBC:
      case SampleCategory::AdiabaticBC: {
        auto n = normalize(p, spec);
        const Vec3 face_n = p.normal.value_or(Vec3{0.0, 0.0, 1.0});
        // Perturb the two in-plane axes plus time; the face coordinate is pinned.
        for (int a = 0; a < 3; ++a) {
          const double na = (a == 0) ? face_n.x : (a == 1) ? face_n.y : face_n.z;
          if (std::abs(na) > 0.5) continue;
          n[a] = clip_unit(n[a] + rng.uniform(0.0, w));
        }
        n[3] = clip_unit(n[3] + rng.uniform(0.0, w));
        const auto phys = denormalize(n, spec);
        SamplePoint cand = q;
        cand.x = phys[0];
        cand.y = phys[1];
        cand.z = phys[2];
        cand.t = phys[3];
        const bool horizontal = std::abs(face_n.z) > 0.5;
        if (!horizontal || g.radial_distance(cand.x, cand.y) >= g.r_coolant) {
          q = cand;  // otherwise the move would land on the coolant disk
        } else {
          q.t = phys[3];
        }
        break;
      }
      case SampleCategory::ConvectiveBC:
      case SampleCategory::IfaceCuCrZrCu:
      case SampleCategory::IfaceCuW: {
        const double radius = (p.category == SampleCategory::ConvectiveBC) ? g.r_coolant
                              : (p.category == SampleCategory::IfaceCuCrZrCu)
                                  ? g.r_cucrzr_outer
                                  : g.r_cu_outer;
        const double theta = std::atan2(p.y - g.axis_y, p.x - g.axis_x);
        // Arc-length move measured in normalized units, then reprojected onto
        // the cylinder so the surface constraint stays exact.
        const double xi_arc = rng.uniform(0.0, w);
        const double tangent_len =
            radius * std::hypot(s[0] * std::sin(theta), s[1] * std::cos(theta));
        const double theta2 = theta + (tangent_len > 0.0 ? xi_arc / tangent_len : 0.0);
        const Vec3 rad = radial_unit(g, theta2);
        q.x = g.axis_x + radius * rad.x;
        q.y = g.axis_y + radius * rad.y;
        auto n = normalize(p, spec);
        n[2] = clip_unit(n[2] + rng.uniform(0.0, w));
        n[3] = clip_unit(n[3] + rng.uniform(0.0, w));
        const auto phys = denormalize(n, spec);
        q.z = phys[2];
        q.t = phys[3];
        q.normal = (p.category == SampleCategory::ConvectiveBC) ? -1.0 * rad : rad;
        break;
      }
    }
    out.points.push_back(q);
  }
  return out;
}

void update_trust_region(TrustRegionState& state, std::span<const double> new_grad) {
  for (double v : new_grad) {
    if (!std::isfinite(v)) throw NonFiniteGradient("trust-region gradient has non-finite entries");
  }
  if (!state.grad_buffer.empty() && state.grad_buffer.front().size() != new_grad.size()) {
    state.grad_buffer.clear();
  }
  state.grad_buffer.emplace_back(new_grad.begin(), new_grad.end());
  while (state.grad_buffer.size() > state.buffer_capacity) state.grad_buffer.pop_front();

  const std::size_t dim = new_grad.size();
  const double m = static_cast<double>(state.grad_buffer.size());
  double l1 = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    double mean = 0.0;
    for (const auto& gvec : state.grad_buffer) mean += gvec[i];
    mean /= m;
    double var = 0.0;
    for (const auto& gvec : state.grad_buffer) {
      const double d = gvec[i] - mean;
      var += d * d;
    }
    l1 += std::sqrt(var / m);  // population std
  }
  state.sigma = std::max(l1, state.sigma_floor);
}

void write_sample_csv(std::ostream& os, const SampleSet& set) {
  os << "category,x,y,z,t,nx,ny,nz,T_data\n";
  os << std::setprecision(17);
  for (const auto& p : set.points) {
    os << category_name(p.category) << ',' << p.x << ',' << p.y << ',' << p.z << ',' << p.t << ',';
    if (p.normal) {
      os << p.normal->x << ',' << p.normal->y << ',' << p.normal->z;
    } else {
      os << ",,";
    }
    os << ',';
    if (p.t_data) os << *p.t_data;
    os << '\n';
  }
}

SampleSet read_sample_csv(std::istream& is) {
  SampleSet set;
  std::string line;
  if (!std::getline(is, line) || line.rfind("category,", 0) != 0) {
    throw std::runtime_error("sample CSV: missing or malformed header");
  }
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    cells.resize(9);
    SamplePoint p;
    try {
      p.category = category_from_name(cells[0]);
      p.x = std::stod(cells[1]);
      p.y = std::stod(cells[2]);
      p.z = std::stod(cells[3]);
      p.t = std::stod(cells[4]);
      if (!cells[5].empty()) {
        p.normal = Vec3{std::stod(cells[5]), std::stod(cells[6]), std::stod(cells[7])};
      }
      if (!cells[8].empty()) p.t_data = std::stod(cells[8]);
    } catch (const std::exception& e) {
      throw std::runtime_error("sample CSV: bad row at line " + std::to_string(lineno) + ": " +
                               e.what());
    }
    set.points.push_back(p);
  }
  return set;
}

}  // namespace hfpinn
