#include "hfpinn/geometry.hpp"

#include <algorithm>

namespace hfpinn {

namespace {

// Top-surface heating parameters (degC, meters).
constexpr double kConstantTop = 100.0;
constexpr double kGaussianPeak = 300.0;
constexpr double kGaussianCenterX = 0.014;
constexpr double kGaussianWidth = 0.006;

const MaterialProps kPropsW{173.0, 19298.0, 129.0};
const MaterialProps kPropsCu{403.0, 8960.0, 390.0};
const MaterialProps kPropsCuCrZr{318.0, 8920.0, 388.0};

}  // namespace

void MonoblockGeometry::validate() const {
  if (!(length_x > 0.0 && width_y > 0.0 && height_z > 0.0)) {
    throw InvalidGeometry("box extents must be positive");
  }
  if (!(0.0 < r_coolant && r_coolant < r_cucrzr_outer && r_cucrzr_outer < r_cu_outer)) {
    throw InvalidGeometry("radii must satisfy 0 < r_coolant < r_cucrzr_outer < r_cu_outer");
  }
  const bool fits = axis_x - r_cu_outer >= 0.0 && axis_x + r_cu_outer <= length_x &&
                    axis_y - r_cu_outer >= 0.0 && axis_y + r_cu_outer <= width_y;
  if (!fits) {
    throw InvalidGeometry("outer cylinder does not fit inside the box");
  }
}

Region classify_material(const Vec3& p, const MonoblockGeometry& g) {
  if (!g.inside_box(p)) {
    return Region::Outside;
  }
  const double d = g.radial_distance(p.x, p.y);
  if (d < g.r_coolant) {
    return Region::Coolant;
  }
  if (d < g.r_cucrzr_outer) {
    return Region::CuCrZr;
  }
  if (d < g.r_cu_outer) {
    return Region::Cu;
  }
  return Region::W;
}

const MaterialProps& material_props(MaterialId m) {
  switch (m) {
    case MaterialId::W: return kPropsW;
    case MaterialId::Cu: return kPropsCu;
    case MaterialId::CuCrZr: return kPropsCuCrZr;
  }
  throw std::logic_error("unreachable material id");
}

BoundaryPoint classify_boundary(const Vec3& p, const MonoblockGeometry& g, double tol) {
  if (!g.inside_box(p, tol)) {
    throw NotOnBoundary("point lies outside the domain closure");
  }
  const double d = g.radial_distance(p.x, p.y);

  // Box faces first; the coolant disk is excluded from the solid top/bottom.
  if (std::abs(p.z - g.height_z) <= tol && d >= g.r_coolant - tol) {
    return {BoundaryKind::TopConstantTemp, {0.0, 0.0, 1.0}};
  }
  if (std::abs(p.z) <= tol && d >= g.r_coolant - tol) {
    return {BoundaryKind::Adiabatic, {0.0, 0.0, -1.0}};
  }
  if (std::abs(p.x) <= tol) return {BoundaryKind::Adiabatic, {-1.0, 0.0, 0.0}};
  if (std::abs(p.x - g.length_x) <= tol) return {BoundaryKind::Adiabatic, {1.0, 0.0, 0.0}};
  if (std::abs(p.y) <= tol) return {BoundaryKind::Adiabatic, {0.0, -1.0, 0.0}};
  if (std::abs(p.y - g.width_y) <= tol) return {BoundaryKind::Adiabatic, {0.0, 1.0, 0.0}};

  if (d > tol) {
    const Vec3 radial = (1.0 / d) * Vec3{p.x - g.axis_x, p.y - g.axis_y, 0.0};
    if (std::abs(d - g.r_coolant) <= tol) {
      // Outward from the solid means pointing into the coolant.
      return {BoundaryKind::CoolantConvective, -1.0 * radial};
    }
    if (std::abs(d - g.r_cucrzr_outer) <= tol) {
      return {BoundaryKind::InterfaceCuCrZrCu, radial};
    }
    if (std::abs(d - g.r_cu_outer) <= tol) {
      return {BoundaryKind::InterfaceCuW, radial};
    }
  }
  throw NotOnBoundary("no boundary or interface surface within tolerance");
}

double top_temperature(const Vec3& p, BoundaryMode mode) {
  if (mode == BoundaryMode::Constant) {
    return kConstantTop;
  }
  const double dx = p.x - kGaussianCenterX;
  return kGaussianPeak * std::exp(-(dx * dx) / (kGaussianWidth * kGaussianWidth));
}

const char* material_name(MaterialId m) {
  switch (m) {
    case MaterialId::W: return "W";
    case MaterialId::Cu: return "Cu";
    case MaterialId::CuCrZr: return "CuCrZr";
  }
  return "?";
}

const char* region_name(Region r) {
  switch (r) {
    case Region::W: return "W";
    case Region::Cu: return "Cu";
    case Region::CuCrZr: return "CuCrZr";
    case Region::Coolant: return "Coolant";
    case Region::Outside: return "Outside";
  }
  return "?";
}

MaterialId region_material(Region r) {
  switch (r) {
    case Region::W: return MaterialId::W;
    case Region::Cu: return MaterialId::Cu;
    case Region::CuCrZr: return MaterialId::CuCrZr;
    default: break;
  }
  throw std::logic_error("region is not a solid material");
}

}  // namespace hfpinn
