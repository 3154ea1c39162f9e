#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace hfpinn {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

enum class MaterialId { W, Cu, CuCrZr };

/// Result of a point-in-domain query: one of the three solid materials,
/// the coolant channel, or outside the block.
enum class Region { W, Cu, CuCrZr, Coolant, Outside };

enum class BoundaryKind {
  TopConstantTemp,
  Adiabatic,
  CoolantConvective,
  InterfaceCuCrZrCu,
  InterfaceCuW,
};

/// Heating mode applied on the top surface.
enum class BoundaryMode { Constant, Gaussian };

struct MaterialProps {
  double k;    // thermal conductivity [W/(m K)]
  double rho;  // density [kg/m^3]
  double cp;   // specific heat capacity [J/(kg K)]

  double diffusivity() const { return k / (rho * cp); }
};

/// Robin boundary parameters at the coolant wall.
struct ConvectiveSpec {
  double h = 1.0e5;      // convective coefficient [W/(m^2 K)]
  double t_fluid = 22.0; // coolant temperature [degC]
};

struct NotOnBoundary : std::runtime_error {
  explicit NotOnBoundary(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidGeometry : std::runtime_error {
  explicit InvalidGeometry(const std::string& what) : std::runtime_error(what) {}
};

/// Water-cooled monoblock: a box with three coaxial cylindrical shells
/// (coolant / CuCrZr tube / Cu interlayer) spanning the full height,
/// tungsten everywhere else.  Lengths in meters.
struct MonoblockGeometry {
  double length_x = 0.030;
  double width_y = 0.028;
  double height_z = 0.012;
  double axis_x = 0.015;  // pipe axis, parallel to z
  double axis_y = 0.014;
  double r_coolant = 0.006;
  double r_cucrzr_outer = 0.0075;
  double r_cu_outer = 0.0105;

  double radial_distance(double px, double py) const {
    const double dx = px - axis_x;
    const double dy = py - axis_y;
    return std::sqrt(dx * dx + dy * dy);
  }

  bool inside_box(const Vec3& p, double tol = 0.0) const {
    return p.x >= -tol && p.x <= length_x + tol && p.y >= -tol && p.y <= width_y + tol &&
           p.z >= -tol && p.z <= height_z + tol;
  }

  /// Throws InvalidGeometry if the radii are not strictly ordered or the
  /// outer cylinder does not fit inside the box.
  void validate() const;
};

/// Total classification: every point maps to a material, the coolant, or Outside.
Region classify_material(const Vec3& p, const MonoblockGeometry& g);

/// Constant Table-1 properties; pure lookup.
const MaterialProps& material_props(MaterialId m);

struct BoundaryPoint {
  BoundaryKind kind;
  Vec3 normal;  // unit outward normal (interfaces: inner -> outer radial)
};

/// Classifies a point lying within `tol` of a boundary or interface surface
/// and returns the outward unit normal.  Throws NotOnBoundary otherwise.
BoundaryPoint classify_boundary(const Vec3& p, const MonoblockGeometry& g, double tol = 1e-9);

/// Prescribed temperature on the top surface.
/// Constant mode: 100 degC everywhere. Gaussian mode: 300 exp(-(x-0.014)^2/0.006^2).
double top_temperature(const Vec3& p, BoundaryMode mode);

const char* material_name(MaterialId m);
const char* region_name(Region r);

inline bool is_solid(Region r) {
  return r == Region::W || r == Region::Cu || r == Region::CuCrZr;
}

/// Precondition: is_solid(r).
MaterialId region_material(Region r);

}  // namespace hfpinn
