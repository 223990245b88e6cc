#pragma once

#include <cmath>

namespace heisenkep {

/// Point of the Heisenberg group in exponential coordinates.
template <class T>
struct GroupElement {
  T x{}, y{}, z{};
};

template <class T>
GroupElement<T> group_mul(const GroupElement<T>& g, const GroupElement<T>& h) {
  return {g.x + h.x, g.y + h.y, g.z + h.z + (g.x * h.y - h.x * g.y) / T(2)};
}

template <class T>
GroupElement<T> group_inv(const GroupElement<T>& g) {
  return {-g.x, -g.y, -g.z};
}

/// Homogeneous gauge sqrt((x^2+y^2)^2 + 16 z^2).
template <class T>
T rho(const GroupElement<T>& g) {
  using std::sqrt;
  T r2 = g.x * g.x + g.y * g.y;
  return sqrt(r2 * r2 + T(16) * g.z * g.z);
}

}  // namespace heisenkep
