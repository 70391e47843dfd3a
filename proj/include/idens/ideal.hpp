#ifndef IDENS_IDEAL_HPP
#define IDENS_IDEAL_HPP

#include <string>

#include "idens/index_set.hpp"

namespace idens {

// The two proper admissible ideals the library works with: Fin (all
// finite sets) and the density-zero ideal I_d. Both contain every finite
// set and neither contains N itself.
enum class Ideal { fin, density_zero };

inline bool ideal_member(Ideal i, const IndexSet& s) {
  switch (i) {
    case Ideal::fin: return s.is_finite();
    case Ideal::density_zero: return s.density().is_zero();
  }
  return false;
}

// F(I) = { M : N \ M in I }.
inline bool filter_member(Ideal i, const IndexSet& s) {
  return ideal_member(i, ~s);
}

inline std::string to_string(Ideal i) {
  return i == Ideal::fin ? "fin" : "d0";
}

}  // namespace idens

#endif
