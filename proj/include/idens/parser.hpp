#ifndef IDENS_PARSER_HPP
#define IDENS_PARSER_HPP

#include <string>

#include "idens/gap_set.hpp"
#include "idens/ideal.hpp"
#include "idens/index_set.hpp"
#include "idens/step_sequence.hpp"
#include "idens/window_family.hpp"

namespace idens {

// Mini-language for sets, index sets, ideals, step sequences and window
// families (grammar documented in the README). Errors carry the offset of
// the offending token and the expected form.
//
//   sets:       empty | [0,1] u [2,3] | gapset(c=2)
//   index sets: ap(1,2) | squares | {1,2,3} with | & ! ( )
//   ideals:     fin | d0
//   sequences:  steps(mod=2; 0:3, 1:7; except 4 -> 0; on squares -> 1)
//   families:   symharm(p=0) | rgeom(p=0, c=2; except squares -> [-1,1])
//               | prefix(p=0; [-1,1], [-1/2,1/2]; then symharm(p=0))
SetSource parse_set(const std::string& text);
IndexSet parse_index_set(const std::string& text);
Ideal parse_ideal(const std::string& text);
StepSequence parse_steps(const std::string& text);
WindowFamily parse_family(const std::string& text);
Rational parse_rational(const std::string& text);

}  // namespace idens

#endif
