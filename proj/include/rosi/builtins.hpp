#ifndef ROSI_BUILTINS_HPP
#define ROSI_BUILTINS_HPP

#include <string>

#include "rosi/group.hpp"

namespace rosi {

// Named constructions: Sn, An, Cn, D8, Q8, Qd(p). Each carries a verified
// order; a mismatch aborts construction.
Group make_builtin(const std::string& name);

} // namespace rosi

#endif
