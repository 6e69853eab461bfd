#ifndef ROSI_GCW_HPP
#define ROSI_GCW_HPP

#include <memory>
#include <string>

#include "rosi/orbitcat.hpp"
#include "rosi/superclass.hpp"

namespace rosi {

// Cell-complex input: JSON object
//   {"cells": [[{"stabilizer": "<classLabel>",
//                "boundary": [{"cell": idx, "coeff": n, "rep": "(1 2)"}, ...]},
//               ...], ...]}
// cells[d] lists the d-dimensional cell orbits; "rep" is a group element g in
// cycle notation, giving the morphism coset g.(target stabilizer class rep).
// The implied family is the downward closure of the stabilizer classes.
OCChainComplex complex_from_gcw_json(const Group& g, const std::string& jsonText);

std::string superclass_to_json(const Group& g, const SuperClassFunction& n);
SuperClassFunction superclass_from_json(const Group& g, const std::string& jsonText);

} // namespace rosi

#endif
