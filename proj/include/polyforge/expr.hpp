#pragma once

#include <string>

#include "polyforge/constructions.hpp"

namespace polyforge {

// Builds a polytope from the CLI mini-language. A spec is either a family
// atom or a construction call:
//
//   family  := name [":" int {"," int}] [":pyr=" int]
//              names: triplex, gT, pm, ta, z, sigma3, wp, sq, simplex
//   call    := fn "(" arg {"," arg} ")"
//              fn: simplex | pyr | prism | product | dsum | wed | trunc
//   arg     := spec | int | face        (ints where the operator expects one)
//   face    := "handle:" name | "vertex:" int | "[" int {"," int} "]"
//
// Examples: "ta:4", "z:4,2", "pm:3:pyr=1", "wed(pyr(sq,1), handle:bottom-base)".
// Parse errors raise Error(UsageError); parameter errors propagate from the
// constructions and families.
ConstructedPolytope build_from_spec(const std::string& spec);

// Evaluates a formula spec of the form "name:int,int,...":
//   binom:n,c  phi:k,d,s  zeta:k,d,s  dplus2facets:k,d,a,m
//   dplus2vertices:k,d,a,m  pentasm:k,d  pentasm-pyr:k,d,s  zfam:k,d
//   refined-s2:k,d,l
std::int64_t eval_formula_spec(const std::string& spec);

}  // namespace polyforge
