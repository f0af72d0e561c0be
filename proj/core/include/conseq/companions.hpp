#pragma once

// Variable-inclusion companions of a matrix consequence relation.
//
// Given a base relation |= the four companions restrict which inferences
// survive, based on how the variables of the conclusion relate to the
// variables of the premises:
//
//   Left       Gamma |-l alpha  iff some Delta <= Gamma with var(Delta) <=
//              var(alpha) already entails alpha (Delta may be empty).
//   PureLeft   as Left, but Delta must be nonempty.
//   Right      Gamma |-r alpha  iff some Delta <= Gamma is an antitheorem
//              (the escape clause), or Gamma entails alpha and
//              var(alpha) <= var(Gamma).
//   PureRight  as Right without the escape clause.
//
// The escape clause is sometimes stated with the whole premise set in place
// of a subset; CompanionOptions::strict_right_whole_set selects that variant.
// Over a matrix base the two agree, because a superset of an antitheorem is
// again an antitheorem. The flag exists so the agreement can be tested rather
// than assumed.

#include <vector>

#include "conseq/formula.hpp"
#include "conseq/matrix.hpp"

namespace conseq {

enum class CompanionMode { Left, PureLeft, Right, PureRight };

std::string to_string(CompanionMode mode);

// Accepts "left", "pure_left", "right", "pure_right". Returns false on
// anything else.
bool parse_companion_mode(const std::string& text, CompanionMode& out);

struct CompanionOptions {
  // Use the whole premise set, not a subset, in the Right escape clause.
  bool strict_right_whole_set = false;
  // Premise sets larger than this make the subset search refuse rather than
  // silently explode.
  int subset_cap = 12;
};

// Decides whether the companion relation of `base` in the given mode accepts
// the inference. Throws std::length_error when the premise set exceeds
// options.subset_cap and a subset search would be required.
bool entails_companion(const Matrix& base, CompanionMode mode,
                       const std::vector<Formula>& premises, const Formula& conclusion,
                       const CompanionOptions& options = {});

// Whether `gamma` trivializes the companion relation, i.e. proves every
// formula of the ambient language. Implemented by testing a fresh variable
// as conclusion: a variable occurring nowhere in gamma is entailed exactly
// when everything is.
bool companion_trivializes(const Matrix& base, CompanionMode mode,
                           const std::vector<Formula>& gamma,
                           const CompanionOptions& options = {});

}  // namespace conseq
