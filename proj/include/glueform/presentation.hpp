#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "glueform/diffeology.hpp"
#include "glueform/form.hpp"

namespace glueform {

struct ComputeSettings {
  std::uint32_t bound = 4;
  std::vector<std::size_t> degrees{0, 1, 2};
  friend bool operator==(const ComputeSettings&, const ComputeSettings&) = default;
};

struct PresentationFile {
  SpacePresentation space;
  ComputeSettings compute;
  friend bool operator==(const PresentationFile&, const PresentationFile&) = default;
};

// Bracketed-section presentation format:
//
//   [space]            vars = x y
//                      equations = x*y ; ...
//   [plot NAME] (x2)   vars = s
//                      components = s, 0
//                      retraction = x            (or)
//                      symmetry_vars = w1
//                      symmetry = w1 | -w1       (one or more)
//   [pullback NAME]    vars = ...
//                      to_<plot> = ...           (for both plots)
//   [compute]          bound = 6
//                      degrees = 0 1 2
//
// The first plot section is alpha, the second beta. '#' starts a comment.
// Throws ParseError carrying the 1-based line number.
PresentationFile parse_presentation(std::string_view text);

// Canonical text; parse_presentation(print_presentation(f)) == f.
std::string print_presentation(const PresentationFile& file);

// Lines of the form `coeff = "<poly>" frame = <var> <var> ...` summed into a
// single form over `domain`. Syntax problems raise ParseError; variables
// outside `domain` and inconsistent frame lengths raise UsageError.
DifferentialForm parse_form_file(std::string_view text, const VarContext& domain);

}  // namespace glueform
