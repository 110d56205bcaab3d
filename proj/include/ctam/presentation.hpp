#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctam/amalgam.hpp"

namespace ctam {

/// Machine-readable data of the presentation defined by an amalgam: the SL_2
/// generators, and for each edge the twists and generator images in SL_3.
///
///   FIELD <p^m>
///   CONVENTION natural|reversed
///   GEN <k> <2x2 matrix>
///   VERTEX <label>
///   EDGE <a> <b>
///   TWIST <i> <j> <eps> <r>
///   IMAGE <i> <j> <k> <3x3 matrix>
///   NONEDGE <a> <b>
///
/// Sections appear in that order; matrices use the row-major element format.
struct Presentation {
  Field field;
  BlockConvention convention = BlockConvention::natural;
  Diagram diagram;
  std::vector<Mat> generators;
  std::map<DirectedEdge, ACoord> twists;
  std::map<DirectedEdge, std::vector<Mat>> images;
  std::vector<std::pair<int, int>> nonedges;
};

Presentation to_presentation(const CTAmalgam& A);
std::string format(const Presentation& P);
std::string emit_presentation(const CTAmalgam& A);
/// Throws InputError on malformed text.
Presentation parse_presentation(std::string_view text);

/// CT axioms on the recorded images alone (standard pairs, determinants,
/// image order |SL_2(q)|, non-edge list), plus agreement with the amalgam
/// rebuilt from the recorded twists.
CheckReport verify_presentation(const Presentation& P);

}  // namespace ctam
