#pragma once

#include <string>

#include "ncdissect/dissection.hpp"
#include "ncdissect/pairings.hpp"
#include "ncdissect/spiders.hpp"

namespace ncdissect::svg {

// SVG 1.1 documents on viewBox "-1.2 -1.2 2.4 2.4". Boundary vertices sit on
// the unit circle anti-clockwise with vertex 1 at angle 0. Output depends
// only on the input object.

std::string render(const Dissection& d);
std::string render(const PointedDissection& pd);  // base region shaded
std::string render(const SpiderCollection& c);
std::string render(const AnnularSpiderCollection& ac);  // hole drawn in its face
std::string render(const LabeledPairing& p);  // vertices annotated with labels

}  // namespace ncdissect::svg
