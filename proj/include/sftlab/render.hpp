#pragma once

#include <string>

#include "sftlab/alphabet.hpp"
#include "sftlab/geometry.hpp"

namespace sftlab {

// Writes a two dimensional full-box pattern as a binary PGM (P5) image.
// One pixel per cell, symbol s maps to gray s*255/(k-1); rows run from the
// largest second coordinate down so the image reads like the plane.
void render_pgm(const Pattern& p, const Alphabet& alphabet, const std::string& path);

}  // namespace sftlab
