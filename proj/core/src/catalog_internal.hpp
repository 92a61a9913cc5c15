#pragma once

#include <string>

#include "jetlie/catalog.hpp"

namespace jetlie::catalog::detail {

extern const char* const kBase;
extern const char* const kCga2;
extern const char* const kEcga;
extern const char* const kWave;
extern const char* const kFluid;

// fields and table of the conformal Galilei realization with N space
// coordinates, optionally carrying the lambda weight and gamma phases
struct CgaText {
  std::string space_name;
  std::vector<std::string> space_coordinates;
  std::vector<std::string> phases;  // empty: no lambda, no gamma terms
  std::string dependent;
  int lowest = -1, highest = 1;
};

std::string cga_text(const CgaText& spec, bool declare_space);
std::string level_name(char head, int n);

}  // namespace jetlie::catalog::detail
