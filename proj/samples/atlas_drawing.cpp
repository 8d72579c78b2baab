// Writes the parameter atlas for a given length as SVG to stdout.
#include "ietlab/render.hpp"

#include <iostream>
#include <string>

int main(int argc, char** argv) {
  const std::size_t length = argc > 1 ? std::stoul(argv[1]) : 3;
  const auto regions = ietlab::atlas::subdivide(length);
  std::cout << ietlab::render::atlas_svg(length, regions);
  std::cerr << regions.size() << " regions\n";
}
