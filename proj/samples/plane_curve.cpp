// Tropicalizes a plane curve given as JSON and prints its cells.
#include <fstream>
#include <iostream>

#include "tropmod/plane_trop.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: plane_curve polynomial.json\n";
    return 2;
  }
  std::ifstream in(argv[1]);
  auto f = tropmod::polynomial_from_json(tropmod::PlaneJson::parse(in));
  auto curve = tropmod::tropical_curve(f);
  auto sub = tropmod::newton_subdivision(f);
  std::cout << sub.cells.size() << " cells in the Newton subdivision\n";
  for (std::size_t v = 0; v < curve.vertices.size(); ++v)
    std::cout << "vertex " << v << " (" << curve.vertices[v].z << ", " << curve.vertices[v].w << ")\n";
  for (const auto& [a, b] : curve.segments) std::cout << "segment " << a << " -- " << b << "\n";
  for (const auto& r : curve.rays)
    std::cout << "ray from " << r.base << " towards (" << r.direction.dz << ", " << r.direction.dw << ")\n";
  for (const auto& l : curve.lines)
    std::cout << "line through (" << l.point.z << ", " << l.point.w << ") along (" << l.direction.dz << ", "
              << l.direction.dw << ")\n";
}
