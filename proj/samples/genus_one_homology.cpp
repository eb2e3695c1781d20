// Reduced homology of the genus-one links for n = 1..5, with the top-weight
// cohomology of M_{1,n} it determines.
#include <iostream>

#include "tropmod/homology.hpp"

int main() {
  for (int n = 1; n <= 5; ++n) {
    auto h = tropmod::reduced_homology(1, n);
    std::cout << "g=1 n=" << n << "  betti:";
    for (int p = h.min_degree; p <= h.max_degree(); ++p)
      if (h.betti(p) != 0) std::cout << " H~_" << p << "=" << h.betti(p);
    std::cout << "  top weight:";
    for (const auto& [k, r] : tropmod::top_weight_cohomology(h))
      if (r != 0) std::cout << " H^" << k << "=" << r;
    std::cout << "\n";
  }
}
