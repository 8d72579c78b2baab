// Codes the orbit of 0 under the golden three-interval exchange and checks
// that every window of the coding is a factor found by the enumerator.
#include "ietlab/triet.hpp"

#include <iostream>

int main() {
  using namespace ietlab;
  const auto eps = exact::QuadraticReal::parse("(-1+sqrt(5))/2");
  const triet::IetParams params(eps, exact::Rational(9, 10), exact::Rational(0));
  const auto u = triet::code_orbit(params, 40);
  std::cout << "eps = " << eps << ", ell = 9/10\n" << u << '\n';

  const auto levels = triet::enumerate_levels(6);
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto seen = windows(u, k);
    std::size_t known = 0;
    for (const auto& w : seen) known += std::binary_search(levels[k].begin(), levels[k].end(), w) ? 1 : 0;
    std::cout << "length " << k << ": " << seen.size() << " windows, " << known << " in the enumeration of "
              << levels[k].size() << '\n';
  }
}
