// Computes the m-weak group inverse of a small index-2 matrix and checks it.
#include <iostream>

#include "ginv/ginv.hpp"

int main() {
  using ginv::CMatrix;
  using G = ginv::GaussianRational;
  const CMatrix a{{G(2), G(1), G(0), G(1)},
                  {G(0), G::i(), G(1), G(0)},
                  {G(0), G(0), G(0), G(1)},
                  {G(0), G(0), G(0), G(0)}};
  std::cout << "index " << ginv::matrix_index(a) << "\n";
  for (std::size_t m = 1; m <= 3; ++m) {
    const CMatrix x = ginv::m_weak_group_agreed(a, m);
    const auto r = ginv::check_mwg_definition(a, x, m);
    std::cout << "m = " << m << ": " << ginv::to_string(r.verdict) << "\n" << x.to_string() << "\n";
  }
  std::cout << "core-EP\n" << ginv::core_ep(a).to_string() << "\n";
}
