// Walk through the library on F4: roots, the admissible pi, one
// certificate.

#include "sphorb/certs.hpp"
#include "sphorb/demazure.hpp"

#include <iostream>

int main() {
  using namespace sphorb;
  const auto rs = RootSystem::get("F4");
  std::cout << rs->name() << " has " << rs->num_positive_roots() << " positive roots, highest "
            << rs->highest_root() << "\n\n";

  for (const auto &d : enumerate_pi(rs)) {
    std::cout << "pi " << d.pi.str() << "  l(w) = " << d.length << "  rk(1-w) = " << d.rank_one_minus
              << "  dim = " << d.dimension << (d.central ? "  (central)" : "") << '\n';
  }

  const WeylElement s1 = WeylElement::simple_reflection(rs, 1);
  const WeylElement w0 = longest_element(rs);
  std::cout << "\nm(s1) m(w0) is w0 again: " << std::boolalpha << (demazure_mul(s1, w0) == w0) << '\n';

  // pi = {2,3,4}: gamma = alpha_1 is sent to -alpha_1 by s1
  const ExclusionCert cert{rs->type(), SimpleSet{2, 3, 4}, LatticeVector{1, 0, 0, 0}, {1}, std::nullopt, "demo"};
  const CertReport r = verify(cert);
  std::cout << "certificate passes: " << r.pass << " (u(alpha_1) = " << r.conjugate_image << ")\n";
}
