// Library walk-through: the coideal subalgebra span{1, gx} of Sweedler's algebra.
#include <iostream>

#include "hopfkit/coideal.hpp"

using namespace hopfkit;

int main() {
  RationalField Q;
  auto h = share(sweedler_h4<Rational>(Q));  // basis 1, g, x, gx
  Vec<Rational> one{1, 0, 0, 0}, gx{0, 0, 0, 1};
  auto det = detect_right_coideal_subalgebra(h, Subspace<Rational>::span(4, {one, gx}));
  if (!det.accepted) {
    std::cerr << "rejected: " << det.rejection << "\n";
    return 1;
  }
  const auto& cs = *det.accepted;

  auto fr = is_free(hopf_as_object(cs, Side::Right).module);
  std::cout << "H free over A: " << verdict_name(fr.status) << ", rank " << fr.rank << "\n";
  std::cout << "dim D = " << coideal_quotient(cs, Side::Right).d->dim() << "\n";

  for (auto& id : coideal_theorem_ids()) {
    auto rep = verify_coideal_theorem(id, cs, CoidealInputs<Rational>{}, 0);
    std::cout << id << ": " << status_name(rep.status()) << "\n";
  }
}
