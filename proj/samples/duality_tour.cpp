// Build sl2 over F_3, pass to its class-2 group and back, and look at a few
// invariants on both sides.

#include <iostream>

#include "ucsiac/ucsiac.hpp"

int main() {
  using namespace ucs;
  const Field f = Field::make(3);
  const ACAlgebra L = sl2(f);
  const PcGroup G = G_of_L(L);

  std::cout << "L = sl2(" << f.name() << "), dim " << L.dim() << "\n";
  std::cout << "G(L) has order " << G.order() << "\n\n" << G.pc_presentation() << "\n";

  const auto inv = group_invariants(G);
  std::cout << "exponent " << inv.exponent << ", |Z(G)| " << inv.center.order << "\n";
  std::cout << "L(G(L)) == L: " << (L_of_G(G) == L ? "yes" : "no") << "\n";
  std::cout << "|Aut(L)| = " << automorphism_count(L) << "\n";

  const auto audit = correspondence_audit(L, G);
  std::cout << "subspaces audited: " << audit.rows.size() << ", all agree: " << (audit.all_agree ? "yes" : "no")
            << "\n";
}
