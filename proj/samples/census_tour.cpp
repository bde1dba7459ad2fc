// Count 4-dimensional simple anti-commutative algebras with a transitive
// automorphism action over each supported F_q.

#include <cstdlib>
#include <iostream>

#include "ucsiac/ucsiac.hpp"

int main(int argc, char** argv) {
  using namespace ucs;
  std::vector<std::uint32_t> qs{3, 7, 9, 11, 13};
  if (argc > 1) qs.assign(1, static_cast<std::uint32_t>(std::strtoul(argv[1], nullptr, 10)));
  for (const auto q : qs) {
    const auto rep = dim4_census(q);
    std::cout << "q=" << q << " module " << rep.module << ": " << rep.candidates << " structures, "
              << rep.classes.size() << " classes, |Aut| =";
    for (const auto& c : rep.classes) std::cout << " " << c.aut_order;
    std::cout << "\n";
  }
}
