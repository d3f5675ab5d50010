// Enumerates the skew braces on the Type 4 group of order 18 and prints the
// circle types, orbit profile and the closed-form prediction next to them.

#include <iostream>

#include "skewbrace/counts.hpp"
#include "skewbrace/enumerate.hpp"

int main() {
  namespace sb = skewbrace;
  const auto ctx = sb::make_context(sb::Family::P2QType4, 3, 2);
  const auto r = sb::structured_enumerate(ctx);
  const auto t = sb::count_table(3, 2);
  std::cout << "G = C9 x| C2, |Aut(G)| = " << ctx->aut.size() << ", " << r.braces.size() << " braces\n";
  for (int gamma : t.profile.types) {
    const auto it = sb::iso_type_of(sb::p2q_family(gamma));
    std::cout << sb::to_string(it) << ": found " << r.count(it) << ", predicted " << t.e_prime_at(gamma, 4)
              << "; orbits";
    for (auto [count, length] : r.class_profile(it))
      std::cout << ' ' << count << "x" << length;
    std::cout << '\n';
  }
}
