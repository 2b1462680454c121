// The three-generator staircase and its dual.

#include <iostream>

#include "plumbtau/floer_complex.hpp"

int main() {
  using namespace plumbtau;
  auto [c, f] = parse_floer({"a 0 1", "b -1 0", "c -2 -1", "b -> a pow 1", "b -> c pow 0"});
  std::cout << "axioms ok: " << verify_axioms(c).ok() << "\n";
  std::cout << "d = " << correction_term(c) << ", tau_top = " << tau_top(c, f) << "\n";
  auto [dc, df] = dualize(c, f);
  std::cout << "dual: d = " << correction_term(dc) << ", tau_bot = " << tau_bot(dc, df) << "\n";
  for (const auto& line : format_floer(dc, df)) std::cout << "  " << line << "\n";
}
