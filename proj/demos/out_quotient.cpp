// Prints dim of the RB quotient next to |Out(H)| for a few small groups.
#include <iostream>

#include "bisetkit/bisetkit.hpp"

int main() {
  using namespace bisetkit;
  for (const char* name : {"C2", "C3", "C4", "V4", "C5", "S3", "C6"}) {
    auto h = group_by_name(name);
    auto rep = check_out_iso(h);
    std::cout << name << "  quotient " << rep.quotient_dim << "  |Out| " << rep.out_order
              << (rep.match ? "" : "  MISMATCH") << "\n";
  }
}
