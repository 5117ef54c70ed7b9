// Composes Ind and Res through the trivial subgroup of C3 and checks the
// Mackey formula against the orbit count.
#include <iostream>

#include "bisetkit/bisetkit.hpp"

int main() {
  using namespace bisetkit;
  auto c3 = cyclic_group(3);
  auto triv = subgroup_as_group(c3, ElementSet::singleton(0));
  BurnsideElement ind(induction(c3, triv)), res(restriction(c3, triv));

  auto down = compose_bisets(res, ind);  // C1 -> C3 -> C1
  auto up = compose_bisets(ind, res);    // C3 -> C1 -> C3
  std::cout << "Res o Ind = " << to_json(down).dump() << "\n";
  std::cout << "Ind o Res = " << to_json(up).dump() << "\n";
  std::cout << "oracle agrees: " << std::boolalpha
            << (up == compose_oracle(ind, res) && down == compose_oracle(res, ind)) << "\n";

  auto word = bouc_decompose(transitive_classes(c3, c3).front());
  std::cout << "Bouc word of (C3 x C3)/1: " << to_json(word).dump() << "\n";
}
