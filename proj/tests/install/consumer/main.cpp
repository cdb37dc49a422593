#include <prelie/psi.hpp>

#include <iostream>

int main() {
  std::cout << prelie::psi_matrix(4).entry_sum() << '\n';
  return 0;
}
