#include <iostream>

#include "ppart/acceptance.hpp"

int main() {
  const int failures = ppart::run_acceptance(std::cout);
  if (failures > 0)
    std::cout << failures << " criterion(s) failed\n";
  else
    std::cout << "all criteria passed\n";
  return failures == 0 ? 0 : 1;
}
