#include <iostream>

int main() {
  std::cout << "circuitwalk cli placeholder\n";
  return 0;
}
