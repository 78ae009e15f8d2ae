#include <string>
#include <vector>

#include "plancol/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return plancol::run(args);
}
