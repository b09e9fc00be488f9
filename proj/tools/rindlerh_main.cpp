#include <string>
#include <vector>

#include "rindlerh/cli.hpp"

int main(int argc, char** argv) {
  return rindlerh::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
