#include <string>
#include <vector>

#include "tpa/cli.hpp"

int main(int argc, char** argv) {
  return tpa::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
