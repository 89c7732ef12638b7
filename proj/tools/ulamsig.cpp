#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  return ulam::cli::main_entry(std::vector<std::string>(argv + 1, argv + argc));
}
