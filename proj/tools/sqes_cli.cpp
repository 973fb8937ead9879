#include <unistd.h>

#include "sqes/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sqes::cli::run(std::move(args), std::cout, std::cerr, isatty(STDOUT_FILENO) != 0);
}
