#include <iostream>

#include "orr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = orr::cli::dispatch(args);
  std::ostream& out = result.exit_code == 2 ? std::cerr : std::cout;
  out << result.render();
  return result.exit_code;
}
