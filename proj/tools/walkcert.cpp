#include <iostream>
#include <string>
#include <vector>

#include "walkcert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = walkcert::cli::run(args);
  for (const auto& line : result.diagnostics) std::cerr << "walkcert: " << line << '\n';
  if (!result.text.empty()) {
    std::cout << result.text;
  } else if (!result.payload.is_null()) {
    std::cout << result.payload.dump() << '\n';
  }
  return result.exit_code;
}
