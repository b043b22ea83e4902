#include <iostream>

#include "folia/cli.hpp"

int main(int argc, char** argv) {
  std::string message;
  int code = 0;
  auto job = folia::cli::parse_args(argc, argv, message, code);
  if (!job) {
    (code == 0 ? std::cout : std::cerr) << message;
    return code;
  }
  auto result = folia::cli::run(*job);
  std::cout << result.output;
  return result.exit_code;
}
