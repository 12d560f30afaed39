#include <iostream>
#include <string>
#include <vector>

#include "dress/command.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    std::cout << dress::usage();
    return args.empty() ? 2 : 0;
  }
  dress::Report rep = dress::execute(args);
  (rep.error && !rep.json_output ? std::cerr : std::cout) << dress::render(rep);
  return rep.exit_code;
}
