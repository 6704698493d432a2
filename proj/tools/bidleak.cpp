#include "bidleak/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
  return bidleak::run_cli(argc, argv, std::cout, std::cerr);
}
