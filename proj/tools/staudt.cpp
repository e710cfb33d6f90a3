#include "projline/cli.hpp"

int main(int argc, char **argv)
{
  return projline::cli::main(argc, argv);
}
