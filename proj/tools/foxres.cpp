// foxres command line tool; subcommands land together with the library
// modules they expose.
#include <CLI11.hpp>

int main(int argc, char** argv) {
  CLI::App app{"finite free resolutions for iterated semidirect products of free groups"};
  app.set_version_flag("--version", "foxres 1.0.0");
  CLI11_PARSE(app, argc, argv);
  return 0;
}
