// Runs a command and checks its exit code, so ctest can assert the CLI's
// documented codes (0 success, 1 error, 2 negative outcome).
//
//   cli_runner <expected-code> <program> [args...]

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: cli_runner <expected-code> <program> [args...]\n");
    return 64;
  }
  int expected = std::atoi(argv[1]);
  std::string command;
  for (int i = 2; i < argc; ++i) {
    if (i > 2) command += " ";
    command += "'" + std::string(argv[i]) + "'";
  }
  int status = std::system(command.c_str());
  if (status < 0) {
    std::fprintf(stderr, "failed to run: %s\n", command.c_str());
    return 65;
  }
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (code != expected) {
    std::fprintf(stderr, "expected exit %d, got %d from: %s\n", expected, code,
                 command.c_str());
    return 1;
  }
  return 0;
}
