#include "cli.hpp"

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = sidonkit::cli::run(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
