#include <subcat/tools/cli.hpp>

#include <iostream>

auto main(int argc, char ** argv) -> int
{
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = subcat::tools::run_cli(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.status;
}
