#include <iostream>

#include "orbicurve/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto res = orbicurve::run_cli(args);
    if (res.exit_code == 2) {
        std::cerr << "error: " << res.error << "\n";
        return 2;
    }
    if (res.document.contains("help")) {
        std::cout << res.document.at("help").get<std::string>();
        return 0;
    }
    std::cout << orbicurve::canonical_dump(res.document);
    if (res.exit_code != 0) std::cerr << "error: " << res.error << "\n";
    return res.exit_code;
}
