#include "sdual/duality.hpp"

#include <iostream>

using namespace sdual;

// Recomputes every fitted sign from the first-principles composite and
// freezes the result to the shared convention file (or a path argument).
int main(int argc, char** argv) {
    try {
        SignConvention conv = calibrate_signs();
        std::string path = argc > 1 ? argv[1] : sign_convention_path();
        conv.save(path);
        std::cout << conv.str();
        std::cout << "wrote " << path << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
