// Regenerates docs/CONCORDANCE.md from the in-source registry.

#include <iostream>

#include "lefschetz/concordance.hpp"

int main() {
    std::cout << lefschetz::concordance_markdown();
    return 0;
}
