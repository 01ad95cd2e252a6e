#include <cstdio>

int main() {
    std::puts("gpir: placeholder");
    return 0;
}
