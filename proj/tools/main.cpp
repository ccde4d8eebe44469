#include <cstdio>

int main() {
    std::puts("isocap: CLI under construction");
    return 1;
}
