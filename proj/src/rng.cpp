#include "steinbench/rng.hpp"

namespace steinbench {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

double uniform_pm1(std::uint64_t seed, std::uint64_t sample, std::uint64_t cell) {
    std::uint64_t k = mix64(seed ^ 0x243f6a8885a308d3ull);
    k = mix64(k ^ (sample * 0xd1b54a32d192ed03ull));
    k = mix64(k ^ (cell * 0xaef17502108ef2d9ull + 0x13198a2e03707344ull));
    const double u = (static_cast<double>(k >> 11) + 0.5) * 0x1.0p-53;
    return 2.0 * u - 1.0;
}

}  // namespace steinbench
