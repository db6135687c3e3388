#include "trimcon/generators.hpp"

#include <string>

#include "trimcon/error.hpp"

namespace trimcon {

namespace {
void check_ring_params(const char* what, int n, int f) {
    if (f < 1) throw DomainError(std::string(what) + " requires f >= 1, got " + std::to_string(f));
    if (n <= 3 * f)
        throw DomainError(std::string(what) + " requires n > 3f, got n = " + std::to_string(n) +
                          ", f = " + std::to_string(f));
}
}  // namespace

Digraph complete(int n) {
    if (n < 2) throw DomainError("complete graph requires n >= 2, got " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) edges.emplace_back(i, j);
    return Digraph(n, std::move(edges));
}

Digraph chord(int n, int f) {
    check_ring_params("chord graph", n, f);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (2 * f + 1));
    for (int i = 0; i < n; ++i)
        for (int k = 1; k <= 2 * f + 1; ++k) edges.emplace_back(i, (i + k) % n);
    return Digraph(n, std::move(edges));
}

Digraph hypercube(int d) {
    if (d < 1) throw DomainError("hypercube requires d >= 1, got " + std::to_string(d));
    if (d > 20) throw DomainError("hypercube dimension too large: " + std::to_string(d));
    const int n = 1 << d;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * d);
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < d; ++b) edges.emplace_back(i, i ^ (1 << b));
    return Digraph(n, std::move(edges));
}

Digraph core_network(int n, int f) {
    check_ring_params("core network", n, f);
    const int core = 2 * f + 1;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < core; ++i)
        for (int j = 0; j < core; ++j)
            if (i != j) edges.emplace_back(i, j);
    for (int i = core; i < n; ++i)
        for (int j = 0; j < core; ++j) {
            edges.emplace_back(i, j);
            edges.emplace_back(j, i);
        }
    return Digraph(n, std::move(edges));
}

}  // namespace trimcon
