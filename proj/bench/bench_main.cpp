#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "polycert/multipoly.hpp"
#include "polycert/parallel.hpp"

using namespace polycert;

namespace {

struct Row {
    std::string name;
    double serial = 0;
    double parallel = 0;
    bool equal = false;
};

double elapsed(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <class Fn>
Row measure(std::string name, Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto serial = fn(ExecMode::Serial);
    const auto t1 = std::chrono::steady_clock::now();
    const auto parallel = fn(ExecMode::Parallel);
    const auto t2 = std::chrono::steady_clock::now();
    return {std::move(name), elapsed(t0, t1), elapsed(t1, t2), serial == parallel};
}

}  // namespace

int main() {
    std::vector<Row> rows;
    rows.push_back(measure("sum_det_r3_squared(k=3, n=7)",
                           [](ExecMode m) { return sum_det_r3_squared(3, 7, m); }));
    rows.push_back(measure("sum_vandermonde_squared(m=5, n=10)",
                           [](ExecMode m) { return sum_vandermonde_squared(5, 10, m); }));
    const std::vector<int> lambda = {0, 2, 3, 5};
    rows.push_back(measure("schur_weighted_sum(lambda=(0,2,3,5), n=8)",
                           [&](ExecMode m) { return schur_weighted_sum(lambda, 8, m); }));
    rows.push_back(measure("e_block_symbolic(k=3, n=6)", [](ExecMode m) {
        const auto block = e_block_symbolic(3, 6, m);
        std::vector<MultiPoly> flat;
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j) flat.push_back(block.at(i, j));
        return flat;
    }));

    std::printf("%-42s %10s %10s %8s %6s\n", "kernel", "serial[s]", "parallel[s]", "speedup", "equal");
    for (const Row& r : rows)
        std::printf("%-42s %10.3f %10.3f %8.2f %6s\n", r.name.c_str(), r.serial, r.parallel,
                    r.parallel > 0 ? r.serial / r.parallel : 0.0, r.equal ? "yes" : "NO");
    return 0;
}
