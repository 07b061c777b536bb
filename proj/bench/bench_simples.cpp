// Serial vs OpenMP simplicity filter over cyclic candidates.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <omp.h>

#include "lpa/simples.hpp"

using namespace lpa;

namespace {
struct Case {
    std::string name;
    QuiverPtr q;
    Field f;
    std::size_t dmax;
};

template <class F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s < best) best = s;
    }
    return best;
}
}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::stoi(argv[1]) : 3;
    const auto l1 = make_quiver({"v"}, {{"e", "v", "v"}});
    const auto r2 = make_quiver({"v"}, {{"x", "v", "v"}, {"y", "v", "v"}});
    const auto t = make_quiver({"v1", "v2"}, {{"e", "v1", "v1"}, {"f", "v1", "v2"}, {"g", "v2", "v1"}});
    const std::vector<Case> cases{{"L1/F5 d<=3", l1, Field::prime(5), 3},
                                  {"R2/F3 d<=2", r2, Field::prime(3), 2},
                                  {"R2/F2 d<=3", r2, Field::prime(2), 3},
                                  {"C/F2 d<=2", t, Field::prime(2), 2}};

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-12s %10s %10s %10s %8s %6s\n", "case", "candidates", "serial_s", "omp_s", "speedup", "agree");
    bool ok = true;
    for (const auto& c : cases) {
        const auto cand = cyclic_candidates(c.q, c.f, c.dmax);
        std::vector<char> a, b;
        const double ts = best_of(reps, [&] { a = simple_filter_serial(cand); });
        const double tp = best_of(reps, [&] { b = simple_filter_parallel(cand); });
        const bool agree = a == b;
        ok = ok && agree;
        std::printf("%-12s %10zu %10.4f %10.4f %8.2f %6s\n", c.name.c_str(), cand.size(), ts, tp, ts / tp,
                    agree ? "yes" : "NO");
    }
    return ok ? 0 : 1;
}
