// Compares the serial reference sweep with the OpenMP sweep on the block
// computations and checks that both produce the same tables.

#include <chrono>
#include <iostream>

#include "anick/hochschild.hpp"
#include "anick/verify.hpp"

using namespace anick;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

int max_threads() {
#ifdef ANICK_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace

int main(int argc, char** argv) {
    int weight = argc > 1 ? std::atoi(argv[1]) : 9;
    Presentation p = parse_presentation("arrows x, y; relations x y x");

    std::cout << "bar homology of k<x,y>/(xyx) up to weight " << weight << "\n";
    auto t0 = std::chrono::steady_clock::now();
    BettiTable serial = homology_dims(p, weight, ExecPolicy{1});
    auto t1 = std::chrono::steady_clock::now();
    BettiTable parallel = homology_dims(p, weight, ExecPolicy{max_threads()});
    auto t2 = std::chrono::steady_clock::now();

    double ts = seconds(t0, t1), tp = seconds(t1, t2);
    std::cout << "serial   " << ts << " s\n";
    std::cout << "openmp   " << tp << " s  (" << max_threads() << " threads, speedup "
              << (tp > 0 ? ts / tp : 0.0) << "x)\n";
    if (!(serial == parallel)) {
        std::cout << "MISMATCH between serial and parallel tables\n";
        return 1;
    }

    std::cout << "\nretract identity sweep up to weight " << std::min(weight, 8) << "\n";
    t0 = std::chrono::steady_clock::now();
    auto rs = verify_retract_identities(p, std::min(weight, 8), ExecPolicy{1});
    t1 = std::chrono::steady_clock::now();
    auto rp = verify_retract_identities(p, std::min(weight, 8), ExecPolicy{max_threads()});
    t2 = std::chrono::steady_clock::now();
    std::cout << "serial   " << seconds(t0, t1) << " s\n";
    std::cout << "openmp   " << seconds(t1, t2) << " s\n";
    if (rs.pass != rp.pass || !rs.pass) {
        std::cout << "retract sweep failed\n";
        return 1;
    }
    std::cout << "\ntables agree\n";
    return 0;
}
