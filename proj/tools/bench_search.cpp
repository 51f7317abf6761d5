// Benchmark: parallel search engine versus the serial reference loop over
// the same rectangle, with a hit-set equality check.
//
//   bench_search [s_max] [n_max] [workers]

#include "scullen/search.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv)
{
    using namespace scullen;

    SearchConfig cfg;
    cfg.s_max = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 2000;
    cfg.n_max = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 50;
    cfg.workers = argc > 3 ? std::atoi(argv[3]) : 8;

    std::cout << "rectangle: s in [2, " << cfg.s_max << "], n in [1, " << cfg.n_max
              << "], workers " << cfg.workers << "\n";

    const SearchReport serial = run_search_serial(cfg);
    std::cout << "serial reference: " << serial.stats.seconds << " s, "
              << serial.hits.size() << " hits\n";

    const SearchReport parallel = run_search(cfg);
    std::cout << "parallel engine:  " << parallel.stats.seconds << " s, "
              << parallel.hits.size() << " hits ("
              << serial.stats.seconds / parallel.stats.seconds << "x)\n";

    if (serial.hits.size() != parallel.hits.size()) {
        std::cout << "MISMATCH: hit counts differ\n";
        return 1;
    }
    for (std::size_t i = 0; i < serial.hits.size(); ++i) {
        if (serial.hits[i].index != parallel.hits[i].index ||
            serial.hits[i].value != parallel.hits[i].value) {
            std::cout << "MISMATCH at hit " << i << "\n";
            return 1;
        }
    }
    std::cout << "hit sets identical\n";
    return 0;
}
