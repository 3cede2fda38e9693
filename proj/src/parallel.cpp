#include "bettikit/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace bettikit {

int effective_threads() {
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("BETTIKIT_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 1 && cap < n) n = cap;
        } catch (...) {
            // ignore malformed values
        }
    }
    return n;
}

}  // namespace bettikit
