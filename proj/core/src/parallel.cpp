#include "pacman/parallel.hpp"

#include <cstdlib>
#include <string>

namespace pacman {

unsigned worker_count() {
    if (const char* env = std::getenv("PACMAN_WORKERS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace pacman
