#include "equigrass/parallel.hpp"

#include <cstdlib>
#include <string>

namespace equigrass {

unsigned thread_count()
{
    if (const char* env = std::getenv("EQUIGRASS_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n >= 1) return static_cast<unsigned>(n);
        } catch (...) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

}  // namespace equigrass
