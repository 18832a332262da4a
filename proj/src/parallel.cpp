#include "gsp4/parallel.hpp"

#include <atomic>

namespace gsp4 {

namespace {
std::atomic<std::size_t> threads{1};
}

std::size_t default_threads() { return threads.load(); }
void set_default_threads(std::size_t n) { threads.store(n == 0 ? 1 : n); }

}  // namespace gsp4
