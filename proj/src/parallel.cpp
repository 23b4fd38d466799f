#include "ferrex/parallel.hpp"

#include <atomic>

namespace ferrex {

namespace {
std::atomic<std::size_t> g_thread_budget{0};
}

std::size_t thread_budget() {
  std::size_t n = g_thread_budget.load();
  if (n == 0) {
    n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
  }
  return n;
}

void set_thread_budget(std::size_t n) { g_thread_budget.store(n); }

}  // namespace ferrex
