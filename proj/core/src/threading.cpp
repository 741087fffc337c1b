#include "lrccs/threading.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace lrccs {

namespace {
std::atomic<int> g_cap{0};

int env_threads() {
  const char* s = std::getenv("LRCCS_THREADS");
  if (s == nullptr) return 0;
  const long v = std::strtol(s, nullptr, 10);
  return v > 0 ? static_cast<int>(v) : 0;
}
}  // namespace

int effective_threads() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  int n = hw;
  if (const int e = env_threads(); e > 0) n = std::min(n, e);
  if (const int c = g_cap.load(); c > 0) n = std::min(n, c);
  return std::max(1, n);
}

void set_thread_cap(int threads) { g_cap.store(threads); }

}  // namespace lrccs
