#include "blockcraft/config.hpp"

#include <cstdlib>
#include <string>
#include <thread>

#include "blockcraft/parallel.hpp"

namespace blockcraft {

namespace {

Limits make_limits() {
  Limits l;
  if (const char* env = std::getenv("BLOCKCRAFT_MAX_N")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) l.table_max_n = l.idempotent_max_n = l.gl_enumeration_max_n = v;
    } catch (const std::exception&) {
      // malformed value: keep defaults
    }
  }
  return l;
}

std::atomic<unsigned> configured_workers{0};

}  // namespace

Limits& limits() {
  static Limits l = make_limits();
  return l;
}

void reload_limits_from_env() { limits() = make_limits(); }

void set_worker_count(unsigned workers) { configured_workers = workers; }

unsigned worker_count() {
  const unsigned w = configured_workers.load();
  if (w) return w;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace blockcraft
