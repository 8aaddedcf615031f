#include "evanescent/app/parallel.hpp"

namespace evanescent::app {

int default_thread_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace evanescent::app
