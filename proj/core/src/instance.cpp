#include "grouptest/instance.hpp"

#include <stdexcept>

namespace grouptest {

Instance Instance::fixed(int n, int d, int k) {
  Instance inst{n, d, k, PoolMode::fixed_k};
  inst.validate();
  return inst;
}

Instance Instance::unrestricted(int n, int d) {
  Instance inst{n, d, 0, PoolMode::unrestricted};
  inst.validate();
  return inst;
}

void Instance::validate() const {
  if (n < 1 || n > kMaxItems) {
    throw std::invalid_argument("Instance: n must be in [1, 64], got " + std::to_string(n));
  }
  if (d < 0 || d > n) {
    throw std::invalid_argument("Instance: d must be in [0, n], got " + std::to_string(d));
  }
  if (mode == PoolMode::fixed_k && (k < 0 || k > n)) {
    throw std::invalid_argument("Instance: k must be in [0, n], got " + std::to_string(k));
  }
}

std::string Instance::label() const {
  if (mode == PoolMode::unrestricted) {
    return "M(" + std::to_string(d) + "," + std::to_string(n) + ")";
  }
  return "M^[" + std::to_string(k) + "](" + std::to_string(d) + "," + std::to_string(n) + ")";
}

}  // namespace grouptest
