#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <exchci/verify.hpp>

namespace exchci::checks {

void append_vector_checks(std::vector<VerifyCheck>& out);
void append_network_checks(std::vector<VerifyCheck>& out);
void append_appendix_checks(std::vector<VerifyCheck>& out);

inline int rand_below(std::mt19937_64& rng, int k) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(k));
}

inline std::uint32_t rand_mask(std::mt19937_64& rng, VarSet pool) {
  std::uint32_t bits = 0;
  pool.for_each([&](int e) {
    if (rng() & 1u) bits |= std::uint32_t{1} << e;
  });
  return bits;
}

template <typename T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace exchci::checks
