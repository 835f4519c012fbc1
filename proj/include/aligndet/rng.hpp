#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace aligndet {

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline uint64_t hash_str(const std::string& s) {
  // FNV-1a
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// xoshiro256++ generator. Fully specified arithmetic, so sequences are
// identical across platforms and builds.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0) {
    uint64_t sm = seed;
    for (auto& s : state_) s = splitmix64(sm);
  }

  // Stateless stream derivation: mixes the seed with a path of salts.
  // A (seed, path) pair always yields the same generator, which is what
  // makes checkpoint resume trivially reproducible.
  static Rng derive(uint64_t seed, std::initializer_list<uint64_t> path) {
    uint64_t sm = seed;
    uint64_t h = splitmix64(sm);
    for (uint64_t p : path) {
      sm = h ^ (p + 0x9e3779b97f4a7c15ull);
      h = splitmix64(sm);
    }
    return Rng(h);
  }

  uint64_t next_u64() {
    auto rotl = [](uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
    const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1).
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  uint64_t uniform_index(uint64_t n) { return n ? next_u64() % n : 0; }

  bool bernoulli(double p) { return uniform() < p; }

  double normal() {
    // Box-Muller; the second value of the pair is discarded so the
    // generator state never depends on call parity.
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  // Partial Fisher-Yates: first k entries of a random permutation of [0, n).
  std::vector<int> sample_indices(int n, int k) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    if (k > n) k = n;
    for (int i = 0; i < k; ++i) {
      int j = i + int(uniform_index(uint64_t(n - i)));
      std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
  }

  void shuffle(std::vector<int>& v) {
    for (int i = int(v.size()) - 1; i > 0; --i) {
      int j = int(uniform_index(uint64_t(i) + 1));
      std::swap(v[i], v[j]);
    }
  }

  std::vector<uint64_t> serialize() const {
    return {state_[0], state_[1], state_[2], state_[3]};
  }

  static Rng deserialize(const std::vector<uint64_t>& s) {
    Rng r;
    for (int i = 0; i < 4; ++i) r.state_[i] = s.at(i);
    return r;
  }

 private:
  uint64_t state_[4] = {1, 2, 3, 4};
};

}  // namespace aligndet
