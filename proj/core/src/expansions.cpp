#include "qcw/expansions.hpp"

#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <unordered_map>

#include "qcw/errors.hpp"

namespace qcw {

HyperParams::HyperParams(int m, int c) : m_(m), c_(c) {
  if (m < 2) throw InvalidArgument("m must be at least 2 (got " + std::to_string(m) + ")");
  if (c < 0 || c > m - 1) {
    throw InvalidArgument("c must satisfy 0 <= c <= m-1 (got m=" + std::to_string(m) + ", c=" + std::to_string(c) + ")");
  }
}

std::vector<int> HyperParams::multiplicities() const {
  std::vector<int> out;
  for (int k = 1; k <= m_ - 1; ++k) out.push_back(k);
  out.push_back(big_multiplicity());
  return out;
}

int Expansion::multiplicity(int exponent) const {
  auto it = mult_.find(exponent);
  return it == mult_.end() ? 0 : it->second;
}

std::uint64_t Expansion::total(int m) const {
  std::uint64_t sum = 0;
  for (const auto& [e, k] : mult_) {
    std::uint64_t power = 1;
    for (int i = 0; i < e; ++i) power *= static_cast<std::uint64_t>(m);
    sum += power * static_cast<std::uint64_t>(k);
  }
  return sum;
}

bool Expansion::valid_for(const HyperParams& params) const {
  for (const auto& [e, k] : mult_) {
    if (e < 0) return false;
    if (!((k >= 1 && k <= params.m() - 1) || k == params.big_multiplicity())) return false;
  }
  return true;
}

std::string Expansion::to_string(int m) const {
  if (mult_.empty()) return "0";
  std::string out;
  for (auto it = mult_.rbegin(); it != mult_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += std::to_string(m) + "^" + std::to_string(it->first) + "×" + std::to_string(it->second);
  }
  return out;
}

namespace {

class Enumerator {
 public:
  Enumerator(const HyperParams& params, std::vector<Expansion>& out)
      : params_(params), choices_(params.multiplicities()), out_(out) {
    choices_.insert(choices_.begin(), 0);
  }

  void run(std::uint64_t n) {
    if (n == 0) {
      out_.emplace_back();
      return;
    }
    const auto m = static_cast<std::uint64_t>(params_.m());
    // powers_[e] = m^e and reach_[e] = largest total representable with
    // exponents 0..e, for e up to floor(log_m n).
    powers_ = {1};
    while (powers_.back() <= n / m) powers_.push_back(powers_.back() * m);
    const auto big = static_cast<std::uint64_t>(params_.big_multiplicity());
    std::uint64_t acc = 0;
    for (std::uint64_t p : powers_) {
      acc += big * p;
      reach_.push_back(acc);
    }
    descend(static_cast<int>(powers_.size()) - 1, n);
  }

 private:
  void descend(int e, std::uint64_t residual) {
    for (int k : choices_) {
      const std::uint64_t used = powers_[e] * static_cast<std::uint64_t>(k);
      if (used > residual) break;
      const std::uint64_t rest = residual - used;
      if (e == 0) {
        if (rest == 0) emit(e, k);
        continue;
      }
      if (rest > reach_[e - 1]) continue;
      if (k != 0) current_[e] = k;
      descend(e - 1, rest);
      current_.erase(e);
    }
  }

  void emit(int e, int k) {
    if (k != 0) current_[e] = k;
    out_.emplace_back(current_);
    current_.erase(e);
  }

  const HyperParams& params_;
  std::vector<int> choices_;
  std::vector<Expansion>& out_;
  std::vector<std::uint64_t> powers_;
  std::vector<std::uint64_t> reach_;
  std::map<int, int> current_;
};

struct CacheKey {
  int m;
  int c;
  std::int64_t n;
  friend bool operator==(const CacheKey&, const CacheKey&) = default;
};

struct CacheKeyHash {
  std::size_t operator()(const CacheKey& k) const {
    std::size_t h = std::hash<std::int64_t>{}(k.n);
    h ^= std::hash<int>{}(k.m) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<int>{}(k.c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class FCache {
 public:
  const QPoly* find(const CacheKey& key) const {
    std::shared_lock lock(mutex_);
    auto it = values_.find(key);
    return it == values_.end() ? nullptr : &it->second;
  }
  void insert(const CacheKey& key, const QPoly& value) {
    std::unique_lock lock(mutex_);
    values_.try_emplace(key, value);
  }

 private:
  mutable std::shared_mutex mutex_;
  // Node-based map: element addresses stay valid across rehashing.
  std::unordered_map<CacheKey, QPoly, CacheKeyHash> values_;
};

FCache& f_cache() {
  static FCache cache;
  return cache;
}

}  // namespace

std::vector<Expansion> enumerate_expansions(std::uint64_t n, const HyperParams& params) {
  std::vector<Expansion> out;
  Enumerator(params, out).run(n);
  return out;
}

WeightedCount hyper_weight(const Expansion& x, const HyperParams& params) {
  WeightedCount w;
  for (const auto& [e, k] : x.multiplicities()) {
    if (k == params.big_multiplicity()) ++w.h;
  }
  return w;
}

QPoly g_poly(std::int64_t n, const HyperParams& params) {
  if (n < 0) return {};
  std::vector<BigInt> coeffs;
  for (const auto& x : enumerate_expansions(static_cast<std::uint64_t>(n), params)) {
    const auto h = static_cast<std::size_t>(hyper_weight(x, params).h);
    if (coeffs.size() <= h) coeffs.resize(h + 1);
    coeffs[h] += 1;
  }
  return QPoly(std::move(coeffs));
}

QPoly f_poly(std::int64_t n, const HyperParams& params) {
  if (n < 0) return {};
  if (n == 0) return QPoly(1);
  const CacheKey key{params.m(), params.c(), n};
  if (const QPoly* hit = f_cache().find(key)) return *hit;
  const std::int64_t m = params.m();
  const std::int64_t k = n / m;
  QPoly value = f_poly(k, params);
  if (n % m == params.c()) value += f_poly(k - 1, params).shifted(1);
  f_cache().insert(key, value);
  return value;
}

VerifyReport verify_f_equals_g(const HyperParams& params, std::int64_t n_max) {
  VerifyReport report;
  report.suite = "f_equals_g";
  report.add_parameter("m", std::to_string(params.m()));
  report.add_parameter("c", std::to_string(params.c()));
  report.add_parameter("n_max", std::to_string(n_max));
  for (std::int64_t n = 0; n <= n_max; ++n) {
    const QPoly f = f_poly(n, params);
    const QPoly g = g_poly(n, params);
    report.check(f == g, "n=" + std::to_string(n), g.to_string(), f.to_string());
  }
  return report;
}

}  // namespace qcw
