#include "blockcraft/partition.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace blockcraft {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ArgumentError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw ArgumentError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
  for (int row : parts_)
    for (int j = 0; j < row; ++j) ++c[static_cast<std::size_t>(j)];
  return Partition(std::move(c));
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
  return h;
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw ArgumentError("enumerate_partitions: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_into(n, n, prefix, out);
  return out;
}

BigInt partition_count(int n) {
  if (n < 0) return 0;
  std::vector<BigInt> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const int g2 = k * (3 * k + 1) / 2;
      const BigInt term = p[static_cast<std::size_t>(m - g1)] + (g2 <= m ? p[static_cast<std::size_t>(m - g2)] : BigInt(0));
      if (k % 2) acc += term;
      else acc -= term;
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  return p[static_cast<std::size_t>(n)];
}

BigInt multipartition_count(int k, int w) {
  if (w < 0 || k < 0) return 0;
  const auto len = static_cast<std::size_t>(w) + 1;
  std::vector<BigInt> single(len);
  for (int m = 0; m <= w; ++m) single[static_cast<std::size_t>(m)] = partition_count(m);
  std::vector<BigInt> acc(len, 0);
  acc[0] = 1;
  for (int t = 0; t < k; ++t) {
    std::vector<BigInt> next(len, 0);
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = 0; i + j < len; ++j) next[i + j] += acc[i] * single[j];
    acc = std::move(next);
  }
  return acc[static_cast<std::size_t>(w)];
}

HookMultiset hook_lengths(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  HookMultiset h;
  h.lengths.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j)
      h.lengths.push_back(lambda[static_cast<std::size_t>(i)] - j + conj[static_cast<std::size_t>(j)] - i - 1);
  return h;
}

int count_hooks(const Partition& lambda, int d) {
  if (d < 1) throw ArgumentError("count_hooks: d must be >= 1");
  const auto h = hook_lengths(lambda).lengths;
  return static_cast<int>(std::count(h.begin(), h.end(), d));
}

std::vector<int> beta_set(const Partition& lambda, int beads) {
  if (beads < lambda.length()) throw ArgumentError("beta_set: too few beads");
  std::vector<int> beta(static_cast<std::size_t>(beads));
  for (int i = 0; i < beads; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + beads - 1 - i;
  return beta;
}

Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int b = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < b; ++i) {
    const int part = beta[static_cast<std::size_t>(i)] - (b - 1 - i);
    if (part < 0) throw ArgumentError("from_beta_set: repeated or negative bead");
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

namespace {

int round_up(int x, int d) { return (x + d - 1) / d * d; }

// Positions (levels) of the beads on each runner, in decreasing order.
std::vector<std::vector<int>> runners(const std::vector<int>& beta, int d) {
  std::vector<std::vector<int>> r(static_cast<std::size_t>(d));
  for (int x : beta) r[static_cast<std::size_t>(x % d)].push_back(x / d);
  for (auto& levels : r) std::sort(levels.begin(), levels.end(), std::greater<>());
  return r;
}

}  // namespace

CoreQuotient d_core_and_quotient(const Partition& lambda, int d) {
  if (d < 2) throw ArgumentError("d_core_and_quotient: d must be >= 2");
  const int beads = round_up(lambda.length(), d);
  const auto abacus = runners(beta_set(lambda, beads), d);

  CoreQuotient cq;
  cq.d = d;
  std::vector<int> core_beta;
  for (int r = 0; r < d; ++r) {
    const auto& levels = abacus[static_cast<std::size_t>(r)];
    const int k = static_cast<int>(levels.size());
    std::vector<int> parts;
    for (int i = 0; i < k; ++i) {
      core_beta.push_back(r + d * i);
      const int part = levels[static_cast<std::size_t>(i)] - (k - 1 - i);
      if (part > 0) parts.push_back(part);
    }
    cq.quotient.emplace_back(std::move(parts));
  }
  cq.core = from_beta_set(std::move(core_beta));
  cq.weight = (lambda.size() - cq.core.size()) / d;
  return cq;
}

Partition from_core_and_quotient(const Partition& core, const std::vector<Partition>& quotient) {
  const int d = static_cast<int>(quotient.size());
  if (d < 2) throw ArgumentError("from_core_and_quotient: need at least 2 runners");
  int w = 0;
  for (const auto& q : quotient) w += q.size();
  const int beads = round_up(core.length() + d * w, d);
  const auto abacus = runners(beta_set(core, beads), d);

  std::vector<int> beta;
  for (int r = 0; r < d; ++r) {
    const auto& levels = abacus[static_cast<std::size_t>(r)];
    const int k = static_cast<int>(levels.size());
    for (int i = 0; i < k; ++i)
      if (levels[static_cast<std::size_t>(i)] != k - 1 - i) throw ArgumentError("from_core_and_quotient: core is not a d-core");
    const Partition& q = quotient[static_cast<std::size_t>(r)];
    if (q.length() > k) throw ArgumentError("from_core_and_quotient: runner overflow");
    for (int i = 0; i < k; ++i) beta.push_back(r + d * (q[static_cast<std::size_t>(i)] + k - 1 - i));
  }
  return from_beta_set(std::move(beta));
}

bool is_d_core(const Partition& lambda, int d) { return count_hooks(lambda, d) == 0; }

std::vector<Partition> enumerate_d_cores(int m, int d) {
  std::vector<Partition> out;
  for (auto& lambda : enumerate_partitions(m))
    if (is_d_core(lambda, d)) out.push_back(std::move(lambda));
  return out;
}

BigInt count_partitions_with_core(int n, int d, const Partition& mu) {
  if (d < 1) throw ArgumentError("count_partitions_with_core: d must be >= 1");
  const int rest = n - mu.size();
  if (rest < 0 || rest % d != 0 || !is_d_core(mu, d)) return 0;
  return multipartition_count(d, rest / d);
}

namespace {

struct MnKey {
  std::vector<int> data;
  bool operator==(const MnKey&) const = default;
};

struct MnKeyHash {
  std::size_t operator()(const MnKey& k) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : k.data) h = (h ^ static_cast<std::size_t>(x + 1)) * 0x100000001b3ULL;
    return h;
  }
};

// Per-thread memo keeps concurrent callers independent.
thread_local std::unordered_map<MnKey, BigInt, MnKeyHash> mn_memo;

BigInt mn_rec(const Partition& lambda, const std::vector<int>& rho, std::size_t from) {
  if (from == rho.size()) return lambda.empty() ? 1 : 0;

  MnKey key;
  key.data = lambda.parts();
  key.data.push_back(-1);
  key.data.insert(key.data.end(), rho.begin() + static_cast<std::ptrdiff_t>(from), rho.end());
  if (auto it = mn_memo.find(key); it != mn_memo.end()) return it->second;

  const int r = rho[from];
  const std::vector<int> beta = beta_set(lambda, lambda.length());
  BigInt total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int x = beta[i];
    const int target = x - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // Beads strictly between target and x give the leg length of the rim hook.
    int leg = 0;
    for (int y : beta)
      if (y > target && y < x) ++leg;
    std::vector<int> moved = beta;
    moved[i] = target;
    const BigInt sub = mn_rec(from_beta_set(std::move(moved)), rho, from + 1);
    if (leg % 2) total -= sub;
    else total += sub;
  }
  mn_memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt mn_character_value(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size())
    throw ArgumentError("mn_character_value: size mismatch " + lambda.str() + " vs " + rho.str());
  return mn_rec(lambda, rho.parts(), 0);
}

void clear_mn_cache() { mn_memo.clear(); }

}  // namespace blockcraft
