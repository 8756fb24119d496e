// Copyright 2026 The bosind Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bosind/symgroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "bosind/errors.hpp"

namespace bosind {

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw Error(ErrorKind::Domain, "factorial: n out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error(ErrorKind::Validation, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw Error(ErrorKind::Validation, "partition parts must be weakly decreasing");
    }
    boxes_ += parts_[i];
  }
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (!parts_.empty()) {
    c.assign(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_) {
      for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    }
  }
  return Partition(std::move(c));
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition Partition::single_row(int n) { return Partition({n}); }

Partition Partition::single_column(int n) {
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

// -------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const std::size_t n = images_.size();
  std::vector<char> seen(n, 0);
  std::vector<int> cycles;
  int transpositions = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t j = start; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = 1;
      ++len;
    }
    cycles.push_back(len);
    transpositions += len - 1;
  }
  std::sort(cycles.begin(), cycles.end(), std::greater<>());
  sign_ = (transpositions % 2 == 0) ? 1 : -1;
  cycle_type_ = Partition(std::move(cycles));
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::from_images(std::vector<int> zero_based) {
  const int n = static_cast<int>(zero_based.size());
  std::vector<char> seen(zero_based.size(), 0);
  for (int v : zero_based) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorKind::Validation, "permutation images must be a bijection");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::from_one_line(const std::vector<int>& one_based) {
  std::vector<int> im(one_based.size());
  std::transform(one_based.begin(), one_based.end(), im.begin(), [](int v) { return v - 1; });
  return from_images(std::move(im));
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) {
    throw Error(ErrorKind::Validation, "transposition positions out of range");
  }
  auto im = identity(n).images_;
  std::swap(im[static_cast<std::size_t>(i - 1)], im[static_cast<std::size_t>(j - 1)]);
  return Permutation(std::move(im));
}

Permutation Permutation::cycle(int n, const std::vector<int>& one_based) {
  auto im = identity(n).images_;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < one_based.size(); ++k) {
    const int from = one_based[k];
    const int to = one_based[(k + 1) % one_based.size()];
    if (from < 1 || from > n || seen[static_cast<std::size_t>(from - 1)]) {
      throw Error(ErrorKind::Validation, "cycle labels must be distinct and in range");
    }
    seen[static_cast<std::size_t>(from - 1)] = 1;
    im[static_cast<std::size_t>(from - 1)] = to - 1;
  }
  return Permutation(std::move(im));
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(images_.size());
  std::transform(images_.begin(), images_.end(), out.begin(), [](int v) { return v + 1; });
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw Error(ErrorKind::Shape, "composing permutations of different degree");
  std::vector<int> im(q.images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) {
    im[i] = p.images_[static_cast<std::size_t>(q.images_[i])];
  }
  return Permutation(std::move(im));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<Permutation> permutations(int n) {
  if (n < 1 || n > kMaxEnumeratedParticles) {
    throw Error(ErrorKind::Size, "permutations: n must be in [1, 8], got " + std::to_string(n));
  }
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.push_back(Permutation::from_images(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

int sign(const Permutation& p) { return p.sign(); }

CycleType cycle_type(const Permutation& p) { return p.cycle_type(); }

Permutation class_representative(const CycleType& mu) {
  const int n = mu.size();
  auto im = Permutation::identity(n).images();
  int start = 0;
  for (int len : mu.parts()) {
    for (int k = 0; k < len; ++k) {
      im[static_cast<std::size_t>(start + k)] = start + (k + 1) % len;
    }
    start += len;
  }
  return Permutation::from_images(std::move(im));
}

std::uint64_t class_size(const CycleType& mu) {
  // z_mu = prod_k k^{m_k} m_k!
  std::map<int, int> mult;
  for (int p : mu.parts()) ++mult[p];
  std::uint64_t z = 1;
  for (const auto& [k, m] : mult) {
    for (int i = 0; i < m; ++i) z *= static_cast<std::uint64_t>(k);
    z *= factorial(m);
  }
  return factorial(mu.size()) / z;
}

// --------------------------------------------------------------- partitions

std::vector<Partition> partitions(int n, int max_rows) {
  if (n < 1 || max_rows < 1) throw Error(ErrorKind::Domain, "partitions: n and max_rows must be >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Depth-first with parts chosen largest first yields reverse-lex order.
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_rows) return;
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::uint64_t hook_dimension(const Partition& lam) {
  const int n = lam.size();
  if (n > 20) throw Error(ErrorKind::Domain, "hook_dimension: N > 20");
  const Partition conj = lam.conjugate();
  // The hook product divides N!, so it fits whenever N! does.
  std::uint64_t hooks = 1;
  for (int i = 0; i < lam.rows(); ++i) {
    for (int j = 0; j < lam[i]; ++j) {
      hooks *= static_cast<std::uint64_t>(lam[i] - j + conj[j] - i - 1);
    }
  }
  return factorial(n) / hooks;
}

namespace {

// Characters via beta-sets: removing a rim hook of length r moves one bead
// from position b to b - r; the sign is (-1)^(beads strictly in between).
long long mn_recursive(std::vector<int> beta, const std::vector<int>& mu, std::size_t next,
                       std::map<std::pair<std::vector<int>, std::vector<int>>, long long>& memo) {
  if (next == mu.size()) return 1;
  std::vector<int> rest(mu.begin() + static_cast<std::ptrdiff_t>(next), mu.end());
  auto key = std::make_pair(beta, rest);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = mu[next];
  long long total = 0;
  for (std::size_t k = 0; k < beta.size(); ++k) {
    const int b = beta[k];
    const int target = b - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int x : beta) {
      if (x > target && x < b) ++between;
    }
    std::vector<int> moved = beta;
    moved[k] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    const long long sub = mn_recursive(std::move(moved), mu, next + 1, memo);
    total += (between % 2 == 0 ? 1 : -1) * sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

long long irrep_character(const Partition& lam, const CycleType& mu) {
  if (lam.size() != mu.size()) {
    throw Error(ErrorKind::Shape, "irrep_character: partitions of different N: " + lam.str() +
                                      " vs " + mu.str());
  }
  static std::mutex mutex;
  static std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;

  const int len = lam.rows();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lam[i] + (len - 1 - i);

  std::lock_guard<std::mutex> lock(mutex);
  return mn_recursive(std::move(beta), mu.parts(), 0, memo);
}

Rational transposition_eigenvalue(const Partition& lam) {
  const long long n = lam.size();
  if (n < 2) throw Error(ErrorKind::Domain, "transposition_eigenvalue requires N >= 2");
  long long s = 0;
  for (int j = 1; j <= lam.rows(); ++j) {
    const long long l = lam[j - 1];
    s += l * l - (2LL * j - 1) * l;
  }
  return Rational(s, n * (n - 1));
}

// ------------------------------------------------------------ Young tableaux

YoungTableau::YoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> lengths;
  for (const auto& r : rows_) lengths.push_back(static_cast<int>(r.size()));
  shape_ = Partition(lengths);
  const int n = shape_.size();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const auto& r : rows_) {
    for (int v : r) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
        throw Error(ErrorKind::Validation, "tableau entries must be exactly 1..N");
      }
      seen[static_cast<std::size_t>(v - 1)] = 1;
    }
  }
}

YoungTableau YoungTableau::row_reading(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int len : shape.parts()) {
    std::vector<int> r(static_cast<std::size_t>(len));
    for (auto& v : r) v = next++;
    rows.push_back(std::move(r));
  }
  return YoungTableau(std::move(rows));
}

bool YoungTableau::is_standard() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j > 0 && rows_[i][j] <= rows_[i][j - 1]) return false;
      if (i > 0 && rows_[i][j] <= rows_[i - 1][j]) return false;
    }
  }
  return true;
}

namespace {

// All permutations that permute the labels inside each block and fix the rest.
std::vector<Permutation> block_group(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<Permutation> group{Permutation::identity(n)};
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    std::vector<int> order = block;
    std::sort(order.begin(), order.end());
    std::vector<Permutation> local;
    std::vector<int> image = order;
    do {
      auto im = Permutation::identity(n).images();
      for (std::size_t k = 0; k < order.size(); ++k) {
        im[static_cast<std::size_t>(order[k] - 1)] = image[k] - 1;
      }
      local.push_back(Permutation::from_images(std::move(im)));
    } while (std::next_permutation(image.begin(), image.end()));
    std::vector<Permutation> next;
    next.reserve(group.size() * local.size());
    for (const auto& g : group) {
      for (const auto& l : local) next.push_back(g * l);
    }
    group = std::move(next);
  }
  return group;
}

}  // namespace

std::vector<Permutation> YoungTableau::row_group() const { return block_group(size(), rows_); }

std::vector<Permutation> YoungTableau::column_group() const {
  std::vector<std::vector<int>> cols;
  for (const auto& r : rows_) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (cols.size() <= j) cols.emplace_back();
      cols[j].push_back(r[j]);
    }
  }
  return block_group(size(), cols);
}

std::vector<YoungTableau> standard_tableaux(const Partition& shape) {
  const int n = shape.size();
  std::vector<YoungTableau> out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
  // Place 1..n in order; a box is addable if its row is not full and the
  // row above is strictly longer.
  std::function<void(int)> rec = [&](int label) {
    if (label > n) {
      out.emplace_back(rows);
      return;
    }
    for (int i = 0; i < shape.rows(); ++i) {
      auto& row = rows[static_cast<std::size_t>(i)];
      if (static_cast<int>(row.size()) >= shape[i]) continue;
      if (i > 0 && rows[static_cast<std::size_t>(i - 1)].size() <= row.size()) continue;
      row.push_back(label);
      rec(label + 1);
      row.pop_back();
    }
  };
  rec(1);
  return out;
}

}  // namespace bosind
