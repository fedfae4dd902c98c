#include "frieze/similarity.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "frieze/error.hpp"
#include "frieze/eta.hpp"
#include "frieze/polygon.hpp"

namespace frieze {

namespace {

void check_length(int n) {
  if (n < 3) throw InvalidInput("polygon needs at least 3 vertices");
}

void check_cap(int n, int cap) {
  if (n > cap) {
    throw CapExceeded("n=" + std::to_string(n) + " exceeds the enumeration cap " +
                      std::to_string(cap));
  }
}

bool is_degenerate(std::span<const std::int64_t> s) {
  return s.size() == 2 && s[0] == 0 && s[1] == 0;
}

// T, S, A at any polygon size >= 2; the 2-gon (0,0) counts once and is its
// own mirror image.
TSACounts tsa_at(int n) {
  if (n == 2) return TSACounts{1, 1, 0};
  return count_tsa(n);
}

}  // namespace

std::vector<Sequence> dihedral_images(std::span<const std::int64_t> q) {
  std::vector<Sequence> images;
  images.reserve(2 * q.size());
  const Sequence rev = reversed(q);
  for (std::size_t r = 0; r < q.size(); ++r) {
    images.push_back(rotated(q, static_cast<std::int64_t>(r)));
    images.push_back(rotated(rev, static_cast<std::int64_t>(r)));
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

OrbitCanon canonicalize(std::span<const std::int64_t> q) {
  const std::size_t n = q.size();
  if (n == 0) return OrbitCanon{{}, 1};
  // Compare images in place; materialize only the winner.
  auto image_at = [&](bool reflect, std::size_t r, std::size_t i) {
    const std::size_t idx = (r + i) % n;
    return reflect ? q[n - 1 - idx] : q[idx];
  };
  bool best_reflect = false;
  std::size_t best_r = 0;
  std::int64_t stabilizer = 0;
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t r = 0; r < n; ++r) {
      int cmp_best = 0;
      int cmp_self = 0;
      for (std::size_t i = 0; i < n && (cmp_best == 0 || cmp_self == 0); ++i) {
        const std::int64_t v = image_at(reflect != 0, r, i);
        if (cmp_best == 0) {
          const std::int64_t w = image_at(best_reflect, best_r, i);
          cmp_best = v < w ? -1 : (v > w ? 1 : 0);
        }
        if (cmp_self == 0 && v != q[i]) cmp_self = 1;
      }
      if (cmp_self == 0) ++stabilizer;
      if (cmp_best < 0) {
        best_reflect = reflect != 0;
        best_r = r;
      }
    }
  }
  OrbitCanon out;
  out.canon.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.canon[i] = image_at(best_reflect, best_r, i);
  out.orbit_size = static_cast<std::int64_t>(2 * n) / stabilizer;
  return out;
}

std::string to_string(Category c) {
  switch (c) {
    case Category::kSymmetric:
      return "symmetric";
    case Category::kPseudoSymmetric:
      return "pseudo-symmetric";
    case Category::kAsymmetric:
      return "asymmetric";
  }
  return "asymmetric";
}

std::size_t period(std::span<const std::int64_t> q) {
  const std::size_t n = q.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool fixed = true;
    for (std::size_t i = 0; i < n && fixed; ++i) fixed = q[i] == q[(i + p) % n];
    if (fixed) return p;
  }
  return n;
}

SeqClassification classify(std::span<const std::int64_t> q) {
  SeqClassification out;
  out.period = period(q);
  const std::size_t p = out.period;
  if (p == 0) return out;
  const std::size_t offset = p % 2 == 1 ? 1 : 0;  // b_i = b_{p - i - offset}
  for (std::size_t r = 0; r < p; ++r) {
    bool mirrored = true;
    for (std::size_t i = 0; i < p && mirrored; ++i) {
      const std::size_t partner = (2 * p - i - offset) % p;
      mirrored = q[(r + i) % p] == q[(r + partner) % p];
    }
    if (mirrored) {
      out.category = p % 2 == 1 ? Category::kSymmetric : Category::kPseudoSymmetric;
      return out;
    }
  }
  return out;
}

TSACounts count_tsa(int n) {
  check_length(n);
  TSACounts out;
  out.t = catalan(n - 2);
  out.s = n % 2 == 0 ? BigInt(0) : catalan((n - 1) / 2 - 1);
  out.a = (out.t - out.s) / 2;
  return out;
}

TSACounts count_tsa_brute(int n, int cap) {
  check_length(n);
  check_cap(n, cap);
  TSACounts out;
  std::int64_t total = 0;
  std::int64_t fixed = 0;
  for_each_quiddity(
      n,
      [&](std::span<const std::int64_t> q) {
        ++total;
        if (std::equal(q.begin(), q.end(), q.rbegin())) ++fixed;
      },
      std::max(cap, n));
  out.t = total;
  out.s = fixed;
  out.a = (total - fixed) / 2;
  return out;
}

char to_char(PartitionCase c) { return static_cast<char>('A' + static_cast<int>(c)); }

std::vector<TriPartition> perfect_tripartitions(int n) {
  check_length(n);
  std::vector<TriPartition> out;
  const int m = n / 2;
  const bool even = n % 2 == 0;
  if (even) out.push_back({m, m, 0, PartitionCase::A});
  const int top = even ? m - 1 : m;
  for (int i = top; i >= 1; --i) {
    for (int j = std::min(i, n - i - 1); j >= 1; --j) {
      const int k = n - i - j;
      if (k > j || k < 1) continue;
      TriPartition tp{i, j, k, PartitionCase::C};
      if (!even && i == m && j == m && k == 1) {
        tp.tag = PartitionCase::B;
      } else if (i == j && j == k) {
        tp.tag = PartitionCase::F;
      } else if (i == j) {
        tp.tag = PartitionCase::D;
      } else if (j == k) {
        tp.tag = PartitionCase::E;
      }
      out.push_back(tp);
    }
  }
  return out;
}

BigInt case_count(const TriPartition& tp) {
  const TSACounts x = tsa_at(tp.i + 1);
  const TSACounts z = tp.k >= 1 ? tsa_at(tp.k + 1) : TSACounts{};
  switch (tp.tag) {
    case PartitionCase::A:
      return x.a * (x.a + 1) + x.a * x.s + x.s * (x.s + 1) / 2;
    case PartitionCase::B:
      return x.t * (x.t + 1) / 2;
    case PartitionCase::C:
      return x.t * tsa_at(tp.j + 1).t * z.t;
    case PartitionCase::D:
      return (x.t * x.t * z.t + x.t * z.s) / 2;
    case PartitionCase::E:
      return (x.t * z.t * z.t + x.s * z.t) / 2;
    case PartitionCase::F:
      return x.t * (x.t + 1) * (x.t + 2) / 6 - x.t * x.a;
  }
  return 0;
}

std::vector<Sequence> brute_force_types(int n, int brute_cap, unsigned workers) {
  check_length(n);
  check_cap(n, brute_cap);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const int apexes = n - 2;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(apexes));

  std::set<Sequence> merged;
  std::mutex merge_lock;
  auto shard = [&](unsigned w) {
    std::set<Sequence> local;
    for (int apex = 1 + static_cast<int>(w); apex <= apexes; apex += static_cast<int>(workers)) {
      for_each_quiddity_with_apex(n, apex, [&](std::span<const std::int64_t> q) {
        local.insert(canonicalize(q).canon);
      });
    }
    const std::lock_guard<std::mutex> guard(merge_lock);
    merged.merge(local);
  };
  if (workers == 1) {
    shard(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(shard, w);
    for (std::thread& t : pool) t.join();
  }
  return {merged.begin(), merged.end()};
}

BigInt count_types(int n, CountMethod method, int brute_cap, unsigned workers) {
  check_length(n);
  if (method == CountMethod::kBrute) {
    return brute_force_types(n, brute_cap, workers).size();
  }
  BigInt total = 0;
  for (const TriPartition& tp : perfect_tripartitions(n)) total += case_count(tp);
  return total;
}

Sequence compose(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                 std::optional<std::span<const std::int64_t>> c) {
  int degenerate = 0;
  auto check = [&](std::span<const std::int64_t> s) {
    if (is_degenerate(s)) {
      ++degenerate;
      return;
    }
    if (!is_eta(s)) throw InvalidInput("(" + format_sequence(s) + ") is not a quiddity sequence");
  };
  check(a);
  check(b);
  if (c) check(*c);
  if (degenerate > 1) throw InvalidInput("at most one argument may be the 2-gon (0,0)");

  const std::size_t u = a.size() - 1;
  const std::size_t v = b.size() - 1;
  const std::int64_t bump = c ? 1 : 0;
  Sequence z(a.begin(), a.end() - 1);
  z.insert(z.end(), b.begin(), b.end() - 1);
  z[u] = a[u] + b[0] + bump;
  if (c) {
    const std::span<const std::int64_t> cc = *c;
    const std::size_t w = cc.size() - 1;
    z[0] = a[0] + cc[w] + 1;
    z.push_back(b[v] + cc[0] + 1);
    z.insert(z.end(), cc.begin() + 1, cc.end() - 1);
  } else {
    z[0] = a[0] + b[v];
  }
  return z;
}

std::vector<OrbitCanon> enumerate_types(int n, int cap) {
  check_length(n);
  check_cap(n, cap);
  // Every dihedral image of every type of each size.
  std::map<int, std::vector<Sequence>> images;
  images[2] = {Sequence{0, 0}};
  images[3] = {Sequence{1, 1, 1}};

  auto types_of = [&](int size) {
    std::set<Sequence> canon;
    for (const TriPartition& tp : perfect_tripartitions(size)) {
      const auto& xs = images.at(tp.i + 1);
      const auto& ys = images.at(tp.j + 1);
      if (tp.tag == PartitionCase::A) {
        for (const Sequence& x : xs) {
          for (const Sequence& y : ys) canon.insert(canonicalize(compose(x, y)).canon);
        }
        continue;
      }
      const auto& zs = images.at(tp.k + 1);
      for (const Sequence& x : xs) {
        for (const Sequence& y : ys) {
          for (const Sequence& z : zs) {
            canon.insert(canonicalize(compose(x, y, std::span<const std::int64_t>(z))).canon);
          }
        }
      }
    }
    return canon;
  };

  std::set<Sequence> result{Sequence{1, 1, 1}};
  for (int size = 4; size <= n; ++size) {
    result = types_of(size);
    std::vector<Sequence> all;
    for (const Sequence& t : result) {
      const auto imgs = dihedral_images(t);
      all.insert(all.end(), imgs.begin(), imgs.end());
    }
    images[size] = std::move(all);
  }
  std::vector<OrbitCanon> out;
  out.reserve(result.size());
  for (const Sequence& t : result) out.push_back(canonicalize(t));
  return out;
}

}  // namespace frieze
