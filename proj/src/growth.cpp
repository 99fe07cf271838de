#include "weyl/growth.hpp"

#include "weyl/errors.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstring>
#include <thread>

namespace weyl {

namespace {

constexpr int kShardBits = 6;
constexpr std::size_t kShards = std::size_t(1) << kShardBits;

// Scalar plumbing for the two engine instantiations. The int64 fast path
// reports overflow so the driver can escalate; Integer never overflows.
template <class S>
struct Ops;

template <>
struct Ops<std::int64_t> {
  static bool reflect(const std::int64_t* w, const std::int64_t& wi,
                      const std::int64_t* col, int n, std::int64_t* out) {
    for (int j = 0; j < n; ++j) {
      std::int64_t p, r;
      if (__builtin_mul_overflow(wi, col[j], &p)) return false;
      if (__builtin_sub_overflow(w[j], p, &r)) return false;
      out[j] = r;
    }
    return true;
  }
  static std::uint64_t hash(const std::int64_t* v, int n) {
    std::uint64_t h = 0x243f6a8885a308d3ull;
    for (int j = 0; j < n; ++j)
      h = mix64(h ^ static_cast<std::uint64_t>(v[j]));
    return h;
  }
  static std::size_t coord_bytes(const std::int64_t&) { return 8; }
};

template <>
struct Ops<Integer> {
  static bool reflect(const Integer* w, const Integer& wi,
                      const Integer* col, int n, Integer* out) {
    for (int j = 0; j < n; ++j) out[j] = w[j] - wi * col[j];
    return true;
  }
  static std::uint64_t hash(const Integer* v, int n) {
    std::uint64_t h = 0x243f6a8885a308d3ull;
    boost::hash<Integer> hasher;
    for (int j = 0; j < n; ++j)
      h = mix64(h ^ static_cast<std::uint64_t>(hasher(v[j])));
    return h;
  }
  static std::size_t coord_bytes(const Integer& v) {
    return sizeof(Integer) + v.backend().size() * sizeof(std::uintmax_t);
  }
};

// Open-addressing set over flat coordinate vectors. Collisions are
// resolved by full-vector comparison; insertion order is the iteration
// order of data().
template <class S>
class FlatSet {
 public:
  explicit FlatSet(int n) : n_(n) {}

  void reserve(std::uint64_t elems) {
    std::size_t want = 16;
    while (want * 7 < (elems + 1) * 10) want <<= 1;
    if (want > slots_.size()) rehash(want);
    data_.reserve(elems * n_);
    hashes_.reserve(elems);
  }

  bool insert(const S* v, std::uint64_t h) {
    if (slots_.empty()) rehash(64);
    if ((count_ + 1) * 10 > slots_.size() * 7) rehash(slots_.size() * 2);
    std::size_t mask = slots_.size() - 1;
    std::size_t pos = h & mask;
    for (;;) {
      std::uint32_t s = slots_[pos];
      if (s == 0) {
        if (count_ + 1 > 0xfffffffeull)
          throw Error("level frontier exceeds 2^32 elements");
        data_.insert(data_.end(), v, v + n_);
        hashes_.push_back(h);
        slots_[pos] = static_cast<std::uint32_t>(++count_);
        return true;
      }
      std::size_t e = std::size_t(s) - 1;
      if (hashes_[e] == h && std::equal(v, v + n_, &data_[e * n_]))
        return false;
      pos = (pos + 1) & mask;
    }
  }

  std::uint64_t size() const { return count_; }
  const std::vector<S>& data() const { return data_; }
  std::vector<S>& data() { return data_; }

 private:
  void rehash(std::size_t cap) {
    slots_.assign(cap, 0);
    std::size_t mask = cap - 1;
    for (std::size_t e = 0; e < count_; ++e) {
      std::size_t pos = hashes_[e] & mask;
      while (slots_[pos] != 0) pos = (pos + 1) & mask;
      slots_[pos] = static_cast<std::uint32_t>(e + 1);
    }
  }

  int n_;
  std::uint64_t count_ = 0;
  std::vector<S> data_;
  std::vector<std::uint64_t> hashes_;
  std::vector<std::uint32_t> slots_;
};

template <class S>
struct Level {
  int n = 0;
  std::vector<S> cols;      // column-major: cols[i*n + j] = A[j][i]
  std::vector<S> frontier;  // flat, count * n scalars
  std::uint64_t count = 0;
};

template <class S>
Level<S> init_level(const CartanMatrix& m) {
  Level<S> lv;
  lv.n = m.rank();
  lv.cols.resize(std::size_t(lv.n) * lv.n);
  for (int i = 0; i < lv.n; ++i)
    for (int j = 0; j < lv.n; ++j) lv.cols[std::size_t(i) * lv.n + j] = m.entry(j, i);
  lv.frontier.assign(lv.n, S(1));
  lv.count = 1;
  return lv;
}

Level<Integer> escalate(const Level<std::int64_t>& a) {
  Level<Integer> b;
  b.n = a.n;
  b.cols.assign(a.cols.begin(), a.cols.end());
  b.frontier.assign(a.frontier.begin(), a.frontier.end());
  b.count = a.count;
  return b;
}

enum class StepStatus { Ok, Overflow, Budget };

template <class S>
std::size_t flat_bytes(const std::vector<S>& v) {
  std::size_t b = 0;
  for (const S& x : v) b += Ops<S>::coord_bytes(x);
  return b;
}

// Runs fn(w) for w = 0..workers-1, on this thread when workers == 1.
template <class F>
void run_workers(int workers, F&& fn) {
  if (workers <= 1) {
    fn(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(fn, w);
  for (auto& t : pool) t.join();
}

/*
  One level step. Candidates are generated per worker into per-shard
  buffers (shard = top hash bits), then each shard is deduplicated by
  inserting worker buffers in worker order. Workers own contiguous chunks
  of the frontier in order, so the concatenated insertion sequence of any
  shard — and therefore the resulting set and its element order — is
  identical for every worker count.
*/
template <class S>
StepStatus expand(Level<S>& lv, int workers, const EnumOptions& opt) {
  const int n = lv.n;
  const std::uint64_t M = lv.count;

  struct Buf {
    std::vector<std::uint64_t> h;
    std::vector<S> c;
  };
  std::vector<std::array<Buf, kShards>> bufs(workers);
  std::atomic<bool> overflow{false};
  std::atomic<std::uint64_t> candidates{0};

  run_workers(workers, [&](int w) {
    const std::uint64_t lo = M * w / workers;
    const std::uint64_t hi = M * (w + 1) / workers;
    std::vector<S> tmp(n);
    std::uint64_t local = 0;
    for (std::uint64_t e = lo; e < hi; ++e) {
      if (overflow.load(std::memory_order_relaxed)) return;
      const S* v = &lv.frontier[e * n];
      for (int i = 0; i < n; ++i) {
        if (!(v[i] > 0)) continue;
        if (!Ops<S>::reflect(v, v[i], &lv.cols[std::size_t(i) * n], n,
                             tmp.data())) {
          overflow.store(true, std::memory_order_relaxed);
          return;
        }
        std::uint64_t h = Ops<S>::hash(tmp.data(), n);
        Buf& b = bufs[w][h >> (64 - kShardBits)];
        b.h.push_back(h);
        b.c.insert(b.c.end(), tmp.begin(), tmp.end());
        ++local;
      }
    }
    candidates.fetch_add(local, std::memory_order_relaxed);
  });
  if (overflow.load()) return StepStatus::Overflow;

  const std::uint64_t cand = candidates.load();
  if (opt.max_elements && M + cand > opt.max_elements)
    return StepStatus::Budget;
  if (opt.max_bytes) {
    std::size_t est = flat_bytes(lv.frontier);
    for (const auto& wb : bufs)
      for (const auto& b : wb) est += flat_bytes(b.c) + b.h.size() * 8;
    // dedup storage is bounded by another candidate-sized copy
    if (est * 2 > opt.max_bytes) return StepStatus::Budget;
  }

  std::vector<FlatSet<S>> sets;
  sets.reserve(kShards);
  for (std::size_t s = 0; s < kShards; ++s) sets.emplace_back(n);

  run_workers(workers, [&](int t) {
    const std::size_t s_lo = kShards * t / workers;
    const std::size_t s_hi = kShards * (t + 1) / workers;
    for (std::size_t s = s_lo; s < s_hi; ++s) {
      std::uint64_t total = 0;
      for (int w = 0; w < workers; ++w) total += bufs[w][s].h.size();
      sets[s].reserve(total);
      for (int w = 0; w < workers; ++w) {
        const Buf& b = bufs[w][s];
        for (std::size_t e = 0; e < b.h.size(); ++e)
          sets[s].insert(&b.c[e * n], b.h[e]);
      }
    }
  });

  std::uint64_t total = 0;
  for (const auto& s : sets) total += s.size();
  lv.frontier.clear();
  lv.frontier.reserve(total * n);
  for (auto& s : sets)
    lv.frontier.insert(lv.frontier.end(),
                       std::make_move_iterator(s.data().begin()),
                       std::make_move_iterator(s.data().end()));
  lv.count = total;
  return StepStatus::Ok;
}

template <class S>
std::uint64_t count_dominant(const Level<S>& lv, const NodeSet& J) {
  std::uint64_t c = 0;
  const int n = lv.n;
  for (std::uint64_t e = 0; e < lv.count; ++e) {
    const S* v = &lv.frontier[e * n];
    bool ok = true;
    for (int j : J)
      if (!(v[j] > 0)) {
        ok = false;
        break;
      }
    c += ok;
  }
  return c;
}

template <class S>
std::vector<std::vector<Integer>> capture_images(const Level<S>& lv) {
  std::vector<std::vector<Integer>> out;
  out.reserve(lv.count);
  const int n = lv.n;
  for (std::uint64_t e = 0; e < lv.count; ++e)
    out.emplace_back(lv.frontier.begin() + e * n,
                     lv.frontier.begin() + (e + 1) * n);
  return out;
}

NodeSet checked_nodes(const NodeSet& J, int rank, const char* who) {
  NodeSet j = J;
  std::sort(j.begin(), j.end());
  j.erase(std::unique(j.begin(), j.end()), j.end());
  for (int v : j)
    if (v < 0 || v >= rank)
      throw Error(std::string(who) + ": node index out of range");
  return j;
}

}  // namespace

Enumeration enumerate_levels(const CartanMatrix& m, int max_order,
                             const std::optional<NodeSet>& J, int keep_level,
                             const EnumOptions& opt) {
  if (max_order < 0) throw Error("enumerate_levels: max_order must be >= 0");
  std::optional<NodeSet> j;
  if (J) j = checked_nodes(*J, m.rank(), "enumerate_levels");

  int workers = opt.workers;
  if (workers <= 0)
    workers = std::max(1u, std::thread::hardware_concurrency());

  auto lv64 = init_level<std::int64_t>(m);
  Level<Integer> lvbig;
  bool big = false;

  Enumeration out;
  out.has_filter = j.has_value();
  const auto t0 = std::chrono::steady_clock::now();

  for (int k = 0;; ++k) {
    const std::uint64_t cnt = big ? lvbig.count : lv64.count;
    if (cnt == 0) {
      out.full.complete = true;
      out.filtered.complete = true;
      break;
    }
    std::uint64_t filt = cnt;
    if (j) filt = big ? count_dominant(lvbig, *j) : count_dominant(lv64, *j);
    out.full.coeffs.push_back(cnt);
    out.filtered.coeffs.push_back(filt);
    if (k == keep_level)
      out.level_images = big ? capture_images(lvbig) : capture_images(lv64);
    if (opt.on_level) {
      std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      opt.on_level({k, j ? filt : cnt, cnt, dt.count()});
    }
    if (k == max_order) break;

    StepStatus st =
        big ? expand(lvbig, workers, opt) : expand(lv64, workers, opt);
    if (st == StepStatus::Overflow) {
      lvbig = escalate(lv64);
      lv64 = Level<std::int64_t>{};
      big = true;
      st = expand(lvbig, workers, opt);
    }
    if (st == StepStatus::Budget) {
      out.full.budget_exceeded = true;
      out.filtered.budget_exceeded = true;
      break;
    }
  }
  return out;
}

GrowthSeries growth_series(const CartanMatrix& m, int max_order,
                           const EnumOptions& opt) {
  return enumerate_levels(m, max_order, std::nullopt, -1, opt).full;
}

GrowthSeries parabolic_coset_growth(const CartanMatrix& m, const NodeSet& J,
                                    int max_order, const EnumOptions& opt) {
  return enumerate_levels(m, max_order, J, -1, opt).filtered;
}

GrowthSeries complete_growth(const CartanMatrix& m, const EnumOptions& opt,
                             int depth_cap) {
  Enumeration e = enumerate_levels(m, depth_cap, std::nullopt, -1, opt);
  if (!e.full.complete) {
    if (e.full.budget_exceeded)
      throw NotFinite("complete_growth: budget exceeded before termination");
    throw NotFinite("complete_growth: depth cap " + std::to_string(depth_cap) +
                    " hit; group is not finite (or raise the cap)");
  }
  return e.full;
}

std::uint64_t finite_order(const CartanMatrix& m, const EnumOptions& opt,
                           int depth_cap) {
  GrowthSeries g = complete_growth(m, opt, depth_cap);
  std::uint64_t total = 0;
  for (std::uint64_t c : g.coeffs) total += c;
  return total;
}

std::vector<int> canonical_word(const Weight& image, const CartanMatrix& m) {
  const int n = m.rank();
  std::vector<int> word;
  Weight u = image;
  for (;;) {
    int descent = -1;
    for (int i = 0; i < n; ++i)
      if (u.coord(i) < 0) {
        descent = i;
        break;
      }
    if (descent < 0) break;
    word.push_back(descent);
    u = reflect(u, descent, m);
  }
  if (u != Weight::rho(n))
    throw Error("canonical_word: input is not an image of the Weyl vector");
  return word;
}

std::vector<std::vector<int>> reduced_words(const CartanMatrix& m, int level,
                                            const std::optional<NodeSet>& filter,
                                            std::size_t limit,
                                            const EnumOptions& opt) {
  if (level < 0) throw Error("reduced_words: level must be >= 0");
  std::optional<NodeSet> j;
  if (filter) j = checked_nodes(*filter, m.rank(), "reduced_words");

  Enumeration e = enumerate_levels(m, level, std::nullopt, level, opt);
  if (static_cast<int>(e.full.coeffs.size()) <= level) {
    if (e.full.complete) return {};  // finite group, level past the top
    throw LevelNotEnumerated(
        "reduced_words: enumeration stopped before level " +
        std::to_string(level) + " (budget exceeded)");
  }

  std::vector<std::vector<int>> words;
  for (const auto& img : e.level_images) {
    if (j) {
      bool ok = true;
      for (int v : *j)
        if (!(img[v] > 0)) {
          ok = false;
          break;
        }
      if (!ok) continue;
    }
    std::vector<int> w = canonical_word(Weight(img), m);
    if (static_cast<int>(w.size()) != level)
      throw Error("reduced_words: internal length mismatch");
    words.push_back(std::move(w));
  }
  std::sort(words.begin(), words.end());
  if (words.size() > limit) words.resize(limit);
  return words;
}

}  // namespace weyl
