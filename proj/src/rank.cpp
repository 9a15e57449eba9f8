#include "suptrop/rank.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <random>
#include <thread>

#include "detail/scaled_view.hpp"
#include "suptrop/error.hpp"

namespace suptrop {

namespace {

// Advances `c` (sorted, values < n) to the next combination in
// lexicographic order; false when exhausted.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), std::size_t{0});
  return c;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

class CheckBudget {
 public:
  explicit CheckBudget(std::uint64_t limit) : limit_(limit) {}

  // False once the budget is spent.
  bool take() {
    const std::uint64_t used = used_.fetch_add(1, std::memory_order_relaxed) + 1;
    return limit_ == 0 || used <= limit_;
  }
  std::uint64_t used() const {
    const std::uint64_t u = used_.load();
    return limit_ == 0 ? u : std::min(u, limit_);
  }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

struct Witness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

// Exhaustive sweep of one size. Row combinations are dealt round-robin to
// workers; the witness with the smallest row-combination index wins, and
// within a row set columns are scanned in order, so the result is the
// lexicographically first witness regardless of thread count.
std::optional<Witness> sweep_size(const detail::ScaledView& view, std::size_t rows,
                                  std::size_t cols, std::size_t size, unsigned threads,
                                  CheckBudget& budget, bool& exhausted_budget) {
  std::atomic<std::uint64_t> best_index{UINT64_MAX};
  std::atomic<bool> out_of_budget{false};
  std::vector<std::optional<Witness>> found(threads);

  auto worker = [&](unsigned t) {
    std::vector<std::size_t> rc = first_combination(size);
    std::uint64_t index = 0;
    do {
      if (index % threads == t) {
        if (index > best_index.load() || out_of_budget.load()) return;
        std::vector<std::size_t> cc = first_combination(size);
        do {
          if (!budget.take()) {
            out_of_budget = true;
            return;
          }
          if (view.nonsingular(rc, cc)) {
            std::uint64_t cur = best_index.load();
            while (index < cur && !best_index.compare_exchange_weak(cur, index)) {
            }
            found[t] = Witness{rc, cc};
            return;
          }
        } while (next_combination(cc, cols));
      }
      ++index;
    } while (next_combination(rc, rows));
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }
  if (out_of_budget) {
    exhausted_budget = true;
    return std::nullopt;
  }
  std::optional<Witness> best;
  for (auto& f : found) {
    if (f && (!best || f->rows < best->rows)) best = std::move(f);
  }
  return best;
}

// Depth-first search over non-singular submatrices. A node is a chain of
// (row, column) pairs, rows increasing, whose identity matching is the
// unique optimal all-tangible assignment. Deleting a matched pair keeps a
// matrix non-singular, so every non-singular submatrix arises from exactly
// one chain: its optimal matching listed in row order.
//
// A node stores potentials p with p[j] <= p[i] + w(i, j) for the exchange
// weights w(i, j) = a(r_i, c_j) - a(r_i, c_i). Appending (r, c) keeps the
// identity uniquely optimal iff every cycle through the new pair has
// positive weight; one Dijkstra pass from r settles this for all c at once.
template <class Cost>
class ExtensionSearch {
 public:
  ExtensionSearch(const detail::ScaledView& view, const std::vector<Cost>& values, std::size_t rows,
                  CheckBudget& budget)
      : view_(view), values_(values), rows_(rows), cols_(view.cols()), budget_(budget) {
    top_ = std::min(rows_, cols_);
    used_.assign(cols_, 0);
    pot_.resize(top_ + 1);
  }

  void run() { extend(0, 0); }

  bool over_budget() const { return over_; }
  std::size_t best() const { return best_; }
  Witness witness() const {
    Witness w{best_rows_, best_cols_};
    std::sort(w.cols.begin(), w.cols.end());
    return w;
  }

 private:
  bool finite(std::size_t r, std::size_t c) const { return view_.kinds()[r * cols_ + c] != Kind::infinity; }
  bool tangible(std::size_t r, std::size_t c) const { return view_.kinds()[r * cols_ + c] == Kind::tangible; }
  const Cost& at(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }

  // Shortest exchange-path lengths from a new row r to each chain node;
  // reach[j] = 0 when unreachable.
  void shortest_from(std::size_t r, std::size_t k, std::vector<Cost>& dist, std::vector<std::uint8_t>& reach) {
    const std::vector<Cost>& p = pot_[k];
    dist.assign(k, Cost{});
    reach.assign(k, 0);
    std::vector<std::uint8_t> done(k, 0);
    // Reduced lengths dist'(j) = dist(j) - p[j], non-negative on chain edges.
    for (std::size_t j = 0; j < k; ++j) {
      if (finite(r, chain_cols_[j])) {
        dist[j] = at(r, chain_cols_[j]) - p[j];
        reach[j] = 1;
      }
    }
    for (std::size_t step = 0; step < k; ++step) {
      std::size_t u = k;
      for (std::size_t j = 0; j < k; ++j) {
        if (reach[j] && !done[j] && (u == k || dist[j] < dist[u])) u = j;
      }
      if (u == k) break;
      done[u] = 1;
      const std::size_t ru = chain_rows_[u];
      const Cost base = dist[u] + p[u] - at(ru, chain_cols_[u]);
      for (std::size_t j = 0; j < k; ++j) {
        if (done[j] || !finite(ru, chain_cols_[j])) continue;
        const Cost cand = base + at(ru, chain_cols_[j]) - p[j];
        if (!reach[j] || cand < dist[j]) {
          dist[j] = cand;
          reach[j] = 1;
        }
      }
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (reach[j]) dist[j] += p[j];
    }
  }

  void extend(std::size_t k, std::size_t next_row) {
    if (k > best_) {
      best_ = k;
      best_rows_ = chain_rows_;
      best_cols_ = chain_cols_;
    }
    if (best_ == top_ || over_ || k == top_) return;

    std::vector<Cost> dist;
    std::vector<std::uint8_t> reach;
    for (std::size_t r = next_row; r < rows_; ++r) {
      if (k + (rows_ - r) <= best_) return;
      shortest_from(r, k, dist, reach);
      for (std::size_t c = 0; c < cols_; ++c) {
        if (used_[c] || !tangible(r, c)) continue;
        if (!budget_.take()) {
          over_ = true;
          return;
        }
        // Cheapest cycle through (r, c): r -> ... -> i -> back via column c.
        const Cost& arc = at(r, c);
        bool closes = false;
        for (std::size_t i = 0; i < k && !closes; ++i) {
          const std::size_t ri = chain_rows_[i];
          if (!reach[i] || !finite(ri, c)) continue;
          if (dist[i] - arc + at(ri, c) - at(ri, chain_cols_[i]) <= Cost{}) closes = true;
        }
        if (closes) continue;

        // Potentials for the extended chain: min(D, p + shift) with D the
        // distances from the new node, p(new) = 0.
        const std::vector<Cost>& p = pot_[k];
        Cost shift{};
        for (std::size_t i = 0; i < k; ++i) {
          const std::size_t ri = chain_rows_[i];
          if (!finite(ri, c)) continue;
          const Cost need = -p[i] - (at(ri, c) - at(ri, chain_cols_[i]));
          if (need > shift) shift = need;
        }
        std::vector<Cost>& q = pot_[k + 1];
        q.resize(k + 1);
        for (std::size_t j = 0; j < k; ++j) {
          q[j] = p[j] + shift;
          if (reach[j]) {
            const Cost d = dist[j] - arc;
            if (d < q[j]) q[j] = d;
          }
        }
        q[k] = Cost{};

        chain_rows_.push_back(r);
        chain_cols_.push_back(c);
        used_[c] = 1;
        extend(k + 1, r + 1);
        used_[c] = 0;
        chain_rows_.pop_back();
        chain_cols_.pop_back();
        if (best_ == top_ || over_) return;
      }
    }
  }

  const detail::ScaledView& view_;
  const std::vector<Cost>& values_;
  std::size_t rows_;
  std::size_t cols_;
  std::size_t top_ = 0;
  CheckBudget& budget_;
  bool over_ = false;

  std::vector<std::size_t> chain_rows_;
  std::vector<std::size_t> chain_cols_;
  std::vector<std::uint8_t> used_;
  std::vector<std::vector<Cost>> pot_;

  std::size_t best_ = 0;
  std::vector<std::size_t> best_rows_;
  std::vector<std::size_t> best_cols_;
};

std::vector<std::size_t> random_subset(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("TROP_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

std::uint64_t count_square_submatrices(std::size_t rows, std::size_t cols, std::size_t size) {
  const unsigned __int128 r = static_cast<unsigned __int128>(binomial(rows, size)) * binomial(cols, size);
  return r > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(r);
}

SizeSweep find_nonsingular(const Matrix& a, std::size_t size, const RankOptions& options) {
  SizeSweep out;
  if (size == 0 || size > std::min(a.rows(), a.cols())) return out;
  const detail::ScaledView view(a);
  CheckBudget budget(options.max_checks);
  bool over = false;
  const unsigned threads = options.threads ? options.threads : default_thread_count();
  auto w = sweep_size(view, a.rows(), a.cols(), size, threads, budget, over);
  out.checks = budget.used();
  if (over) {
    fail(ErrorKind::size_limit_exceeded,
         "submatrix sweep exceeded the budget of " + std::to_string(options.max_checks) + " checks");
  }
  if (w) out.witness = std::make_pair(std::move(w->rows), std::move(w->cols));
  return out;
}

RankResult tropical_rank(const Matrix& a, const RankOptions& options) {
  RankResult out;
  const std::size_t top = std::min(a.rows(), a.cols());
  if (top == 0) return out;

  const detail::ScaledView view(a);
  CheckBudget budget(options.max_checks);

  if (options.mode == RankMode::exhaustive) {
    auto search = [&](const auto& values) {
      using Cost = typename std::decay_t<decltype(values)>::value_type;
      ExtensionSearch<Cost> s(view, values, a.rows(), budget);
      s.run();
      if (s.over_budget()) {
        fail(ErrorKind::size_limit_exceeded,
             "tropical_rank: exceeded the budget of " + std::to_string(options.max_checks) + " checks");
      }
      out.rank = s.best();
      Witness w = s.witness();
      out.rows = std::move(w.rows);
      out.cols = std::move(w.cols);
    };
    if (view.uses_integers()) {
      search(view.ints());
    } else {
      search(view.rats());
    }
    out.upper_bound = out.rank;
    out.checks = budget.used();
    return out;
  }

  const unsigned threads = options.threads ? options.threads : default_thread_count();
  std::mt19937_64 rng(options.seed);
  bool all_exhaustive = true;
  std::size_t open_size = 0;  // largest size sampled without a witness
  for (std::size_t size = top; size >= 1; --size) {
    const std::uint64_t total = count_square_submatrices(a.rows(), a.cols(), size);
    std::optional<Witness> w;
    if (total <= options.samples_per_size) {
      bool over = false;
      w = sweep_size(view, a.rows(), a.cols(), size, threads, budget, over);
      if (over) fail(ErrorKind::size_limit_exceeded, "tropical_rank: randomized budget exceeded");
    } else {
      for (std::uint64_t s = 0; s < options.samples_per_size && !w; ++s) {
        auto rows = random_subset(a.rows(), size, rng);
        auto cols = random_subset(a.cols(), size, rng);
        if (!budget.take()) fail(ErrorKind::size_limit_exceeded, "tropical_rank: randomized budget exceeded");
        if (view.nonsingular(rows, cols)) w = Witness{std::move(rows), std::move(cols)};
      }
      if (!w) {
        all_exhaustive = false;
        open_size = std::max(open_size, size);
      }
    }
    if (w) {
      out.rank = size;
      out.rows = std::move(w->rows);
      out.cols = std::move(w->cols);
      break;
    }
  }
  out.certified = all_exhaustive;
  out.upper_bound = std::max(out.rank, open_size);
  out.checks = budget.used();
  return out;
}

}  // namespace suptrop
