#include "regspec/graph/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "regspec/error.hpp"
#include "regspec/graph/graph6.hpp"
#include "regspec/kernels/kernels.hpp"

namespace regspec {

namespace {

// Ordered partition of the vertex set. Cells are contiguous runs of lab;
// size[s] holds the cell length at each cell start s.
struct Partition {
  std::vector<std::uint32_t> lab;
  std::vector<std::uint32_t> cell_of;  // vertex -> start of its cell
  std::vector<std::uint32_t> size;
  std::size_t cells = 0;

  explicit Partition(std::size_t n) : lab(n), cell_of(n, 0), size(n, 0) {
    std::iota(lab.begin(), lab.end(), 0u);
    if (n > 0) {
      size[0] = static_cast<std::uint32_t>(n);
      cells = 1;
    }
  }
  bool discrete() const { return cells == lab.size(); }
};

class Refiner {
 public:
  explicit Refiner(const Graph& g) : g_(g), mask_(g.words()), count_(g.order()), queued_(g.order(), 0) {}

  // Refines p to the coarsest equitable partition finer than p, starting from
  // the given splitter cells.
  void refine(Partition& p, std::vector<std::uint32_t> queue) {
    const std::size_t n = p.lab.size();
    std::fill(queued_.begin(), queued_.end(), 0);
    for (auto s : queue) queued_[s] = 1;
    std::size_t head = 0;
    while (head < queue.size() && !p.discrete()) {
      const std::uint32_t w = queue[head++];
      queued_[w] = 0;
      std::fill(mask_.begin(), mask_.end(), 0);
      for (std::uint32_t i = w; i < w + p.size[w]; ++i) {
        const std::uint32_t v = p.lab[i];
        mask_[v >> 6] |= std::uint64_t{1} << (v & 63);
      }
      for (std::size_t start = 0; start < n;) {
        const std::uint32_t len = p.size[start];
        if (len > 1) split(p, static_cast<std::uint32_t>(start), len, queue);
        start += len;
      }
    }
  }

 private:
  void split(Partition& p, std::uint32_t start, std::uint32_t len, std::vector<std::uint32_t>& queue) {
    bool uniform = true;
    for (std::uint32_t i = start; i < start + len; ++i) {
      const std::uint32_t v = p.lab[i];
      count_[v] = static_cast<std::uint32_t>(kernels::and_popcount(g_.row(v), mask_));
      if (count_[v] != count_[p.lab[start]]) uniform = false;
    }
    if (uniform) return;
    auto first = p.lab.begin() + start;
    std::stable_sort(first, first + len, [&](std::uint32_t a, std::uint32_t b) { return count_[a] < count_[b]; });

    const bool was_queued = queued_[start] != 0;
    std::vector<std::uint32_t> frags;
    std::uint32_t frag = start;
    for (std::uint32_t i = start + 1; i <= start + len; ++i) {
      if (i == start + len || count_[p.lab[i]] != count_[p.lab[i - 1]]) {
        p.size[frag] = i - frag;
        for (std::uint32_t j = frag; j < i; ++j) p.cell_of[p.lab[j]] = frag;
        frags.push_back(frag);
        frag = i;
      }
    }
    p.cells += frags.size() - 1;

    // Hopcroft: a fragment may stay out of the queue unless the parent was queued.
    std::uint32_t skip = UINT32_MAX;
    if (!was_queued) {
      skip = frags[0];
      for (auto f : frags) {
        if (p.size[f] > p.size[skip]) skip = f;
      }
    }
    for (auto f : frags) {
      if (f != skip && !queued_[f]) {
        queued_[f] = 1;
        queue.push_back(f);
      }
    }
  }

  const Graph& g_;
  std::vector<std::uint64_t> mask_;
  std::vector<std::uint32_t> count_;
  std::vector<std::uint8_t> queued_;
};

std::vector<std::uint64_t> certificate(const Graph& g, const std::vector<std::uint32_t>& lab) {
  const std::size_t n = g.order();
  const std::size_t words = g.words();
  std::vector<std::uint64_t> cert(n * words, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g.adjacent(lab[i], lab[j])) cert[i * words + (j >> 6)] |= std::uint64_t{1} << (63 - (j & 63));
    }
  }
  return cert;
}

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void unite(std::vector<std::size_t>& parent, std::size_t a, std::size_t b) {
  a = find(parent, a);
  b = find(parent, b);
  if (a == b) return;
  if (a < b) {
    parent[b] = a;
  } else {
    parent[a] = b;
  }
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), refiner_(g) {}

  CanonicalLabeling run(const std::vector<std::uint32_t>* colors = nullptr) {
    const std::size_t n = g_.order();
    Partition p(n);
    std::vector<std::uint32_t> queue{0};
    if (colors != nullptr && n > 0) {
      // one cell per colour, in increasing colour order
      std::stable_sort(p.lab.begin(), p.lab.end(), [&](std::uint32_t a, std::uint32_t b) { return (*colors)[a] < (*colors)[b]; });
      queue.clear();
      p.cells = 0;
      for (std::uint32_t i = 0, start = 0; i <= n; ++i) {
        if (i < n && (*colors)[p.lab[i]] == (*colors)[p.lab[start]]) continue;
        p.size[start] = i - start;
        for (std::uint32_t j = start; j < i; ++j) p.cell_of[p.lab[j]] = start;
        queue.push_back(start);
        ++p.cells;
        start = i;
      }
    }
    if (n > 0) refiner_.refine(p, queue);
    descend(p);
    CanonicalLabeling out;
    out.label.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) out.label[best_lab_[i]] = i;
    out.canonical = g_.relabeled(out.label);
    out.automorphisms = std::move(gens_);
    out.leaves = leaves_;
    return out;
  }

 private:
  // Returns the depth to resume at, or -1 to continue normally.
  long descend(Partition& p) {
    if (p.discrete()) return leaf(p);
    const long depth = static_cast<long>(path_.size());

    std::uint32_t target = 0;
    while (p.size[target] == 1) target += p.size[target];
    const std::vector<std::uint32_t> cell(p.lab.begin() + target, p.lab.begin() + target + p.size[target]);

    std::vector<std::uint32_t> tried;
    for (std::uint32_t v : cell) {
      if (!tried.empty() && equivalent_to_tried(v, tried)) continue;
      tried.push_back(v);

      Partition child = p;
      individualize(child, target, v);
      refiner_.refine(child, {target});
      path_.push_back(v);
      const long r = descend(child);
      path_.pop_back();
      if (r >= 0 && r < depth) return r;
    }
    return -1;
  }

  static void individualize(Partition& p, std::uint32_t start, std::uint32_t v) {
    const std::uint32_t len = p.size[start];
    auto first = p.lab.begin() + start;
    std::rotate(first, std::find(first, first + len, v), std::find(first, first + len, v) + 1);
    p.size[start] = 1;
    p.size[start + 1] = len - 1;
    for (std::uint32_t i = start + 1; i < start + len; ++i) p.cell_of[p.lab[i]] = start + 1;
    ++p.cells;
  }

  // v is in the orbit of an already tried vertex under the automorphisms
  // that fix the current path pointwise.
  bool equivalent_to_tried(std::uint32_t v, const std::vector<std::uint32_t>& tried) {
    const std::size_t n = g_.order();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    bool any = false;
    for (const auto& gamma : gens_) {
      bool fixes = true;
      for (std::uint32_t x : path_) {
        if (gamma[x] != x) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      any = true;
      for (std::size_t x = 0; x < n; ++x) unite(parent, x, gamma[x]);
    }
    if (!any) return false;
    const std::size_t rv = find(parent, v);
    for (std::uint32_t u : tried) {
      if (find(parent, u) == rv) return true;
    }
    return false;
  }

  static long common_prefix(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return static_cast<long>(i);
  }

  void record(const std::vector<std::uint32_t>& from, const std::vector<std::uint32_t>& to) {
    Permutation gamma(from.size());
    bool identity = true;
    for (std::size_t i = 0; i < from.size(); ++i) {
      gamma[from[i]] = to[i];
      if (from[i] != to[i]) identity = false;
    }
    if (!identity) gens_.push_back(std::move(gamma));
  }

  long leaf(const Partition& p) {
    ++leaves_;
    auto cert = certificate(g_, p.lab);
    if (first_lab_.empty()) {
      first_lab_ = best_lab_ = p.lab;
      first_path_ = best_path_ = path_;
      first_cert_ = best_cert_ = std::move(cert);
      return -1;
    }
    if (cert == first_cert_) {
      record(first_lab_, p.lab);
      return common_prefix(path_, first_path_);
    }
    if (cert == best_cert_) {
      record(best_lab_, p.lab);
      return common_prefix(path_, best_path_);
    }
    if (cert > best_cert_) {
      best_lab_ = p.lab;
      best_path_ = path_;
      best_cert_ = std::move(cert);
    }
    return -1;
  }

  const Graph& g_;
  Refiner refiner_;
  std::vector<std::uint32_t> path_;
  std::vector<std::uint32_t> first_lab_, best_lab_;
  std::vector<std::uint32_t> first_path_, best_path_;
  std::vector<std::uint64_t> first_cert_, best_cert_;
  std::vector<Permutation> gens_;
  std::size_t leaves_ = 0;
};

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  std::vector<std::size_t> d(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return Search(g).run(); }

CanonicalLabeling canonical_labeling(const Graph& g, const std::vector<std::uint32_t>& colors) {
  if (colors.size() != g.order()) throw Error(Errc::InvalidArgument, "canonical_labeling: one colour per vertex required");
  return Search(g).run(&colors);
}

std::string canonical_form(const Graph& g) { return graph6_encode(canonical_labeling(g).canonical); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (sorted_degrees(a) != sorted_degrees(b)) return false;
  return canonical_labeling(a).canonical == canonical_labeling(b).canonical;
}

std::vector<std::size_t> orbit_representatives(std::size_t n, const std::vector<Permutation>& gens) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& gamma : gens)
    for (std::size_t x = 0; x < n; ++x) unite(parent, x, gamma[x]);
  std::vector<std::size_t> rep(n);
  for (std::size_t x = 0; x < n; ++x) rep[x] = find(parent, x);
  return rep;
}

}  // namespace regspec
