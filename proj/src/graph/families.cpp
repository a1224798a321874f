#include "regspec/graph/families.hpp"

#include <array>
#include <numeric>
#include <sstream>

#include "regspec/error.hpp"

namespace regspec {

namespace {

struct TagInfo {
  FamilyTag tag;
  std::string_view cli;
  std::string_view display;
};

constexpr std::array<TagInfo, 11> kTags{{
    {FamilyTag::CompleteK, "complete", "CompleteK"},
    {FamilyTag::CycleC, "cycle", "CycleC"},
    {FamilyTag::CompleteBipartite, "complete-bipartite", "CompleteBipartite"},
    {FamilyTag::CompleteMultipartite, "complete-multipartite", "CompleteMultipartite"},
    {FamilyTag::Crown, "crown", "Crown"},
    {FamilyTag::KssExpand, "kss-expand", "KssExpand"},
    {FamilyTag::CrownExpand, "crown-expand", "CrownExpand"},
    {FamilyTag::ComplementCrownExpand, "complement-crown-expand", "ComplementCrownExpand"},
    {FamilyTag::AGraph, "a-graph", "AGraph"},
    {FamilyTag::BGraph, "b-graph", "BGraph"},
    {FamilyTag::IncidenceGraph, "incidence", "IncidenceGraph"},
}};

const TagInfo& info(FamilyTag tag) {
  for (const auto& t : kTags) {
    if (t.tag == tag) return t;
  }
  return kTags[0];
}

[[noreturn]] void out_of_range(const FamilyDescriptor& d, const std::string& why) {
  throw Error(Errc::ParameterOutOfRange, d.to_string() + ": " + why);
}

void require_count(const FamilyDescriptor& d, std::size_t count) {
  if (d.params.size() != count) {
    out_of_range(d, "expected " + std::to_string(count) + " parameters, got " + std::to_string(d.params.size()));
  }
}

void require_min(const FamilyDescriptor& d, std::size_t i, long lo, const char* name) {
  if (d.params[i] < lo) out_of_range(d, std::string(name) + " must be >= " + std::to_string(lo));
}

// Complete joins between consecutive vertex blocks [a, a+na) x [b, b+nb).
void join(Graph& g, std::size_t a, std::size_t na, std::size_t b, std::size_t nb) {
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) g.add_edge(a + i, b + j);
}

Graph crown(std::size_t s) {
  Graph g(2 * s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (i != j) g.add_edge(i, s + j);
  return g;
}

Graph complete_multipartite(const std::vector<long>& parts) {
  const std::size_t n = static_cast<std::size_t>(std::accumulate(parts.begin(), parts.end(), 0L));
  Graph g(n);
  std::size_t a = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::size_t b = a + static_cast<std::size_t>(parts[i]);
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      join(g, a, static_cast<std::size_t>(parts[i]), b, static_cast<std::size_t>(parts[j]));
      b += static_cast<std::size_t>(parts[j]);
    }
    a += static_cast<std::size_t>(parts[i]);
  }
  return g;
}

}  // namespace

std::string_view family_name(FamilyTag tag) noexcept { return info(tag).cli; }

std::optional<FamilyTag> family_from_name(std::string_view name) noexcept {
  for (const auto& t : kTags) {
    if (t.cli == name || t.display == name) return t.tag;
  }
  return std::nullopt;
}

std::string FamilyDescriptor::to_string() const {
  std::ostringstream os;
  os << info(tag).display << '(';
  for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
  os << ')';
  return os.str();
}

void validate(const FamilyDescriptor& d) {
  switch (d.tag) {
    case FamilyTag::CompleteK:
      require_count(d, 1);
      require_min(d, 0, 1, "n");
      break;
    case FamilyTag::CycleC:
      require_count(d, 1);
      require_min(d, 0, 3, "n");
      break;
    case FamilyTag::CompleteBipartite:
      require_count(d, 2);
      require_min(d, 0, 1, "m");
      require_min(d, 1, 1, "n");
      break;
    case FamilyTag::CompleteMultipartite:
      if (d.params.empty()) out_of_range(d, "needs at least one part");
      for (std::size_t i = 0; i < d.params.size(); ++i) require_min(d, i, 1, "part size");
      break;
    case FamilyTag::Crown:
      require_count(d, 1);
      require_min(d, 0, 2, "s");
      break;
    case FamilyTag::KssExpand:
      require_count(d, 2);
      require_min(d, 0, 1, "s");
      require_min(d, 1, 1, "t");
      break;
    case FamilyTag::CrownExpand:
    case FamilyTag::ComplementCrownExpand:
      require_count(d, 2);
      require_min(d, 0, 3, "s");
      require_min(d, 1, 1, "t");
      break;
    case FamilyTag::AGraph:
      require_count(d, 3);
      for (std::size_t i = 0; i < 3; ++i) require_min(d, i, 1, "block size");
      break;
    case FamilyTag::BGraph:
      require_count(d, 4);
      for (std::size_t i = 0; i < 4; ++i) require_min(d, i, 1, "block size");
      break;
    case FamilyTag::IncidenceGraph: {
      if (d.incidence.empty()) out_of_range(d, "incidence matrix required");
      const DesignParams p = design_params(d.incidence);
      if (!d.params.empty()) {
        require_count(d, 3);
        if (d.params[0] != p.v || d.params[1] != p.k || d.params[2] != p.lambda) {
          out_of_range(d, "parameters do not match the incidence matrix");
        }
      }
      break;
    }
  }
}

Graph construct(const FamilyDescriptor& d) {
  validate(d);
  const auto& p = d.params;
  auto u = [&](std::size_t i) { return static_cast<std::size_t>(p[i]); };
  switch (d.tag) {
    case FamilyTag::CompleteK:
      return complete_multipartite(std::vector<long>(u(0), 1));
    case FamilyTag::CycleC: {
      Graph g(u(0));
      for (std::size_t i = 0; i < u(0); ++i) g.add_edge(i, (i + 1) % u(0));
      return g;
    }
    case FamilyTag::CompleteBipartite:
    case FamilyTag::CompleteMultipartite:
      return complete_multipartite(p);
    case FamilyTag::Crown:
      return crown(u(0));
    case FamilyTag::KssExpand:
      return clique_expand(complete_multipartite({p[0], p[0]}), u(1));
    case FamilyTag::CrownExpand:
      return clique_expand(crown(u(0)), u(1));
    case FamilyTag::ComplementCrownExpand:
      return complement(clique_expand(crown(u(0)), u(1)));
    case FamilyTag::AGraph: {
      const std::size_t l = u(0), m = u(1), n = u(2);
      Graph g(l + m + n + 1);
      join(g, 0, l, l, m);
      join(g, l, m, l + m, n);
      join(g, l + m, n, l + m + n, 1);
      return g;
    }
    case FamilyTag::BGraph: {
      const std::size_t l = u(0), m = u(1), n = u(2), q = u(3);
      const std::size_t L = 0, M = l, N = l + m, P = l + m + n, y = P + q, z = y + 1;
      Graph g(z + 1);
      join(g, L, l, N, n);
      join(g, L, l, M, m);
      join(g, N, n, P, q);
      join(g, M, m, P, q);
      join(g, N, n, y, 1);
      join(g, P, q, z, 1);
      return g;
    }
    case FamilyTag::IncidenceGraph:
      return incidence_graph(d.incidence);
  }
  throw Error(Errc::InvalidArgument, "unknown family");
}

DesignParams design_params(const IncidenceMatrix& inc) {
  auto bad = [](const std::string& why) -> DesignParams { throw Error(Errc::ParameterOutOfRange, "not a BIBD: " + why); };
  const std::size_t v = inc.size();
  if (v < 2) return bad("needs at least two points");
  const std::size_t b = inc[0].size();
  if (b == 0) return bad("no blocks");
  for (const auto& row : inc) {
    if (row.size() != b) return bad("ragged incidence matrix");
    for (auto x : row) {
      if (x > 1) return bad("entries must be 0 or 1");
    }
  }
  DesignParams p;
  p.v = static_cast<long>(v);
  p.b = static_cast<long>(b);
  for (std::size_t i = 0; i < v; ++i) {
    const long r = std::accumulate(inc[i].begin(), inc[i].end(), 0L);
    if (i == 0) p.r = r;
    if (r != p.r) return bad("replication number not constant");
  }
  for (std::size_t j = 0; j < b; ++j) {
    long k = 0;
    for (std::size_t i = 0; i < v; ++i) k += inc[i][j];
    if (j == 0) p.k = k;
    if (k != p.k) return bad("block size not constant");
  }
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t i2 = i + 1; i2 < v; ++i2) {
      long meet = 0;
      for (std::size_t j = 0; j < b; ++j) meet += inc[i][j] & inc[i2][j];
      if (i == 0 && i2 == 1) p.lambda = meet;
      if (meet != p.lambda) return bad("pair counts not constant");
    }
  }
  if (p.k < 1 || p.r < 1 || p.lambda < 1) return bad("parameters must be positive");
  if (p.v * p.r != p.b * p.k || p.lambda * (p.v - 1) != p.r * (p.k - 1)) return bad("counting identities fail");
  return p;
}

IncidenceMatrix cyclic_design(long v, const std::vector<long>& base) {
  if (v < 2) throw Error(Errc::ParameterOutOfRange, "cyclic_design: v must be >= 2");
  IncidenceMatrix inc(static_cast<std::size_t>(v), std::vector<std::uint8_t>(static_cast<std::size_t>(v), 0));
  for (long i = 0; i < v; ++i) {
    for (long d : base) {
      const long point = ((d + i) % v + v) % v;
      if (inc[static_cast<std::size_t>(point)][static_cast<std::size_t>(i)]) {
        throw Error(Errc::ParameterOutOfRange, "cyclic_design: repeated element in base block");
      }
      inc[static_cast<std::size_t>(point)][static_cast<std::size_t>(i)] = 1;
    }
  }
  return inc;
}

Graph incidence_graph(const IncidenceMatrix& inc) {
  const std::size_t v = inc.size();
  const std::size_t b = v == 0 ? 0 : inc[0].size();
  Graph g(v + b);
  for (std::size_t i = 0; i < v; ++i) {
    if (inc[i].size() != b) throw Error(Errc::InvalidArgument, "ragged incidence matrix");
    for (std::size_t j = 0; j < b; ++j)
      if (inc[i][j]) g.add_edge(i, v + j);
  }
  return g;
}

}  // namespace regspec
