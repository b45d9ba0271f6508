#include "braidslice/unfolding.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "braidslice/errors.hpp"
#include "braidslice/lp.hpp"

namespace braidslice {
namespace {

Rat squared_norm(std::span<const Rat> x) { return dot(x, x); }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

std::string edge_list(std::span<const std::pair<std::size_t, std::size_t>> edges) {
  std::string out;
  for (const auto& [a, b] : edges) {
    if (!out.empty()) out += ",";
    out += "{" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "}";
  }
  return out;
}

// A vector z with z^T S z < 0, read off a congruence diagonalization
// T^T S T = D that keeps track of T.
std::optional<RatVec> negative_direction(RatMat a) {
  const std::size_t n = a.rows();
  RatMat t = RatMat::identity(n);
  auto add_col = [&](std::size_t dst, std::size_t src, const Rat& c) {
    for (std::size_t r = 0; r < n; ++r) a(r, dst) += c * a(r, src);
    for (std::size_t r = 0; r < n; ++r) a(dst, r) += c * a(src, r);
    for (std::size_t r = 0; r < n; ++r) t(r, dst) += c * t(r, src);
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p).is_zero()) ++p;
    if (p == n) {
      // Zero diagonal: a nonzero off-diagonal pair gives a nonzero pivot.
      for (std::size_t i = k; i < n && p == n; ++i) {
        for (std::size_t j = i + 1; j < n && p == n; ++j) {
          if (!a(i, j).is_zero()) {
            add_col(i, j, Rat(1));
            p = i;
          }
        }
      }
      if (p == n) break;
    }
    if (p != k) {
      add_col(k, p, Rat(1));
      if (a(k, k).is_zero()) add_col(k, p, Rat(1));
    }
    if (a(k, k).sign() < 0) return t.column(k);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (!a(k, j).is_zero()) add_col(j, k, -a(k, j) / a(k, k));
    }
  }
  return std::nullopt;
}

}  // namespace

ObjectConfig ObjectConfig::from_points(std::vector<RatVec> points) {
  const std::size_t m = points.size();
  if (m < 3) throw DimensionMismatch("an object configuration needs at least 3 objects");
  const std::size_t n = points.front().size();
  for (const RatVec& p : points) {
    if (p.size() != n) throw DimensionMismatch("object points have different dimensions");
  }
  if (n + 1 >= m) {
    throw FullDimensionalConfig("objects in dimension " + std::to_string(n) + " >= m-1 = " + std::to_string(m - 1) +
                                ": every ranking is admissible");
  }
  if (n + 2 < m) {
    throw DimensionMismatch("objects must live in dimension m-2 = " + std::to_string(m - 2) + ", got " +
                            std::to_string(n));
  }
  RatVec centroid(n);
  for (const RatVec& p : points) {
    for (std::size_t k = 0; k < n; ++k) centroid[k] += p[k];
  }
  for (Rat& c : centroid) c /= Rat(static_cast<std::int64_t>(m));
  for (RatVec& p : points) {
    for (std::size_t k = 0; k < n; ++k) p[k] -= centroid[k];
  }
  ObjectConfig cfg;
  cfg.mu_ = std::move(points);
  return cfg;
}

ObjectConfig ObjectConfig::translated(std::span<const Rat> shift) const {
  if (shift.size() != n()) throw DimensionMismatch("translation has the wrong dimension");
  std::vector<RatVec> pts = mu_;
  for (RatVec& p : pts) {
    for (std::size_t k = 0; k < p.size(); ++k) p[k] += shift[k];
  }
  return from_points(std::move(pts));
}

ObjectConfig ObjectConfig::scaled(const Rat& factor) const {
  std::vector<RatVec> pts = mu_;
  for (RatVec& p : pts) {
    for (Rat& x : p) x *= factor;
  }
  return from_points(std::move(pts));
}

ObjectConfig ObjectConfig::permuted(std::span<const int> sigma) const {
  if (sigma.size() != mu_.size()) throw DimensionMismatch("permutation has the wrong size");
  std::vector<RatVec> pts(mu_.size());
  for (std::size_t i = 0; i < mu_.size(); ++i) pts[static_cast<std::size_t>(sigma[i])] = mu_[i];
  return from_points(std::move(pts));
}

ObjectConfig parse_object_config(std::string_view text) {
  std::vector<RatVec> points;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    RatVec p;
    while (true) {
      const auto comma = line.find(',');
      const std::string_view field = trim(line.substr(0, comma));
      try {
        p.push_back(Rat::parse(field));
      } catch (const ParseError&) {
        throw ParseError("line " + std::to_string(line_no) + ": cannot read '" + std::string(field) + "'");
      }
      if (comma == std::string_view::npos) break;
      line = line.substr(comma + 1);
    }
    points.push_back(std::move(p));
  }
  return ObjectConfig::from_points(std::move(points));
}

ObjectConfig load_object_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DimensionMismatch("cannot open object file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_object_config(buf.str());
}

WU build_Wu(const ObjectConfig& cfg) {
  const auto m = static_cast<std::size_t>(cfg.m());
  RatMat w = RatMat::from_rows(cfg.mu());
  RatVec norms(m);
  Rat mean;
  for (std::size_t j = 0; j < m; ++j) {
    norms[j] = squared_norm(cfg[j]);
    mean += norms[j];
  }
  mean /= Rat(static_cast<std::int64_t>(m));
  RatVec u(m);
  for (std::size_t j = 0; j < m; ++j) u[j] = -(norms[j] - mean) / Rat(2);
  return {std::move(w), std::move(u)};
}

RatVec normalized_u(const ObjectConfig& cfg) {
  Rat total;
  for (const RatVec& p : cfg.mu()) total += squared_norm(p);
  if (total.is_zero()) throw SingularNormalEquations("all objects coincide");
  const Rat c2 = Rat(static_cast<std::int64_t>(cfg.m())) / total;
  RatVec u = build_Wu(cfg).u;
  for (Rat& x : u) x *= c2;
  return u;
}

ForestCheck check_forest_independence(std::span<const RatVec> points, std::size_t edges) {
  const std::size_t m = points.size();
  std::vector<std::pair<std::size_t, std::size_t>> all;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) all.emplace_back(a, b);
  }
  if (edges == 0) return {};
  if (edges > all.size() || edges >= m) return {};

  // Walk all edge subsets of the given size in lexicographic order.
  std::vector<std::size_t> pick(edges);
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> chosen(edges);
  while (true) {
    DisjointSets sets(m);
    bool forest = true;
    for (std::size_t k = 0; k < edges && forest; ++k) {
      chosen[k] = all[pick[k]];
      forest = sets.unite(chosen[k].first, chosen[k].second);
    }
    if (forest) {
      RatMat diff(0, points.front().size());
      RatVec row(points.front().size());
      for (const auto& [a, b] : chosen) {
        for (std::size_t i = 0; i < row.size(); ++i) row[i] = points[a][i] - points[b][i];
        diff.append_row(row);
      }
      if (rank(diff) < edges) return {false, edge_list(chosen)};
    }
    std::size_t k = edges;
    while (k > 0 && pick[k - 1] == all.size() - edges + (k - 1)) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < edges; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {};
}

GenericityReport check_genericity(const ObjectConfig& cfg) {
  const auto m = static_cast<std::size_t>(cfg.m());
  GenericityReport report;
  const ForestCheck a1 = check_forest_independence(cfg.mu(), m - 2);
  report.a1_holds = a1.holds;
  if (!a1.holds) report.first_violation = "(A1) fails on edges " + a1.violation;

  std::vector<RatVec> lifted = cfg.mu();
  for (RatVec& p : lifted) p.push_back(squared_norm(p));
  const ForestCheck a2 = check_forest_independence(lifted, m - 1);
  report.a2_holds = a2.holds;
  if (!a2.holds && !report.first_violation) report.first_violation = "(A2) fails on edges " + a2.violation;
  return report;
}

DirectionResult direction(const ObjectConfig& cfg) {
  WU wu = build_Wu(cfg);
  const auto m = static_cast<std::size_t>(cfg.m());
  RatMat basis(m, cfg.n() + 1);
  for (std::size_t j = 0; j < m; ++j) {
    basis(j, 0) = 1;
    for (std::size_t k = 0; k < cfg.n(); ++k) basis(j, k + 1) = wu.W(j, k);
  }
  auto v = project_out(wu.u, basis);
  if (!v) throw SingularNormalEquations("W^T W is singular: the object differences do not span R^" + std::to_string(cfg.n()));
  if (std::all_of(v->begin(), v->end(), [](const Rat& x) { return x.is_zero(); })) {
    throw ZeroDirection("u lies in span{1, col W}: the lifted objects are degenerate");
  }
  return {std::move(*v), std::move(wu.u), std::move(wu.W)};
}

RankingPattern ranking_pattern_uf(const ObjectConfig& cfg) { return ranking_pattern(direction(cfg).v_unnormalized); }

std::optional<RatVec> witness_ideal_point(const ObjectConfig& cfg, const Ranking& r) {
  if (r.size() != cfg.m()) throw DimensionMismatch("ranking size differs from the number of objects");
  const std::size_t n = cfg.n();
  RatMat a(0, n);
  RatVec b;
  RatVec row(n);
  // ||y - mu_a||^2 < ||y - mu_b||^2  <=>  2 (mu_a - mu_b) . y > ||mu_a||^2 - ||mu_b||^2
  for (int k = 0; k + 1 < r.size(); ++k) {
    const RatVec& pa = cfg[static_cast<std::size_t>(r[k])];
    const RatVec& pb = cfg[static_cast<std::size_t>(r[k + 1])];
    for (std::size_t i = 0; i < n; ++i) row[i] = Rat(2) * (pa[i] - pb[i]);
    a.append_row(row);
    b.push_back(squared_norm(pa) - squared_norm(pb));
  }
  auto y = feasible_affine_strict(a, b, RatMat(0, n), {});
  if (!y) return std::nullopt;
  if (ranking_at(cfg, *y) != r) throw Error(ErrorKind::kInternal, "ideal point does not reproduce the ranking");
  return y;
}

std::optional<Ranking> ranking_at(const ObjectConfig& cfg, std::span<const Rat> y) {
  if (y.size() != cfg.n()) throw DimensionMismatch("ideal point has the wrong dimension");
  std::vector<std::pair<Rat, int>> dist;
  for (int j = 0; j < cfg.m(); ++j) {
    RatVec d(y.begin(), y.end());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= cfg[static_cast<std::size_t>(j)][i];
    dist.emplace_back(squared_norm(d), j);
  }
  std::sort(dist.begin(), dist.end());
  std::vector<int> order;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    if (k > 0 && dist[k].first == dist[k - 1].first) return std::nullopt;
    order.push_back(dist[k].second);
  }
  return Ranking(order);
}

std::optional<ObjectConfig> config_from_direction(std::span<const Rat> v) {
  require_generic_direction(v);
  const std::size_t m = v.size();
  RatMat constraints(2, m);
  for (std::size_t j = 0; j < m; ++j) {
    constraints(0, j) = 1;
    constraints(1, j) = v[j];
  }
  const RatMat w = nullspace(constraints);
  const std::size_t n = w.cols();
  const RatMat s = w.transpose() * RatMat::diagonal(v) * w;

  // u.v = -tr(B^T S B)/2 for the basis change B, so look for a direction z
  // with z^T S z < 0 and stretch it until the trace is negative.
  const std::optional<RatVec> found = negative_direction(s);
  if (!found) return std::nullopt;

  std::size_t pivot = 0;
  while ((*found)[pivot].is_zero()) ++pivot;
  const Rat zsz = dot(*found, s * *found);
  Rat rest;
  for (std::size_t k = 0; k < n; ++k) {
    if (k != pivot) rest += s(k, k);
  }
  Rat scale(1);
  while ((scale * scale * zsz + rest).sign() >= 0) scale *= Rat(2);

  RatMat b(n, n);
  for (std::size_t k = 0, col = 1; k < n; ++k) {
    b(k, 0) = scale * (*found)[k];
    if (k != pivot) b(k, col++) = 1;
  }
  const RatMat mu = w * b;
  std::vector<RatVec> points;
  for (std::size_t j = 0; j < m; ++j) points.emplace_back(mu.row(j).begin(), mu.row(j).end());
  return ObjectConfig::from_points(std::move(points));
}

}  // namespace braidslice
