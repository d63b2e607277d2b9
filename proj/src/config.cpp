#include "thetaq/config.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <Eigen/SVD>

#include "thetaq/error.hpp"
#include "thetaq/numeric.hpp"

namespace thetaq {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// least-squares common point of several lines
ProjPoint common_point(const std::vector<SupportLine>& lines, const std::vector<std::size_t>& idx) {
  Eigen::MatrixXcd a(idx.size(), 3);
  for (std::size_t r = 0; r < idx.size(); ++r) a.row(r) = lines[idx[r]].line.coords().transpose();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
  return ProjPoint(svd.matrixV().col(2));
}

std::map<int, int> histogram(const std::vector<SupportLine>& lines) {
  std::map<int, int> h;
  for (auto& l : lines) ++h[l.multiplicity];
  return h;
}

std::vector<std::size_t> with_multiplicity(const std::vector<SupportLine>& lines, int m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (lines[i].multiplicity == m) out.push_back(i);
  return out;
}

bool contains_all(const ConcurrencePoint& p, const std::vector<std::size_t>& idx) {
  return std::all_of(idx.begin(), idx.end(),
                     [&](std::size_t i) { return std::find(p.lines.begin(), p.lines.end(), i) != p.lines.end(); });
}

int count_with(const IncidenceReport& rep, const ConcurrencePoint& p, int m) {
  return static_cast<int>(
      std::count_if(p.lines.begin(), p.lines.end(), [&](std::size_t i) { return rep.lines[i].multiplicity == m; }));
}

std::optional<Recognition> match_uninodal(const IncidenceReport& rep) {
  if (histogram(rep.lines) != std::map<int, int>{{1, 16}, {2, 6}}) return std::nullopt;
  auto twos = with_multiplicity(rep.lines, 2);
  for (auto& p : rep.points)
    if (contains_all(p, twos)) return Recognition{CurveClass::uninodal, {p.point}};
  return std::nullopt;
}

std::optional<Recognition> match_binodal(const IncidenceReport& rep) {
  if (histogram(rep.lines) != std::map<int, int>{{1, 8}, {2, 8}, {4, 1}}) return std::nullopt;
  auto four = with_multiplicity(rep.lines, 4);
  Recognition r{CurveClass::binodal, {}};
  for (auto& p : rep.points)
    if (contains_all(p, four) && count_with(rep, p, 2) == 4) r.nodes.push_back(p.point);
  if (r.nodes.size() != 2) return std::nullopt;
  return r;
}

std::optional<Recognition> match_trinodal(const IncidenceReport& rep, double tol) {
  if (histogram(rep.lines) != std::map<int, int>{{1, 4}, {2, 6}, {4, 3}}) return std::nullopt;
  auto four = with_multiplicity(rep.lines, 4);
  Recognition r{CurveClass::trinodal, {}};
  for (int i = 0; i < 3; ++i)
    r.nodes.push_back(meet(rep.lines[four[i]].line, rep.lines[four[(i + 1) % 3]].line));
  for (int i = 0; i < 3; ++i)
    if (distance(r.nodes[i], r.nodes[(i + 1) % 3]) < tol) return std::nullopt;  // concurrent
  // each double line passes through exactly one vertex
  for (auto i : with_multiplicity(rep.lines, 2)) {
    int on = 0;
    for (auto& n : r.nodes) on += incidence_residual(n, rep.lines[i].line) < tol;
    if (on != 1) return std::nullopt;
  }
  std::sort(r.nodes.begin(), r.nodes.end());
  return r;
}

std::optional<Recognition> match_split(const IncidenceReport& rep) {
  if (histogram(rep.lines) != std::map<int, int>{{1, 4}, {4, 6}}) return std::nullopt;
  Recognition r{CurveClass::split, {}};
  for (auto& p : rep.points)
    if (count_with(rep, p, 4) == 3) r.nodes.push_back(p.point);
  if (r.nodes.size() != 4) return std::nullopt;
  std::sort(r.nodes.begin(), r.nodes.end());
  return r;
}

}  // namespace

int IncidenceReport::max_line_multiplicity() const {
  int m = 0;
  for (auto& l : lines) m = std::max(m, l.multiplicity);
  return m;
}

int IncidenceReport::max_point_multiplicity() const {
  int m = 0;
  for (auto& p : points) m = std::max(m, p.multiplicity);
  return m;
}

IncidenceReport incidence(const ThetaConfig& cfg, double tol) {
  IncidenceReport rep;
  const std::size_t n = cfg.lines.size();
  UnionFind same(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (distance(cfg.lines[i].line, cfg.lines[j].line) < tol) same.unite(i, j);
  std::vector<int> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = same.find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(rep.lines.size());
      rep.lines.push_back({cfg.lines[r].line, 0});
    }
    rep.lines[slot[r]].multiplicity += cfg.lines[i].multiplicity;
  }

  const std::size_t m = rep.lines.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<ProjPoint> meets;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      pairs.emplace_back(i, j);
      meets.push_back(meet(rep.lines[i].line, rep.lines[j].line));
    }
  UnionFind cl(pairs.size());
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = a + 1; b < pairs.size(); ++b)
      if (cl.find(a) != cl.find(b) && distance(meets[a], meets[b]) < tol) cl.unite(a, b);

  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    auto& v = members[cl.find(a)];
    v.push_back(pairs[a].first);
    v.push_back(pairs[a].second);
  }
  for (auto& [root, idx] : members) {
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    int mult = 0;
    for (auto i : idx) mult += rep.lines[i].multiplicity;
    ProjPoint p = idx.size() == 2 ? meets[root] : common_point(rep.lines, idx);
    rep.points.push_back({p, mult, idx});
  }
  std::sort(rep.points.begin(), rep.points.end(), [](auto& a, auto& b) {
    if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
    return a.point < b.point;
  });
  return rep;
}

std::string_view to_string(GitVerdictKind v) { return v == GitVerdictKind::stable ? "stable" : "unstable"; }

GitVerdict git_classify_config(const ThetaConfig& cfg, double tol) {
  IncidenceReport rep = incidence(cfg, tol);
  GitVerdict v;
  const SupportLine* worst_line = nullptr;
  for (auto& l : rep.lines)
    if (!worst_line || l.multiplicity > worst_line->multiplicity) worst_line = &l;
  if (worst_line && worst_line->multiplicity >= 10) {
    v.verdict = GitVerdictKind::unstable;
    v.witness = GitWitness{true, worst_line->multiplicity, worst_line->line, std::nullopt};
    return v;
  }
  if (!rep.points.empty() && rep.points.front().multiplicity >= 19) {
    v.verdict = GitVerdictKind::unstable;
    v.witness = GitWitness{false, rep.points.front().multiplicity, std::nullopt, rep.points.front().point};
  }
  return v;
}

MatchResult match_configs(const ThetaConfig& a, const ThetaConfig& b, double tol) {
  MatchResult res;
  const std::size_t n = a.lines.size();
  if (n != b.lines.size()) {
    res.reason = "different number of entries";
    return res;
  }
  if (n == 0) {
    res.success = true;
    return res;
  }
  const double inf = std::numeric_limits<double>::infinity();
  Eigen::MatrixXd cost(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cost(i, j) = a.lines[i].multiplicity == b.lines[j].multiplicity ? distance(a.lines[i].line, b.lines[j].line)
                                                                      : inf;
  res.mapping = min_cost_assignment(cost);
  if (res.mapping.empty()) {
    res.reason = "multiplicities differ";
    return res;
  }
  for (std::size_t i = 0; i < n; ++i) res.max_distance = std::max(res.max_distance, cost(i, res.mapping[i]));
  res.success = res.max_distance < tol;
  if (!res.success) res.reason = "matched distance above tolerance";
  return res;
}

std::string_view to_string(CurveClass c) {
  switch (c) {
    case CurveClass::smooth: return "smooth";
    case CurveClass::uninodal: return "uninodal";
    case CurveClass::binodal: return "binodal";
    case CurveClass::trinodal: return "trinodal";
    case CurveClass::split: return "split";
    case CurveClass::other: return "other";
  }
  return "?";
}

std::optional<CurveClass> curve_class_from_string(std::string_view s) {
  for (auto c : {CurveClass::smooth, CurveClass::uninodal, CurveClass::binodal, CurveClass::trinodal,
                 CurveClass::split, CurveClass::other})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

Recognition recognize_class(const ThetaConfig& cfg, double tol) {
  IncidenceReport rep = incidence(cfg, tol);
  std::vector<Recognition> found;
  auto add = [&](std::optional<Recognition> r) {
    if (r) found.push_back(std::move(*r));
  };
  if (rep.lines.size() == 28 && rep.max_line_multiplicity() == 1) found.push_back({CurveClass::smooth, {}});
  add(match_uninodal(rep));
  add(match_binodal(rep));
  add(match_trinodal(rep, tol));
  add(match_split(rep));
  if (found.size() > 1) throw Error(ErrorCode::Ambiguous, "configuration fits several curve classes");
  if (found.empty()) return {};
  return found.front();
}

}  // namespace thetaq
