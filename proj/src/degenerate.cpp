#include "thetaq/degenerate.hpp"

#include <algorithm>
#include <cmath>

#include "thetaq/error.hpp"
#include "thetaq/numeric.hpp"
#include "thetaq/tangency.hpp"

namespace thetaq {

namespace {

// b rescaled to the phase of a
Vec3 aligned(const Vec3& a, const Vec3& b) {
  Complex ip = b.dot(a);  // conj(b) . a
  double n = std::abs(ip);
  return n == 0.0 ? b : Vec3(b * (ip / n));
}

struct Point {
  double t;
  Vec3 l;
};

Vec3 predict(const Point& a, const Point& b, double t) {
  Vec3 la = aligned(b.l, a.l);
  return b.l + (b.l - la) * ((t - b.t) / (b.t - a.t));
}

TernaryForm member(const TernaryForm& f0, const TernaryForm& g, double t) { return (f0 + g * t).normalized(); }

Track follow_track(const TernaryForm& f0, const TernaryForm& g, const std::vector<double>& schedule, const Vec3& start,
                   const TrackOptions& opt) {
  Track tr;
  Point prev{schedule[0], start};
  {
    auto fit = refine_bitangent(member(f0, g, schedule[0]), start);
    tr.samples.push_back({schedule[0], ProjLine(fit.line), fit.residual});
    prev.l = fit.line;
  }
  // a second point close by seeds the secant
  double t1 = schedule[0] * (1.0 - 1e-4);
  auto seed_fit = refine_bitangent(member(f0, g, t1), prev.l);
  if (!seed_fit.converged) {
    tr.lost = true;
    return tr;
  }
  Point older = prev;
  prev = {t1, seed_fit.line};

  double h = schedule[0] - schedule[1];
  int failures = 0;
  for (std::size_t k = 1; k < schedule.size(); ++k) {
    const double target = schedule[k];
    while (prev.t > target) {
      double t = std::max(target, prev.t - h);
      Vec3 guess = predict(older, prev, t);
      double motion = projective_distance(guess, prev.l);
      auto fit = refine_bitangent(member(f0, g, t), guess);
      if (fit.converged && projective_distance(fit.line, guess) <= 0.5 * motion + 1e-10) {
        older = prev;
        prev = {t, fit.line};
        if (t == target) tr.samples.push_back({t, ProjLine(fit.line), fit.residual});
        failures = 0;
        h *= 2;
      } else {
        if (++failures > opt.max_halvings) {
          tr.lost = true;
          return tr;
        }
        h = (prev.t - t) / 2;
      }
    }
  }
  return tr;
}

bool crossing(const std::vector<Track>& tracks, double tol) {
  for (std::size_t i = 0; i < tracks.size(); ++i)
    for (std::size_t j = i + 1; j < tracks.size(); ++j) {
      std::size_t n = std::min(tracks[i].samples.size(), tracks[j].samples.size());
      for (std::size_t k = 1; k < n; ++k)
        if (distance(tracks[i].samples[k].line, tracks[j].samples[k].line) < tol) return true;
    }
  return false;
}

}  // namespace

FamilyPath track_family(const TernaryForm& f0, const TernaryForm& g, double t_start, double t_end, int steps,
                        const TrackOptions& opt) {
  if (f0.degree() != 4 || g.degree() != 4) throw Error(ErrorCode::InvalidFamily, "family members must be quartics");
  if (g.norm() == 0.0) throw Error(ErrorCode::InvalidFamily, "direction G is zero");
  if (!(t_start > t_end && t_end > 0.0) || steps < 1)
    throw Error(ErrorCode::InvalidFamily, "need t_start > t_end > 0 and at least one step");
  if (quartic_git_class(f0) == QuarticGitClass::outside_V) throw Error(ErrorCode::InvalidFamily, "F0 is not in V");

  ThetaOptions topt;
  topt.seed = opt.seed;
  topt.jobs = opt.jobs;
  auto start = bitangents_smooth(member(f0, g, t_start), topt);
  for (double t : {std::sqrt(t_start * t_end), t_end})
    if (!singular_points(member(f0, g, t), 1e-12, opt.seed).empty())
      throw Error(ErrorCode::InvalidFamily, "family member at t = " + std::to_string(t) + " is singular");

  FamilyPath path{f0, g, {}, {}, 0};
  for (int attempt = 0; attempt < 3; ++attempt) {
    int n = steps << attempt;
    path.schedule.clear();
    double r = std::pow(t_end / t_start, 1.0 / n);
    for (int k = 0; k <= n; ++k) path.schedule.push_back(k == n ? t_end : t_start * std::pow(r, k));
    path.tracks.assign(start.size(), Track{});
    parallel_for(start.size(), opt.jobs, [&](std::size_t i) {
      path.tracks[i] = follow_track(f0, g, path.schedule, start[i].line.coords(), opt);
    });
    if (!crossing(path.tracks, opt.tol)) return path;
    ++path.refinements;
  }
  throw Error(ErrorCode::PathCrossing, "two tracks merge before t_end after refining the schedule");
}

int CollisionReport::total() const {
  int n = 0;
  for (auto& l : lines) n += static_cast<int>(l.tracks.size());
  return n;
}

ThetaConfig CollisionReport::limit_config() const {
  ThetaConfig cfg;
  for (auto& l : lines) {
    if (l.tracks.empty()) continue;
    ThetaLine t = l.target;
    t.line = l.estimate;
    t.multiplicity = static_cast<int>(l.tracks.size());
    cfg.lines.push_back(t);
  }
  return cfg;
}

namespace {

int chart_index(const Vec3& v) {
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(v(i)) > std::abs(v(k))) k = i;
  return k;
}

// mean of the tracks at sample k in the affine chart l_c = 1
Vec3 centroid(const FamilyPath& path, const std::vector<std::size_t>& ids, std::size_t k, int c) {
  Vec3 s = Vec3::Zero();
  for (auto i : ids) {
    Vec3 v = path.tracks[i].samples[k].line.coords();
    s += v / v(c);
  }
  return s / static_cast<double>(ids.size());
}

double fit_exponent(const Track& tr, const ProjLine& limit, double t_end) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (auto& s : tr.samples) {
    if (s.t > 100.0 * t_end) continue;
    double d = distance(s.line, limit);
    if (d < 1e-14) continue;
    double x = std::log(s.t), y = std::log(d);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
    ++n;
  }
  if (n < 2) return 0.0;
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

CollisionReport limit_multiplicities(const FamilyPath& path, const ThetaConfig& theta0, double radius) {
  CollisionReport rep;
  for (auto& l : theta0.lines) rep.lines.push_back({l, {}, 0.0, l.line});
  const std::size_t last = path.schedule.size() - 1;
  for (std::size_t i = 0; i < path.tracks.size(); ++i) {
    const Track& tr = path.tracks[i];
    if (tr.lost || tr.samples.size() != path.schedule.size())
      throw Error(ErrorCode::UnassignedTrack, "track " + std::to_string(i) + " was lost");
    const ProjLine& end = tr.samples[last].line;
    std::size_t best = 0;
    double bd = 2.0;
    for (std::size_t j = 0; j < theta0.lines.size(); ++j) {
      double d = distance(end, theta0.lines[j].line);
      if (d < bd) bd = d, best = j;
    }
    if (bd > radius)
      throw Error(ErrorCode::UnassignedTrack, "track " + std::to_string(i) + " ends far from every limit line");
    rep.lines[best].tracks.push_back(i);
  }
  const double t_end = path.schedule[last];
  for (auto& l : rep.lines) {
    if (l.tracks.empty()) continue;
    double e = 0.0;
    for (auto i : l.tracks) e += fit_exponent(path.tracks[i], l.target.line, t_end);
    l.exponent = e / static_cast<double>(l.tracks.size());
    // symmetric functions of the colliding branches are analytic in t
    int c = chart_index(l.target.line.coords());
    double t1 = path.schedule[last - 1], t2 = path.schedule[last];
    Vec3 c1 = centroid(path, l.tracks, last - 1, c), c2 = centroid(path, l.tracks, last, c);
    l.estimate = ProjLine((c2 * t1 - c1 * t2) / (t1 - t2));
  }
  return rep;
}

IndependenceReport limit_independence_check(const TernaryForm& f0, std::span<const TernaryForm> directions,
                                            double t_start, double t_end, int steps, double tol,
                                            const TrackOptions& opt) {
  if (directions.empty()) throw Error(ErrorCode::InvalidFamily, "no directions");
  ThetaOptions topt;
  topt.seed = opt.seed;
  topt.jobs = opt.jobs;
  ThetaConfig theta0 = theta_curve(f0, topt);
  IndependenceReport rep;
  for (auto& g : directions)
    rep.reports.push_back(limit_multiplicities(track_family(f0, g, t_start, t_end, steps, opt), theta0));
  rep.matched = true;
  ThetaConfig first = rep.reports[0].limit_config();
  for (std::size_t i = 1; i < rep.reports.size(); ++i) {
    MatchResult m = match_configs(first, rep.reports[i].limit_config(), tol);
    rep.max_distance = std::max(rep.max_distance, m.max_distance);
    rep.matched = rep.matched && m.success;
  }
  return rep;
}

}  // namespace thetaq
