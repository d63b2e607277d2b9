// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "../fixtures.hpp"
#include "thetaq/config.hpp"
#include "thetaq/degenerate.hpp"
#include "thetaq/error.hpp"
#include "thetaq/reconstruct.hpp"
#include "thetaq/theta.hpp"

using namespace thetaq;
using namespace fixtures;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << "failed: ";
      else note << "; ";
      note << what;
      pass = false;
    }
  }
};

// published counts of theta-lines by type
struct Row {
  SingularityProfile p;
  ThetaTypeCounts c;
};
const Row kTable[] = {
    {{0, 0, 0}, {28, 0, 0}}, {{1, 0, 0}, {16, 6, 0}}, {{2, 0, 0}, {8, 8, 1}}, {{3, 0, 0}, {4, 6, 3}},
    {{0, 1, 0}, {10, 6, 0}}, {{0, 2, 0}, {1, 6, 1}},  {{0, 3, 0}, {1, 0, 3}}, {{1, 1, 0}, {4, 7, 1}},
    {{2, 1, 0}, {2, 4, 3}},  {{1, 2, 0}, {1, 2, 3}},  {{0, 0, 1}, {6, 5, 0}}, {{1, 0, 1}, {2, 5, 1}},
    {{0, 1, 1}, {0, 4, 1}},
};

void table(Outcome& o) {
  auto t0 = Clock::now();
  int rows = 0;
  for (auto& r : kTable) {
    bool ok = theta_type_counts(r.p) == r.c && pluecker_bitangents(4, r.p) == r.c.b0;
    o.require(ok, "row (" + std::to_string(r.p.delta) + "," + std::to_string(r.p.kappa) + "," +
                      std::to_string(r.p.tau) + ")");
    rows += ok;
  }
  o.require(admissible_profiles().size() == 13, "admissible profile count");
  double dt = seconds_since(t0);
  o.require(dt < 1.0, "runtime");
  o.note << rows << "/13 rows, " << dt << " s";
}

void smooth_count(Outcome& o) {
  auto t0 = Clock::now();
  Rng rng(2002);
  int good = 0;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    TernaryForm f = random_form(4, rng).normalized();
    ThetaOptions opt;
    opt.seed = 100 + i;
    auto lines = bitangents_smooth(f, opt);
    bool ok = lines.size() == 28;
    for (std::size_t a = 0; a < lines.size(); ++a)
      for (std::size_t b = a + 1; b < lines.size(); ++b) ok = ok && distance(lines[a].line, lines[b].line) > 1e-6;
    for (auto& l : lines) {
      auto sq = is_perfect_square(restrict_to_line(f, l.line));
      worst = std::max(worst, sq.residual);
      ok = ok && sq.accepted && sq.residual < 1e-8 && l.contacts.size() == 2;
      for (auto& p : l.contacts) ok = ok && std::abs(f(p.coords())) < 1e-8 && incidence_residual(p, l.line) < 1e-8;
    }
    good += ok;
  }
  o.require(good == 100, std::to_string(100 - good) + " curves");
  o.note << good << "/100 curves, worst square residual " << worst << ", " << seconds_since(t0) << " s";
}

void conservation(Outcome& o) {
  Rng rng(3003);
  auto check = [&](const std::string& name, const ThetaConfig& cfg) {
    o.require(cfg.total_multiplicity() == 28, name);
  };
  int n = 0;
  auto irreducible = [&](const std::string& name, const TernaryForm& f) {
    check(name, theta_curve(f));
    ++n;
  };
  auto reducible = [&](const std::string& name, std::vector<TernaryForm> comps) {
    TernaryForm f(0, {1.0});
    for (auto& c : comps) f = f * c;
    check(name, theta_curve(f, comps));
    ++n;
  };
  irreducible("smooth", klein());
  irreducible("uninodal", uninodal(rng));
  irreducible("binodal", binodal(rng));
  irreducible("trinodal", trinodal_coordinate(rng));
  irreducible("cuspidal", cuspidal(rng));
  auto [a, b] = split_pair();
  reducible("split", {a, b});
  reducible("four lines", {line(1, 0, 0), line(0, 1, 0), line(0, 0, 1), line(1, 1, 1)});
  reducible("line and cubic", {line(1, 2, -1), random_form(3, rng)});
  auto [c, d] = tangent_conics();
  reducible("tangent conics", {c, d});
  o.note << n << " catalog curves";
}

void trinodal_round_trip(Outcome& o) {
  Rng rng(4004);
  double worst = 0.0;
  int good = 0;
  for (int i = 0; i < 20; ++i) {
    TernaryForm x = random_trinodal(rng);
    try {
      auto r = reconstruct_trinodal(theta_curve(x));
      double e = form_distance(r.curve, x);
      worst = std::max(worst, e);
      good += e < 1e-6;
    } catch (const Error& e) {
      o.note << "[" << e.what() << "] ";
    }
  }
  o.require(good == 20, std::to_string(20 - good) + " curves");
  o.note << good << "/20, worst coefficient error " << worst;
}

void split_round_trip(Outcome& o) {
  Rng rng(5005);
  double worst = 0.0;
  int good = 0;
  for (int i = 0; i < 20; ++i) {
    auto [q0, q1] = random_split(rng);
    std::vector<TernaryForm> comps{q0, q1};
    try {
      auto r = reconstruct_split(theta_curve(q0 * q1, comps));
      double e = form_distance(r.curve, q0 * q1);
      if (r.components.size() == 2) {
        double same = std::max(form_distance(r.components[0], q0), form_distance(r.components[1], q1));
        double swap = std::max(form_distance(r.components[0], q1), form_distance(r.components[1], q0));
        e = std::max(e, std::min(same, swap));
      } else {
        e = 1.0;
      }
      worst = std::max(worst, e);
      good += e < 1e-6;
    } catch (const Error& e) {
      o.note << "[" << e.what() << "] ";
    }
  }
  o.require(good == 20, std::to_string(20 - good) + " curves");
  o.note << good << "/20, worst coefficient error " << worst;
}

ThetaConfig lines_config(const std::vector<std::pair<Vec3, int>>& ls) {
  ThetaConfig cfg;
  for (auto& [v, m] : ls) {
    ThetaLine l{ProjLine(v)};
    l.multiplicity = m;
    cfg.lines.push_back(l);
  }
  return cfg;
}

void git(Outcome& o) {
  Rng rng(6006);
  auto tri = git_classify_config(theta_curve(trinodal_coordinate(rng)));
  int tri_point = incidence(theta_curve(trinodal_coordinate(rng))).max_point_multiplicity();
  o.require(tri.verdict == GitVerdictKind::stable && tri_point == 12, "trinodal");

  auto tac = git_classify_config(theta_curve(tacnodal(rng)));
  o.require(tac.verdict == GitVerdictKind::unstable && tac.witness && !tac.witness->is_line &&
                tac.witness->multiplicity == 22,
            "tacnodal");

  auto tc = git_classify_config(theta_curve(tacnode_cusp(rng)));
  o.require(tc.verdict == GitVerdictKind::unstable && tc.witness && tc.witness->is_line &&
                tc.witness->multiplicity == 12,
            "tacnode and cusp");

  for (int m : {9, 10}) {
    std::vector<std::pair<Vec3, int>> ls{{rng.complex_vector(), m}};
    for (int i = 0; i < 28 - m; ++i) ls.push_back({rng.complex_vector(), 1});
    auto v = git_classify_config(lines_config(ls));
    o.require(v.verdict == (m >= 10 ? GitVerdictKind::unstable : GitVerdictKind::stable),
              "line of multiplicity " + std::to_string(m));
  }
  for (int m : {18, 19}) {
    std::vector<std::pair<Vec3, int>> ls;
    for (int left = m; left > 0; left -= 3)
      ls.push_back({Vec3(rng.complex_normal(), rng.complex_normal(), 0), std::min(left, 3)});
    for (int i = 0; i < 28 - m; ++i) ls.push_back({rng.complex_vector(), 1});
    auto v = git_classify_config(lines_config(ls));
    o.require(v.verdict == (m >= 19 ? GitVerdictKind::unstable : GitVerdictKind::stable),
              "point of multiplicity " + std::to_string(m));
  }
  o.note << "trinodal point max " << tri_point << ", tacnodal witness "
         << (tac.witness ? tac.witness->multiplicity : 0) << ", tacnode+cusp line witness "
         << (tc.witness ? tc.witness->multiplicity : 0);
}

void degeneration(Outcome& o) {
  Rng rng(7007);
  struct Case {
    std::string name;
    TernaryForm f0;
    std::map<int, int> counts;
    std::map<int, double> exponents;
  };
  std::vector<Case> cases{
      {"uninodal", uninodal(rng), {{1, 16}, {2, 6}}, {{2, 0.5}}},
      {"cuspidal", cuspidal(rng), {{1, 10}, {3, 6}}, {{3, 1.0 / 3}}},
      {"trinodal", trinodal_coordinate(rng), {{1, 4}, {2, 6}, {4, 3}}, {}},
  };
  for (auto& c : cases) {
    auto t0 = Clock::now();
    std::map<int, int> got;
    double worst_exp = 0.0;
    try {
      auto path = track_family(c.f0, random_form(4, rng), 0.1, 1e-6, 200);
      auto rep = limit_multiplicities(path, theta_curve(c.f0));
      for (auto& l : rep.lines) {
        int k = static_cast<int>(l.tracks.size());
        ++got[k];
        o.require(k == l.target.multiplicity, c.name + " line count");
        auto e = c.exponents.find(k);
        if (e != c.exponents.end()) worst_exp = std::max(worst_exp, std::abs(l.exponent - e->second));
      }
    } catch (const Error& e) {
      o.require(false, c.name + " (" + e.what() + ")");
      continue;
    }
    double dt = seconds_since(t0);
    o.require(got == c.counts, c.name + " counts");
    o.require(worst_exp < 0.1, c.name + " exponent");
    o.require(dt < 60.0, c.name + " runtime");
    o.note << c.name << " ok in " << dt << " s (exponent error " << worst_exp << "); ";
  }
}

void independence(Outcome& o) {
  Rng rng(8008);
  TernaryForm f0 = trinodal_coordinate(rng);
  std::vector<TernaryForm> dirs{random_form(4, rng), random_form(4, rng)};
  auto rep = limit_independence_check(f0, dirs, 0.1, 1e-6, 200);
  o.require(rep.matched && rep.max_distance < 1e-5, "limits differ");
  o.note << "max distance " << rep.max_distance;
}

void immersion(Outcome& o) {
  Rng rng(9009);
  std::vector<TernaryForm> curves{klein()};
  for (int i = 0; i < 10; ++i) curves.push_back(random_form(4, rng));
  int good = 0;
  double worst_scale = 0.0;
  const double step = 1e-6;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    auto& f = curves[i];
    auto a = immersion_rank(f, step, 1e-6, 1 + i);
    auto b = immersion_rank(f, step / 2, 1e-6, 1 + i);
    double scale = bitangent_derivative(f, f, step, 1 + i);
    worst_scale = std::max(worst_scale, scale);
    good += a.rank == 14 && b.rank == 14 && scale < 10 * step;
  }
  o.require(good == 11, std::to_string(11 - good) + " curves");
  o.note << good << "/11 curves rank 14 at both steps, scaling derivative max " << worst_scale;
}

void theta_property(Outcome& o, bool prerequisites) {
  Rng rng(10010);
  int good = 0, returned = 0, degenerate = 0, failed = 0;
  for (int i = 0; i < 10; ++i) {
    TernaryForm f = random_form(4, rng);
    try {
      auto r = verify_theta_property(f, {}, 1e-6, 100 + i, 50);
      good += r.verified && r.restarts == 50;
      returned += r.returned;
      degenerate += r.degenerate;
      failed += r.failed;
    } catch (const Error& e) {
      o.note << "[" << e.what() << "] ";
    }
  }
  o.require(good == 10, std::to_string(10 - good) + " curves");
  o.require(prerequisites, "criteria 4, 5 or 9");
  o.note << good << "/10 curves, 500 restarts: " << returned << " returned, " << degenerate << " degenerate, "
         << failed << " did not converge, no distinct preimage";
}

}  // namespace

int main() {
  std::map<int, bool> results;
  auto run = [&](int k, const std::function<void(Outcome&)>& f) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      f(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    results[k] = o.pass;
    std::printf("criterion %2d: %s  %s (%.1f s)\n", k, o.pass ? "PASS" : "FAIL", o.note.str().c_str(),
                seconds_since(t0));
    std::fflush(stdout);
  };
  run(1, table);
  run(2, smooth_count);
  run(3, conservation);
  run(4, trinodal_round_trip);
  run(5, split_round_trip);
  run(6, git);
  run(7, degeneration);
  run(8, independence);
  run(9, immersion);
  run(10, [&](Outcome& o) { theta_property(o, results[4] && results[5] && results[9]); });
  bool all = std::all_of(results.begin(), results.end(), [](auto& kv) { return kv.second; });
  return all ? 0 : 1;
}
