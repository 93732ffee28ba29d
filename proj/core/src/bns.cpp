#include "sqhnn/bns.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "sqhnn/errors.hpp"

namespace sqhnn {

Character Character::primitive(long long first, long long second) {
  if (first == 0 && second == 0) throw PreconditionError("character (0, 0) is not surjective");
  const long long g = std::gcd(first, second);
  return {first / g, second / g};
}

RelatorWalk walk(const Word& r) {
  if (r.rank_used() > 2) throw PreconditionError("walk needs a word in two generators");
  RelatorWalk w;
  Point p{0, 0};
  w.points.push_back(p);
  for (Letter x : r) {
    (x.gen() == 0 ? p.first : p.second) += x.sign();
    w.points.push_back(p);
    w.steps.push_back(x);
  }
  return w;
}

namespace {

long long cross(const Point& o, const Point& a, const Point& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// Indices of the cyclic vertex set: p_0..p_{m-1} when closed.
std::size_t vertex_count(const RelatorWalk& w) {
  return w.closed() && w.points.size() > 1 ? w.points.size() - 1 : w.points.size();
}

}  // namespace

HullData hull(const RelatorWalk& w) {
  const std::size_t count = vertex_count(w);
  std::vector<Point> pts(w.points.begin(), w.points.begin() + static_cast<long>(count));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  HullData h;
  if (pts.size() <= 2) {
    h.vertices = pts;
  } else {
    std::vector<Point> chain(2 * pts.size());
    std::size_t k = 0;
    for (const Point& p : pts) {
      while (k >= 2 && cross(chain[k - 2], chain[k - 1], p) <= 0) --k;
      chain[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
      while (k >= lower && cross(chain[k - 2], chain[k - 1], pts[i]) <= 0) --k;
      chain[k++] = pts[i];
    }
    chain.resize(k - 1);
    h.vertices = std::move(chain);
  }

  for (const Point& v : h.vertices) {
    h.visits.push_back(static_cast<std::size_t>(
        std::count(w.points.begin(), w.points.begin() + static_cast<long>(count), v)));
  }

  const std::size_t edges = h.vertices.size() >= 2 ? h.vertices.size() : 0;
  const bool cyclic = count < w.points.size();
  for (std::size_t e = 0; e < edges; ++e) {
    const Point& a = h.vertices[e];
    const Point& b = h.vertices[(e + 1) % h.vertices.size()];
    std::vector<bool> on(count);
    for (std::size_t i = 0; i < count; ++i) on[i] = cross(a, b, w.points[i]) == 0;

    std::vector<std::vector<std::size_t>> runs;
    if (std::all_of(on.begin(), on.end(), [](bool x) { return x; })) {
      std::vector<std::size_t> all(count);
      std::iota(all.begin(), all.end(), 0);
      runs.push_back(std::move(all));
    } else {
      // Start just after an off-line point so cyclic runs are not split.
      std::size_t start = 0;
      if (cyclic) {
        while (on[start]) ++start;
        start = (start + 1) % count;
      }
      std::vector<std::size_t> run;
      for (std::size_t s = 0; s < count; ++s) {
        const std::size_t i = (start + s) % count;
        if (on[i]) {
          run.push_back(i);
        } else {
          if (run.size() >= 2) runs.push_back(run);
          run.clear();
        }
      }
      if (run.size() >= 2) runs.push_back(run);
    }
    h.edge_paths.push_back(std::move(runs));
  }
  return h;
}

bool in_sigma(const RelatorWalk& w, const Character& chi) {
  const std::size_t m = vertex_count(w);
  long long lowest = std::numeric_limits<long long>::max();
  for (std::size_t i = 0; i < m; ++i) lowest = std::min(lowest, chi(w.points[i]));
  std::vector<std::size_t> at;
  for (std::size_t i = 0; i < m; ++i) {
    if (chi(w.points[i]) == lowest) at.push_back(i);
  }
  if (at.size() == 1) return true;
  if (at.size() != 2 || m < 2) return false;
  // Adjacent as i, i+1 or as m-1, 0 (joined by the last letter).
  std::size_t from;
  if (at[1] == at[0] + 1) {
    from = at[0];
  } else if (at[0] == 0 && at[1] == m - 1) {
    from = m - 1;
  } else {
    return false;
  }
  const Letter x = w.steps[from];
  return (x.gen() == 0 ? chi.first : chi.second) == 0;
}

BnsClassification brown_classify(const Presentation& p, Character chi) {
  if (p.rank() != 2 || p.relator_count() != 1) {
    throw PreconditionError("Brown classification needs a 2-generator 1-relator presentation");
  }
  const Word& r = p.relator(0);
  if (r.empty()) throw PreconditionError("relator is trivial");
  chi = Character::primitive(chi.first, chi.second);
  const RelatorWalk w = walk(r);
  if (chi(w.points.back()) != 0) {
    throw PreconditionError("character (" + std::to_string(chi.first) + ", " +
                            std::to_string(chi.second) + ") does not vanish on the relator");
  }
  BnsClassification out;
  out.chi = chi;
  out.chi_in_sigma = in_sigma(w, chi);
  out.minus_chi_in_sigma = in_sigma(w, -chi);
  if (out.chi_in_sigma && out.minus_chi_in_sigma) {
    out.pair_verdict = PairVerdict::kFibered;
  } else if (out.chi_in_sigma != out.minus_chi_in_sigma) {
    out.pair_verdict = PairVerdict::kStrictlyAscending;
  }
  return out;
}

std::vector<BnsClassification> sweep(const Presentation& p, long long n) {
  if (n < 1) throw PreconditionError("sweep radius must be positive");
  if (p.rank() != 2 || p.relator_count() != 1) {
    throw PreconditionError("Brown classification needs a 2-generator 1-relator presentation");
  }
  const Point end = walk(p.relator(0)).points.back();
  std::vector<BnsClassification> out;
  for (long long x = -n; x <= n; ++x) {
    for (long long y = -n; y <= n; ++y) {
      if (std::gcd(x, y) != 1) continue;
      if (x * end.first + y * end.second != 0) continue;
      out.push_back(brown_classify(p, Character{x, y}));
    }
  }
  return out;
}

std::string to_string(PairVerdict v) {
  switch (v) {
    case PairVerdict::kFibered: return "fibered";
    case PairVerdict::kStrictlyAscending: return "strictly_ascending";
    case PairVerdict::kNeither: return "neither";
  }
  return "unknown";
}

}  // namespace sqhnn
