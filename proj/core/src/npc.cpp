#include "sqhnn/npc.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <sstream>

#include "sqhnn/errors.hpp"

namespace sqhnn {

void require_square(const Presentation& p) {
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    if (p.relator(i).size() != 4) {
      throw PreconditionError("relator " + std::to_string(i) + " has length " +
                              std::to_string(p.relator(i).size()) + ", expected 4");
    }
  }
}

PairIndex build_pair_index(const Presentation& p) {
  PairIndex index;
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    for (bool inverted : {false, true}) {
      const Word w = inverted ? p.relator(i).inverse() : p.relator(i);
      const std::size_t n = w.size();
      for (std::size_t k = 0; k < n; ++k) {
        index[TwoLetter{w[k], w[(k + 1) % n]}].push_back(PairOccurrence{i, inverted, k});
      }
    }
  }
  return index;
}

namespace {

Word pair_word(Letter x, Letter y) { return Word::from_reduced({x, y}); }

}  // namespace

NpcReport check_condition_1(const Presentation& p) {
  require_square(p);
  NpcReport rep;
  for (const auto& [pair, occ] : build_pair_index(p)) {
    if (occ.size() > 1) {
      rep.condition1 = false;
      rep.violations.push_back(Violation{ViolationKind::kRepeatedPair,
                                         {pair_word(pair.first, pair.second)},
                                         occ,
                                         std::to_string(occ.size()) + " occurrences"});
    }
  }
  rep.condition2 = true;
  rep.pass = rep.condition1;
  return rep;
}

NpcReport check_condition_2(const Presentation& p) {
  require_square(p);
  const PairIndex index = build_pair_index(p);
  NpcReport rep;
  std::set<std::array<std::uint32_t, 3>> seen;

  for (const auto& [xy, occ_xy] : index) {
    const Letter x = xy.first, y = xy.second;
    const Letter y_inv = y.inverse();
    for (auto it = index.lower_bound(TwoLetter{y_inv, Letter::from_code(0)});
         it != index.end() && it->first.first == y_inv; ++it) {
      const Letter z = it->first.second;
      // z == x^-1 would need x x^-1 in L, which a reduced word never has.
      if (z == x.inverse()) continue;
      auto xz = index.find(TwoLetter{x, z});
      if (xz == index.end()) continue;

      std::array<std::uint32_t, 3> tri{x.inverse().code(), y.code(), z.code()};
      std::sort(tri.begin(), tri.end());
      if (!seen.insert(tri).second) continue;

      rep.condition2 = false;
      rep.violations.push_back(Violation{
          ViolationKind::kTriangle,
          {pair_word(x, y), pair_word(y_inv, z), pair_word(x, z)},
          {occ_xy.front(), it->second.front(), xz->second.front()},
          "link triangle"});
    }
  }
  rep.pass = rep.condition2;
  return rep;
}

LinkGraph build_link(const Presentation& p) {
  require_square(p);
  LinkGraph g;
  g.vertex_count = 2 * p.rank();
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    const Word& r = p.relator(i);
    for (std::size_t k = 0; k < r.size(); ++k) {
      const Letter x = r[k], y = r[(k + 1) % r.size()];
      g.edges.push_back(LinkGraph::Edge{x.inverse().code(), y.code(), i, k});
    }
  }
  return g;
}

GirthResult girth(const LinkGraph& g) {
  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> adj(g.vertex_count);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    adj[g.edges[e].u].emplace_back(g.edges[e].v, e);
    if (g.edges[e].u != g.edges[e].v) adj[g.edges[e].v].emplace_back(g.edges[e].u, e);
  }

  GirthResult best;
  std::vector<std::size_t> dist(g.vertex_count);
  std::vector<std::uint32_t> parent(g.vertex_count);
  constexpr std::size_t kInf = static_cast<std::size_t>(-1);

  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [u, v, rel, corner] = g.edges[e];
    if (u == v) {
      return GirthResult{1, {u}};
    }
    // Shortest u-v path avoiding edge e closes a cycle through e.
    std::fill(dist.begin(), dist.end(), kInf);
    dist[u] = 0;
    std::deque<std::uint32_t> queue{u};
    while (!queue.empty() && dist[v] == kInf) {
      const std::uint32_t a = queue.front();
      queue.pop_front();
      for (auto [b, f] : adj[a]) {
        if (f == e || dist[b] != kInf) continue;
        dist[b] = dist[a] + 1;
        parent[b] = a;
        queue.push_back(b);
      }
    }
    if (dist[v] == kInf) continue;
    const std::size_t len = dist[v] + 1;
    if (!best.girth || len < *best.girth) {
      best.girth = len;
      best.cycle.clear();
      for (std::uint32_t w = v; w != u; w = parent[w]) best.cycle.push_back(w);
      best.cycle.push_back(u);
      std::reverse(best.cycle.begin(), best.cycle.end());
    }
  }
  return best;
}

NpcReport npc_check(const Presentation& p) {
  require_square(p);
  NpcReport c1 = check_condition_1(p);
  NpcReport c2 = check_condition_2(p);
  const GirthResult gr = girth(build_link(p));

  NpcReport rep;
  rep.condition1 = c1.condition1;
  rep.condition2 = c2.condition2;
  rep.girth = gr.girth;
  rep.violations = std::move(c1.violations);
  rep.violations.insert(rep.violations.end(), c2.violations.begin(), c2.violations.end());

  const bool by_conditions = rep.condition1 && rep.condition2;
  const bool by_girth = !gr.girth || *gr.girth >= 4;
  if (!by_girth) {
    Violation v{ViolationKind::kShortCycle, {}, {}, "link girth " + std::to_string(*gr.girth)};
    for (std::uint32_t node : gr.cycle) {
      v.words.push_back(Word::from_reduced({Letter::from_code(node)}));
    }
    rep.violations.push_back(std::move(v));
  }
  rep.consistent = by_conditions == by_girth;
  if (!rep.consistent) {
    rep.violations.push_back(Violation{
        ViolationKind::kDisagreement, {}, {},
        std::string("conditions (1)+(2) say ") + (by_conditions ? "pass" : "fail") +
            " but link girth says " + (by_girth ? "pass" : "fail")});
  }
  rep.pass = by_conditions && by_girth && rep.consistent;
  return rep;
}

std::string link_to_dot(const LinkGraph& g, const Alphabet& alphabet) {
  std::ostringstream out;
  out << "graph link {\n";
  for (std::uint32_t v = 0; v < g.vertex_count; ++v) {
    const Letter l = Letter::from_code(v);
    out << "  n" << v << " [label=\"" << alphabet.name(l.gen()) << (l.positive() ? "" : "^-1")
        << "\"];\n";
  }
  for (const auto& e : g.edges) {
    out << "  n" << e.u << " -- n" << e.v << " [label=\"r" << e.relator << "." << e.corner
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::kRepeatedPair: return "repeated_pair";
    case ViolationKind::kTriangle: return "triangle";
    case ViolationKind::kShortCycle: return "short_cycle";
    case ViolationKind::kDisagreement: return "criteria_disagreement";
  }
  return "unknown";
}

}  // namespace sqhnn
