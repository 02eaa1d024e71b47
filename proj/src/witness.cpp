#include "mpg/witness.hpp"

#include <algorithm>

#include "mpg/error.hpp"

namespace mpg {

namespace {

int mod(int v, int m) { return ((v % m) + m) % m; }

bool sigma_adjacent(const Mpg& g, int i, int j) {
  const int d = mod(g.sigma(i) - g.sigma(j), g.m());
  return d == 1 || d == g.m() - 1;
}

nlohmann::json c4_json(const FourCycle& c) { return nlohmann::json::array({c.i, c.j}); }

// Restricts g to the kept vertex sets (sigma must map keep_a onto keep_b) and
// relabels both sides by increasing index, which preserves cyclic order.
Reduction restrict_to(const Mpg& g, int anchor, std::vector<int> keep_a, std::vector<int> keep_b) {
  std::sort(keep_a.begin(), keep_a.end());
  std::sort(keep_b.begin(), keep_b.end());
  std::vector<int> sigma(keep_a.size());
  int new_anchor = -1;
  for (std::size_t i = 0; i < keep_a.size(); ++i) {
    const int target = g.sigma(keep_a[i]);
    const auto it = std::lower_bound(keep_b.begin(), keep_b.end(), target);
    if (it == keep_b.end() || *it != target) {
      throw Error(ErrorCode::InternalInvariantViolated, "kept A vertex matched outside kept A'",
                  {{"instance", g.id()}, {"vertex", keep_a[i]}});
    }
    sigma[i] = static_cast<int>(it - keep_b.begin());
    if (keep_a[i] == anchor) new_anchor = static_cast<int>(i);
  }
  return Reduction{Mpg::validate(static_cast<int>(keep_a.size()), sigma), new_anchor,
                   std::move(keep_a)};
}

bool every_c4_contains(const Mpg& g, int e) {
  const auto c4 = enumerate_m_c4(g);
  return std::all_of(c4.begin(), c4.end(), [&](const FourCycle& c) { return c.contains(e); });
}

}  // namespace

PetersenWitness p10_from_p4(const Mpg& g, int a, const InducedPath4& p) {
  const auto h = build_crossing_graph(g, a);
  if (!is_induced_p4(h, p)) {
    throw Error(ErrorCode::NotAnInducedP4, "not an induced P4 of the crossing graph",
                {{"anchor", a}, {"path", p.vertices}});
  }
  PetersenWitness w;
  w.edges = {a, p.vertices[0], p.vertices[1], p.vertices[2], p.vertices[3]};
  std::sort(w.edges.begin(), w.edges.end());
  if (!is_m_p10(g, w.edges)) {
    throw Error(ErrorCode::InternalInvariantViolated, "induced P4 did not yield an M-P10",
                {{"instance", g.id()}, {"anchor", a}, {"path", p.vertices}});
  }
  return w;
}

Reduction c4_reduce(const Mpg& g, int a, int z) {
  const int m = g.m();
  if (m <= 3) {
    throw Error(ErrorCode::TooSmall, "cannot reduce below m = 3", {{"m", m}});
  }
  const bool neighbours = z >= 0 && z < m && a >= 0 && a < m && (mod(z - a, m) == 1 || mod(a - z, m) == 1);
  if (!neighbours || !sigma_adjacent(g, a, z)) {
    throw Error(ErrorCode::NotAC4ThroughE, "a and z do not span an M-C4",
                {{"instance", g.id()}, {"a", a}, {"z", z}});
  }
  const bool held = every_c4_contains(g, a);

  std::vector<int> keep_a;
  std::vector<int> keep_b;
  for (int i = 0; i < m; ++i) {
    if (i != z) keep_a.push_back(i);
    if (i != g.sigma(z)) keep_b.push_back(i);
  }
  auto r = restrict_to(g, a, std::move(keep_a), std::move(keep_b));

  if (held) {
    for (const auto& c : enumerate_m_c4(r.graph)) {
      if (!c.contains(r.anchor)) {
        throw Error(ErrorCode::InternalInvariantViolated,
                    "C4 reduction created an M-C4 avoiding the anchor",
                    {{"instance", g.id()}, {"a", a}, {"z", z}, {"c4", c4_json(c)}});
      }
    }
  }
  return r;
}

Arc matched_arc(const Mpg& g, int x, int y, TwinKind kind) {
  if (kind == TwinKind::False) return Arc{Side::APrime, g.sigma(x), g.sigma(y)};
  return Arc{Side::APrime, g.sigma(y), g.sigma(x)};
}

Reduction twin_contract(const Mpg& g, int a, const TwinPair& twins) {
  const int m = g.m();
  const auto h = build_crossing_graph(g, a);
  int x = twins.x;
  int y = twins.y;
  const auto bad_vertex = [&](int v) { return v < 0 || v >= m || v == a; };
  if (bad_vertex(x) || bad_vertex(y) || !are_twins(h, x, y)) {
    throw Error(ErrorCode::NotTwins, "not a twin pair of the crossing graph",
                {{"instance", g.id()}, {"anchor", a}, {"x", x}, {"y", y}});
  }
  const TwinKind kind = h.adjacent(x, y) ? TwinKind::True : TwinKind::False;
  if (mod(x - a, m) > mod(y - a, m)) std::swap(x, y);

  const int px = mod(x - a, m);
  const int py = mod(y - a, m);
  // internal vertices of yCx other than a
  if ((m - 1 - py) + (px - 1) < 1) {
    throw Error(ErrorCode::DegenerateArc, "arc yCx has no internal vertex besides a",
                {{"instance", g.id()}, {"anchor", a}, {"x", x}, {"y", y},
                 {"c4", nlohmann::json::array({y, a})}});
  }

  const Arc block{Side::A, x, y};
  const Arc q = matched_arc(g, x, y, kind);
  auto keep_a = block.vertices(m);
  auto keep_b = q.vertices(m);

  // twin blocks are matched onto each other
  std::vector<int> image;
  for (int v : keep_a) image.push_back(g.sigma(v));
  std::sort(image.begin(), image.end());
  auto sorted_b = keep_b;
  std::sort(sorted_b.begin(), sorted_b.end());
  if (image != sorted_b) {
    throw Error(ErrorCode::InternalInvariantViolated, "twin block not matched onto Q'",
                {{"instance", g.id()}, {"anchor", a}, {"x", x}, {"y", y}});
  }

  keep_a.push_back(a);
  keep_b.push_back(g.sigma(a));
  return restrict_to(g, a, std::move(keep_a), std::move(keep_b));
}

WitnessResult find_p10_through(const Mpg& g, int e) {
  if (e < 0 || e >= g.m()) {
    throw Error(ErrorCode::IndexOutOfRange, "edge index out of range", {{"edge", e}, {"m", g.m()}});
  }
  for (const auto& c : enumerate_m_c4(g)) {
    if (!c.contains(e)) {
      throw Error(ErrorCode::PreconditionViolated, "an M-C4 avoids the edge",
                  {{"edge", e}, {"c4", c4_json(c)}});
    }
  }

  ReductionTrace trace;
  Mpg cur = g;
  int a = e;
  std::vector<int> to_original(static_cast<std::size_t>(g.m()));
  for (int i = 0; i < g.m(); ++i) to_original[static_cast<std::size_t>(i)] = i;

  const auto lift = [&](Reduction&& r) {
    std::vector<int> next(r.origin.size());
    for (std::size_t i = 0; i < r.origin.size(); ++i) {
      next[i] = to_original[static_cast<std::size_t>(r.origin[i])];
    }
    to_original = std::move(next);
    cur = std::move(r.graph);
    a = r.anchor;
  };

  while (true) {
    const int m = cur.m();
    const auto c4 = enumerate_m_c4(cur);
    for (const auto& c : c4) {
      if (!c.contains(a)) {
        throw Error(ErrorCode::InternalInvariantViolated,
                    "reduced instance has an M-C4 avoiding the anchor",
                    {{"instance", cur.id()}, {"anchor", a}, {"c4", c4_json(c)},
                     {"steps", trace.steps.size()}});
      }
    }
    if (!c4.empty()) {
      int z = m;
      for (const auto& c : c4) z = std::min(z, c.i == a ? c.j : c.i);
      trace.steps.push_back(C4ReduceStep{m, a, z});
      lift(c4_reduce(cur, a, z));
      continue;
    }

    const auto h = build_crossing_graph(cur, a);
    if (auto p = find_induced_p4(h)) {
      trace.steps.push_back(P4FoundStep{m, a, *p});
      const auto local = p10_from_p4(cur, a, *p);
      PetersenWitness w;
      for (std::size_t t = 0; t < 5; ++t) {
        w.edges[t] = to_original[static_cast<std::size_t>(local.edges[t])];
      }
      std::sort(w.edges.begin(), w.edges.end());
      if (!w.contains(e) || !is_m_p10(g, w.edges)) {
        throw Error(ErrorCode::InternalInvariantViolated, "lifted witness failed verification",
                    {{"instance", g.id()}, {"edge", e}, {"witness", w.edges}});
      }
      return {w, std::move(trace)};
    }

    const auto t = find_twins(h);
    if (!t) {
      throw Error(ErrorCode::InternalInvariantViolated,
                  "crossing graph has neither an induced P4 nor twins",
                  {{"instance", cur.id()}, {"anchor", a}});
    }
    int x = t->x;
    int y = t->y;
    if (mod(x - a, m) > mod(y - a, m)) std::swap(x, y);
    trace.steps.push_back(TwinContractStep{m, a, x, y, t->kind, matched_arc(cur, x, y, t->kind)});
    auto r = twin_contract(cur, a, *t);
    if (r.graph.m() >= m) {
      throw Error(ErrorCode::InternalInvariantViolated, "twin contraction did not shrink",
                  {{"instance", cur.id()}, {"anchor", a}});
    }
    lift(std::move(r));
  }
}

PetersenWitness replay(const Mpg& g, int e, const ReductionTrace& trace) {
  Mpg cur = g;
  int a = e;
  std::vector<int> to_original(static_cast<std::size_t>(g.m()));
  for (int i = 0; i < g.m(); ++i) to_original[static_cast<std::size_t>(i)] = i;

  const auto mismatch = [&](std::size_t step) {
    return Error(ErrorCode::InternalInvariantViolated, "trace does not match instance",
                 {{"instance", cur.id()}, {"step", step}});
  };
  const auto lift = [&](Reduction&& r) {
    std::vector<int> next(r.origin.size());
    for (std::size_t i = 0; i < r.origin.size(); ++i) {
      next[i] = to_original[static_cast<std::size_t>(r.origin[i])];
    }
    to_original = std::move(next);
    cur = std::move(r.graph);
    a = r.anchor;
  };

  for (std::size_t s = 0; s < trace.steps.size(); ++s) {
    const auto& step = trace.steps[s];
    if (const auto* c = std::get_if<C4ReduceStep>(&step)) {
      if (c->m != cur.m() || c->a != a) throw mismatch(s);
      lift(c4_reduce(cur, a, c->z));
    } else if (const auto* t = std::get_if<TwinContractStep>(&step)) {
      if (t->m != cur.m() || t->a != a) throw mismatch(s);
      lift(twin_contract(cur, a, TwinPair{t->x, t->y, t->kind}));
    } else {
      const auto& p = std::get<P4FoundStep>(step);
      if (p.m != cur.m() || p.a != a || s + 1 != trace.steps.size()) throw mismatch(s);
      const auto local = p10_from_p4(cur, a, p.path);
      PetersenWitness w;
      for (std::size_t i = 0; i < 5; ++i) {
        w.edges[i] = to_original[static_cast<std::size_t>(local.edges[i])];
      }
      std::sort(w.edges.begin(), w.edges.end());
      return w;
    }
  }
  throw mismatch(trace.steps.size());
}

}  // namespace mpg
