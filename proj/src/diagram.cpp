#include "pgo/diagram.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pgo/mat.hpp"

namespace pgo {

void DynkinDiagram::add_vertex(int id) {
  if (has_vertex(id)) throw bad_diagram("duplicate vertex id");
  verts_.push_back(id);
}

void DynkinDiagram::add_edge(int i, int j, int mult, int dir) {
  switch (mult) {
    case 1:
      add_edge_cartan(i, j, -1, -1);
      return;
    case 2:
    case 3: {
      if (dir == 0) throw bad_diagram("multiple bond needs an arrow");
      // arrow points at the short root
      int short_v = dir > 0 ? j : i;
      if (short_v == j)
        add_edge_cartan(i, j, -1, -mult);
      else
        add_edge_cartan(i, j, -mult, -1);
      return;
    }
    case 4:
      add_edge_cartan(i, j, -2, -2);
      return;
    default:
      throw bad_diagram("unsupported bond multiplicity");
  }
}

void DynkinDiagram::add_edge_cartan(int i, int j, int a_ij, int a_ji) {
  if (!has_vertex(i) || !has_vertex(j) || i == j)
    throw bad_diagram("bad edge endpoints");
  if (a_ij >= 0 || a_ji >= 0) throw bad_diagram("off-diagonal Cartan entries must be negative");
  cartan_[{i, j}] = a_ij;
  cartan_[{j, i}] = a_ji;
}

bool DynkinDiagram::has_vertex(int id) const {
  return std::find(verts_.begin(), verts_.end(), id) != verts_.end();
}

std::vector<int> DynkinDiagram::neighbors(int id) const {
  std::vector<int> out;
  for (int v : verts_)
    if (v != id && cartan_.count({id, v})) out.push_back(v);
  return out;
}

int DynkinDiagram::cartan(int i, int j) const {
  if (i == j) return 2;
  auto it = cartan_.find({i, j});
  return it == cartan_.end() ? 0 : it->second;
}

bool DynkinDiagram::adjacent(int i, int j) const {
  return i != j && cartan_.count({i, j}) > 0;
}

DynkinDiagram DynkinDiagram::induced(const std::vector<int>& keep) const {
  DynkinDiagram d;
  std::set<int> ks(keep.begin(), keep.end());
  for (int v : verts_)
    if (ks.count(v)) d.add_vertex(v);
  for (const auto& [key, val] : cartan_)
    if (key.first < key.second && ks.count(key.first) && ks.count(key.second))
      d.add_edge_cartan(key.first, key.second, val, cartan(key.second, key.first));
  return d;
}

std::vector<int> DynkinDiagram::component_of(int id) const {
  std::vector<int> comp;
  std::set<int> seen{id};
  std::deque<int> todo{id};
  while (!todo.empty()) {
    int v = todo.front();
    todo.pop_front();
    comp.push_back(v);
    for (int w : neighbors(v))
      if (!seen.count(w)) {
        seen.insert(w);
        todo.push_back(w);
      }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

bool DynkinDiagram::connected() const {
  if (verts_.empty()) return true;
  return component_of(verts_.front()).size() == verts_.size();
}

std::pair<int, int> DynkinDiagram::edge_mult_dir(int i, int j) const {
  int a = cartan(i, j), b = cartan(j, i);
  if (a == 0 || b == 0) throw bad_diagram("not an edge");
  if (a == -1 && b == -1) return {1, 0};
  if (a == -2 && b == -2) return {4, 0};
  if (a == -1) return {-b, 1};   // j short
  if (b == -1) return {-a, -1};  // i short
  throw bad_diagram("unsupported Cartan pair");
}

std::map<int, Rat> DynkinDiagram::root_lengths() const {
  std::map<int, Rat> d;
  for (int v : verts_) {
    if (d.count(v)) continue;
    d[v] = Rat(1);
    std::deque<int> todo{v};
    while (!todo.empty()) {
      int x = todo.front();
      todo.pop_front();
      for (int y : neighbors(x)) {
        Rat expect = d[x] * cartan(x, y) / cartan(y, x);
        auto it = d.find(y);
        if (it == d.end()) {
          d[y] = expect;
          todo.push_back(y);
        } else if (it->second != expect) {
          throw bad_diagram("non-symmetrizable Cartan data");
        }
      }
    }
  }
  // normalize: minimum length 1 per component
  for (int v : verts_) {
    auto comp = component_of(v);
    Rat mn = d[comp.front()];
    for (int w : comp) mn = std::min(mn, d[w]);
    for (int w : comp) d[w] /= mn;
  }
  return d;
}

bool DynkinDiagram::finite_type() const {
  int n = static_cast<int>(verts_.size());
  if (n == 0) return true;
  std::map<int, Rat> len;
  try {
    len = root_lengths();
  } catch (const bad_diagram&) {
    return false;
  }
  QMat b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      b(i, j) = len.at(verts_[static_cast<size_t>(i)]) *
                cartan(verts_[static_cast<size_t>(i)], verts_[static_cast<size_t>(j)]);
  // positive definiteness via leading principal minors
  for (int k = 1; k <= n; ++k)
    if (b.leading_minor(k) <= 0) return false;
  return true;
}

RootSystemData roots_from_cartan(const DynkinDiagram& d) {
  if (!d.finite_type()) throw bad_diagram("not a finite-type diagram");
  const auto& vs = d.vertices();
  int n = static_cast<int>(vs.size());
  RootSystemData rs;
  rs.simple_ids = vs;

  auto pairing_with_simple = [&](const std::vector<int>& beta, int i) {
    // <beta, alpha_i^v> = sum_j beta_j * cartan(i, j)
    int s = 0;
    for (int j = 0; j < n; ++j)
      s += beta[static_cast<size_t>(j)] *
           d.cartan(vs[static_cast<size_t>(i)], vs[static_cast<size_t>(j)]);
    return s;
  };

  std::set<std::vector<int>> roots;
  std::deque<std::vector<int>> todo;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i)] = 1;
    roots.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    auto beta = todo.front();
    todo.pop_front();
    for (int i = 0; i < n; ++i) {
      auto r = beta;
      r[static_cast<size_t>(i)] -= pairing_with_simple(beta, i);
      if (!roots.count(r)) {
        roots.insert(r);
        todo.push_back(r);
      }
    }
    if (roots.size() > 100000) throw bad_diagram("root closure does not terminate");
  }
  // add negatives
  std::set<std::vector<int>> all = roots;
  for (const auto& r : roots) {
    auto neg = r;
    for (int& x : neg) x = -x;
    all.insert(neg);
  }
  rs.all_roots.assign(all.begin(), all.end());

  // highest root of the component containing the first vertex: dominant and
  // maximal height among roots supported on that component
  auto height = [](const std::vector<int>& r) {
    int h = 0;
    for (int x : r) h += x;
    return h;
  };
  const std::vector<int>* best = nullptr;
  for (const auto& r : rs.all_roots) {
    if (height(r) <= 0) continue;
    if (!best || height(r) > height(*best)) best = &r;
  }
  if (!d.connected())
    throw bad_diagram("highest root requires a connected diagram");
  if (!best) throw bad_diagram("no positive root found");
  rs.highest_root = *best;
  return rs;
}

bool WeightedSatakeDiagram::is_black(int id) const {
  auto it = black.find(id);
  return it != black.end() && it->second;
}

int WeightedSatakeDiagram::partner(int id) const {
  auto it = pairing.find(id);
  return it == pairing.end() ? id : it->second;
}

void WeightedSatakeDiagram::validate() const {
  if (empty()) return;
  if (!base.has_vertex(circled)) throw bad_diagram("circled vertex missing");
  if (is_black(circled)) throw bad_diagram("circled vertex is black");
  if (partner(circled) != circled)
    throw bad_diagram("circled vertex is arrow-paired");
  for (const auto& [a, b] : pairing) {
    if (a == b) continue;
    if (!base.has_vertex(a) || !base.has_vertex(b))
      throw bad_diagram("pairing endpoint missing");
    if (partner(b) != a) throw bad_diagram("pairing is not an involution");
    if (is_black(a) || is_black(b)) throw bad_diagram("pairing on black vertex");
  }
}

namespace {

WeightedSatakeDiagram restrict_to(const WeightedSatakeDiagram& s,
                                  const std::vector<int>& keep) {
  WeightedSatakeDiagram out;
  out.base = s.base.induced(keep);
  std::set<int> ks(keep.begin(), keep.end());
  for (int v : keep) {
    if (s.is_black(v)) out.black[v] = true;
    int p = s.partner(v);
    if (p != v && ks.count(p)) out.pairing[v] = p;
  }
  out.circled = s.circled;
  return out;
}

WeightedSatakeDiagram circled_component(const WeightedSatakeDiagram& s) {
  if (s.empty()) return s;
  return restrict_to(s, s.base.component_of(s.circled));
}

}  // namespace

WeightedSatakeDiagram extend_diagram(const WeightedSatakeDiagram& s0) {
  WeightedSatakeDiagram s = circled_component(s0);
  s.validate();
  if (s.empty()) throw bad_diagram("cannot extend an empty diagram");

  RootSystemData rs = roots_from_cartan(s.base);
  auto lens = s.base.root_lengths();
  const auto& vs = s.base.vertices();
  int n = static_cast<int>(vs.size());

  // inner products from the symmetrization (alpha_i, alpha_j) = d_i a_ij
  auto ip = [&](const std::vector<int>& x, const std::vector<int>& y) {
    Rat acc(0);
    for (int i = 0; i < n; ++i) {
      if (x[static_cast<size_t>(i)] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (y[static_cast<size_t>(j)] == 0) continue;
        acc += Rat(x[static_cast<size_t>(i)]) * y[static_cast<size_t>(j)] *
               lens.at(vs[static_cast<size_t>(i)]) *
               s.base.cartan(vs[static_cast<size_t>(i)], vs[static_cast<size_t>(j)]);
      }
    }
    return acc;
  };

  const auto& omega = rs.highest_root;
  Rat oo = ip(omega, omega);

  int new_id = 0;
  for (int v : vs) new_id = std::max(new_id, v + 1);

  WeightedSatakeDiagram out = s;
  out.base.add_vertex(new_id);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i)] = 1;
    Rat os = ip(omega, e);
    if (os == 0) continue;
    Rat aa = Rat(2) * lens.at(vs[static_cast<size_t>(i)]);
    // cartan(i, new) = <-omega, alpha_i^v>, cartan(new, i) = <alpha_i, (-omega)^v>
    Rat a_new_i = Rat(-2) * os / aa;
    Rat a_i_new = Rat(-2) * os / oo;
    if (a_new_i.get_den() != 1 || a_i_new.get_den() != 1)
      throw bad_diagram("non-integral affine attachment");
    out.base.add_edge_cartan(vs[static_cast<size_t>(i)], new_id,
                             static_cast<int>(a_new_i.get_num().get_si()),
                             static_cast<int>(a_i_new.get_num().get_si()));
  }
  // the added vertex is white, unpaired and (at this stage) not circled
  return out;
}

WeightedSatakeDiagram descent_step(const WeightedSatakeDiagram& s0) {
  WeightedSatakeDiagram s = circled_component(s0);
  s.validate();
  if (s.empty()) return s;

  WeightedSatakeDiagram ext = extend_diagram(s);
  int new_id = 0;
  for (int v : ext.base.vertices()) new_id = std::max(new_id, v);

  // black vertices reachable from the circled vertex through black chains
  std::set<int> black_chain;
  std::deque<int> todo;
  for (int w : ext.base.neighbors(ext.circled))
    if (ext.is_black(w)) {
      black_chain.insert(w);
      todo.push_back(w);
    }
  while (!todo.empty()) {
    int v = todo.front();
    todo.pop_front();
    for (int w : ext.base.neighbors(v))
      if (ext.is_black(w) && !black_chain.count(w)) {
        black_chain.insert(w);
        todo.push_back(w);
      }
  }

  std::set<int> removed;
  removed.insert(ext.circled);
  for (int b : black_chain) removed.insert(b);
  // white vertices adjacent to the circled vertex or to the black chains
  std::set<int> whites;
  for (int w : ext.base.neighbors(ext.circled))
    if (!ext.is_black(w)) whites.insert(w);
  for (int b : black_chain)
    for (int w : ext.base.neighbors(b))
      if (!ext.is_black(w)) whites.insert(w);
  // removed whites drag their arrow partners along
  for (int w : whites) {
    removed.insert(w);
    removed.insert(ext.partner(w));
  }

  if (removed.count(new_id)) {
    // the added vertex vanished: the descent terminates here
    return WeightedSatakeDiagram{};
  }

  std::vector<int> keep;
  for (int v : ext.base.vertices())
    if (!removed.count(v)) keep.push_back(v);
  WeightedSatakeDiagram out = restrict_to(ext, keep);
  out.circled = new_id;
  out = circled_component(out);
  out.validate();
  return out;
}

std::string to_string(const OneType& t) {
  if (t.kind == OneType::Kind::B) return "B";
  return "(A," + std::to_string(t.delta) + ")";
}

namespace {

/// Recognizes the two terminal rank-1 diagrams.
std::optional<OneType> terminal_one_type(const WeightedSatakeDiagram& s) {
  const auto& vs = s.base.vertices();
  size_t n = vs.size();
  if (n == 1) {
    if (!s.is_black(vs[0]) && s.circled == vs[0])
      return OneType{OneType::Kind::A, 1};
    return std::nullopt;
  }
  if (n == 2) {
    int a = vs[0], b = vs[1];
    int other = (s.circled == a) ? b : a;
    if (s.circled != a && s.circled != b) return std::nullopt;
    if (!s.is_black(other)) return std::nullopt;
    // circled long, companion short, double bond
    if (s.base.cartan(s.circled, other) == -1 &&
        s.base.cartan(other, s.circled) == -2)
      return OneType{OneType::Kind::B, 0};
    return std::nullopt;
  }
  // chain of odd length 2*delta-1, circled white in the middle, rest black
  if (n % 2 == 0) return std::nullopt;
  std::vector<int> ends;
  for (int v : vs) {
    auto nb = s.base.neighbors(v);
    if (nb.size() > 2) return std::nullopt;
    if (nb.size() == 1) ends.push_back(v);
    for (int w : nb)
      if (s.base.cartan(v, w) != -1) return std::nullopt;
  }
  if (ends.size() != 2) return std::nullopt;
  // walk the chain
  std::vector<int> chain{ends[0]};
  std::set<int> seen{ends[0]};
  while (chain.size() < n) {
    int last = chain.back();
    bool ok = false;
    for (int w : s.base.neighbors(last))
      if (!seen.count(w)) {
        chain.push_back(w);
        seen.insert(w);
        ok = true;
        break;
      }
    if (!ok) return std::nullopt;
  }
  size_t mid = n / 2;
  for (size_t i = 0; i < n; ++i) {
    bool want_black = (i != mid);
    if (s.is_black(chain[i]) != want_black) return std::nullopt;
  }
  if (s.circled != chain[mid]) return std::nullopt;
  return OneType{OneType::Kind::A, static_cast<int>((n + 1) / 2)};
}

}  // namespace

DescentResult descent_classify(const WeightedSatakeDiagram& s0) {
  WeightedSatakeDiagram cur = circled_component(s0);
  cur.validate();
  if (cur.empty()) throw bad_diagram("cannot classify an empty diagram");

  DescentResult res;
  size_t limit = cur.base.vertices().size() + 2;
  WeightedSatakeDiagram last = cur;
  while (!cur.empty()) {
    if (res.trail.size() > limit)
      throw bad_diagram("descent does not terminate");
    last = cur;
    cur = descent_step(cur);
    res.trail.push_back(cur);
    ++res.rank;
  }
  auto t = terminal_one_type(last);
  if (!t)
    throw bad_diagram("terminal diagram is not a rank-1 Satake-Tits diagram");
  res.one_type = *t;
  return res;
}

WeightedSatakeDiagram diagram_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  WeightedSatakeDiagram s;
  for (const auto& v : j.at("vertices")) s.base.add_vertex(v.get<int>());
  for (const auto& e : j.at("edges")) {
    int mult = e.size() > 2 ? e[2].get<int>() : 1;
    int dir = e.size() > 3 ? e[3].get<int>() : 0;
    s.base.add_edge(e[0].get<int>(), e[1].get<int>(), mult, dir);
  }
  if (j.contains("color"))
    for (auto it = j["color"].begin(); it != j["color"].end(); ++it)
      if (it.value().get<std::string>() == "black")
        s.black[std::stoi(it.key())] = true;
  if (j.contains("pairing"))
    for (auto it = j["pairing"].begin(); it != j["pairing"].end(); ++it)
      s.pairing[std::stoi(it.key())] = it.value().get<int>();
  s.circled = j.at("circled").get<int>();
  s.validate();
  return s;
}

std::string diagram_to_json(const WeightedSatakeDiagram& s) {
  nlohmann::json j;
  j["vertices"] = s.base.vertices();
  auto edges = nlohmann::json::array();
  const auto& vs = s.base.vertices();
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t k = i + 1; k < vs.size(); ++k)
      if (s.base.adjacent(vs[i], vs[k])) {
        auto [mult, dir] = s.base.edge_mult_dir(vs[i], vs[k]);
        edges.push_back({vs[i], vs[k], mult, dir});
      }
  j["edges"] = edges;
  nlohmann::json color;
  for (int v : vs)
    color[std::to_string(v)] = s.is_black(v) ? "black" : "white";
  j["color"] = color;
  nlohmann::json pairing;
  for (int v : vs)
    if (s.partner(v) != v) pairing[std::to_string(v)] = s.partner(v);
  j["pairing"] = pairing;
  j["circled"] = s.circled;
  return j.dump(2);
}

}  // namespace pgo
