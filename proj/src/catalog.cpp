#include "pgo/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pgo {

const char* to_string(GType t) {
  switch (t) {
    case GType::I: return "I";
    case GType::II: return "II";
    case GType::III: return "III";
  }
  return "?";
}

GType classify_type(int ell, int e) {
  if (ell == 3) return GType::III;
  if (ell == 1 && (e == 1 || e == 2 || e == 3)) return GType::II;
  int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(ell))));
  bool square = (r * r == ell);
  if (square && (e == 0 || e == 4)) return GType::I;
  throw bad_diagram("unrecognized (ell, e) pair");
}

long dim_vplus(const GradedDescriptor& desc) {
  long k = desc.k;
  long twice = (k + 1) * (2L * desc.ell + k * desc.d);
  if (twice % 2 != 0 || twice <= 0)
    throw bad_diagram("inconsistent descriptor dimensions");
  return twice / 2;
}

// ---------------------------------------------------------------------------
// diagram builders

namespace {

WeightedSatakeDiagram chain_diagram(int n) {
  WeightedSatakeDiagram s;
  for (int i = 1; i <= n; ++i) s.base.add_vertex(i);
  for (int i = 1; i < n; ++i) s.base.add_edge(i, i + 1, 1, 0);
  return s;
}

}  // namespace

WeightedSatakeDiagram diagram_sl_split(int rank) {
  if (rank < 1) throw bad_diagram("rank must be positive");
  WeightedSatakeDiagram s = chain_diagram(2 * rank - 1);
  s.circled = rank;
  return s;
}

WeightedSatakeDiagram diagram_sl_division(int rank, int delta) {
  if (rank < 1 || delta < 1) throw bad_diagram("bad parameters");
  int n = 2 * rank * delta - 1;
  WeightedSatakeDiagram s = chain_diagram(n);
  for (int i = 1; i <= n; ++i)
    if (i % delta != 0) s.black[i] = true;
  s.circled = rank * delta;
  return s;
}

WeightedSatakeDiagram diagram_unitary(int rank) {
  if (rank < 2) throw bad_diagram("rank must be at least 2");
  int n = 2 * rank - 1;
  WeightedSatakeDiagram s = chain_diagram(n);
  for (int i = 1; i < rank; ++i) {
    s.pairing[i] = n + 1 - i;
    s.pairing[n + 1 - i] = i;
  }
  s.circled = rank;
  return s;
}

WeightedSatakeDiagram diagram_b_split(int m) {
  if (m < 3) throw bad_diagram("m must be at least 3");
  int n = m - 1;
  WeightedSatakeDiagram s;
  for (int i = 1; i <= n; ++i) s.base.add_vertex(i);
  for (int i = 1; i < n - 1; ++i) s.base.add_edge(i, i + 1, 1, 0);
  s.base.add_edge(n - 1, n, 2, +1);  // n is the short root
  s.circled = 1;
  return s;
}

WeightedSatakeDiagram diagram_b_kernel3(int m) {
  if (m < 4) throw bad_diagram("m must be at least 4");
  WeightedSatakeDiagram s = diagram_b_split(m);
  s.black[m - 1] = true;
  return s;
}

WeightedSatakeDiagram diagram_sp_split(int rank) {
  if (rank < 2) throw bad_diagram("rank must be at least 2");
  int n = rank;
  WeightedSatakeDiagram s;
  for (int i = 1; i <= n; ++i) s.base.add_vertex(i);
  for (int i = 1; i < n - 1; ++i) s.base.add_edge(i, i + 1, 1, 0);
  s.base.add_edge(n - 1, n, 2, -1);  // n is the long root
  s.circled = n;
  return s;
}

WeightedSatakeDiagram diagram_c_quaternion(int rank) {
  if (rank < 1) throw bad_diagram("rank must be positive");
  int n = 2 * rank;
  WeightedSatakeDiagram s;
  for (int i = 1; i <= n; ++i) s.base.add_vertex(i);
  for (int i = 1; i < n - 1; ++i) s.base.add_edge(i, i + 1, 1, 0);
  if (n >= 2) s.base.add_edge(n - 1, n, 2, -1);
  for (int i = 1; i <= n - 1; i += 2) s.black[i] = true;
  s.circled = n;
  return s;
}

namespace {

WeightedSatakeDiagram d_tree(int m) {
  if (m < 4) throw bad_diagram("m must be at least 4");
  WeightedSatakeDiagram s;
  for (int i = 1; i <= m; ++i) s.base.add_vertex(i);
  for (int i = 1; i < m - 2; ++i) s.base.add_edge(i, i + 1, 1, 0);
  s.base.add_edge(m - 2, m - 1, 1, 0);
  s.base.add_edge(m - 2, m, 1, 0);
  return s;
}

}  // namespace

WeightedSatakeDiagram diagram_d_split_end(int m) {
  WeightedSatakeDiagram s = d_tree(m);
  s.circled = 1;
  return s;
}

WeightedSatakeDiagram diagram_d_quasi_split(int m) {
  WeightedSatakeDiagram s = d_tree(m);
  s.pairing[m - 1] = m;
  s.pairing[m] = m - 1;
  s.circled = 1;
  return s;
}

WeightedSatakeDiagram diagram_d_kernel4(int m) {
  WeightedSatakeDiagram s = d_tree(m);
  s.black[m - 1] = true;
  s.black[m] = true;
  s.circled = 1;
  return s;
}

WeightedSatakeDiagram diagram_d_fork_tip(int n) {
  if (n < 2) throw bad_diagram("n must be at least 2");
  WeightedSatakeDiagram s = d_tree(2 * n);
  s.circled = 2 * n;
  return s;
}

WeightedSatakeDiagram diagram_d_quaternion(int n) {
  if (n < 2) throw bad_diagram("n must be at least 2");
  int m = 2 * n;
  WeightedSatakeDiagram s = d_tree(m);
  for (int i = 1; i <= m - 3; i += 2) s.black[i] = true;
  s.black[m] = true;
  s.circled = m - 1;
  return s;
}

WeightedSatakeDiagram diagram_e7_split() {
  WeightedSatakeDiagram s;
  for (int i = 1; i <= 7; ++i) s.base.add_vertex(i);
  s.base.add_edge(1, 3, 1, 0);
  s.base.add_edge(3, 4, 1, 0);
  s.base.add_edge(4, 5, 1, 0);
  s.base.add_edge(5, 6, 1, 0);
  s.base.add_edge(6, 7, 1, 0);
  s.base.add_edge(2, 4, 1, 0);
  s.circled = 7;
  return s;
}

// ---------------------------------------------------------------------------
// catalog data

#include "catalog_data.inc"

namespace {

int eval_expr(const std::string& expr, int m, int delta) {
  // supported shapes: integer literals, "2m-4", "2m-5", "delta^2",
  // "2*delta^2"
  if (expr == "delta^2") return delta * delta;
  if (expr == "2*delta^2") return 2 * delta * delta;
  auto mp = expr.find('m');
  if (mp != std::string::npos) {
    int coef = mp == 0 ? 1 : std::stoi(expr.substr(0, mp));
    int off = mp + 1 < expr.size() ? std::stoi(expr.substr(mp + 1)) : 0;
    return coef * m + off;
  }
  return std::stoi(expr);
}

OneType parse_one_type(const std::string& s, int delta) {
  if (s == "B") return OneType{OneType::Kind::B, 0};
  if (s == "A:1") return OneType{OneType::Kind::A, 1};
  if (s == "A:delta") return OneType{OneType::Kind::A, delta};
  throw bad_diagram("bad one_type in catalog: " + s);
}

GType parse_gtype(const std::string& s) {
  if (s == "I") return GType::I;
  if (s == "II") return GType::II;
  if (s == "III") return GType::III;
  throw bad_diagram("bad type in catalog: " + s);
}

/// Structural summary of the underlying graph.
struct Shape {
  enum Kind { Single, Chain, Fork, Other } kind = Other;
  std::vector<int> chain;          // Chain: ordered vertices
  int fork = -1;                   // Fork: the degree-3 vertex
  std::vector<std::vector<int>> branches;  // Fork: paths from fork, excl. fork
};

Shape analyze(const DynkinDiagram& d) {
  Shape sh;
  const auto& vs = d.vertices();
  if (vs.empty()) return sh;
  if (!d.connected()) return sh;
  if (vs.size() == 1) {
    sh.kind = Shape::Single;
    sh.chain = {vs[0]};
    return sh;
  }
  std::vector<int> deg3, deg1;
  for (int v : vs) {
    size_t deg = d.neighbors(v).size();
    if (deg > 3) return sh;
    if (deg == 3) deg3.push_back(v);
    if (deg == 1) deg1.push_back(v);
  }
  auto walk = [&](int from, int through) {
    std::vector<int> path{through};
    int prev = from, cur = through;
    while (true) {
      auto nb = d.neighbors(cur);
      int nxt = -1;
      for (int w : nb)
        if (w != prev) nxt = w;
      if (nxt < 0 || nb.size() > 2) break;
      path.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    return path;
  };
  if (deg3.empty()) {
    if (deg1.size() != 2) return sh;
    sh.kind = Shape::Chain;
    sh.chain = walk(-1, deg1[0]);
    if (sh.chain.size() != vs.size()) return Shape{};
    return sh;
  }
  if (deg3.size() == 1) {
    sh.kind = Shape::Fork;
    sh.fork = deg3[0];
    for (int w : d.neighbors(sh.fork)) sh.branches.push_back(walk(sh.fork, w));
    size_t tot = 1;
    for (auto& b : sh.branches) tot += b.size();
    if (tot != vs.size()) return Shape{};
    std::sort(sh.branches.begin(), sh.branches.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return sh;
  }
  return sh;
}

bool all_single_bonds(const DynkinDiagram& d) {
  const auto& vs = d.vertices();
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (d.adjacent(vs[i], vs[j]) &&
          (d.cartan(vs[i], vs[j]) != -1 || d.cartan(vs[j], vs[i]) != -1))
        return false;
  return true;
}

bool no_pairing(const WeightedSatakeDiagram& s) {
  for (const auto& [a, b] : s.pairing)
    if (a != b) return false;
  return true;
}

bool all_white(const WeightedSatakeDiagram& s) {
  for (int v : s.base.vertices())
    if (s.is_black(v)) return false;
  return true;
}

struct Match {
  std::string case_id;
  int k;
  int size_param;  // family parameter (n, m or delta)
  int delta = 1;
  int expected_rank;
  OneType expected_one_type;
};

/// Recognizes a catalog family from the diagram shape.
std::optional<Match> match_shape(const WeightedSatakeDiagram& s) {
  Shape sh = analyze(s.base);
  int n = static_cast<int>(s.base.vertices().size());

  if (sh.kind == Shape::Single) {
    if (s.circled != sh.chain[0] || s.is_black(sh.chain[0])) return std::nullopt;
    return Match{"1", 0, 1, 1, 1, OneType{OneType::Kind::A, 1}};
  }

  if (sh.kind == Shape::Chain) {
    auto& ch = sh.chain;
    auto pos_of = [&](int v) {
      return static_cast<int>(std::find(ch.begin(), ch.end(), v) - ch.begin());
    };
    // collect bond types along the chain
    std::vector<std::pair<int, int>> bonds;  // cartan pairs along the chain
    for (int i = 0; i + 1 < n; ++i)
      bonds.push_back({s.base.cartan(ch[static_cast<size_t>(i)], ch[static_cast<size_t>(i) + 1]),
                       s.base.cartan(ch[static_cast<size_t>(i) + 1], ch[static_cast<size_t>(i)])});
    int n_double = 0, double_at = -1;
    for (int i = 0; i + 1 < n; ++i) {
      auto [a, b] = bonds[static_cast<size_t>(i)];
      if (a == -1 && b == -1) continue;
      if ((a == -1 && b == -2) || (a == -2 && b == -1)) {
        ++n_double;
        double_at = i;
      } else {
        return std::nullopt;  // triple bonds and beyond are not in the table
      }
    }

    if (n_double == 0) {
      // A-type chain
      if (!no_pairing(s)) {
        // quasi-split unitary: reversal pairing, middle circled
        if (n % 2 == 0 || !all_white(s)) return std::nullopt;
        int rank = (n + 1) / 2;
        for (int i = 0; i < n; ++i)
          if (i != rank - 1 &&
              s.partner(ch[static_cast<size_t>(i)]) != ch[static_cast<size_t>(n - 1 - i)])
            return std::nullopt;
        if (s.circled != ch[static_cast<size_t>(rank - 1)]) return std::nullopt;
        return Match{"2", rank - 1, rank, 1, rank, OneType{OneType::Kind::A, 1}};
      }
      // inner A-type: whites at every delta-th position
      int first_white = -1;
      for (int i = 0; i < n; ++i)
        if (!s.is_black(ch[static_cast<size_t>(i)])) {
          first_white = i + 1;
          break;
        }
      if (first_white < 0) return std::nullopt;
      int delta = first_white;
      if ((n + 1) % (2 * delta) != 0) return std::nullopt;
      int rank = (n + 1) / (2 * delta);
      for (int i = 1; i <= n; ++i) {
        bool white = (i % delta == 0);
        if (s.is_black(ch[static_cast<size_t>(i - 1)]) == white) return std::nullopt;
      }
      if (s.circled != ch[static_cast<size_t>(rank * delta - 1)]) return std::nullopt;
      return Match{"1", rank - 1, rank, delta, rank,
                   OneType{OneType::Kind::A, delta}};
    }

    if (n_double != 1) return std::nullopt;
    if (!no_pairing(s)) return std::nullopt;
    // orient the chain so the double bond touches the last vertex
    if (double_at == 0) {
      std::reverse(ch.begin(), ch.end());
      double_at = n - 2;
    }
    if (double_at != n - 2) return std::nullopt;
    int last = ch[static_cast<size_t>(n - 1)];
    int prev = ch[static_cast<size_t>(n - 2)];
    bool last_long = (s.base.cartan(last, prev) == -1);

    if (n == 2) {
      // B2 = C2: the circled vertex must be the long one
      int lng = last_long ? last : prev;
      int sht = last_long ? prev : last;
      if (s.circled != lng || s.is_black(lng)) return std::nullopt;
      if (!s.is_black(sht))
        return Match{"6", 1, 2, 1, 2, OneType{OneType::Kind::A, 1}};
      return Match{"7", 0, 1, 1, 1, OneType{OneType::Kind::B, 0}};
    }

    if (!last_long) {
      // B-type: short root at the chain end; circled at the opposite end
      if (s.circled != ch[0] || s.is_black(ch[0])) return std::nullopt;
      int m = n + 1;  // diagram B_{m-1}
      bool tail_black = s.is_black(last);
      for (int i = 0; i + 1 < n; ++i)
        if (s.is_black(ch[static_cast<size_t>(i)])) return std::nullopt;
      if (!tail_black)
        return Match{"3", 1, m, 1, 2, OneType{OneType::Kind::A, 1}};
      return Match{"4", 1, m, 1, 2, OneType{OneType::Kind::A, 1}};
    }

    // C-type: long root at the chain end; circled there
    if (s.circled != last || s.is_black(last)) return std::nullopt;
    if (all_white(s))
      return Match{"6", n - 1, n, 1, n, OneType{OneType::Kind::A, 1}};
    // quaternionic C: black at odd positions (from the short end)
    if (n % 2 != 0) return std::nullopt;
    for (int i = 1; i <= n; ++i) {
      bool want_black = (i % 2 == 1);
      if (s.is_black(ch[static_cast<size_t>(i - 1)]) != want_black)
        return std::nullopt;
    }
    int rank = n / 2;
    std::string case_id = (rank == 2) ? "5" : "7";
    return Match{case_id, rank - 1, rank, 1, rank, OneType{OneType::Kind::B, 0}};
  }

  if (sh.kind == Shape::Fork) {
    if (!all_single_bonds(s.base)) return std::nullopt;
    auto& br = sh.branches;
    if (br.size() != 3) return std::nullopt;
    size_t l0 = br[0].size(), l1 = br[1].size(), l2 = br[2].size();

    if (l0 == 1 && l1 == 2 && l2 == 3) {
      // E7 shape
      if (!all_white(s) || !no_pairing(s)) return std::nullopt;
      if (s.circled != br[2].back()) return std::nullopt;
      return Match{"13", 2, 7, 1, 3, OneType{OneType::Kind::A, 1}};
    }
    if (l0 != 1 || l1 != 1) return std::nullopt;

    int tip1 = br[0][0], tip2 = br[1][0];
    std::vector<int> long_branch = br[2];  // fork -> chain end (may be empty for D4? no: l2 >= 1)
    int chain_end = long_branch.back();
    int m = n;

    bool tips_paired = (s.partner(tip1) == tip2 && tip1 != tip2);
    bool tip1_black = s.is_black(tip1), tip2_black = s.is_black(tip2);

    if (l2 == 1) {
      // D4: three equivalent outer vertices tip1, tip2, chain_end
      std::array<int, 3> outer{tip1, tip2, chain_end};
      if (std::find(outer.begin(), outer.end(), s.circled) == outer.end())
        return std::nullopt;
      std::vector<int> others;
      for (int v : outer)
        if (v != s.circled) others.push_back(v);
      if (s.is_black(s.circled) || s.is_black(sh.fork)) return std::nullopt;
      bool ob0 = s.is_black(others[0]), ob1 = s.is_black(others[1]);
      bool paired = (s.partner(others[0]) == others[1]);
      if (!ob0 && !ob1 && no_pairing(s))
        return Match{"8", 1, 4, 1, 2, OneType{OneType::Kind::A, 1}};
      if (!ob0 && !ob1 && paired)
        return Match{"9", 1, 4, 1, 2, OneType{OneType::Kind::A, 1}};
      if (ob0 && ob1)
        return Match{"10", 1, 4, 1, 2, OneType{OneType::Kind::A, 1}};
      return std::nullopt;
    }

    if (s.circled == chain_end) {
      for (int v : long_branch)
        if (s.is_black(v)) return std::nullopt;
      if (s.is_black(sh.fork)) return std::nullopt;
      if (!tip1_black && !tip2_black && no_pairing(s))
        return Match{"8", 1, m, 1, 2, OneType{OneType::Kind::A, 1}};
      if (!tip1_black && !tip2_black && tips_paired)
        return Match{"9", 1, m, 1, 2, OneType{OneType::Kind::A, 1}};
      if (tip1_black && tip2_black && no_pairing(s))
        return Match{"10", 1, m, 1, 2, OneType{OneType::Kind::A, 1}};
      return std::nullopt;
    }

    if (s.circled == tip1 || s.circled == tip2) {
      if (m % 2 != 0) return std::nullopt;
      int rank = m / 2;
      int other_tip = (s.circled == tip1) ? tip2 : tip1;
      if (all_white(s) && no_pairing(s))
        return Match{"11", rank - 1, rank, 1, rank, OneType{OneType::Kind::A, 1}};
      // quaternionic D: odd chain positions black (from the chain end) and
      // the other tip black
      if (!no_pairing(s)) return std::nullopt;
      if (!s.is_black(other_tip) || s.is_black(s.circled)) return std::nullopt;
      std::vector<int> from_end(long_branch.rbegin(), long_branch.rend());
      from_end.push_back(sh.fork);  // positions 1 .. m-2
      for (size_t i = 0; i < from_end.size(); ++i) {
        bool want_black = ((i + 1) % 2 == 1) && (i + 1 <= from_end.size() - 1);
        if (s.is_black(from_end[i]) != want_black) return std::nullopt;
      }
      return Match{"12", rank - 1, rank, 1, rank, OneType{OneType::Kind::A, 1}};
    }
    return std::nullopt;
  }

  return std::nullopt;
}

}  // namespace

Catalog Catalog::load_text(const std::string& json_text) {
  Catalog cat;
  nlohmann::json j = nlohmann::json::parse(json_text);
  for (const auto& r : j.at("rows")) {
    Row row;
    row.case_id = r.at("case").get<std::string>();
    row.name = r.value("name", "");
    row.ell_expr = r.at("ell").get<std::string>();
    row.d_expr = r.at("d").get<std::string>();
    row.e_expr = r.at("e").get<std::string>();
    row.type = r.at("type").get<std::string>();
    row.one_type = r.at("one_type").get<std::string>();
    row.source = r.value("source", "tabulated");
    row.realization = r.value("realization", "");
    row.notes = r.value("notes", "");
    cat.rows_.push_back(row);
  }
  return cat;
}

Catalog Catalog::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bad_diagram("cannot open catalog file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_text(ss.str());
}

Catalog Catalog::load_default() { return load_text(kCatalogJson); }

const Catalog::Row& Catalog::row(const std::string& case_id) const {
  for (const auto& r : rows_)
    if (r.case_id == case_id) return r;
  throw bad_diagram("no catalog row " + case_id);
}

GradedDescriptor Catalog::lookup(const WeightedSatakeDiagram& s) const {
  s.validate();
  auto m = match_shape(s);
  if (!m) throw bad_diagram("not a regular parabolic commutative grading");
  const Row& row = this->row(m->case_id);

  GradedDescriptor desc;
  desc.case_id = m->case_id;
  desc.k = m->k;
  desc.size_param = m->size_param;
  desc.ell = eval_expr(row.ell_expr, m->size_param, m->delta);
  desc.d = eval_expr(row.d_expr, m->size_param, m->delta);
  desc.e = eval_expr(row.e_expr, m->size_param, m->delta);
  desc.one_type = parse_one_type(row.one_type, m->delta);
  desc.gtype = parse_gtype(row.type);
  desc.source = row.source;
  desc.realization_tag = row.realization;
  if (desc.realization_tag == "gl" && m->delta != 1) desc.realization_tag = "";
  if (desc.case_id == "7" && desc.k == 0) desc.realization_tag = "ortho1";

  // consistency: the declared type must follow from (ell, e)
  if (classify_type(desc.ell, desc.e) != desc.gtype)
    throw bad_diagram("catalog row type inconsistent with (ell, e)");

  // cross-check rank and 1-type against the descent algorithm
  DescentResult dr = descent_classify(s);
  if (dr.rank != m->expected_rank || dr.rank != desc.k + 1)
    throw bad_diagram("descent rank disagrees with the catalog");
  if (!(dr.one_type == desc.one_type))
    throw bad_diagram("descent 1-type disagrees with the catalog");
  return desc;
}

}  // namespace pgo
