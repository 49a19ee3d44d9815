// Command-line front end: classification of weighted Satake-Tits diagrams,
// p-adic quadratic form invariants, orbit enumeration in the matrix models
// and evaluation of the fundamental relative invariants.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pgo/acceptance.hpp"
#include "pgo/catalog.hpp"
#include "pgo/oracle.hpp"
#include "pgo/orbits.hpp"
#include "pgo/realization.hpp"

using namespace pgo;
using nlohmann::json;

namespace {

unsigned long default_prime() {
  if (const char* env = std::getenv("PGO_PRIME")) {
    unsigned long p = std::strtoul(env, nullptr, 10);
    if (p >= 3) return p;
  }
  return 5;
}

Rat parse_rat_token(const PadicContext& F, std::string tok) {
  bool neg = false;
  if (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) {
    neg = tok[0] == '-';
    tok = tok.substr(1);
  }
  Rat v;
  if (tok == "1")
    v = Rat(1);
  else if (tok == "u")
    v = F.u();
  else if (tok == "pi")
    v = F.pi();
  else if (tok == "upi")
    v = F.u() * F.pi();
  else
    v = Rat(tok);  // plain rational literal, e.g. "3" or "3/4"
  v.canonicalize();
  return neg ? -v : v;
}

Rat json_to_rat(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    Rat v(j.get<std::string>());
    v.canonicalize();
    return v;
  }
  throw bad_scalar("rational entries must be integers or strings");
}

json rat_to_json(const Rat& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

struct MatrixInput {
  RealTag tag;
  unsigned long prime;
  Realization::VElem elem;
  int rank;
};

MatrixInput load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bad_scalar("cannot open matrix file: " + path);
  json j = json::parse(in);
  auto tag = real_tag_from_string(j.at("tag").get<std::string>());
  if (!tag) throw bad_scalar("unknown realization tag");
  unsigned long prime = j.value("prime", 5UL);
  const auto& rows = j.at("entries");
  int nr = static_cast<int>(rows.size());
  int rank;
  if (*tag == RealTag::ORTHO1)
    rank = 1;
  else if (*tag == RealTag::TYPE3)
    rank = nr / 2;
  else
    rank = nr;
  Realization real(*tag, rank, prime);
  MatrixInput mi{*tag, prime, real.zero_vplus(), rank};
  bool ext = (*tag == RealTag::UNITARY || *tag == RealTag::TYPE3);
  if (*tag == RealTag::ORTHO1) {
    if (nr != 3) throw bad_scalar("the rank-1 model takes a 3-vector");
    for (int i = 0; i < 3; ++i)
      mi.elem.q(i, 0) = json_to_rat(rows[static_cast<size_t>(i)].is_array()
                                        ? rows[static_cast<size_t>(i)][0]
                                        : rows[static_cast<size_t>(i)]);
    return mi;
  }
  PadicContext F(prime);
  for (int i = 0; i < nr; ++i) {
    const auto& row = rows[static_cast<size_t>(i)];
    if (static_cast<int>(row.size()) != nr)
      throw bad_scalar("matrix must be square");
    for (int k2 = 0; k2 < nr; ++k2) {
      const auto& cell = row[static_cast<size_t>(k2)];
      if (ext) {
        if (cell.is_array()) {
          if (cell.size() != 2) throw bad_scalar("E-entries are [re, im] pairs");
          mi.elem.e(i, k2) = Ext(json_to_rat(cell[0]), json_to_rat(cell[1]), F.u());
        } else {
          mi.elem.e(i, k2) = Ext(json_to_rat(cell), Rat(0), F.u());
        }
      } else {
        mi.elem.q(i, k2) = json_to_rat(cell);
      }
    }
  }
  Realization check(*tag, rank, prime);
  if (!check.is_vplus(mi.elem))
    throw bad_scalar("the matrix violates the model symmetry conditions");
  return mi;
}

json descriptor_to_json(const GradedDescriptor& d) {
  json out;
  out["case"] = d.case_id;
  out["rank"] = d.k + 1;
  out["k"] = d.k;
  out["ell"] = d.ell;
  out["d"] = d.d;
  out["e"] = d.e;
  out["kappa"] = d.kappa();
  out["one_type"] = to_string(d.one_type);
  out["type"] = to_string(d.gtype);
  out["dim_vplus"] = dim_vplus(d);
  if (!d.realization_tag.empty()) out["realization"] = d.realization_tag;
  out["source"] = d.source;
  return out;
}

json summary_to_json(const GradedDescriptor& d) {
  json out;
  OrbitSummary s = orbit_summary(d);
  if (s.nonzero_orbits.has_value()) {
    out["nonzero_orbits"] = *s.nonzero_orbits;
    out["orbits_with_zero"] = *s.nonzero_orbits + 1;
  }
  out["open_orbits"] = s.open_orbits;
  out["chi0_image"] = to_string(s.chi0_image);
  out["p_open_orbits"] = s.p_open_orbits;
  CharacterData cd = character_data(d);
  out["degrees"] = cd.degrees;
  out["a_exponents"] = cd.a_exponents;
  out["a_exponents_minus"] = cd.a_exponents_minus;
  return out;
}

void print_table(std::ostream& os, const json& j, int indent = 0) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    os << std::string(static_cast<size_t>(indent), ' ') << it.key() << ": ";
    if (it.value().is_object()) {
      os << "\n";
      print_table(os, it.value(), indent + 2);
    } else {
      os << it.value().dump() << "\n";
    }
  }
}

void emit(const json& j, bool table) {
  if (table)
    print_table(std::cout, j);
  else
    std::cout << j.dump(2) << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regular graded Lie algebras over Q_p: classification, "
               "orbits and relative invariants"};
  app.require_subcommand(1);
  app.fallthrough();

  unsigned long prime = default_prime();
  bool table = false;
  bool json_out = false;
  std::string catalog_path;
  app.add_option("--prime", prime, "odd prime p (default 5, env PGO_PRIME)");
  app.add_flag("--table", table, "human-readable output instead of JSON");
  app.add_flag("--json", json_out, "JSON output (the default)");
  app.add_option("--catalog", catalog_path, "catalog data file override");

  // classify
  auto* classify = app.add_subcommand("classify", "classify a diagram file");
  classify->fallthrough();
  std::string diagram_path;
  classify->add_option("--diagram", diagram_path, "diagram JSON file")
      ->required();

  // qform classify
  auto* qform_cmd = app.add_subcommand("qform", "quadratic form utilities");
  qform_cmd->fallthrough();
  qform_cmd->require_subcommand(1);
  auto* qform_classify = qform_cmd->add_subcommand("classify",
                                                   "invariants of a form");
  qform_classify->fallthrough();
  std::string coeffs;
  qform_classify->add_option("--coeffs", coeffs,
                             "comma list: 1,u,pi,upi or rationals")
      ->required();

  // orbit classify / enumerate
  auto* orbit = app.add_subcommand("orbit", "orbit computations");
  orbit->fallthrough();
  orbit->require_subcommand(1);
  auto* orbit_classify = orbit->add_subcommand("classify",
                                               "orbit invariant of a matrix");
  orbit_classify->fallthrough();
  std::string matrix_path;
  orbit_classify->add_option("--matrix", matrix_path, "matrix JSON file")
      ->required();
  auto* orbit_enum = orbit->add_subcommand("enumerate",
                                           "orbit classes of a model");
  orbit_enum->fallthrough();
  std::string tag_name = "sp";
  int rank_n = 2;
  orbit_enum->add_option("--tag", tag_name, "gl|sp|unitary|type3|ortho1");
  orbit_enum->add_option("--n", rank_n, "rank of the model");

  // invariants eval / psi-check
  auto* inv = app.add_subcommand("invariants", "relative invariants");
  inv->fallthrough();
  inv->require_subcommand(1);
  auto* inv_eval = inv->add_subcommand("eval", "evaluate delta_j on a matrix");
  inv_eval->fallthrough();
  std::string inv_matrix;
  inv_eval->add_option("--matrix", inv_matrix, "matrix JSON file")->required();
  auto* inv_psi = inv->add_subcommand("psi-check",
                                      "verify the psi/nabla identities");
  inv_psi->fallthrough();
  std::string psi_tag = "sp";
  int psi_n = 3;
  int psi_count = 100;
  unsigned long seed = 1;
  inv_psi->add_option("--tag", psi_tag, "model tag");
  inv_psi->add_option("--n", psi_n, "rank");
  inv_psi->add_option("--count", psi_count, "number of random samples");
  inv_psi->add_option("--seed", seed, "random seed");

  // selftest
  auto* selftest = app.add_subcommand("selftest",
                                      "run the full verification suite");
  selftest->fallthrough();
  unsigned long second = 13;
  selftest->add_option("--second-prime", second,
                       "prime for the independence check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage error
  }
  if (json_out) table = false;

  try {
    if (classify->parsed()) {
      std::ifstream in(diagram_path);
      if (!in) throw bad_scalar("cannot open diagram file: " + diagram_path);
      std::stringstream ss;
      ss << in.rdbuf();
      WeightedSatakeDiagram s = diagram_from_json(ss.str());
      Catalog cat = catalog_path.empty() ? Catalog::load_default()
                                         : Catalog::load_file(catalog_path);
      GradedDescriptor d = cat.lookup(s);
      json out;
      out["descriptor"] = descriptor_to_json(d);
      out["orbits"] = summary_to_json(d);
      DescentResult dr = descent_classify(s);
      out["descent"] = {{"rank", dr.rank}, {"one_type", to_string(dr.one_type)}};
      emit(out, table);
      return 0;
    }

    if (qform_classify->parsed()) {
      PadicContext F(prime);
      QForm q;
      std::stringstream ss(coeffs);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        Rat v = parse_rat_token(F, tok);
        if (v == 0)
          ++q.radical_dim;
        else
          q.coeffs.push_back(v);
      }
      if (q.rank() == 0) throw bad_scalar("the form must have a nonzero part");
      WittData w = witt_decompose(F, q);
      json out;
      out["prime"] = prime;
      out["rank"] = q.rank();
      out["radical_dim"] = q.radical_dim;
      out["disc"] = to_string(discriminant(F, q));
      out["hasse"] = hasse_invariant(F, q);
      out["isotropic"] = is_isotropic(F, q);
      out["witt_index"] = w.witt_index;
      json kern = json::array();
      for (const Rat& c : w.anisotropic_kernel.coeffs) kern.push_back(rat_to_json(c));
      out["anisotropic_kernel"] = kern;
      out["similarity_class_id"] = similarity_class_id(F, q);
      emit(out, table);
      return 0;
    }

    if (orbit_classify->parsed()) {
      MatrixInput mi = load_matrix(matrix_path);
      Realization real(mi.tag, mi.rank, mi.prime);
      auto oi = real.orbit_invariants(mi.elem);
      json out;
      out["tag"] = to_string(mi.tag);
      out["rank"] = oi.m;
      out["invariant"] = oi.payload;
      out["description"] = oi.to_string();
      emit(out, table);
      return 0;
    }

    if (orbit_enum->parsed()) {
      auto tag = real_tag_from_string(tag_name);
      if (!tag) throw bad_scalar("unknown tag: " + tag_name);
      Realization real(*tag, *tag == RealTag::ORTHO1 ? 1 : rank_n, prime);
      auto classes = real.enumerate_orbit_classes();
      json out;
      out["tag"] = tag_name;
      out["n"] = rank_n;
      out["prime"] = prime;
      out["nonzero_classes"] = classes.size();
      json list = json::array();
      for (const auto& c : classes) {
        json e;
        e["rank"] = c.m;
        e["invariant"] = c.payload;
        list.push_back(e);
      }
      out["classes"] = list;
      try {
        out["closed_form_nonzero"] = nonzero_orbit_count(real.descriptor());
      } catch (const bad_diagram&) {
        out["closed_form_nonzero"] = nullptr;
      }
      out["open_orbits"] = open_orbit_count(real.descriptor());
      emit(out, table);
      return 0;
    }

    if (inv_eval->parsed()) {
      MatrixInput mi = load_matrix(inv_matrix);
      Realization real(mi.tag, mi.rank, mi.prime);
      json out;
      out["tag"] = to_string(mi.tag);
      json deltas = json::array();
      for (int j = 0; j <= real.k(); ++j)
        deltas.push_back(rat_to_json(real.delta(j, mi.elem)));
      out["delta"] = deltas;
      Rat d0 = real.delta(0, mi.elem);
      out["generic"] = (d0 != 0);
      bool in_open = true;
      for (int j = 0; j <= real.k(); ++j)
        if (real.delta(j, mi.elem) == 0) in_open = false;
      if (in_open) {
        out["p_orbit_class"] = real.p_orbit_class(mi.elem);
      }
      emit(out, table);
      return 0;
    }

    if (inv_psi->parsed()) {
      auto tag = real_tag_from_string(psi_tag);
      if (!tag || *tag == RealTag::ORTHO1)
        throw bad_scalar("psi-check needs a matrix model tag");
      Realization real(*tag, psi_n, prime);
      Rng rng(seed);
      int ok = 0;
      for (int t = 0; t < psi_count; ++t) {
        auto x = real.random_generic(rng);
        if (!real.psi_triple_ok(x)) break;
        auto y = real.psi(x);
        Rat d0 = real.delta(0, x);
        if (*tag != RealTag::GL) {
          if (real.nabla(0, y) * d0 != Rat(1)) break;
          bool good = true;
          for (int j = 1; j <= real.k(); ++j)
            if (real.nabla(j, y) * d0 != real.delta(real.k() + 1 - j, x))
              good = false;
          if (!good) break;
        }
        ++ok;
      }
      json out;
      out["tag"] = psi_tag;
      out["n"] = psi_n;
      out["samples"] = psi_count;
      out["verified"] = ok;
      out["ok"] = ok == psi_count;
      emit(out, table);
      return ok == psi_count ? 0 : 1;
    }

    if (selftest->parsed()) {
      AcceptanceReport r = run_acceptance(std::cout, prime, second);
      return r.ok() ? 0 : 1;
    }
  } catch (const bad_scalar& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const bad_diagram& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const singular_matrix& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
