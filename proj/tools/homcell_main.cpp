// Batch CLI over the homcell library: parse JSON documents, run one
// computation or decision per process, emit one canonical JSON line.
//
// Exit codes: 0 computed / yes / true; 1 no / false; 2 unknown;
// 3 input or schema error; 4 internal invariant violation (including
// --verify disagreement with an oracle).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "homcell/json_io.hpp"
#include "homcell/oracles.hpp"

using namespace homcell;
using jsonio::json;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const std::exception& e) {
    throw SchemaError("invalid JSON in " + path + ": " + e.what());
  }
}

Object load_object(const std::string& path) {
  return jsonio::parse_object_document(load_json(path));
}

FreeComplex load_complex(const std::string& path) {
  json j = load_json(path);
  if (!j.is_object() || !j.contains("complex"))
    throw SchemaError(path + ": expected a complex document");
  return jsonio::parse_complex(j.at("complex"));
}

ChainMap load_map(const std::string& path) {
  json j = load_json(path);
  if (!j.is_object() || !j.contains("map"))
    throw SchemaError(path + ": expected a map document");
  return jsonio::parse_chain_map(j.at("map"));
}

std::vector<Object> load_objects(const std::vector<std::string>& paths) {
  std::vector<Object> out;
  for (const auto& p : paths) out.push_back(load_object(p));
  return out;
}

struct Output {
  std::string path;  // empty = stdout
  void emit(const json& doc) const {
    std::string line = jsonio::canonical_dump(doc) + "\n";
    if (path.empty()) {
      std::cout << line;
    } else {
      std::ofstream out(path, std::ios::binary);
      if (!out) throw SchemaError("cannot write file: " + path);
      out << line;
    }
  }
};

bool oracle_applicable(const FreeComplex& x) {
  if (x.ring().is_integers() || x.ring().modulus() > 9) return false;
  for (std::size_t r : x.ranks())
    if (r > 3) return false;
  return true;
}

int run(int argc, char** argv) {
  CLI::App app{"decision engine for cellular and acyclic relations between "
               "finite chain complexes over Z and Z/n"};
  app.require_subcommand(1);

  std::string x_path, y_path, out_path, phi_path, primes_path, cert_path;
  std::string op_kind;
  std::vector<std::string> gens_paths, map_paths, a_paths, b_paths;
  int shift = 0;
  bool verify = false;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", out_path, "write the result document here");
  };

  auto* cmd_homology = app.add_subcommand("homology", "homology of an object");
  cmd_homology->add_option("--x", x_path)->required();
  cmd_homology->add_flag("--verify", verify);
  add_output(cmd_homology);

  auto* cmd_snf = app.add_subcommand("snf", "Smith normal form of a matrix");
  cmd_snf->add_option("--x", x_path)->required();
  cmd_snf->add_flag("--verify", verify);
  add_output(cmd_snf);

  auto* cmd_support = app.add_subcommand("support", "support of an object");
  cmd_support->add_option("--x", x_path)->required();
  add_output(cmd_support);

  auto* cmd_op = app.add_subcommand("op", "complex constructions");
  cmd_op->add_option("kind", op_kind, "cone|sum|suspend|tensor|hocolim")
      ->required();
  cmd_op->add_option("--x", x_path);
  cmd_op->add_option("--y", y_path);
  cmd_op->add_option("--map", map_paths);
  cmd_op->add_option("--gens", gens_paths);
  cmd_op->add_option("--shift", shift);
  add_output(cmd_op);

  auto* cmd_acyclic = app.add_subcommand("decide-acyclic", "is Y X-acyclic");
  cmd_acyclic->add_option("--y", y_path)->required();
  cmd_acyclic->add_option("--x", x_path);
  cmd_acyclic->add_option("--gens", gens_paths);
  add_output(cmd_acyclic);

  auto* cmd_cellular = app.add_subcommand("decide-cellular", "is Y X-cellular");
  cmd_cellular->add_option("--y", y_path)->required();
  cmd_cellular->add_option("--x", x_path)->required();
  cmd_cellular->add_option("--map", map_paths, "optional chain map hint x->y");
  cmd_cellular->add_flag("--verify", verify);
  add_output(cmd_cellular);

  auto* cmd_phi = app.add_subcommand("phi", "phi-invariant of generators");
  cmd_phi->add_option("--gens", gens_paths)->required();
  add_output(cmd_phi);

  auto* cmd_compare = app.add_subcommand("compare-classes",
                                         "equality of acyclic classes");
  cmd_compare->add_option("--a", a_paths)->required();
  cmd_compare->add_option("--b", b_paths)->required();
  add_output(cmd_compare);

  auto* cmd_member = app.add_subcommand("member", "membership in A'_phi");
  cmd_member->add_option("--x", x_path)->required();
  cmd_member->add_option("--phi", phi_path)->required();
  add_output(cmd_member);

  auto* cmd_loc = app.add_subcommand("localizing-member",
                                     "membership in a localizing class");
  cmd_loc->add_option("--x", x_path)->required();
  cmd_loc->add_option("--primes", primes_path)->required();
  add_output(cmd_loc);

  auto* cmd_vcert = app.add_subcommand("verify-cert", "re-check a certificate");
  cmd_vcert->add_option("--cert", cert_path)->required();
  cmd_vcert->add_option("--y", y_path)->required();
  cmd_vcert->add_option("--x", x_path)->required();
  add_output(cmd_vcert);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::exit(app.exit(e));
    }
    throw SchemaError(e.what());
  }
  Output out{out_path};

  if (cmd_homology->parsed()) {
    Object obj = load_object(x_path);
    HomologyObject h = to_homology(obj);
    if (verify && std::holds_alternative<FreeComplex>(obj)) {
      const FreeComplex& x = std::get<FreeComplex>(obj);
      if (oracle_applicable(x)) {
        if (!h.is_isomorphic_to(oracle_homology_enum(x)))
          throw InvariantViolation("homology disagrees with enumeration oracle");
      } else {
        std::cerr << "note: enumeration oracle not applicable, skipped\n";
      }
    }
    out.emit(json{{"homology", jsonio::encode_homology_object(h)}});
    return 0;
  }

  if (cmd_snf->parsed()) {
    IntMatrix a = jsonio::parse_matrix(load_json(x_path));
    SNFResult r = snf(a);
    if (verify) {
      if (std::min(a.rows(), a.cols()) <= 5) {
        std::vector<Int> minors = oracle_snf_minors(a);
        Int prod = 1;
        for (std::size_t k = 0; k < minors.size(); ++k) {
          prod = (r.diag[k] == 0) ? Int(0) : Int(prod * r.diag[k]);
          if (prod != minors[k])
            throw InvariantViolation("snf disagrees with minors oracle");
        }
      } else {
        std::cerr << "note: minors oracle not applicable, skipped\n";
      }
    }
    json diag = json::array();
    for (const Int& d : r.diag) diag.push_back(jsonio::encode_int(d));
    out.emit(json{{"snf", json{{"diag", std::move(diag)},
                               {"u", jsonio::encode_matrix(r.u)},
                               {"s", jsonio::encode_matrix(r.s)},
                               {"v", jsonio::encode_matrix(r.v)}}}});
    return 0;
  }

  if (cmd_support->parsed()) {
    json doc = load_json(x_path);
    SuppSet s = [&] {
      if (doc.is_object() && doc.contains("module")) {
        return jsonio::parse_module(doc.at("module")).support();
      }
      HomologyObject h = to_homology(jsonio::parse_object_document(doc));
      SuppSet total = SuppSet::empty(h.ring());
      for (const auto& [k, m] : h.summands())
        total = supp_union(total, m.support());
      return total;
    }();
    out.emit(jsonio::encode_supp(s));
    return 0;
  }

  if (cmd_op->parsed()) {
    FreeComplex result = [&]() -> FreeComplex {
      if (op_kind == "cone") {
        if (map_paths.size() != 1)
          throw SchemaError("op cone needs exactly one --map");
        return cone(load_map(map_paths[0])).complex;
      }
      if (op_kind == "sum") {
        if (gens_paths.empty()) throw SchemaError("op sum needs --gens");
        std::vector<FreeComplex> xs;
        for (const auto& p : gens_paths) xs.push_back(load_complex(p));
        return direct_sum(xs);
      }
      if (op_kind == "suspend") {
        if (x_path.empty()) throw SchemaError("op suspend needs --x");
        return suspend(load_complex(x_path), shift);
      }
      if (op_kind == "tensor") {
        if (x_path.empty() || y_path.empty())
          throw SchemaError("op tensor needs --x and --y");
        return tensor(load_complex(x_path), load_complex(y_path));
      }
      if (op_kind == "hocolim") {
        std::vector<ChainMap> maps;
        for (const auto& p : map_paths) maps.push_back(load_map(p));
        if (!maps.empty()) return hocolim(maps.front().source(), maps);
        if (x_path.empty())
          throw SchemaError("op hocolim needs --map chain or --x");
        return hocolim(load_complex(x_path), {});
      }
      throw SchemaError("unknown op kind: " + op_kind);
    }();
    out.emit(json{{"complex", jsonio::encode_complex(result)}});
    return 0;
  }

  if (cmd_acyclic->parsed()) {
    Object y = load_object(y_path);
    std::vector<Object> gens = load_objects(gens_paths);
    if (!x_path.empty()) gens.push_back(load_object(x_path));
    AcyclicResult r = acyclic_over(y, gens);
    if (r.acyclic) {
      out.emit(json{{"verdict", "yes"}});
      return 0;
    }
    out.emit(json{
        {"verdict", "no"},
        {"obstruction", jsonio::encode_obstruction(Obstruction{*r.obstruction})}});
    return 1;
  }

  if (cmd_cellular->parsed()) {
    Object y = load_object(y_path);
    Object x = load_object(x_path);
    std::optional<ChainMap> hint;
    if (!map_paths.empty()) {
      if (map_paths.size() != 1)
        throw SchemaError("decide-cellular accepts at most one --map hint");
      hint = load_map(map_paths[0]);
    }
    Verdict v = cellular_decide(y, x, hint);
    if (verify && v.is_yes()) {
      if (!verify_certificate(*v.certificate, y, x))
        throw InvariantViolation("produced certificate fails verification");
      HomologyObject hy = to_homology(y), hx = to_homology(x);
      if (hy.summands().size() == 1 && hx.summands().size() == 1) {
        const FPModule& n = hy.summands().begin()->second;
        const FPModule& m = hx.summands().begin()->second;
        auto no = n.order(), mo = m.order();
        if (no && mo && *no <= FiniteGroupTable::kMaxOrder &&
            *mo <= FiniteGroupTable::kMaxOrder &&
            hy.summands().begin()->first == hx.summands().begin()->first) {
          if (!oracle_quotient_of_sum(n, m))
            throw InvariantViolation("module case disagrees with hom oracle");
        }
      }
    }
    out.emit(jsonio::encode_verdict(v));
    return v.is_yes() ? 0 : (v.is_no() ? 1 : 2);
  }

  if (cmd_phi->parsed()) {
    PhiFunction phi = phi_of_generators(load_objects(gens_paths));
    out.emit(json{{"phi", jsonio::encode_phi(phi)}});
    return 0;
  }

  if (cmd_compare->parsed()) {
    bool equal = classes_equal(load_objects(a_paths), load_objects(b_paths));
    out.emit(json{{"equal", equal}});
    return equal ? 0 : 1;
  }

  if (cmd_member->parsed()) {
    Object x = load_object(x_path);
    json phi_doc = load_json(phi_path);
    if (!phi_doc.is_object() || !phi_doc.contains("phi"))
      throw SchemaError(phi_path + ": expected a phi document");
    PhiFunction phi = jsonio::parse_phi(phi_doc.at("phi"), object_ring(x));
    bool member = phi_member(x, phi);
    out.emit(json{{"member", member}});
    return member ? 0 : 1;
  }

  if (cmd_loc->parsed()) {
    Object x = load_object(x_path);
    SuppSet primes = jsonio::parse_supp(load_json(primes_path), object_ring(x));
    bool member = localizing_member(x, primes);
    out.emit(json{{"member", member}});
    return member ? 0 : 1;
  }

  if (cmd_vcert->parsed()) {
    CellCertificate c = jsonio::parse_certificate(load_json(cert_path));
    bool valid = verify_certificate(c, load_object(y_path), load_object(x_path));
    out.emit(json{{"valid", valid}});
    return valid ? 0 : 1;
  }

  throw SchemaError("no command given");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InvariantViolation& e) {
    std::cerr << jsonio::canonical_dump(
                     json{{"error", json{{"message", e.what()},
                                         {"type", "invariant"}}}})
              << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << jsonio::canonical_dump(
                     json{{"error",
                           json{{"message", e.what()}, {"type", "schema"}}}})
              << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << jsonio::canonical_dump(
                     json{{"error", json{{"message", e.what()},
                                         {"type", "invariant"}}}})
              << "\n";
    return 4;
  }
}
