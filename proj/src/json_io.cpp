#include "homcell/json_io.hpp"

#include "homcell/errors.hpp"

namespace homcell::jsonio {

namespace {

const Int kSafeBound = Int(1) << 53;

const json& expect_key(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw SchemaError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json encode_int(const Int& x) {
  if (abs(x) < kSafeBound) return json(x.convert_to<long long>());
  return json{{"#bigint", x.str()}};
}

Int parse_int(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_object() && j.contains("#bigint")) {
    const json& s = j.at("#bigint");
    if (!s.is_string()) throw SchemaError("#bigint value must be a string");
    try {
      return Int(s.get<std::string>());
    } catch (const std::exception&) {
      throw SchemaError("malformed #bigint literal");
    }
  }
  throw SchemaError("expected an integer (number or #bigint)");
}

json encode_matrix(const IntMatrix& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(encode_int(m.at(i, j)));
    data.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

IntMatrix parse_matrix(const json& j) {
  std::size_t rows = expect_key(j, "rows").get<std::size_t>();
  std::size_t cols = expect_key(j, "cols").get<std::size_t>();
  const json& data = expect_key(j, "data");
  if (!data.is_array() || data.size() != rows)
    throw SchemaError("matrix data must hold `rows` rows");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = data.at(i);
    if (!row.is_array() || row.size() != cols)
      throw SchemaError("matrix row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = parse_int(row.at(c));
  }
  return m;
}

json encode_ring(const RingSpec& ring) {
  if (ring.is_integers()) return json{{"ring", "Z"}};
  return json{{"ring", "Z/n"}, {"n", encode_int(ring.modulus())}};
}

RingSpec parse_ring(const json& j) {
  const json& tag = expect_key(j, "ring");
  if (tag == "Z") return RingSpec::integers();
  if (tag == "Z/n") return RingSpec::integers_mod(parse_int(expect_key(j, "n")));
  throw SchemaError("ring must be \"Z\" or \"Z/n\"");
}

json encode_supp(const SuppSet& s) {
  if (s.is_everything()) return json{{"supp", "everything"}};
  json primes = json::array();
  for (const Int& p : s.primes()) primes.push_back(encode_int(p));
  return json{{"supp", std::move(primes)}};
}

SuppSet parse_supp(const json& j, const RingSpec& ring) {
  const json& body = expect_key(j, "supp");
  if (body == "everything") return SuppSet::everything(ring);
  if (!body.is_array()) throw SchemaError("supp must be \"everything\" or a list");
  std::vector<Int> primes;
  Int prev = 0;
  for (const json& p : body) {
    primes.push_back(parse_int(p));
    if (primes.back() <= prev)
      throw SchemaError("supp primes must be strictly increasing");
    prev = primes.back();
  }
  return SuppSet::closed_points(ring, std::move(primes));
}

json encode_module(const FPModule& m) {
  json out = encode_ring(m.ring());
  out["generators"] = m.generators();
  out["relations"] = encode_matrix(m.presentation());
  return out;
}

FPModule parse_module(const json& j) {
  RingSpec ring = parse_ring(j);
  std::size_t generators = expect_key(j, "generators").get<std::size_t>();
  IntMatrix relations = parse_matrix(expect_key(j, "relations"));
  if (relations.rows() != generators)
    throw SchemaError("generator count does not match relation rows");
  return FPModule(std::move(ring), std::move(relations));
}

json encode_normal_form(const ModuleNormalForm& nf) {
  json factors = json::array();
  for (const Int& d : nf.invariant_factors) factors.push_back(encode_int(d));
  return json{{"free_rank", nf.free_rank}, {"invariant_factors", std::move(factors)}};
}

json encode_complex(const FreeComplex& x) {
  json out = encode_ring(x.ring());
  out["bottom"] = x.bottom();
  json ranks = json::array();
  for (std::size_t r : x.ranks()) ranks.push_back(r);
  out["ranks"] = std::move(ranks);
  json diffs = json::array();
  for (int k = x.bottom() + 1; k <= x.top() && !x.is_zero(); ++k)
    diffs.push_back(encode_matrix(x.differential(k)));
  out["differentials"] = std::move(diffs);
  return out;
}

FreeComplex parse_complex(const json& j) {
  RingSpec ring = parse_ring(j);
  int bottom = expect_key(j, "bottom").get<int>();
  std::vector<std::size_t> ranks;
  for (const json& r : expect_key(j, "ranks")) ranks.push_back(r.get<std::size_t>());
  std::vector<IntMatrix> diffs;
  for (const json& d : expect_key(j, "differentials"))
    diffs.push_back(parse_matrix(d));
  return FreeComplex(std::move(ring), bottom, std::move(ranks), std::move(diffs));
}

json encode_homology_object(const HomologyObject& h) {
  json entries = json::array();
  for (const auto& [k, m] : h.summands())
    entries.push_back(json{{"degree", k}, {"module", encode_module(m)}});
  return entries;
}

HomologyObject parse_homology_object(const json& j) {
  if (!j.is_array()) throw SchemaError("homology must be a list");
  if (j.empty())
    throw SchemaError("homology list may not be empty (ring is undetermined)");
  std::map<int, FPModule> summands;
  for (const json& entry : j) {
    int degree = expect_key(entry, "degree").get<int>();
    FPModule m = parse_module(expect_key(entry, "module"));
    if (summands.count(degree)) throw SchemaError("duplicate homology degree");
    summands.emplace(degree, std::move(m));
  }
  RingSpec ring = summands.begin()->second.ring();
  return HomologyObject(std::move(ring), std::move(summands));
}

json encode_chain_map(const ChainMap& f) {
  json comps = json::object();
  for (const auto& [k, m] : f.components())
    comps[std::to_string(k)] = encode_matrix(m);
  return json{{"source", encode_complex(f.source())},
              {"target", encode_complex(f.target())},
              {"components", std::move(comps)}};
}

ChainMap parse_chain_map(const json& j) {
  FreeComplex source = parse_complex(expect_key(j, "source"));
  FreeComplex target = parse_complex(expect_key(j, "target"));
  std::map<int, IntMatrix> comps;
  const json& body = expect_key(j, "components");
  if (!body.is_object()) throw SchemaError("components must be an object");
  for (auto it = body.begin(); it != body.end(); ++it) {
    int k;
    try {
      k = std::stoi(it.key());
    } catch (const std::exception&) {
      throw SchemaError("component degree is not an integer: " + it.key());
    }
    comps.emplace(k, parse_matrix(it.value()));
  }
  return ChainMap(std::move(source), std::move(target), std::move(comps));
}

json encode_phi(const PhiFunction& phi) {
  json bps = json::array();
  for (const auto& [k, s] : phi.breakpoints())
    bps.push_back(json{{"degree", k}, {"supp", encode_supp(s).at("supp")}});
  return json{{"breakpoints", std::move(bps)}};
}

PhiFunction parse_phi(const json& j, const RingSpec& ring) {
  std::vector<std::pair<int, SuppSet>> bps;
  for (const json& entry : expect_key(j, "breakpoints")) {
    int degree = expect_key(entry, "degree").get<int>();
    SuppSet s = parse_supp(entry, ring);
    bps.emplace_back(degree, std::move(s));
  }
  return PhiFunction(ring, std::move(bps));
}

json encode_certificate(const CellCertificate& c) {
  if (const auto* me = std::get_if<cert::ModuleEpi>(&c))
    return json{{"type", "module_epi"},
                {"t", me->t},
                {"matrix", encode_matrix(me->matrix)}};
  if (const auto* he = std::get_if<cert::HomEpi>(&c))
    return json{{"type", "hom_epi"}, {"map", encode_chain_map(he->f)}};
  if (const auto* ss = std::get_if<cert::ShiftedSupport>(&c)) {
    json entries = json::array();
    for (const auto& e : ss->entries)
      entries.push_back(json{{"degree", e.degree},
                             {"supp_y", encode_supp(e.supp_y).at("supp")},
                             {"supp_x_below",
                              encode_supp(e.supp_x_below).at("supp")}});
    return json{{"type", "shifted_support"}, {"inclusions", std::move(entries)}};
  }
  const auto& hp = std::get<cert::HomologyPiece>(c);
  return json{{"type", "homology_piece"}, {"degree", hp.degree}};
}

CellCertificate parse_certificate(const json& j) {
  const json& type = expect_key(j, "type");
  if (type == "module_epi")
    return cert::ModuleEpi{expect_key(j, "t").get<std::size_t>(),
                           parse_matrix(expect_key(j, "matrix"))};
  if (type == "hom_epi")
    return cert::HomEpi{parse_chain_map(expect_key(j, "map"))};
  if (type == "shifted_support") {
    // Recorded inclusions are evidence only; the verifier recomputes the
    // condition, so the supp entries need a ring context they do not
    // carry. They are ignored on parse.
    return cert::ShiftedSupport{};
  }
  if (type == "homology_piece")
    return cert::HomologyPiece{expect_key(j, "degree").get<int>()};
  throw SchemaError("unknown certificate type");
}

json encode_obstruction(const Obstruction& o) {
  if (const auto* d = std::get_if<DegreeObstruction>(&o))
    return json{{"degree", d->degree}, {"prime", encode_int(d->prime)}};
  const auto& m = std::get<ModuleObstruction>(o);
  if (m.free_rank_kind) return json{{"kind", "free_rank"}};
  return json{{"kind", "exponent"}, {"prime", encode_int(m.prime)}};
}

json encode_verdict(const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::Yes:
      return json{{"verdict", "yes"},
                  {"certificate", encode_certificate(*v.certificate)}};
    case Verdict::Kind::No:
      return json{{"verdict", "no"},
                  {"obstruction", encode_obstruction(*v.obstruction)}};
    default:
      return json{{"verdict", "unknown"}, {"rules_tried", v.rules_tried}};
  }
}

json object_document(const Object& obj) {
  if (std::holds_alternative<FreeComplex>(obj))
    return json{{"complex", encode_complex(std::get<FreeComplex>(obj))}};
  return json{
      {"homology", encode_homology_object(std::get<HomologyObject>(obj))}};
}

Object parse_object_document(const json& j) {
  if (!j.is_object()) throw SchemaError("object document must be a JSON object");
  if (j.contains("complex")) return parse_complex(j.at("complex"));
  if (j.contains("homology")) return parse_homology_object(j.at("homology"));
  if (j.contains("module"))
    return HomologyObject::concentrated(parse_module(j.at("module")), 0);
  throw SchemaError("expected a module, complex, or homology document");
}

std::string canonical_dump(const json& j) { return j.dump(); }

}  // namespace homcell::jsonio
