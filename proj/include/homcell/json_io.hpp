#pragma once

#include <json.hpp>

#include "homcell/relations.hpp"

namespace homcell::jsonio {

using json = nlohmann::json;

// Big integers past 2^53 travel as {"#bigint": "<decimal>"} so the wire
// format never touches floating point.
json encode_int(const Int& x);
Int parse_int(const json& j);

json encode_matrix(const IntMatrix& m);
IntMatrix parse_matrix(const json& j);

json encode_ring(const RingSpec& ring);
RingSpec parse_ring(const json& j);

json encode_supp(const SuppSet& s);
SuppSet parse_supp(const json& j, const RingSpec& ring);

// Inner (unwrapped) object forms.
json encode_module(const FPModule& m);
FPModule parse_module(const json& j);
json encode_normal_form(const ModuleNormalForm& nf);
json encode_complex(const FreeComplex& x);
FreeComplex parse_complex(const json& j);
json encode_homology_object(const HomologyObject& h);
HomologyObject parse_homology_object(const json& j);
json encode_chain_map(const ChainMap& f);
ChainMap parse_chain_map(const json& j);
json encode_phi(const PhiFunction& phi);
PhiFunction parse_phi(const json& j, const RingSpec& ring);

json encode_certificate(const CellCertificate& c);
CellCertificate parse_certificate(const json& j);
json encode_obstruction(const Obstruction& o);
json encode_verdict(const Verdict& v);

// Top-level document forms: {"module":...}, {"complex":...},
// {"homology":[...]}, {"map":...}, {"phi":...}, {"supp":...}.
json object_document(const Object& obj);
Object parse_object_document(const json& j);

// Compact dump with sorted keys; the byte-exact canonical form.
std::string canonical_dump(const json& j);

}  // namespace homcell::jsonio
