#include "sf/json_io.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "sf/util.hpp"

namespace sf {

const char* kVersion = "support-forge 0.1.0";

Json ring_to_json(const RingSetup& RS) {
  Json j;
  j["p"] = RS.Q->field().p();
  Json vars = Json::array();
  for (const auto& v : RS.Q->vars()) {
    Json jv;
    jv["name"] = v.name;
    jv["deg"] = v.deg;
    vars.push_back(jv);
  }
  j["vars"] = vars;
  Json f = Json::array();
  for (const auto& g : RS.f) f.push_back(g.to_string());
  j["f"] = f;
  j["order"] = RS.Q->order_name();
  return j;
}

RingSetup ring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("vars") || !j.contains("f"))
    fail("SchemaError", "ring needs p, vars, f");
  uint32_t p = j.at("p").get<uint32_t>();
  std::vector<VarSpec> vars;
  for (const auto& jv : j.at("vars")) {
    VarSpec v;
    v.name = jv.at("name").get<std::string>();
    v.deg = jv.contains("deg") ? jv.at("deg").get<int>() : 1;
    vars.push_back(v);
  }
  OrderKind ord = OrderKind::grevlex;
  if (j.contains("order")) {
    std::string o = j.at("order").get<std::string>();
    if (o == "lex") ord = OrderKind::lex;
    else if (o != "grevlex") fail("SchemaError", "unknown order: " + o);
  }
  std::vector<std::string> ftexts;
  for (const auto& s : j.at("f")) ftexts.push_back(s.get<std::string>());
  return build_ci_text(Field::prime(p), vars, ord, ftexts);
}

Json module_to_json(const ModulePresentation& M) {
  Json j;
  Json gens = Json::array();
  for (long d : M.gen_degs) {
    Json g;
    g["deg"] = d;
    gens.push_back(g);
  }
  j["gens"] = gens;
  Json rels = Json::array();
  for (size_t c = 0; c < M.rel.cols(); ++c) {
    Json col = Json::array();
    for (size_t r = 0; r < M.rel.rows(); ++r) col.push_back(M.rel.at(r, c).to_string());
    rels.push_back(col);
  }
  j["relations"] = rels;
  return j;
}

ModulePresentation module_from_json(const RingSetup& RS, const Json& j) {
  if (!j.is_object() || !j.contains("gens") || !j.contains("relations"))
    fail("SchemaError", "module needs gens and relations");
  ModulePresentation M;
  M.RS = &RS;
  for (const auto& g : j.at("gens"))
    M.gen_degs.push_back(g.contains("deg") ? g.at("deg").get<long>() : 0);
  const Json& rels = j.at("relations");
  M.rel = PMatrix(RS.Q.get(), M.gen_degs.size(), rels.size());
  size_t c = 0;
  for (const auto& col : rels) {
    if (col.size() != M.gen_degs.size())
      fail("SchemaError", "relation column length differs from the generator count");
    for (size_t r = 0; r < M.gen_degs.size(); ++r)
      M.rel.at(r, c) = RS.nf(RS.parse(col[r].get<std::string>()));
    ++c;
  }
  M.validate();
  return M;
}

Json cone_to_json(const ConeIdeal& X) {
  Json j;
  Json gens = Json::array();
  for (const auto& g : X.gens) gens.push_back(g.to_string());
  j["ideal"] = gens;
  j["saturated"] = X.saturated;
  return j;
}

std::vector<Poly> chi_polys_from_json(const RingSetup& RS, const Json& arr) {
  if (!arr.is_array()) fail("SchemaError", "expected an array of operator polynomials");
  std::vector<Poly> out;
  for (const auto& s : arr) out.push_back(RS.parse_chi(s.get<std::string>()));
  return out;
}

std::string canon_hash(const Json& j) { return sha256_hex(j.dump()); }
std::string ring_hash(const RingSetup& RS) { return canon_hash(ring_to_json(RS)); }
std::string module_hash(const ModulePresentation& M) {
  Json j;
  j["ring"] = ring_to_json(*M.RS);
  j["module"] = module_to_json(M);
  return canon_hash(j);
}

void atomic_write(const std::string& path, const std::string& data) {
  namespace fs = std::filesystem;
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  fs::path tmp = p;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail("IoError", "cannot write " + tmp.string());
    out << data;
  }
  fs::rename(tmp, p);
}

// ---- resolution cache -------------------------------------------------------

std::string FileResolutionCache::key_path(const ModulePresentation& M, int D) const {
  Json key;
  key["ring"] = ring_to_json(*M.RS);
  key["module"] = module_to_json(M);
  key["D"] = D;
  key["v"] = 1;
  return root_ + "/res-" + canon_hash(key) + ".json";
}

std::optional<Resolution> FileResolutionCache::load(const ModulePresentation& M, int D) {
  if (M.RS->Q->field().e() != 1) return std::nullopt;
  std::ifstream in(key_path(M, D));
  if (!in) return std::nullopt;
  Json j;
  try {
    in >> j;
  } catch (...) {
    return std::nullopt;
  }
  const RingSetup& RS = *M.RS;
  Resolution P;
  P.computed_to = j.at("computed_to").get<int>();
  P.terminated = j.at("terminated").get<bool>();
  P.minimal = true;
  P.resolved = module_from_json(RS, j.at("resolved"));
  P.C.RS = &RS;
  P.C.low = 0;
  const Json& comps = j.at("components");
  const Json& diffs = j.at("diffs");
  for (const auto& degs : comps) {
    GradedFree g;
    for (const auto& d : degs) g.degs.push_back(d.get<long>());
    P.C.comp.push_back(std::move(g));
  }
  for (size_t i = 0; i < diffs.size(); ++i) {
    size_t rows = i == 0 ? 0 : P.C.comp[i - 1].rank();
    size_t cols = P.C.comp[i].rank();
    PMatrix m(RS.Q.get(), rows, cols);
    const Json& rowsj = diffs[i];
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c)
        m.at(r, c) = RS.parse(rowsj[r][c].get<std::string>());
    P.C.diff.push_back(std::move(m));
  }
  return P;
}

void FileResolutionCache::store(const ModulePresentation& M, int D, const Resolution& R) {
  if (M.RS->Q->field().e() != 1) return;
  Json j;
  j["computed_to"] = R.computed_to;
  j["terminated"] = R.terminated;
  j["resolved"] = module_to_json(R.resolved);
  Json comps = Json::array();
  for (const auto& g : R.C.comp) {
    Json degs = Json::array();
    for (long d : g.degs) degs.push_back(d);
    comps.push_back(degs);
  }
  j["components"] = comps;
  Json diffs = Json::array();
  for (size_t i = 0; i < R.C.diff.size(); ++i) {
    Json rows = Json::array();
    for (size_t r = 0; r < R.C.diff[i].rows(); ++r) {
      Json row = Json::array();
      for (size_t c = 0; c < R.C.diff[i].cols(); ++c)
        row.push_back(R.C.diff[i].at(r, c).to_string());
      rows.push_back(row);
    }
    diffs.push_back(rows);
  }
  j["diffs"] = diffs;
  atomic_write(key_path(M, D), j.dump(1));
}

}  // namespace sf
