#pragma once

#include <json.hpp>

#include "sf/complexes.hpp"

namespace sf {

// Reports and task files use insertion-ordered JSON so serialization is
// byte-deterministic given identical inputs.
using Json = nlohmann::ordered_json;

extern const char* kVersion;

Json ring_to_json(const RingSetup& RS);
RingSetup ring_from_json(const Json& j);

Json module_to_json(const ModulePresentation& M);
ModulePresentation module_from_json(const RingSetup& RS, const Json& j);

Json cone_to_json(const ConeIdeal& X);
std::vector<Poly> chi_polys_from_json(const RingSetup& RS, const Json& arr);

std::string canon_hash(const Json& j);
std::string ring_hash(const RingSetup& RS);
std::string module_hash(const ModulePresentation& M);

void atomic_write(const std::string& path, const std::string& data);

// Content-addressed resolution cache under a root directory. Extension-field
// rings are not cached (their element text form is not round-trip safe).
class FileResolutionCache : public ResolutionCacheIface {
public:
  explicit FileResolutionCache(std::string root) : root_(std::move(root)) {}
  std::optional<Resolution> load(const ModulePresentation& M, int D) override;
  void store(const ModulePresentation& M, int D, const Resolution& R) override;

private:
  std::string key_path(const ModulePresentation& M, int D) const;
  std::string root_;
};

}  // namespace sf
