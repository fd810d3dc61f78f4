#pragma once

#include <filesystem>

#include <json.hpp>

#include "siltlab/bn.hpp"

namespace siltlab {

using nlohmann::json;

/// File loaders resolve referenced paths (a representation's `algebra`
/// field, a complex's term files) relative to the referencing file, and
/// cache algebras by canonical path.
class Loader {
public:
    explicit Loader(int length_cap = 64) : length_cap_(length_cap) {}

    AlgebraPtr algebra(const std::filesystem::path& file);
    Representation representation(const std::filesystem::path& file);
    RepMorphism morphism(const std::filesystem::path& file);
    ChainComplex complex(const std::filesystem::path& file);
    BnAlgebra bn(const std::filesystem::path& sidecar_file);

    AlgebraPtr algebra_from_json(const json& j, const std::filesystem::path& base_dir);
    Representation representation_from_json(const json& j, const std::filesystem::path& base_dir);
    ChainComplex complex_from_json(const json& j, const std::filesystem::path& base_dir);

private:
    int length_cap_;
    std::map<std::string, AlgebraPtr> cache_;
};

json algebra_to_json(const BoundQuiverAlgebra& a);
json representation_to_json(const Representation& m, const std::string& algebra_path);
json morphism_to_json(const RepMorphism& f, const std::string& source_path,
                      const std::string& target_path);
json complex_to_json(const ChainComplex& x, const std::string& algebra_path);
json bn_sidecar_to_json(const BnAlgebra& bn, const std::string& base_algebra_path);

void write_json(const std::filesystem::path& file, const json& j);
json read_json(const std::filesystem::path& file);

}  // namespace siltlab
