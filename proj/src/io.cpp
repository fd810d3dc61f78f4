#include "siltlab/io.hpp"

#include <fstream>

namespace siltlab {

namespace fs = std::filesystem;

json read_json(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw SiltError(ErrorCode::IoError, "cannot open " + file.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SiltError(ErrorCode::IoError, file.string() + ": " + e.what());
    }
}

void write_json(const fs::path& file, const json& j) {
    std::ofstream out(file);
    if (!out) throw SiltError(ErrorCode::IoError, "cannot write " + file.string());
    out << j.dump(2) << "\n";
}

namespace {

fs::path resolve(const fs::path& base_dir, const std::string& ref) {
    fs::path p(ref);
    return p.is_absolute() ? p : base_dir / p;
}

Matrix matrix_from_strings(const Field& f, int rows, int cols, const json& entries,
                           const std::string& what) {
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows * cols)
        throw SiltError(ErrorCode::IoError,
                        what + ": expected " + std::to_string(rows * cols) + " entries");
    Matrix m(rows, cols, f);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.set(i, j, f.parse_scalar(entries[i * cols + j].get<std::string>()));
    return m;
}

json matrix_to_strings(const Field& f, const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(f.to_string(m.at(i, j)));
    return out;
}

}  // namespace

AlgebraPtr Loader::algebra_from_json(const json& j, const fs::path&) {
    Field f = Field::parse(j.at("field").get<std::string>());
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    for (const json& a : j.at("arrows")) {
        if (!a.is_array() || a.size() != 3)
            throw SiltError(ErrorCode::IoError, "arrow entries must be [name, source, target]");
        arrows.emplace_back(a[0].get<std::string>(), a[1].get<std::string>(),
                            a[2].get<std::string>());
    }
    std::vector<Relation> relations;
    if (j.contains("relations"))
        for (const json& rel : j.at("relations")) {
            Relation r;
            for (const json& term : rel) {
                Relation::Term t;
                t.coeff = f.parse_scalar(term.at("coeff").get<std::string>());
                t.path = term.at("path").get<std::vector<std::string>>();
                r.terms.push_back(std::move(t));
            }
            relations.push_back(std::move(r));
        }
    int cap = j.value("lengthCap", length_cap_);
    return build_algebra(f, Quiver(std::move(vertices), std::move(arrows)), relations, cap);
}

AlgebraPtr Loader::algebra(const fs::path& file) {
    std::string key = fs::weakly_canonical(file).string();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    AlgebraPtr a = algebra_from_json(read_json(file), file.parent_path());
    cache_.emplace(key, a);
    return a;
}

Representation Loader::representation_from_json(const json& j, const fs::path& base_dir) {
    AlgebraPtr a;
    if (j.at("algebra").is_string())
        a = algebra(resolve(base_dir, j.at("algebra").get<std::string>()));
    else
        a = algebra_from_json(j.at("algebra"), base_dir);
    const Field& f = a->field();
    const Quiver& q = a->quiver();
    std::vector<int> dims(q.num_vertices(), 0);
    for (const auto& [name, d] : j.at("dims").items()) dims[q.vertex_index(name)] = d.get<int>();
    std::vector<Matrix> maps;
    for (int ai = 0; ai < q.num_arrows(); ++ai) {
        const auto& arr = q.arrow(ai);
        int rows = dims[arr.target], cols = dims[arr.source];
        json entries = json::array();
        if (j.contains("matrices") && j.at("matrices").contains(arr.name))
            entries = j.at("matrices").at(arr.name);
        else if (rows * cols != 0)
            throw SiltError(ErrorCode::IoError, "missing matrix for arrow '" + arr.name + "'");
        maps.push_back(matrix_from_strings(f, rows, cols, entries, "arrow '" + arr.name + "'"));
    }
    return make_representation(a, std::move(dims), std::move(maps));
}

Representation Loader::representation(const fs::path& file) {
    return representation_from_json(read_json(file), file.parent_path());
}

RepMorphism Loader::morphism(const fs::path& file) {
    json j = read_json(file);
    fs::path dir = file.parent_path();
    Representation src = j.at("source").is_string()
                             ? representation(resolve(dir, j.at("source").get<std::string>()))
                             : representation_from_json(j.at("source"), dir);
    Representation tgt = j.at("target").is_string()
                             ? representation(resolve(dir, j.at("target").get<std::string>()))
                             : representation_from_json(j.at("target"), dir);
    const Field& f = src.algebra->field();
    const Quiver& q = src.algebra->quiver();
    std::vector<Matrix> vmaps;
    for (int v = 0; v < q.num_vertices(); ++v) {
        json entries = json::array();
        if (j.at("vertexMaps").contains(q.vertex_name(v)))
            entries = j.at("vertexMaps").at(q.vertex_name(v));
        else if (tgt.dims[v] * src.dims[v] != 0)
            throw SiltError(ErrorCode::IoError,
                            "missing vertex map at '" + q.vertex_name(v) + "'");
        vmaps.push_back(matrix_from_strings(f, tgt.dims[v], src.dims[v], entries,
                                            "vertex '" + q.vertex_name(v) + "'"));
    }
    RepMorphism out{std::move(src), std::move(tgt), std::move(vmaps)};
    if (!morphism_valid(out))
        throw SiltError(ErrorCode::IoError, file.string() + ": maps do not intertwine");
    return out;
}

ChainComplex Loader::complex_from_json(const json& j, const fs::path& base_dir) {
    std::map<int, Representation> terms;
    for (const auto& [deg, val] : j.at("terms").items()) {
        int d = std::stoi(deg);
        Representation t = val.is_string()
                               ? representation(resolve(base_dir, val.get<std::string>()))
                               : representation_from_json(val, base_dir);
        terms.emplace(d, std::move(t));
    }
    if (terms.empty()) throw SiltError(ErrorCode::IoError, "complex without terms");
    AlgebraPtr a = terms.begin()->second.algebra;
    std::map<int, RepMorphism> diffs;
    if (j.contains("differentials"))
        for (const auto& [deg, val] : j.at("differentials").items()) {
            int d = std::stoi(deg);
            if (!terms.count(d) || !terms.count(d + 1))
                throw SiltError(ErrorCode::IoError,
                                "differential at degree " + deg + " has no adjacent terms");
            const Representation& src = terms.at(d);
            const Representation& tgt = terms.at(d + 1);
            const Field& f = a->field();
            const Quiver& q = a->quiver();
            std::vector<Matrix> vmaps;
            for (int v = 0; v < q.num_vertices(); ++v) {
                json entries = json::array();
                if (val.at("vertexMaps").contains(q.vertex_name(v)))
                    entries = val.at("vertexMaps").at(q.vertex_name(v));
                vmaps.push_back(matrix_from_strings(f, tgt.dims[v], src.dims[v], entries,
                                                    "differential at " + deg));
            }
            diffs.emplace(d, RepMorphism{src, tgt, std::move(vmaps)});
        }
    return make_complex(a, std::move(terms), std::move(diffs));
}

ChainComplex Loader::complex(const fs::path& file) {
    return complex_from_json(read_json(file), file.parent_path());
}

BnAlgebra Loader::bn(const fs::path& sidecar_file) {
    json j = read_json(sidecar_file);
    AlgebraPtr base =
        algebra(resolve(sidecar_file.parent_path(), j.at("baseAlgebra").get<std::string>()));
    return build_Bn(base, j.at("n").get<int>());
}

json algebra_to_json(const BoundQuiverAlgebra& a) {
    json j;
    j["field"] = a.field().name();
    json vs = json::array();
    for (int v = 0; v < a.quiver().num_vertices(); ++v) vs.push_back(a.quiver().vertex_name(v));
    j["vertices"] = vs;
    json as = json::array();
    for (int ai = 0; ai < a.quiver().num_arrows(); ++ai) {
        const auto& arr = a.quiver().arrow(ai);
        as.push_back(json::array({arr.name, a.quiver().vertex_name(arr.source),
                                  a.quiver().vertex_name(arr.target)}));
    }
    j["arrows"] = as;
    json rels = json::array();
    for (const Relation& rel : a.relations()) {
        json r = json::array();
        for (const auto& term : rel.terms) {
            json t;
            t["coeff"] = a.field().to_string(term.coeff);
            t["path"] = term.path;
            r.push_back(std::move(t));
        }
        rels.push_back(std::move(r));
    }
    j["relations"] = rels;
    return j;
}

json representation_to_json(const Representation& m, const std::string& algebra_path) {
    json j;
    j["algebra"] = algebra_path;
    const Quiver& q = m.algebra->quiver();
    json dims;
    for (int v = 0; v < q.num_vertices(); ++v) dims[q.vertex_name(v)] = m.dims[v];
    j["dims"] = dims;
    json mats;
    for (int a = 0; a < q.num_arrows(); ++a)
        mats[q.arrow(a).name] = matrix_to_strings(m.algebra->field(), m.arrow_maps[a]);
    j["matrices"] = mats;
    return j;
}

json morphism_to_json(const RepMorphism& f, const std::string& source_path,
                      const std::string& target_path) {
    json j;
    j["source"] = source_path;
    j["target"] = target_path;
    const Quiver& q = f.source.algebra->quiver();
    json maps;
    for (int v = 0; v < q.num_vertices(); ++v)
        maps[q.vertex_name(v)] =
            matrix_to_strings(f.source.algebra->field(), f.vertex_maps[v]);
    j["vertexMaps"] = maps;
    return j;
}

json complex_to_json(const ChainComplex& x, const std::string& algebra_path) {
    json j;
    json terms;
    for (const auto& [d, t] : x.terms)
        terms[std::to_string(d)] = representation_to_json(t, algebra_path);
    j["terms"] = terms;
    json diffs;
    for (const auto& [d, f] : x.differentials) {
        const Quiver& q = x.algebra->quiver();
        json maps;
        for (int v = 0; v < q.num_vertices(); ++v)
            maps[q.vertex_name(v)] = matrix_to_strings(x.algebra->field(), f.vertex_maps[v]);
        diffs[std::to_string(d)] = json{{"vertexMaps", maps}};
    }
    j["differentials"] = diffs;
    return j;
}

json bn_sidecar_to_json(const BnAlgebra& bn, const std::string& base_algebra_path) {
    json j;
    j["baseAlgebra"] = base_algebra_path;
    j["n"] = bn.n;
    json vm;
    const Quiver& bq = bn.base->quiver();
    for (int jcol = bn.column_lo(); jcol <= 0; ++jcol)
        for (int v = 0; v < bq.num_vertices(); ++v)
            vm[bq.vertex_name(v) + "," + std::to_string(jcol)] =
                bn.algebra->quiver().vertex_name(bn.vertex(v, jcol));
    j["vertexMap"] = vm;
    return j;
}

}  // namespace siltlab
