// siltlab: exact computations with representations of bound quiver algebras,
// bounded complexes, and silting/tilting verification, from the command line.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "siltlab/io.hpp"
#include "siltlab/sampling.hpp"
#include "siltlab/suites.hpp"

using namespace siltlab;

namespace {

struct Options {
    std::string format = "text";
    std::uint64_t seed = 0;
    bool timing = false;
    int cap = 32;         // resolution / dimension cap
    int length_cap = 64;  // path length cap for algebra files
};

int g_exit = 0;

void emit(const Options& opt, json report, long long ms) {
    report["schemaVersion"] = 1;
    if (opt.timing) report["timingMs"] = ms;
    if (opt.format == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    // text: flat deterministic "key: value" lines
    std::function<void(const std::string&, const json&)> render =
        [&](const std::string& prefix, const json& j) {
            if (j.is_object()) {
                for (const auto& [k, v] : j.items())
                    render(prefix.empty() ? k : prefix + "." + k, v);
            } else if (j.is_array()) {
                std::size_t idx = 0;
                for (const auto& v : j.items())
                    render(prefix + "[" + std::to_string(idx++) + "]", v.value());
                if (idx == 0) std::cout << prefix << ": []\n";
            } else {
                std::cout << prefix << ": "
                          << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
            }
        };
    render("", report);
}

json dims_json(const Representation& m) {
    json out;
    const Quiver& q = m.algebra->quiver();
    for (int v = 0; v < q.num_vertices(); ++v) out[q.vertex_name(v)] = m.dims[v];
    return out;
}

json complex_summary(const ChainComplex& x) {
    json out;
    if (x.is_zero()) {
        out["zero"] = true;
        return out;
    }
    out["lo"] = x.lo();
    out["hi"] = x.hi();
    json terms;
    for (const auto& [d, t] : x.terms) terms[std::to_string(d)] = t.total_dim();
    out["termDims"] = terms;
    out["totalDim"] = x.total_dim();
    return out;
}

json suite_json(const SuiteResult& r) {
    json out;
    out["suite"] = r.suite;
    json checks = json::array();
    for (const auto& c : r.checks) {
        json line;
        line["name"] = c.name;
        line["pass"] = c.pass;
        if (!c.detail.empty()) line["detail"] = c.detail;
        checks.push_back(std::move(line));
    }
    out["checks"] = checks;
    out["pass"] = r.pass();
    return out;
}

void print_suite_text(const SuiteResult& r) {
    for (const auto& c : r.checks)
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << r.suite << ": " << c.name
                  << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    std::cout << (r.pass() ? "[PASS] " : "[FAIL] ") << "suite " << r.suite << "\n";
}

std::string save_with_algebra(const std::filesystem::path& out, const json& payload_algebra,
                              std::function<json(const std::string&)> payload) {
    std::filesystem::path alg_path = out;
    alg_path += ".algebra.json";
    write_json(alg_path, payload_algebra);
    write_json(out, payload(alg_path.filename().string()));
    return out.string();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact silting/tilting toolkit for bound quiver algebras"};
    app.require_subcommand(1);
    Options opt;
    if (const char* cap_env = std::getenv("SILTLAB_CAP")) opt.cap = std::atoi(cap_env);
    app.add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "seed for randomized suites");
    app.add_flag("--timing", opt.timing, "include timings (not byte-stable)");

    Loader loader(opt.length_cap);
    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    };

    std::string algebra_file, module_file, source_file, target_file, complex_file,
        silting_file, bn_file, out_file, kind = "tilting";
    int degree = 0, dparam = 0, nparam = 2, step_cap = -1, budget = 30, cohdeg = 0;
    bool derived = false;
    bool have_cohdeg = false;

    // ---------------------------------------------------------------- algebra
    auto* alg = app.add_subcommand("algebra", "bound quiver algebras");
    alg->require_subcommand(1);
    auto* alg_build = alg->add_subcommand("build", "build the path basis");
    alg_build->add_option("--algebra", algebra_file)->required();
    alg_build->add_option("--cap", opt.length_cap, "path length cap");
    alg_build->add_option("--out", out_file, "write the algebra back out");
    alg_build->callback([&] {
        Loader fresh(opt.length_cap);
        AlgebraPtr a = fresh.algebra(algebra_file);
        json r;
        r["verb"] = "algebra build";
        r["dimension"] = a->dimension();
        r["vertices"] = a->quiver().num_vertices();
        r["arrows"] = a->quiver().num_arrows();
        if (!out_file.empty()) write_json(out_file, algebra_to_json(*a));
        emit(opt, r, elapsed());
    });
    auto* alg_info = alg->add_subcommand("info", "dimension and basis listing");
    alg_info->add_option("--algebra", algebra_file)->required();
    alg_info->callback([&] {
        AlgebraPtr a = loader.algebra(algebra_file);
        AlgebraInfo info = a->info();
        json r;
        r["verb"] = "algebra info";
        r["dimension"] = info.dimension;
        r["vertices"] = info.num_vertices;
        r["arrows"] = info.num_arrows;
        json basis = json::array();
        for (const auto& e : info.basis)
            basis.push_back(json{{"source", e.source},
                                 {"target", e.target},
                                 {"length", e.length},
                                 {"path", e.path}});
        r["basis"] = basis;
        emit(opt, r, elapsed());
    });

    // ----------------------------------------------------------------- module
    auto* mod = app.add_subcommand("module", "representations of an algebra");
    mod->require_subcommand(1);
    auto* mod_hom = mod->add_subcommand("hom", "dimension and basis of Hom(M, N)");
    mod_hom->add_option("--source", source_file)->required();
    mod_hom->add_option("--target", target_file)->required();
    mod_hom->callback([&] {
        Representation m = loader.representation(source_file);
        Representation n = loader.representation(target_file);
        json r;
        r["verb"] = "module hom";
        r["dimension"] = hom_dim(m, n);
        emit(opt, r, elapsed());
    });
    auto* mod_ext = mod->add_subcommand("ext", "dimension of Ext^j(M, N)");
    mod_ext->add_option("--source", source_file)->required();
    mod_ext->add_option("--target", target_file)->required();
    mod_ext->add_option("--degree", degree)->required();
    mod_ext->callback([&] {
        auto e = ext_dim(loader.representation(source_file),
                         loader.representation(target_file), degree, opt.cap);
        json r;
        r["verb"] = "module ext";
        r["degree"] = degree;
        if (e) {
            r["dimension"] = *e;
        } else {
            r["dimension"] = "ExceedsCap";
            g_exit = 3;
        }
        emit(opt, r, elapsed());
    });
    auto* mod_pd = mod->add_subcommand("pd", "projective dimension");
    mod_pd->add_option("--module", module_file)->required();
    mod_pd->callback([&] {
        auto p = pd(loader.representation(module_file), opt.cap);
        json r;
        r["verb"] = "module pd";
        if (p) {
            r["pd"] = *p;
        } else {
            r["pd"] = "ExceedsCap";
            g_exit = 3;
        }
        emit(opt, r, elapsed());
    });
    auto* mod_dec = mod->add_subcommand("decompose", "indecomposable summands");
    mod_dec->add_option("--module", module_file)->required();
    mod_dec->callback([&] {
        auto parts = decompose(loader.representation(module_file));
        json r;
        r["verb"] = "module decompose";
        json list = json::array();
        for (const auto& [rep, mult] : parts)
            list.push_back(json{{"dims", dims_json(rep)},
                                {"multiplicity", mult},
                                {"totalDim", rep.total_dim()}});
        r["parts"] = list;
        r["count"] = parts.size();
        emit(opt, r, elapsed());
    });
    auto* mod_tilt = mod->add_subcommand("tilting", "d-tilting test with certificate");
    mod_tilt->add_option("--module", module_file)->required();
    mod_tilt->add_option("--d", dparam)->required();
    mod_tilt->callback([&] {
        TiltingReport report = is_tilting(loader.representation(module_file), dparam, opt.cap);
        json r;
        r["verb"] = "module tilting";
        r["verdict"] = report.verdict;
        if (!report.failure.empty()) r["failure"] = report.failure;
        if (report.pdim) r["pd"] = *report.pdim;
        json cores = json::array();
        for (const auto& step : report.coresolution)
            cores.push_back(step.target.total_dim());
        r["coresolutionTermDims"] = cores;
        if (!report.verdict) g_exit = 1;
        emit(opt, r, elapsed());
    });
    auto* mod_cotilt = mod->add_subcommand("cotilting", "d-cotilting test (dual)");
    mod_cotilt->add_option("--module", module_file)->required();
    mod_cotilt->add_option("--d", dparam)->required();
    mod_cotilt->callback([&] {
        TiltingReport report = is_cotilting(loader.representation(module_file), dparam, opt.cap);
        json r;
        r["verb"] = "module cotilting";
        r["verdict"] = report.verdict;
        if (!report.failure.empty()) r["failure"] = report.failure;
        if (!report.verdict) g_exit = 1;
        emit(opt, r, elapsed());
    });

    // ---------------------------------------------------------------- complex
    auto* cpx = app.add_subcommand("complex", "bounded complexes of representations");
    cpx->require_subcommand(1);
    auto* cpx_check = cpx->add_subcommand("check", "validate d.d = 0");
    cpx_check->add_option("--complex", complex_file)->required();
    cpx_check->callback([&] {
        bool ok = validate_complex(loader.complex(complex_file));
        json r;
        r["verb"] = "complex check";
        r["valid"] = ok;
        if (!ok) g_exit = 1;
        emit(opt, r, elapsed());
    });
    auto* cpx_hom = cpx->add_subcommand("hom", "graded hom table");
    cpx_hom->add_option("--source", source_file)->required();
    cpx_hom->add_option("--target", target_file)->required();
    cpx_hom->add_flag("--derived", derived, "require the derived-validity hypothesis");
    cpx_hom->callback([&] {
        GradedHomTable t =
            hom_table(loader.complex(source_file), loader.complex(target_file), derived);
        json r;
        r["verb"] = "complex hom";
        r["derived"] = t.derived;
        json entries;
        for (const auto& [s, e] : t.entries) entries[std::to_string(s)] = e.dim;
        r["entries"] = entries;
        emit(opt, r, elapsed());
    });
    auto* cpx_coh = cpx->add_subcommand("cohomology", "cohomology dimensions");
    cpx_coh->add_option("--complex", complex_file)->required();
    auto* deg_opt = cpx_coh->add_option("--degree", cohdeg);
    cpx_coh->callback([&] {
        ChainComplex x = loader.complex(complex_file);
        json r;
        r["verb"] = "complex cohomology";
        have_cohdeg = deg_opt->count() > 0;
        if (have_cohdeg) {
            r["degree"] = cohdeg;
            r["dims"] = dims_json(cohomology(x, cohdeg));
        } else {
            json per;
            for (const auto& [d, dim] : cohomology_dims(x)) per[std::to_string(d)] = dim;
            r["dims"] = per;
        }
        emit(opt, r, elapsed());
    });
    auto* cpx_min = cpx->add_subcommand("minimal", "minimal model");
    cpx_min->add_option("--complex", complex_file)->required();
    cpx_min->add_option("--out", out_file);
    cpx_min->callback([&] {
        ChainComplex x = loader.complex(complex_file);
        ChainComplex m = minimal_model(x);
        json r;
        r["verb"] = "complex minimal";
        r["input"] = complex_summary(x);
        r["model"] = complex_summary(m);
        if (!out_file.empty())
            save_with_algebra(out_file, algebra_to_json(*x.algebra),
                              [&](const std::string& ap) { return complex_to_json(m, ap); });
        emit(opt, r, elapsed());
    });

    // ---------------------------------------------------------------- silting
    auto* silt = app.add_subcommand("silting", "silting and cosilting checks");
    silt->require_subcommand(1);
    auto* s_pre = silt->add_subcommand("presilting", "no self-extensions at positive shifts");
    s_pre->add_option("--complex", complex_file)->required();
    s_pre->callback([&] {
        bool ok = is_presilting(loader.complex(complex_file));
        json r;
        r["verb"] = "silting presilting";
        r["verdict"] = ok;
        if (!ok) g_exit = 1;
        emit(opt, r, elapsed());
    });
    auto* s_check = silt->add_subcommand("check", "full silting test with certificate");
    s_check->add_option("--complex", complex_file)->required();
    s_check->add_option("--step-cap", step_cap);
    s_check->callback([&] {
        SiltingResult res = is_silting(loader.complex(complex_file), step_cap);
        json r;
        r["verb"] = "silting check";
        r["verdict"] = verdict_name(res.verdict);
        if (!res.note.empty()) r["note"] = res.note;
        r["steps"] = res.certificate.steps;
        json cores = json::array();
        for (const auto& tri : res.certificate.coresolution) {
            json stage;
            stage["from"] = complex_summary(tri.from);
            stage["approxTarget"] = complex_summary(tri.approximation.target);
            stage["cone"] = complex_summary(tri.cone_minimal);
            cores.push_back(std::move(stage));
        }
        r["certificate"] = cores;
        if (res.verdict == Verdict::False) g_exit = 1;
        if (res.verdict == Verdict::Undecided) g_exit = 3;
        emit(opt, r, elapsed());
    });
    auto* s_member = silt->add_subcommand("member", "silting class membership");
    s_member->add_option("--silting", silting_file)->required();
    s_member->add_option("--complex", complex_file)->required();
    s_member->callback([&] {
        ClassMembershipReport rep =
            silting_class_member(loader.complex(silting_file), loader.complex(complex_file));
        json r;
        r["verb"] = "silting member";
        json verdicts;
        for (const auto& [s, v] : rep.vanishes) verdicts[std::to_string(s)] = v;
        r["verdicts"] = verdicts;
        r["member"] = rep.member;
        if (!rep.member) g_exit = 1;
        emit(opt, r, elapsed());
    });
    auto* s_window = silt->add_subcommand("window", "support window of the minimal model");
    s_window->add_option("--complex", complex_file)->required();
    s_window->callback([&] {
        auto [lo, hi] = intermediate_window(loader.complex(complex_file));
        json r;
        r["verb"] = "silting window";
        r["lo"] = lo;
        r["hi"] = hi;
        emit(opt, r, elapsed());
    });
    auto* s_aisle = silt->add_subcommand("aisle", "aisle membership witness");
    s_aisle->add_option("--silting", silting_file)->required();
    s_aisle->add_option("--complex", complex_file)->required();
    s_aisle->add_option("--step-cap", step_cap);
    s_aisle->callback([&] {
        AisleWitness w = aisle_witness(loader.complex(silting_file),
                                       loader.complex(complex_file), step_cap);
        json r;
        r["verb"] = "silting aisle";
        switch (w.verdict) {
            case AisleVerdict::InAisle: r["verdict"] = "InAisle"; break;
            case AisleVerdict::NotInAisle:
                r["verdict"] = "NotInAisle";
                r["counterexampleDegree"] = w.counterexample_degree;
                g_exit = 1;
                break;
            case AisleVerdict::Unknown:
                r["verdict"] = "Unknown";
                g_exit = 3;
                break;
        }
        r["note"] = w.note;
        emit(opt, r, elapsed());
    });
    auto* s_cosilt = silt->add_subcommand("cosilting", "cosilting test via duality");
    s_cosilt->add_option("--complex", complex_file)->required();
    s_cosilt->add_option("--step-cap", step_cap);
    s_cosilt->callback([&] {
        SiltingResult res = is_cosilting(loader.complex(complex_file), step_cap);
        json r;
        r["verb"] = "silting cosilting";
        r["verdict"] = verdict_name(res.verdict);
        if (res.verdict == Verdict::False) g_exit = 1;
        if (res.verdict == Verdict::Undecided) g_exit = 3;
        emit(opt, r, elapsed());
    });
    auto* s_enum = silt->add_subcommand("enumerate2", "two-term silting classes");
    s_enum->add_option("--algebra", algebra_file)->required();
    s_enum->add_option("--budget", budget, "dimension threshold");
    s_enum->callback([&] {
        std::vector<ChainComplex> classes =
            enumerate_two_term_silting(loader.algebra(algebra_file), budget);
        json r;
        r["verb"] = "silting enumerate2";
        r["count"] = classes.size();
        json list = json::array();
        for (const ChainComplex& t : classes) list.push_back(complex_summary(t));
        r["classes"] = list;
        emit(opt, r, elapsed());
    });

    // ----------------------------------------------------------------- bridge
    auto* br = app.add_subcommand("bridge", "the column algebra and its functors");
    br->require_subcommand(1);
    auto* b_build = br->add_subcommand("build", "build the column algebra");
    b_build->add_option("--algebra", algebra_file)->required();
    b_build->add_option("-n,--n", nparam)->required();
    b_build->add_option("--out", out_file, "output prefix for algebra + sidecar");
    b_build->callback([&] {
        BnAlgebra bn = build_Bn(loader.algebra(algebra_file), nparam);
        json r;
        r["verb"] = "bridge build";
        r["n"] = bn.n;
        r["dimension"] = bn.algebra->dimension();
        r["vertices"] = bn.algebra->quiver().num_vertices();
        r["arrows"] = bn.algebra->quiver().num_arrows();
        if (!out_file.empty()) {
            write_json(out_file + ".algebra.json", algebra_to_json(*bn.algebra));
            write_json(out_file + ".json", bn_sidecar_to_json(bn, algebra_file));
        }
        emit(opt, r, elapsed());
    });
    auto* b_theta = br->add_subcommand("theta", "column module to complex");
    b_theta->add_option("--bn", bn_file)->required();
    b_theta->add_option("--module", module_file)->required();
    b_theta->add_option("--out", out_file);
    b_theta->callback([&] {
        BnAlgebra bn = loader.bn(bn_file);
        ChainComplex x = theta(bn, loader.representation(module_file));
        json r;
        r["verb"] = "bridge theta";
        r["complex"] = complex_summary(x);
        if (!out_file.empty())
            save_with_algebra(out_file, algebra_to_json(*bn.base),
                              [&](const std::string& ap) { return complex_to_json(x, ap); });
        emit(opt, r, elapsed());
    });
    auto* b_thetainv = br->add_subcommand("theta-inv", "complex to column module");
    b_thetainv->add_option("--bn", bn_file)->required();
    b_thetainv->add_option("--complex", complex_file)->required();
    b_thetainv->add_option("--out", out_file);
    b_thetainv->callback([&] {
        BnAlgebra bn = loader.bn(bn_file);
        Representation m = theta_inv(bn, loader.complex(complex_file));
        json r;
        r["verb"] = "bridge theta-inv";
        r["dims"] = dims_json(m);
        r["totalDim"] = m.total_dim();
        if (!out_file.empty())
            save_with_algebra(out_file, algebra_to_json(*bn.algebra),
                              [&](const std::string& ap) {
                                  return representation_to_json(m, ap);
                              });
        emit(opt, r, elapsed());
    });
    auto* b_classify = br->add_subcommand("classify", "structural classification");
    b_classify->add_option("--bn", bn_file)->required();
    b_classify->add_option("--module", module_file)->required();
    b_classify->callback([&] {
        BnAlgebra bn = loader.bn(bn_file);
        RepClassification c = classify(bn, loader.representation(module_file), opt.cap);
        json r;
        r["verb"] = "bridge classify";
        r["isProjective"] = c.is_projective;
        r["isInjective"] = c.is_injective;
        r["isContractible"] = c.is_contractible;
        r["inRepP"] = c.in_rep_p;
        r["inRepI"] = c.in_rep_i;
        r["contractibleProjective"] = c.contractible_projective;
        r["contractibleInjective"] = c.contractible_injective;
        r["pd"] = c.pdim ? json(*c.pdim) : json("ExceedsCap");
        r["injdim"] = c.injdim ? json(*c.injdim) : json("ExceedsCap");
        if (c.formula_pd) r["formulaPd"] = *c.formula_pd;
        if (c.formula_injdim) r["formulaInjdim"] = *c.formula_injdim;
        emit(opt, r, elapsed());
    });
    auto* b_tot = br->add_subcommand("to-tilting", "silting complex to tilting module");
    b_tot->add_option("--bn", bn_file)->required();
    b_tot->add_option("--complex", complex_file)->required();
    b_tot->add_option("--out", out_file);
    b_tot->callback([&] {
        BnAlgebra bn = loader.bn(bn_file);
        Representation t = silting_to_tilting(bn, loader.complex(complex_file));
        TiltingReport verify = is_tilting(t, bn.n - 1, opt.cap);
        json r;
        r["verb"] = "bridge to-tilting";
        r["dims"] = dims_json(t);
        r["totalDim"] = t.total_dim();
        r["tiltingVerified"] = verify.verdict;
        if (!out_file.empty())
            save_with_algebra(out_file, algebra_to_json(*bn.algebra),
                              [&](const std::string& ap) {
                                  return representation_to_json(t, ap);
                              });
        if (!verify.verdict) g_exit = 1;
        emit(opt, r, elapsed());
    });
    auto* b_tos = br->add_subcommand("to-silting", "tilting module to silting complex");
    b_tos->add_option("--bn", bn_file)->required();
    b_tos->add_option("--module", module_file)->required();
    b_tos->add_option("--out", out_file);
    b_tos->callback([&] {
        BnAlgebra bn = loader.bn(bn_file);
        ChainComplex x = tilting_to_silting(bn, loader.representation(module_file));
        json r;
        r["verb"] = "bridge to-silting";
        r["complex"] = complex_summary(x);
        r["nSilting"] = is_n_silting(x, bn.n);
        if (!out_file.empty())
            save_with_algebra(out_file, algebra_to_json(*bn.base),
                              [&](const std::string& ap) { return complex_to_json(x, ap); });
        emit(opt, r, elapsed());
    });
    auto* b_canon = br->add_subcommand("canonical", "canonical (co)tilting module");
    b_canon->add_option("--bn", bn_file)->required();
    b_canon->add_option("--kind", kind)->check(CLI::IsMember({"tilting", "cotilting"}));
    b_canon->add_option("--out", out_file);
    b_canon->callback([&] {
        BnAlgebra bn = loader.bn(bn_file);
        Representation m =
            kind == "tilting" ? canonical_tilting(bn) : canonical_cotilting(bn);
        TiltingReport verify = kind == "tilting" ? is_tilting(m, bn.n - 1, opt.cap)
                                                 : is_cotilting(m, bn.n - 1, opt.cap);
        json r;
        r["verb"] = "bridge canonical";
        r["kind"] = kind;
        r["dims"] = dims_json(m);
        r["verified"] = verify.verdict;
        if (!out_file.empty())
            save_with_algebra(out_file, algebra_to_json(*bn.algebra),
                              [&](const std::string& ap) {
                                  return representation_to_json(m, ap);
                              });
        if (!verify.verdict) g_exit = 1;
        emit(opt, r, elapsed());
    });
    auto* b_ext = br->add_subcommand("ext-transport", "module Ext vs derived Hom");
    b_ext->add_option("--bn", bn_file)->required();
    b_ext->add_option("--source", source_file)->required();
    b_ext->add_option("--target", target_file)->required();
    b_ext->add_option("--degree", degree)->required();
    b_ext->callback([&] {
        BnAlgebra bn = loader.bn(bn_file);
        ExtTransportReport rep =
            ext_transport(bn, loader.representation(source_file),
                          loader.representation(target_file), degree, opt.cap);
        json r;
        r["verb"] = "bridge ext-transport";
        r["degree"] = degree;
        r["moduleSide"] = rep.module_side;
        r["derivedSide"] = rep.derived_side;
        r["hypothesisMet"] = rep.hypothesis_met;
        if (!rep.hypothesis_met) r["note"] = "HypothesisUnmet";
        r["agree"] = rep.agree();
        if (!rep.agree()) g_exit = 1;
        emit(opt, r, elapsed());
    });

    // ------------------------------------------------------------------ suite
    auto* suite = app.add_subcommand("suite", "named verification suites");
    suite->require_subcommand(1);
    std::string field_spec = "Fp:101";
    auto add_suite = [&](const std::string& name,
                         std::function<SuiteResult(const Field&, std::uint64_t)> run) {
        auto* sc = suite->add_subcommand(name);
        sc->add_option("--field", field_spec, "Fp:<p> or Q");
        sc->callback([&, run] {
            SuiteResult r = run(Field::parse(field_spec), opt.seed);
            if (opt.format == "json") {
                json j = suite_json(r);
                j["seed"] = opt.seed;
                emit(opt, j, elapsed());
            } else {
                print_suite_text(r);
            }
            if (!r.pass()) g_exit = 1;
        });
    };
    add_suite("example-2-3",
              [](const Field& f, std::uint64_t) { return suite_example_2_3(f); });
    add_suite("example-2-8",
              [](const Field& f, std::uint64_t) { return suite_example_2_8(f); });
    add_suite("lemma-2-2",
              [](const Field& f, std::uint64_t s) { return suite_lemma_2_2(f, s); });
    add_suite("corollary-2-6",
              [](const Field& f, std::uint64_t) { return suite_corollary_2_6(f); });
    add_suite("theorem-2-9",
              [](const Field& f, std::uint64_t) { return suite_theorem_2_9(f); });
    add_suite("windows",
              [](const Field& f, std::uint64_t s) { return suite_windows(f, s); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const SiltError& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::BudgetExceeded:
            case ErrorCode::DecompositionFailure:
                return 3;
            default:
                return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
