// bicov — bicovariant differential calculi on function algebras of finite
// groups: classification, double representations, Yang–Baxter matrices, and
// a full verification suite.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bicov/bicov.hpp"

namespace fs = std::filesystem;
using namespace bicov;

namespace {

struct Options {
    std::string group_name;
    std::string cayley_file;
    std::string perms_file;
    std::string irrep_dir;
    double tol = kDefaultTol;
    bool json_output = false;
    std::string out_file;
    int class_index = -1;
    std::string irrep_name;
    std::string phi;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct LoadedGroup {
    GroupData data;
    bool has_irreps = false;
    std::string source;
};

/// Resolve the group source and its irreps. Any failure here is an input
/// problem (exit code 2), including invalid tables and bad irrep files.
LoadedGroup load_group(const Options& opt) {
    LoadedGroup lg;
    int sources = (!opt.group_name.empty()) + (!opt.cayley_file.empty()) + (!opt.perms_file.empty());
    if (sources != 1) throw ParseError("exactly one of --group, --cayley, --perms is required");
    try {
        if (!opt.group_name.empty()) {
            lg.data = catalog(opt.group_name);
            lg.has_irreps = true;
            lg.source = opt.group_name;
        } else if (!opt.cayley_file.empty()) {
            lg.data.group = parse_cayley(read_file(opt.cayley_file));
            lg.data.group.name = fs::path(opt.cayley_file).stem().string();
            lg.source = opt.cayley_file;
        } else {
            const auto gens = parse_cycles(read_file(opt.perms_file));
            lg.data.group = from_permutations(gens).group;
            lg.data.group.name = fs::path(opt.perms_file).stem().string();
            lg.source = opt.perms_file;
        }
        if (!opt.irrep_dir.empty()) {
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(opt.irrep_dir))
                if (entry.path().extension() == ".json") files.push_back(entry.path());
            std::sort(files.begin(), files.end());
            if (files.empty()) throw ParseError("no .json irrep files in '" + opt.irrep_dir + "'");
            lg.data.irreps.clear();
            for (const auto& f : files)
                lg.data.irreps.push_back(load_irrep(lg.data.group, read_file(f.string()), f.stem().string(), opt.tol));
            lg.has_irreps = true;
        } else if (!lg.has_irreps && is_abelian(lg.data.group)) {
            lg.data.irreps = abelian_characters(lg.data.group);
            lg.has_irreps = true;
        }
    } catch (const ValidationError& ex) {
        throw ParseError(ex.what()); // input-phase validation is an input error
    }
    return lg;
}

void require_irreps(const LoadedGroup& lg) {
    if (!lg.has_irreps || lg.data.irreps.empty())
        throw MissingDataError(
            "no irreducible representations available for this nonabelian group; "
            "supply a complete list with --irrep-dir DIR (one {\"dim\",\"matrices\"} JSON file per irrep)");
}

const Irrep& select_irrep(const GroupData& gd, const std::string& name) {
    for (const Irrep& r : gd.irreps)
        if (r.label == name) return r;
    try {
        const std::size_t idx = static_cast<std::size_t>(std::stoul(name));
        if (idx < gd.irreps.size()) return gd.irreps[idx];
    } catch (...) {
    }
    std::string known;
    for (const Irrep& r : gd.irreps) known += (known.empty() ? "" : ", ") + r.label;
    throw ParseError("unknown irrep '" + name + "' (available: " + known + ")");
}

int select_element(const GroupTable& g, const std::string& phi) {
    for (std::size_t i = 0; i < g.n; ++i)
        if (g.element_name(static_cast<int>(i)) == phi) return static_cast<int>(i);
    try {
        const std::size_t idx = static_cast<std::size_t>(std::stoul(phi));
        if (idx < g.n) return static_cast<int>(idx);
    } catch (...) {
    }
    throw ParseError("unknown group element '" + phi + "'");
}

const ConjugacyClass& select_class(const std::vector<ConjugacyClass>& classes, int k) {
    if (k < 0 || static_cast<std::size_t>(k) >= classes.size())
        throw ParseError("class index " + std::to_string(k) + " out of range (group has " +
                         std::to_string(classes.size()) + " classes)");
    return classes[static_cast<std::size_t>(k)];
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out_file.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(opt.out_file);
        if (!out) throw ParseError("cannot write to '" + opt.out_file + "'");
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
    }
}

json group_json(const GroupTable& g) {
    json j;
    j["name"] = g.name.empty() ? "(custom)" : g.name;
    j["order"] = g.n;
    json names = json::array();
    for (std::size_t i = 0; i < g.n; ++i) names.push_back(g.element_name(static_cast<int>(i)));
    j["element_names"] = std::move(names);
    return j;
}

json class_json(const GroupTable& g, const ConjugacyClass& c, std::size_t index) {
    json j;
    j["index"] = index;
    j["representative"] = g.element_name(c.representative);
    j["size"] = c.size();
    json mem = json::array();
    for (int m : c.members) mem.push_back(g.element_name(m));
    j["members"] = std::move(mem);
    return j;
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

int cmd_classify(const Options& opt) {
    const LoadedGroup lg = load_group(opt);
    const GroupTable& G = lg.data.group;
    const auto classes = conjugacy_classes(G);
    const auto calculi = classify_calculi(G); // throws ValidationError on cross-check failure

    // construct each d_C and collect its residuals
    struct Row {
        std::size_t dim;
        bool zero;
        double leibniz, unit, bicov;
        std::size_t rank;
    };
    std::vector<Row> rows;
    for (const auto& c : classes) {
        const FirstOrderCalculus calc = d_C(G, c, opt.tol);
        rows.push_back({c.size(), calc.dmat.max_abs() <= opt.tol, leibniz_residual(calc), d_unit_residual(calc),
                        bicovariance_residual(calc), generated_rank(calc, opt.tol)});
    }

    if (opt.json_output) {
        json doc;
        doc["schema"] = 1;
        doc["command"] = "classify";
        doc["group"] = group_json(G);
        json jclasses = json::array();
        for (std::size_t i = 0; i < classes.size(); ++i) jclasses.push_back(class_json(G, classes[i], i));
        doc["classes"] = std::move(jclasses);
        json jcal = json::array();
        for (std::size_t i = 0; i < calculi.size(); ++i) {
            json jc;
            jc["class_index"] = i;
            jc["dimension"] = calculi[i].bimodule_dim;
            jc["zero_calculus"] = calculi[i].zero_calculus;
            json chi = json::array();
            for (const auto& x : calculi[i].chi) chi.push_back(to_json(x.c));
            jc["chi"] = std::move(chi);
            jc["residuals"] = {{"leibniz", rows[i].leibniz}, {"d_unit", rows[i].unit}, {"bicovariance", rows[i].bicov}};
            jc["generated_rank"] = rows[i].rank;
            jcal.push_back(std::move(jc));
        }
        doc["calculi"] = std::move(jcal);
        doc["ideal_cross_check"] = "ok";
        emit(opt, doc.dump(2));
        return 0;
    }

    std::ostringstream os;
    os << "group " << (G.name.empty() ? lg.source : G.name) << " of order " << G.n << ": " << classes.size()
       << " conjugacy classes\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        os << "  class " << i << " rep " << G.element_name(classes[i].representative) << " size "
           << classes[i].size() << ": ";
        if (calculi[i].zero_calculus)
            os << "zero calculus";
        else
            os << "irreducible calculus of dimension " << calculi[i].bimodule_dim;
        char buf[128];
        std::snprintf(buf, sizeof(buf), "  (leibniz %.2e, bicovariance %.2e)", rows[i].leibniz, rows[i].bicov);
        os << buf << "\n";
        os << "    chi fields:";
        for (int m : classes[i].members) os << " e-" << G.element_name(m);
        os << "\n";
    }
    os << "ad-invariant ideal cross-check: ok\n";
    emit(opt, os.str());
    return 0;
}

// ---------------------------------------------------------------------------
// bimodules
// ---------------------------------------------------------------------------

int cmd_bimodules(const Options& opt) {
    const LoadedGroup lg = load_group(opt);
    require_irreps(lg);
    const GroupTable& G = lg.data.group;
    const auto classes = conjugacy_classes(G);

    struct Entry {
        std::size_t class_index;
        std::string irrep;
        std::size_t dim;
        double qybe, closed_form;
        std::size_t commutant, z1, b1, z1inv;
        DoubleRep rep;
    };
    std::vector<Entry> entries;
    for (std::size_t ci = 0; ci < classes.size(); ++ci)
        for (const Irrep& mu : lg.data.irreps) {
            DoubleRep rep = rep_build(G, classes[ci], mu, opt.tol);
            const BicovBimodule bm = build_bimodule(rep, opt.tol);
            const CMatrix lam = lambda_matrix(bm);
            Entry e;
            e.class_index = ci;
            e.irrep = mu.label;
            e.dim = bm.dim;
            e.qybe = verify_qybe(lam);
            e.closed_form = (lam - lambda_closed_form(bm)).max_abs();
            e.commutant = double_commutant_dimension(rep, opt.tol);
            e.z1 = cocycle_space(bm, opt.tol).basis.cols();
            e.b1 = rank(coboundary_matrix(bm, 0), opt.tol);
            e.z1inv = invariant_cocycles(bm, opt.tol).basis.cols();
            e.rep = std::move(rep);
            entries.push_back(std::move(e));
        }

    // group into equivalence classes by the centralizer-restriction criterion
    std::vector<int> eq_class(entries.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (eq_class[i] >= 0) continue;
        eq_class[i] = next;
        for (std::size_t j = i + 1; j < entries.size(); ++j)
            if (eq_class[j] < 0 && equivalent(entries[i].rep, entries[j].rep, opt.tol)) eq_class[j] = next;
        ++next;
    }

    if (opt.json_output) {
        json doc;
        doc["schema"] = 1;
        doc["command"] = "bimodules";
        doc["group"] = group_json(G);
        json jclasses = json::array();
        for (std::size_t i = 0; i < classes.size(); ++i) jclasses.push_back(class_json(G, classes[i], i));
        doc["classes"] = std::move(jclasses);
        json jbm = json::array();
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const Entry& e = entries[i];
            json je;
            je["class_index"] = e.class_index;
            je["irrep"] = e.irrep;
            je["dim"] = e.dim;
            je["qybe_residual"] = e.qybe;
            je["lambda_closed_form_dev"] = e.closed_form;
            je["commutant_dim"] = e.commutant;
            je["z1_dim"] = e.z1;
            je["b1_dim"] = e.b1;
            je["invariant_z1_dim"] = e.z1inv;
            je["equivalence_class"] = eq_class[i];
            jbm.push_back(std::move(je));
        }
        doc["bimodules"] = std::move(jbm);
        json groups = json::array();
        for (int c = 0; c < next; ++c) {
            json members = json::array();
            for (std::size_t i = 0; i < entries.size(); ++i)
                if (eq_class[i] == c)
                    members.push_back("C" + std::to_string(entries[i].class_index) + ":" + entries[i].irrep);
            groups.push_back(std::move(members));
        }
        doc["equivalence_classes"] = std::move(groups);
        emit(opt, doc.dump(2));
        return 0;
    }

    std::ostringstream os;
    os << entries.size() << " bimodules over " << (G.name.empty() ? lg.source : G.name) << " (" << next
       << " equivalence classes)\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Entry& e = entries[i];
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "  C%zu:%-8s dim %2zu  qybe %.2e  closed-form %.2e  commutant %zu  (Z1,B1)=(%zu,%zu) "
                      "invZ1 %zu  eq-class %d\n",
                      e.class_index, e.irrep.c_str(), e.dim, e.qybe, e.closed_form, e.commutant, e.z1, e.b1,
                      e.z1inv, eq_class[i]);
        os << buf;
    }
    emit(opt, os.str());
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(const Options& opt) {
    const LoadedGroup lg = load_group(opt);
    require_irreps(lg);
    const VerifyReport rep = run_verify(lg.data, opt.tol);

    if (opt.json_output) {
        json doc;
        doc["schema"] = 1;
        doc["command"] = "verify";
        doc["group"] = group_json(lg.data.group);
        json checks = json::array();
        for (const CheckResult& c : rep.checks)
            checks.push_back({{"name", c.name}, {"residual", c.residual}, {"tol", c.tol}, {"pass", c.pass}});
        doc["checks"] = std::move(checks);
        doc["all_pass"] = rep.all_pass();
        doc["max_residual"] = rep.max_residual();
        emit(opt, doc.dump(2));
    } else {
        std::ostringstream os;
        for (const CheckResult& c : rep.checks) {
            char buf[256];
            std::snprintf(buf, sizeof(buf), "%-4s %-55s residual %.3e\n", c.pass ? "ok" : "FAIL", c.name.c_str(),
                          c.residual);
            os << buf;
        }
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%zu checks, max residual %.3e: %s\n", rep.checks.size(),
                      rep.max_residual(), rep.all_pass() ? "all pass" : "FAILURES PRESENT");
        os << buf;
        emit(opt, os.str());
    }
    return rep.all_pass() ? 0 : 3;
}

// ---------------------------------------------------------------------------
// ybe
// ---------------------------------------------------------------------------

int cmd_ybe(const Options& opt) {
    const LoadedGroup lg = load_group(opt);
    require_irreps(lg);
    const GroupTable& G = lg.data.group;
    const auto classes = conjugacy_classes(G);
    const ConjugacyClass& cls = select_class(classes, opt.class_index < 0 ? 0 : opt.class_index);
    const Irrep& mu = opt.irrep_name.empty() ? lg.data.irreps.front() : select_irrep(lg.data, opt.irrep_name);

    const BicovBimodule bm = build_bimodule(rep_build(G, cls, mu, opt.tol), opt.tol);
    const CMatrix lam = lambda_matrix(bm);
    const double residual = verify_qybe(lam);

    json doc = lambda_to_json(bm, lam);
    json out;
    out["schema"] = 1;
    out["command"] = "ybe";
    out["group"] = group_json(G);
    out["class_index"] = opt.class_index < 0 ? 0 : opt.class_index;
    out["irrep"] = mu.label;
    out["qybe_residual"] = residual;
    for (auto& [key, value] : doc.items()) out[key] = value;

    if (!opt.out_file.empty()) {
        std::ofstream f(opt.out_file);
        if (!f) throw ParseError("cannot write to '" + opt.out_file + "'");
        f << out.dump(2) << '\n';
        std::printf("Lambda %zux%zu written to %s, qybe residual %.3e\n", lam.rows(), lam.cols(),
                    opt.out_file.c_str(), residual);
    } else {
        std::cout << out.dump(2) << '\n';
        std::fprintf(stderr, "qybe residual %.3e\n", residual);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// calculus
// ---------------------------------------------------------------------------

int cmd_calculus(const Options& opt) {
    const LoadedGroup lg = load_group(opt);
    const GroupTable& G = lg.data.group;
    const auto classes = conjugacy_classes(G);
    const ConjugacyClass& cls = select_class(classes, opt.class_index < 0 ? 0 : opt.class_index);
    const FirstOrderCalculus calc = d_C(G, cls, opt.tol);
    const BicovBimodule& bm = *calc.gamma;
    const QuantumLie ql = verify_quantum_lie(bm, *calc.psi);

    std::vector<int> phis;
    if (opt.phi.empty())
        for (std::size_t u = 0; u < G.n; ++u) phis.push_back(static_cast<int>(u));
    else
        phis.push_back(select_element(G, opt.phi));

    if (opt.json_output) {
        json doc;
        doc["schema"] = 1;
        doc["command"] = "calculus";
        doc["group"] = group_json(G);
        doc["class"] = class_json(G, cls, static_cast<std::size_t>(opt.class_index < 0 ? 0 : opt.class_index));
        doc["dimension"] = bm.dim;
        doc["zero_calculus"] = calc.dmat.max_abs() <= opt.tol;
        json chi = json::array();
        for (const auto& qlchi : ql.chi) chi.push_back(to_json(qlchi.c));
        doc["chi"] = std::move(chi);
        json fmat = json::array(), rmat = json::array();
        for (std::size_t i = 0; i < bm.dim; ++i) {
            json frow = json::array(), rrow = json::array();
            for (std::size_t j = 0; j < bm.dim; ++j) {
                frow.push_back(to_json(bm.falg(i, j).c));
                rrow.push_back(to_json(bm.rfun(i, j).c));
            }
            fmat.push_back(std::move(frow));
            rmat.push_back(std::move(rrow));
        }
        doc["f"] = std::move(fmat);
        doc["R"] = std::move(rmat);
        doc["residuals"] = {{"leibniz", leibniz_residual(calc)},
                            {"d_unit", d_unit_residual(calc)},
                            {"bicovariance", bicovariance_residual(calc)},
                            {"quantum_lie_coproduct", ql.coproduct_residual},
                            {"quantum_lie_counit", ql.counit_residual},
                            {"quantum_lie_adjoint", ql.adjoint_residual},
                            {"quantum_lie_differential", ql.differential_residual}};
        json diffs = json::array();
        for (int u : phis) {
            json jd;
            jd["phi"] = G.element_name(u);
            json coords = json::array();
            for (std::size_t v = 0; v < G.n; ++v) {
                json per_v = json::array();
                for (std::size_t i = 0; i < bm.dim; ++i)
                    per_v.push_back(to_json(calc.dmat(static_cast<std::size_t>(u), v * bm.dim + i)));
                coords.push_back(std::move(per_v));
            }
            jd["dphi"] = std::move(coords);
            diffs.push_back(std::move(jd));
        }
        doc["differentials"] = std::move(diffs);
        emit(opt, doc.dump(2));
        return 0;
    }

    std::ostringstream os;
    os << "calculus d_C on class {";
    for (std::size_t i = 0; i < cls.members.size(); ++i)
        os << (i ? ", " : "") << G.element_name(cls.members[i]);
    os << "} of " << (G.name.empty() ? lg.source : G.name) << ", dimension " << bm.dim << "\n";
    for (int u : phis) {
        os << "  d phi_" << G.element_name(u) << " =";
        bool any = false;
        for (std::size_t v = 0; v < G.n; ++v)
            for (std::size_t i = 0; i < bm.dim; ++i) {
                const cplx z = calc.dmat(static_cast<std::size_t>(u), v * bm.dim + i);
                if (z == cplx{}) continue;
                any = true;
                os << " ";
                if (z == cplx{1.0})
                    os << "+";
                else if (z == cplx{-1.0})
                    os << "-";
                else
                    os << z << "*";
                os << "phi_" << G.element_name(static_cast<int>(v)) << ".w_"
                   << G.element_name(cls.members[i]);
            }
        if (!any) os << " 0";
        os << "\n";
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf), "residuals: leibniz %.2e, bicovariance %.2e, quantum-lie %.2e\n",
                  leibniz_residual(calc), bicovariance_residual(calc),
                  std::max({ql.coproduct_residual, ql.counit_residual, ql.adjoint_residual}));
    os << buf;
    emit(opt, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bicovariant differential calculi on finite groups"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool with_selectors) {
        sub->add_option("--group", opt.group_name, "catalog group: Z<n>, S3, D4, Q8, A4");
        sub->add_option("--cayley", opt.cayley_file, "Cayley table file");
        sub->add_option("--perms", opt.perms_file, "permutation generators file (cycle notation)");
        sub->add_option("--irrep-dir", opt.irrep_dir, "directory of irrep JSON files");
        sub->add_option("--tol", opt.tol, "numerical tolerance")->envname("BICOV_TOL");
        sub->add_flag("--json", opt.json_output, "emit a JSON report");
        sub->add_option("--out", opt.out_file, "write the report to a file");
        if (with_selectors) {
            sub->add_option("--class", opt.class_index, "conjugacy class index (canonical order)");
            sub->add_option("--irrep", opt.irrep_name, "irrep label or index");
        }
    };

    CLI::App* classify = app.add_subcommand("classify", "classify the bicovariant calculi of a group");
    add_common(classify, false);
    CLI::App* bimodules = app.add_subcommand("bimodules", "build all (class, irrep) bimodules");
    add_common(bimodules, false);
    CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
    add_common(verify, false);
    CLI::App* ybe = app.add_subcommand("ybe", "export the Yang-Baxter matrix of one bimodule");
    add_common(ybe, true);
    CLI::App* calculus = app.add_subcommand("calculus", "print the differential of a class calculus");
    add_common(calculus, true);
    calculus->add_option("--phi", opt.phi, "basis function (element name or index); all when omitted");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) return cmd_classify(opt);
        if (bimodules->parsed()) return cmd_bimodules(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (ybe->parsed()) return cmd_ybe(opt);
        if (calculus->parsed()) return cmd_calculus(opt);
    } catch (const ParseError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    } catch (const MissingDataError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 4;
    } catch (const ValidationError& ex) {
        std::cerr << "verification failure: " << ex.what() << '\n';
        return 3;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
    return 0;
}
