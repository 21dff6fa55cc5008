#include "gkm/cli.hpp"

#include "gkm/invbases.hpp"
#include "gkm/serialize.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <sstream>

namespace gkm {

namespace {

struct Options {
    std::string type;
    int rank = 0;
    std::string sigma1, sigma2;
    std::uint64_t seed = 1;
    unsigned long long max_group = kDefaultGroupCap;
    std::string out;
    std::string graph;
    std::string what = "graph";
    std::string format = "json";
    std::string index;
    std::string cls;
    std::string base_point;
    int random_degree = -1;
    int invariants_degree = -1;
    bool verify = false;
    bool basis = false;
    bool schubert = false;
    bool check = false;
    bool matrix = false;
    bool exhaustive = false;
    bool full_independence = false;
};

struct UsageError : Error {
    using Error::Error;
};

std::vector<int> parse_int_list(const std::string& s)
{
    std::vector<int> v;
    if (s.empty())
        return v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int x = std::stoi(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            v.push_back(x);
        } catch (const std::exception&) {
            throw UsageError("expected a comma-separated list of integers, got '" + s + "'");
        }
    }
    return v;
}

std::shared_ptr<const RootSystem> root_system(const Options& o)
{
    if (o.type.empty() || o.rank <= 0)
        throw UsageError("--type and --rank are required");
    return std::make_shared<const RootSystem>(RootSystem::build(parse_kind(o.type), o.rank));
}

std::vector<int> sigma2_or_default(const Options& o, const RootSystem& rs, bool bundle_default)
{
    if (!o.sigma2.empty())
        return parse_int_list(o.sigma2);
    if (bundle_default) {
        std::vector<int> s;
        for (int i = 2; i <= rs.rank(); ++i)
            s.push_back(i);
        return s;
    }
    return all_simple(rs);
}

void emit(const Options& o, std::ostream& out, const std::string& text)
{
    if (o.out.empty())
        out << text;
    else
        write_text_file(o.out, text);
}

int finish(const Report& rep, std::ostream& out)
{
    out << rep.str();
    out << "RESULT: " << (rep.ok() ? "PASS" : "FAIL") << '\n';
    return rep.ok() ? 0 : 1;
}

std::string index_name(const MultiIndex& I)
{
    std::string s = "c[";
    for (std::size_t k = 0; k < I.size(); ++k)
        s += (k ? "," : "") + std::to_string(I[k]);
    return s + "]";
}

int cmd_build(const Options& o, std::ostream& out)
{
    auto rs = root_system(o);
    auto cg = build_coset_graph(rs, parse_int_list(o.sigma1), sigma2_or_default(o, *rs, false), {o.max_group, {}});
    out << rs->name() << " coset graph: " << cg.graph->vertex_count() << " vertices, " << cg.graph->edge_count() << " oriented edges\n";
    if (!o.out.empty())
        write_text_file(o.out, graph_to_json(*cg.graph).dump(2) + "\n");
    GkmOptions go;
    go.full_independence = o.full_independence;
    return finish(verify_gkm(*cg.graph, go), out);
}

int cmd_verify(const Options& o, std::ostream& out)
{
    std::shared_ptr<GkmGraph> g;
    if (!o.graph.empty()) {
        if (!std::filesystem::exists(o.graph))
            throw UsageError("graph file not found: " + o.graph);
        g = graph_from_json(Json::parse(read_text_file(o.graph)));
    } else {
        auto rs = root_system(o);
        g = build_coset_graph(rs, parse_int_list(o.sigma1), sigma2_or_default(o, *rs, false), {o.max_group, {}}).graph;
    }
    GkmOptions go;
    go.full_independence = o.full_independence;
    Report rep = verify_gkm(*g, go);
    if (!o.cls.empty()) {
        CohClass c = class_from_json(Json::parse(read_text_file(o.cls)), g);
        auto cc = is_coh_class(c);
        rep.add("class", cc.ok, cc.witness);
    }
    return finish(rep, out);
}

int cmd_schubert(const Options& o, std::ostream& out)
{
    auto rs = root_system(o);
    auto g = std::make_shared<const WeylGroup>(rs, o.max_group);
    SchubertTable t(g);
    if (o.matrix) {
        emit(o, out, symmetrized_matrix(t).json(*g) + "\n");
    } else {
        std::vector<std::string> names;
        std::vector<CohClass> cls;
        for (int u = 0; u < g->size(); ++u) {
            names.push_back("tau[" + rs->word_label(g->element(u)) + "]");
            cls.push_back(t.tau(u));
        }
        emit(o, out, class_table_tsv(*g, names, cls));
    }
    if (!o.check)
        return 0;
    Report rep;
    rep.merge(check_schubert_conditions(t));
    std::vector<std::pair<int, int>> pairs;
    if (g->size() <= 48) {
        for (int a = 0; a < g->size(); ++a)
            for (int b = 0; b < g->size(); ++b)
                pairs.emplace_back(a, b);
    } else {
        Rng rng(o.seed);
        for (int k = 0; k < 200; ++k)
            pairs.emplace_back(rng.uniform(0, g->size() - 1), rng.uniform(0, g->size() - 1));
    }
    rep.merge(key_identity_check(*g, pairs));
    rep.merge(h_inverse_check(*g));
    std::string w;
    for (int x = 0; x < g->size() && w.empty(); ++x) {
        auto [a, b] = transition_matrices(t, x);
        if (!is_identity_matrix(poly_matmul(a.entries, b.entries)))
            w = "a^w b^w != 1 for w = " + g->element(x).str();
    }
    rep.add("transition_inverse", w.empty(), w);
    rep.merge(check_symmetrized_matrix(t, symmetrized_matrix(t)), "symmetrized.");
    return finish(rep, out);
}

int cmd_table(const Options& o, std::ostream& out)
{
    if (o.schubert && !o.basis)
        return cmd_schubert(o, out);
    auto rs = root_system(o);
    auto g = std::make_shared<const WeylGroup>(rs, o.max_group);
    GraphPtr graph = flag_graph(*g);
    BasisFamily fam = basis_family(*g, graph);
    std::vector<std::string> names;
    for (const auto& I : fam.indices)
        names.push_back(index_name(I));
    emit(o, out, class_table_tsv(*g, names, fam.classes));
    return 0;
}

BundleMap make_cli_bundle(const Options& o)
{
    auto rs = root_system(o);
    return build_bundle(rs, parse_int_list(o.sigma1), sigma2_or_default(o, *rs, true), {o.max_group, {}});
}

int cmd_bundle(const Options& o, std::ostream& out)
{
    BundleMap b = make_cli_bundle(o);
    out << b.rs->name() << " bundle: total " << b.total->vertex_count() << " vertices, base " << b.base->vertex_count()
        << " vertices, fiber " << b.fiber_coset->graph->vertex_count() << " vertices\n";
    if (!o.out.empty())
        write_text_file(o.out, bundle_to_json(b).dump(2) + "\n");
    if (!o.verify)
        return 0;
    return finish(verify_bundle(b), out);
}

int cmd_holonomy(const Options& o, std::ostream& out)
{
    BundleMap b = make_cli_bundle(o);
    HolonomyOptions ho;
    ho.exhaustive = o.exhaustive;
    if (!o.base_point.empty()) {
        ho.base_point = b.base->find_vertex(o.base_point);
        if (ho.base_point < 0)
            throw UsageError("unknown base vertex: " + o.base_point);
    }
    HolonomyGroup h = holonomy(b, ho);
    out << "base point " << b.base->name(h.base_point) << ", fiber " << h.fiber->vertex_count() << " vertices\n";
    for (const auto& l : h.generators) {
        out << "loop (" << l.origin << "):";
        for (int p : l.path)
            out << ' ' << b.base->name(p);
        out << '\n';
    }
    out << "group order " << h.order() << '\n';
    return finish(h.report, out);
}

int cmd_basis(const Options& o, std::ostream& out)
{
    auto rs = root_system(o);
    auto g = std::make_shared<const WeylGroup>(rs, o.max_group);
    SchubertTable t(g);
    BasisFamily fam = basis_family(*g, t.graph());
    BasisVerdict v = verify_basis(t, fam, o.seed);
    out << v.json() << '\n';
    bool ok = v.independent && v.spanning;
    if (o.invariants_degree >= 0) {
        Report rep = check_bases_over_invariants(*rs, fam.indices, o.invariants_degree);
        out << rep.str();
        ok = ok && rep.ok();
    }
    out << "RESULT: " << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? 0 : 1;
}

int cmd_express(const Options& o, std::ostream& out)
{
    BundleMap b = make_cli_bundle(o);
    if (!b.sigma1.empty())
        throw UsageError("express works on the full flag graph (no --sigma1)");
    const RootSystem& rs = *b.rs;
    auto g = std::make_shared<const WeylGroup>(b.rs, o.max_group);
    int n = rs.rank();
    std::vector<MultiIndex> fiber_set = n >= 2 ? index_set(rs.kind(), n - 1) : std::vector<MultiIndex>{{}};
    std::vector<CohClass> globals;
    std::vector<std::string> names;
    for (const auto& J : fiber_set) {
        MultiIndex I{0};
        I.insert(I.end(), J.begin(), J.end());
        globals.push_back(class_cI(*g, b.total, I));
        names.push_back(index_name(I));
    }
    CohClass target;
    if (!o.index.empty()) {
        target = class_cI(*g, b.total, parse_int_list(o.index));
    } else if (!o.cls.empty()) {
        target = class_from_json(Json::parse(read_text_file(o.cls)), b.total);
    } else if (o.random_degree >= 0) {
        SchubertTable t(g);
        Rng rng(o.seed);
        CohClass c = random_class(t, o.random_degree, rng);
        target = CohClass(b.total, c.values());
    } else {
        throw UsageError("express needs --index, --class or --random-degree");
    }
    Expression ex = express_in_basis(b, globals, target);
    std::ostringstream os;
    os << "base";
    for (const auto& nm : names)
        os << "\tbeta(" << nm << ")";
    os << '\n';
    for (int p = 0; p < b.base->vertex_count(); ++p) {
        os << b.base->name(p);
        for (const auto& beta : ex.beta)
            os << '\t' << beta[p].str();
        os << '\n';
    }
    out << os.str();
    return finish(ex.report, out);
}

int cmd_export(const Options& o, std::ostream& out)
{
    if (o.format != "json" && o.format != "dot")
        throw UsageError("--format must be json or dot");
    auto rs = root_system(o);
    if (o.what == "graph") {
        auto cg = build_coset_graph(rs, parse_int_list(o.sigma1), sigma2_or_default(o, *rs, false), {o.max_group, {}});
        emit(o, out, o.format == "dot" ? graph_to_dot(*cg.graph) : graph_to_json(*cg.graph).dump(2) + "\n");
    } else if (o.what == "bundle") {
        BundleMap b = make_cli_bundle(o);
        if (o.format == "dot")
            throw UsageError("bundles export as json only");
        emit(o, out, bundle_to_json(b).dump(2) + "\n");
    } else if (o.what == "class") {
        if (o.format == "dot")
            throw UsageError("classes export as json only");
        if (o.index.empty())
            throw UsageError("class export needs --index");
        auto g = std::make_shared<const WeylGroup>(rs, o.max_group);
        CohClass c = class_cI(*g, flag_graph(*g), parse_int_list(o.index));
        emit(o, out, class_to_json(c).dump(2) + "\n");
    } else {
        throw UsageError("--what must be graph, bundle or class");
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"GKM graph toolkit", "gkm"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* c) {
        c->add_option("--type", o.type, "root system type A, B, C or D");
        c->add_option("--rank", o.rank, "rank n");
        c->add_option("--sigma1", o.sigma1, "simple roots of the smaller subgroup, e.g. 1,3");
        c->add_option("--sigma2", o.sigma2, "simple roots of the larger subgroup");
        c->add_option("--seed", o.seed, "seed for random evaluation points");
        c->add_option("--max-group-order", o.max_group, "enumeration cap");
        c->add_option("--out", o.out, "output file");
    };
    auto* build = app.add_subcommand("build", "build a coset graph and check the axioms");
    common(build);
    build->add_flag("--full-independence", o.full_independence, "require linear independence of all labels at a vertex");
    auto* verify = app.add_subcommand("verify", "check the GKM axioms of a graph");
    common(verify);
    verify->add_option("--graph", o.graph, "graph JSON file");
    verify->add_option("--class", o.cls, "class JSON file to check on the graph");
    verify->add_flag("--full-independence", o.full_independence, "require linear independence of all labels at a vertex");
    auto* schubert = app.add_subcommand("schubert", "equivariant Schubert classes");
    common(schubert);
    schubert->add_flag("--check", o.check, "run the defining-condition and identity checks");
    schubert->add_flag("--matrix", o.matrix, "emit the symmetrized transition matrix as JSON");
    auto* table = app.add_subcommand("table", "class tables");
    common(table);
    table->add_flag("--basis", o.basis, "invariant basis classes c_I");
    table->add_flag("--schubert", o.schubert, "Schubert classes");
    auto* bundle = app.add_subcommand("bundle", "fiber bundle W/W1 -> W/W2");
    common(bundle);
    bundle->add_flag("--verify", o.verify, "check the fibration and bundle axioms");
    auto* hol = app.add_subcommand("holonomy", "holonomy group of a bundle");
    common(hol);
    hol->add_option("--base-point", o.base_point, "base vertex name");
    hol->add_flag("--exhaustive", o.exhaustive, "also use all closed walks up to length 6");
    auto* basis = app.add_subcommand("basis", "verify the invariant basis");
    common(basis);
    basis->add_option("--invariants", o.invariants_degree, "also check the basis over invariants up to this degree");
    auto* express = app.add_subcommand("express", "expand a class over the fiber basis");
    common(express);
    express->add_option("--index", o.index, "target class c_I, e.g. 1,1");
    express->add_option("--class", o.cls, "target class JSON file");
    express->add_option("--random-degree", o.random_degree, "random target class of this maximal degree");
    auto* exp = app.add_subcommand("export", "export graphs, bundles or classes");
    common(exp);
    exp->add_option("--what", o.what, "graph, bundle or class");
    exp->add_option("--format", o.format, "json or dot");
    exp->add_option("--index", o.index, "class index for --what class");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (build->parsed())
            return cmd_build(o, out);
        if (verify->parsed())
            return cmd_verify(o, out);
        if (schubert->parsed())
            return cmd_schubert(o, out);
        if (table->parsed())
            return cmd_table(o, out);
        if (bundle->parsed())
            return cmd_bundle(o, out);
        if (hol->parsed())
            return cmd_holonomy(o, out);
        if (basis->parsed())
            return cmd_basis(o, out);
        if (express->parsed())
            return cmd_express(o, out);
        if (exp->parsed())
            return cmd_export(o, out);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed JSON: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

}  // namespace gkm
