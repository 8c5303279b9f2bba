// Command-line front end: fixtures, property checks, searches, extractions and constants.
//
// Exit codes: 0 holds/found, 1 fails/absent, 2 budget exhausted, 3 usage or input error.

#include <pwind/certificate.hh>
#include <pwind/constants.hh>
#include <pwind/constellation.hh>
#include <pwind/containment.hh>
#include <pwind/extraction.hh>
#include <pwind/generators.hh>
#include <pwind/ramsey.hh>
#include <pwind/seedling.hh>
#include <pwind/width.hh>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace pwind;
using std::string;
using std::vector;

namespace
{
    enum Exit
    {
        Holds = 0,
        Fails = 1,
        Exhausted = 2,
        Usage = 3
    };

    class UsageError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    auto read_file(const string & path) -> string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw UsageError("cannot read " + path);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    auto write_file(const string & path, const string & text) -> void
    {
        std::ofstream out(path, std::ios::binary);
        if (! out || ! (out << text))
            throw UsageError("cannot write " + path);
    }

    struct Report
    {
        string command;
        vector<std::pair<string, string>> inputs;
        string outcome;
        std::optional<std::uint64_t> budget_used;
        vector<std::pair<string, string>> facts;
        string certificate;
        string certificate_path;

        auto input(const string & path) -> string
        {
            auto text = read_file(path);
            inputs.emplace_back(path, hex64(fnv1a64(text)));
            return text;
        }

        auto fact(const string & key, const string & value) -> void { facts.emplace_back(key, value); }

        auto emit() -> void
        {
            std::ostringstream out;
            out << "command: " << command << '\n';
            for (auto & [path, hash] : inputs)
                out << "input: " << path << " fnv1a64=" << hash << '\n';
            out << "outcome: " << outcome << '\n';
            if (budget_used)
                out << "budget-used: " << *budget_used << '\n';
            for (auto & [k, v] : facts)
                out << k << ": " << v << '\n';
            if (! certificate.empty()) {
                if (! certificate_path.empty()) {
                    write_file(certificate_path, certificate);
                    out << "certificate: " << certificate_path << " fnv1a64=" << hex64(fnv1a64(certificate)) << '\n';
                }
                else
                    out << "certificate: inline\n" << certificate;
            }
            std::cout << out.str();
        }
    };

    auto verdict(Report & r, bool holds) -> int
    {
        r.outcome = holds ? "holds" : "fails";
        r.emit();
        return holds ? Holds : Fails;
    }

    auto finish(Report & r, Outcome o) -> int
    {
        r.outcome = string(outcome_name(o));
        r.emit();
        return o == Outcome::Found ? Holds : o == Outcome::Absent ? Fails : Exhausted;
    }

    auto join(const vector<int> & vs) -> string
    {
        string s;
        for (std::size_t i = 0; i < vs.size(); ++i)
            s += (i ? " " : "") + std::to_string(vs[i]);
        return s;
    }

    auto seedling_or_default(const string & given, const string & graph_path) -> string
    {
        return given.empty() ? graph_path + ".seedling" : given;
    }

    struct Cli
    {
        CLI::App app{"Pathwidth and induced-minor toolkit"};
        vector<std::pair<CLI::App *, std::function<int()>>> leaves;
        Report report;

        std::uint64_t budget = 10'000'000;
        string out;
        std::uint64_t seed = 1;

        auto leaf(CLI::App * parent, const string & name, const string & help, std::function<int()> run) -> CLI::App *
        {
            auto sub = parent->add_subcommand(name, help);
            leaves.emplace_back(sub, std::move(run));
            return sub;
        }

        auto with_budget(CLI::App * sub) -> void { sub->add_option("--budget", budget, "search node budget"); }
        auto with_out(CLI::App * sub) -> void { sub->add_option("-o,--out", out, "output or certificate file"); }

        auto graph(const string & path) -> Graph { return parse_graph(report.input(path)); }
        auto seedling(const Graph & host, const string & path) -> Seedling { return parse_seedling(host, report.input(path)); }

        auto emit_generated(const string & text, const vector<std::pair<string, string>> & sidecars = {}) -> int
        {
            if (out.empty()) {
                if (! sidecars.empty())
                    throw UsageError("this family writes companion files; give -o");
                std::cout << text;
                return Holds;
            }
            write_file(out, text);
            report.outcome = "written";
            report.fact("file", out + " fnv1a64=" + hex64(fnv1a64(text)));
            for (auto & [suffix, body] : sidecars) {
                write_file(out + suffix, body);
                report.fact("file", out + suffix + " fnv1a64=" + hex64(fnv1a64(body)));
            }
            report.emit();
            return Holds;
        }

        Cli()
        {
            app.require_subcommand(1);
            build_generate();
            build_check();
            build_find();
            build_extract();
            build_constants();
        }

        // ---- generate ----

        int gi1 = 0, gi2 = 0, gi3 = 0;
        double gp = 0.5;
        string gfile;

        auto gen(CLI::App * g, const string & name, const string & help, vector<string> params,
            std::function<int()> run) -> void
        {
            auto sub = leaf(g, name, help, std::move(run));
            int * slots[] = {&gi1, &gi2, &gi3};
            int k = 0;
            for (auto & p : params) {
                if (p == "p")
                    sub->add_option("p", gp, "probability")->required();
                else if (p == "file")
                    sub->add_option("spec", gfile, "constellation spec file")->required();
                else
                    sub->add_option(p, *slots[k++], p)->required();
            }
            sub->add_option("--seed", seed, "random seed");
            with_out(sub);
        }

        auto build_generate() -> void
        {
            auto g = app.add_subcommand("generate", "write a fixture graph");
            g->require_subcommand(1);
            gen(g, "tree", "T_{d,r}", {"d", "r"}, [this] { return emit_generated(serialize_graph(make_tree(gi1, gi2).graph)); });
            gen(g, "wall", "r-by-r wall", {"r"}, [this] { return emit_generated(serialize_graph(make_wall(gi1).graph)); });
            gen(g, "complete", "K_n", {"n"}, [this] { return emit_generated(serialize_graph(make_complete(gi1))); });
            gen(g, "bipartite", "K_{s,t}", {"s", "t"},
                [this] { return emit_generated(serialize_graph(make_complete_bipartite(gi1, gi2))); });
            gen(g, "path", "P_n", {"n"}, [this] { return emit_generated(serialize_graph(make_path(gi1))); });
            gen(g, "cycle", "C_n", {"n"}, [this] { return emit_generated(serialize_graph(make_cycle(gi1))); });
            gen(g, "random", "G(n, p)", {"n", "p"}, [this] { return emit_generated(serialize_graph(random_graph(gi1, gp, seed))); });
            gen(g, "random-tree", "uniform labelled tree", {"n"},
                [this] { return emit_generated(serialize_graph(random_tree(gi1, seed))); });
            gen(g, "digraph", "random digraph", {"n", "p"},
                [this] { return emit_generated(serialize_digraph(random_digraph(gi1, gp, seed))); });
            gen(g, "constellation", "host of a constellation spec", {"file"}, [this] {
                auto c = build_constellation(parse_constellation_spec(report.input(gfile)));
                return emit_generated(serialize_graph(c.host), {{".s", set_certificate("s", c.s_vertices)}});
            });
            gen(g, "crossing-paths", "pairwise touching induced paths", {"n"}, [this] {
                auto cp = crossing_paths_family(gi1, seed);
                return emit_generated(serialize_graph(cp.graph), {{".paths", serialize_paths(cp.paths)}});
            });
            gen(g, "broom", "root joined to the x-ends of crossing paths", {"n"}, [this] {
                auto sd = broom_seedling(gi1);
                return emit_generated(serialize_graph(sd.host), {{".seedling", serialize_seedling(sd)}});
            });
            gen(g, "two-level-broom", "fixture for the depth-two tree construction", {}, [this] {
                auto sd = two_level_broom();
                return emit_generated(serialize_graph(sd.host), {{".seedling", serialize_seedling(sd)}});
            });
            gen(g, "random-seedling", "random valid seedling", {"a_len", "lambda", "max_len", "p"}, [this] {
                auto sd = random_seedling(gi1, gi2, gi3, gp, seed);
                return emit_generated(serialize_graph(sd.host), {{".seedling", serialize_seedling(sd)}});
            });
            gen(g, "obs-trees-a", "subdivided binary tree inside a wall", {"r"}, [this] {
                auto w = obs_trees_a(gi1);
                return emit_generated(serialize_graph(w.host), {{".embedding", embedding_certificate(w.pattern, w.witness)}});
            });
            gen(g, "obs-trees-b", "T_{2^d,r}-model in T_{2,dr}", {"d", "r"}, [this] {
                auto m = obs_trees_b(gi1, gi2);
                return emit_generated(serialize_graph(m.host), {{".model", model_certificate(m)}});
            });
        }

        // ---- check ----

        string f1, f2, f3;
        int k_opt = -1, q_opt = -1, r_opt = -1, t_opt = 2, delta_opt = 1, lambda_opt = 1;
        bool flag_interrupted = false, flag_no_common = false;

        auto files(CLI::App * sub, vector<string> names) -> void
        {
            string * slots[] = {&f1, &f2, &f3};
            for (std::size_t i = 0; i < names.size(); ++i)
                sub->add_option(names[i], *slots[i], names[i])->required();
        }

        auto build_check() -> void
        {
            auto c = app.add_subcommand("check", "verify a property or certificate");
            c->require_subcommand(1);

            auto pd = leaf(c, "path-decomposition", "bags form a path decomposition", [this] {
                auto g = graph(f1);
                auto d = parse_bags_certificate(report.input(f2), g.order());
                auto res = verify_path_decomposition(g, d);
                report.fact("width", std::to_string(res.width));
                if (! res.valid)
                    report.fact("reason", res.reason);
                return verdict(report, res.valid && (k_opt < 0 || res.width <= k_opt));
            });
            files(pd, {"graph", "bags"});
            pd->add_option("--width", k_opt, "also require width at most this");

            auto mo = leaf(c, "model", "branch sets form a model", [this] {
                auto g = graph(f1);
                auto res = verify_model(parse_model_certificate(g, report.input(f2)));
                if (! res.valid)
                    report.fact("reason", res.reason);
                return verdict(report, res.valid);
            });
            files(mo, {"graph", "certificate"});

            auto em = leaf(c, "embedding", "image is an induced copy of the pattern", [this] {
                auto g = graph(f1);
                auto [pattern, e] = parse_embedding_certificate(report.input(f2));
                return verdict(report, verify_embedding(g, pattern, e));
            });
            files(em, {"graph", "certificate"});

            for (string label : {"clique", "stable"}) {
                auto sub = leaf(c, label, "listed vertices form a " + label + " set", [this, label] {
                    auto g = graph(f1);
                    auto [got, vs] = parse_set_certificate(report.input(f2));
                    if (got != label)
                        throw UsageError("certificate is a [" + got + "] list");
                    for (int v : vs)
                        if (v < 0 || v >= g.order())
                            throw GraphError("vertex out of range");
                    auto s = g.set(vs);
                    bool ok = static_cast<int>(vs.size()) == s.size() && (k_opt < 0 || s.size() >= k_opt)
                        && (label == "clique" ? is_clique(g, s) : is_stable(g, s));
                    report.fact("size", std::to_string(vs.size()));
                    return verdict(report, ok);
                });
                files(sub, {"graph", "certificate"});
                sub->add_option("--size", k_opt, "also require at least this many vertices");
            }

            auto ds = leaf(c, "digraph-stable", "stable set of a digraph", [this] {
                auto d = parse_digraph(report.input(f1));
                auto [got, vs] = parse_set_certificate(report.input(f2));
                auto u = d.underlying();
                for (int v : vs)
                    if (v < 0 || v >= d.order())
                        throw GraphError("vertex out of range");
                auto s = u.set(vs);
                bool ok = got == "stable" && static_cast<int>(vs.size()) == s.size() && is_stable(u, s);
                if (r_opt >= 0)
                    for (int v : vs)
                        ok = ok && d.out_degree(v) <= r_opt;
                report.fact("size", std::to_string(vs.size()));
                return verdict(report, ok);
            });
            files(ds, {"digraph", "certificate"});
            ds->add_option("--r", r_opt, "also require out-degree at most r");

            auto sd = leaf(c, "seedling", "seedling validity", [this] {
                auto g = graph(f1);
                auto res = check_seedling(seedling(g, f2));
                if (! res.valid)
                    report.fact("reason", res.reason);
                return verdict(report, res.valid);
            });
            files(sd, {"graph", "seedling"});

            auto rg = leaf(c, "rigidity", "seedling is kappa-rigid", [this] {
                auto g = graph(f1);
                Budget b(budget);
                auto res = is_rigid(seedling(g, f2), k_opt, b);
                report.budget_used = b.used();
                if (res.verdict == Rigidity::Exhausted) {
                    report.outcome = "exhausted";
                    report.emit();
                    return static_cast<int>(Exhausted);
                }
                if (res.verdict == Rigidity::NotRigid)
                    for (auto & p : res.witness)
                        report.fact("anticomplete-path", join(p.vertices));
                return verdict(report, res.verdict == Rigidity::Rigid);
            });
            files(rg, {"graph", "seedling"});
            rg->add_option("--kappa", k_opt, "rigidity level")->required();
            with_budget(rg);

            auto co = leaf(c, "constellation", "constellation invariants and orderings", [this] {
                auto g = graph(f1);
                auto [label, vs] = parse_set_certificate(report.input(f2));
                auto con = constellation_from(g, g.set(vs));
                report.fact("s", std::to_string(con.s()));
                report.fact("l", std::to_string(con.l()));
                bool ok = true;
                if (k_opt >= 0)
                    ok = ok && is_d_ample(con, k_opt);
                if (flag_no_common)
                    ok = ok && no_common_neighbours(con);
                if (flag_interrupted) {
                    auto ord = find_interrupted_ordering(con);
                    if (ord)
                        report.fact("interrupted-ordering", join(*ord));
                    ok = ok && ord.has_value();
                }
                if (q_opt >= 0) {
                    auto ord = find_zigzagged_ordering(con, q_opt);
                    if (ord)
                        report.fact("zigzagged-ordering", join(*ord));
                    ok = ok && ord.has_value();
                }
                return verdict(report, ok);
            });
            files(co, {"graph", "s-file"});
            co->add_option("--ample", k_opt, "require d-ample");
            co->add_flag("--interrupted", flag_interrupted, "require an interrupted ordering");
            co->add_option("--zigzagged", q_opt, "require a q-zigzagged ordering");
            co->add_flag("--no-common", flag_no_common, "require no common neighbours");

            auto td = leaf(c, "tidy", "no K_{t+1} and no induced K_{t,t}-model", [this] {
                auto g = graph(f1);
                Budget b(budget);
                auto res = check_tidy(g, t_opt, b);
                report.budget_used = b.used();
                report.fact("clique-search", string(outcome_name(res.clique_outcome)));
                report.fact("ktt-search", string(outcome_name(res.ktt_outcome)));
                if (res.clique_outcome == Outcome::Found || res.ktt_outcome == Outcome::Found)
                    return verdict(report, false);
                if (! res.tidy()) {
                    report.outcome = "exhausted";
                    report.emit();
                    return static_cast<int>(Exhausted);
                }
                return verdict(report, true);
            });
            files(td, {"graph"});
            td->add_option("--t", t_opt, "t")->required();
            with_budget(td);

            auto mg = leaf(c, "magic", "magic-lemma conclusions", [this] {
                auto g = graph(f1);
                auto paths = parse_paths(report.input(f2), g.order());
                auto res = verify_magic(g, paths, delta_opt, lambda_opt, parse_magic_certificate(report.input(f3)));
                if (! res.valid)
                    report.fact("reason", res.reason);
                return verdict(report, res.valid);
            });
            files(mg, {"graph", "paths", "certificate"});
            mg->add_option("--delta", delta_opt, "delta")->required();
            mg->add_option("--lambda", lambda_opt, "lambda")->required();
        }

        // ---- find ----

        auto build_find() -> void
        {
            auto f = app.add_subcommand("find", "search for a structure");
            f->require_subcommand(1);

            auto im = leaf(f, "induced-minor", "induced H-model in G", [this] {
                auto h = graph(f1);
                auto g = graph(f2);
                Budget b(budget);
                auto res = find_induced_minor(g, h, b);
                report.budget_used = b.used();
                if (res.is_found()) {
                    if (! verify_model(*res.witness).valid)
                        throw std::logic_error("model failed verification");
                    report.certificate = model_certificate(*res.witness);
                }
                return finish(report, res.outcome);
            });
            files(im, {"pattern", "host"});

            auto is = leaf(f, "induced-subgraph", "induced copy of H in G", [this] {
                auto h = graph(f1);
                auto g = graph(f2);
                Budget b(budget);
                auto res = find_induced_subgraph(g, h, b);
                report.budget_used = b.used();
                if (res.is_found()) {
                    if (! verify_embedding(g, h, *res.witness))
                        throw std::logic_error("embedding failed verification");
                    report.certificate = embedding_certificate(h, *res.witness);
                }
                return finish(report, res.outcome);
            });
            files(is, {"pattern", "host"});

            auto cl = leaf(f, "clique", "clique of the given size", [this] {
                auto g = graph(f1);
                Budget b(budget);
                auto res = find_clique(g, k_opt, b);
                report.budget_used = b.used();
                if (res.is_found())
                    report.certificate = set_certificate("clique", *res.witness);
                return finish(report, res.outcome);
            });
            files(cl, {"graph"});
            cl->add_option("--size", k_opt, "clique size")->required();

            auto st = leaf(f, "stable", "stable set of the given size", [this] {
                auto g = graph(f1);
                Budget b(budget);
                vector<int> all(g.order());
                for (int v = 0; v < g.order(); ++v)
                    all[v] = v;
                auto res = find_stable_subset(g, all, k_opt, b);
                report.budget_used = b.used();
                if (res.is_found())
                    report.certificate = set_certificate("stable", *res.witness);
                return finish(report, res.outcome);
            });
            files(st, {"graph"});
            st->add_option("--size", k_opt, "stable set size")->required();

            auto pw = leaf(f, "pathwidth", "exact pathwidth with certificate", [this] {
                auto g = graph(f1);
                Budget b(budget);
                auto res = pathwidth_exact(g, b);
                report.budget_used = b.used();
                if (res.is_found()) {
                    report.fact("width", std::to_string(res.witness->width));
                    report.certificate = bags_certificate(res.witness->certificate);
                }
                return finish(report, res.outcome);
            });
            files(pw, {"graph"});

            auto pk = leaf(f, "pathwidth-at-most", "decide pw(G) <= k", [this] {
                auto g = graph(f1);
                Budget b(budget);
                auto res = pathwidth_at_most(g, k_opt, b);
                report.budget_used = b.used();
                if (res.is_found()) {
                    report.fact("width", std::to_string(res.witness->width()));
                    report.certificate = bags_certificate(*res.witness);
                }
                return finish(report, res.outcome);
            });
            files(pk, {"graph"});
            pk->add_option("--k", k_opt, "width bound")->required();

            for (auto sub : {im, is, cl, st, pw, pk}) {
                with_budget(sub);
                with_out(sub);
            }
        }

        // ---- extract ----

        string side_file;
        int d_opt = 2;

        auto build_extract() -> void
        {
            auto e = app.add_subcommand("extract", "run a constructive extraction");
            e->require_subcommand(1);

            auto mg = leaf(e, "magic", "magic-lemma extraction on a path family", [this] {
                auto g = graph(f1);
                auto paths = parse_paths(report.input(side_file.empty() ? f1 + ".paths" : side_file), g.order());
                Budget b(budget);
                auto res = magic_extract(g, paths, t_opt, delta_opt, lambda_opt, b);
                report.budget_used = b.used();
                report.fact("paths", std::to_string(paths.size()));
                if (res.is_found()) {
                    auto check = verify_magic(g, paths, delta_opt, lambda_opt, *res.witness);
                    report.fact("conclusions-verified", check.valid ? "yes" : "no: " + check.reason);
                    report.fact("branch", std::to_string(res.witness->branch));
                    report.certificate = magic_certificate(*res.witness);
                }
                return finish(report, res.outcome);
            });
            files(mg, {"graph"});
            mg->add_option("--paths", side_file, "path family (default GRAPH.paths)");
            mg->add_option("--t", t_opt, "clique bound t")->required();
            mg->add_option("--delta", delta_opt, "delta")->required();
            mg->add_option("--lambda", lambda_opt, "lambda")->required();

            auto st = leaf(e, "seedling-to-tree", "induced T_{d,r}-model rooted at A", [this] {
                auto g = graph(f1);
                auto sd = seedling(g, seedling_or_default(side_file, f1));
                Budget b(budget);
                auto res = seedling_to_tree(sd, d_opt, r_opt, t_opt, k_opt, b);
                report.budget_used = b.used();
                if (res.is_found()) {
                    auto check = verify_tree_model(sd, *res.witness);
                    report.fact("root-is-A", check.valid ? "yes" : "no: " + check.reason);
                    report.certificate = model_certificate(*res.witness);
                }
                return finish(report, res.outcome);
            });
            files(st, {"graph"});
            st->add_option("--seedling", side_file, "seedling file (default GRAPH.seedling)");
            st->add_option("--d", d_opt, "branching d")->required();
            st->add_option("--r", r_opt, "radius r")->required();
            st->add_option("--t", t_opt, "clique bound t")->required();
            st->add_option("--kappa", k_opt, "rigidity level")->required();

            auto ra = leaf(e, "ramsey", "stable s-set or (t+1)-clique", [this] {
                auto g = graph(f1);
                auto res = ramsey_stable_or_clique(g, k_opt, t_opt);
                if (res.kind == RamseyResult::Kind::Fail)
                    return finish(report, Outcome::Absent);
                report.certificate = set_certificate(res.kind == RamseyResult::Kind::Stable ? "stable" : "clique", res.vertices);
                return finish(report, Outcome::Found);
            });
            files(ra, {"graph"});
            ra->add_option("--s", k_opt, "stable size s")->required();
            ra->add_option("--t", t_opt, "t")->required();

            auto ds = leaf(e, "digraph-stable", "stable s-set among out-degree <= r vertices", [this] {
                auto d = parse_digraph(report.input(f1));
                auto res = digraph_stable_set(d, r_opt, k_opt);
                if (! res)
                    return finish(report, Outcome::Absent);
                report.certificate = set_certificate("stable", *res);
                return finish(report, Outcome::Found);
            });
            files(ds, {"digraph"});
            ds->add_option("--r", r_opt, "out-degree bound r")->required();
            ds->add_option("--s", k_opt, "size s")->required();

            auto dr = leaf(e, "driver", "clique, K_{t,t} or H as an induced minor", [this] {
                auto g = graph(f1);
                auto h = graph(f2);
                std::optional<Seedling> sd;
                if (! side_file.empty())
                    sd = seedling(g, side_file);
                DriverBudgets budgets;
                budgets.clique = budgets.direct = budgets.seedling = budgets.ktt = budget;
                auto cert = main_driver(g, t_opt, h, budgets, sd);
                report.fact("kind", string(driver_kind_name(cert.kind)));
                report.fact("route", cert.route);
                using K = DriverCertificate::Kind;
                if (cert.kind == K::Clique)
                    report.certificate = set_certificate("clique", cert.clique);
                else if (cert.model)
                    report.certificate = model_certificate(*cert.model);
                auto o = cert.kind == K::Exhausted ? Outcome::Exhausted : cert.kind == K::NoneFound ? Outcome::Absent : Outcome::Found;
                return finish(report, o);
            });
            files(dr, {"graph", "pattern"});
            dr->add_option("--t", t_opt, "t")->required();
            dr->add_option("--seedling", side_file, "seedling on the same host");

            for (auto sub : {mg, st, ra, ds, dr}) {
                with_budget(sub);
                with_out(sub);
            }
        }

        // ---- constants ----

        string cname;
        vector<string> cargs, cbinds;
        bool toy = false, digits_only = false;
        string variant = "as-stated";
        std::uint64_t max_bits = std::uint64_t{1} << 26;

        auto build_expr() -> ConstExpr
        {
            vector<ConstExpr> args;
            for (auto & a : cargs)
                args.push_back(parse_expr(a));
            if (variant != "as-stated" && variant != "corrected")
                throw UsageError("--variant is as-stated or corrected");
            return named_constant(cname, args, variant == "corrected" ? Variant::Corrected : Variant::AsStated);
        }

        auto build_constants() -> void
        {
            auto c = app.add_subcommand("constants", "exact evaluation of the named constants");
            c->require_subcommand(1);

            auto ev = leaf(c, "eval", "evaluate a constant", [this] {
                auto e = build_expr();
                Bindings b = toy ? toy_bindings() : Bindings{};
                b.max_bits = max_bits;
                for (auto & bind : cbinds) {
                    auto eq = bind.find('=');
                    if (eq == string::npos)
                        throw UsageError("--bind needs NAME=EXPR");
                    auto name = bind.substr(0, eq);
                    auto body = parse_expr(bind.substr(eq + 1));
                    bool is_leaf = false;
                    for (auto & info : leaf_catalog())
                        is_leaf = is_leaf || info.name == name;
                    if (is_leaf)
                        b.leaves.insert_or_assign(name, body);
                    else
                        b.vars[name] = evaluate(body);
                }
                auto v = evaluate(e, b);
                auto digits = decimal_digits(v);
                report.outcome = "value";
                report.fact("digits", std::to_string(digits));
                if (! digits_only && digits <= 1'000'000)
                    report.fact("value", v.get_str());
                report.emit();
                return static_cast<int>(Holds);
            });
            ev->add_option("name", cname, "constant name")->required();
            ev->add_option("args", cargs, "arguments (integers or expressions)");
            ev->add_option("--bind", cbinds, "LEAF=EXPR over $1..$k, or VAR=EXPR");
            ev->add_flag("--toy", toy, "bind every black box to the sum of its arguments");
            ev->add_flag("--digits", digits_only, "print only the decimal length");
            ev->add_option("--variant", variant, "as-stated or corrected");
            ev->add_option("--max-bits", max_bits, "refuse intermediate values above this many bits");

            auto sh = leaf(c, "show", "print the expression tree", [this] {
                auto e = build_expr();
                report.outcome = "expression";
                report.fact("free-variables", [&] {
                    string s;
                    for (auto & v : free_vars(e))
                        s += (s.empty() ? "" : " ") + v;
                    return s;
                }());
                report.fact("leaves", [&] {
                    string s;
                    for (auto & v : leaf_names(e))
                        s += (s.empty() ? "" : " ") + v;
                    return s;
                }());
                report.fact("text", to_text(e));
                report.emit();
                return static_cast<int>(Holds);
            });
            sh->add_option("name", cname, "constant name")->required();
            sh->add_option("args", cargs, "arguments");
            sh->add_option("--variant", variant, "as-stated or corrected");

            leaf(c, "list", "list the named constants and black boxes", [this] {
                for (auto & k : constant_catalog()) {
                    std::cout << k.name << '(';
                    for (std::size_t i = 0; i < k.params.size(); ++i)
                        std::cout << (i ? ", " : "") << k.params[i];
                    std::cout << ")  " << k.summary << '\n';
                }
                for (auto & l : leaf_catalog())
                    std::cout << "leaf " << l.name << " arity " << l.arity << " from " << l.tag << '\n';
                return static_cast<int>(Holds);
            });
        }

        auto run(int argc, char ** argv) -> int
        {
            for (int i = 1; i < argc; ++i)
                report.command += (i > 1 ? " " : "") + string(argv[i]);
            try {
                app.parse(argc, argv);
            }
            catch (const CLI::ParseError & e) {
                int code = app.exit(e);
                return code == 0 ? Holds : Usage;
            }
            report.certificate_path = out;
            try {
                for (auto & [sub, fn] : leaves)
                    if (sub->parsed())
                        return fn();
                throw UsageError("no command");
            }
            catch (const UsageError & e) {
                std::cerr << "usage error: " << e.what() << '\n';
            }
            catch (const GraphError & e) {
                std::cerr << "input error: " << e.what() << '\n';
            }
            catch (const ConstError & e) {
                std::cerr << "constants error: " << e.what() << '\n';
            }
            return Usage;
        }
    };
}

auto main(int argc, char ** argv) -> int
{
    Cli cli;
    return cli.run(argc, argv);
}
