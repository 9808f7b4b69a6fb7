#include "cacti/api.hpp"
#include "cacti/homology.hpp"
#include "cacti/operad.hpp"
#include "cacti/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cacti;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json read_json(const std::string& path) { return json::parse(slurp(path)); }

void print(const json& j) { std::cout << j.dump() << "\n"; }

Tree tree_arg(const std::string& text)
{
    Tree t = parse_tree(text);
    validate(t);
    return t;
}

std::string graph_text(const std::string& file) { return file == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {}) : slurp(file); }

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cellular chains of cacti and their action on Hochschild cochains"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output")->configurable(false);
    auto json_flag = [&](CLI::App* s) { s->add_flag("--json", as_json, "machine-readable output"); };

    int lobes = 2, max_degree = 2, slot = 1;
    bool spineless = false;
    std::string tree_s, left_s, right_s, chain_file, cochain_file, input_file, algebra, op, graph_file;

    auto* en = app.add_subcommand("enumerate", "list the cells with a given number of lobes");
    en->add_option("--lobes,-n", lobes, "number of labels")->check(CLI::Range(1, 6));
    en->add_option("--max-degree,-d", max_degree, "largest cell degree")->check(CLI::Range(0, 12));
    en->add_flag("--spineless", spineless, "only spineless cells");
    json_flag(en);

    auto* bd = app.add_subcommand("boundary", "cellular boundary of a tree or chain (Chain JSON)");
    auto* bd_tree = bd->add_option("--tree,-t", tree_s, "tree expression");
    bd->add_option("--chain", chain_file, "Chain JSON file")->excludes(bd_tree);
    json_flag(bd);

    auto* cp = app.add_subcommand("compose", "partial composition left o_slot right (Chain JSON)");
    cp->add_option("--left", left_s, "tree expression")->required();
    cp->add_option("--slot,-i", slot, "label of the left tree to substitute")->required();
    cp->add_option("--right", right_s, "tree expression")->required();
    json_flag(cp);

    auto* ac = app.add_subcommand("act", "action of a tree on cochains (Cochain JSON)");
    ac->add_option("--tree,-t", tree_s, "tree expression")->required();
    ac->add_option("--cochains,-c", cochain_file, "cochain JSON file, one cochain per label")->required();
    ac->add_option("--algebra,-a", algebra, "dual|z2|z3|m2|@file.json; overrides the files' algebra");
    json_flag(ac);

    auto* co = app.add_subcommand("correlate", "correlator eta(a0, act(t,f)(a1..aN))");
    co->add_option("--tree,-t", tree_s, "tree expression")->required();
    co->add_option("--inputs", input_file, "JSON with cochains, a0 and tails")->required();
    co->add_option("--algebra,-a", algebra, "dual|z2|z3|m2|@file.json");
    json_flag(co);

    int hh_degree = 1;
    auto* hh = app.add_subcommand("hh", "Hochschild cohomology, or an operation on cochains with --op");
    hh->add_option("--algebra,-a", algebra, "dual|z2|z3|m2|@file.json");
    hh->add_option("--degree,-n", hh_degree, "cohomological degree")->check(CLI::Range(0, 8));
    hh->add_option("--op", op, "diff|delta|cup|bracket|normalize, applied to --cochains")
        ->check(CLI::IsMember({"diff", "delta", "cup", "bracket", "normalize"}));
    hh->add_option("--cochains,-c", cochain_file, "cochain JSON file");
    json_flag(hh);

    auto* hd = app.add_subcommand("hh-delta", "Connes' operator on a cochain (Cochain JSON)");
    hd->add_option("--cochains,-c", cochain_file, "cochain JSON file")->required();
    hd->add_option("--algebra,-a", algebra, "dual|z2|z3|m2|@file.json");
    json_flag(hd);

    auto* ho = app.add_subcommand("homology", "cell counts and rational Betti numbers");
    ho->add_option("--lobes,-n", lobes, "number of labels")->check(CLI::Range(1, 4));
    ho->add_flag("--spineless", spineless, "the spineless subcomplex");
    json_flag(ho);

    SuiteConfig cfg;
    std::vector<std::string> suites;
    bool all = false;
    auto* ve = app.add_subcommand("verify", "run verification suites; exit 0 iff all pass");
    auto* ve_suite = ve->add_option("--suite,-s", suites, "suite name")->check(CLI::IsMember(suite_names()));
    ve->add_flag("--all", all, "run every suite")->excludes(ve_suite);
    ve->add_option("--lobes,-n", cfg.n, "number of labels (suite default if omitted)")->check(CLI::Range(1, 4));
    ve->add_option("--max-degree,-d", cfg.max_degree, "degree bound (suite default if omitted)")->check(CLI::Range(0, 8));
    ve->add_option("--algebra,-a", cfg.algebra, "restrict to one algebra");
    ve->add_option("--seed", cfg.seed, "random seed");
    ve->add_option("--trials", cfg.trials, "random trials (suite default if omitted)")->check(CLI::Range(1, 100000));
    json_flag(ve);

    int flag = 0;
    auto* gr = app.add_subcommand("graph", "ribbon graphs; see README for the text format");
    gr->require_subcommand(1);
    auto* g_info = gr->add_subcommand("info", "cycles, genus and markings");
    g_info->add_option("--file,-f", graph_file, "graph file, - for stdin")->required();
    auto* g_dual = gr->add_subcommand("dual", "black/white tree of a marked treelike graph");
    g_dual->add_option("--file,-f", graph_file, "graph file, - for stdin")->required();
    auto* g_from = gr->add_subcommand("from-tree", "cactus graph of a tree");
    g_from->add_option("--tree,-t", tree_s, "tree expression")->required();
    auto* g_contract = gr->add_subcommand("contract", "contract the edge of a flag");
    g_contract->add_option("--file,-f", graph_file, "graph file, - for stdin")->required();
    g_contract->add_option("--flag", flag, "flag of the edge")->required();
    for (auto* s : {g_info, g_dual, g_from, g_contract}) json_flag(s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*en) {
            const auto cells = enumerate_cells(lobes, max_degree, spineless);
            if (as_json) {
                json arr = json::array();
                for (const auto& t : cells) arr.push_back(serialize(t));
                print({{"n", lobes}, {"max_degree", max_degree}, {"spineless", spineless}, {"cells", arr}});
            } else {
                for (const auto& t : cells) std::cout << degree(t) << " " << serialize(t) << "\n";
            }
        } else if (*bd) {
            if (tree_s.empty() && chain_file.empty()) throw CLI::ValidationError("boundary needs --tree or --chain");
            print(to_json(tree_s.empty() ? boundary(chain_from_json(read_json(chain_file))) : boundary(tree_arg(tree_s))));
        } else if (*cp) {
            const Tree a = tree_arg(left_s);
            if (slot < 1 || slot > label_count(a)) throw CLI::ValidationError("--slot out of range");
            print(to_json(compose(a, slot, tree_arg(right_s))));
        } else if (*ac) {
            const Tree t = tree_arg(tree_s);
            print(to_json(act(t, api::cochains_from_json(read_json(cochain_file), algebra))));
        } else if (*co) {
            const Q total = api::correlate_inputs(tree_arg(tree_s), read_json(input_file), algebra);
            if (as_json)
                print({{"value", to_string(total)}});
            else
                std::cout << to_string(total) << "\n";
        } else if (*hh) {
            if (!op.empty()) {
                if (cochain_file.empty()) throw CLI::ValidationError("--op needs --cochains");
                print(to_json(api::hh_op(op, api::cochains_from_json(read_json(cochain_file), algebra))));
            } else {
                const json j = api::hh_summary(algebra.empty() ? "dual" : algebra, hh_degree);
                if (as_json) {
                    print(j);
                } else {
                    std::cout << "HH^" << hh_degree << "(" << j.at("algebra").get<std::string>() << ") has dimension "
                              << j.at("dimension") << "\n";
                    for (const auto& f : j.at("representatives")) std::cout << f.dump() << "\n";
                }
            }
        } else if (*hd) {
            const auto fs = api::cochains_from_json(read_json(cochain_file), algebra);
            if (fs.size() != 1) throw std::invalid_argument("hh-delta takes one cochain");
            print(to_json(cdelta(fs[0])));
        } else if (*ho) {
            const auto h = cellular_homology(lobes, spineless);
            if (as_json) {
                print(to_json(h));
            } else {
                std::cout << (spineless ? "K(" : "K'(") << lobes << ")\n";
                for (std::size_t k = 0; k < h.cells.size(); ++k)
                    std::cout << "  degree " << k << ": " << h.cells[k] << " cells, betti " << h.betti[k] << "\n";
                std::cout << "  euler characteristic " << h.euler() << "\n";
            }
        } else if (*ve) {
            if (all) suites = suite_names();
            if (suites.empty()) throw CLI::ValidationError("verify needs --suite or --all");
            bool ok = true;
            json reports = json::array();
            for (const auto& s : suites) {
                const auto r = run_suite(s, cfg);
                ok = ok && r.pass();
                if (as_json)
                    reports.push_back(to_json(r));
                else
                    std::cout << format_report(r) << std::flush;
            }
            if (as_json) print({{"pass", ok}, {"threads", thread_count()}, {"suites", reports}});
            return ok ? 0 : 1;
        } else if (*g_from) {
            const RibbonGraph g = cactus_graph(tree_arg(tree_s));
            if (as_json)
                print({{"graph", format_graph(g)}});
            else
                std::cout << format_graph(g);
        } else if (*g_info || *g_dual || *g_contract) {
            const RibbonGraph g = parse_graph(graph_text(graph_file));
            if (*g_info) {
                const json j = api::graph_info(g);
                if (as_json) {
                    print(j);
                } else {
                    for (const auto& [k, v] : j.items()) std::cout << k << ": " << v.dump() << "\n";
                }
            } else if (*g_dual) {
                const std::string t = serialize(dual_tree(g));
                if (as_json)
                    print({{"tree", t}});
                else
                    std::cout << t << "\n";
            } else {
                const std::string out = format_graph(contract_edge(g, flag));
                if (as_json)
                    print({{"graph", out}});
                else
                    std::cout << out;
            }
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
