#include "cacti/api.hpp"

#include <stdexcept>

namespace cacti::api {

using nlohmann::json;

namespace {

Vec vec_from_json(const json& j, const AlgebraPtr& a)
{
    if (!j.is_array() || static_cast<int>(j.size()) != a->dim()) throw std::invalid_argument("algebra element has the wrong length");
    Vec v;
    for (const auto& x : j) v.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Q(x.get<long>()));
    return v;
}

} // namespace

std::vector<Cochain> cochains_from_json(const json& j, const std::string& algebra)
{
    const AlgebraPtr a = algebra.empty() ? nullptr : load_algebra(algebra);
    const json& list = j.is_object() && j.contains("cochains") ? j.at("cochains") : j;
    std::vector<Cochain> out;
    if (list.is_array())
        for (const auto& x : list) out.push_back(cochain_from_json(x, a));
    else
        out.push_back(cochain_from_json(list, a));
    if (out.empty()) throw std::invalid_argument("no cochains given");
    for (const auto& f : out)
        if (f.algebra()->name() != out.front().algebra()->name()) throw std::invalid_argument("cochains over different algebras");
    return out;
}

Q correlate_inputs(const Tree& t, const json& inputs, const std::string& algebra)
{
    const auto fs = cochains_from_json(inputs.at("cochains"), algebra);
    const AlgebraPtr& a = fs.front().algebra();
    if (static_cast<int>(fs.size()) != label_count(t)) throw std::invalid_argument("one cochain per label expected");
    const Vec a0 = vec_from_json(inputs.at("a0"), a);
    std::vector<Vec> tails;
    for (const auto& x : inputs.at("tails")) tails.push_back(vec_from_json(x, a));
    std::vector<int> ar;
    for (const auto& f : fs) ar.push_back(f.arity());
    const int N = action_arity(t, ar);
    if (N != static_cast<int>(tails.size()))
        throw std::invalid_argument("expected " + std::to_string(std::max(N, 0)) + " tails, got " + std::to_string(tails.size()));
    Q total = 0;
    for (const auto& r : realizations(t, ar)) total += correlate(r, fs, a0, tails);
    return total;
}

Cochain hh_op(const std::string& op, const std::vector<Cochain>& fs)
{
    const bool binary = op == "cup" || op == "bracket";
    if (fs.size() != (binary ? 2u : 1u)) throw std::invalid_argument(op + " takes " + (binary ? "two cochains" : "one cochain"));
    if (op == "diff") return hdiff(fs[0]);
    if (op == "delta") return cdelta(fs[0]);
    if (op == "normalize") return normalize(fs[0]);
    if (op == "cup") return cup(fs[0], fs[1]);
    if (op == "bracket") return bracket(fs[0], fs[1]);
    throw std::invalid_argument("unknown operation '" + op + "'");
}

json hh_summary(const std::string& algebra, int degree)
{
    const AlgebraPtr a = load_algebra(algebra);
    const Cohomology H(a, degree);
    json reps = json::array();
    for (const auto& f : H.representatives()) reps.push_back(to_json(f));
    return {{"algebra", a->name()}, {"degree", degree}, {"dimension", H.dimension()}, {"representatives", reps}};
}

json graph_info(const RibbonGraph& g)
{
    json j{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"cycles", g.cycles()},
           {"marked", g.is_marked()},      {"connected", g.connected()}};
    if (g.connected()) {
        j["genus"] = g.genus();
        j["treelike"] = g.is_treelike();
    }
    if (auto d = g.distinguished_cycle()) j["distinguished_cycle"] = *d;
    return j;
}

} // namespace cacti::api
