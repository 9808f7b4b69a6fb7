#include "cacti/chain.hpp"

#include "cacti/cactus.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace cacti {

Chain Chain::of(const Tree& t, const Z& c)
{
    Chain ch(label_count(t), cacti::degree(t));
    ch.add(t, c);
    return ch;
}

Z Chain::coeff(const Tree& t) const
{
    auto it = terms_.find(t);
    return it == terms_.end() ? Z(0) : it->second;
}

void Chain::add(const Tree& t, const Z& c)
{
    if (c == 0) return;
    const int n = label_count(t), d = cacti::degree(t);
    if (!typed_ && terms_.empty()) {
        n_ = n;
        degree_ = d;
        typed_ = true;
    } else if (n != n_ || d != degree_) {
        throw std::invalid_argument("mixed label count or degree in chain: " + serialize(t));
    }
    auto [it, fresh] = terms_.try_emplace(t, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Chain::add(const Chain& o, const Z& c)
{
    for (const auto& [t, x] : o.terms_) add(t, x * c);
}

Chain Chain::operator+(const Chain& o) const
{
    Chain r = *this;
    r.add(o);
    return r;
}

Chain Chain::operator-(const Chain& o) const
{
    Chain r = *this;
    r.add(o, -1);
    return r;
}

Chain Chain::operator*(const Z& c) const
{
    Chain r(n_, degree_);
    r.add(*this, c);
    return r;
}

bool Chain::operator==(const Chain& o) const { return terms_ == o.terms_; }

std::vector<std::pair<Tree, Z>> Chain::sorted_terms() const
{
    std::vector<std::pair<std::string, std::pair<Tree, Z>>> keyed;
    for (const auto& [t, c] : terms_) keyed.push_back({serialize(t), {t, c}});
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Tree, Z>> out;
    for (auto& k : keyed) out.push_back(std::move(k.second));
    return out;
}

nlohmann::json to_json(const Chain& c)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [t, x] : c.sorted_terms()) terms.push_back({{"coeff", x.get_str()}, {"tree", serialize(t)}});
    return {{"n", c.n()}, {"degree", c.degree()}, {"terms", terms}};
}

Chain chain_from_json(const nlohmann::json& j)
{
    Chain c(j.value("n", 0), j.value("degree", 0));
    for (const auto& term : j.at("terms")) {
        const auto& cf = term.at("coeff");
        Z x = cf.is_string() ? Z(cf.get<std::string>()) : Z(cf.get<long>());
        c.add(parse_tree(term.at("tree").get<std::string>()), x);
    }
    return c;
}

std::optional<Tree> angle_collapse(const Tree& t, int label, int arc)
{
    Cactus c = to_cactus(t);
    auto it = c.lobes.find(label);
    if (it == c.lobes.end()) throw std::invalid_argument("no vertex with label " + std::to_string(label));
    const auto& pts = it->second.pts;
    if (arc < 0 || arc >= static_cast<int>(pts.size())) throw std::invalid_argument("arc index out of range");
    if (!collapse_arc(c, label, pts[arc])) return std::nullopt;
    return to_tree(c);
}

Chain spine_flip(const Tree& t, int label)
{
    Cactus c = to_cactus(t);
    const Lobe& L = c.lobes.at(label);
    if (L.dec != 1) throw std::invalid_argument("spine flip needs a decorated vertex");
    Chain out(label_count(t), cacti::degree(t) - 1);
    const int p = L.mark, q = cyc_next(L.pts, p);
    for (auto [pt, s] : {std::pair{q, 1}, std::pair{p, -1}}) {
        Cactus cc = c;
        cc.lobes[label].dec = 0;
        cc.lobes[label].mark = pt;
        out.add(to_tree(cc), s);
    }
    return out;
}

Chain boundary(const Tree& t)
{
    Chain out(label_count(t), degree(t) - 1);
    int pre = 0;
    for (const auto& [label, w] : whites_by_label(t)) {
        const int k = static_cast<int>(w->blacks.size());
        if (k >= 1)
            for (int a = 0; a <= k; ++a)
                if (auto r = angle_collapse(t, label, a)) out.add(*r, sign_of(pre + a));
        pre += k;
        if (w->dec == 1) {
            out.add(spine_flip(t, label), sign_of(pre));
            ++pre;
        }
    }
    return out;
}

Chain boundary(const Chain& c)
{
    Chain out(c.n(), c.degree() - 1);
    for (const auto& [t, x] : c.terms()) out.add(boundary(t), x);
    return out;
}

Chain relabel_chain(const Chain& c, const std::vector<int>& sigma)
{
    Chain out(c.n(), c.degree());
    auto f = [&](int l) { return sigma.at(l - 1); };
    for (const auto& [t, x] : c.terms()) out.add(relabel(t, sigma), x * relabel_sign(t, f));
    return out;
}

} // namespace cacti
