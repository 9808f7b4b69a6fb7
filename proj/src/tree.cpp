#include "cacti/tree.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace cacti {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Tree tree()
    {
        Tree t;
        expect_word("root");
        expect('(');
        while (peek() == 'w') t.whites.push_back(white());
        expect(')');
        skip();
        if (i_ != s_.size()) throw ParseError("trailing input", i_);
        return t;
    }

private:
    White white()
    {
        White w;
        expect('w');
        expect('<');
        w.label = number();
        expect(';');
        w.dec = number();
        expect(';');
        w.mark = number();
        expect('>');
        expect('(');
        while (peek() == 'b') w.blacks.push_back(black());
        expect(')');
        return w;
    }

    Black black()
    {
        Black b;
        expect('b');
        expect('(');
        while (peek() == 'w') b.whites.push_back(white());
        expect(')');
        return b;
    }

    int number()
    {
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) throw ParseError("expected a number", start);
        if (i_ - start > 6) throw ParseError("number too large", start);
        return std::stoi(s_.substr(start, i_ - start));
    }

    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    char peek()
    {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
    }

    void expect(char c)
    {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", i_);
        ++i_;
    }

    void expect_word(const char* w)
    {
        skip();
        for (const char* p = w; *p; ++p) {
            if (i_ >= s_.size() || s_[i_] != *p) throw ParseError(std::string("expected '") + w + "'", i_);
            ++i_;
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

void ser_white(const White& w, std::string& out);

void ser_black(const Black& b, std::string& out)
{
    out += "b(";
    for (const auto& w : b.whites) ser_white(w, out);
    out += ')';
}

void ser_white(const White& w, std::string& out)
{
    out += "w<" + std::to_string(w.label) + ';' + std::to_string(w.dec) + ';' + std::to_string(w.mark) + ">(";
    for (const auto& b : w.blacks) ser_black(b, out);
    out += ')';
}

template <class F>
void visit(const White& w, F&& f)
{
    f(w);
    for (const auto& b : w.blacks)
        for (const auto& c : b.whites) visit(c, f);
}

White relabel_white(const White& w, const std::function<int(int)>& f)
{
    White r{f(w.label), w.dec, w.mark, {}};
    for (const auto& b : w.blacks) {
        Black nb;
        for (const auto& c : b.whites) nb.whites.push_back(relabel_white(c, f));
        r.blacks.push_back(std::move(nb));
    }
    return r;
}

// ---- enumeration of shapes

struct Shape;
using Forest = std::vector<Shape>;
struct Shape {
    int label;
    std::vector<Forest> blacks;
};

std::vector<Forest> forests(const std::vector<int>& labels);
std::vector<std::vector<Forest>> black_lists(const std::vector<int>& labels);

// Subsets of `labels` (as index masks) of every size >= 1, in a fixed order.
template <class F>
void each_split(const std::vector<int>& labels, F&& f)
{
    const int n = static_cast<int>(labels.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> sub, rest;
        for (int i = 0; i < n; ++i) (mask >> i & 1u ? sub : rest).push_back(labels[i]);
        f(sub, rest);
    }
}

std::vector<Shape> white_shapes(const std::vector<int>& labels)
{
    std::vector<Shape> out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        std::vector<int> rest;
        for (std::size_t j = 0; j < labels.size(); ++j)
            if (j != i) rest.push_back(labels[j]);
        for (auto& bl : black_lists(rest)) out.push_back(Shape{labels[i], bl});
    }
    return out;
}

std::vector<Forest> forests(const std::vector<int>& labels)
{
    if (labels.empty()) return {Forest{}};
    std::vector<Forest> out;
    each_split(labels, [&](const std::vector<int>& sub, const std::vector<int>& rest) {
        for (auto& w : white_shapes(sub))
            for (auto& f : forests(rest)) {
                Forest g{w};
                g.insert(g.end(), f.begin(), f.end());
                out.push_back(std::move(g));
            }
    });
    return out;
}

std::vector<std::vector<Forest>> black_lists(const std::vector<int>& labels)
{
    if (labels.empty()) return {{}};
    std::vector<std::vector<Forest>> out;
    each_split(labels, [&](const std::vector<int>& sub, const std::vector<int>& rest) {
        for (auto& f : forests(sub))
            for (auto& bl : black_lists(rest)) {
                std::vector<Forest> g{f};
                g.insert(g.end(), bl.begin(), bl.end());
                out.push_back(std::move(g));
            }
    });
    return out;
}

// All decorations of a shape with at most `budget` degree.
std::vector<White> decorate(const Shape& s, int budget, bool spineless);

std::vector<std::vector<White>> decorate_forest(const Forest& f, int budget, bool spineless)
{
    std::vector<std::vector<White>> acc{{}};
    for (const auto& s : f) {
        std::vector<std::vector<White>> next;
        for (auto& prefix : acc) {
            int used = 0;
            for (auto& w : prefix) {
                Tree tmp{{w}};
                used += degree(tmp);
            }
            for (auto& w : decorate(s, budget - used, spineless)) {
                auto g = prefix;
                g.push_back(w);
                next.push_back(std::move(g));
            }
        }
        acc = std::move(next);
    }
    return acc;
}

std::vector<White> decorate(const Shape& s, int budget, bool spineless)
{
    const int k = static_cast<int>(s.blacks.size());
    if (k > budget) return {};
    // decorate children first, combining within the remaining budget
    std::vector<std::pair<std::vector<Black>, int>> acc{{{}, 0}};
    for (const auto& f : s.blacks) {
        std::vector<std::pair<std::vector<Black>, int>> next;
        for (auto& [prefix, used] : acc)
            for (auto& ws : decorate_forest(f, budget - k - used, spineless)) {
                Tree tmp{ws};
                int d = degree(tmp);
                auto g = prefix;
                g.push_back(Black{ws});
                next.push_back({std::move(g), used + d});
            }
        acc = std::move(next);
    }
    std::vector<White> out;
    for (auto& [bl, used] : acc)
        for (int dec = 0; dec <= (spineless ? 0 : 1); ++dec)
            for (int m = 0; m <= (spineless ? 0 : k); ++m)
                if (k + dec + used <= budget) out.push_back(White{s.label, dec, m, bl});
    return out;
}

} // namespace

Tree parse_tree(const std::string& text)
{
    Parser p(text);
    Tree t = p.tree();
    validate(t);
    return t;
}

std::string serialize(const Tree& t)
{
    std::string out = "root(";
    for (const auto& w : t.whites) ser_white(w, out);
    out += ')';
    return out;
}

void validate(const Tree& t)
{
    std::set<int> seen;
    int count = 0;
    for (const auto& top : t.whites)
        visit(top, [&](const White& w) {
            ++count;
            if (!seen.insert(w.label).second)
                throw InvariantError("duplicate label " + std::to_string(w.label));
            if (w.dec != 0 && w.dec != 1)
                throw InvariantError("decoration must be 0 or 1 at label " + std::to_string(w.label));
            const int val = static_cast<int>(w.blacks.size()) + 1;
            if (w.mark < 0 || w.mark >= val)
                throw InvariantError("mark out of range at label " + std::to_string(w.label));
            for (const auto& b : w.blacks)
                if (b.whites.empty())
                    throw InvariantError("black leaf below label " + std::to_string(w.label));
        });
    if (count == 0) throw InvariantError("tree has no white vertex");
    for (int l = 1; l <= count; ++l)
        if (!seen.count(l)) throw InvariantError("labels are not 1.." + std::to_string(count));
}

int label_count(const Tree& t)
{
    int n = 0;
    for (const auto& top : t.whites) visit(top, [&](const White&) { ++n; });
    return n;
}

int degree(const Tree& t)
{
    int d = 0;
    for (const auto& top : t.whites)
        visit(top, [&](const White& w) { d += static_cast<int>(w.blacks.size()) + w.dec; });
    return d;
}

std::vector<const White*> whites_dfs(const Tree& t)
{
    std::vector<const White*> out;
    for (const auto& top : t.whites) visit(top, [&](const White& w) { out.push_back(&w); });
    return out;
}

std::map<int, const White*> whites_by_label(const Tree& t)
{
    std::map<int, const White*> out;
    for (const auto* w : whites_dfs(t)) out[w->label] = w;
    return out;
}

Tree relabel(const Tree& t, const std::function<int(int)>& f)
{
    Tree r;
    for (const auto& w : t.whites) r.whites.push_back(relabel_white(w, f));
    return r;
}

Tree relabel(const Tree& t, const std::vector<int>& sigma)
{
    if (static_cast<int>(sigma.size()) != label_count(t))
        throw std::invalid_argument("permutation size does not match the label count");
    std::vector<int> hit(sigma.size() + 1, 0);
    for (int s : sigma) {
        if (s < 1 || s > static_cast<int>(sigma.size()) || hit[s]++)
            throw std::invalid_argument("not a permutation");
    }
    return relabel(t, [&](int l) { return sigma[l - 1]; });
}

int relabel_sign(const Tree& t, const std::function<int(int)>& f)
{
    std::vector<std::pair<int, int>> v; // (new label, parity) in old label order
    for (auto& [l, w] : whites_by_label(t))
        v.push_back({f(l), (static_cast<int>(w->blacks.size()) + w->dec) % 2});
    int s = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i].first > v[j].first && v[i].second && v[j].second) s = -s;
    return s;
}

bool CanonicalLess::operator()(const Tree& a, const Tree& b) const
{
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return serialize(a) < serialize(b);
}

std::vector<Tree> enumerate_cells(int n, int max_degree, bool spineless)
{
    std::vector<Tree> out;
    if (n < 1 || max_degree < 0) return out;
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i + 1;
    for (auto& f : forests(labels))
        for (auto& ws : decorate_forest(f, max_degree, spineless)) out.push_back(Tree{ws});
    std::sort(out.begin(), out.end(), CanonicalLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Tree point_cell() { return Tree{{White{1, 0, 0, {}}}}; }

Tree delta_cell() { return Tree{{White{1, 1, 0, {}}}}; }

Tree product_cell(int n)
{
    Tree t;
    for (int i = 1; i <= n; ++i) t.whites.push_back(White{i, 0, 0, {}});
    return t;
}

Tree cyclic_brace_cell(int n, int i)
{
    White f{1, 1, i, {}};
    for (int j = 1; j <= n; ++j) f.blacks.push_back(Black{{White{j + 1, 0, 0, {}}}});
    return Tree{{f}};
}

} // namespace cacti
