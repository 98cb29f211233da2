#include "torcover/simplicial_complex.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "torcover/errors.hpp"

namespace torcover {

SimplicialComplex::SimplicialComplex() {
    by_dim_.push_back({Simplex{}});
    index_.emplace(Simplex{}, 0);
}

SimplicialComplex SimplicialComplex::from_generators(std::vector<std::string> labels, const std::vector<Simplex>& generators) {
    SimplicialComplex out;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!out.label_index_.emplace(labels[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate vertex label '" + labels[i] + "'");
    out.labels_ = std::move(labels);

    std::unordered_set<Simplex, SimplexHash> seen;
    std::vector<Simplex> stack;
    for (Simplex g : generators) {
        std::sort(g.begin(), g.end());
        if (std::adjacent_find(g.begin(), g.end()) != g.end())
            throw std::invalid_argument("simplex with a repeated vertex");
        for (int v : g)
            if (v < 0 || v >= static_cast<int>(out.labels_.size()))
                throw std::invalid_argument("vertex index out of range");
        if (seen.insert(g).second)
            stack.push_back(std::move(g));
    }
    // Walk down the face poset; each simplex is expanded once.
    while (!stack.empty()) {
        Simplex s = std::move(stack.back());
        stack.pop_back();
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex face;
            face.reserve(s.size() - 1);
            for (std::size_t k = 0; k < s.size(); ++k)
                if (k != drop)
                    face.push_back(s[k]);
            if (seen.insert(face).second)
                stack.push_back(std::move(face));
        }
    }
    seen.insert(Simplex{});

    std::size_t top = 0;
    for (const auto& s : seen)
        top = std::max(top, s.size());
    out.by_dim_.assign(top + 1, {});
    for (const auto& s : seen)
        out.by_dim_[s.size()].push_back(s);
    for (auto& layer : out.by_dim_)
        std::sort(layer.begin(), layer.end());
    out.index_.clear();
    for (const auto& layer : out.by_dim_)
        for (std::size_t i = 0; i < layer.size(); ++i)
            out.index_.emplace(layer[i], i);

    const std::size_t vertex_simplices = out.by_dim_.size() > 1 ? out.by_dim_[1].size() : 0;
    if (vertex_simplices != out.labels_.size())
        throw std::invalid_argument("every vertex label must occur in some simplex");
    return out;
}

SimplicialComplex SimplicialComplex::from_labeled(const std::vector<std::vector<std::string>>& simplices) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    std::vector<Simplex> generators;
    for (const auto& s : simplices) {
        Simplex g;
        for (const auto& label : s) {
            auto [it, inserted] = index.emplace(label, static_cast<int>(labels.size()));
            if (inserted)
                labels.push_back(label);
            g.push_back(it->second);
        }
        generators.push_back(std::move(g));
    }
    return from_generators(std::move(labels), generators);
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
    static const std::vector<Simplex> none;
    const int k = dim + 1;
    if (k < 0 || k >= static_cast<int>(by_dim_.size()))
        return none;
    return by_dim_[static_cast<std::size_t>(k)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<int> SimplicialComplex::vertex_index(std::string_view label) const {
    auto it = label_index_.find(std::string(label));
    if (it == label_index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<std::string> SimplicialComplex::labels_of(const Simplex& s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (int v : s)
        out.push_back(labels_.at(static_cast<std::size_t>(v)));
    return out;
}

Simplex SimplicialComplex::simplex_of(const std::vector<std::string>& labels) const {
    Simplex s;
    for (const auto& label : labels) {
        auto v = vertex_index(label);
        if (!v)
            throw std::invalid_argument("unknown vertex '" + label + "'");
        s.push_back(*v);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("repeated vertex in simplex");
    return s;
}

std::vector<Simplex> SimplicialComplex::facets() const {
    std::vector<Simplex> out;
    for (int d = dimension(); d >= -1; --d) {
        for (const auto& s : simplices(d)) {
            bool maximal = true;
            for (const auto& t : simplices(d + 1))
                if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                    maximal = false;
                    break;
                }
            if (maximal)
                out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FVector f_vector(const SimplicialComplex& L) {
    FVector f;
    for (int d = -1; d <= L.dimension(); ++d)
        f.counts.push_back(L.count(d));
    return f;
}

namespace {

std::optional<Simplex> translate(const SimplicialComplex& from, const SimplicialComplex& to, const Simplex& s) {
    Simplex out;
    out.reserve(s.size());
    for (int v : s) {
        auto w = to.vertex_index(from.vertices()[static_cast<std::size_t>(v)]);
        if (!w)
            return std::nullopt;
        out.push_back(*w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& ambient) {
    for (int d = 0; d <= sub.dimension(); ++d)
        for (const auto& s : sub.simplices(d)) {
            auto t = translate(sub, ambient, s);
            if (!t || !ambient.contains(*t))
                return false;
        }
    return true;
}

bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.size() == b.size() && is_subcomplex(a, b);
}

// ---------------------------------------------------------------------------

SimplicialComplex parse_complex(std::string_view text) {
    std::vector<std::vector<std::string>> simplices;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::istringstream in{std::string(line)};
        std::vector<std::string> labels;
        std::set<std::string> distinct;
        for (std::string tok; in >> tok;) {
            if (!distinct.insert(tok).second)
                throw ParseError("vertex '" + tok + "' repeated within one simplex", line_no);
            labels.push_back(std::move(tok));
        }
        if (!labels.empty())
            simplices.push_back(std::move(labels));
        if (end == text.size())
            break;
    }
    return SimplicialComplex::from_labeled(simplices);
}

std::string serialize_complex(const SimplicialComplex& L) {
    std::vector<std::vector<std::string>> lines;
    for (const auto& f : L.facets()) {
        if (f.empty())
            continue;
        auto labels = L.labels_of(f);
        std::sort(labels.begin(), labels.end());
        lines.push_back(std::move(labels));
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& line : lines) {
        for (std::size_t k = 0; k < line.size(); ++k) {
            if (k)
                out += ' ';
            out += line[k];
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<bool>> adjacency(const SimplicialComplex& L) {
    std::vector<std::vector<bool>> adj(L.vertex_count(), std::vector<bool>(L.vertex_count(), false));
    for (const auto& e : L.simplices(1)) {
        adj[static_cast<std::size_t>(e[0])][static_cast<std::size_t>(e[1])] = true;
        adj[static_cast<std::size_t>(e[1])][static_cast<std::size_t>(e[0])] = true;
    }
    return adj;
}

} // namespace

bool is_flag(const SimplicialComplex& L) {
    // A clique C is (C minus its largest vertex) plus a larger vertex adjacent
    // to everything, so by induction it suffices to try extending every
    // simplex of L with >= 2 vertices by a larger common neighbour.
    const auto adj = adjacency(L);
    const int n = static_cast<int>(L.vertex_count());
    for (int d = 1; d <= L.dimension(); ++d)
        for (const auto& s : L.simplices(d))
            for (int v = s.back() + 1; v < n; ++v) {
                bool common = true;
                for (int u : s)
                    if (!adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
                        common = false;
                        break;
                    }
                if (!common)
                    continue;
                Simplex t = s;
                t.push_back(v);
                if (!L.contains(t))
                    return false;
            }
    return true;
}

SimplicialComplex flag_completion(const SimplicialComplex& L) {
    const auto adj = adjacency(L);
    const int n = static_cast<int>(L.vertex_count());
    std::vector<Simplex> cliques;
    std::vector<Simplex> layer;
    for (int v = 0; v < n; ++v)
        layer.push_back({v});
    while (!layer.empty()) {
        std::vector<Simplex> next;
        for (const auto& s : layer)
            for (int v = s.back() + 1; v < n; ++v) {
                bool common = true;
                for (int u : s)
                    if (!adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
                        common = false;
                        break;
                    }
                if (common) {
                    Simplex t = s;
                    t.push_back(v);
                    next.push_back(std::move(t));
                }
            }
        cliques.insert(cliques.end(), layer.begin(), layer.end());
        layer = std::move(next);
    }
    return SimplicialComplex::from_generators(L.vertices(), cliques);
}

SimplicialComplex full_subcomplex(const SimplicialComplex& L, const std::vector<std::string>& vertices) {
    std::vector<bool> keep(L.vertex_count(), false);
    for (const auto& label : vertices) {
        auto v = L.vertex_index(label);
        if (!v)
            throw std::invalid_argument("unknown vertex '" + label + "'");
        keep[static_cast<std::size_t>(*v)] = true;
    }
    std::vector<std::string> labels;
    std::vector<int> renumber(L.vertex_count(), -1);
    for (std::size_t v = 0; v < L.vertex_count(); ++v)
        if (keep[v]) {
            renumber[v] = static_cast<int>(labels.size());
            labels.push_back(L.vertices()[v]);
        }
    std::vector<Simplex> kept;
    for (int d = 0; d <= L.dimension(); ++d)
        for (const auto& s : L.simplices(d)) {
            Simplex t;
            for (int v : s) {
                if (!keep[static_cast<std::size_t>(v)])
                    break;
                t.push_back(renumber[static_cast<std::size_t>(v)]);
            }
            if (t.size() == s.size())
                kept.push_back(std::move(t));
        }
    return SimplicialComplex::from_generators(std::move(labels), kept);
}

bool is_full(const SimplicialComplex& L, const SimplicialComplex& M) {
    if (!is_subcomplex(M, L))
        throw std::invalid_argument("is_full: the candidate is not a subcomplex");
    return same_complex(M, full_subcomplex(L, M.vertices()));
}

// ---------------------------------------------------------------------------

SimplicialComplex relative_barycentric_subdivision(const SimplicialComplex& K, const SimplicialComplex& L) {
    if (!is_subcomplex(L, K))
        throw std::invalid_argument("relative barycentric subdivision: L is not a subcomplex of K");

    std::vector<bool> in_L_vertex(K.vertex_count(), false);
    for (const auto& label : L.vertices())
        in_L_vertex[static_cast<std::size_t>(*K.vertex_index(label))] = true;
    auto in_L = [&](const Simplex& s) {
        for (int v : s)
            if (!in_L_vertex[static_cast<std::size_t>(v)])
                return false;
        auto t = translate(K, L, s);
        return t && L.contains(*t);
    };

    // New vertex numbering: L's vertices in K's order, then the simplices of
    // K outside L by dimension and canonical order.
    std::vector<std::string> labels;
    std::vector<int> old_vertex(K.vertex_count(), -1);
    std::set<std::string> used;
    for (std::size_t v = 0; v < K.vertex_count(); ++v)
        if (in_L_vertex[v]) {
            old_vertex[v] = static_cast<int>(labels.size());
            labels.push_back(K.vertices()[v]);
            used.insert(K.vertices()[v]);
        }
    std::map<Simplex, int> outside; // simplex of K not in L -> new vertex
    std::vector<Simplex> outside_list;
    for (int d = 0; d <= K.dimension(); ++d)
        for (const auto& s : K.simplices(d))
            if (!in_L(s)) {
                std::string name;
                if (s.size() == 1) {
                    name = K.vertices()[static_cast<std::size_t>(s[0])];
                } else {
                    name = "{";
                    for (std::size_t k = 0; k < s.size(); ++k)
                        name += (k ? "," : "") + K.vertices()[static_cast<std::size_t>(s[k])];
                    name += "}";
                }
                while (!used.insert(name).second)
                    name += '\'';
                outside.emplace(s, static_cast<int>(labels.size()));
                labels.push_back(std::move(name));
                outside_list.push_back(s);
            }

    // Strict supersets (within K) of every outside simplex; they are outside too.
    auto is_proper_subset = [](const Simplex& a, const Simplex& b) {
        return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    std::map<Simplex, std::vector<Simplex>> above;
    for (const auto& s : outside_list)
        for (const auto& t : outside_list)
            if (is_proper_subset(s, t))
                above[s].push_back(t);

    std::vector<Simplex> generators;
    for (int d = 0; d <= L.dimension(); ++d)
        for (const auto& s : L.simplices(d)) {
            Simplex t;
            for (int v : s)
                t.push_back(old_vertex[static_cast<std::size_t>(*K.vertex_index(L.vertices()[static_cast<std::size_t>(v)]))]);
            generators.push_back(std::move(t));
        }

    // Each chain s1 < ... < sr of outside simplices, joined with every face s0
    // of s1 that lies in L (the empty face included). Only maximal chains need
    // to be emitted; the closure adds the rest.
    std::vector<Simplex> chain;
    auto emit = [&]() {
        const Simplex& bottom = chain.front();
        const std::size_t n = bottom.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            Simplex face;
            for (std::size_t k = 0; k < n; ++k)
                if (mask & (std::size_t{1} << k))
                    face.push_back(bottom[k]);
            if (!face.empty() && !in_L(face))
                continue;
            Simplex t;
            for (int v : face)
                t.push_back(old_vertex[static_cast<std::size_t>(v)]);
            for (const auto& c : chain)
                t.push_back(outside.at(c));
            generators.push_back(std::move(t));
        }
    };
    auto extend = [&](auto&& self) -> void {
        const auto it = above.find(chain.back());
        bool extended = false;
        if (it != above.end())
            for (const auto& t : it->second) {
                // Only cover relations: skip t if some intermediate simplex exists.
                bool cover = true;
                for (const auto& u : it->second)
                    if (is_proper_subset(u, t)) {
                        cover = false;
                        break;
                    }
                if (!cover)
                    continue;
                chain.push_back(t);
                self(self);
                chain.pop_back();
                extended = true;
            }
        if (!extended)
            emit();
    };
    for (const auto& s : outside_list) {
        chain.assign(1, s);
        extend(extend);
    }
    return SimplicialComplex::from_generators(std::move(labels), generators);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> numbered_labels(int n, int first = 0) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i)
        out.push_back(std::to_string(first + i));
    return out;
}

} // namespace

SimplicialComplex simplex(int n) {
    if (n < -1)
        throw std::invalid_argument("simplex(n) needs n >= -1");
    if (n == -1)
        return SimplicialComplex{};
    Simplex all;
    for (int v = 0; v <= n; ++v)
        all.push_back(v);
    return SimplicialComplex::from_generators(numbered_labels(n + 1), {all});
}

SimplicialComplex simplex_boundary(int n) {
    if (n < 0)
        throw std::invalid_argument("simplex_boundary(n) needs n >= 0");
    std::vector<Simplex> faces;
    for (int drop = 0; drop <= n; ++drop) {
        Simplex s;
        for (int v = 0; v <= n; ++v)
            if (v != drop)
                s.push_back(v);
        faces.push_back(std::move(s));
    }
    if (n == 0)
        return SimplicialComplex{};
    return SimplicialComplex::from_generators(numbered_labels(n + 1), faces);
}

SimplicialComplex cycle(int k) {
    if (k < 3)
        throw std::invalid_argument("cycle(k) needs k >= 3");
    std::vector<Simplex> edges;
    for (int v = 0; v < k; ++v)
        edges.push_back({v, (v + 1) % k});
    return SimplicialComplex::from_generators(numbered_labels(k), edges);
}

SimplicialComplex points(int m) {
    if (m < 0)
        throw std::invalid_argument("points(m) needs m >= 0");
    std::vector<Simplex> pts;
    for (int v = 0; v < m; ++v)
        pts.push_back({v});
    return SimplicialComplex::from_generators(numbered_labels(m), pts);
}

SimplicialComplex rp2_six() {
    // Antipodal quotient of the icosahedron.
    const std::vector<Simplex> triangles = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                            {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
    return SimplicialComplex::from_generators(numbered_labels(6, 1), triangles);
}

SimplicialComplex barycentric(const SimplicialComplex& K) {
    return relative_barycentric_subdivision(K, SimplicialComplex{});
}

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    SimplicialComplex parse_all() {
        auto out = parse();
        skip_ws();
        if (pos_ != text_.size())
            fail("trailing characters");
        return out;
    }

private:
    SimplicialComplex parse() {
        skip_ws();
        std::string name;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            name += text_[pos_++];
        if (name.empty())
            fail("expected a generator name");
        skip_ws();
        if (name == "rp2_six") {
            if (peek('(')) {
                ++pos_;
                expect(')');
            }
            return rp2_six();
        }
        expect('(');
        SimplicialComplex out;
        if (name == "barycentric") {
            out = barycentric(parse());
        } else {
            const int n = parse_int();
            if (name == "simplex")
                out = simplex(n);
            else if (name == "simplex_boundary")
                out = simplex_boundary(n);
            else if (name == "cycle")
                out = cycle(n);
            else if (name == "points")
                out = points(n);
            else
                fail("unknown generator '" + name + "'");
        }
        expect(')');
        return out;
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-')
            ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start || (pos_ == start + 1 && text_[start] == '-'))
            fail("expected an integer");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c))
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("generator spec '" + std::string(text_) + "': " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

SimplicialComplex generate(std::string_view spec) {
    return SpecParser(spec).parse_all();
}

} // namespace torcover
