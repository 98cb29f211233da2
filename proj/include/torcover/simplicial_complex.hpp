#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace torcover {

/// Strictly increasing vertex indices. The global vertex order fixes the
/// orientation of every simplex.
using Simplex = std::vector<int>;

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int v : s) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Finite abstract simplicial complex, stored with every face (including the
/// empty simplex) grouped by dimension and sorted lexicographically.
///
/// Instances are immutable after construction.
class SimplicialComplex {
public:
    /// The empty complex: no vertices, only the empty simplex.
    SimplicialComplex();

    /// Downward closure of `generators` (index tuples into `labels`, in any
    /// order, without repeats). Every label must occur in some generator.
    static SimplicialComplex from_generators(std::vector<std::string> labels, const std::vector<Simplex>& generators);

    /// Downward closure of simplices given by labels; vertex order is first appearance.
    static SimplicialComplex from_labeled(const std::vector<std::vector<std::string>>& simplices);

    const std::vector<std::string>& vertices() const noexcept { return labels_; }
    std::size_t vertex_count() const noexcept { return labels_.size(); }
    /// -1 for the empty complex.
    int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 2; }
    bool is_empty() const noexcept { return labels_.empty(); }

    /// Simplices of dimension `dim` in canonical order (empty beyond the dimension).
    const std::vector<Simplex>& simplices(int dim) const;
    std::size_t count(int dim) const { return simplices(dim).size(); }
    /// Total number of simplices including the empty one.
    std::size_t size() const noexcept { return index_.size(); }

    bool contains(const Simplex& s) const { return index_.count(s) != 0; }
    /// Position of `s` within simplices(|s| - 1).
    std::optional<std::size_t> index_of(const Simplex& s) const;

    std::optional<int> vertex_index(std::string_view label) const;
    std::vector<std::string> labels_of(const Simplex& s) const;
    /// Maps labels to a sorted index tuple. Throws std::invalid_argument on an
    /// unknown or repeated label.
    Simplex simplex_of(const std::vector<std::string>& labels) const;

    /// Maximal simplices in canonical order (the empty simplex for the empty complex).
    std::vector<Simplex> facets() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Simplex>> by_dim_; // by_dim_[d + 1]
    std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
    std::unordered_map<std::string, int> label_index_;
};

/// f_{-1}, f_0, ..., f_dim. f_{-1} = 1 always.
struct FVector {
    std::vector<std::size_t> counts;

    /// f_dim, zero outside the stored range.
    std::size_t at(int dim) const {
        const int k = dim + 1;
        return k >= 0 && k < static_cast<int>(counts.size()) ? counts[static_cast<std::size_t>(k)] : 0;
    }
    friend bool operator==(const FVector&, const FVector&) = default;
};

FVector f_vector(const SimplicialComplex& L);

/// Same set of simplices, compared through vertex labels.
bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b);
/// Every simplex of `sub` (by labels) is a simplex of `ambient`.
bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& ambient);

// Parsing and canonical text form -------------------------------------------

/// One simplex per line as whitespace-separated labels, '#' comments, blank
/// lines ignored. Throws ParseError (with line number) on a repeated vertex.
SimplicialComplex parse_complex(std::string_view text);
/// Facets only, labels sorted within a line, lines sorted.
std::string serialize_complex(const SimplicialComplex& L);

// Flag complexes and full subcomplexes ---------------------------------------

bool is_flag(const SimplicialComplex& L);
/// Clique complex of the 1-skeleton.
SimplicialComplex flag_completion(const SimplicialComplex& L);
/// Simplices of L whose vertices all lie in `vertices`. Throws
/// std::invalid_argument naming an unknown label.
SimplicialComplex full_subcomplex(const SimplicialComplex& L, const std::vector<std::string>& vertices);
/// Throws std::invalid_argument when M is not a subcomplex of L.
bool is_full(const SimplicialComplex& L, const SimplicialComplex& M);

/// (K, L)': vertices of L plus one new vertex per simplex of K outside L;
/// simplices are the chains s0 < s1 < ... < sr with s0 in L (possibly empty)
/// and every other si outside L. With L empty this is the barycentric
/// subdivision. New vertices are labelled by their simplex, e.g. "{a,b}";
/// a singleton outside L keeps its label.
SimplicialComplex relative_barycentric_subdivision(const SimplicialComplex& K, const SimplicialComplex& L);

// Generators -----------------------------------------------------------------

/// Full simplex on n + 1 vertices "0".."n" (n = -1 gives the empty complex).
SimplicialComplex simplex(int n);
/// Boundary of the n-simplex (n >= 0).
SimplicialComplex simplex_boundary(int n);
/// k-gon, k >= 3.
SimplicialComplex cycle(int k);
/// m isolated vertices.
SimplicialComplex points(int m);
/// Six-vertex triangulation of the real projective plane.
SimplicialComplex rp2_six();
SimplicialComplex barycentric(const SimplicialComplex& K);

/// Parses and evaluates a generator spec such as "simplex(2)" or
/// "barycentric(rp2_six)". Throws ParseError or std::invalid_argument.
SimplicialComplex generate(std::string_view spec);

} // namespace torcover
