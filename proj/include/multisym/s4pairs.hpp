#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "multisym/algebra.hpp"
#include "multisym/linalg.hpp"
#include "multisym/poly.hpp"
#include "multisym/syzygy.hpp"
#include "multisym/trace.hpp"

/// The symmetric group S_4 acting on the six pair variables x_{ij}, i<j in
/// {1,2,3,4}, its invariant ring R^{S_4}, a presentation of that ring, and
/// the resulting complete invariant of 4-vertex graphs.
namespace multisym::s4 {

/// Pair variables in the order 12, 13, 14, 23, 24, 34.
const std::array<Var, 6>& pair_vars();
Var pair_var(unsigned i, unsigned j);  // 1-based, any order

/// K[x,z]: its third tensor power is identified with R through x_k, z_k.
const BasedAlgebra& xz_algebra();
/// x1, x2, x3, z1, z2, z3
const std::array<Var, 6>& xz_vars();

/// x_k = x_{pair} + x_{complement}, z_k = x_{pair} - x_{complement} for the
/// pairs 12|34, 13|24, 14|23. Rows x1..z3, columns pair_vars().
RatMatrix xz_change_of_basis();

Poly to_xz(const Poly& p);
Poly from_xz(const Poly& p);

/// σ·x_{ij} = x_{σ(i)σ(j)}; accepts polynomials in pair variables, x/z
/// coordinates, or a mixture.
Poly act(const Perm& sigma, const Poly& p);

/// The double transpositions together with the identity.
std::vector<Perm> klein_four();

/// Symbols of the ten-variable presentation algebra, in the order
/// T_x, T_{x2}, T_{x3}, T_y, T_{y2}, T_{y3}, T_{xy}, T_{x2y}, T_{xy2}, S.
struct PresentationSymbol {
    Var var;
    unsigned x_degree = 0;  // a in T_{x^a y^b}
    unsigned y_degree = 0;  // b
    /// R-degree: a + 2b, and 3 for S.
    unsigned degree = 0;
    bool is_s = false;
};
const std::vector<PresentationSymbol>& presentation_symbols();
Var symbol(std::string_view name);  // e.g. "T_{x2y}" or "S"
unsigned weighted_degree(const Mono& m);
bool is_homogeneous(const FPoly& f, unsigned degree);
/// Homogeneous of bidegree (a, b) under T_{x^i y^j} ↦ (i, j); S is rejected.
bool is_bihomogeneous(const FPoly& f, unsigned a, unsigned b);
/// Symbol swap x <-> y: T_{x^a y^b} ↦ T_{x^b y^a}.
FPoly swap_xy(const FPoly& f);

/// [x], [x^2], [x^3], [z^2], [z^4], [z^6], [xz^2], [x^2z^2], [xz^4], z1z2z3
/// in x/z coordinates.
std::vector<Poly> ten_generators();
/// The nine minimal generators: ten_generators() without [z^6].
std::vector<Poly> nine_generators();
const std::vector<std::string>& nine_generator_names();

/// φ(S) = z1 z2 z3, φ(T_w) = [ψ(w)] with ψ(x) = x, ψ(y) = z^2.
Poly phi(const FPoly& f);

struct Relation {
    std::string name;
    FPoly poly;
    unsigned degree = 0;
};

/// S^2 relation and J_{3,2}, J_{2,3}, J_{4,2}, J_{3,3}, J_{2,4}.
const std::vector<Relation>& relation_generators();
/// T_{y3} ↦ 3S^2 + 3/2 T_{y2} T_y - 1/2 T_y^3
FPoly eliminate_y3(const FPoly& f);
/// The five J relations with T_{y3} eliminated.
std::vector<Relation> y3_free_relations();

/// dim R^{S_4}_d by Burnside's orbit count.
std::size_t invariant_dim(unsigned d);
/// Rank of the S_4-symmetrizations of all degree-d pair monomials.
std::size_t symmetrized_rank(unsigned d);

/// Monomials of the ten-variable presentation algebra of R-degree d.
std::vector<Mono> presentation_monomials(unsigned d);

struct KernelDegree {
    unsigned degree = 0;
    std::size_t monomials = 0;
    std::size_t kernel_dim = 0;
    std::size_t ideal_dim = 0;
    bool match = false;
    /// Relations of this degree, each with the ideal dimension after dropping it.
    std::vector<std::pair<std::string, std::size_t>> dropped_ideal_dims;
    std::vector<FPoly> kernel_basis;
};

/// Degreewise comparison of ker φ with the ideal of `relations`.
std::vector<KernelDegree> kernel_report(unsigned d_max, const std::vector<Relation>& relations);
std::vector<KernelDegree> kernel_report(unsigned d_max = 10);

struct GeneratorDegree {
    unsigned degree = 0;
    std::size_t dim = 0;
    std::size_t decomposable_dim = 0;
    std::size_t indecomposable_count = 0;
    /// Whether the named minimal generators of this degree complete the
    /// decomposables to all of R^{S_4}_d.
    bool named_generators_complete = false;
};

/// Indecomposable counts of R^{S_4}, computed in pair coordinates from orbit sums.
std::vector<GeneratorDegree> min_generator_report(unsigned d_max);
/// Whether [z^6] lies in (R_+)^2.
bool z6_is_decomposable();

/// Simple graph on {1,2,3,4}: bit k set when pair_vars()[k] is an edge.
struct Graph4 {
    std::uint8_t edges = 0;

    static Graph4 parse(std::string_view edge_list);  // "12,34"
    std::string str() const;                          // sorted pair list
    Graph4 relabel(const Perm& sigma) const;
    friend auto operator<=>(const Graph4&, const Graph4&) = default;
};

using Fingerprint = std::array<Rat, 9>;

/// Values of the nine minimal generators at the edge-indicator point.
Fingerprint fingerprint(const Graph4& g);
std::string fingerprint_str(const Fingerprint& f);

struct GraphClasses {
    std::vector<std::vector<Graph4>> by_fingerprint;
    std::vector<Fingerprint> fingerprints;
    std::vector<std::vector<Graph4>> by_orbit;
    bool equal = false;
};

/// Both partitions of the 64 labelled graphs, in canonical order.
GraphClasses isomorphism_classes();

}  // namespace multisym::s4
