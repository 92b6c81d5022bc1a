#pragma once

#include <cstddef>
#include <vector>

#include "bicov/group.hpp"
#include "bicov/linalg.hpp"

namespace bicov {

// The two dual Hopf algebras attached to a finite group G: the function
// algebra F(G) on the delta basis {φ_g} and the group algebra CG on {g}.
// Everything is a coefficient vector of length |G|; the group table supplies
// all structure.

struct FunElement {
    std::vector<cplx> c;
    FunElement() = default;
    explicit FunElement(std::size_t n) : c(n) {}
};

struct GroupAlgElement {
    std::vector<cplx> c;
    GroupAlgElement() = default;
    explicit GroupAlgElement(std::size_t n) : c(n) {}
};

enum class TensorBasis { FunFun, AlgAlg };

/// Element of a two-fold tensor product, coefficient at (u,v) = c[u*n+v].
struct TensorElement {
    TensorBasis basis = TensorBasis::FunFun;
    std::size_t n = 0;
    std::vector<cplx> c;
    TensorElement() = default;
    TensorElement(TensorBasis b, std::size_t n_) : basis(b), n(n_), c(n_ * n_) {}
    cplx& at(int u, int v) { return c[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)]; }
    const cplx& at(int u, int v) const { return c[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)]; }
};

template <class E>
inline double max_abs(const E& x) {
    double m = 0.0;
    for (const cplx& z : x.c) m = std::max(m, std::abs(z));
    return m;
}

template <class E>
inline E lincomb(const cplx& a, const E& x, const cplx& b, const E& y) {
    E out = x;
    for (std::size_t k = 0; k < out.c.size(); ++k) out.c[k] = a * x.c[k] + b * y.c[k];
    return out;
}

inline FunElement fun_basis(std::size_t n, int g) {
    FunElement x(n);
    x.c[static_cast<std::size_t>(g)] = 1.0;
    return x;
}

/// The unit of F(G): the constant function 1 = Σ_g φ_g.
inline FunElement fun_one(std::size_t n) {
    FunElement x(n);
    for (cplx& z : x.c) z = 1.0;
    return x;
}

inline GroupAlgElement alg_basis(std::size_t n, int g) {
    GroupAlgElement x(n);
    x.c[static_cast<std::size_t>(g)] = 1.0;
    return x;
}

inline GroupAlgElement alg_unit(std::size_t n) { return alg_basis(n, GroupTable::e); }

// --- F(G): pointwise product, Δφ(g,h) = φ(gh), S(φ)(g) = φ(g⁻¹), ε(φ) = φ(e)

inline FunElement product_F(const GroupTable&, const FunElement& a, const FunElement& b) {
    FunElement out(a.c.size());
    for (std::size_t g = 0; g < a.c.size(); ++g) out.c[g] = a.c[g] * b.c[g];
    return out;
}

inline TensorElement delta_F(const GroupTable& G, const FunElement& a) {
    TensorElement t(TensorBasis::FunFun, G.n);
    for (std::size_t u = 0; u < G.n; ++u)
        for (std::size_t v = 0; v < G.n; ++v)
            t.at(static_cast<int>(u), static_cast<int>(v)) = a.c[static_cast<std::size_t>(G.op(static_cast<int>(u), static_cast<int>(v)))];
    return t;
}

inline FunElement antipode_F(const GroupTable& G, const FunElement& a) {
    FunElement out(G.n);
    for (std::size_t g = 0; g < G.n; ++g) out.c[g] = a.c[static_cast<std::size_t>(G.inv(static_cast<int>(g)))];
    return out;
}

inline cplx counit_F(const GroupTable&, const FunElement& a) { return a.c[GroupTable::e]; }

// --- CG: convolution product, Δg = g⊗g, S(g) = g⁻¹, ε(g) = 1

inline GroupAlgElement product_U(const GroupTable& G, const GroupAlgElement& x, const GroupAlgElement& y) {
    GroupAlgElement out(G.n);
    for (std::size_t g = 0; g < G.n; ++g) {
        if (x.c[g] == cplx{}) continue;
        for (std::size_t h = 0; h < G.n; ++h)
            out.c[static_cast<std::size_t>(G.op(static_cast<int>(g), static_cast<int>(h)))] += x.c[g] * y.c[h];
    }
    return out;
}

inline TensorElement delta_U(const GroupTable& G, const GroupAlgElement& x) {
    TensorElement t(TensorBasis::AlgAlg, G.n);
    for (std::size_t g = 0; g < G.n; ++g) t.at(static_cast<int>(g), static_cast<int>(g)) = x.c[g];
    return t;
}

inline GroupAlgElement antipode_U(const GroupTable& G, const GroupAlgElement& x) {
    GroupAlgElement out(G.n);
    for (std::size_t g = 0; g < G.n; ++g) out.c[static_cast<std::size_t>(G.inv(static_cast<int>(g)))] = x.c[g];
    return out;
}

inline cplx counit_U(const GroupTable&, const GroupAlgElement& x) {
    cplx s = 0.0;
    for (const cplx& z : x.c) s += z;
    return s;
}

/// Duality pairing, bilinear extension of ⟨g, φ_h⟩ = δ_{g,h}.
inline cplx pairing(const GroupAlgElement& x, const FunElement& a) {
    cplx s = 0.0;
    for (std::size_t g = 0; g < x.c.size(); ++g) s += x.c[g] * a.c[g];
    return s;
}

// --- tensor utilities

inline TensorElement tensor_of(const FunElement& a, const FunElement& b) {
    TensorElement t(TensorBasis::FunFun, a.c.size());
    for (std::size_t u = 0; u < a.c.size(); ++u)
        for (std::size_t v = 0; v < b.c.size(); ++v) t.at(static_cast<int>(u), static_cast<int>(v)) = a.c[u] * b.c[v];
    return t;
}

inline TensorElement tensor_of(const GroupAlgElement& x, const GroupAlgElement& y) {
    TensorElement t(TensorBasis::AlgAlg, x.c.size());
    for (std::size_t u = 0; u < x.c.size(); ++u)
        for (std::size_t v = 0; v < y.c.size(); ++v) t.at(static_cast<int>(u), static_cast<int>(v)) = x.c[u] * y.c[v];
    return t;
}

/// Contract the second tensor leg against a group algebra element: (id⊗f) t.
inline FunElement pair_second(const TensorElement& t, const GroupAlgElement& f) {
    FunElement out(t.n);
    for (std::size_t u = 0; u < t.n; ++u)
        for (std::size_t v = 0; v < t.n; ++v) out.c[u] += t.at(static_cast<int>(u), static_cast<int>(v)) * f.c[v];
    return out;
}

/// Contract the first tensor leg against a group algebra element: (f⊗id) t.
inline FunElement pair_first(const TensorElement& t, const GroupAlgElement& f) {
    FunElement out(t.n);
    for (std::size_t u = 0; u < t.n; ++u)
        for (std::size_t v = 0; v < t.n; ++v) out.c[v] += t.at(static_cast<int>(u), static_cast<int>(v)) * f.c[u];
    return out;
}

// --- convolutions and the adjoint action

/// f∗a = (id⊗f)Δa; on basis elements g∗φ_a = φ_{a g⁻¹}.
inline FunElement conv_left(const GroupTable& G, const GroupAlgElement& f, const FunElement& a) {
    return pair_second(delta_F(G, a), f);
}

/// a∗f = (f⊗id)Δa; on basis elements φ_a∗g = φ_{g⁻¹ a}.
inline FunElement conv_right(const GroupTable& G, const FunElement& a, const GroupAlgElement& f) {
    return pair_first(delta_F(G, a), f);
}

/// Adjoint action of CG on F(G): Ad_X a = Σ a_(2) ⟨X, S(a_(1)) a_(3)⟩.
/// The Sweedler sum collapses over the delta basis to
/// Ad_X φ_c = Σ_w X_w φ_{w c w⁻¹}; on group-likes (Ad_g φ)(h) = φ(g⁻¹ h g).
/// Composition order: Ad_{gh} = Ad_g ∘ Ad_h (pinned by test).
inline FunElement ad_action(const GroupTable& G, const GroupAlgElement& X, const FunElement& a) {
    FunElement out(G.n);
    for (std::size_t w = 0; w < G.n; ++w) {
        if (X.c[w] == cplx{}) continue;
        for (std::size_t cc = 0; cc < G.n; ++cc)
            out.c[static_cast<std::size_t>(G.conj(static_cast<int>(w), static_cast<int>(cc)))] += X.c[w] * a.c[cc];
    }
    return out;
}

} // namespace bicov
