#pragma once

#include <cstddef>
#include <sstream>
#include <vector>

#include "bicov/bimodule.hpp"
#include "bicov/errors.hpp"
#include "bicov/group.hpp"
#include "bicov/hopf.hpp"
#include "bicov/linalg.hpp"

namespace bicov {

// Hochschild complex C^k(F(G), invΓ) where invΓ carries the bimodule
// structure a.γ = ε(a)γ (left) and γ.a = τ_F(a)γ (right). A k-cochain is a
// dense tensor: one invΓ vector per k-tuple of delta-basis arguments.

struct Cochain {
    int degree = 0;
    std::size_t n = 0, dim = 0;
    std::vector<cplx> v; // n^degree · dim entries

    Cochain() = default;
    Cochain(int k, std::size_t n_, std::size_t d_) : degree(k), n(n_), dim(d_) {
        std::size_t size = d_;
        for (int i = 0; i < k; ++i) size *= n_;
        v.assign(size, cplx{});
    }

    std::size_t tuples() const { return v.size() / dim; }

    /// Component β of the value at argument tuple index t (big-endian mixed
    /// radix: t = ((u1·n + u2)·n + ...)·n + uk).
    cplx& at(std::size_t t, std::size_t beta) { return v[t * dim + beta]; }
    const cplx& at(std::size_t t, std::size_t beta) const { return v[t * dim + beta]; }
};

inline double max_abs(const Cochain& c) {
    double m = 0.0;
    for (const cplx& z : c.v) m = std::max(m, std::abs(z));
    return m;
}

inline Cochain operator-(const Cochain& a, const Cochain& b) {
    Cochain out = a;
    for (std::size_t k = 0; k < out.v.size(); ++k) out.v[k] -= b.v[k];
    return out;
}

namespace detail {

inline std::vector<int> unpack_tuple(std::size_t t, int k, std::size_t n) {
    std::vector<int> u(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
        u[static_cast<std::size_t>(i)] = static_cast<int>(t % n);
        t /= n;
    }
    return u;
}

inline std::size_t pack_tuple(const std::vector<int>& u, std::size_t n) {
    std::size_t t = 0;
    for (int x : u) t = t * n + static_cast<std::size_t>(x);
    return t;
}

} // namespace detail

/// Hochschild coboundary
/// δψ(α_1,…,α_{k+1}) = α_1.ψ(α_2,…) + Σ (−1)^i ψ(…, α_i α_{i+1}, …)
///                     + (−1)^{k+1} ψ(α_1,…,α_k).α_{k+1}
/// on delta-basis arguments (products of basis elements collapse by δ_{u,v}).
inline Cochain coboundary(const BicovBimodule& bm, const Cochain& psi) {
    const std::size_t n = bm.order(), d = bm.dim;
    const int k = psi.degree;
    Cochain out(k + 1, n, d);
    for (std::size_t t = 0; t < out.tuples(); ++t) {
        const std::vector<int> u = detail::unpack_tuple(t, k + 1, n);
        // α_1.ψ(α_2..α_{k+1}) = ε(φ_{u1}) ψ(...)
        if (u[0] == GroupTable::e) {
            std::vector<int> rest(u.begin() + 1, u.end());
            const std::size_t s = detail::pack_tuple(rest, n);
            for (std::size_t b = 0; b < d; ++b) out.at(t, b) += psi.at(s, b);
        }
        // inner merges
        double sign = -1.0;
        for (int i = 0; i < k; ++i, sign = -sign) {
            if (u[static_cast<std::size_t>(i)] != u[static_cast<std::size_t>(i) + 1]) continue;
            std::vector<int> merged;
            merged.reserve(static_cast<std::size_t>(k));
            for (int j = 0; j <= k; ++j)
                if (j != i + 1) merged.push_back(u[static_cast<std::size_t>(j)]);
            const std::size_t s = detail::pack_tuple(merged, n);
            for (std::size_t b = 0; b < d; ++b) out.at(t, b) += sign * psi.at(s, b);
        }
        // ψ(α_1..α_k).α_{k+1} = τ_F(φ_{u_{k+1}}) ψ(...)
        const double last_sign = (k + 1) % 2 == 0 ? 1.0 : -1.0;
        std::vector<int> head(u.begin(), u.end() - 1);
        const std::size_t s = detail::pack_tuple(head, n);
        const CMatrix& tf = bm.tau_fun[static_cast<std::size_t>(u.back())];
        for (std::size_t b = 0; b < d; ++b) {
            cplx acc = 0.0;
            for (std::size_t a = 0; a < d; ++a) acc += tf(b, a) * psi.at(s, a);
            out.at(t, b) += last_sign * acc;
        }
    }
    return out;
}

/// Right action of a group-like on cochains:
/// (ψ•g)(a_1,…,a_k) = τ_D(g) ψ(Ad_g a_1, …, Ad_g a_k).
inline Cochain act_grouplike(const BicovBimodule& bm, const Cochain& psi, int g) {
    const std::size_t n = bm.order(), d = bm.dim;
    const GroupTable& G = bm.group();
    Cochain out(psi.degree, n, d);
    const CMatrix& td = bm.tauD_grouplike(g);
    for (std::size_t t = 0; t < out.tuples(); ++t) {
        std::vector<int> u = detail::unpack_tuple(t, psi.degree, n);
        for (int& x : u) x = G.conj(g, x); // Ad_g φ_x = φ_{g x g⁻¹}
        const std::size_t s = detail::pack_tuple(u, n);
        for (std::size_t b = 0; b < d; ++b) {
            cplx acc = 0.0;
            for (std::size_t a = 0; a < d; ++a) acc += td(b, a) * psi.at(s, a);
            out.at(t, b) = acc;
        }
    }
    return out;
}

/// ψ•X for arbitrary X ∈ CG, by linearity over the group-like basis.
inline Cochain act(const BicovBimodule& bm, const Cochain& psi, const GroupAlgElement& X) {
    Cochain out(psi.degree, bm.order(), bm.dim);
    for (std::size_t g = 0; g < bm.order(); ++g) {
        if (X.c[g] == cplx{}) continue;
        const Cochain term = act_grouplike(bm, psi, static_cast<int>(g));
        for (std::size_t k = 0; k < out.v.size(); ++k) out.v[k] += X.c[g] * term.v[k];
    }
    return out;
}

/// A subspace of C^k given by flattened basis columns.
struct CochainSpace {
    int degree = 0;
    std::size_t n = 0, dim = 0;
    CMatrix basis; // (n^degree·dim) × (space dimension)

    Cochain column(std::size_t j) const {
        Cochain c(degree, n, dim);
        for (std::size_t r = 0; r < c.v.size(); ++r) c.v[r] = basis(r, j);
        return c;
    }
};

namespace detail {

/// Matrix of ψ ↦ ψ•g on flattened degree-k cochains.
inline CMatrix act_matrix(const BicovBimodule& bm, int k, int g) {
    const std::size_t n = bm.order(), d = bm.dim;
    const GroupTable& G = bm.group();
    std::size_t tuples = 1;
    for (int i = 0; i < k; ++i) tuples *= n;
    CMatrix m(tuples * d, tuples * d);
    const CMatrix& td = bm.tauD_grouplike(g);
    for (std::size_t t = 0; t < tuples; ++t) {
        std::vector<int> u = unpack_tuple(t, k, n);
        for (int& x : u) x = G.conj(g, x);
        const std::size_t s = pack_tuple(u, n);
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t a = 0; a < d; ++a) m(t * d + b, s * d + a) = td(b, a);
    }
    return m;
}

} // namespace detail

/// Matrix of δ: C^k → C^{k+1} on flattened cochains.
inline CMatrix coboundary_matrix(const BicovBimodule& bm, int k) {
    const std::size_t n = bm.order(), d = bm.dim;
    std::size_t tin = 1, tout = 1;
    for (int i = 0; i < k; ++i) tin *= n;
    tout = tin * n;
    CMatrix m(tout * d, tin * d);
    for (std::size_t t = 0; t < tout; ++t) {
        const std::vector<int> u = detail::unpack_tuple(t, k + 1, n);
        if (u[0] == GroupTable::e) {
            std::vector<int> rest(u.begin() + 1, u.end());
            const std::size_t s = detail::pack_tuple(rest, n);
            for (std::size_t b = 0; b < d; ++b) m(t * d + b, s * d + b) += 1.0;
        }
        double sign = -1.0;
        for (int i = 0; i < k; ++i, sign = -sign) {
            if (u[static_cast<std::size_t>(i)] != u[static_cast<std::size_t>(i) + 1]) continue;
            std::vector<int> merged;
            for (int j = 0; j <= k; ++j)
                if (j != i + 1) merged.push_back(u[static_cast<std::size_t>(j)]);
            const std::size_t s = detail::pack_tuple(merged, n);
            for (std::size_t b = 0; b < d; ++b) m(t * d + b, s * d + b) += sign;
        }
        const double last_sign = (k + 1) % 2 == 0 ? 1.0 : -1.0;
        std::vector<int> head(u.begin(), u.end() - 1);
        const std::size_t s = detail::pack_tuple(head, n);
        const CMatrix& tf = bm.tau_fun[static_cast<std::size_t>(u.back())];
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t a = 0; a < d; ++a) m(t * d + b, s * d + a) += last_sign * tf(b, a);
    }
    return m;
}

/// Basis of {ψ ∈ C^k : ψ•g = ψ for all g ∈ G}. Group-likes span CG, so this
/// is invariance under the whole of CG.
inline CochainSpace invariant_subspace(const BicovBimodule& bm, int k, double tol = kDefaultTol) {
    if (k < 0 || k > 2) throw std::invalid_argument("invariant_subspace: degree must be 0, 1 or 2");
    const std::size_t n = bm.order(), d = bm.dim;
    std::size_t tuples = 1;
    for (int i = 0; i < k; ++i) tuples *= n;
    const std::size_t cols = tuples * d;
    CMatrix sys(n * cols, cols);
    const CMatrix id = CMatrix::identity(cols);
    for (std::size_t g = 0; g < n; ++g) {
        const CMatrix m = detail::act_matrix(bm, k, static_cast<int>(g)) - id;
        for (std::size_t r = 0; r < cols; ++r)
            for (std::size_t c = 0; c < cols; ++c) sys(g * cols + r, c) = m(r, c);
    }
    CochainSpace out;
    out.degree = k;
    out.n = n;
    out.dim = d;
    out.basis = nullspace(sys, tol);
    return out;
}

/// Basis of the 1-cocycles Z¹ = ker δ₁.
inline CochainSpace cocycle_space(const BicovBimodule& bm, double tol = kDefaultTol) {
    CochainSpace out;
    out.degree = 1;
    out.n = bm.order();
    out.dim = bm.dim;
    out.basis = nullspace(coboundary_matrix(bm, 1), tol);
    return out;
}

/// Basis of the invariant 1-cocycles: nullspace of the stacked
/// [δ₁ ; invariance] system.
inline CochainSpace invariant_cocycles(const BicovBimodule& bm, double tol = kDefaultTol) {
    const std::size_t n = bm.order(), d = bm.dim;
    const std::size_t cols = n * d;
    const CMatrix cocycle = coboundary_matrix(bm, 1);
    CMatrix sys(cocycle.rows() + n * cols, cols);
    for (std::size_t r = 0; r < cocycle.rows(); ++r)
        for (std::size_t c = 0; c < cols; ++c) sys(r, c) = cocycle(r, c);
    const CMatrix id = CMatrix::identity(cols);
    for (std::size_t g = 0; g < n; ++g) {
        const CMatrix m = detail::act_matrix(bm, 1, static_cast<int>(g)) - id;
        for (std::size_t r = 0; r < cols; ++r)
            for (std::size_t c = 0; c < cols; ++c) sys(cocycle.rows() + g * cols + r, c) = m(r, c);
    }
    CochainSpace out;
    out.degree = 1;
    out.n = n;
    out.dim = d;
    out.basis = nullspace(sys, tol);
    return out;
}

/// Residual of the degree-1 cocycle identity for the extension of ψ to the
/// double, φ(φ_h·g) = τ_D(g)ψ(φ_h) with φ|_CG = 0, in C(D(G), invΓ) with
/// left action ε_D and right action τ_D.
inline double double_cocycle_residual(const BicovBimodule& bm, const Cochain& psi) {
    const GroupTable& G = bm.group();
    const std::size_t n = G.n, d = bm.dim;
    // phi[h*n+g] = τ_D(g) ψ(φ_h)
    std::vector<std::vector<cplx>> phi(n * n, std::vector<cplx>(d));
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t g = 0; g < n; ++g) {
            const CMatrix& tu = bm.tau_alg[g];
            for (std::size_t b = 0; b < d; ++b) {
                cplx acc = 0.0;
                for (std::size_t a = 0; a < d; ++a) acc += tu(b, a) * psi.at(h, a);
                phi[h * n + g][b] = acc;
            }
        }
    // τ_D on basis elements of D
    std::vector<CMatrix> tau_basis(n * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) tau_basis[k * n + l] = matmul(bm.tau_alg[l], bm.tau_fun[k]);

    double worst = 0.0;
    std::vector<cplx> resid(d);
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    // x = φ_h·g, y = φ_k·l
                    for (std::size_t b = 0; b < d; ++b) resid[b] = cplx{};
                    if (h == GroupTable::e)
                        for (std::size_t b = 0; b < d; ++b) resid[b] += phi[k * n + l][b];
                    // x·y = δ_{k, g⁻¹ h g} φ_h·(g l)
                    if (static_cast<int>(k) == G.conj(G.inv(static_cast<int>(g)), static_cast<int>(h))) {
                        const std::size_t gl = static_cast<std::size_t>(G.op(static_cast<int>(g), static_cast<int>(l)));
                        for (std::size_t b = 0; b < d; ++b) resid[b] -= phi[h * n + gl][b];
                    }
                    const CMatrix& ty = tau_basis[k * n + l];
                    const std::vector<cplx>& px = phi[h * n + g];
                    for (std::size_t b = 0; b < d; ++b) {
                        cplx acc = 0.0;
                        for (std::size_t a = 0; a < d; ++a) acc += ty(b, a) * px[a];
                        resid[b] += acc;
                    }
                    for (std::size_t b = 0; b < d; ++b) worst = std::max(worst, std::abs(resid[b]));
                }
    return worst;
}

inline bool verify_double_cocycle(const BicovBimodule& bm, const Cochain& psi, double tol = kDefaultTol) {
    return double_cocycle_residual(bm, psi) <= tol;
}

/// All ad-invariant right ideals of Ker ε ⊂ F(G): spans of {φ_g : g ∈ S} for
/// S a union of nontrivial conjugacy classes. Returns the supports S sorted,
/// enumerated by subset mask over the class list (∅ first, full union last).
inline std::vector<std::vector<int>> ad_invariant_ideals(const GroupTable& g) {
    std::vector<ConjugacyClass> classes = conjugacy_classes(g);
    std::vector<const ConjugacyClass*> nontrivial;
    for (const auto& c : classes)
        if (!(c.size() == 1 && c.members[0] == GroupTable::e)) nontrivial.push_back(&c);
    const std::size_t m = nontrivial.size();
    if (m > 20) throw ValidationError("ad_invariant_ideals: too many conjugacy classes to enumerate");
    std::vector<std::vector<int>> out;
    out.reserve(std::size_t{1} << m);
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<int> support;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::size_t{1} << i))
                support.insert(support.end(), nontrivial[i]->members.begin(), nontrivial[i]->members.end());
        std::sort(support.begin(), support.end());
        out.push_back(std::move(support));
    }
    return out;
}

/// One irreducible bicovariant calculus per conjugacy class: the bimodule
/// Γ_C with the trivial representation, generated by the 0-cochain Σ_g ω_g,
/// with fields χ_g = e − g. The class of the identity carries the zero
/// calculus.
struct ClassCalculus {
    ConjugacyClass cls;
    std::size_t bimodule_dim = 0;
    bool zero_calculus = false;
    std::vector<GroupAlgElement> chi; // per class member, χ_g = e − g
    std::vector<cplx> witness;        // generating invariant 0-cochain Σ ω_g
};

/// Classify the irreducible bicovariant calculi and cross-check the result
/// against the ad-invariant ideal enumeration: each nontrivial class C must
/// correspond to the maximal ideal supported off C, with
/// dim Γ_C = (n−1) − |S|, and the zero calculus to the full ideal Ker ε.
inline std::vector<ClassCalculus> classify_calculi(const GroupTable& g) {
    const std::vector<ConjugacyClass> classes = conjugacy_classes(g);
    std::vector<ClassCalculus> out;
    for (const auto& c : classes) {
        ClassCalculus cc;
        cc.cls = c;
        cc.bimodule_dim = c.size();
        cc.zero_calculus = c.size() == 1 && c.members[0] == GroupTable::e;
        for (int mem : c.members) {
            GroupAlgElement chi = alg_unit(g.n);
            chi.c[static_cast<std::size_t>(mem)] -= 1.0;
            cc.chi.push_back(std::move(chi));
        }
        cc.witness.assign(c.size(), cplx{1.0});
        out.push_back(std::move(cc));
    }

    // Prop 7 cross-check against the ideal lattice. Full enumeration when it
    // is small; the maximal-ideal bijection is always verified.
    const std::size_t nontrivial = classes.size() - 1;
    std::vector<std::vector<int>> ideals;
    if (nontrivial <= 12) {
        ideals = ad_invariant_ideals(g);
        if (ideals.size() != (std::size_t{1} << nontrivial))
            throw ValidationError("classify_calculi: ideal enumeration count mismatch");
        for (const auto& support : ideals) {
            std::vector<bool> in(g.n, false);
            for (int x : support) {
                if (x == GroupTable::e) throw ValidationError("classify_calculi: ideal support contains the identity");
                in[static_cast<std::size_t>(x)] = true;
            }
            for (int x : support)
                for (std::size_t y = 0; y < g.n; ++y)
                    if (!in[static_cast<std::size_t>(g.conj(static_cast<int>(y), x))])
                        throw ValidationError("classify_calculi: ideal support not conjugation closed");
        }
    }
    for (const auto& cc : out) {
        if (cc.zero_calculus) continue;
        // complementary maximal ideal: all nontrivial elements outside C
        std::vector<int> support;
        for (const auto& other : classes) {
            if (other.representative == cc.cls.representative) continue;
            if (other.size() == 1 && other.members[0] == GroupTable::e) continue;
            support.insert(support.end(), other.members.begin(), other.members.end());
        }
        std::sort(support.begin(), support.end());
        if (cc.bimodule_dim != (g.n - 1) - support.size())
            throw ValidationError("classify_calculi: dimension bijection with maximal ideals failed");
        if (!ideals.empty() && std::find(ideals.begin(), ideals.end(), support) == ideals.end())
            throw ValidationError("classify_calculi: maximal ideal missing from enumeration");
    }
    return out;
}

} // namespace bicov
