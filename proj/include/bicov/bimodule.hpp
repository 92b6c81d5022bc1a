#pragma once

#include <cstddef>
#include <sstream>
#include <vector>

#include "bicov/drinfeld.hpp"
#include "bicov/errors.hpp"
#include "bicov/group.hpp"
#include "bicov/hopf.hpp"
#include "bicov/linalg.hpp"

namespace bicov {

// Bicovariant bimodule Γ = F(G) ⊗ V attached to a double representation ρ.
// Γ is a free left module over the left-invariant basis {ω_i}, i = [h,α].
//
// Conventions, fixed so that every formula below is consistent with the
// closed forms F^{[ℓβ]}_{[hα]} = h δ_{h,ℓ} δ_{α,β} and
// R^{[ℓβ]}_{[hα]} = Σ_g φ_g δ_{ℓ,g h g⁻¹} [ρ^μ(g)]^β_α:
//   τ_F(a) = ρ(a)ᵗ        (diagonal projectors on the delta basis)
//   τ_U(X) = ρ(S̃(X))      (right representation; NOT the transpose)
//   τ_D(φ_h·g) = τ_U(g) τ_F(φ_h),   ρ_D = τ_Dᵗ  (left representation)
// The two-index elements are stored as falg(i,j) = F^{[i]}_{[j]} ∈ CG and
// rfun(i,j) = R^{[i]}_{[j]} ∈ F; then [τ_D(a)]_{ji} = ⟨falg(i,j), a⟩ and
// [τ_D(S̃(X))]_{ij} = ⟨X, rfun(i,j)⟩ hold verbatim, the right multiplication
// is ω_i.a = Σ_j (falg(j,i)∗a).ω_j and the right translation is
// Γδ(ω_i) = Σ_j ω_j ⊗ rfun(j,i).
struct BicovBimodule {
    DoubleRep rep;
    std::size_t dim = 0; // carrier dimension n_C·n_μ

    std::vector<CMatrix> tau_fun; // τ_F(φ_g) per group element
    std::vector<CMatrix> tau_alg; // τ_U(g) per group element

    std::vector<GroupAlgElement> falg_; // d×d, row-major
    std::vector<FunElement> rfun_;      // d×d, row-major

    const GroupTable& group() const { return rep.G; }
    std::size_t order() const { return rep.G.n; }

    const GroupAlgElement& falg(std::size_t i, std::size_t j) const { return falg_[i * dim + j]; }
    const FunElement& rfun(std::size_t i, std::size_t j) const { return rfun_[i * dim + j]; }

    CMatrix tauF(const FunElement& a) const {
        CMatrix m(dim, dim);
        for (std::size_t g = 0; g < order(); ++g)
            if (a.c[g] != cplx{}) m += tau_fun[g] * a.c[g];
        return m;
    }
    CMatrix tauU(const GroupAlgElement& x) const {
        CMatrix m(dim, dim);
        for (std::size_t g = 0; g < order(); ++g)
            if (x.c[g] != cplx{}) m += tau_alg[g] * x.c[g];
        return m;
    }
    CMatrix tauD(const DoubleElement& x) const {
        CMatrix m(dim, dim);
        for (std::size_t h = 0; h < order(); ++h)
            for (std::size_t g = 0; g < order(); ++g) {
                const cplx v = x.at(static_cast<int>(h), static_cast<int>(g));
                if (v == cplx{}) continue;
                m += matmul(tau_alg[g], tau_fun[h]) * v;
            }
        return m;
    }
    /// τ_D on a group-like generator g (τ_D(1·g) = τ_U(g)).
    const CMatrix& tauD_grouplike(int g) const { return tau_alg[static_cast<std::size_t>(g)]; }

    CMatrix rhoD(const DoubleElement& x) const { return tauD(x).transpose(); }
};

/// Element of Γ in free-module coordinates: x = Σ_i coord[i] ⊗ ω_i.
struct GammaElement {
    std::size_t n = 0, dim = 0;
    std::vector<FunElement> coord;
    GammaElement() = default;
    GammaElement(std::size_t n_, std::size_t d_) : n(n_), dim(d_), coord(d_, FunElement(n_)) {}
};

inline GammaElement omega(const BicovBimodule& bm, std::size_t i) {
    GammaElement x(bm.order(), bm.dim);
    x.coord[i] = fun_one(bm.order());
    return x;
}

/// φ_u.ω_i as a free-module element.
inline GammaElement gamma_basis(const BicovBimodule& bm, int u, std::size_t i) {
    GammaElement x(bm.order(), bm.dim);
    x.coord[i] = fun_basis(bm.order(), u);
    return x;
}

inline double max_abs(const GammaElement& x) {
    double m = 0.0;
    for (const FunElement& f : x.coord) m = std::max(m, max_abs(f));
    return m;
}

inline GammaElement operator+(const GammaElement& a, const GammaElement& b) {
    GammaElement out = a;
    for (std::size_t i = 0; i < out.coord.size(); ++i)
        for (std::size_t g = 0; g < out.n; ++g) out.coord[i].c[g] += b.coord[i].c[g];
    return out;
}

inline GammaElement operator-(const GammaElement& a, const GammaElement& b) {
    GammaElement out = a;
    for (std::size_t i = 0; i < out.coord.size(); ++i)
        for (std::size_t g = 0; g < out.n; ++g) out.coord[i].c[g] -= b.coord[i].c[g];
    return out;
}

inline GammaElement operator*(const cplx& s, GammaElement x) {
    for (FunElement& f : x.coord) for (cplx& z : f.c) z *= s;
    return x;
}

/// Left multiplication a.(Σ c_i⊗ω_i) = Σ (a c_i)⊗ω_i.
inline GammaElement left_mult(const BicovBimodule& bm, const FunElement& a, const GammaElement& x) {
    GammaElement out = x;
    for (std::size_t i = 0; i < bm.dim; ++i) out.coord[i] = product_F(bm.group(), a, x.coord[i]);
    return out;
}

/// Right multiplication via ω_i.a = Σ_j (f_ij∗a).ω_j.
inline GammaElement right_mult(const BicovBimodule& bm, const GammaElement& x, const FunElement& a) {
    GammaElement out(bm.order(), bm.dim);
    for (std::size_t i = 0; i < bm.dim; ++i) {
        bool zero = true;
        for (const cplx& z : x.coord[i].c)
            if (z != cplx{}) { zero = false; break; }
        if (zero) continue;
        for (std::size_t j = 0; j < bm.dim; ++j) {
            const FunElement conv = conv_left(bm.group(), bm.falg(j, i), a);
            const FunElement term = product_F(bm.group(), x.coord[i], conv);
            for (std::size_t g = 0; g < bm.order(); ++g) out.coord[j].c[g] += term.c[g];
        }
    }
    return out;
}

/// Right multiplication of a basis form: ω_i.a in free coordinates.
inline GammaElement right_mult(const BicovBimodule& bm, std::size_t i, const FunElement& a) {
    return right_mult(bm, omega(bm, i), a);
}

/// Right coaction on a basis form: Γδ(ω_i) = Σ_j ω_j ⊗ R_ji; entry j is R_ji.
inline std::vector<FunElement> right_coaction(const BicovBimodule& bm, std::size_t i) {
    std::vector<FunElement> out;
    out.reserve(bm.dim);
    for (std::size_t j = 0; j < bm.dim; ++j) out.push_back(bm.rfun(j, i));
    return out;
}

/// Right coaction of a general element, as the F⊗V⊗F tensor
/// Γδ(Σ c_i⊗ω_i) = Σ Δ(c_i)·(ω_j ⊗ R_ji); index ((u·d + j)·n + w).
inline std::vector<cplx> right_coaction_tensor(const BicovBimodule& bm, const GammaElement& x) {
    const std::size_t n = bm.order(), d = bm.dim;
    std::vector<cplx> t(n * d * n);
    for (std::size_t i = 0; i < d; ++i) {
        bool zero = true;
        for (const cplx& z : x.coord[i].c)
            if (z != cplx{}) { zero = false; break; }
        if (zero) continue;
        const TensorElement dc = delta_F(bm.group(), x.coord[i]);
        for (std::size_t j = 0; j < d; ++j) {
            const FunElement& r = bm.rfun(j, i);
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t w = 0; w < n; ++w) {
                    const cplx v = dc.at(static_cast<int>(u), static_cast<int>(w));
                    if (v == cplx{}) continue;
                    t[(u * d + j) * n + w] += v * r.c[w];
                }
        }
    }
    return t;
}

/// Left coaction as the F⊗F⊗V tensor δΓ(Σ c_i⊗ω_i) = Σ Δ(c_i)⊗ω_i;
/// index ((v·n + w)·d + i).
inline std::vector<cplx> left_coaction_tensor(const BicovBimodule& bm, const GammaElement& x) {
    const std::size_t n = bm.order(), d = bm.dim;
    std::vector<cplx> t(n * n * d);
    for (std::size_t i = 0; i < d; ++i) {
        const TensorElement dc = delta_F(bm.group(), x.coord[i]);
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t w = 0; w < n; ++w) t[(v * n + w) * d + i] += dc.at(static_cast<int>(v), static_cast<int>(w));
    }
    return t;
}

/// Assemble Γ from a double representation, with the τ matrices and the
/// representative elements in the fixed conventions. Verifies that the Λ
/// pairing formula and its closed form agree (this pins the orientation).
inline BicovBimodule build_bimodule(const DoubleRep& rep, double tol = kDefaultTol);

/// Λ^{ij}_{kl} = ⟨f_{jl}, R_{ki}⟩ on the d²×d² grid, rows (i,j), cols (k,l).
inline CMatrix lambda_matrix(const BicovBimodule& bm) {
    const std::size_t d = bm.dim;
    CMatrix lam(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l)
                    lam(i * d + j, k * d + l) = pairing(bm.falg(j, l), bm.rfun(k, i));
    return lam;
}

/// The finite-group closed form
/// Λ^{[nη][ℓβ]}_{[mγ][kα]} = δ_{ℓ,k} δ_{α,β} δ_{m,k n k⁻¹} [ρ^μ(k)]^γ_η.
inline CMatrix lambda_closed_form(const BicovBimodule& bm) {
    const std::size_t d = bm.dim;
    const GroupTable& G = bm.group();
    CMatrix lam(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i) {
        const auto [nn, eta] = bm.rep.labels[i];
        for (std::size_t j = 0; j < d; ++j) {
            const auto [ll, beta] = bm.rep.labels[j];
            for (std::size_t k = 0; k < d; ++k) {
                const auto [mm, gamma] = bm.rep.labels[k];
                for (std::size_t l = 0; l < d; ++l) {
                    const auto [kk, alpha] = bm.rep.labels[l];
                    if (ll != kk || alpha != beta || mm != G.conj(kk, nn)) continue;
                    lam(i * d + j, k * d + l) = bm.rep.mu.matrices[static_cast<std::size_t>(kk)](
                        static_cast<std::size_t>(gamma), static_cast<std::size_t>(eta));
                }
            }
        }
    }
    return lam;
}

inline BicovBimodule build_bimodule(const DoubleRep& rep, double tol) {
    BicovBimodule bm;
    bm.rep = rep;
    bm.dim = rep.dim;
    const GroupTable& G = bm.rep.G;
    const std::size_t n = G.n, d = bm.dim;

    bm.tau_fun.reserve(n);
    bm.tau_alg.reserve(n);
    for (std::size_t g = 0; g < n; ++g) {
        bm.tau_fun.push_back(bm.rep.rho_fun(static_cast<int>(g)).transpose());
        bm.tau_alg.push_back(bm.rep.rho_alg(G.inv(static_cast<int>(g))));
    }

    bm.falg_.assign(d * d, GroupAlgElement(n));
    bm.rfun_.assign(d * d, FunElement(n));
    for (std::size_t i = 0; i < d; ++i) {
        const auto [li, bi] = bm.rep.labels[i];
        for (std::size_t j = 0; j < d; ++j) {
            const auto [hj, aj] = bm.rep.labels[j];
            // F^{[i]}_{[j]} = h_j δ_{labels equal}
            if (li == hj && bi == aj) bm.falg_[i * d + j] = alg_basis(n, hj);
            // R^{[i]}_{[j]} = Σ_g φ_g δ_{l_i, g h_j g⁻¹} [ρ^μ(g)]^{β_i}_{α_j}
            FunElement& r = bm.rfun_[i * d + j];
            for (std::size_t g = 0; g < n; ++g)
                if (G.conj(static_cast<int>(g), hj) == li)
                    r.c[g] = bm.rep.mu.matrices[g](static_cast<std::size_t>(bi), static_cast<std::size_t>(aj));
        }
    }

    const double dev = (lambda_matrix(bm) - lambda_closed_form(bm)).max_abs();
    if (dev > tol) {
        std::ostringstream os;
        os << "bimodule build: Lambda pairing formula deviates from closed form by " << dev;
        throw ValidationError(os.str());
    }
    return bm;
}

namespace detail {

struct SparseTriplet {
    std::size_t r, c;
    cplx v;
};

inline std::vector<SparseTriplet> sparsify(const CMatrix& m) {
    std::vector<SparseTriplet> t;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != cplx{}) t.push_back({i, j, m(i, j)});
    return t;
}

/// Apply M (d²×d², given as triplets) to legs (p,q) of a vector on (C^d)^⊗3.
inline void apply_legs(const std::vector<SparseTriplet>& m, std::size_t d, int p, int q,
                       const std::vector<cplx>& in, std::vector<cplx>& out) {
    std::fill(out.begin(), out.end(), cplx{});
    auto split = [d](std::size_t pair) { return std::pair<std::size_t, std::size_t>{pair / d, pair % d}; };
    for (const SparseTriplet& t : m) {
        const auto [r1, r2] = split(t.r);
        const auto [c1, c2] = split(t.c);
        if (p == 1 && q == 2) {
            const std::size_t rbase = (r1 * d + r2) * d, cbase = (c1 * d + c2) * d;
            for (std::size_t z = 0; z < d; ++z) out[rbase + z] += t.v * in[cbase + z];
        } else if (p == 2 && q == 3) {
            for (std::size_t x = 0; x < d; ++x) out[(x * d + r1) * d + r2] += t.v * in[(x * d + c1) * d + c2];
        } else { // legs 1,3
            for (std::size_t y = 0; y < d; ++y) out[(r1 * d + y) * d + r2] += t.v * in[(c1 * d + y) * d + c2];
        }
    }
}

} // namespace detail

/// Max-norm residual of the quantum Yang–Baxter equation
/// Λ₁₂Λ₁₃Λ₂₃ = Λ₂₃Λ₁₃Λ₁₂ on (C^d)^⊗3, where Λ is d²×d².
inline double verify_qybe(const CMatrix& lam) {
    if (lam.rows() != lam.cols()) throw std::invalid_argument("verify_qybe: matrix must be square");
    std::size_t d = 0;
    while (d * d < lam.rows()) ++d;
    if (d * d != lam.rows()) throw std::invalid_argument("verify_qybe: side is not a perfect square");
    const auto trip = detail::sparsify(lam);
    const std::size_t n3 = d * d * d;
    std::vector<cplx> v(n3), w(n3), lhs(n3), rhs(n3);
    double worst = 0.0;
    for (std::size_t col = 0; col < n3; ++col) {
        std::fill(v.begin(), v.end(), cplx{});
        v[col] = 1.0;
        detail::apply_legs(trip, d, 2, 3, v, w);      // Λ₂₃
        detail::apply_legs(trip, d, 1, 3, w, lhs);    // Λ₁₃
        detail::apply_legs(trip, d, 1, 2, lhs, w);    // Λ₁₂
        lhs = w;
        detail::apply_legs(trip, d, 1, 2, v, w);      // Λ₁₂
        detail::apply_legs(trip, d, 1, 3, w, rhs);    // Λ₁₃
        detail::apply_legs(trip, d, 2, 3, rhs, w);    // Λ₂₃
        rhs = w;
        for (std::size_t k = 0; k < n3; ++k) worst = std::max(worst, std::abs(lhs[k] - rhs[k]));
    }
    return worst;
}

/// Cross-check Λ against the universal R-matrix of the double:
/// σ∘ℛ⁻¹ = Σ_g S̃(g)⊗φ_g, Λ = (ρ_D⊗ρ_D)(σ∘ℛ⁻¹) under the kron convention.
inline double universal_r_check(const BicovBimodule& bm) {
    const GroupTable& G = bm.group();
    CMatrix lam_r(bm.dim * bm.dim, bm.dim * bm.dim);
    for (std::size_t g = 0; g < G.n; ++g) {
        const CMatrix a = bm.rhoD(embed_alg(alg_basis(G.n, G.inv(static_cast<int>(g)))));
        const CMatrix b = bm.rhoD(embed_fun(fun_basis(G.n, static_cast<int>(g))));
        lam_r += kron(a, b);
    }
    return (lam_r - lambda_matrix(bm)).max_abs();
}

/// Residual of the commutation rule Σ_i (f_li∗a) R_si = Σ_i R_il (a∗f_is)
/// over all basis pairs (l,s) and all a = φ_g.
inline double verify_commutation(const BicovBimodule& bm) {
    const GroupTable& G = bm.group();
    const std::size_t n = G.n, d = bm.dim;
    double worst = 0.0;
    for (std::size_t g = 0; g < n; ++g) {
        const FunElement a = fun_basis(n, static_cast<int>(g));
        for (std::size_t l = 0; l < d; ++l)
            for (std::size_t s = 0; s < d; ++s) {
                FunElement lhs(n), rhs(n);
                for (std::size_t i = 0; i < d; ++i) {
                    const FunElement t1 = product_F(G, conv_left(G, bm.falg(l, i), a), bm.rfun(s, i));
                    const FunElement t2 = product_F(G, bm.rfun(i, l), conv_right(G, a, bm.falg(i, s)));
                    for (std::size_t x = 0; x < n; ++x) {
                        lhs.c[x] += t1.c[x];
                        rhs.c[x] += t2.c[x];
                    }
                }
                for (std::size_t x = 0; x < n; ++x) worst = std::max(worst, std::abs(lhs.c[x] - rhs.c[x]));
            }
    }
    return worst;
}

} // namespace bicov
