#pragma once

#include <cstddef>
#include <sstream>
#include <vector>

#include "bicov/errors.hpp"
#include "bicov/group.hpp"
#include "bicov/hopf.hpp"
#include "bicov/linalg.hpp"

namespace bicov {

// The Drinfeld double D(G) on the normal-ordered basis {φ_h·g}. As a vector
// space D(G) = F(G)⊗CG; the factors commute past each other through
// g·φ_h = φ_{g h g⁻¹}·g.

/// Element of D(G); coefficient of φ_h·g sits at index h*n + g.
struct DoubleElement {
    std::size_t n = 0;
    std::vector<cplx> c;
    DoubleElement() = default;
    explicit DoubleElement(std::size_t n_) : n(n_), c(n_ * n_) {}
    cplx& at(int h, int g) { return c[static_cast<std::size_t>(h) * n + static_cast<std::size_t>(g)]; }
    const cplx& at(int h, int g) const { return c[static_cast<std::size_t>(h) * n + static_cast<std::size_t>(g)]; }
};

inline DoubleElement double_basis(std::size_t n, int h, int g) {
    DoubleElement x(n);
    x.at(h, g) = 1.0;
    return x;
}

/// a ∈ F(G) ↪ D(G) as a·e.
inline DoubleElement embed_fun(const FunElement& a) {
    DoubleElement x(a.c.size());
    for (std::size_t h = 0; h < a.c.size(); ++h) x.at(static_cast<int>(h), GroupTable::e) = a.c[h];
    return x;
}

/// X ∈ CG ↪ D(G) as 1·X, with 1 = Σ_h φ_h.
inline DoubleElement embed_alg(const GroupAlgElement& X) {
    DoubleElement x(X.c.size());
    for (std::size_t h = 0; h < X.c.size(); ++h)
        for (std::size_t g = 0; g < X.c.size(); ++g) x.at(static_cast<int>(h), static_cast<int>(g)) = X.c[g];
    return x;
}

inline DoubleElement double_unit(std::size_t n) { return embed_alg(alg_unit(n)); }

/// Normal-ordered product: (φ_h·g)(φ_k·l) = δ_{h, g k g⁻¹} φ_h·(g l).
inline DoubleElement product_D(const GroupTable& G, const DoubleElement& x, const DoubleElement& y) {
    DoubleElement out(G.n);
    for (std::size_t h = 0; h < G.n; ++h)
        for (std::size_t g = 0; g < G.n; ++g) {
            const cplx xc = x.at(static_cast<int>(h), static_cast<int>(g));
            if (xc == cplx{}) continue;
            // need h = g k g⁻¹, i.e. k = g⁻¹ h g
            const int k = G.conj(G.inv(static_cast<int>(g)), static_cast<int>(h));
            for (std::size_t l = 0; l < G.n; ++l) {
                const cplx yc = y.at(k, static_cast<int>(l));
                if (yc == cplx{}) continue;
                out.at(static_cast<int>(h), G.op(static_cast<int>(g), static_cast<int>(l))) += xc * yc;
            }
        }
    return out;
}

inline cplx counit_D(const DoubleElement& x) {
    cplx s = 0.0;
    for (std::size_t g = 0; g < x.n; ++g) s += x.at(GroupTable::e, static_cast<int>(g));
    return s;
}

/// Antipode of the double: S̃ = S on F(G) and S⁻¹ on CG (equal to S for a
/// finite group), extended anti-multiplicatively:
/// S̃(φ_h·g) = φ_{g⁻¹ h⁻¹ g}·g⁻¹.
inline DoubleElement antipode_D(const GroupTable& G, const DoubleElement& x) {
    DoubleElement out(G.n);
    for (std::size_t h = 0; h < G.n; ++h)
        for (std::size_t g = 0; g < G.n; ++g) {
            const cplx v = x.at(static_cast<int>(h), static_cast<int>(g));
            if (v == cplx{}) continue;
            const int gi = G.inv(static_cast<int>(g));
            out.at(G.conj(gi, G.inv(static_cast<int>(h))), gi) += v;
        }
    return out;
}

/// The double representation attached to a conjugacy class C and an irrep μ
/// of G, on the carrier V_C ⊗ W^μ with basis labels [h,α], h ∈ C:
///   ρ(φ)   v_h⊗w_α = φ(h) v_h⊗w_α
///   ρ(g)   v_h⊗w_α = v_{g h g⁻¹} ⊗ ρ^μ(g) w_α
/// ρ is a left representation (algebra homomorphism), verified on build.
struct DoubleRep {
    GroupTable G;
    ConjugacyClass cls;
    Irrep mu;
    std::size_t dim = 0;                    // |C|·deg(μ)
    std::vector<std::pair<int, int>> labels; // (h, α) per carrier index
    std::vector<CMatrix> mats;               // ρ(φ_h·g) at index h*n+g
    std::vector<int> class_pos;              // position of h in cls.members, or -1

    const CMatrix& mat(int h, int g) const { return mats[static_cast<std::size_t>(h) * G.n + static_cast<std::size_t>(g)]; }

    /// ρ(φ_g) as a carrier matrix (diagonal 0/1 projector).
    const CMatrix& rho_fun(int g) const { return mat(g, GroupTable::e); }

    /// ρ(g) as a carrier matrix.
    CMatrix rho_alg(int g) const {
        CMatrix m(dim, dim);
        for (std::size_t h = 0; h < G.n; ++h) m += mat(static_cast<int>(h), g);
        return m;
    }

    CMatrix apply(const DoubleElement& x) const {
        CMatrix m(dim, dim);
        for (std::size_t h = 0; h < G.n; ++h)
            for (std::size_t g = 0; g < G.n; ++g) {
                const cplx v = x.at(static_cast<int>(h), static_cast<int>(g));
                if (v == cplx{}) continue;
                m += mat(static_cast<int>(h), static_cast<int>(g)) * v;
            }
        return m;
    }
};

/// Build ρ^μ_C and verify the homomorphism property ρ(xy) = ρ(x)ρ(y) on all
/// n² × n² basis pairs. The class member order given in `cls` is respected
/// (carrier labels follow it), so characters are basis-order independent.
inline DoubleRep rep_build(const GroupTable& G, const ConjugacyClass& cls, const Irrep& mu,
                           double tol = kDefaultTol) {
    DoubleRep rep;
    rep.G = G;
    rep.cls = cls;
    rep.mu = mu;
    const std::size_t nc = cls.members.size(), nm = mu.degree;
    rep.dim = nc * nm;
    rep.class_pos.assign(G.n, -1);
    for (std::size_t i = 0; i < nc; ++i) rep.class_pos[static_cast<std::size_t>(cls.members[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t a = 0; a < nm; ++a) rep.labels.emplace_back(cls.members[i], static_cast<int>(a));

    rep.mats.assign(G.n * G.n, CMatrix(rep.dim, rep.dim));
    for (std::size_t h = 0; h < G.n; ++h) {
        if (rep.class_pos[h] < 0) continue; // ρ(φ_h·g) = 0 unless h ∈ C
        for (std::size_t g = 0; g < G.n; ++g) {
            CMatrix& m = rep.mats[h * G.n + g];
            for (std::size_t kpos = 0; kpos < nc; ++kpos) {
                const int k = cls.members[kpos];
                const int kconj = G.conj(static_cast<int>(g), k);
                if (kconj != static_cast<int>(h)) continue;
                const std::size_t hpos = static_cast<std::size_t>(rep.class_pos[h]);
                const CMatrix& mg = mu.matrices[g];
                for (std::size_t b = 0; b < nm; ++b)
                    for (std::size_t a = 0; a < nm; ++a) m(hpos * nm + b, kpos * nm + a) = mg(b, a);
            }
        }
    }

    double worst = 0.0;
    for (std::size_t h = 0; h < G.n; ++h)
        for (std::size_t g = 0; g < G.n; ++g)
            for (std::size_t k = 0; k < G.n; ++k)
                for (std::size_t l = 0; l < G.n; ++l) {
                    CMatrix prod = matmul(rep.mat(static_cast<int>(h), static_cast<int>(g)),
                                          rep.mat(static_cast<int>(k), static_cast<int>(l)));
                    // (φ_h·g)(φ_k·l) = δ_{h, g k g⁻¹} φ_h·(g l)
                    if (G.conj(static_cast<int>(g), static_cast<int>(k)) == static_cast<int>(h))
                        prod -= rep.mat(static_cast<int>(h), G.op(static_cast<int>(g), static_cast<int>(l)));
                    worst = std::max(worst, prod.max_abs());
                }
    if (worst > tol) {
        std::ostringstream os;
        os << "double representation (class " << cls.representative << ", irrep '" << mu.label
           << "'): homomorphism residual " << worst;
        throw ValidationError(os.str());
    }
    return rep;
}

/// Trace vector χ(φ_h·g) = tr ρ(φ_h·g) over the n² basis elements.
inline std::vector<cplx> character_D(const DoubleRep& rep) {
    std::vector<cplx> chi(rep.G.n * rep.G.n);
    for (std::size_t h = 0; h < rep.G.n; ++h)
        for (std::size_t g = 0; g < rep.G.n; ++g) {
            const CMatrix& m = rep.mat(static_cast<int>(h), static_cast<int>(g));
            cplx tr = 0.0;
            for (std::size_t i = 0; i < rep.dim; ++i) tr += m(i, i);
            chi[h * rep.G.n + g] = tr;
        }
    return chi;
}

/// Equivalence criterion for double representations: the classes coincide and
/// the restrictions of μ, ν to the centralizer of the canonical class
/// representative (smallest member) have equal characters.
inline bool equivalent(const DoubleRep& r1, const DoubleRep& r2, double tol = kDefaultTol) {
    if (r1.G.n != r2.G.n) return false;
    std::vector<int> m1 = r1.cls.members, m2 = r2.cls.members;
    std::sort(m1.begin(), m1.end());
    std::sort(m2.begin(), m2.end());
    if (m1 != m2) return false;
    const int a = m1.front();
    for (int z : centralizer(r1.G, a)) {
        cplx t1 = 0.0, t2 = 0.0;
        for (std::size_t i = 0; i < r1.mu.degree; ++i) t1 += r1.mu.matrices[static_cast<std::size_t>(z)](i, i);
        for (std::size_t i = 0; i < r2.mu.degree; ++i) t2 += r2.mu.matrices[static_cast<std::size_t>(z)](i, i);
        if (std::abs(t1 - t2) > tol) return false;
    }
    return true;
}

/// Commutant dimension of the double representation, computed from the
/// generating set {ρ(φ_h) : h ∈ C} ∪ {ρ(g) : g ∈ G}.
inline std::size_t double_commutant_dimension(const DoubleRep& rep, double tol = kDefaultTol) {
    std::vector<CMatrix> gens;
    for (int h : rep.cls.members) gens.push_back(rep.rho_fun(h));
    for (std::size_t g = 0; g < rep.G.n; ++g) gens.push_back(rep.rho_alg(static_cast<int>(g)));
    return commutant_dimension(gens, tol);
}

} // namespace bicov
