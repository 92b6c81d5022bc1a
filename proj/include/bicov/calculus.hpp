#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <vector>

#include "bicov/bimodule.hpp"
#include "bicov/cohomology.hpp"
#include "bicov/errors.hpp"
#include "bicov/group.hpp"
#include "bicov/hopf.hpp"
#include "bicov/linalg.hpp"

namespace bicov {

// ---------------------------------------------------------------------------
// Universal calculus on F ⊗ Ker ε
// ---------------------------------------------------------------------------

/// D′a = Δa − a⊗1; the second leg lands in Ker ε.
inline TensorElement universal_D(const GroupTable& G, const FunElement& a) {
    TensorElement t = delta_F(G, a);
    for (std::size_t u = 0; u < G.n; ++u)
        for (std::size_t v = 0; v < G.n; ++v) t.at(static_cast<int>(u), static_cast<int>(v)) -= a.c[u];
    return t;
}

/// Da = 1⊗a − a⊗1 in F⊗F (the Ker m presentation of the universal calculus).
inline TensorElement universal_D_kerm(const GroupTable& G, const FunElement& a) {
    TensorElement t(TensorBasis::FunFun, G.n);
    for (std::size_t u = 0; u < G.n; ++u)
        for (std::size_t v = 0; v < G.n; ++v) t.at(static_cast<int>(u), static_cast<int>(v)) = a.c[v] - a.c[u];
    return t;
}

/// r(a⊗b) = (a⊗1)Δb; on basis tensors φ_a⊗φ_b ↦ φ_a⊗φ_{a⁻¹b}.
inline TensorElement r_iso(const GroupTable& G, const TensorElement& t) {
    if (t.basis != TensorBasis::FunFun) throw std::invalid_argument("r_iso: F⊗F tensor expected");
    TensorElement out(TensorBasis::FunFun, G.n);
    for (std::size_t u = 0; u < G.n; ++u)
        for (std::size_t w = 0; w < G.n; ++w)
            out.at(static_cast<int>(u), static_cast<int>(w)) = t.at(static_cast<int>(u), G.op(static_cast<int>(u), static_cast<int>(w)));
    return out;
}

/// r⁻¹(a⊗b) = (a⊗1)(S⊗1)Δb; on basis tensors φ_a⊗φ_b ↦ φ_a⊗φ_{ab}.
inline TensorElement r_inv(const GroupTable& G, const TensorElement& t) {
    if (t.basis != TensorBasis::FunFun) throw std::invalid_argument("r_inv: F⊗F tensor expected");
    TensorElement out(TensorBasis::FunFun, G.n);
    for (std::size_t u = 0; u < G.n; ++u)
        for (std::size_t w = 0; w < G.n; ++w)
            out.at(static_cast<int>(u), static_cast<int>(w)) = t.at(static_cast<int>(u), G.op(G.inv(static_cast<int>(u)), static_cast<int>(w)));
    return out;
}

/// a.(Σ x⊗y) = Σ ax⊗y, shared by both universal-calculus bimodule structures.
inline TensorElement tensor_left_mult(const GroupTable& G, const FunElement& a, const TensorElement& t) {
    TensorElement out = t;
    for (std::size_t u = 0; u < G.n; ++u)
        for (std::size_t v = 0; v < G.n; ++v) out.at(static_cast<int>(u), static_cast<int>(v)) *= a.c[u];
    return out;
}

/// (Σ x⊗y).a = Σ x⊗ya — the Ker m bimodule structure.
inline TensorElement tensor_right_mult_kerm(const GroupTable& G, const TensorElement& t, const FunElement& a) {
    TensorElement out = t;
    for (std::size_t u = 0; u < G.n; ++u)
        for (std::size_t v = 0; v < G.n; ++v) out.at(static_cast<int>(u), static_cast<int>(v)) *= a.c[v];
    return out;
}

/// (Σ b⊗c).a = (Σ b⊗c)Δa — the F⊗Ker ε bimodule structure.
inline TensorElement tensor_right_mult_delta(const GroupTable& G, const TensorElement& t, const FunElement& a) {
    TensorElement out = t;
    for (std::size_t u = 0; u < G.n; ++u)
        for (std::size_t v = 0; v < G.n; ++v)
            out.at(static_cast<int>(u), static_cast<int>(v)) *= a.c[static_cast<std::size_t>(G.op(static_cast<int>(u), static_cast<int>(v)))];
    return out;
}

// ---------------------------------------------------------------------------
// First-order differential calculi on bicovariant bimodules
// ---------------------------------------------------------------------------

/// A calculus is stored by its action on the delta basis: row u of `dmat`
/// holds the free-module coordinates of dφ_u, flattened as (v·dim + i) for
/// the coefficient of φ_v⊗ω_i. Equality of calculi over the same bimodule is
/// a matrix comparison.
struct FirstOrderCalculus {
    std::shared_ptr<const BicovBimodule> gamma;
    CMatrix dmat; // n × (n·dim)
    std::optional<Cochain> psi;
    bool bicovariant = false;
    bool coboundary = false;
    std::vector<cplx> witness; // generating invariant 0-cochain when coboundary

    std::size_t order() const { return gamma->order(); }
    std::size_t dim() const { return gamma->dim; }

    GammaElement d(const FunElement& a) const {
        GammaElement out(order(), dim());
        for (std::size_t u = 0; u < order(); ++u) {
            if (a.c[u] == cplx{}) continue;
            for (std::size_t v = 0; v < order(); ++v)
                for (std::size_t i = 0; i < dim(); ++i) out.coord[i].c[v] += a.c[u] * dmat(u, v * dim() + i);
        }
        return out;
    }
};

/// Max residual of d(ab) = a.(db) + (da).b over all delta-basis pairs.
inline double leibniz_residual(const FirstOrderCalculus& calc) {
    const BicovBimodule& bm = *calc.gamma;
    const GroupTable& G = bm.group();
    double worst = 0.0;
    std::vector<GammaElement> dbasis;
    dbasis.reserve(G.n);
    for (std::size_t u = 0; u < G.n; ++u) dbasis.push_back(calc.d(fun_basis(G.n, static_cast<int>(u))));
    for (std::size_t u = 0; u < G.n; ++u) {
        const FunElement fu = fun_basis(G.n, static_cast<int>(u));
        for (std::size_t v = 0; v < G.n; ++v) {
            const FunElement fv = fun_basis(G.n, static_cast<int>(v));
            GammaElement rhs = left_mult(bm, fu, dbasis[v]) + right_mult(bm, dbasis[u], fv);
            if (u == v) rhs = rhs - dbasis[u];
            worst = std::max(worst, max_abs(rhs));
        }
    }
    return worst;
}

inline double d_unit_residual(const FirstOrderCalculus& calc) {
    return max_abs(calc.d(fun_one(calc.order())));
}

/// Max residual of the bicovariance identities δΓ∘d = (1⊗d)Δ and
/// Γδ∘d = (d⊗1)Δ over all delta-basis elements.
inline double bicovariance_residual(const FirstOrderCalculus& calc) {
    const BicovBimodule& bm = *calc.gamma;
    const GroupTable& G = bm.group();
    const std::size_t n = G.n, d = bm.dim;
    double worst = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
        const GammaElement du = calc.d(fun_basis(n, static_cast<int>(u)));
        // left: δΓ(dφ_u) vs Σ_{vw=u} φ_v ⊗ dφ_w, indices ((v·n+x)·d+i)
        {
            const std::vector<cplx> lhs = left_coaction_tensor(bm, du);
            std::vector<cplx> rhs(n * n * d);
            for (std::size_t v = 0; v < n; ++v)
                for (std::size_t w = 0; w < n; ++w) {
                    if (G.op(static_cast<int>(v), static_cast<int>(w)) != static_cast<int>(u)) continue;
                    for (std::size_t x = 0; x < n; ++x)
                        for (std::size_t i = 0; i < d; ++i) rhs[(v * n + x) * d + i] += calc.dmat(w, x * d + i);
                }
            for (std::size_t k = 0; k < lhs.size(); ++k) worst = std::max(worst, std::abs(lhs[k] - rhs[k]));
        }
        // right: Γδ(dφ_u) vs Σ_{vw=u} dφ_v ⊗ φ_w, indices ((x·d+i)·n+w)
        {
            const std::vector<cplx> lhs = right_coaction_tensor(bm, du);
            std::vector<cplx> rhs(n * d * n);
            for (std::size_t v = 0; v < n; ++v)
                for (std::size_t w = 0; w < n; ++w) {
                    if (G.op(static_cast<int>(v), static_cast<int>(w)) != static_cast<int>(u)) continue;
                    for (std::size_t x = 0; x < n; ++x)
                        for (std::size_t i = 0; i < d; ++i) rhs[(x * d + i) * n + w] += calc.dmat(v, x * d + i);
                }
            for (std::size_t k = 0; k < lhs.size(); ++k) worst = std::max(worst, std::abs(lhs[k] - rhs[k]));
        }
    }
    return worst;
}

/// Rank of span{φ_u.dφ_v} inside the free module C^{n·dim}; the calculus is
/// surjective onto Γ iff this equals n·dim.
inline std::size_t generated_rank(const FirstOrderCalculus& calc, double tol = kDefaultTol) {
    const std::size_t n = calc.order(), d = calc.dim();
    CMatrix span(n * n, n * d);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t i = 0; i < d; ++i) span(u * n + v, u * d + i) = calc.dmat(v, u * d + i);
    return rank(span, tol);
}

/// da = Σ a_(1).ψ(a_(2)) for an invariant 1-cocycle ψ:
/// (dφ_u)_{v,i} = ψ(φ_{v⁻¹u})_i. Leibniz is verified; a failure beyond the
/// tolerance signals a non-cocycle input.
inline FirstOrderCalculus from_cocycle(std::shared_ptr<const BicovBimodule> gamma, const Cochain& psi,
                                       double tol = kDefaultTol) {
    if (psi.degree != 1) throw std::invalid_argument("from_cocycle: degree-1 cochain expected");
    const GroupTable& G = gamma->group();
    const std::size_t n = G.n, d = gamma->dim;
    FirstOrderCalculus calc;
    calc.gamma = std::move(gamma);
    calc.dmat = CMatrix(n, n * d);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            const std::size_t w = static_cast<std::size_t>(G.op(G.inv(static_cast<int>(v)), static_cast<int>(u)));
            for (std::size_t i = 0; i < d; ++i) calc.dmat(u, v * d + i) = psi.at(w, i);
        }
    calc.psi = psi;
    const double res = leibniz_residual(calc);
    if (res > tol) {
        std::ostringstream os;
        os << "from_cocycle: Leibniz residual " << res << " — input is not a 1-cocycle";
        throw ValidationError(os.str());
    }
    calc.bicovariant = bicovariance_residual(calc) <= tol;
    return calc;
}

/// Internal-derivation calculus da = a.γ − γ.a for an invariant 0-cochain γ.
/// Checks invariance τ_D(g)γ = γ, the right-invariance Γδ(γ) = γ⊗1, and
/// agreement with the δγ cocycle route.
inline FirstOrderCalculus coboundary_calculus(std::shared_ptr<const BicovBimodule> gamma,
                                              const std::vector<cplx>& gam, double tol = kDefaultTol) {
    const BicovBimodule& bm = *gamma;
    const GroupTable& G = bm.group();
    const std::size_t n = G.n, d = bm.dim;
    if (gam.size() != d) throw std::invalid_argument("coboundary_calculus: 0-cochain has wrong dimension");
    for (std::size_t g = 0; g < n; ++g) {
        const CMatrix& td = bm.tauD_grouplike(static_cast<int>(g));
        for (std::size_t b = 0; b < d; ++b) {
            cplx acc = -gam[b];
            for (std::size_t a = 0; a < d; ++a) acc += td(b, a) * gam[a];
            if (std::abs(acc) > tol) throw ValidationError("coboundary_calculus: 0-cochain is not invariant");
        }
    }
    GammaElement gamma_elem(n, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t u = 0; u < n; ++u) gamma_elem.coord[i].c[u] = gam[i];
    {
        // Γδ(γ) = γ⊗1
        const std::vector<cplx> t = right_coaction_tensor(bm, gamma_elem);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t w = 0; w < n; ++w)
                    if (std::abs(t[(u * d + j) * n + w] - gam[j]) > tol)
                        throw ValidationError("coboundary_calculus: right translation of the 0-cochain is not trivial");
    }
    FirstOrderCalculus calc;
    calc.gamma = gamma;
    calc.dmat = CMatrix(n, n * d);
    for (std::size_t u = 0; u < n; ++u) {
        const FunElement fu = fun_basis(n, static_cast<int>(u));
        GammaElement row = left_mult(bm, fu, gamma_elem) - right_mult(bm, gamma_elem, fu);
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t i = 0; i < d; ++i) calc.dmat(u, v * d + i) = row.coord[i].c[v];
    }
    // cross-check against the cocycle route with ψ = δγ
    Cochain gam0(0, n, d);
    for (std::size_t i = 0; i < d; ++i) gam0.at(0, i) = gam[i];
    const Cochain dgamma = coboundary(bm, gam0);
    const FirstOrderCalculus via_cocycle = from_cocycle(gamma, dgamma, tol);
    const double dev = (calc.dmat - via_cocycle.dmat).max_abs();
    if (dev > tol) {
        std::ostringstream os;
        os << "coboundary_calculus: internal derivation deviates from the δγ cocycle route by " << dev;
        throw ValidationError(os.str());
    }
    calc.psi = dgamma;
    calc.coboundary = true;
    calc.witness.assign(gam.begin(), gam.end());
    calc.bicovariant = bicovariance_residual(calc) <= tol;
    return calc;
}

inline Irrep trivial_irrep(std::size_t n) {
    Irrep r;
    r.degree = 1;
    r.label = "trivial";
    r.matrices.assign(n, CMatrix::identity(1));
    return r;
}

/// The class calculus d_C φ = Σ_{g∈C} (χ_g∗φ).ω_g with χ_g = e−g, on the
/// bimodule of C and the trivial representation; coboundary with witness
/// Σ_g ω_g. All calculus axioms are verified before returning.
inline FirstOrderCalculus d_C(const GroupTable& G, const ConjugacyClass& cls, double tol = kDefaultTol) {
    const DoubleRep rep = rep_build(G, cls, trivial_irrep(G.n), tol);
    auto gamma = std::make_shared<const BicovBimodule>(build_bimodule(rep, tol));
    const std::size_t n = G.n, d = gamma->dim;

    FirstOrderCalculus calc;
    calc.gamma = gamma;
    calc.dmat = CMatrix(n, n * d);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t i = 0; i < d; ++i) {
            const int g = cls.members[i];
            // χ_g∗φ_u = φ_u − φ_{u g⁻¹}
            calc.dmat(u, u * d + i) += 1.0;
            calc.dmat(u, static_cast<std::size_t>(G.op(static_cast<int>(u), G.inv(g))) * d + i) -= 1.0;
        }
    calc.coboundary = true;
    calc.witness.assign(d, cplx{1.0});
    {
        Cochain gam0(0, n, d);
        for (std::size_t i = 0; i < d; ++i) gam0.at(0, i) = 1.0;
        calc.psi = coboundary(*gamma, gam0);
    }
    const double lres = leibniz_residual(calc);
    const double ures = d_unit_residual(calc);
    const double bres = bicovariance_residual(calc);
    if (lres > tol || ures > tol || bres > tol) {
        std::ostringstream os;
        os << "d_C: axiom residuals (leibniz " << lres << ", unit " << ures << ", bicovariance " << bres << ")";
        throw ValidationError(os.str());
    }
    calc.bicovariant = true;
    const bool is_zero = cls.size() == 1 && cls.members[0] == GroupTable::e;
    if (!is_zero && generated_rank(calc, tol) != n * d)
        throw ValidationError("d_C: image does not generate the bimodule");
    return calc;
}

/// Matrix of the quotient map F⊗Kerε → Γ on the basis φ_u⊗φ_v (v ≠ e),
/// using φ_u⊗φ_v = φ_u.D′φ_{uv} and π(a.D′b) = a.db. Columns are indexed by
/// u·(n−1) + (v−1); rows by the free-module coordinate (x·dim + i).
inline CMatrix universal_quotient_matrix(const FirstOrderCalculus& calc) {
    const BicovBimodule& bm = *calc.gamma;
    const GroupTable& G = bm.group();
    const std::size_t n = G.n, d = bm.dim;
    CMatrix m(n * d, n * (n - 1));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 1; v < n; ++v) {
            const GammaElement img = left_mult(
                bm, fun_basis(n, static_cast<int>(u)),
                calc.d(fun_basis(n, G.op(static_cast<int>(u), static_cast<int>(v)))));
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t i = 0; i < d; ++i) m(x * d + i, u * (n - 1) + (v - 1)) = img.coord[i].c[x];
        }
    return m;
}

// ---------------------------------------------------------------------------
// Quantum Lie algebra data
// ---------------------------------------------------------------------------

/// Fields χ_i with ⟨χ_i, a⟩ = [ψ(a)]_i and the structure elements f_ij, R_ij
/// of the bimodule; the residuals witness the quantum Lie algebra relations.
struct QuantumLie {
    std::vector<GroupAlgElement> chi;
    double coproduct_residual = 0.0;   // Δχ_i = 1⊗χ_i + Σ_j χ_j⊗f_ji
    double counit_residual = 0.0;      // ε(χ_i) = 0
    double adjoint_residual = 0.0;     // S(Y_(1)) χ_i Y_(2) = ⟨Y,R_ik⟩ χ_k
    double differential_residual = 0.0; // da = Σ (χ_i∗a).ω_i vs Σ a_(1).ψ(a_(2))
};

inline QuantumLie verify_quantum_lie(const BicovBimodule& bm, const Cochain& psi) {
    if (psi.degree != 1) throw std::invalid_argument("verify_quantum_lie: degree-1 cochain expected");
    const GroupTable& G = bm.group();
    const std::size_t n = G.n, d = bm.dim;
    QuantumLie out;
    for (std::size_t i = 0; i < d; ++i) {
        GroupAlgElement chi(n);
        for (std::size_t g = 0; g < n; ++g) chi.c[g] = psi.at(g, i);
        out.chi.push_back(std::move(chi));
    }
    // (i) coproduct
    for (std::size_t i = 0; i < d; ++i) {
        TensorElement lhs = delta_U(G, out.chi[i]);
        TensorElement rhs = tensor_of(alg_unit(n), out.chi[i]);
        for (std::size_t j = 0; j < d; ++j) {
            const TensorElement term = tensor_of(out.chi[j], bm.falg(j, i));
            for (std::size_t k = 0; k < rhs.c.size(); ++k) rhs.c[k] += term.c[k];
        }
        for (std::size_t k = 0; k < lhs.c.size(); ++k)
            out.coproduct_residual = std::max(out.coproduct_residual, std::abs(lhs.c[k] - rhs.c[k]));
    }
    // (ii) counit
    for (std::size_t i = 0; i < d; ++i)
        out.counit_residual = std::max(out.counit_residual, std::abs(counit_U(G, out.chi[i])));
    // (iii) adjoint covariance on group-likes
    for (std::size_t h = 0; h < n; ++h) {
        const GroupAlgElement y = alg_basis(n, static_cast<int>(h));
        const GroupAlgElement yinv = alg_basis(n, G.inv(static_cast<int>(h)));
        for (std::size_t i = 0; i < d; ++i) {
            const GroupAlgElement lhs = product_U(G, yinv, product_U(G, out.chi[i], y));
            GroupAlgElement rhs(n);
            for (std::size_t k = 0; k < d; ++k) {
                const cplx coeff = pairing(y, bm.rfun(i, k));
                if (coeff == cplx{}) continue;
                for (std::size_t x = 0; x < n; ++x) rhs.c[x] += coeff * out.chi[k].c[x];
            }
            for (std::size_t x = 0; x < n; ++x)
                out.adjoint_residual = std::max(out.adjoint_residual, std::abs(lhs.c[x] - rhs.c[x]));
        }
    }
    // differential agreement
    for (std::size_t u = 0; u < n; ++u) {
        const FunElement fu = fun_basis(n, static_cast<int>(u));
        for (std::size_t i = 0; i < d; ++i) {
            const FunElement conv = conv_left(G, out.chi[i], fu);
            for (std::size_t v = 0; v < n; ++v) {
                const std::size_t w = static_cast<std::size_t>(G.op(G.inv(static_cast<int>(v)), static_cast<int>(u)));
                out.differential_residual =
                    std::max(out.differential_residual, std::abs(conv.c[v] - psi.at(w, i)));
            }
        }
    }
    return out;
}

} // namespace bicov
