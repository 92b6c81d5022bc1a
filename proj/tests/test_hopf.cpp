#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bicov/group.hpp"
#include "bicov/hopf.hpp"

using namespace bicov;

namespace {

FunElement random_fun(std::size_t n, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    FunElement x(n);
    for (cplx& z : x.c) z = cplx(u(rng), u(rng));
    return x;
}

GroupAlgElement random_alg(std::size_t n, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    GroupAlgElement x(n);
    for (cplx& z : x.c) z = cplx(u(rng), u(rng));
    return x;
}

} // namespace

TEST_CASE("coproduct of F(Z2)") {
    const GroupTable z2 = catalog("Z2").group;
    const TensorElement t = delta_F(z2, fun_basis(2, 0)); // Δφ_e = φ_e⊗φ_e + φ_g⊗φ_g
    CHECK(t.at(0, 0) == cplx{1.0});
    CHECK(t.at(1, 1) == cplx{1.0});
    CHECK(t.at(0, 1) == cplx{});
    CHECK(t.at(1, 0) == cplx{});

    // Δ1 = 1⊗1
    const TensorElement one = delta_F(z2, fun_one(2));
    for (const cplx& z : one.c) CHECK(z == cplx{1.0});
}

TEST_CASE("counit axiom on random elements") {
    const GroupTable g = catalog("S3").group;
    std::mt19937 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        const FunElement a = random_fun(g.n, rng);
        const TensorElement t = delta_F(g, a);
        for (std::size_t v = 0; v < g.n; ++v) {
            CHECK(std::abs(t.at(GroupTable::e, static_cast<int>(v)) - a.c[v]) < 1e-14); // (ε⊗id)Δa = a
            CHECK(std::abs(t.at(static_cast<int>(v), GroupTable::e) - a.c[v]) < 1e-14); // (id⊗ε)Δa = a
        }
    }
}

TEST_CASE("antipode axioms") {
    const GroupTable g = catalog("S3").group;
    std::mt19937 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        const FunElement a = random_fun(g.n, rng);
        // S² = id
        const FunElement ssa = antipode_F(g, antipode_F(g, a));
        for (std::size_t k = 0; k < g.n; ++k) CHECK(std::abs(ssa.c[k] - a.c[k]) < 1e-14);
        // m(S⊗id)Δa = ε(a)1
        const TensorElement t = delta_F(g, a);
        for (std::size_t u = 0; u < g.n; ++u)
            CHECK(std::abs(t.at(g.inv(static_cast<int>(u)), static_cast<int>(u)) - counit_F(g, a)) < 1e-14);

        const GroupAlgElement x = random_alg(g.n, rng);
        const GroupAlgElement ssx = antipode_U(g, antipode_U(g, x));
        for (std::size_t k = 0; k < g.n; ++k) CHECK(std::abs(ssx.c[k] - x.c[k]) < 1e-14);
    }
}

TEST_CASE("group algebra product matches the Cayley table") {
    const GroupTable g = catalog("S3").group;
    for (std::size_t a = 0; a < g.n; ++a)
        for (std::size_t b = 0; b < g.n; ++b) {
            const GroupAlgElement p =
                product_U(g, alg_basis(g.n, static_cast<int>(a)), alg_basis(g.n, static_cast<int>(b)));
            for (std::size_t k = 0; k < g.n; ++k)
                CHECK(p.c[k] == (k == static_cast<std::size_t>(g.op(static_cast<int>(a), static_cast<int>(b)))
                                     ? cplx{1.0}
                                     : cplx{}));
        }
}

TEST_CASE("duality pairing") {
    const GroupTable g = catalog("S3").group;
    for (std::size_t a = 0; a < g.n; ++a)
        for (std::size_t b = 0; b < g.n; ++b) {
            const cplx want = a == b ? cplx{1.0} : cplx{};
            CHECK(pairing(alg_basis(g.n, static_cast<int>(a)), fun_basis(g.n, static_cast<int>(b))) == want);
        }
    // ⟨XY, a⟩ = Σ ⟨X, a_(1)⟩⟨Y, a_(2)⟩
    std::mt19937 rng(9);
    for (int trial = 0; trial < 5; ++trial) {
        const GroupAlgElement x = random_alg(g.n, rng), y = random_alg(g.n, rng);
        const FunElement a = random_fun(g.n, rng);
        const TensorElement da = delta_F(g, a);
        cplx sum = 0.0;
        for (std::size_t u = 0; u < g.n; ++u)
            for (std::size_t v = 0; v < g.n; ++v)
                sum += x.c[u] * y.c[v] * da.at(static_cast<int>(u), static_cast<int>(v));
        CHECK(std::abs(pairing(product_U(g, x, y), a) - sum) < 1e-12);
    }
}

TEST_CASE("left convolution") {
    const GroupTable g = catalog("S3").group;
    std::mt19937 rng(13);
    const FunElement a = random_fun(g.n, rng);
    // e∗a = a
    const FunElement ea = conv_left(g, alg_unit(g.n), a);
    for (std::size_t k = 0; k < g.n; ++k) CHECK(std::abs(ea.c[k] - a.c[k]) < 1e-14);
    // g∗φ_e = φ_{g⁻¹}
    for (std::size_t x = 0; x < g.n; ++x) {
        const FunElement r = conv_left(g, alg_basis(g.n, static_cast<int>(x)), fun_basis(g.n, GroupTable::e));
        for (std::size_t k = 0; k < g.n; ++k)
            CHECK(r.c[k] == (static_cast<int>(k) == g.inv(static_cast<int>(x)) ? cplx{1.0} : cplx{}));
    }
    // (e−g)∗φ_e = φ_e − φ_{g⁻¹} by linearity
    const int x = 1;
    GroupAlgElement chi = alg_unit(g.n);
    chi.c[x] -= 1.0;
    const FunElement r = conv_left(g, chi, fun_basis(g.n, GroupTable::e));
    for (std::size_t k = 0; k < g.n; ++k) {
        cplx want = 0.0;
        if (k == GroupTable::e) want += 1.0;
        if (static_cast<int>(k) == g.inv(x)) want -= 1.0;
        CHECK(r.c[k] == want);
    }
}

TEST_CASE("right convolution and mixed associativity") {
    const GroupTable g = catalog("S3").group;
    std::mt19937 rng(17);
    const FunElement a = random_fun(g.n, rng);
    const FunElement ae = conv_right(g, a, alg_unit(g.n));
    for (std::size_t k = 0; k < g.n; ++k) CHECK(std::abs(ae.c[k] - a.c[k]) < 1e-14);
    // φ_e∗g = φ_{g⁻¹} on the other leg
    for (std::size_t x = 0; x < g.n; ++x) {
        const FunElement r = conv_right(g, fun_basis(g.n, GroupTable::e), alg_basis(g.n, static_cast<int>(x)));
        for (std::size_t k = 0; k < g.n; ++k)
            CHECK(r.c[k] == (static_cast<int>(k) == g.inv(static_cast<int>(x)) ? cplx{1.0} : cplx{}));
    }
    // (f∗a)∗f′ = f∗(a∗f′) for all basis pairs
    for (std::size_t f1 = 0; f1 < g.n; ++f1)
        for (std::size_t f2 = 0; f2 < g.n; ++f2)
            for (std::size_t u = 0; u < g.n; ++u) {
                const GroupAlgElement x1 = alg_basis(g.n, static_cast<int>(f1)),
                                      x2 = alg_basis(g.n, static_cast<int>(f2));
                const FunElement fb = fun_basis(g.n, static_cast<int>(u));
                const FunElement lhs = conv_right(g, conv_left(g, x1, fb), x2);
                const FunElement rhs = conv_left(g, x1, conv_right(g, fb, x2));
                for (std::size_t k = 0; k < g.n; ++k) CHECK(lhs.c[k] == rhs.c[k]);
            }
}

TEST_CASE("adjoint action") {
    const GroupTable g = catalog("S3").group;
    std::mt19937 rng(19);
    const FunElement a = random_fun(g.n, rng);
    // Ad_e a = a
    const FunElement ea = ad_action(g, alg_unit(g.n), a);
    for (std::size_t k = 0; k < g.n; ++k) CHECK(std::abs(ea.c[k] - a.c[k]) < 1e-14);
    // Ad_g φ_h = φ_{g h g⁻¹}
    for (std::size_t x = 0; x < g.n; ++x)
        for (std::size_t h = 0; h < g.n; ++h) {
            const FunElement r = ad_action(g, alg_basis(g.n, static_cast<int>(x)), fun_basis(g.n, static_cast<int>(h)));
            for (std::size_t k = 0; k < g.n; ++k)
                CHECK(r.c[k] ==
                      (static_cast<int>(k) == g.conj(static_cast<int>(x), static_cast<int>(h)) ? cplx{1.0} : cplx{}));
        }
    // abelian groups: Ad is the identity
    const GroupTable z4 = catalog("Z4").group;
    for (std::size_t x = 0; x < 4; ++x) {
        const FunElement b = random_fun(4, rng);
        const FunElement r = ad_action(z4, alg_basis(4, static_cast<int>(x)), b);
        for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(r.c[k] - b.c[k]) < 1e-14);
    }
}

TEST_CASE("adjoint action matches the literal Sweedler expansion") {
    const GroupTable g = catalog("S3").group;
    // Σ a_(2) ⟨X, S(a_(1)) a_(3)⟩ with the triple coproduct expanded in full
    for (std::size_t x = 0; x < g.n; ++x)
        for (std::size_t c = 0; c < g.n; ++c) {
            FunElement lit(g.n);
            for (std::size_t u = 0; u < g.n; ++u)
                for (std::size_t v = 0; v < g.n; ++v) {
                    const int w = g.op(g.inv(g.op(static_cast<int>(u), static_cast<int>(v))), static_cast<int>(c));
                    const FunElement su = antipode_F(g, fun_basis(g.n, static_cast<int>(u)));
                    const cplx coeff = pairing(alg_basis(g.n, static_cast<int>(x)), product_F(g, su, fun_basis(g.n, w)));
                    lit.c[v] += coeff;
                }
            const FunElement got = ad_action(g, alg_basis(g.n, static_cast<int>(x)), fun_basis(g.n, static_cast<int>(c)));
            for (std::size_t k = 0; k < g.n; ++k) CHECK(std::abs(lit.c[k] - got.c[k]) < 1e-14);
        }
}

TEST_CASE("Ad composes as a left action: Ad_{gh} = Ad_g ∘ Ad_h") {
    const GroupTable g = catalog("S3").group;
    for (std::size_t x = 0; x < g.n; ++x)
        for (std::size_t y = 0; y < g.n; ++y)
            for (std::size_t h = 0; h < g.n; ++h) {
                const FunElement a = fun_basis(g.n, static_cast<int>(h));
                const FunElement lhs =
                    ad_action(g, alg_basis(g.n, g.op(static_cast<int>(x), static_cast<int>(y))), a);
                const FunElement rhs =
                    ad_action(g, alg_basis(g.n, static_cast<int>(x)), ad_action(g, alg_basis(g.n, static_cast<int>(y)), a));
                for (std::size_t k = 0; k < g.n; ++k) CHECK(lhs.c[k] == rhs.c[k]);
            }
}
