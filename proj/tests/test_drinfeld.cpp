#include <catch2/catch_amalgamated.hpp>

#include "bicov/drinfeld.hpp"
#include "bicov/verify.hpp"

using namespace bicov;

TEST_CASE("normal-ordered product in the trivial group") {
    const GroupTable g = catalog("Z1").group;
    const DoubleElement x = double_basis(1, 0, 0);
    const DoubleElement p = product_D(g, x, x);
    CHECK(p.at(0, 0) == cplx{1.0});
}

TEST_CASE("commutation rule g·φ_h = φ_{ghg⁻¹}·g") {
    const GroupTable g = catalog("S3").group;
    for (std::size_t x = 0; x < g.n; ++x)
        for (std::size_t h = 0; h < g.n; ++h) {
            const DoubleElement lhs =
                product_D(g, embed_alg(alg_basis(g.n, static_cast<int>(x))), embed_fun(fun_basis(g.n, static_cast<int>(h))));
            DoubleElement rhs = product_D(g, embed_fun(fun_basis(g.n, g.conj(static_cast<int>(x), static_cast<int>(h)))),
                                          embed_alg(alg_basis(g.n, static_cast<int>(x))));
            for (std::size_t k = 0; k < lhs.c.size(); ++k) CHECK(lhs.c[k] == rhs.c[k]);
        }
}

TEST_CASE("general commutation identity on basis pairs") {
    for (const char* name : {"Z2", "Z3", "S3", "D4"}) {
        CAPTURE(name);
        CHECK(eq4_residual_basis(catalog(name).group) <= 1e-12);
    }
}

TEST_CASE("product is associative (exhaustive on basis triples)") {
    for (const char* name : {"Z3", "S3"}) {
        const GroupTable g = catalog(name).group;
        const std::size_t n = g.n;
        double worst = 0.0;
        for (std::size_t i = 0; i < n * n; ++i)
            for (std::size_t j = 0; j < n * n; ++j)
                for (std::size_t k = 0; k < n * n; ++k) {
                    const DoubleElement x = double_basis(n, static_cast<int>(i / n), static_cast<int>(i % n));
                    const DoubleElement y = double_basis(n, static_cast<int>(j / n), static_cast<int>(j % n));
                    const DoubleElement z = double_basis(n, static_cast<int>(k / n), static_cast<int>(k % n));
                    const DoubleElement a = product_D(g, product_D(g, x, y), z);
                    const DoubleElement b = product_D(g, x, product_D(g, y, z));
                    for (std::size_t m = 0; m < a.c.size(); ++m) worst = std::max(worst, std::abs(a.c[m] - b.c[m]));
                }
        CHECK(worst == 0.0);
    }
}

TEST_CASE("double antipode restrictions") {
    const GroupTable g = catalog("S3").group;
    for (std::size_t h = 0; h < g.n; ++h) {
        // S̃ = S on F(G)
        const DoubleElement sf = antipode_D(g, embed_fun(fun_basis(g.n, static_cast<int>(h))));
        const DoubleElement want_f = embed_fun(antipode_F(g, fun_basis(g.n, static_cast<int>(h))));
        for (std::size_t k = 0; k < sf.c.size(); ++k) CHECK(sf.c[k] == want_f.c[k]);
        // S̃ = S⁻¹ = S on CG
        const DoubleElement su = antipode_D(g, embed_alg(alg_basis(g.n, static_cast<int>(h))));
        const DoubleElement want_u = embed_alg(alg_basis(g.n, g.inv(static_cast<int>(h))));
        for (std::size_t k = 0; k < su.c.size(); ++k) CHECK(su.c[k] == want_u.c[k]);
    }
}

// the counit rep is (C = {e}, trivial μ)
static Irrep trivial_irrep_for_test_impl(std::size_t n) {
    Irrep r;
    r.degree = 1;
    r.label = "trivial";
    r.matrices.assign(n, CMatrix::identity(1));
    return r;
}

TEST_CASE("rep_build examples") {
    // counit rep: ρ(φ_h·g) = δ_{h,e}
    {
        const GroupTable g = catalog("S3").group;
        const auto classes = conjugacy_classes(g);
        const DoubleRep rep = rep_build(g, classes[0], trivial_irrep_for_test_impl(g.n));
        REQUIRE(rep.dim == 1);
        for (std::size_t h = 0; h < g.n; ++h)
            for (std::size_t x = 0; x < g.n; ++x)
                CHECK(rep.mat(static_cast<int>(h), static_cast<int>(x))(0, 0) == (h == 0 ? cplx{1.0} : cplx{}));
    }
    // Z2, C = {g}, trivial μ: ρ(φ_g) = 1, ρ(φ_e) = 0, ρ(g) = 1
    {
        const GroupData z2 = catalog("Z2");
        const auto classes = conjugacy_classes(z2.group);
        const DoubleRep rep = rep_build(z2.group, classes[1], z2.irreps[0]);
        REQUIRE(rep.dim == 1);
        CHECK(rep.rho_fun(1)(0, 0) == cplx{1.0});
        CHECK(rep.rho_fun(0)(0, 0) == cplx{});
        CHECK(rep.rho_alg(1)(0, 0) == cplx{1.0});
    }
    // S3, C = transpositions, trivial μ: ρ(g) permutes {v_h} by conjugation
    {
        const GroupData s3 = catalog("S3");
        const auto classes = conjugacy_classes(s3.group);
        const DoubleRep rep = rep_build(s3.group, classes[1], s3.irreps[0]);
        REQUIRE(rep.dim == 3);
        for (std::size_t x = 0; x < s3.group.n; ++x) {
            const CMatrix m = rep.rho_alg(static_cast<int>(x));
            for (std::size_t kpos = 0; kpos < 3; ++kpos) {
                const int k = classes[1].members[kpos];
                const int kc = s3.group.conj(static_cast<int>(x), k);
                for (std::size_t hpos = 0; hpos < 3; ++hpos)
                    CHECK(m(hpos, kpos) ==
                          (classes[1].members[hpos] == kc ? cplx{1.0} : cplx{}));
            }
        }
    }
}

TEST_CASE("characters of double representations") {
    const GroupData s3 = catalog("S3");
    const auto classes = conjugacy_classes(s3.group);
    // counit rep: χ(φ_h·g) = δ_{h,e}
    {
        const DoubleRep rep = rep_build(s3.group, classes[0], s3.irreps[0]);
        const auto chi = character_D(rep);
        for (std::size_t h = 0; h < s3.group.n; ++h)
            for (std::size_t x = 0; x < s3.group.n; ++x)
                CHECK(chi[h * s3.group.n + x] == (h == 0 ? cplx{1.0} : cplx{}));
    }
    // character is invariant under reordering the class basis
    {
        ConjugacyClass rotated = classes[1];
        std::rotate(rotated.members.begin(), rotated.members.begin() + 1, rotated.members.end());
        const DoubleRep a = rep_build(s3.group, classes[1], s3.irreps[2]);
        const DoubleRep b = rep_build(s3.group, rotated, s3.irreps[2]);
        const auto ca = character_D(a), cb = character_D(b);
        for (std::size_t k = 0; k < ca.size(); ++k) CHECK(std::abs(ca[k] - cb[k]) < 1e-12);
    }
    // χ(φ_h·e) counts basis labels with that h (trivial μ)
    {
        const DoubleRep rep = rep_build(s3.group, classes[2], s3.irreps[0]);
        const auto chi = character_D(rep);
        for (std::size_t h = 0; h < s3.group.n; ++h) {
            const bool in_class = rep.class_pos[h] >= 0;
            CHECK(chi[h * s3.group.n + 0] == (in_class ? cplx{1.0} : cplx{}));
        }
    }
}

TEST_CASE("equivalence of double representations") {
    const GroupData s3 = catalog("S3");
    const auto classes = conjugacy_classes(s3.group);
    const DoubleRep t_triv = rep_build(s3.group, classes[1], s3.irreps[0]);
    const DoubleRep t_sign = rep_build(s3.group, classes[1], s3.irreps[1]);
    const DoubleRep c_triv = rep_build(s3.group, classes[2], s3.irreps[0]);
    const DoubleRep c_sign = rep_build(s3.group, classes[2], s3.irreps[1]);

    CHECK(equivalent(t_triv, t_triv));
    // restrictions to Z2 differ: trivial (1,1) vs sign (1,−1)
    CHECK_FALSE(equivalent(t_triv, t_sign));
    // sign restricted to A3 is trivial
    CHECK(equivalent(c_triv, c_sign));
    // different classes are never equivalent
    CHECK_FALSE(equivalent(t_triv, c_triv));
}

TEST_CASE("equivalence criterion agrees with direct character comparison") {
    const GroupData s3 = catalog("S3");
    const auto classes = conjugacy_classes(s3.group);
    std::vector<DoubleRep> reps;
    std::vector<std::vector<cplx>> chars;
    for (const auto& c : classes)
        for (const auto& mu : s3.irreps) {
            reps.push_back(rep_build(s3.group, c, mu));
            chars.push_back(character_D(reps.back()));
        }
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j) {
            double diff = 0.0;
            for (std::size_t k = 0; k < chars[i].size(); ++k)
                diff = std::max(diff, std::abs(chars[i][k] - chars[j][k]));
            CHECK(equivalent(reps[i], reps[j]) == (diff <= 1e-9));
        }
}

TEST_CASE("double rep commutant dimension is reported, not asserted") {
    const GroupData s3 = catalog("S3");
    const auto classes = conjugacy_classes(s3.group);
    // (transpositions, trivial) is irreducible over D(S3)
    CHECK(double_commutant_dimension(rep_build(s3.group, classes[1], s3.irreps[0])) == 1);
}
