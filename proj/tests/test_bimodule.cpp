#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bicov/bimodule.hpp"
#include "bicov/calculus.hpp"
#include "bicov/verify.hpp"

using namespace bicov;

namespace {

BicovBimodule make(const GroupData& gd, std::size_t class_index, std::size_t irrep_index) {
    const auto classes = conjugacy_classes(gd.group);
    return build_bimodule(rep_build(gd.group, classes[class_index], gd.irreps[irrep_index]));
}

} // namespace

TEST_CASE("counit bimodule") {
    const GroupData s3 = catalog("S3");
    const BicovBimodule bm = make(s3, 0, 0);
    REQUIRE(bm.dim == 1);
    // F = e, R = 1, Λ = [1]
    CHECK(bm.falg(0, 0).c[GroupTable::e] == cplx{1.0});
    for (std::size_t g = 0; g < s3.group.n; ++g) CHECK(bm.rfun(0, 0).c[g] == cplx{1.0});
    const CMatrix lam = lambda_matrix(bm);
    REQUIRE(lam.rows() == 1);
    CHECK(lam(0, 0) == cplx{1.0});
    // Γδ(ω) = ω⊗1
    const auto co = right_coaction(bm, 0);
    for (std::size_t g = 0; g < s3.group.n; ++g) CHECK(co[0].c[g] == cplx{1.0});
}

TEST_CASE("Z2 class bimodule") {
    const GroupData z2 = catalog("Z2");
    const BicovBimodule bm = make(z2, 1, 0); // C = {g}, trivial character
    REQUIRE(bm.dim == 1);
    // F^g_g = g
    CHECK(bm.falg(0, 0).c[1] == cplx{1.0});
    CHECK(bm.falg(0, 0).c[0] == cplx{});
    // R^g_g = φ_e + φ_g = 1
    CHECK(bm.rfun(0, 0).c[0] == cplx{1.0});
    CHECK(bm.rfun(0, 0).c[1] == cplx{1.0});
    CHECK(lambda_matrix(bm)(0, 0) == cplx{1.0});

    // with the sign character Λ = [χ(g)] = [−1]
    const BicovBimodule bs = make(z2, 1, 1);
    CHECK(lambda_matrix(bs)(0, 0) == cplx{-1.0});
    CHECK(verify_qybe(lambda_matrix(bs)) == 0.0);
    CHECK(universal_r_check(bs) == 0.0);
    CHECK(verify_commutation(bs) == 0.0);
}

TEST_CASE("S3 transposition-class R elements match the closed form") {
    const GroupData s3 = catalog("S3");
    const BicovBimodule bm = make(s3, 1, 0);
    REQUIRE(bm.dim == 3);
    const auto classes = conjugacy_classes(s3.group);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const int l = classes[1].members[i], h = classes[1].members[j];
            for (std::size_t g = 0; g < 6; ++g) {
                const cplx want = s3.group.conj(static_cast<int>(g), h) == l ? cplx{1.0} : cplx{};
                CHECK(bm.rfun(i, j).c[g] == want);
            }
        }
}

TEST_CASE("right multiplication") {
    const GroupData z2 = catalog("Z2");
    const BicovBimodule bm = make(z2, 1, 0);
    // ω.1 = ω
    const GammaElement w1 = right_mult(bm, 0, fun_one(2));
    CHECK(max_abs(w1 - omega(bm, 0)) == 0.0);
    // ω.φ_e = (g∗φ_e).ω = φ_g.ω
    const GammaElement we = right_mult(bm, 0, fun_basis(2, 0));
    CHECK(we.coord[0].c[0] == cplx{});
    CHECK(we.coord[0].c[1] == cplx{1.0});
}

TEST_CASE("right module axiom on all basis pairs") {
    const GroupData s3 = catalog("S3");
    const BicovBimodule bm = make(s3, 1, 2); // transpositions, 2-dim irrep
    for (std::size_t i = 0; i < bm.dim; ++i)
        for (std::size_t a = 0; a < 6; ++a)
            for (std::size_t b = 0; b < 6; ++b) {
                const FunElement fa = fun_basis(6, static_cast<int>(a)), fb = fun_basis(6, static_cast<int>(b));
                const GammaElement lhs = right_mult(bm, right_mult(bm, i, fa), fb);
                const GammaElement rhs = right_mult(bm, i, product_F(s3.group, fa, fb));
                CHECK(max_abs(lhs - rhs) < 1e-14);
            }
}

TEST_CASE("Eq (6) roundtrip: τ_U from the right coaction") {
    const GroupData s3 = catalog("S3");
    for (std::size_t ci = 0; ci < 3; ++ci)
        for (std::size_t mi = 0; mi < 3; ++mi) {
            const BicovBimodule bm = make(s3, ci, mi);
            for (std::size_t i = 0; i < bm.dim; ++i) {
                const auto co = right_coaction(bm, i);
                for (std::size_t g = 0; g < 6; ++g) {
                    const GroupAlgElement sg = alg_basis(6, s3.group.inv(static_cast<int>(g)));
                    for (std::size_t j = 0; j < bm.dim; ++j)
                        CHECK(std::abs(pairing(sg, co[j]) - bm.tau_alg[g](j, i)) < 1e-12);
                }
            }
        }
}

TEST_CASE("lambda of the S3 transposition class with trivial irrep is a permutation matrix") {
    const GroupData s3 = catalog("S3");
    const BicovBimodule bm = make(s3, 1, 0);
    const CMatrix lam = lambda_matrix(bm);
    REQUIRE(lam.rows() == 9);
    for (std::size_t j = 0; j < 9; ++j) {
        int ones = 0;
        for (std::size_t i = 0; i < 9; ++i) {
            const cplx z = lam(i, j);
            CHECK((z == cplx{} || z == cplx{1.0}));
            if (z == cplx{1.0}) ++ones;
        }
        CHECK(ones == 1);
    }
    for (std::size_t i = 0; i < 9; ++i) {
        int ones = 0;
        for (std::size_t j = 0; j < 9; ++j)
            if (lam(i, j) == cplx{1.0}) ++ones;
        CHECK(ones == 1);
    }
    CHECK(verify_qybe(lam) == 0.0);
}

TEST_CASE("qybe residual of elementary matrices") {
    CHECK(verify_qybe(CMatrix::identity(9)) == 0.0);
    // the flip matrix on C²⊗C²
    CMatrix flip(4, 4);
    flip(0, 0) = flip(3, 3) = 1.0;
    flip(1, 2) = flip(2, 1) = 1.0;
    CHECK(verify_qybe(flip) == 0.0);
    CHECK_THROWS_AS(verify_qybe(CMatrix(3, 4)), std::invalid_argument);
    CHECK_THROWS_AS(verify_qybe(CMatrix(3, 3)), std::invalid_argument);
}

TEST_CASE("lambda pairing formula equals the closed form everywhere") {
    for (const char* name : {"Z2", "Z4", "S3", "Q8"}) {
        const GroupData gd = catalog(name);
        const auto classes = conjugacy_classes(gd.group);
        for (std::size_t ci = 0; ci < classes.size(); ++ci)
            for (std::size_t mi = 0; mi < gd.irreps.size(); ++mi) {
                const BicovBimodule bm = make(gd, ci, mi);
                CHECK((lambda_matrix(bm) - lambda_closed_form(bm)).max_abs() <= 1e-12);
            }
    }
}

TEST_CASE("universal R reconstruction on catalog bimodules") {
    for (const char* name : {"Z1", "Z2", "S3", "A4"}) {
        const GroupData gd = catalog(name);
        const auto classes = conjugacy_classes(gd.group);
        for (std::size_t ci = 0; ci < classes.size(); ++ci)
            for (std::size_t mi = 0; mi < gd.irreps.size(); ++mi) CHECK(universal_r_check(make(gd, ci, mi)) <= 1e-9);
    }
}

TEST_CASE("tauF projectors and representative laws") {
    const GroupData s3 = catalog("S3");
    const BicovBimodule bm = make(s3, 1, 2);
    CMatrix sum(bm.dim, bm.dim);
    for (std::size_t g = 0; g < 6; ++g) {
        sum += bm.tau_fun[g];
        // diagonal 0/1 projector
        for (std::size_t i = 0; i < bm.dim; ++i)
            for (std::size_t j = 0; j < bm.dim; ++j) {
                if (i != j) CHECK(bm.tau_fun[g](i, j) == cplx{});
                else CHECK((bm.tau_fun[g](i, i) == cplx{} || bm.tau_fun[g](i, i) == cplx{1.0}));
            }
    }
    CHECK((sum - CMatrix::identity(bm.dim)).max_abs() == 0.0);

    // Δf_ij = Σ_k f_ik ⊗ f_kj and ε(f_ij) = δ_ij
    for (std::size_t i = 0; i < bm.dim; ++i)
        for (std::size_t j = 0; j < bm.dim; ++j) {
            TensorElement lhs = delta_U(s3.group, bm.falg(i, j));
            for (std::size_t k = 0; k < bm.dim; ++k) {
                const TensorElement term = tensor_of(bm.falg(i, k), bm.falg(k, j));
                for (std::size_t m = 0; m < lhs.c.size(); ++m) lhs.c[m] -= term.c[m];
            }
            for (const cplx& z : lhs.c) CHECK(std::abs(z) < 1e-13);
            CHECK(std::abs(counit_U(s3.group, bm.falg(i, j)) - (i == j ? cplx{1.0} : cplx{})) < 1e-13);
        }
}

TEST_CASE("full bimodule and cohomology suite on sample bimodules") {
    std::mt19937 rng(42);
    VerifyReport rep;
    for (const char* name : {"Z3", "S3"}) {
        const GroupData gd = catalog(name);
        const auto classes = conjugacy_classes(gd.group);
        for (std::size_t ci = 0; ci < classes.size(); ++ci)
            for (std::size_t mi = 0; mi < gd.irreps.size(); ++mi) {
                const BicovBimodule bm = make(gd, ci, mi);
                verify_bimodule(bm, std::string(name) + "/C" + std::to_string(ci) + ":" + gd.irreps[mi].label, rep,
                                rng, 1e-9);
            }
    }
    for (const CheckResult& c : rep.checks) {
        CAPTURE(c.name, c.residual);
        CHECK(c.pass);
    }
}
